use std::collections::HashMap;

use super::axioms::Axiom;
use super::term::{PathTerm, ScalarExpr};
use crate::base::{Bimonoidal, Expr, ObjExpr};
use crate::error::{Error, Result};
use crate::matc::{Cell1, Cell2, CellIso, Grid, Slot};

fn lift_scalar(s: &ScalarExpr, vars: &[String]) -> Result<ObjExpr<Slot>> {
    Ok(match s {
        ScalarExpr::Var(v) => {
            let cell = vars
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::UnassignedScalar(v.clone()))?;
            ObjExpr::Base(Slot { cell, row: 0, col: 0 })
        }
        ScalarExpr::Lit(n) => ObjExpr::sum_all((0..*n).map(|_| ObjExpr::Unit)),
        ScalarExpr::Add(a, b) => ObjExpr::sum(lift_scalar(a, vars)?, lift_scalar(b, vars)?),
        ScalarExpr::Mul(a, b) => ObjExpr::prod(lift_scalar(a, vars)?, lift_scalar(b, vars)?),
    })
}

/// The categorified matrix of `t` with variable `vars[i]` standing for the
/// symbol `Slot { cell: i, row: 0, col: 0 }`.
pub fn lift_symbolic(t: &PathTerm, vars: &[String]) -> Result<Grid<Slot>> {
    Ok(match t {
        PathTerm::Id(k) => Grid::id1(*k),
        PathTerm::Mul => Grid::codiagonal(2),
        PathTerm::Unit => Grid::zero1(1, 0),
        PathTerm::Comul => Grid::diagonal(2),
        PathTerm::Counit => Grid::zero1(0, 1),
        PathTerm::Swap => Grid::sigma_boxplus(1, 1),
        PathTerm::Scalar(s) => {
            let e = lift_scalar(s, vars)?;
            Grid::from_fn(1, 1, |_, _| e.clone())
        }
        PathTerm::Seq(a, b) => lift_symbolic(b, vars)?.hcomp(&lift_symbolic(a, vars)?)?,
        PathTerm::Par(a, b) => lift_symbolic(a, vars)?.boxplus(&lift_symbolic(b, vars)?),
    })
}

fn argument_cells<C: Bimonoidal>(vars: &[String], assignment: &HashMap<String, Expr<C>>) -> Result<Vec<Cell1<C>>> {
    vars.iter()
        .map(|v| {
            assignment
                .get(v)
                .map(|e| Cell1::single(e.clone()))
                .ok_or_else(|| Error::UnassignedScalar(v.clone()))
        })
        .collect()
}

/// Lift a path term into Mat(C): sequencing becomes horizontal composition
/// and stacking becomes `⊞`. A numeral `n` lifts to `I ⊕ ... ⊕ I`.
pub fn lift<C: Bimonoidal>(t: &PathTerm, assignment: &HashMap<String, Expr<C>>) -> Result<Cell1<C>> {
    let vars = t.vars();
    let cells = argument_cells::<C>(&vars, assignment)?;
    Ok(lift_symbolic(t, &vars)?
        .subst(&|s: &Slot| cells[s.cell].get(0, 0).clone())
        .into())
}

/// The structural isomorphism `lift(lhs) ≅ lift(rhs)` for an axiom. Composite
/// scalars on the right lift to `⊕`, `⊗`, `I` and `O` of the assigned objects.
pub fn coning_iso<C: Bimonoidal>(ax: &Axiom, assignment: &HashMap<String, Expr<C>>) -> Result<CellIso<C>> {
    let cells = argument_cells(&ax.vars, assignment)?;
    CellIso::new(
        lift_symbolic(&ax.lhs, &ax.vars)?,
        lift_symbolic(&ax.rhs, &ax.vars)?,
        cells,
    )
}

pub fn coning_cell<C: Bimonoidal>(ax: &Axiom, assignment: &HashMap<String, Expr<C>>) -> Result<Cell2<C>> {
    coning_iso(ax, assignment)?.forward()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{dim_of, Matrix};
    use crate::matc::is_invertible_pair;
    use crate::pathcalc::{axiom, axiom_list, eval_rig, parse, Nat};
    use crate::quantum::is_unitary2;
    use crate::structures::pull_string;
    use crate::GaussVec;

    type V = GaussVec;

    fn dims(pairs: &[(&str, usize)]) -> HashMap<String, Expr<V>> {
        pairs.iter().map(|(k, d)| (k.to_string(), ObjExpr::Base(*d))).collect()
    }

    #[test]
    fn generators() {
        let none = HashMap::new();
        assert_eq!(lift::<V>(&parse("mul").unwrap(), &none).unwrap().to_string(), "[[I, I]]");
        let u = lift::<V>(&parse("unit").unwrap(), &none).unwrap();
        assert_eq!(u.shape(), (1, 0));
        assert_eq!(lift::<V>(&parse("swap").unwrap(), &none).unwrap(), Cell1::sigma_boxplus(1, 1));
        let s = lift::<V>(&parse("scalar(r) . scalar(2)").unwrap(), &dims(&[("r", 3)])).unwrap();
        assert_eq!(s.to_string(), "[[#3 (x) (I (+) I)]]");
        assert!(lift::<V>(&parse("scalar(q)").unwrap(), &none).is_err());
    }

    #[test]
    fn decategorifies_to_the_rig_matrix() {
        let t = parse("(mul | scalar(r)) . (id(1) | swap) . (comul | scalar(s)) . (scalar(2) | id(1))").unwrap();
        let a = dims(&[("r", 2), ("s", 3)]);
        let cell = lift::<V>(&t, &a).unwrap();
        let mut nat = HashMap::new();
        nat.insert("r".to_string(), 2u32.into());
        nat.insert("s".to_string(), 3u32.into());
        let m = eval_rig::<Nat>(&t, &nat).unwrap();
        assert_eq!(cell.shape(), m.shape());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                assert_eq!(num_bigint::BigUint::from(dim_of(cell.get(i, j))), *m.get(i, j));
            }
        }
    }

    #[test]
    fn every_coning_cell_is_invertible_and_unitary() {
        let a = dims(&[("r", 2), ("s", 3)]);
        for ax in axiom_list() {
            let iso = coning_iso::<V>(&ax, &a).unwrap();
            let (f, g) = (iso.forward().unwrap(), iso.backward().unwrap());
            assert!(is_invertible_pair(&f, &g).unwrap(), "{}", ax.name);
            assert!(is_unitary2(&f).unwrap(), "{}", ax.name);
        }
    }

    #[test]
    fn named_coning_cells() {
        let a = dims(&[("r", 2), ("s", 3)]);
        let r_unit = coning_cell::<V>(&axiom("r-unit").unwrap(), &a).unwrap();
        assert!(r_unit.entries().iter().all(|f| f.payload().is_identity()));
        assert_eq!(r_unit.dom().to_string(), "[[I (x) I (+) I (x) O]]");

        let pull = coning_cell::<V>(&axiom("mul-hom").unwrap(), &a).unwrap();
        assert_eq!(pull, pull_string(&ObjExpr::Base(2), 2).unwrap());

        let add = coning_cell::<V>(&axiom("add").unwrap(), &a).unwrap();
        let m = add.entry(0, 0).payload();
        assert_eq!((m.rows(), m.cols()), (5, 5));
        assert_eq!(m, &Matrix::identity(5));
    }
}
