//! Structure derived from biproducts and duals in the base: caps and cups,
//! adjunctions and their snake equations, the classical bit, pulling, traces.

mod frobenius;
mod pulling;
mod trace;

pub use frobenius::{frobenius_suite, Check, FrobeniusReport};
pub use pulling::{pull_string, pull_string_iso, pulled_pair};
pub use trace::{add_2cells, layer_trace, obj_trace};

use crate::base::{require, synth_iso, BaseMor, Bimonoidal, Capability, Expr, ObjExpr};
use crate::error::Result;
use crate::matc::{associator_iso, left_unitor_iso, right_unitor_iso, Cell1, Cell2, CellIso, Grid, Slot};

pub fn diagonal<C: Bimonoidal>(k: usize) -> Cell1<C> {
    Cell1::diagonal(k)
}

pub fn codiagonal<C: Bimonoidal>(k: usize) -> Cell1<C> {
    Cell1::codiagonal(k)
}

/// `a ⊕ ... ⊕ a → a` (left-nested, `n` summands); the empty sum maps by zero.
pub fn fold_n<C: Bimonoidal>(a: &Expr<C>, n: usize) -> Result<BaseMor<C>> {
    match n {
        0 => BaseMor::zero(ObjExpr::Zero, a.clone()),
        1 => Ok(BaseMor::identity(a.clone())),
        _ => fold_n(a, n - 1)?
            .oplus(&BaseMor::identity(a.clone()))
            .then(&BaseMor::fold(a.clone())?),
    }
}

/// `a → a ⊕ ... ⊕ a` (left-nested, `n` summands).
pub fn copy_n<C: Bimonoidal>(a: &Expr<C>, n: usize) -> Result<BaseMor<C>> {
    match n {
        0 => BaseMor::zero(a.clone(), ObjExpr::Zero),
        1 => Ok(BaseMor::identity(a.clone())),
        _ => BaseMor::copy(a.clone())?.then(&copy_n(a, n - 1)?.oplus(&BaseMor::identity(a.clone()))),
    }
}

fn n_units<C: Bimonoidal>(n: usize) -> Expr<C> {
    ObjExpr::sum_all((0..n).map(|_| ObjExpr::Unit))
}

/// The cap `codiagonal(n)·diagonal(n) → [I]`, through the biproduct fold.
pub fn cap<C: Bimonoidal>(n: usize) -> Result<Cell2<C>> {
    require::<C>(Capability::Biproducts)?;
    let x = codiagonal::<C>(n).hcomp(&diagonal(n))?;
    let strip = synth_iso::<C>(x.get(0, 0), &n_units::<C>(n))?;
    Ok(Cell2::single(strip.then(&fold_n(&ObjExpr::Unit, n)?)?))
}

/// The cup `[I] → codiagonal(n)·diagonal(n)`.
pub fn cup<C: Bimonoidal>(n: usize) -> Result<Cell2<C>> {
    require::<C>(Capability::Biproducts)?;
    let x = codiagonal::<C>(n).hcomp(&diagonal(n))?;
    let dress = synth_iso::<C>(&n_units::<C>(n), x.get(0, 0))?;
    Ok(Cell2::single(copy_n(&ObjExpr::Unit, n)?.then(&dress)?))
}

/// `diagonal(n)·codiagonal(n) → 1_n`: unitors on the diagonal, zero maps elsewhere.
pub fn zero_cap<C: Bimonoidal>(n: usize) -> Result<Cell2<C>> {
    require::<C>(Capability::Biproducts)?;
    let x = diagonal::<C>(n).hcomp(&codiagonal(n))?;
    Cell2::new(
        x.clone(),
        Cell1::id1(n),
        (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    synth_iso::<C>(x.get(k / n, k % n), &ObjExpr::Unit)
                } else {
                    BaseMor::zero(x.get(k / n, k % n).clone(), ObjExpr::Zero)
                }
            })
            .collect::<Result<_>>()?,
    )
}

/// `1_n → diagonal(n)·codiagonal(n)`
pub fn zero_cup<C: Bimonoidal>(n: usize) -> Result<Cell2<C>> {
    require::<C>(Capability::Biproducts)?;
    let x = diagonal::<C>(n).hcomp(&codiagonal(n))?;
    Cell2::new(
        Cell1::id1(n),
        x.clone(),
        (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    synth_iso::<C>(&ObjExpr::Unit, x.get(k / n, k % n))
                } else {
                    BaseMor::zero(ObjExpr::Zero, x.get(k / n, k % n).clone())
                }
            })
            .collect::<Result<_>>()?,
    )
}

/// A structural 2-cell between two constant grids.
pub(crate) fn constant_iso<C: Bimonoidal>(src: Grid<Slot>, dst: Grid<Slot>) -> Result<Cell2<C>> {
    CellIso::<C>::new(src, dst, vec![])?.forward()
}

/// Entry `(j,i)` is `dual(A_ij)`.
pub fn dual_transpose<C: Bimonoidal>(a: &Cell1<C>) -> Result<Cell1<C>> {
    require::<C>(Capability::Duals)?;
    Ok(a.grid().transpose_with(|e| ObjExpr::dual(e.clone())).into())
}

/// An adjunction `left ⊣ right` in Mat(C), with
/// `unit: 1 → right·left` and `counit: left·right → 1`.
pub struct Adjunction<C: Bimonoidal> {
    pub left: Cell1<C>,
    pub right: Cell1<C>,
    pub counit: Cell2<C>,
    pub unit: Cell2<C>,
}

impl<C: Bimonoidal> Adjunction<C> {
    /// `L → L·1 → L·(R·L) → (L·R)·L → 1·L → L`
    pub fn snake_left(&self) -> Result<Cell2<C>> {
        let (l, r) = (&self.left, &self.right);
        right_unitor_iso(l)?
            .backward()?
            .vcomp(&Cell2::whisker_left(l, &self.unit)?)?
            .vcomp(&associator_iso(l, r, l)?.backward()?)?
            .vcomp(&Cell2::whisker_right(&self.counit, l)?)?
            .vcomp(&left_unitor_iso(l)?.forward()?)
    }

    /// `R → 1·R → (R·L)·R → R·(L·R) → R·1 → R`
    pub fn snake_right(&self) -> Result<Cell2<C>> {
        let (l, r) = (&self.left, &self.right);
        left_unitor_iso(r)?
            .backward()?
            .vcomp(&Cell2::whisker_right(&self.unit, r)?)?
            .vcomp(&associator_iso(r, l, r)?.forward()?)?
            .vcomp(&Cell2::whisker_left(r, &self.counit)?)?
            .vcomp(&right_unitor_iso(r)?.forward()?)
    }

    /// Whether both snake composites are identities.
    pub fn check(&self) -> Result<(bool, bool)> {
        Ok((self.snake_left()?.is_identity(), self.snake_right()?.is_identity()))
    }
}

/// `diagonal(n) ⊣ codiagonal(n)` with unit the cup and counit the zero cap.
pub fn diagonal_adjunction<C: Bimonoidal>(n: usize) -> Result<Adjunction<C>> {
    Ok(Adjunction {
        left: diagonal(n),
        right: codiagonal(n),
        counit: zero_cap(n)?,
        unit: cup(n)?,
    })
}

/// `codiagonal(n) ⊣ diagonal(n)` with unit the zero cup and counit the cap.
pub fn codiagonal_adjunction<C: Bimonoidal>(n: usize) -> Result<Adjunction<C>> {
    Ok(Adjunction {
        left: codiagonal(n),
        right: diagonal(n),
        counit: cap(n)?,
        unit: zero_cup(n)?,
    })
}

/// `A ⊣ dual_transpose(A)` built from the duals of the entries.
///
/// The counit's diagonal entry folds one `ε` per summand, left-nested in
/// ascending order; the unit copies `I` and applies one `η` per summand.
pub fn adjunction<C: Bimonoidal>(a: &Cell1<C>) -> Result<Adjunction<C>> {
    require::<C>(Capability::Duals)?;
    require::<C>(Capability::Biproducts)?;
    let (m, n) = a.shape();
    let at = dual_transpose(a)?;
    let lr = a.hcomp(&at)?;
    let rl = at.hcomp(a)?;

    let counit_entry = |i: usize, k: usize| -> Result<BaseMor<C>> {
        let e = lr.get(i, k).clone();
        if i != k {
            return BaseMor::zero(e, ObjExpr::Zero);
        }
        let epsilons = (0..n)
            .map(|j| BaseMor::dual_counit(a.get(i, j).clone()))
            .collect::<Result<Vec<_>>>()?;
        match epsilons.into_iter().reduce(|acc, f| acc.oplus(&f)) {
            Some(sum) => sum.then(&fold_n(&ObjExpr::Unit, n)?),
            None => BaseMor::zero(e, ObjExpr::Unit),
        }
    };
    let unit_entry = |j: usize, l: usize| -> Result<BaseMor<C>> {
        let e = rl.get(j, l).clone();
        if j != l {
            return BaseMor::zero(ObjExpr::Zero, e);
        }
        let etas = (0..m)
            .map(|i| BaseMor::dual_unit(a.get(i, j).clone()))
            .collect::<Result<Vec<_>>>()?;
        match etas.into_iter().reduce(|acc, f| acc.oplus(&f)) {
            Some(sum) => copy_n(&ObjExpr::Unit, m)?.then(&sum),
            None => BaseMor::zero(ObjExpr::Unit, e),
        }
    };
    let counit = Cell2::new(
        lr.clone(),
        Cell1::id1(m),
        (0..m * m).map(|k| counit_entry(k / m, k % m)).collect::<Result<_>>()?,
    )?;
    let unit = Cell2::new(
        Cell1::id1(n),
        rl.clone(),
        (0..n * n).map(|k| unit_entry(k / n, k % n)).collect::<Result<_>>()?,
    )?;
    Ok(Adjunction {
        left: a.clone(),
        right: at,
        counit,
        unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{BoolCat, Matrix};
    use crate::{GaussRational, GaussVec};

    type V = GaussVec;

    fn scalar(c: &Cell2<V>) -> GaussRational {
        let m = c.entry(0, 0).payload();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        m.get(0, 0)
    }

    #[test]
    fn cap_is_the_fold() {
        let c = cap::<V>(2).unwrap();
        let expected: Matrix<GaussRational> = Matrix::from_fn(1, 2, |_, _| 1.into());
        assert_eq!(c.entry(0, 0).payload(), &expected);
        assert_eq!(c.dom().get(0, 0).to_string(), "I (x) I (+) I (x) I");
    }

    #[test]
    fn cup_then_cap_is_two() {
        let s = cup::<V>(2).unwrap().vcomp(&cap(2).unwrap()).unwrap();
        assert_eq!(scalar(&s), 2.into());
    }

    #[test]
    fn zero_cap_uses_zero_maps() {
        let z = zero_cap::<V>(2).unwrap();
        assert!(z.entry(0, 1).payload().is_zero());
        assert_eq!(z.entry(0, 1).payload().rows(), 0);
        assert!(z.entry(0, 0).payload().is_identity());
    }

    #[test]
    fn ambidextrous_zig_zags() {
        for n in 0..4 {
            assert_eq!(diagonal_adjunction::<V>(n).unwrap().check().unwrap(), (true, true), "n = {n}");
            assert_eq!(codiagonal_adjunction::<V>(n).unwrap().check().unwrap(), (true, true), "n = {n}");
        }
    }

    #[test]
    fn capabilities_are_enforced() {
        assert!(cap::<BoolCat>(2).is_err());
        assert!(dual_transpose::<BoolCat>(&Cell1::id1(1)).is_err());
    }

    #[test]
    fn dual_transpose_layout() {
        let a: Cell1<V> = Cell1::from_fn(2, 2, |i, j| ObjExpr::Base(1 + 2 * i + j));
        assert_eq!(
            dual_transpose(&a).unwrap().to_string(),
            "[[dual(#1), dual(#3)], [dual(#2), dual(#4)]]"
        );
    }

    #[test]
    fn counit_of_a_singleton_is_the_pairing() {
        let adj = adjunction::<V>(&Cell1::single(ObjExpr::Base(3))).unwrap();
        let m = adj.counit.entry(0, 0).payload();
        assert_eq!((m.rows(), m.cols()), (1, 9));
        assert_eq!(m.nnz(), 3);
        assert_eq!(adj.check().unwrap(), (true, true));
    }

    #[test]
    fn snakes_for_a_small_matrix() {
        let a: Cell1<V> = Cell1::from_fn(2, 3, |i, j| match (i + j) % 3 {
            0 => ObjExpr::Base(2),
            1 => ObjExpr::Zero,
            _ => ObjExpr::Base(1),
        });
        assert_eq!(adjunction(&a).unwrap().check().unwrap(), (true, true));
        let unit = adjunction::<V>(&Cell1::id1(2)).unwrap();
        assert_eq!(unit.check().unwrap(), (true, true));
    }

    #[test]
    fn n_fold_maps() {
        let f = fold_n::<V>(&ObjExpr::Base(2), 3).unwrap();
        assert_eq!((f.payload().rows(), f.payload().cols()), (2, 6));
        let g = copy_n::<V>(&ObjExpr::Base(2), 3).unwrap();
        let twice = g.then(&f).unwrap();
        assert_eq!(twice.payload(), &Matrix::identity(2).scale(&3.into()));
    }
}
