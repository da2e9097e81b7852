use super::{cap, codiagonal, constant_iso, cup, diagonal};
use crate::base::{require, BaseMor, Bimonoidal, Capability, Expr, ObjExpr, StructuralKind};
use crate::error::{Error, Result};
use crate::matc::{Cell2, Grid, Slot};

/// `f + g`, as `copy ; (f ⊕ g) ; fold`.
pub fn add_2cells<C: Bimonoidal>(f: &BaseMor<C>, g: &BaseMor<C>) -> Result<BaseMor<C>> {
    require::<C>(Capability::Biproducts)?;
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::TypeMismatch(format!(
            "cannot add {} -> {} and {} -> {}",
            f.dom(),
            f.cod(),
            g.dom(),
            g.cod()
        )));
    }
    BaseMor::copy(f.dom().clone())?
        .then(&f.oplus(g))?
        .then(&BaseMor::fold(f.cod().clone())?)
}

/// `I → a*⊗a → a⊗a* → I`
pub fn obj_trace<C: Bimonoidal>(a: &Expr<C>) -> Result<BaseMor<C>> {
    require::<C>(Capability::Duals)?;
    require::<C>(Capability::MultSymmetry)?;
    let swap = BaseMor::structural(StructuralKind::SymTimes, vec![ObjExpr::dual(a.clone()), a.clone()])?;
    BaseMor::dual_unit(a.clone())?
        .then(&swap)?
        .then(&BaseMor::dual_counit(a.clone())?)
}

/// The trace of an endomorphism `f` of `1_k`: the 2-cell on `[I]` obtained
/// by capping `codiagonal(k)·f·diagonal(k)` with the cup and cap.
pub fn layer_trace<C: Bimonoidal>(f: &Cell2<C>) -> Result<Cell2<C>> {
    require::<C>(Capability::Biproducts)?;
    let k = f.rows();
    let id = Grid::<Slot>::id1(k);
    let unit_grid = |c: &crate::matc::Cell1<C>| c.grid() == &Grid::<C::Obj>::id1(k);
    if f.cols() != k || !unit_grid(f.dom()) || !unit_grid(f.cod()) {
        return Err(Error::Invalid(format!(
            "layer trace needs an endomorphism of the {k}×{k} identity 1-cell"
        )));
    }
    let (c, d) = (Grid::<Slot>::codiagonal(k), Grid::<Slot>::diagonal(k));
    let pad = constant_iso::<C>(c.hcomp(&d)?, c.hcomp(&id)?.hcomp(&d)?)?;
    let body = Cell2::whisker_right(&Cell2::whisker_left(&codiagonal(k), f)?, &diagonal(k))?;
    cup(k)?
        .vcomp(&pad)?
        .vcomp(&body)?
        .vcomp(&constant_iso(c.hcomp(&id)?.hcomp(&d)?, c.hcomp(&d)?)?)?
        .vcomp(&cap(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{BoolCat, Matrix};
    use crate::matc::Cell1;
    use crate::{GaussRational, GaussVec};

    type V = GaussVec;

    fn scalar_of(f: &BaseMor<V>) -> GaussRational {
        assert_eq!((f.payload().rows(), f.payload().cols()), (1, 1));
        f.payload().get(0, 0)
    }

    fn num(n: i64) -> BaseMor<V> {
        BaseMor::new(ObjExpr::Unit, ObjExpr::Unit, Matrix::scalar(n.into())).unwrap()
    }

    #[test]
    fn layer_trace_counts_layers() {
        for k in 0..4 {
            let t = layer_trace::<V>(&Cell2::id2(&Cell1::id1(k))).unwrap();
            assert_eq!(scalar_of(t.entry(0, 0)), (k as i64).into(), "k = {k}");
        }
    }

    #[test]
    fn layer_trace_sums_the_diagonal() {
        let f = Cell2::<V>::new(
            Cell1::id1(2),
            Cell1::id1(2),
            vec![num(5), BaseMor::identity(ObjExpr::Zero), BaseMor::identity(ObjExpr::Zero), num(-2)],
        )
        .unwrap();
        assert_eq!(scalar_of(layer_trace(&f).unwrap().entry(0, 0)), 3.into());
        let bad = Cell2::<V>::id2(&Cell1::single(ObjExpr::Base(2)));
        assert!(layer_trace(&bad).is_err());
    }

    #[test]
    fn two_plus_three() {
        assert_eq!(scalar_of(&add_2cells(&num(2), &num(3)).unwrap()), 5.into());
        let f = BaseMor::<V>::new(ObjExpr::Base(2), ObjExpr::Base(1), Matrix::from_fn(1, 2, |_, j| (j as i64 + 4).into())).unwrap();
        let zero = BaseMor::new(ObjExpr::Base(2), ObjExpr::Base(1), Matrix::zeros(1, 2)).unwrap();
        assert_eq!(add_2cells(&f, &zero).unwrap(), f);
        assert!(add_2cells(&f, &num(1)).is_err());
        assert!(add_2cells(&BaseMor::<BoolCat>::identity(ObjExpr::Unit), &BaseMor::identity(ObjExpr::Unit)).is_err());
    }

    #[test]
    fn object_trace_is_the_dimension() {
        for d in 0..7 {
            assert_eq!(scalar_of(&obj_trace::<V>(&ObjExpr::Base(d)).unwrap()), (d as i64).into());
        }
        assert_eq!(scalar_of(&obj_trace::<V>(&ObjExpr::Unit).unwrap()), 1.into());
        let (a, b) = (ObjExpr::Base(2), ObjExpr::Base(3));
        let sum = obj_trace::<V>(&ObjExpr::sum(a.clone(), b.clone())).unwrap();
        assert_eq!(sum, add_2cells(&obj_trace(&a).unwrap(), &obj_trace(&b).unwrap()).unwrap());
        // a qubit measured against its dual has four outcomes
        let qq = ObjExpr::prod(ObjExpr::Base(2), ObjExpr::dual(ObjExpr::Base(2)));
        assert_eq!(scalar_of(&obj_trace::<V>(&qq).unwrap()), 4.into());
    }
}
