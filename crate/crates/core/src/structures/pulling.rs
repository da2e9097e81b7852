use super::codiagonal;
use crate::base::{Bimonoidal, Expr};
use crate::error::Result;
use crate::matc::{Cell1, Cell2, CellIso, Grid, Slot};

/// `[a]·codiagonal(k) ≅ codiagonal(k)·([a] ⊞ ... ⊞ [a])`, every copy of `a`
/// carrying the same tag.
pub fn pull_string_iso<C: Bimonoidal>(a: &Expr<C>, k: usize) -> Result<CellIso<C>> {
    let ta = Grid::<Slot>::tagged(0, 1, 1);
    let c = Grid::<Slot>::codiagonal(k);
    let copies = (0..k).fold(Grid::<Slot>::zero1(0, 0), |acc, _| acc.boxplus(&ta));
    CellIso::new(ta.hcomp(&c)?, c.hcomp(&copies)?, vec![Cell1::single(a.clone())])
}

/// Pull the string `[a]` onto `k` surfaces.
pub fn pull_string<C: Bimonoidal>(a: &Expr<C>, k: usize) -> Result<Cell2<C>> {
    pull_string_iso(a, k)?.forward()
}

/// `[f] ▷ codiagonal(k)` and `codiagonal(k) ◁ (⊞^k [f])`, the two sides of the
/// naturality square around [`pull_string`].
pub fn pulled_pair<C: Bimonoidal>(f: &Cell2<C>, k: usize) -> Result<(Cell2<C>, Cell2<C>)> {
    let before = Cell2::whisker_right(f, &codiagonal(k))?;
    let copies = (0..k).fold(Cell2::id2(&Cell1::zero1(0, 0)), |acc, _| acc.boxplus(f));
    Ok((before, Cell2::whisker_left(&codiagonal(k), &copies)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{BaseMor, ObjExpr};
    use crate::instances::Matrix;
    use crate::matc::{is_invertible_pair, left_unitor_iso, right_unitor_iso};
    use crate::GaussVec;

    type V = GaussVec;

    #[test]
    fn two_surfaces() {
        let p = pull_string::<V>(&ObjExpr::Base(2), 2).unwrap();
        assert_eq!(p.dom().to_string(), "[[#2 (x) I, #2 (x) I]]");
        assert_eq!(p.cod().to_string(), "[[I (x) #2 (+) I (x) O, I (x) O (+) I (x) #2]]");
    }

    #[test]
    fn pulling_equations() {
        for k in 0..4 {
            let iso = pull_string_iso::<V>(&ObjExpr::Base(3), k).unwrap();
            assert!(is_invertible_pair(&iso.forward().unwrap(), &iso.backward().unwrap()).unwrap());
        }
    }

    #[test]
    fn one_surface_is_the_unitors() {
        let a = Cell1::<V>::single(ObjExpr::Base(2));
        let via = right_unitor_iso(&a)
            .unwrap()
            .forward()
            .unwrap()
            .vcomp(&left_unitor_iso(&a).unwrap().backward().unwrap())
            .unwrap();
        assert_eq!(pull_string::<V>(&ObjExpr::Base(2), 1).unwrap(), via);
    }

    #[test]
    fn pulling_is_natural() {
        let m = Matrix::from_fn(3, 2, |i, j| (1 + i as i64 * 2 - j as i64).into());
        let f = Cell2::single(BaseMor::<V>::new(ObjExpr::Base(2), ObjExpr::Base(3), m).unwrap());
        for k in 0..4 {
            let (before, after) = pulled_pair(&f, k).unwrap();
            let lhs = before.vcomp(&pull_string(&ObjExpr::Base(3), k).unwrap()).unwrap();
            let rhs = pull_string(&ObjExpr::Base(2), k).unwrap().vcomp(&after).unwrap();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}
