//! Structural 2-cells of Mat(C), synthesized entrywise.
//!
//! Each structural 2-cell is described by a source and target grid over
//! symbolic [`Slot`]s, one slot per entry of each argument cell. Synthesis
//! runs on the symbolic grids, where distinct entries never collide, and the
//! result is then specialized to the actual entries and evaluated. The
//! symbolic isomorphisms depend only on shapes and are cached.

use std::cell::RefCell;
use std::collections::HashMap;

use super::cell::{Cell1, Cell2};
use super::grid::{Grid, Slot};
use crate::base::{normalize, synthesize, BaseMor, Bimonoidal, Expr, Iso, ObjExpr};
use crate::error::{Error, Result};

type Key = (ObjExpr<Slot>, ObjExpr<Slot>);

thread_local! {
    static CACHE: RefCell<HashMap<Key, Iso<Slot>>> = RefCell::new(HashMap::new());
}

fn symbolic_iso(src: &ObjExpr<Slot>, dst: &ObjExpr<Slot>) -> Result<Iso<Slot>> {
    let key = (src.clone(), dst.clone());
    if let Some(iso) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(iso);
    }
    let iso = synthesize(src, dst)?;
    CACHE.with(|c| c.borrow_mut().insert(key, iso.clone()));
    Ok(iso)
}

/// A structural isomorphism between two symbolic 1-cells, bound to actual
/// argument cells.
pub struct CellIso<C: Bimonoidal> {
    src: Grid<Slot>,
    dst: Grid<Slot>,
    cells: Vec<Cell1<C>>,
}

impl<C: Bimonoidal> Clone for CellIso<C> {
    fn clone(&self) -> Self {
        CellIso {
            src: self.src.clone(),
            dst: self.dst.clone(),
            cells: self.cells.clone(),
        }
    }
}

impl<C: Bimonoidal> CellIso<C> {
    pub fn new(src: Grid<Slot>, dst: Grid<Slot>, cells: Vec<Cell1<C>>) -> Result<Self> {
        if src.shape() != dst.shape() {
            return Err(Error::ShapeMismatch(format!(
                "structural 2-cell between shapes {:?} and {:?}",
                src.shape(),
                dst.shape()
            )));
        }
        let bound = |s: &Slot| {
            cells
                .get(s.cell)
                .is_some_and(|c| s.row < c.rows() && s.col < c.cols())
        };
        let ok = src
            .entries()
            .iter()
            .chain(dst.entries())
            .all(|e| e.leaves().into_iter().all(bound));
        if !ok {
            return Err(Error::Invalid("symbolic entry refers to a missing argument".into()));
        }
        Ok(CellIso { src, dst, cells })
    }

    fn assign(&self) -> impl Fn(&Slot) -> Expr<C> + '_ {
        move |s: &Slot| self.cells[s.cell].get(s.row, s.col).clone()
    }

    pub fn dom(&self) -> Cell1<C> {
        self.src.subst(&self.assign()).into()
    }

    pub fn cod(&self) -> Cell1<C> {
        self.dst.subst(&self.assign()).into()
    }

    pub fn reversed(&self) -> Self {
        CellIso {
            src: self.dst.clone(),
            dst: self.src.clone(),
            cells: self.cells.clone(),
        }
    }

    /// The isomorphism 2-cell `dom → cod`.
    pub fn forward(&self) -> Result<Cell2<C>> {
        let assign = self.assign();
        let entries = self
            .src
            .entries()
            .iter()
            .zip(self.dst.entries())
            .map(|(s, d)| Ok(BaseMor::from_iso(&symbolic_iso(s, d)?.subst(&assign))))
            .collect::<Result<Vec<_>>>()?;
        Cell2::new(self.dom(), self.cod(), entries)
    }

    /// The synthesized inverse `cod → dom`.
    pub fn backward(&self) -> Result<Cell2<C>> {
        self.reversed().forward()
    }
}

fn tag<C: Bimonoidal>(cell: usize, a: &Cell1<C>) -> Grid<Slot> {
    Grid::<Slot>::tagged(cell, a.rows(), a.cols())
}

/// `(A·B)·C ≅ A·(B·C)`
pub fn associator_iso<C: Bimonoidal>(a: &Cell1<C>, b: &Cell1<C>, c: &Cell1<C>) -> Result<CellIso<C>> {
    let (ta, tb, tc) = (tag(0, a), tag(1, b), tag(2, c));
    let src = ta.hcomp(&tb)?.hcomp(&tc)?;
    let dst = ta.hcomp(&tb.hcomp(&tc)?)?;
    CellIso::new(src, dst, vec![a.clone(), b.clone(), c.clone()])
}

pub fn associator<C: Bimonoidal>(a: &Cell1<C>, b: &Cell1<C>, c: &Cell1<C>) -> Result<Cell2<C>> {
    associator_iso(a, b, c)?.forward()
}

/// `1_m·A ≅ A`
pub fn left_unitor_iso<C: Bimonoidal>(a: &Cell1<C>) -> Result<CellIso<C>> {
    let ta = tag(0, a);
    CellIso::new(Grid::id1(a.rows()).hcomp(&ta)?, ta, vec![a.clone()])
}

pub fn left_unitor<C: Bimonoidal>(a: &Cell1<C>) -> Result<Cell2<C>> {
    left_unitor_iso(a)?.forward()
}

/// `A·1_n ≅ A`
pub fn right_unitor_iso<C: Bimonoidal>(a: &Cell1<C>) -> Result<CellIso<C>> {
    let ta = tag(0, a);
    CellIso::new(ta.hcomp(&Grid::id1(a.cols()))?, ta, vec![a.clone()])
}

pub fn right_unitor<C: Bimonoidal>(a: &Cell1<C>) -> Result<Cell2<C>> {
    right_unitor_iso(a)?.forward()
}

/// `σ(m,m')·(A⊞B) ≅ (B⊞A)·σ(n,n')` for `A: m×n`, `B: m'×n'`.
pub fn sigma_naturalizer_iso<C: Bimonoidal>(a: &Cell1<C>, b: &Cell1<C>) -> Result<CellIso<C>> {
    let (ta, tb) = (tag(0, a), tag(1, b));
    let src = Grid::sigma_boxplus(a.rows(), b.rows()).hcomp(&ta.boxplus(&tb))?;
    let dst = tb.boxplus(&ta).hcomp(&Grid::sigma_boxplus(a.cols(), b.cols()))?;
    CellIso::new(src, dst, vec![a.clone(), b.clone()])
}

pub fn sigma_naturalizer<C: Bimonoidal>(a: &Cell1<C>, b: &Cell1<C>) -> Result<Cell2<C>> {
    sigma_naturalizer_iso(a, b)?.forward()
}

/// `σ(n,m)·σ(m,n) ≅ 1_{m+n}`
pub fn syllepsis_iso<C: Bimonoidal>(m: usize, n: usize) -> Result<CellIso<C>> {
    let src = Grid::sigma_boxplus(n, m).hcomp(&Grid::sigma_boxplus(m, n))?;
    CellIso::new(src, Grid::id1(m + n), vec![])
}

pub fn syllepsis<C: Bimonoidal>(m: usize, n: usize) -> Result<Cell2<C>> {
    syllepsis_iso(m, n)?.forward()
}

/// `[I I]·([a]⊞[b])·[I;I] ≅ [a⊕b]`
pub fn microcosm_oplus_iso<C: Bimonoidal>(a: &Expr<C>, b: &Expr<C>) -> Result<CellIso<C>> {
    let (ca, cb) = (Cell1::single(a.clone()), Cell1::single(b.clone()));
    let (ta, tb) = (tag(0, &ca), tag(1, &cb));
    let src = Grid::codiagonal(2).hcomp(&ta.boxplus(&tb))?.hcomp(&Grid::diagonal(2))?;
    let dst = Grid::from_fn(1, 1, |_, _| ObjExpr::sum(ta.get(0, 0).clone(), tb.get(0, 0).clone()));
    CellIso::new(src, dst, vec![ca, cb])
}

/// The sum `a⊕b` inside Hom(1,1), with its witnessing 2-cell.
pub fn microcosm_oplus<C: Bimonoidal>(a: &Expr<C>, b: &Expr<C>) -> Result<(Expr<C>, Cell2<C>)> {
    Ok((ObjExpr::sum(a.clone(), b.clone()), microcosm_oplus_iso(a, b)?.forward()?))
}

/// The product `a⊗b` inside Hom(1,1); horizontal composition of 1×1 cells is
/// already `[a⊗b]` on the nose, so the witness is an identity.
pub fn microcosm_otimes<C: Bimonoidal>(a: &Expr<C>, b: &Expr<C>) -> Result<(Expr<C>, Cell2<C>)> {
    let c = Cell1::single(a.clone()).hcomp(&Cell1::single(b.clone()))?;
    Ok((ObjExpr::prod(a.clone(), b.clone()), Cell2::id2(&c)))
}

/// Entrywise normal-form witness `A → A'`.
pub fn normalize_cell<C: Bimonoidal>(a: &Cell1<C>) -> Result<Cell2<C>> {
    Cell2::from_fn(a.rows(), a.cols(), |i, j| Ok(BaseMor::from_iso(&normalize(a.get(i, j)).1)))
}

/// Whether `f` followed by its synthesized inverse, and the other way round,
/// are identities.
pub fn is_invertible_pair<C: Bimonoidal>(f: &Cell2<C>, g: &Cell2<C>) -> Result<bool> {
    Ok(f.vcomp(g)?.is_identity() && g.vcomp(f)?.is_identity())
}
