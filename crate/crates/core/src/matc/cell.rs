use std::fmt;

use super::grid::Grid;
use crate::base::{BaseMor, Bimonoidal, Expr, ObjExpr};
use crate::error::{Error, Result};

/// A 1-cell of Mat(C): an `m×n` matrix of objects of the instance `C`.
pub struct Cell1<C: Bimonoidal> {
    grid: Grid<C::Obj>,
}

impl<C: Bimonoidal> Clone for Cell1<C> {
    fn clone(&self) -> Self {
        Cell1 { grid: self.grid.clone() }
    }
}

impl<C: Bimonoidal> PartialEq for Cell1<C> {
    fn eq(&self, other: &Self) -> bool {
        self.grid == other.grid
    }
}

impl<C: Bimonoidal> fmt::Debug for Cell1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.grid)
    }
}

impl<C: Bimonoidal> fmt::Display for Cell1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.grid)
    }
}

impl<C: Bimonoidal> From<Grid<C::Obj>> for Cell1<C> {
    fn from(grid: Grid<C::Obj>) -> Self {
        Cell1 { grid }
    }
}

impl<C: Bimonoidal> Cell1<C> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Expr<C>>) -> Result<Self> {
        Ok(Cell1 {
            grid: Grid::new(rows, cols, entries)?,
        })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Expr<C>>>) -> Result<Self> {
        Ok(Cell1 {
            grid: Grid::from_rows(cols, rows)?,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Expr<C>) -> Self {
        Cell1 {
            grid: Grid::from_fn(rows, cols, f),
        }
    }

    /// The 1×1 cell `[a]`.
    pub fn single(a: Expr<C>) -> Self {
        Cell1::from_fn(1, 1, |_, _| a.clone())
    }

    pub fn grid(&self) -> &Grid<C::Obj> {
        &self.grid
    }

    pub fn rows(&self) -> usize {
        self.grid.rows()
    }

    pub fn cols(&self) -> usize {
        self.grid.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.grid.shape()
    }

    pub fn get(&self, i: usize, j: usize) -> &Expr<C> {
        self.grid.get(i, j)
    }

    pub fn id1(m: usize) -> Self {
        Grid::id1(m).into()
    }

    pub fn zero1(m: usize, n: usize) -> Self {
        Grid::zero1(m, n).into()
    }

    pub fn diagonal(k: usize) -> Self {
        Grid::diagonal(k).into()
    }

    pub fn codiagonal(k: usize) -> Self {
        Grid::codiagonal(k).into()
    }

    pub fn sigma_boxplus(m: usize, n: usize) -> Self {
        Grid::sigma_boxplus(m, n).into()
    }

    pub fn hcomp(&self, rhs: &Cell1<C>) -> Result<Self> {
        Ok(self.grid.hcomp(&rhs.grid)?.into())
    }

    pub fn boxplus(&self, rhs: &Cell1<C>) -> Self {
        self.grid.boxplus(&rhs.grid).into()
    }
}

/// A 2-cell of Mat(C): an entrywise matrix of base morphisms between two
/// 1-cells of the same shape.
pub struct Cell2<C: Bimonoidal> {
    dom: Cell1<C>,
    cod: Cell1<C>,
    entries: Vec<BaseMor<C>>,
}

impl<C: Bimonoidal> Clone for Cell2<C> {
    fn clone(&self) -> Self {
        Cell2 {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            entries: self.entries.clone(),
        }
    }
}

impl<C: Bimonoidal> PartialEq for Cell2<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.entries == other.entries
    }
}

impl<C: Bimonoidal> fmt::Debug for Cell2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} => {}", self.dom, self.cod)?;
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                writeln!(f, "  ({i},{j}) {:?}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl<C: Bimonoidal> Cell2<C> {
    pub fn new(dom: Cell1<C>, cod: Cell1<C>, entries: Vec<BaseMor<C>>) -> Result<Self> {
        if dom.shape() != cod.shape() || entries.len() != dom.rows() * dom.cols() {
            return Err(Error::ShapeMismatch(format!(
                "2-cell between {:?} and {:?} with {} entries",
                dom.shape(),
                cod.shape(),
                entries.len()
            )));
        }
        for (k, f) in entries.iter().enumerate() {
            let (i, j) = (k / dom.cols(), k % dom.cols());
            if f.dom() != dom.get(i, j) || f.cod() != cod.get(i, j) {
                return Err(Error::TypeMismatch(format!(
                    "entry ({i},{j}) is {} -> {}, expected {} -> {}",
                    f.dom(),
                    f.cod(),
                    dom.get(i, j),
                    cod.get(i, j)
                )));
            }
        }
        Ok(Cell2 { dom, cod, entries })
    }

    /// Assemble from entries whose ends define the boundary 1-cells.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BaseMor<C>>) -> Result<Self> {
        let dom = Cell1::new(rows, cols, entries.iter().map(|f| f.dom().clone()).collect())?;
        let cod = Cell1::new(rows, cols, entries.iter().map(|f| f.cod().clone()).collect())?;
        Ok(Cell2 { dom, cod, entries })
    }

    pub(crate) fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Result<BaseMor<C>>) -> Result<Self> {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect::<Result<Vec<_>>>()?;
        Cell2::from_entries(rows, cols, entries)
    }

    /// The 1×1 2-cell `[f]`.
    pub fn single(f: BaseMor<C>) -> Self {
        Cell2 {
            dom: Cell1::single(f.dom().clone()),
            cod: Cell1::single(f.cod().clone()),
            entries: vec![f],
        }
    }

    pub fn id2(a: &Cell1<C>) -> Self {
        Cell2 {
            dom: a.clone(),
            cod: a.clone(),
            entries: a.grid().entries().iter().map(|e| BaseMor::identity(e.clone())).collect(),
        }
    }

    pub fn dom(&self) -> &Cell1<C> {
        &self.dom
    }

    pub fn cod(&self) -> &Cell1<C> {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.dom.rows()
    }

    pub fn cols(&self) -> usize {
        self.dom.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.dom.shape()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BaseMor<C> {
        &self.entries[i * self.cols() + j]
    }

    pub fn entries(&self) -> &[BaseMor<C>] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(BaseMor::is_identity)
    }

    /// Vertical composition: `self`, then `next`, entrywise.
    pub fn vcomp(&self, next: &Cell2<C>) -> Result<Self> {
        if self.cod != next.dom {
            return Err(Error::TypeMismatch(format!(
                "vertical composite of a 2-cell into {} with one out of {}",
                self.cod, next.dom
            )));
        }
        Ok(Cell2 {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            entries: self
                .entries
                .iter()
                .zip(&next.entries)
                .map(|(f, g)| f.then(g))
                .collect::<Result<_>>()?,
        })
    }

    /// Horizontal composition: entry `(i,k)` is the left-nested `⊕` over `j` of `f_ij ⊗ g_jk`.
    pub fn hcomp(&self, rhs: &Cell2<C>) -> Result<Self> {
        let dom = self.dom.hcomp(&rhs.dom)?;
        let cod = self.cod.hcomp(&rhs.cod)?;
        let inner = self.cols();
        let mut entries = Vec::with_capacity(dom.rows() * dom.cols());
        for i in 0..self.rows() {
            for k in 0..rhs.cols() {
                let e = (0..inner)
                    .map(|j| self.entry(i, j).otimes(rhs.entry(j, k)))
                    .reduce(|acc, f| acc.oplus(&f))
                    .unwrap_or_else(|| BaseMor::identity(ObjExpr::Zero));
                entries.push(e);
            }
        }
        Ok(Cell2 { dom, cod, entries })
    }

    /// Block diagonal sum; the off-diagonal blocks carry identities on `O`.
    pub fn boxplus(&self, rhs: &Cell2<C>) -> Self {
        let dom = self.dom.boxplus(&rhs.dom);
        let cod = self.cod.boxplus(&rhs.cod);
        let (r, c) = self.shape();
        let entries = (0..dom.rows())
            .flat_map(|i| (0..dom.cols()).map(move |j| (i, j)))
            .map(|(i, j)| match (i < r, j < c) {
                (true, true) => self.entry(i, j).clone(),
                (false, false) => rhs.entry(i - r, j - c).clone(),
                _ => BaseMor::identity(ObjExpr::Zero),
            })
            .collect();
        Cell2 { dom, cod, entries }
    }

    /// Componentwise dagger; domain and codomain swap.
    pub fn dagger(&self) -> Result<Self> {
        Ok(Cell2 {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            entries: self.entries.iter().map(BaseMor::dagger).collect::<Result<_>>()?,
        })
    }

    /// `a ◁ self`, i.e. the identity on `a` composed horizontally on the left.
    pub fn whisker_left(a: &Cell1<C>, f: &Cell2<C>) -> Result<Self> {
        Cell2::id2(a).hcomp(f)
    }

    /// `self ▷ a`
    pub fn whisker_right(f: &Cell2<C>, a: &Cell1<C>) -> Result<Self> {
        f.hcomp(&Cell2::id2(a))
    }

    /// Apply `f` to every entry.
    pub fn map_entries(&self, f: impl Fn(&BaseMor<C>) -> Result<BaseMor<C>>) -> Result<Self> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Cell2::from_entries(self.rows(), self.cols(), entries)
    }
}
