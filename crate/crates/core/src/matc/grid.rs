use std::fmt;

use crate::base::ObjExpr;
use crate::error::{Error, Result};

/// A row-major matrix of object expressions over leaves `L`.
///
/// This is the shape-level data of a 1-cell, independent of any instance, so
/// the same routines serve concrete cells and cells of symbolic tags.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid<L> {
    rows: usize,
    cols: usize,
    entries: Vec<ObjExpr<L>>,
}

/// A symbolic entry: position `(row, col)` of the `cell`-th argument.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Slot {
    pub cell: usize,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}[{},{}]", self.cell, self.row, self.col)
    }
}

impl<L: Clone> Grid<L> {
    pub fn new(rows: usize, cols: usize, entries: Vec<ObjExpr<L>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Grid { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> ObjExpr<L>) -> Self {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Grid { rows, cols, entries }
    }

    /// Build from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<ObjExpr<L>>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Grid::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &ObjExpr<L> {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[ObjExpr<L>] {
        &self.entries
    }

    /// `I` on the diagonal and `O` elsewhere.
    pub fn id1(m: usize) -> Self {
        Grid::from_fn(m, m, |i, j| if i == j { ObjExpr::Unit } else { ObjExpr::Zero })
    }

    pub fn zero1(m: usize, n: usize) -> Self {
        Grid::from_fn(m, n, |_, _| ObjExpr::Zero)
    }

    /// `k×1`, all `I`.
    pub fn diagonal(k: usize) -> Self {
        Grid::from_fn(k, 1, |_, _| ObjExpr::Unit)
    }

    /// `1×k`, all `I`.
    pub fn codiagonal(k: usize) -> Self {
        Grid::from_fn(1, k, |_, _| ObjExpr::Unit)
    }

    /// The block matrix `[[0_{n,m}, 1_n], [1_m, 0_{m,n}]]` of shape `(n+m)×(m+n)`.
    pub fn sigma_boxplus(m: usize, n: usize) -> Self {
        Grid::from_fn(n + m, m + n, |i, j| {
            let on = if i < n { j == m + i } else { j == i - n };
            if on {
                ObjExpr::Unit
            } else {
                ObjExpr::Zero
            }
        })
    }

    /// A grid of distinct symbolic entries for argument number `cell`.
    pub fn tagged(cell: usize, rows: usize, cols: usize) -> Grid<Slot> {
        Grid::from_fn(rows, cols, |row, col| ObjExpr::Base(Slot { cell, row, col }))
    }

    /// Matrix product: entry `(i,k)` is the left-nested sum over ascending `j`
    /// of `A_ij ⊗ B_jk`, with no simplification.
    pub fn hcomp(&self, rhs: &Grid<L>) -> Result<Grid<L>> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Grid::from_fn(self.rows, rhs.cols, |i, k| {
            ObjExpr::sum_all((0..self.cols).map(|j| ObjExpr::prod(self.get(i, j).clone(), rhs.get(j, k).clone())))
        }))
    }

    /// Block diagonal sum with `O` off the blocks.
    pub fn boxplus(&self, rhs: &Grid<L>) -> Grid<L> {
        Grid::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => rhs.get(i - self.rows, j - self.cols).clone(),
                _ => ObjExpr::Zero,
            }
        })
    }

    pub fn map<M: Clone>(&self, f: impl Fn(&ObjExpr<L>) -> ObjExpr<M>) -> Grid<M> {
        Grid {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn subst<M: Clone>(&self, f: &impl Fn(&L) -> ObjExpr<M>) -> Grid<M> {
        self.map(|e| e.subst(f))
    }

    /// Entry `(j,i)` of the result is `f` of entry `(i,j)`.
    pub fn transpose_with(&self, f: impl Fn(&ObjExpr<L>) -> ObjExpr<L>) -> Grid<L> {
        Grid::from_fn(self.cols, self.rows, |j, i| f(self.get(i, j)))
    }
}

impl<L: fmt::Display> fmt::Display for Grid<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<L: fmt::Display> fmt::Debug for Grid<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = Grid<String>;

    fn b(s: &str) -> ObjExpr<String> {
        ObjExpr::Base(s.to_string())
    }

    #[test]
    fn units_and_zeros() {
        assert_eq!(G::id1(0).shape(), (0, 0));
        assert_eq!(G::id1(2).to_string(), "[[I, O], [O, I]]");
        assert_eq!(G::id1(1).to_string(), "[[I]]");
        assert_eq!(G::zero1(2, 1).to_string(), "[[O], [O]]");
        assert_eq!(G::zero1(0, 3).shape(), (0, 3));
    }

    #[test]
    fn products() {
        let row = G::codiagonal(2);
        let col = G::diagonal(2);
        assert_eq!(row.hcomp(&col).unwrap().to_string(), "[[I (x) I (+) I (x) I]]");
        let empty = G::zero1(2, 0).hcomp(&G::zero1(0, 3)).unwrap();
        assert_eq!(empty, G::zero1(2, 3));
        assert!(row.hcomp(&row).is_err());
    }

    #[test]
    fn direct_sums() {
        let a = G::from_fn(1, 1, |_, _| b("A"));
        let bb = G::from_fn(1, 1, |_, _| b("B"));
        assert_eq!(a.boxplus(&bb).to_string(), "[[#A, O], [O, #B]]");
        assert_eq!(a.boxplus(&G::zero1(0, 0)), a);
        assert_eq!(a.boxplus(&G::zero1(1, 0)).to_string(), "[[#A], [O]]");
    }

    #[test]
    fn symmetries() {
        assert_eq!(G::sigma_boxplus(1, 1).to_string(), "[[O, I], [I, O]]");
        assert_eq!(G::sigma_boxplus(0, 3), G::id1(3));
        assert_eq!(G::sigma_boxplus(1, 2).to_string(), "[[O, I, O], [O, O, I], [I, O, O]]");
    }
}
