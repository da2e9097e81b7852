use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// A sparse matrix over an exact field.
///
/// Each row keeps its nonzero entries sorted by column, so equality is
/// structural. Storage is proportional to the number of nonzeros, which keeps
/// the large permutation matrices produced by structural isomorphisms cheap.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, S::one())]).collect(),
        }
    }

    /// The `cod × perm.len()` matrix sending basis vector `i` to `perm[i]`.
    pub fn permutation(cod: usize, perm: &[usize]) -> Self {
        let mut m = Matrix::zeros(cod, perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m.data[j].push((i, S::one()));
        }
        m
    }

    /// Build from a dense row-major array; `cols` is needed when there are no rows.
    pub fn from_dense(rows: usize, cols: usize, dense: Vec<Vec<S>>) -> Result<Self> {
        if dense.len() != rows || dense.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("expected a {rows}x{cols} array")));
        }
        let data = dense
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let data = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| (j, f(i, j)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Matrix { rows, cols, data }
    }

    /// A 1×1 matrix.
    pub fn scalar(x: S) -> Self {
        Matrix::from_fn(1, 1, |_, _| x.clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_else(|_| S::zero())
    }

    pub fn row_entries(&self, i: usize) -> &[(usize, S)] {
        &self.data[i]
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        (0..self.rows)
            .map(|i| {
                let mut row = vec![S::zero(); self.cols];
                for (j, x) in &self.data[i] {
                    row[*j] = x.clone();
                }
                row
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    /// `self · rhs`
    ///
    /// # Panics
    /// If the inner dimensions differ.
    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let data = self
            .data
            .iter()
            .map(|row| {
                if let [(k, x)] = row.as_slice() {
                    // a single nonzero scales one row of rhs; the common case for permutations
                    if x.is_one() {
                        return rhs.data[*k].clone();
                    }
                    return rhs.data[*k].iter().map(|(j, y)| (*j, x.mul_ref(y))).collect();
                }
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (k, x) in row {
                    for (j, y) in &rhs.data[*k] {
                        let p = x.mul_ref(y);
                        acc.entry(*j)
                            .and_modify(|v| *v = v.add_ref(&p))
                            .or_insert(p);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// Kronecker product; row `(i, k)` of the result is `i·rhs.rows + k`.
    pub fn kron(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut data = Vec::with_capacity(self.rows * rhs.rows);
        for a in &self.data {
            for b in &rhs.data {
                let mut row = Vec::with_capacity(a.len() * b.len());
                for (j, x) in a {
                    for (l, y) in b {
                        row.push((j * rhs.cols + l, x.mul_ref(y)));
                    }
                }
                data.push(row);
            }
        }
        Matrix {
            rows: self.rows * rhs.rows,
            cols: self.cols * rhs.cols,
            data,
        }
    }

    /// Block diagonal with `self` in the top-left corner.
    pub fn block_diag(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut data = self.data.clone();
        data.extend(
            rhs.data
                .iter()
                .map(|r| r.iter().map(|(j, x)| (j + self.cols, x.clone())).collect()),
        );
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols + rhs.cols,
            data,
        }
    }

    pub fn conj_transpose(&self) -> Matrix<S> {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, x) in row {
                data[*j].push((i, x.conj()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix<S> {
        self.conj_transpose().map(|x| x.conj())
    }

    /// # Panics
    /// If the shapes differ.
    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shapes");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, S> = a.iter().cloned().collect();
                for (j, y) in b {
                    acc.entry(*j).and_modify(|v| *v = v.add_ref(y)).or_insert_with(|| y.clone());
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        self.map(|x| c.mul_ref(x))
    }

    fn map(&self, f: impl Fn(&S) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, x)| (*j, f(x))).collect())
                .collect(),
        }
    }

    /// Row-major text such as `[[1, 0], [0, 1]]`.
    pub fn pretty(&self) -> String {
        let rows: Vec<String> = self
            .to_dense()
            .iter()
            .map(|r| {
                let xs: Vec<String> = r.iter().map(Scalar::pretty).collect();
                format!("[{}]", xs.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self.pretty())
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{GaussRational, Rational};
    use proptest::prelude::*;

    type M = Matrix<Rational>;

    fn m(rows: &[&[i64]]) -> M {
        let cols = rows.first().map_or(0, |r| r.len());
        M::from_dense(
            rows.len(),
            cols,
            rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect(),
        )
        .unwrap()
    }

    /// Dense schoolbook product, independent of the sparse routine.
    fn dense_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], inner: usize, cols: usize) -> Vec<Vec<Rational>> {
        a.iter()
            .map(|r| {
                (0..cols)
                    .map(|j| (0..inner).fold(Rational::from(0), |s, k| s + &r[k] * &b[k][j]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn kron_with_unit_is_identity() {
        let a = m(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(m(&[&[1]]).kron(&a), a);
        assert_eq!(a.kron(&m(&[&[1]])), a);
    }

    #[test]
    fn kron_swaps_blocks() {
        let x = m(&[&[0, 1], &[1, 0]]);
        let expected = m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(x.kron(&M::identity(2)), expected);
    }

    #[test]
    fn block_diag_of_scalars() {
        assert_eq!(m(&[&[2]]).block_diag(&m(&[&[3]])), m(&[&[2, 0], &[0, 3]]));
        let e = M::zeros(0, 0);
        assert_eq!(m(&[&[2]]).block_diag(&e), m(&[&[2]]));
    }

    #[test]
    fn permutation_layout() {
        let p = M::permutation(3, &[1, 2, 0]);
        assert_eq!(p, m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(p.mul(&p.conj_transpose()), M::identity(3));
    }

    #[test]
    fn conj_transpose_conjugates() {
        let z = GaussRational::new(1.into(), 2.into());
        let a = Matrix::from_fn(1, 2, |_, j| if j == 0 { z.clone() } else { GaussRational::from(0) });
        let t = a.conj_transpose();
        assert_eq!((t.rows(), t.cols()), (2, 1));
        assert_eq!(t.get(0, 0), z.conj());
    }

    #[test]
    fn pretty_prints_integers_plainly() {
        assert_eq!(m(&[&[1, 0], &[0, -2]]).pretty(), "[[1, 0], [0, -2]]");
        assert_eq!(M::zeros(0, 3).pretty(), "[]");
    }

    fn mat(r: usize, c: usize) -> impl Strategy<Value = M> {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |xs| M::from_fn(r, c, |i, j| xs[i * c + j].into()))
    }

    fn quad() -> impl Strategy<Value = (M, M, M, M)> {
        (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(a, b, c, d, e, f)| {
            (mat(a, b), mat(b, c), mat(d, e), mat(e, f))
        })
    }

    proptest! {
        #[test]
        fn sparse_product_matches_dense(a in mat(3, 2), b in mat(2, 4)) {
            let expected = dense_mul(&a.to_dense(), &b.to_dense(), 2, 4);
            prop_assert_eq!(a.mul(&b).to_dense(), expected);
        }

        #[test]
        fn kron_interchange((a, c, b, d) in quad()) {
            prop_assert_eq!(a.mul(&c).kron(&b.mul(&d)), a.kron(&b).mul(&c.kron(&d)));
        }

        #[test]
        fn block_diag_interchange((a, c, b, d) in quad()) {
            prop_assert_eq!(a.mul(&c).block_diag(&b.mul(&d)), a.block_diag(&b).mul(&c.block_diag(&d)));
        }

        #[test]
        fn sum_is_entrywise(a in mat(2, 3), b in mat(2, 3)) {
            let s = a.add(&b);
            for i in 0..2 {
                for j in 0..3 {
                    prop_assert_eq!(s.get(i, j), a.get(i, j) + b.get(i, j));
                }
            }
        }
    }
}
