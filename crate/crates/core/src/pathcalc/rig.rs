use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::term::{PathTerm, ScalarExpr};
use crate::error::{Error, Result};

/// A semiring `(R, +, ×, 0, 1)`.
pub trait Rig {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;
    const NAME: &'static str;

    fn zero() -> Self::Elem;
    fn one() -> Self::Elem;
    fn add(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `1 + ... + 1`, `n` times.
    fn from_nat(n: u64) -> Self::Elem {
        let (mut acc, mut pow, mut k) = (Self::zero(), Self::one(), n);
        while k > 0 {
            if k & 1 == 1 {
                acc = Self::add(&acc, &pow);
            }
            pow = Self::add(&pow, &pow);
            k >>= 1;
        }
        acc
    }
}

/// The natural numbers, unbounded.
pub struct Nat;

impl Rig for Nat {
    type Elem = BigUint;
    const NAME: &'static str = "nat";

    fn zero() -> BigUint {
        BigUint::zero()
    }

    fn one() -> BigUint {
        BigUint::one()
    }

    fn add(a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }

    fn mul(a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }

    fn from_nat(n: u64) -> BigUint {
        BigUint::from(n)
    }
}

/// Truth values under disjunction and conjunction.
pub struct Bool;

impl Rig for Bool {
    type Elem = bool;
    const NAME: &'static str = "bool";

    fn zero() -> bool {
        false
    }

    fn one() -> bool {
        true
    }

    fn add(a: &bool, b: &bool) -> bool {
        *a || *b
    }

    fn mul(a: &bool, b: &bool) -> bool {
        *a && *b
    }
}

/// A dense matrix over a rig, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RigMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + fmt::Display> RigMatrix<E> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> E) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        RigMatrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E: fmt::Display> fmt::Display for RigMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[]_{{{},{}}}", self.rows, self.cols);
        }
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
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn identity<R: Rig>(k: usize) -> RigMatrix<R::Elem> {
    RigMatrix::from_fn(k, k, |i, j| if i == j { R::one() } else { R::zero() })
}

fn product<R: Rig>(a: &RigMatrix<R::Elem>, b: &RigMatrix<R::Elem>) -> RigMatrix<R::Elem> {
    RigMatrix::from_fn(a.rows, b.cols, |i, k| {
        (0..a.cols).fold(R::zero(), |acc, j| R::add(&acc, &R::mul(a.get(i, j), b.get(j, k))))
    })
}

fn direct_sum<R: Rig>(a: &RigMatrix<R::Elem>, b: &RigMatrix<R::Elem>) -> RigMatrix<R::Elem> {
    RigMatrix::from_fn(a.rows + b.rows, a.cols + b.cols, |i, j| match (i < a.rows, j < a.cols) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - a.rows, j - a.cols).clone(),
        _ => R::zero(),
    })
}

/// The value of a scalar label.
pub fn eval_scalar<R: Rig>(s: &ScalarExpr, assignment: &HashMap<String, R::Elem>) -> Result<R::Elem> {
    Ok(match s {
        ScalarExpr::Var(v) => assignment
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UnassignedScalar(v.clone()))?,
        ScalarExpr::Lit(n) => R::from_nat(*n),
        ScalarExpr::Add(a, b) => R::add(&eval_scalar::<R>(a, assignment)?, &eval_scalar::<R>(b, assignment)?),
        ScalarExpr::Mul(a, b) => R::mul(&eval_scalar::<R>(a, assignment)?, &eval_scalar::<R>(b, assignment)?),
    })
}

/// The matrix of a path term: sequencing is matrix product, stacking is
/// direct sum.
pub fn eval_rig<R: Rig>(t: &PathTerm, assignment: &HashMap<String, R::Elem>) -> Result<RigMatrix<R::Elem>> {
    let (o, l) = (R::zero(), R::one());
    Ok(match t {
        PathTerm::Id(k) => identity::<R>(*k),
        PathTerm::Mul => RigMatrix::from_fn(1, 2, |_, _| l.clone()),
        PathTerm::Unit => RigMatrix::from_fn(1, 0, |_, _| o.clone()),
        PathTerm::Comul => RigMatrix::from_fn(2, 1, |_, _| l.clone()),
        PathTerm::Counit => RigMatrix::from_fn(0, 1, |_, _| o.clone()),
        PathTerm::Swap => RigMatrix::from_fn(2, 2, |i, j| if i != j { l.clone() } else { o.clone() }),
        PathTerm::Scalar(s) => RigMatrix {
            rows: 1,
            cols: 1,
            data: vec![eval_scalar::<R>(s, assignment)?],
        },
        PathTerm::Seq(a, b) => {
            let (ma, mb) = (eval_rig::<R>(a, assignment)?, eval_rig::<R>(b, assignment)?);
            if ma.rows != mb.cols {
                return Err(Error::ShapeMismatch(format!("{:?} after {:?}", mb.shape(), ma.shape())));
            }
            product::<R>(&mb, &ma)
        }
        PathTerm::Par(a, b) => direct_sum::<R>(&eval_rig::<R>(a, assignment)?, &eval_rig::<R>(b, assignment)?),
    })
}
