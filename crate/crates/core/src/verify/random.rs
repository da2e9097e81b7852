//! Seeded generators for objects, 1-cells, 2-cells and path terms.

use rand::rngs::StdRng;
use rand::Rng;

use crate::base::{BaseMor, Bimonoidal, Expr, ObjExpr};
use crate::instances::{truth, BoolCat, Matrix, NatDiscrete, VecSkel};
use crate::matc::{Cell1, Cell2};
use crate::pathcalc::{PathTerm, ScalarExpr};
use crate::scalars::{GaussRational, Rational, Scalar};

/// Instances that can produce random objects and morphisms.
pub trait RandomInstance: Bimonoidal {
    fn random_object(rng: &mut StdRng) -> Expr<Self>;
    /// An object admitting at least one morphism from `src`.
    fn random_target(rng: &mut StdRng, src: &Expr<Self>) -> Expr<Self>;
    fn random_mor(rng: &mut StdRng, src: &Expr<Self>, dst: &Expr<Self>) -> BaseMor<Self>;
}

/// Scalars with a small random sampler.
pub trait RandomScalar: Scalar {
    fn random(rng: &mut StdRng) -> Self;
}

impl RandomScalar for Rational {
    fn random(rng: &mut StdRng) -> Self {
        Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)).expect("nonzero denominator")
    }
}

impl RandomScalar for GaussRational {
    fn random(rng: &mut StdRng) -> Self {
        GaussRational::new(Rational::random(rng), Rational::from_integer(rng.gen_range(-1..=1)))
    }
}

fn small_object<L>(rng: &mut StdRng, leaf: impl Fn(&mut StdRng) -> L) -> ObjExpr<L> {
    match rng.gen_range(0..10) {
        0 => ObjExpr::Unit,
        1 => ObjExpr::Zero,
        _ => ObjExpr::Base(leaf(rng)),
    }
}

impl<S: RandomScalar> RandomInstance for VecSkel<S> {
    fn random_object(rng: &mut StdRng) -> Expr<Self> {
        small_object(rng, |r| r.gen_range(0..=3))
    }

    fn random_target(rng: &mut StdRng, _src: &Expr<Self>) -> Expr<Self> {
        Self::random_object(rng)
    }

    fn random_mor(rng: &mut StdRng, src: &Expr<Self>, dst: &Expr<Self>) -> BaseMor<Self> {
        let (r, c) = (crate::instances::dim_of(dst), crate::instances::dim_of(src));
        let dense = (0..r).map(|_| (0..c).map(|_| S::random(rng)).collect()).collect();
        let m = Matrix::from_dense(r, c, dense).expect("dimensions match");
        BaseMor::new(src.clone(), dst.clone(), m).expect("dimensions match")
    }
}

impl RandomInstance for BoolCat {
    fn random_object(rng: &mut StdRng) -> Expr<Self> {
        small_object(rng, |r| r.gen_bool(0.5))
    }

    fn random_target(rng: &mut StdRng, src: &Expr<Self>) -> Expr<Self> {
        if truth(src).unwrap_or(true) {
            if rng.gen_bool(0.5) {
                ObjExpr::Unit
            } else {
                ObjExpr::Base(true)
            }
        } else {
            Self::random_object(rng)
        }
    }

    fn random_mor(_rng: &mut StdRng, src: &Expr<Self>, dst: &Expr<Self>) -> BaseMor<Self> {
        BaseMor::new(src.clone(), dst.clone(), ()).expect("target admits a morphism")
    }
}

impl RandomInstance for NatDiscrete {
    fn random_object(rng: &mut StdRng) -> Expr<Self> {
        small_object(rng, |r| r.gen_range(0..=3))
    }

    fn random_target(_rng: &mut StdRng, src: &Expr<Self>) -> Expr<Self> {
        src.clone()
    }

    fn random_mor(_rng: &mut StdRng, src: &Expr<Self>, dst: &Expr<Self>) -> BaseMor<Self> {
        BaseMor::new(src.clone(), dst.clone(), ()).expect("equal values")
    }
}

pub fn random_cell1<C: RandomInstance>(rng: &mut StdRng, rows: usize, cols: usize) -> Cell1<C> {
    let entries = (0..rows * cols).map(|_| C::random_object(rng)).collect();
    Cell1::new(rows, cols, entries).expect("entry count matches")
}

/// A random 2-cell out of `a`.
pub fn random_cell2<C: RandomInstance>(rng: &mut StdRng, a: &Cell1<C>) -> Cell2<C> {
    let entries: Vec<BaseMor<C>> = a
        .grid()
        .entries()
        .iter()
        .map(|e| {
            let t = C::random_target(rng, e);
            C::random_mor(rng, e, &t)
        })
        .collect();
    Cell2::from_entries(a.rows(), a.cols(), entries).expect("entry count matches")
}

/// A random 2-cell `a → b` for fixed ends, when one exists.
pub fn random_cell2_between<C: RandomInstance>(rng: &mut StdRng, a: &Cell1<C>, b: &Cell1<C>) -> Cell2<C> {
    let entries = a
        .grid()
        .entries()
        .iter()
        .zip(b.grid().entries())
        .map(|(s, t)| C::random_mor(rng, s, t))
        .collect();
    Cell2::new(a.clone(), b.clone(), entries).expect("matching shapes")
}

/// A shape dimension in `0..=3`, rarely zero.
pub fn random_dim(rng: &mut StdRng) -> usize {
    if rng.gen_bool(0.1) {
        0
    } else {
        rng.gen_range(1..=3)
    }
}

const VARS: [&str; 3] = ["r", "s", "t"];

/// A generator with `inputs` inputs; wide leaves stack a generator under an
/// identity when `depth` allows it.
fn random_leaf(rng: &mut StdRng, inputs: usize, depth: usize) -> PathTerm {
    match inputs {
        0 => {
            if rng.gen_bool(0.7) {
                PathTerm::Unit
            } else {
                PathTerm::Id(0)
            }
        }
        1 => match rng.gen_range(0..5) {
            0 => PathTerm::Comul,
            1 => PathTerm::Counit,
            2 => PathTerm::Id(1),
            3 => PathTerm::Scalar(ScalarExpr::Lit(rng.gen_range(0..=2))),
            _ => PathTerm::scalar(VARS[rng.gen_range(0..VARS.len())]),
        },
        2 => match rng.gen_range(0..3) {
            0 => PathTerm::Mul,
            1 => PathTerm::Swap,
            _ => PathTerm::Id(2),
        },
        n if depth == 0 => PathTerm::Id(n),
        n => PathTerm::par(PathTerm::Id(n - 2), random_leaf(rng, 2, 0)),
    }
}

/// A random well-formed term with `inputs` inputs and depth at most `depth`.
pub fn random_term(rng: &mut StdRng, depth: usize, inputs: usize) -> PathTerm {
    if depth == 0 || rng.gen_bool(0.2) {
        return random_leaf(rng, inputs, depth);
    }
    if rng.gen_bool(0.5) {
        let first = random_term(rng, depth - 1, inputs);
        let outs = first.arity().0;
        // keep the wire count from blowing up
        let second = if outs > 4 {
            random_leaf(rng, outs, depth - 1)
        } else {
            random_term(rng, depth - 1, outs)
        };
        PathTerm::seq(first, second).expect("arity chosen to match")
    } else {
        let k = rng.gen_range(0..=inputs);
        PathTerm::par(random_term(rng, depth - 1, k), random_term(rng, depth - 1, inputs - k))
    }
}
