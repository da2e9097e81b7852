//! Basis enumeration for skeletal vector spaces.
//!
//! The basis of `a⊕b` lists the basis of `a` first, then that of `b`; the
//! basis of `a⊗b` is the set of pairs in lexicographic order with the left
//! factor major. Every structural permutation is read off by relabelling
//! source basis vectors and looking them up in the target enumeration.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::base::{ObjExpr, Structural, StructuralKind};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    /// The single basis vector of `I`.
    Unit,
    /// Basis vector of a base or dual leaf.
    Leaf(usize),
    Left(Box<Label>),
    Right(Box<Label>),
    Pair(Box<Label>, Box<Label>),
}

/// Dimension of an expression over dimensions; duals keep the dimension.
pub fn dim_of(e: &ObjExpr<usize>) -> usize {
    match e {
        ObjExpr::Zero => 0,
        ObjExpr::Unit => 1,
        ObjExpr::Base(d) => *d,
        ObjExpr::Dual(a) => dim_of(a),
        ObjExpr::Sum(a, b) => dim_of(a) + dim_of(b),
        ObjExpr::Prod(a, b) => dim_of(a) * dim_of(b),
    }
}

pub fn enumerate(e: &ObjExpr<usize>) -> Vec<Label> {
    match e {
        ObjExpr::Zero => vec![],
        ObjExpr::Unit => vec![Label::Unit],
        ObjExpr::Base(_) | ObjExpr::Dual(_) => (0..dim_of(e)).map(Label::Leaf).collect(),
        ObjExpr::Sum(a, b) => enumerate(a)
            .into_iter()
            .map(|x| Label::Left(Box::new(x)))
            .chain(enumerate(b).into_iter().map(|y| Label::Right(Box::new(y))))
            .collect(),
        ObjExpr::Prod(a, b) => {
            let right = enumerate(b);
            enumerate(a)
                .into_iter()
                .flat_map(|x| {
                    right
                        .iter()
                        .map(move |y| Label::Pair(Box::new(x.clone()), Box::new(y.clone())))
                })
                .collect()
        }
    }
}

/// Where the forward component sends one source basis vector.
fn relabel(kind: StructuralKind, x: Label) -> Label {
    use Label::*;
    use StructuralKind::*;
    let bad = |x: &Label| -> ! { unreachable!("{kind} cannot act on basis label {x:?}") };
    match (kind, x) {
        (AssocPlus, Left(l)) => match *l {
            Left(a) => Left(a),
            Right(b) => Right(Box::new(Left(b))),
            other => bad(&other),
        },
        (AssocPlus, Right(c)) => Right(Box::new(Right(c))),
        (LunitPlus, Right(a)) => *a,
        (RunitPlus, Left(a)) => *a,
        (SymPlus, Left(a)) => Right(a),
        (SymPlus, Right(b)) => Left(b),
        (AssocTimes, Pair(ab, c)) => match *ab {
            Pair(a, b) => Pair(a, Box::new(Pair(b, c))),
            other => bad(&other),
        },
        (LunitTimes, Pair(_, a)) => *a,
        (RunitTimes, Pair(a, _)) => *a,
        (SymTimes, Pair(a, b)) => Pair(b, a),
        (DistL, Pair(a, bc)) => match *bc {
            Left(b) => Left(Box::new(Pair(a, b))),
            Right(c) => Right(Box::new(Pair(a, c))),
            other => bad(&other),
        },
        (DistR, Pair(ab, c)) => match *ab {
            Left(a) => Left(Box::new(Pair(a, c))),
            Right(b) => Right(Box::new(Pair(b, c))),
            other => bad(&other),
        },
        (_, other) => bad(&other),
    }
}

type PermKey = (StructuralKind, bool, Vec<usize>);

/// `perm[i]` is the target index of source basis vector `i`.
pub fn structural_permutation(s: &Structural<usize>) -> Vec<usize> {
    let key: PermKey = (s.kind, s.inverse, s.args.iter().map(dim_of).collect());
    thread_local! {
        static CACHE: RefCell<HashMap<PermKey, Vec<usize>>> =
            RefCell::new(HashMap::new());
    }
    if let Some(p) = CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    // the dims fully determine the permutation, so compute it on plain leaves
    let leaves: Vec<ObjExpr<usize>> = key.2.iter().map(|&d| ObjExpr::Base(d)).collect();
    let forward = Structural::new(s.kind, leaves).expect("arity was checked on construction");
    let (dom, cod) = forward.forward_ends();
    let target: HashMap<Label, usize> = enumerate(&cod).into_iter().enumerate().map(|(k, l)| (l, k)).collect();
    let p: Vec<usize> = enumerate(&dom)
        .into_iter()
        .map(|l| target[&relabel(s.kind, l)])
        .collect();
    let p = if s.inverse { invert(&p) } else { p };
    CACHE.with(|c| c.borrow_mut().insert(key, p.clone()));
    p
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use StructuralKind::*;

    fn perm(kind: StructuralKind, dims: &[usize]) -> Vec<usize> {
        let s = Structural::new(kind, dims.iter().map(|&d| ObjExpr::Base(d)).collect()).unwrap();
        structural_permutation(&s)
    }

    /// Closed-form index arithmetic for each family.
    fn oracle(kind: StructuralKind, d: &[usize]) -> Vec<usize> {
        match kind {
            AssocPlus => (0..d[0] + d[1] + d[2]).collect(),
            LunitPlus | RunitPlus | LunitTimes | RunitTimes => (0..d[0]).collect(),
            SymPlus => (0..d[0] + d[1]).map(|i| if i < d[0] { d[1] + i } else { i - d[0] }).collect(),
            AssocTimes => (0..d[0] * d[1] * d[2]).collect(),
            SymTimes => (0..d[0] * d[1]).map(|i| (i % d[1]) * d[0] + i / d[1]).collect(),
            DistL => {
                let (a, b, c) = (d[0], d[1], d[2]);
                (0..a * (b + c))
                    .map(|i| {
                        let (x, t) = (i / (b + c), i % (b + c));
                        if t < b {
                            x * b + t
                        } else {
                            a * b + x * c + (t - b)
                        }
                    })
                    .collect()
            }
            DistR => (0..(d[0] + d[1]) * d[2]).collect(),
            NullL | NullR => vec![],
        }
    }

    #[test]
    fn every_family_matches_index_arithmetic() {
        for kind in StructuralKind::ALL {
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..3 {
                        let dims = [a, b, c];
                        let dims = &dims[..kind.arity()];
                        assert_eq!(perm(kind, dims), oracle(kind, dims), "{kind} at {dims:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn distl_swaps_middle_vectors() {
        assert_eq!(perm(DistL, &[2, 1, 1]), vec![0, 2, 1, 3]);
    }

    #[test]
    fn sym_plus_moves_first_vector_past_the_rest() {
        assert_eq!(perm(SymPlus, &[1, 2]), vec![2, 0, 1]);
    }

    #[test]
    fn dims() {
        let e: ObjExpr<usize> = "(#2 (+) #3) (x) #1".parse().unwrap();
        assert_eq!(dim_of(&e), 5);
        assert_eq!(dim_of(&"O (x) #7".parse().unwrap()), 0);
        assert_eq!(dim_of(&"dual(#4)".parse().unwrap()), 4);
    }

    #[test]
    fn inverse_components_invert() {
        let s = Structural::new(DistL, vec![ObjExpr::Base(2), ObjExpr::Base(3), ObjExpr::Base(2)]).unwrap();
        let p = structural_permutation(&s);
        let q = structural_permutation(&s.inverted());
        assert!(p.iter().enumerate().all(|(i, &j)| q[j] == i));
    }
}
