use std::marker::PhantomData;

use serde_json::Value;

use super::basis::{dim_of, structural_permutation};
use super::matrix::Matrix;
use crate::base::{Bimonoidal, Capabilities, Expr, Iso, IsoNode, Structural};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Skeletal finite-dimensional vector spaces over the field `S`.
///
/// Objects are dimensions and a morphism `a → b` is a `dim b × dim a` matrix.
/// `⊕` is block diagonal sum and `⊗` the Kronecker product. Every object is
/// self-dual with the pairing `ε(e_j ⊗ e_k) = δ_jk`.
pub struct VecSkel<S>(PhantomData<fn() -> S>);

impl<S: Scalar> VecSkel<S> {
    fn perm(iso: &Iso<usize>) -> Vec<usize> {
        match iso.node() {
            IsoNode::Id => (0..dim_of(iso.dom())).collect(),
            IsoNode::Component(s) => structural_permutation(s),
            IsoNode::Then(a, b) => {
                let q = Self::perm(b);
                Self::perm(a).into_iter().map(|i| q[i]).collect()
            }
            IsoNode::Sum(a, b) => {
                let p = Self::perm(a);
                let off = p.len();
                p.into_iter().chain(Self::perm(b).into_iter().map(|j| j + off)).collect()
            }
            IsoNode::Prod(a, b) => {
                let (p, q) = (Self::perm(a), Self::perm(b));
                let n = q.len();
                p.iter()
                    .flat_map(|&i| q.iter().map(move |&j| i * n + j))
                    .collect()
            }
        }
    }

    /// Evaluate an isomorphism by multiplying component matrices, without the
    /// permutation shortcut.
    pub fn eval_iso_by_matrices(iso: &Iso<usize>) -> Matrix<S> {
        match iso.node() {
            IsoNode::Id => Matrix::identity(dim_of(iso.dom())),
            IsoNode::Component(s) => Self::structural(s),
            IsoNode::Then(a, b) => Self::eval_iso_by_matrices(b).mul(&Self::eval_iso_by_matrices(a)),
            IsoNode::Sum(a, b) => Self::eval_iso_by_matrices(a).block_diag(&Self::eval_iso_by_matrices(b)),
            IsoNode::Prod(a, b) => Self::eval_iso_by_matrices(a).kron(&Self::eval_iso_by_matrices(b)),
        }
    }
}

impl<S: Scalar> Bimonoidal for VecSkel<S> {
    type Obj = usize;
    type Mor = Matrix<S>;

    const NAME: &'static str = "vecskel";
    const CAPS: Capabilities = Capabilities::ALL;

    fn well_typed(dom: &Expr<Self>, cod: &Expr<Self>, mor: &Matrix<S>) -> Result<()> {
        let (d, c) = (dim_of(dom), dim_of(cod));
        if (mor.rows(), mor.cols()) != (c, d) {
            return Err(Error::TypeMismatch(format!(
                "a {}x{} matrix is not a morphism {dom} -> {cod} (dims {d} -> {c})",
                mor.rows(),
                mor.cols()
            )));
        }
        Ok(())
    }

    fn identity(a: &Expr<Self>) -> Matrix<S> {
        Matrix::identity(dim_of(a))
    }

    fn compose(first: &Matrix<S>, second: &Matrix<S>) -> Matrix<S> {
        second.mul(first)
    }

    fn oplus(f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        f.block_diag(g)
    }

    fn otimes(f: &Matrix<S>, g: &Matrix<S>) -> Matrix<S> {
        f.kron(g)
    }

    fn structural(s: &Structural<usize>) -> Matrix<S> {
        let (_, cod) = s.ends();
        Matrix::permutation(dim_of(&cod), &structural_permutation(s))
    }

    fn eval_iso(iso: &Iso<usize>) -> Matrix<S> {
        Matrix::permutation(dim_of(iso.cod()), &Self::perm(iso))
    }

    fn dagger(f: &Matrix<S>) -> Result<Matrix<S>> {
        Ok(f.conj_transpose())
    }

    fn zero(a: &Expr<Self>, b: &Expr<Self>) -> Result<Matrix<S>> {
        Ok(Matrix::zeros(dim_of(b), dim_of(a)))
    }

    fn fold(a: &Expr<Self>) -> Result<Matrix<S>> {
        let d = dim_of(a);
        Ok(Matrix::from_fn(d, 2 * d, |i, j| if j % d == i { S::one() } else { S::zero() }))
    }

    fn copy(a: &Expr<Self>) -> Result<Matrix<S>> {
        Ok(Self::fold(a)?.conj_transpose())
    }

    fn dual_counit(a: &Expr<Self>) -> Result<Matrix<S>> {
        let d = dim_of(a);
        Ok(Matrix::from_fn(1, d * d, |_, j| {
            if j / d == j % d {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    fn dual_unit(a: &Expr<Self>) -> Result<Matrix<S>> {
        Ok(Self::dual_counit(a)?.conj_transpose())
    }

    fn mor_to_json(f: &Matrix<S>) -> Value {
        Value::Array(
            f.to_dense()
                .into_iter()
                .map(|r| Value::Array(r.into_iter().map(|x| Value::String(x.to_string())).collect()))
                .collect(),
        )
    }

    fn mor_from_json(v: &Value, dom: &Expr<Self>, cod: &Expr<Self>) -> Result<Matrix<S>> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Json("matrix must be an array of rows".into()))?;
        let dense = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Json("matrix row must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .ok_or_else(|| Error::Json("matrix entry must be a string".into()))?
                            .parse()
                    })
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_dense(dim_of(cod), dim_of(dom), dense)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{synth_iso, synthesize, BaseMor, ObjExpr, StructuralKind};
    use crate::scalars::{GaussRational, Rational};
    use proptest::prelude::*;

    type V = VecSkel<GaussRational>;
    type E = ObjExpr<usize>;

    fn e(s: &str) -> E {
        s.parse().unwrap()
    }

    fn int_matrix(rows: &[&[i64]]) -> Matrix<GaussRational> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), cols, |i, j| rows[i][j].into())
    }

    #[test]
    fn distl_at_two_one_one() {
        let f = BaseMor::<V>::structural(StructuralKind::DistL, vec![e("#2"), e("#1"), e("#1")]).unwrap();
        assert_eq!(
            f.payload(),
            &int_matrix(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn nullitor_is_empty() {
        let f = BaseMor::<V>::structural(StructuralKind::NullL, vec![e("#3")]).unwrap();
        // O⊗3 has dimension 0, so the component is the empty 0×0 matrix
        assert_eq!((f.payload().rows(), f.payload().cols()), (0, 0));
        assert_eq!(f.dom(), &e("O (x) #3"));
    }

    #[test]
    fn counit_pairs_equal_indices() {
        let f = BaseMor::<V>::dual_counit(e("#2")).unwrap();
        assert_eq!(f.payload(), &int_matrix(&[&[1, 0, 0, 1]]));
        assert_eq!(f.dom(), &e("#2 (x) dual(#2)"));
    }

    #[test]
    fn identity_law() {
        let m = BaseMor::<V>::new(e("#2"), e("#3"), int_matrix(&[&[1, 2], &[3, 4], &[5, 6]])).unwrap();
        assert_eq!(BaseMor::identity(e("#2")).then(&m).unwrap(), m);
        assert!(BaseMor::<V>::new(e("#2"), e("#2"), int_matrix(&[&[1]])).is_err());
    }

    #[test]
    fn sym_plus_synthesis_moves_first_vector() {
        let f = synth_iso::<V>(&e("#1 (+) #2"), &e("#2 (+) #1")).unwrap();
        assert_eq!(f.payload(), &int_matrix(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]));
    }

    #[test]
    fn strips_units_and_zeros() {
        let f = synth_iso::<V>(&e("I (x) I (+) I (x) O"), &e("I")).unwrap();
        assert!(f.payload().is_identity());
    }

    #[test]
    fn fold_copy_and_zero() {
        let fold = V::fold(&e("#2")).unwrap();
        assert_eq!(fold, int_matrix(&[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
        assert_eq!(V::copy(&e("#1")).unwrap(), int_matrix(&[&[1], &[1]]));
        assert!(V::zero(&e("#2"), &e("#1")).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_fn(2, 1, |i, _| GaussRational::new(Rational::new(1, 2).unwrap(), (i as i64).into()));
        let f = BaseMor::<V>::new(e("#1"), e("#2"), m).unwrap();
        let j = f.to_json();
        assert_eq!(j["mor"][1][0], "1/2+1/1 i");
        assert_eq!(BaseMor::<V>::from_json(&j).unwrap(), f);
    }

    fn expr(depth: u32) -> impl Strategy<Value = E> {
        let leaf = prop_oneof![Just(E::Zero), Just(E::Unit), (1usize..4).prop_map(E::Base)];
        leaf.prop_recursive(depth, 16, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| E::sum(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| E::prod(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn permutation_route_agrees_with_matrix_route(a in expr(4)) {
            let (_, w) = crate::base::normalize(&a);
            prop_assert_eq!(V::eval_iso(&w), V::eval_iso_by_matrices(&w));
        }

        #[test]
        fn round_trip_is_identity(a in expr(4)) {
            let (nf, _) = crate::base::normalize(&a);
            let b = nf.render();
            let there = synth_iso::<V>(&a, &b).unwrap();
            let back = synth_iso::<V>(&b, &a).unwrap();
            prop_assert!(there.then(&back).unwrap().is_identity());
            prop_assert_eq!(there.dagger().unwrap(), back);
        }

        #[test]
        fn structural_components_are_unitary(k in 0usize..12, a in 0usize..4, b in 0usize..4, c in 0usize..4) {
            let kind = StructuralKind::ALL[k];
            let args = [a, b, c][..kind.arity()].iter().map(|&d| E::Base(d)).collect();
            let f = BaseMor::<V>::structural(kind, args).unwrap();
            prop_assert!(f.then(&f.dagger().unwrap()).unwrap().is_identity());
            prop_assert!(f.dagger().unwrap().then(&f).unwrap().is_identity());
        }

        #[test]
        fn synthesis_is_deterministic(a in expr(3)) {
            let b = crate::base::normalize(&a).0.render();
            prop_assert_eq!(synthesize(&a, &b).unwrap(), synthesize(&a, &b).unwrap());
        }
    }
}
