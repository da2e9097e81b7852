//! Dagger structure on Mat(C): unitary 2-cells, measurement shapes,
//! controlled operations, unitary error bases, teleportation and the
//! Pauli X built from structural 2-cells.

mod teleport;

pub use teleport::{teleportation, teleportation_check, Teleportation};

use std::fmt;

use crate::base::{require, synth_iso, BaseMor, Bimonoidal, Capability, Expr, ObjExpr};
use crate::error::{Error, Result};
use crate::instances::{Matrix, VecSkel};
use crate::matc::{
    associator, associator_iso, microcosm_oplus_iso, sigma_naturalizer, Cell1, Cell2, CellIso, Grid, Slot,
};
use crate::scalars::{GaussRational, Scalar};
use crate::structures::{codiagonal, copy_n, diagonal, fold_n, pull_string_iso};

/// Whether `f` is invertible with inverse `f†`.
pub fn is_unitary2<C: Bimonoidal>(f: &Cell2<C>) -> Result<bool> {
    require::<C>(Capability::Dagger)?;
    let fd = f.dagger()?;
    Ok(f.vcomp(&fd)?.is_identity() && fd.vcomp(f)?.is_identity())
}

/// `f ; s`, with the scalar `s: I → I` acting through the left unitor.
pub fn scale_mor<C: Bimonoidal>(s: &BaseMor<C>, f: &BaseMor<C>) -> Result<BaseMor<C>> {
    let b = f.cod().clone();
    let ib = ObjExpr::prod(ObjExpr::Unit, b.clone());
    f.then(&synth_iso::<C>(&b, &ib)?)?
        .then(&s.otimes(&BaseMor::identity(b.clone())))?
        .then(&synth_iso::<C>(&ib, &b)?)
}

/// Scale every entry of a 2-cell.
pub fn scale2<C: Bimonoidal>(s: &BaseMor<C>, f: &Cell2<C>) -> Result<Cell2<C>> {
    if !s.dom().is_unit() || !s.cod().is_unit() {
        return Err(Error::TypeMismatch(format!("a scalar must be I -> I, got {} -> {}", s.dom(), s.cod())));
    }
    f.map_entries(|g| scale_mor(s, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasurementKind {
    QubitMeasurement,
    QubitPreparation,
    ProjectiveMeasurement,
}

/// The boundary of a measurement-like 2-cell with `n` outcomes.
pub struct MeasurementShape<C: Bimonoidal> {
    pub kind: MeasurementKind,
    pub system: Expr<C>,
    pub n: usize,
}

impl<C: Bimonoidal> MeasurementShape<C> {
    fn surfaces(&self) -> Result<Cell1<C>> {
        codiagonal::<C>(self.n).hcomp(&diagonal(self.n))
    }

    pub fn dom(&self) -> Result<Cell1<C>> {
        match self.kind {
            MeasurementKind::QubitPreparation => self.surfaces(),
            _ => Ok(Cell1::single(self.system.clone())),
        }
    }

    pub fn cod(&self) -> Result<Cell1<C>> {
        match self.kind {
            MeasurementKind::QubitMeasurement => self.surfaces(),
            MeasurementKind::QubitPreparation => Ok(Cell1::single(self.system.clone())),
            MeasurementKind::ProjectiveMeasurement => {
                let a = Cell1::single(self.system.clone());
                let copies = (0..self.n).fold(Cell1::zero1(0, 0), |acc, _| acc.boxplus(&a));
                codiagonal::<C>(self.n).hcomp(&copies)?.hcomp(&diagonal(self.n))
            }
        }
    }

    /// Whether `f` has this boundary and is unitary.
    pub fn admits(&self, f: &Cell2<C>) -> Result<bool> {
        Ok(f.dom() == &self.dom()? && f.cod() == &self.cod()? && is_unitary2(f)?)
    }
}

/// The controlled operation on `[a]·codiagonal(n)`: pull `a` onto the
/// surfaces, apply `us[i]` on surface `i`, pull back.
pub fn controlled<C: Bimonoidal>(us: &[BaseMor<C>], n: usize) -> Result<Cell2<C>> {
    if us.len() != n {
        return Err(Error::Invalid(format!("{} operations for {n} surfaces", us.len())));
    }
    let Some(first) = us.first() else {
        return Err(Error::Invalid("a controlled operation needs at least one surface".into()));
    };
    let a = first.dom().clone();
    if let Some(u) = us.iter().find(|u| u.dom() != &a || u.cod() != &a) {
        return Err(Error::TypeMismatch(format!("{} -> {} is not an endomorphism of {a}", u.dom(), u.cod())));
    }
    let pull = pull_string_iso(&a, n)?;
    let block = us
        .iter()
        .fold(Cell2::id2(&Cell1::zero1(0, 0)), |acc, u| acc.boxplus(&Cell2::single(u.clone())));
    pull.forward()?
        .vcomp(&Cell2::whisker_left(&codiagonal(n), &block)?)?
        .vcomp(&pull.backward()?)
}

/// Unitaries `U_1..U_n` on a system, with the normalizing scalar `I → I`.
pub struct ErrorBasis<C: Bimonoidal> {
    pub system: Expr<C>,
    pub unitaries: Vec<BaseMor<C>>,
    pub scalar: BaseMor<C>,
}

impl<C: Bimonoidal> ErrorBasis<C> {
    pub fn new(system: Expr<C>, unitaries: Vec<BaseMor<C>>, scalar: BaseMor<C>) -> Result<Self> {
        if let Some(u) = unitaries.iter().find(|u| u.dom() != &system || u.cod() != &system) {
            return Err(Error::TypeMismatch(format!("{} -> {} is not an endomorphism of {system}", u.dom(), u.cod())));
        }
        if !scalar.dom().is_unit() || !scalar.cod().is_unit() {
            return Err(Error::TypeMismatch("the normalizing scalar must be I -> I".into()));
        }
        if unitaries.is_empty() {
            return Err(Error::Invalid("an error basis needs at least one unitary".into()));
        }
        Ok(ErrorBasis {
            system,
            unitaries,
            scalar,
        })
    }

    pub fn n(&self) -> usize {
        self.unitaries.len()
    }

    /// `system ⊗ system*`
    pub fn pair(&self) -> Expr<C> {
        ObjExpr::prod(self.system.clone(), ObjExpr::dual(self.system.clone()))
    }
}

/// The scalar `1/√n` as an endomorphism of `I`, when it is exact.
pub fn inv_sqrt<S: Scalar>(n: usize) -> Result<BaseMor<VecSkel<S>>> {
    let root = S::from_integer(n as i64)
        .sqrt_exact()
        .ok_or_else(|| Error::InexpressibleScalar(format!("1/sqrt({n}) is not an exact scalar")))?;
    scalar_mor(root.inv()?)
}

pub fn scalar_mor<S: Scalar>(s: S) -> Result<BaseMor<VecSkel<S>>> {
    BaseMor::new(ObjExpr::Unit, ObjExpr::Unit, Matrix::scalar(s))
}

fn qubit(rows: [[GaussRational; 2]; 2]) -> Result<BaseMor<VecSkel<GaussRational>>> {
    let dense = rows.into_iter().map(Vec::from).collect();
    BaseMor::new(ObjExpr::Base(2), ObjExpr::Base(2), Matrix::from_dense(2, 2, dense)?)
}

/// `1, X, Y, Z` on the qubit `#2`.
pub fn paulis() -> Result<Vec<BaseMor<VecSkel<GaussRational>>>> {
    let (o, l, i) = (GaussRational::from(0), GaussRational::from(1), GaussRational::i());
    Ok(vec![
        qubit([[l.clone(), o.clone()], [o.clone(), l.clone()]])?,
        qubit([[o.clone(), l.clone()], [l.clone(), o.clone()]])?,
        qubit([[o.clone(), -&i], [i, o.clone()]])?,
        qubit([[l, o.clone()], [o, -GaussRational::from(1)]])?,
    ])
}

/// The qubit Pauli basis with scalar `1/√4 = 1/2`, or with `scalar` when given.
pub fn pauli_basis(scalar: Option<GaussRational>) -> Result<ErrorBasis<VecSkel<GaussRational>>> {
    let s = match scalar {
        Some(s) => scalar_mor(s)?,
        None => inv_sqrt(4)?,
    };
    ErrorBasis::new(ObjExpr::Base(2), paulis()?, s)
}

/// `[a⊗a*] → codiagonal(n)·diagonal(n)` whose branch `i` is
/// `ε ∘ (U_i ⊗ 1)` scaled by the basis scalar.
pub fn error_basis_mu<C: Bimonoidal>(basis: &ErrorBasis<C>) -> Result<Cell2<C>> {
    require::<C>(Capability::Duals)?;
    require::<C>(Capability::Biproducts)?;
    let a = &basis.system;
    let n = basis.n();
    let eps = BaseMor::dual_counit(a.clone())?;
    let id_dual = BaseMor::identity(ObjExpr::dual(a.clone()));
    let branches = basis
        .unitaries
        .iter()
        .map(|u| scale_mor(&basis.scalar, &u.otimes(&id_dual).then(&eps)?))
        .collect::<Result<Vec<_>>>()?;
    let sum = branches
        .into_iter()
        .reduce(|acc, f| acc.oplus(&f))
        .expect("error bases are non-empty");
    let surfaces = codiagonal::<C>(n).hcomp(&diagonal(n))?;
    let units = ObjExpr::sum_all((0..n).map(|_| ObjExpr::Unit));
    let entry = copy_n(&basis.pair(), n)?
        .then(&sum)?
        .then(&synth_iso::<C>(&units, surfaces.get(0, 0))?)?;
    Cell2::new(Cell1::single(basis.pair()), surfaces, vec![entry])
}

/// The sum of all branches of `error_basis_mu`, folded back to `I`; handy for
/// checks that need a single morphism.
pub fn mu_folded<C: Bimonoidal>(basis: &ErrorBasis<C>) -> Result<BaseMor<C>> {
    let mu = error_basis_mu(basis)?;
    let units = ObjExpr::sum_all((0..basis.n()).map(|_| ObjExpr::Unit));
    mu.entry(0, 0)
        .then(&synth_iso::<C>(mu.cod().get(0, 0), &units)?)?
        .then(&fold_n(&ObjExpr::Unit, basis.n())?)
}

/// The swap of `[a⊕b]` into `[b⊕a]`, assembled from the sum microcosm, the
/// σ-naturalizer and horizontal associators, never from σ⊕ directly.
pub fn swap_through_surfaces<C: Bimonoidal>(a: &Expr<C>, b: &Expr<C>) -> Result<Cell2<C>> {
    let (c, d) = (codiagonal::<C>(2), diagonal::<C>(2));
    let sigma = Cell1::<C>::sigma_boxplus(1, 1);
    let (ca, cb) = (Cell1::single(a.clone()), Cell1::single(b.clone()));
    let (s, s_rev) = (ca.boxplus(&cb), cb.boxplus(&ca));

    // c ≅ c·σ, since both entries of c·σ are a sum of I⊗I and I⊗O
    let (gc, gs) = (Grid::<Slot>::codiagonal(2), Grid::<Slot>::sigma_boxplus(1, 1));
    let twist = CellIso::<C>::new(gc.clone(), gc.hcomp(&gs)?, vec![])?.forward()?;
    let gd = Grid::<Slot>::diagonal(2);
    let untwist = CellIso::<C>::new(gs.hcomp(&gd)?, gd, vec![])?.forward()?;

    let steps = [
        microcosm_oplus_iso(a, b)?.backward()?,
        Cell2::whisker_right(&Cell2::whisker_right(&twist, &s)?, &d)?,
        Cell2::whisker_right(&associator(&c, &sigma, &s)?, &d)?,
        Cell2::whisker_right(&Cell2::whisker_left(&c, &sigma_naturalizer(&ca, &cb)?)?, &d)?,
        Cell2::whisker_right(&associator_iso(&c, &s_rev, &sigma)?.backward()?, &d)?,
        associator(&c.hcomp(&s_rev)?, &sigma, &d)?,
        Cell2::whisker_left(&c.hcomp(&s_rev)?, &untwist)?,
        microcosm_oplus_iso(b, a)?.forward()?,
    ];
    steps
        .iter()
        .skip(1)
        .try_fold(steps[0].clone(), |acc, f| acc.vcomp(f))
}

/// The qubit Pauli X on `[I⊕I]`.
pub fn pauli_x<C: Bimonoidal>() -> Result<Cell2<C>> {
    swap_through_surfaces(&ObjExpr::Unit, &ObjExpr::Unit)
}

impl fmt::Display for MeasurementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeasurementKind::QubitMeasurement => "qubit measurement",
            MeasurementKind::QubitPreparation => "qubit preparation",
            MeasurementKind::ProjectiveMeasurement => "projective measurement",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussVec, RatVec};

    type V = GaussVec;

    fn g(re: i64) -> GaussRational {
        re.into()
    }

    fn half_plus_half_i() -> GaussRational {
        GaussRational::new(crate::Rational::new(1, 2).unwrap(), crate::Rational::new(1, 2).unwrap())
    }

    #[test]
    fn unitarity_of_small_cells() {
        let swap = BaseMor::<V>::new(ObjExpr::Base(2), ObjExpr::Base(2), Matrix::permutation(2, &[1, 0])).unwrap();
        assert!(is_unitary2(&Cell2::single(swap)).unwrap());
        let shear = Matrix::from_fn(2, 2, |i, j| g(i64::from(i <= j)));
        let shear = BaseMor::<V>::new(ObjExpr::Base(2), ObjExpr::Base(2), shear).unwrap();
        assert!(!is_unitary2(&Cell2::single(shear)).unwrap());
        assert!(is_unitary2(&Cell2::<V>::id2(&Cell1::from_fn(2, 3, |i, j| ObjExpr::Base(i + j)))).unwrap());
        assert!(is_unitary2(&Cell2::<crate::instances::BoolCat>::id2(&Cell1::id1(1))).is_err());
    }

    #[test]
    fn controlled_identities_collapse() {
        let id = BaseMor::<V>::identity(ObjExpr::Base(2));
        let c = controlled(&[id.clone(), id.clone()], 2).unwrap();
        assert!(c.is_identity());
        assert!(controlled(&[id], 2).is_err());
    }

    #[test]
    fn controlled_paulis_are_unitary() {
        let p = paulis().unwrap();
        let c = controlled(&[p[1].clone(), p[3].clone()], 2).unwrap();
        assert!(is_unitary2(&c).unwrap());
        let one = controlled(&[p[2].clone()], 1).unwrap();
        assert_eq!(one.entry(0, 0).payload(), p[2].payload());
    }

    #[test]
    fn pauli_mu_with_one_half_is_not_unitary() {
        // the Pauli matrices have Hilbert-Schmidt norm 2, so the Gram matrix of
        // the branches is (1/2)^2 · 2 · 1 = 1/2
        let mu = error_basis_mu(&pauli_basis(None).unwrap()).unwrap();
        assert!(!is_unitary2(&mu).unwrap());
        let gram = mu.entry(0, 0).payload().mul(&mu.entry(0, 0).payload().conj_transpose());
        assert_eq!(gram, Matrix::identity(4).scale(&crate::Rational::new(1, 2).unwrap().into()));
    }

    #[test]
    fn pauli_mu_with_a_unit_modulus_correction_is_unitary() {
        let mu = error_basis_mu(&pauli_basis(Some(half_plus_half_i())).unwrap()).unwrap();
        assert!(is_unitary2(&mu).unwrap());
        let shape = MeasurementShape::<V> {
            kind: MeasurementKind::QubitMeasurement,
            system: ObjExpr::prod(ObjExpr::Base(2), ObjExpr::dual(ObjExpr::Base(2))),
            n: 4,
        };
        assert!(shape.admits(&mu).unwrap());
    }

    #[test]
    fn non_bases_fail_the_gram_check() {
        let id = BaseMor::<V>::identity(ObjExpr::Base(2));
        let b = ErrorBasis::new(ObjExpr::Base(2), vec![id; 4], scalar_mor(half_plus_half_i()).unwrap()).unwrap();
        assert!(!is_unitary2(&error_basis_mu(&b).unwrap()).unwrap());
        let p = paulis().unwrap();
        let minus_y = p[2].then(&BaseMor::new(ObjExpr::Base(2), ObjExpr::Base(2), Matrix::identity(2).scale(&g(-1))).unwrap()).unwrap();
        let b = ErrorBasis::new(
            ObjExpr::Base(2),
            vec![p[0].clone(), p[1].clone(), p[2].clone(), minus_y],
            scalar_mor(half_plus_half_i()).unwrap(),
        )
        .unwrap();
        assert!(!is_unitary2(&error_basis_mu(&b).unwrap()).unwrap());
    }

    #[test]
    fn trivial_measurement() {
        let b = ErrorBasis::<V>::new(ObjExpr::Unit, vec![BaseMor::identity(ObjExpr::Unit)], inv_sqrt(1).unwrap()).unwrap();
        let mu = error_basis_mu(&b).unwrap();
        assert!(is_unitary2(&mu).unwrap());
        assert!(mu.entry(0, 0).payload().is_identity());
        assert!(inv_sqrt::<GaussRational>(2).is_err());
        assert!(inv_sqrt::<crate::Rational>(9).is_ok());
    }

    #[test]
    fn pauli_x_is_the_swap() {
        let x = pauli_x::<V>().unwrap();
        assert_eq!(x.dom().to_string(), "[[I (+) I]]");
        assert_eq!(x.entry(0, 0).payload(), &Matrix::permutation(2, &[1, 0]));
        assert!(x.vcomp(&x).unwrap().is_identity());
        assert!(is_unitary2(&x).unwrap());
        let wide = swap_through_surfaces::<RatVec>(&ObjExpr::Base(2), &ObjExpr::Base(1)).unwrap();
        assert_eq!(wide.entry(0, 0).payload(), &Matrix::permutation(3, &[1, 2, 0]));
    }

    #[test]
    fn measurement_shapes() {
        let s = MeasurementShape::<V> {
            kind: MeasurementKind::ProjectiveMeasurement,
            system: ObjExpr::Base(2),
            n: 2,
        };
        assert_eq!(s.cod().unwrap().shape(), (1, 1));
        let p = MeasurementShape::<V> {
            kind: MeasurementKind::QubitPreparation,
            system: ObjExpr::Base(2),
            n: 2,
        };
        assert_eq!(p.cod().unwrap(), Cell1::single(ObjExpr::Base(2)));
        assert_eq!(p.kind.to_string(), "qubit preparation");
    }
}
