use super::{controlled, error_basis_mu, is_unitary2, scale2, scale_mor, ErrorBasis};
use crate::base::{synth_iso, BaseMor, Bimonoidal, Expr, ObjExpr};
use crate::error::Result;
use crate::matc::{associator_iso, normalize_cell, right_unitor_iso, Cell1, Cell2, CellIso, Grid, Slot};
use crate::structures::{codiagonal, cup, diagonal};

/// Every stage of the teleportation identity for one error basis.
pub struct Teleportation<C: Bimonoidal> {
    pub mu: Cell2<C>,
    pub mu_unitary: bool,
    /// The one-shot composite `γ ∘ μ ∘ η` on `[a] → ([a]·c)·d`.
    pub one_shot: Cell2<C>,
    /// The derivation: the one-shot composite, then per-surface snakes with
    /// `U_i` inside, then `U_i` slid out of the snake, then `U_i† U_i = 1`.
    pub chain: [Cell2<C>; 4],
    /// The scaled pulled cup.
    pub rhs: Cell2<C>,
    /// Whether the one-shot composite equals the right-hand side.
    pub equation: bool,
    /// Whether each stage of the chain equals the next and the last equals the right-hand side.
    pub chain_agrees: bool,
}

impl<C: Bimonoidal> Teleportation<C> {
    pub fn passed(&self) -> bool {
        self.mu_unitary && self.equation && self.chain_agrees
    }
}

/// `a → a⊗I → a⊗(a*⊗a) → (a⊗a*)⊗a → (I⊗a) → a`, with `u ⊗ 1` applied before
/// the pairing when given.
fn snake<C: Bimonoidal>(a: &Expr<C>, u: Option<&BaseMor<C>>) -> Result<BaseMor<C>> {
    let ad = ObjExpr::dual(a.clone());
    let id_a = BaseMor::identity(a.clone());
    let left = ObjExpr::prod(ObjExpr::prod(a.clone(), ad.clone()), a.clone());
    let mut f = synth_iso::<C>(a, &ObjExpr::prod(a.clone(), ObjExpr::Unit))?
        .then(&id_a.otimes(&BaseMor::dual_unit(a.clone())?))?
        .then(&synth_iso::<C>(&ObjExpr::prod(a.clone(), ObjExpr::prod(ad.clone(), a.clone())), &left)?)?;
    if let Some(u) = u {
        f = f.then(&u.otimes(&BaseMor::identity(ad)).otimes(&id_a))?;
    }
    f.then(&BaseMor::dual_counit(a.clone())?.otimes(&id_a))?
        .then(&synth_iso::<C>(&ObjExpr::prod(ObjExpr::Unit, a.clone()), a)?)
}

/// `[a] → [a]·1 → [a]·(c·d) → ([a]·c)·d`
fn pulled_cup<C: Bimonoidal>(a: &Expr<C>, n: usize) -> Result<Cell2<C>> {
    let ca = Cell1::single(a.clone());
    right_unitor_iso(&ca)?
        .backward()?
        .vcomp(&Cell2::whisker_left(&ca, &cup(n)?)?)?
        .vcomp(&associator_iso(&ca, &codiagonal(n), &diagonal(n))?.backward()?)
}

fn stage<C: Bimonoidal>(a: &Expr<C>, n: usize, branches: &[BaseMor<C>]) -> Result<Cell2<C>> {
    pulled_cup(a, n)?.vcomp(&Cell2::whisker_right(&controlled(branches, n)?, &diagonal(n))?)
}

/// Build both sides of the teleportation identity and every stage between.
///
/// Sides are compared after the entrywise normalization of their common
/// codomain.
pub fn teleportation<C: Bimonoidal>(basis: &ErrorBasis<C>) -> Result<Teleportation<C>> {
    let a = &basis.system;
    let n = basis.n();
    let s = &basis.scalar;
    let ca = Cell1::single(a.clone());
    let (c, d) = (codiagonal::<C>(n), diagonal::<C>(n));
    let mu = error_basis_mu(basis)?;
    let mu_unitary = is_unitary2(&mu)?;
    let daggers = basis.unitaries.iter().map(BaseMor::dagger).collect::<Result<Vec<_>>>()?;

    let ad = ObjExpr::dual(a.clone());
    let prepare = synth_iso::<C>(a, &ObjExpr::prod(a.clone(), ObjExpr::Unit))?
        .then(&BaseMor::identity(a.clone()).otimes(&BaseMor::dual_unit(a.clone())?))?
        .then(&synth_iso::<C>(
            &ObjExpr::prod(a.clone(), ObjExpr::prod(ad.clone(), a.clone())),
            &ObjExpr::prod(ObjExpr::prod(a.clone(), ad), a.clone()),
        )?)?;
    let (gc, gd, ta) = (Grid::<Slot>::codiagonal(n), Grid::<Slot>::diagonal(n), Grid::<Slot>::tagged(0, 1, 1));
    let relocate = CellIso::new(gc.hcomp(&gd)?.hcomp(&ta)?, ta.hcomp(&gc)?.hcomp(&gd)?, vec![ca.clone()])?;
    let gamma = controlled(&daggers, n)?;
    let one_shot = Cell2::single(prepare)
        .vcomp(&Cell2::whisker_right(&mu, &ca)?)?
        .vcomp(&relocate.forward()?)?
        .vcomp(&Cell2::whisker_right(&gamma, &d)?)?;

    let with_u = basis
        .unitaries
        .iter()
        .zip(&daggers)
        .map(|(u, ud)| scale_mor(s, &snake(a, Some(u))?)?.then(ud))
        .collect::<Result<Vec<_>>>()?;
    let slid = basis
        .unitaries
        .iter()
        .zip(&daggers)
        .map(|(u, ud)| scale_mor(s, &snake(a, None)?.then(u)?)?.then(ud))
        .collect::<Result<Vec<_>>>()?;
    let cancelled = vec![scale_mor(s, &BaseMor::identity(a.clone()))?; n];
    let chain = [
        one_shot.clone(),
        stage(a, n, &with_u)?,
        stage(a, n, &slid)?,
        stage(a, n, &cancelled)?,
    ];
    let rhs = scale2(s, &pulled_cup(a, n)?)?;

    let norm = normalize_cell(&ca.hcomp(&c)?.hcomp(&d)?)?;
    let same = |f: &Cell2<C>, g: &Cell2<C>| -> Result<bool> { Ok(f.vcomp(&norm)? == g.vcomp(&norm)?) };
    let equation = same(&one_shot, &rhs)?;
    let mut chain_agrees = same(&chain[3], &rhs)?;
    for w in chain.windows(2) {
        chain_agrees &= same(&w[0], &w[1])?;
    }
    Ok(Teleportation {
        mu,
        mu_unitary,
        one_shot,
        chain,
        rhs,
        equation,
        chain_agrees,
    })
}

/// Whether the teleportation equation holds, one-shot and along the chain.
pub fn teleportation_check<C: Bimonoidal>(basis: &ErrorBasis<C>) -> Result<bool> {
    let t = teleportation(basis)?;
    Ok(t.equation && t.chain_agrees)
}

#[cfg(test)]
mod tests {
    use super::super::{inv_sqrt, pauli_basis};
    use super::*;
    use crate::{GaussRational, GaussVec, Rational};

    #[test]
    fn snake_is_identity_and_slides_unitaries() {
        let a: Expr<GaussVec> = ObjExpr::Base(3);
        assert!(snake::<GaussVec>(&a, None).unwrap().is_identity());
        let ps = super::super::paulis().unwrap();
        let q: Expr<GaussVec> = ObjExpr::Base(2);
        for u in &ps {
            assert_eq!(snake(&q, Some(u)).unwrap(), snake(&q, None).unwrap().then(u).unwrap());
        }
    }

    #[test]
    fn pauli_teleportation_with_one_half() {
        let t = teleportation(&pauli_basis(None).unwrap()).unwrap();
        assert!(t.equation);
        assert!(t.chain_agrees);
        assert!(!t.mu_unitary);
        assert!(!t.passed());
    }

    #[test]
    fn pauli_teleportation_with_unit_modulus_scalar() {
        let half = Rational::new(1, 2).unwrap();
        let t = teleportation(&pauli_basis(Some(GaussRational::new(half.clone(), half))).unwrap()).unwrap();
        assert!(t.passed());
        let m = t.rhs.entry(0, 0).payload();
        assert_eq!((m.rows(), m.cols()), (8, 2));
    }

    #[test]
    fn trivial_system() {
        let b = ErrorBasis::<GaussVec>::new(ObjExpr::Unit, vec![BaseMor::identity(ObjExpr::Unit)], inv_sqrt(1).unwrap()).unwrap();
        let t = teleportation(&b).unwrap();
        assert!(t.passed());
        assert!(teleportation_check(&b).unwrap());
    }
}
