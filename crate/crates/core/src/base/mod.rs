//! The contract a base bimonoidal category fulfils, and the morphisms built on it.

mod expr;
mod iso;
mod structural;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

pub use expr::ObjExpr;
pub use iso::{normalize, permutation_iso, render_prod, render_sum, synthesize, Atom, Iso, IsoNode, NormalForm, Summand};
pub use structural::{Structural, StructuralKind};

use crate::error::{Error, Result};

/// Optional structure an instance may carry beyond a bimonoidal category.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Capability {
    MultSymmetry,
    Biproducts,
    Duals,
    Dagger,
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Capability::MultSymmetry => "mult_symmetry",
            Capability::Biproducts => "biproducts",
            Capability::Duals => "duals",
            Capability::Dagger => "dagger",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Capabilities {
    pub mult_symmetry: bool,
    pub biproducts: bool,
    pub duals: bool,
    pub dagger: bool,
}

impl Capabilities {
    pub const ALL: Capabilities = Capabilities {
        mult_symmetry: true,
        biproducts: true,
        duals: true,
        dagger: true,
    };

    pub fn has(&self, c: Capability) -> bool {
        match c {
            Capability::MultSymmetry => self.mult_symmetry,
            Capability::Biproducts => self.biproducts,
            Capability::Duals => self.duals,
            Capability::Dagger => self.dagger,
        }
    }
}

pub type Expr<C> = ObjExpr<<C as Bimonoidal>::Obj>;

/// A bimonoidal category, given statically.
///
/// Morphism payloads carry no types of their own; [`BaseMor`] pairs a payload
/// with its domain and codomain, and only its constructors reach these hooks.
pub trait Bimonoidal: 'static + Send + Sync + Sized {
    type Obj: Clone + Eq + Hash + fmt::Debug + fmt::Display + FromStr + Send + Sync + 'static;
    type Mor: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    /// Selector string used by the CLI and JSON.
    const NAME: &'static str;
    const CAPS: Capabilities;

    fn well_typed(dom: &Expr<Self>, cod: &Expr<Self>, mor: &Self::Mor) -> Result<()>;
    fn identity(a: &Expr<Self>) -> Self::Mor;
    /// `first` then `second`.
    fn compose(first: &Self::Mor, second: &Self::Mor) -> Self::Mor;
    fn oplus(f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn otimes(f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn structural(s: &Structural<Self::Obj>) -> Self::Mor;

    fn eval_iso(iso: &Iso<Self::Obj>) -> Self::Mor {
        match iso.node() {
            IsoNode::Id => Self::identity(iso.dom()),
            IsoNode::Component(s) => Self::structural(s),
            IsoNode::Then(a, b) => Self::compose(&Self::eval_iso(a), &Self::eval_iso(b)),
            IsoNode::Sum(a, b) => Self::oplus(&Self::eval_iso(a), &Self::eval_iso(b)),
            IsoNode::Prod(a, b) => Self::otimes(&Self::eval_iso(a), &Self::eval_iso(b)),
        }
    }

    fn dagger(_f: &Self::Mor) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Dagger))
    }

    fn zero(_a: &Expr<Self>, _b: &Expr<Self>) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Biproducts))
    }

    /// The codiagonal `a⊕a → a`.
    fn fold(_a: &Expr<Self>) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Biproducts))
    }

    /// The diagonal `a → a⊕a`.
    fn copy(_a: &Expr<Self>) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Biproducts))
    }

    /// `a⊗dual(a) → I`
    fn dual_counit(_a: &Expr<Self>) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Duals))
    }

    /// `I → dual(a)⊗a`
    fn dual_unit(_a: &Expr<Self>) -> Result<Self::Mor> {
        Err(missing::<Self>(Capability::Duals))
    }

    fn mor_to_json(_f: &Self::Mor) -> serde_json::Value {
        serde_json::Value::Null
    }

    fn mor_from_json(v: &serde_json::Value, dom: &Expr<Self>, cod: &Expr<Self>) -> Result<Self::Mor>;
}

pub fn missing<C: Bimonoidal>(capability: Capability) -> Error {
    Error::CapabilityMissing {
        instance: C::NAME,
        capability,
    }
}

pub fn require<C: Bimonoidal>(capability: Capability) -> Result<()> {
    if C::CAPS.has(capability) {
        Ok(())
    } else {
        Err(missing::<C>(capability))
    }
}

/// A base morphism together with its domain and codomain.
pub struct BaseMor<C: Bimonoidal> {
    dom: Expr<C>,
    cod: Expr<C>,
    payload: C::Mor,
}

impl<C: Bimonoidal> Clone for BaseMor<C> {
    fn clone(&self) -> Self {
        BaseMor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            payload: self.payload.clone(),
        }
    }
}

impl<C: Bimonoidal> PartialEq for BaseMor<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.payload == other.payload
    }
}

impl<C: Bimonoidal> fmt::Debug for BaseMor<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} : {} -> {}", self.payload, self.dom, self.cod)
    }
}

impl<C: Bimonoidal> BaseMor<C> {
    pub fn new(dom: Expr<C>, cod: Expr<C>, payload: C::Mor) -> Result<Self> {
        C::well_typed(&dom, &cod, &payload)?;
        Ok(BaseMor { dom, cod, payload })
    }

    pub fn dom(&self) -> &Expr<C> {
        &self.dom
    }

    pub fn cod(&self) -> &Expr<C> {
        &self.cod
    }

    pub fn payload(&self) -> &C::Mor {
        &self.payload
    }

    pub fn identity(a: Expr<C>) -> Self {
        let payload = C::identity(&a);
        BaseMor {
            dom: a.clone(),
            cod: a,
            payload,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.payload == C::identity(&self.dom)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &BaseMor<C>) -> Result<Self> {
        if self.cod != next.dom {
            return Err(Error::TypeMismatch(format!(
                "cannot compose a morphism into `{}` with one out of `{}`",
                self.cod, next.dom
            )));
        }
        Ok(BaseMor {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            payload: C::compose(&self.payload, &next.payload),
        })
    }

    pub fn oplus(&self, other: &BaseMor<C>) -> Self {
        BaseMor {
            dom: ObjExpr::sum(self.dom.clone(), other.dom.clone()),
            cod: ObjExpr::sum(self.cod.clone(), other.cod.clone()),
            payload: C::oplus(&self.payload, &other.payload),
        }
    }

    pub fn otimes(&self, other: &BaseMor<C>) -> Self {
        BaseMor {
            dom: ObjExpr::prod(self.dom.clone(), other.dom.clone()),
            cod: ObjExpr::prod(self.cod.clone(), other.cod.clone()),
            payload: C::otimes(&self.payload, &other.payload),
        }
    }

    pub fn dagger(&self) -> Result<Self> {
        require::<C>(Capability::Dagger)?;
        Ok(BaseMor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            payload: C::dagger(&self.payload)?,
        })
    }

    pub fn zero(a: Expr<C>, b: Expr<C>) -> Result<Self> {
        let payload = C::zero(&a, &b)?;
        Ok(BaseMor {
            dom: a,
            cod: b,
            payload,
        })
    }

    /// The codiagonal `a⊕a → a`.
    pub fn fold(a: Expr<C>) -> Result<Self> {
        let payload = C::fold(&a)?;
        Ok(BaseMor {
            dom: ObjExpr::sum(a.clone(), a.clone()),
            cod: a,
            payload,
        })
    }

    /// The diagonal `a → a⊕a`.
    pub fn copy(a: Expr<C>) -> Result<Self> {
        let payload = C::copy(&a)?;
        Ok(BaseMor {
            dom: a.clone(),
            cod: ObjExpr::sum(a.clone(), a),
            payload,
        })
    }

    /// `ε_a : a⊗dual(a) → I`
    pub fn dual_counit(a: Expr<C>) -> Result<Self> {
        require::<C>(Capability::Duals)?;
        let payload = C::dual_counit(&a)?;
        Ok(BaseMor {
            dom: ObjExpr::prod(a.clone(), ObjExpr::dual(a)),
            cod: ObjExpr::Unit,
            payload,
        })
    }

    /// `η_a : I → dual(a)⊗a`
    pub fn dual_unit(a: Expr<C>) -> Result<Self> {
        require::<C>(Capability::Duals)?;
        let payload = C::dual_unit(&a)?;
        Ok(BaseMor {
            dom: ObjExpr::Unit,
            cod: ObjExpr::prod(ObjExpr::dual(a.clone()), a),
            payload,
        })
    }

    /// The named structural component at the given objects.
    pub fn structural(kind: StructuralKind, args: Vec<Expr<C>>) -> Result<Self> {
        let s = Structural::new(kind, args)?;
        if kind == StructuralKind::SymTimes {
            require::<C>(Capability::MultSymmetry)?;
        }
        Ok(BaseMor::from_iso(&Iso::component(s)))
    }

    /// Evaluate a symbolic structural isomorphism.
    pub fn from_iso(iso: &Iso<C::Obj>) -> Self {
        BaseMor {
            dom: iso.dom().clone(),
            cod: iso.cod().clone(),
            payload: C::eval_iso(iso),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dom": self.dom.to_string(),
            "cod": self.cod.to_string(),
            "mor": C::mor_to_json(&self.payload),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let field = |k: &str| -> Result<Expr<C>> {
            v.get(k)
                .and_then(|s| s.as_str())
                .ok_or_else(|| Error::Json(format!("missing string field `{k}`")))?
                .parse()
        };
        let (dom, cod) = (field("dom")?, field("cod")?);
        let payload = C::mor_from_json(v.get("mor").unwrap_or(&serde_json::Value::Null), &dom, &cod)?;
        BaseMor::new(dom, cod, payload)
    }
}

/// The canonical structural isomorphism `src → dst`.
pub fn synth_iso<C: Bimonoidal>(src: &Expr<C>, dst: &Expr<C>) -> Result<BaseMor<C>> {
    Ok(BaseMor::from_iso(&synthesize(src, dst)?))
}

/// Synthesize over expressions in tagged leaves, then substitute and evaluate.
///
/// Tagging keeps leaves that happen to be equal apart, so the resulting
/// 2-cell components are natural in each tagged position.
pub fn synth_iso_tagged<C, T>(
    src: &ObjExpr<T>,
    dst: &ObjExpr<T>,
    assign: &impl Fn(&T) -> Expr<C>,
) -> Result<BaseMor<C>>
where
    C: Bimonoidal,
    T: Clone + Eq + fmt::Display,
{
    let iso = synthesize(src, dst)?;
    Ok(BaseMor::from_iso(&iso.subst(assign)))
}
