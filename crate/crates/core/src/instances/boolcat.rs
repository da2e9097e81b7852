use serde_json::Value;

use crate::base::{Bimonoidal, BaseMor, Capabilities, Expr, ObjExpr, Structural};
use crate::error::{Error, Result};

/// The poset of truth values `false ≤ true`.
///
/// `⊕` is disjunction and `⊗` conjunction. There is at most one morphism
/// between two objects, so a morphism carries no data beyond its ends.
pub struct BoolCat;

/// Truth value of an expression; duals are not available here.
pub fn truth(e: &Expr<BoolCat>) -> Result<bool> {
    e.evaluate(
        &|| false,
        &|| true,
        &|b: &bool| Ok(*b),
        &|_| Err(Error::CapabilityMissing {
            instance: BoolCat::NAME,
            capability: crate::base::Capability::Duals,
        }),
        &|a, b| a || b,
        &|a, b| a && b,
    )
}

/// The unique morphism `a → b`, if there is one.
pub fn bool_hom(a: bool, b: bool) -> Option<BaseMor<BoolCat>> {
    BaseMor::new(ObjExpr::Base(a), ObjExpr::Base(b), ()).ok()
}

impl Bimonoidal for BoolCat {
    type Obj = bool;
    type Mor = ();

    const NAME: &'static str = "bool";
    const CAPS: Capabilities = Capabilities {
        mult_symmetry: true,
        biproducts: false,
        duals: false,
        dagger: false,
    };

    fn well_typed(dom: &Expr<Self>, cod: &Expr<Self>, _: &()) -> Result<()> {
        if truth(dom)? <= truth(cod)? {
            Ok(())
        } else {
            Err(Error::NoSuchMorphism {
                instance: Self::NAME,
                dom: dom.to_string(),
                cod: cod.to_string(),
            })
        }
    }

    fn identity(_: &Expr<Self>) {}

    fn compose(_: &(), _: &()) {}

    fn oplus(_: &(), _: &()) {}

    fn otimes(_: &(), _: &()) {}

    fn structural(_: &Structural<bool>) {}

    fn mor_to_json(_: &()) -> Value {
        Value::Null
    }

    fn mor_from_json(_: &Value, _: &Expr<Self>, _: &Expr<Self>) -> Result<()> {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::synth_iso;

    #[test]
    fn hom_sets_follow_the_order() {
        assert!(bool_hom(false, true).is_some());
        assert!(bool_hom(true, false).is_none());
        assert!(bool_hom(true, true).unwrap().is_identity());
        assert!(bool_hom(false, false).is_some());
    }

    #[test]
    fn composition() {
        let f = bool_hom(false, true).unwrap();
        let g = bool_hom(true, true).unwrap();
        assert_eq!(f.then(&g).unwrap(), f);
        assert!(g.then(&f).is_err());
    }

    #[test]
    fn structural_maps_are_identities() {
        let a: Expr<BoolCat> = "#true (x) (#false (+) I)".parse().unwrap();
        let b: Expr<BoolCat> = "#true (x) #false (+) #true".parse().unwrap();
        assert!(synth_iso::<BoolCat>(&a, &b).is_ok());
        assert!(BaseMor::<BoolCat>::dual_unit(ObjExpr::Unit).is_err());
    }
}
