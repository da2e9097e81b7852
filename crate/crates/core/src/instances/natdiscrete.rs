use serde_json::Value;

use crate::base::{Bimonoidal, Capabilities, Expr, Structural};
use crate::error::{Error, Result};

/// The discrete category on the natural numbers, a strict rig category.
pub struct NatDiscrete;

pub fn value_of(e: &Expr<NatDiscrete>) -> Result<u64> {
    let overflow = || Error::Invalid("natural number overflow".into());
    e.evaluate(
        &|| Some(0u64),
        &|| Some(1),
        &|n: &u64| Ok(Some(*n)),
        &|_| Err(Error::CapabilityMissing {
            instance: NatDiscrete::NAME,
            capability: crate::base::Capability::Duals,
        }),
        &|a, b| a?.checked_add(b?),
        &|a, b| a?.checked_mul(b?),
    )?
    .ok_or_else(overflow)
}

impl Bimonoidal for NatDiscrete {
    type Obj = u64;
    type Mor = ();

    const NAME: &'static str = "natdiscrete";
    const CAPS: Capabilities = Capabilities {
        mult_symmetry: true,
        biproducts: false,
        duals: false,
        dagger: false,
    };

    fn well_typed(dom: &Expr<Self>, cod: &Expr<Self>, _: &()) -> Result<()> {
        if value_of(dom)? == value_of(cod)? {
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

    fn structural(_: &Structural<u64>) {}

    fn mor_from_json(_: &Value, _: &Expr<Self>, _: &Expr<Self>) -> Result<()> {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{synth_iso, BaseMor, StructuralKind};

    fn e(s: &str) -> Expr<NatDiscrete> {
        s.parse().unwrap()
    }

    #[test]
    fn only_identities() {
        assert!(BaseMor::<NatDiscrete>::new(e("#2 (+) #3"), e("#5"), ()).is_ok());
        assert!(BaseMor::<NatDiscrete>::new(e("#2"), e("#3"), ()).is_err());
    }

    #[test]
    fn structural_maps_are_identities() {
        let f = BaseMor::<NatDiscrete>::structural(StructuralKind::DistL, vec![e("#2"), e("#1"), e("#4")]).unwrap();
        assert_eq!(value_of(f.dom()).unwrap(), value_of(f.cod()).unwrap());
        let g = synth_iso::<NatDiscrete>(&e("(#2 (+) #3) (x) #4"), &e("#3 (x) #4 (+) #2 (x) #4")).unwrap();
        assert_eq!(g.payload(), &());
    }

    #[test]
    fn overflow_is_reported() {
        assert!(value_of(&e("#18446744073709551615 (+) I")).is_err());
    }
}
