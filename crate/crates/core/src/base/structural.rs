use std::fmt;
use std::str::FromStr;

use super::expr::ObjExpr;
use crate::error::{Error, Result};

/// The twelve families of structural isomorphisms of a bimonoidal category.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum StructuralKind {
    /// `(a⊕b)⊕c → a⊕(b⊕c)`
    AssocPlus,
    /// `O⊕a → a`
    LunitPlus,
    /// `a⊕O → a`
    RunitPlus,
    /// `a⊕b → b⊕a`
    SymPlus,
    /// `(a⊗b)⊗c → a⊗(b⊗c)`
    AssocTimes,
    /// `I⊗a → a`
    LunitTimes,
    /// `a⊗I → a`
    RunitTimes,
    /// `a⊗b → b⊗a`
    SymTimes,
    /// `a⊗(b⊕c) → (a⊗b)⊕(a⊗c)`
    DistL,
    /// `(a⊕b)⊗c → (a⊗c)⊕(b⊗c)`
    DistR,
    /// `O⊗a → O`
    NullL,
    /// `a⊗O → O`
    NullR,
}

impl StructuralKind {
    pub const ALL: [StructuralKind; 12] = [
        StructuralKind::AssocPlus,
        StructuralKind::LunitPlus,
        StructuralKind::RunitPlus,
        StructuralKind::SymPlus,
        StructuralKind::AssocTimes,
        StructuralKind::LunitTimes,
        StructuralKind::RunitTimes,
        StructuralKind::SymTimes,
        StructuralKind::DistL,
        StructuralKind::DistR,
        StructuralKind::NullL,
        StructuralKind::NullR,
    ];

    pub fn arity(self) -> usize {
        use StructuralKind::*;
        match self {
            AssocPlus | AssocTimes | DistL | DistR => 3,
            SymPlus | SymTimes => 2,
            LunitPlus | RunitPlus | LunitTimes | RunitTimes | NullL | NullR => 1,
        }
    }

    pub fn name(self) -> &'static str {
        use StructuralKind::*;
        match self {
            AssocPlus => "assoc+",
            LunitPlus => "lunit+",
            RunitPlus => "runit+",
            SymPlus => "sym+",
            AssocTimes => "assocx",
            LunitTimes => "lunitx",
            RunitTimes => "runitx",
            SymTimes => "symx",
            DistL => "distl",
            DistR => "distr",
            NullL => "nulll",
            NullR => "nullr",
        }
    }
}

impl fmt::Display for StructuralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StructuralKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StructuralKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown structural family `{s}`")))
    }
}

/// One component of a structural natural isomorphism, possibly inverted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Structural<L> {
    pub kind: StructuralKind,
    pub inverse: bool,
    pub args: Vec<ObjExpr<L>>,
}

impl<L: Clone> Structural<L> {
    pub fn new(kind: StructuralKind, args: Vec<ObjExpr<L>>) -> Result<Self> {
        if args.len() != kind.arity() {
            return Err(Error::Arity {
                name: kind.name(),
                expected: kind.arity(),
                got: args.len(),
            });
        }
        Ok(Structural {
            kind,
            inverse: false,
            args,
        })
    }

    pub(crate) fn of(kind: StructuralKind, args: Vec<ObjExpr<L>>) -> Self {
        debug_assert_eq!(args.len(), kind.arity());
        Structural {
            kind,
            inverse: false,
            args,
        }
    }

    pub fn inverted(mut self) -> Self {
        self.inverse = !self.inverse;
        self
    }

    /// Domain and codomain of the forward component.
    pub fn forward_ends(&self) -> (ObjExpr<L>, ObjExpr<L>) {
        use ObjExpr as E;
        use StructuralKind::*;
        let a = || self.args[0].clone();
        let b = || self.args[1].clone();
        let c = || self.args[2].clone();
        match self.kind {
            AssocPlus => (E::sum(E::sum(a(), b()), c()), E::sum(a(), E::sum(b(), c()))),
            LunitPlus => (E::sum(E::Zero, a()), a()),
            RunitPlus => (E::sum(a(), E::Zero), a()),
            SymPlus => (E::sum(a(), b()), E::sum(b(), a())),
            AssocTimes => (
                E::prod(E::prod(a(), b()), c()),
                E::prod(a(), E::prod(b(), c())),
            ),
            LunitTimes => (E::prod(E::Unit, a()), a()),
            RunitTimes => (E::prod(a(), E::Unit), a()),
            SymTimes => (E::prod(a(), b()), E::prod(b(), a())),
            DistL => (
                E::prod(a(), E::sum(b(), c())),
                E::sum(E::prod(a(), b()), E::prod(a(), c())),
            ),
            DistR => (
                E::prod(E::sum(a(), b()), c()),
                E::sum(E::prod(a(), c()), E::prod(b(), c())),
            ),
            NullL => (E::prod(E::Zero, a()), E::Zero),
            NullR => (E::prod(a(), E::Zero), E::Zero),
        }
    }

    pub fn ends(&self) -> (ObjExpr<L>, ObjExpr<L>) {
        let (d, c) = self.forward_ends();
        if self.inverse {
            (c, d)
        } else {
            (d, c)
        }
    }

    pub fn subst<M: Clone>(&self, f: &impl Fn(&L) -> ObjExpr<M>) -> Structural<M> {
        Structural {
            kind: self.kind,
            inverse: self.inverse,
            args: self.args.iter().map(|a| a.subst(f)).collect(),
        }
    }
}

impl<L: fmt::Display> fmt::Debug for Structural<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.inverse {
            write!(f, "⁻¹")?;
        }
        write!(f, "(")?;
        for (k, a) in self.args.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_is_checked() {
        let err = Structural::<String>::new(StructuralKind::DistL, vec![ObjExpr::Unit]).unwrap_err();
        assert_eq!(
            err,
            Error::Arity {
                name: "distl",
                expected: 3,
                got: 1
            }
        );
    }

    #[test]
    fn ends_follow_the_formulas() {
        let x = |s: &str| ObjExpr::Base(s.to_string());
        let s = Structural::new(StructuralKind::DistL, vec![x("a"), x("b"), x("c")]).unwrap();
        let (d, c) = s.ends();
        assert_eq!(d.to_string(), "#a (x) (#b (+) #c)");
        assert_eq!(c.to_string(), "#a (x) #b (+) #a (x) #c");
        let (d2, c2) = s.inverted().ends();
        assert_eq!((d2, c2), (c, d));
    }

    #[test]
    fn names_parse_back() {
        for k in StructuralKind::ALL {
            assert_eq!(k.name().parse::<StructuralKind>().unwrap(), k);
        }
    }
}
