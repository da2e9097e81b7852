use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A formal ⊕/⊗ expression over base objects of type `L`.
///
/// Equality is structural: `I (x) #a` and `#a` are different expressions,
/// related by an explicit structural isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjExpr<L> {
    /// The additive unit `O`.
    Zero,
    /// The multiplicative unit `I`.
    Unit,
    Base(L),
    Dual(Box<ObjExpr<L>>),
    Sum(Box<ObjExpr<L>>, Box<ObjExpr<L>>),
    Prod(Box<ObjExpr<L>>, Box<ObjExpr<L>>),
}

impl<L> ObjExpr<L> {
    pub fn base(x: L) -> Self {
        ObjExpr::Base(x)
    }

    pub fn sum(a: Self, b: Self) -> Self {
        ObjExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: Self, b: Self) -> Self {
        ObjExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn dual(a: Self) -> Self {
        ObjExpr::Dual(Box::new(a))
    }

    /// Left-nested sum; the empty sum is `O` and a singleton is itself.
    pub fn sum_all(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(ObjExpr::sum)
            .unwrap_or(ObjExpr::Zero)
    }

    /// Left-nested product; the empty product is `I` and a singleton is itself.
    pub fn prod_all(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(ObjExpr::prod)
            .unwrap_or(ObjExpr::Unit)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ObjExpr::Zero)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, ObjExpr::Unit)
    }

    /// Replace every base leaf by an expression.
    pub fn subst<M>(&self, f: &impl Fn(&L) -> ObjExpr<M>) -> ObjExpr<M> {
        match self {
            ObjExpr::Zero => ObjExpr::Zero,
            ObjExpr::Unit => ObjExpr::Unit,
            ObjExpr::Base(x) => f(x),
            ObjExpr::Dual(a) => ObjExpr::dual(a.subst(f)),
            ObjExpr::Sum(a, b) => ObjExpr::sum(a.subst(f), b.subst(f)),
            ObjExpr::Prod(a, b) => ObjExpr::prod(a.subst(f), b.subst(f)),
        }
    }

    /// Fold the expression into a rig-like carrier.
    pub fn evaluate<T>(
        &self,
        zero: &impl Fn() -> T,
        one: &impl Fn() -> T,
        leaf: &impl Fn(&L) -> Result<T>,
        dual: &impl Fn(T) -> Result<T>,
        add: &impl Fn(T, T) -> T,
        mul: &impl Fn(T, T) -> T,
    ) -> Result<T> {
        let rec = |e: &ObjExpr<L>| e.evaluate(zero, one, leaf, dual, add, mul);
        Ok(match self {
            ObjExpr::Zero => zero(),
            ObjExpr::Unit => one(),
            ObjExpr::Base(x) => leaf(x)?,
            ObjExpr::Dual(a) => dual(rec(a)?)?,
            ObjExpr::Sum(a, b) => add(rec(a)?, rec(b)?),
            ObjExpr::Prod(a, b) => mul(rec(a)?, rec(b)?),
        })
    }

    /// Base leaves in left-to-right order, including those under duals.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        match self {
            ObjExpr::Zero | ObjExpr::Unit => {}
            ObjExpr::Base(x) => out.push(x),
            ObjExpr::Dual(a) => a.collect_leaves(out),
            ObjExpr::Sum(a, b) | ObjExpr::Prod(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            ObjExpr::Zero | ObjExpr::Unit | ObjExpr::Base(_) => 1,
            ObjExpr::Dual(a) => 1 + a.size(),
            ObjExpr::Sum(a, b) | ObjExpr::Prod(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl<L: fmt::Display> ObjExpr<L> {
    // 0: sum position, 1: product position, 2: right operand of a product
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            ObjExpr::Zero => write!(f, "O"),
            ObjExpr::Unit => write!(f, "I"),
            ObjExpr::Base(x) => write!(f, "#{x}"),
            ObjExpr::Dual(a) => {
                write!(f, "dual(")?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")
            }
            ObjExpr::Sum(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, " (+) ")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            ObjExpr::Prod(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, " (x) ")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl<L: fmt::Display> fmt::Display for ObjExpr<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl<L: fmt::Display> fmt::Debug for ObjExpr<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L: FromStr> FromStr for ObjExpr<L> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.sum()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

/// Recursive-descent parser for `O`, `I`, `#name`, `a (+) b`, `a (x) b`, `dual(a)`.
struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn rest(&self) -> &'s str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn sum<L: FromStr>(&mut self) -> Result<ObjExpr<L>> {
        let mut acc = self.prod()?;
        while self.eat("(+)") {
            acc = ObjExpr::sum(acc, self.prod()?);
        }
        Ok(acc)
    }

    fn prod<L: FromStr>(&mut self) -> Result<ObjExpr<L>> {
        let mut acc = self.atom()?;
        while self.eat("(x)") {
            acc = ObjExpr::prod(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom<L: FromStr>(&mut self) -> Result<ObjExpr<L>> {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with("(+)") || r.starts_with("(x)") {
            return Err(self.error("operator without left operand"));
        }
        if self.eat("dual(") {
            let inner = self.sum()?;
            if !self.eat(")") {
                return Err(self.error("expected `)` closing dual("));
            }
            return Ok(ObjExpr::dual(inner));
        }
        if self.eat("(") {
            let inner = self.sum()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        if self.eat("#") {
            let start = self.pos;
            let len = self
                .rest()
                .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
                .unwrap_or(self.rest().len());
            if len == 0 {
                return Err(self.error("empty base object name"));
            }
            self.pos += len;
            return self.src[start..self.pos]
                .parse()
                .map(ObjExpr::Base)
                .map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("unknown base object `{}`", &self.src[start..self.pos]),
                });
        }
        let word_end = r
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(r.len());
        match &r[..word_end] {
            "O" => {
                self.pos += 1;
                Ok(ObjExpr::Zero)
            }
            "I" => {
                self.pos += 1;
                Ok(ObjExpr::Unit)
            }
            "" if r.is_empty() => Err(self.error("unexpected end of input")),
            _ => Err(self.error("expected O, I, #name, dual( or (")),
        }
    }
}
