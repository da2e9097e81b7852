use std::fmt;

use crate::error::{Error, Result};

/// A scalar label: a variable, a numeral, or a sum or product of labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarExpr {
    Var(String),
    Lit(u64),
    Add(Box<ScalarExpr>, Box<ScalarExpr>),
    Mul(Box<ScalarExpr>, Box<ScalarExpr>),
}

impl ScalarExpr {
    pub fn var(name: &str) -> Self {
        ScalarExpr::Var(name.to_string())
    }

    pub fn sum(a: ScalarExpr, b: ScalarExpr) -> Self {
        ScalarExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn product(a: ScalarExpr, b: ScalarExpr) -> Self {
        ScalarExpr::Mul(Box::new(a), Box::new(b))
    }

    /// Variable names in order of first occurrence.
    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            ScalarExpr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            ScalarExpr::Lit(_) => {}
            ScalarExpr::Add(a, b) | ScalarExpr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            ScalarExpr::Var(v) => write!(f, "{v}"),
            ScalarExpr::Lit(n) => write!(f, "{n}"),
            ScalarExpr::Add(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 0)?;
                write!(f, "+")?;
                b.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            ScalarExpr::Mul(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, "*")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for ScalarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// A path diagram. Every term has `outputs` and `inputs` and denotes an
/// `outputs × inputs` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathTerm {
    Id(usize),
    /// Merge, `2 → 1`.
    Mul,
    /// `0 → 1`
    Unit,
    /// Copy, `1 → 2`.
    Comul,
    /// `1 → 0`
    Counit,
    Swap,
    Scalar(ScalarExpr),
    /// First, then second.
    Seq(Box<PathTerm>, Box<PathTerm>),
    /// Stacked, the first in front.
    Par(Box<PathTerm>, Box<PathTerm>),
}

impl PathTerm {
    pub fn scalar(name: &str) -> Self {
        PathTerm::Scalar(ScalarExpr::var(name))
    }

    /// `first`, then `second`; the inner arities must agree.
    pub fn seq(first: PathTerm, second: PathTerm) -> Result<Self> {
        let (out, _) = first.arity();
        let (_, inp) = second.arity();
        if out != inp {
            return Err(Error::ShapeMismatch(format!(
                "`{second}` takes {inp} input(s) but `{first}` gives {out}"
            )));
        }
        Ok(PathTerm::Seq(Box::new(first), Box::new(second)))
    }

    pub fn par(a: PathTerm, b: PathTerm) -> Self {
        PathTerm::Par(Box::new(a), Box::new(b))
    }

    /// Sequence a chain of terms, first to last.
    pub fn chain(terms: impl IntoIterator<Item = PathTerm>) -> Result<Self> {
        let mut it = terms.into_iter();
        let first = it.next().ok_or_else(|| Error::Invalid("empty chain".into()))?;
        it.try_fold(first, PathTerm::seq)
    }

    /// `(outputs, inputs)`
    pub fn arity(&self) -> (usize, usize) {
        match self {
            PathTerm::Id(k) => (*k, *k),
            PathTerm::Mul => (1, 2),
            PathTerm::Unit => (1, 0),
            PathTerm::Comul => (2, 1),
            PathTerm::Counit => (0, 1),
            PathTerm::Swap => (2, 2),
            PathTerm::Scalar(_) => (1, 1),
            PathTerm::Seq(a, b) => (b.arity().0, a.arity().1),
            PathTerm::Par(a, b) => {
                let ((m1, n1), (m2, n2)) = (a.arity(), b.arity());
                (m1 + m2, n1 + n2)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            PathTerm::Seq(a, b) | PathTerm::Par(a, b) => 1 + a.depth().max(b.depth()),
            _ => 0,
        }
    }

    /// Scalar variable names in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            PathTerm::Scalar(s) => s.vars(out),
            PathTerm::Seq(a, b) | PathTerm::Par(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            _ => {}
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        match self {
            PathTerm::Id(k) => write!(f, "id({k})"),
            PathTerm::Mul => write!(f, "mul"),
            PathTerm::Unit => write!(f, "unit"),
            PathTerm::Comul => write!(f, "comul"),
            PathTerm::Counit => write!(f, "counit"),
            PathTerm::Swap => write!(f, "swap"),
            PathTerm::Scalar(s) => write!(f, "scalar({s})"),
            PathTerm::Seq(a, b) => {
                if prec > 0 {
                    write!(f, "(")?;
                }
                b.fmt_prec(f, 0)?;
                write!(f, " . ")?;
                a.fmt_prec(f, 1)?;
                if prec > 0 {
                    write!(f, ")")?;
                }
                Ok(())
            }
            PathTerm::Par(a, b) => {
                if prec > 1 {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, 1)?;
                write!(f, " | ")?;
                b.fmt_prec(f, 2)?;
                if prec > 1 {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for PathTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}
