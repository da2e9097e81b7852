//! ```text
//! term   := par ("." par)*          s . t  is  t, then s
//! par    := atom ("|" atom)*
//! atom   := "id(" nat ")" | "mul" | "unit" | "comul" | "counit" | "swap"
//!         | "scalar(" sexpr ")" | "(" term ")"
//! sexpr  := sprod ("+" sprod)*
//! sprod  := satom ("*" satom)*
//! satom  := name | nat | "(" sexpr ")"
//! ```

use std::str::FromStr;

use super::term::{PathTerm, ScalarExpr};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<PathTerm> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

impl FromStr for PathTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn rest(&self) -> &'s str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
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

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{tok}`")))
        }
    }

    fn term(&mut self) -> Result<PathTerm> {
        let mut acc = self.par()?;
        loop {
            self.skip_ws();
            let at = self.pos;
            if !self.eat(".") {
                return Ok(acc);
            }
            let next = self.par()?;
            acc = PathTerm::seq(next, acc).map_err(|e| Error::Syntax {
                pos: at,
                msg: e.to_string(),
            })?;
        }
    }

    fn par(&mut self) -> Result<PathTerm> {
        let mut acc = self.atom()?;
        while self.eat("|") {
            acc = PathTerm::par(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn word(&mut self) -> &'s str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        let w = self.word();
        w.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("expected a natural number, found `{w}`"),
        })
    }

    fn atom(&mut self) -> Result<PathTerm> {
        if self.eat("(") {
            let t = self.term()?;
            self.expect(")")?;
            return Ok(t);
        }
        self.skip_ws();
        let start = self.pos;
        let t = match self.word() {
            "id" => {
                self.expect("(")?;
                let k = self.nat()?;
                self.expect(")")?;
                PathTerm::Id(k as usize)
            }
            "mul" => PathTerm::Mul,
            "unit" => PathTerm::Unit,
            "comul" => PathTerm::Comul,
            "counit" => PathTerm::Counit,
            "swap" => PathTerm::Swap,
            "scalar" => {
                self.expect("(")?;
                let s = self.sexpr()?;
                self.expect(")")?;
                PathTerm::Scalar(s)
            }
            "" => return Err(self.error("expected a term")),
            w => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unknown generator `{w}`"),
                })
            }
        };
        Ok(t)
    }

    fn sexpr(&mut self) -> Result<ScalarExpr> {
        let mut acc = self.sprod()?;
        while self.eat("+") {
            acc = ScalarExpr::sum(acc, self.sprod()?);
        }
        Ok(acc)
    }

    fn sprod(&mut self) -> Result<ScalarExpr> {
        let mut acc = self.satom()?;
        while self.eat("*") {
            acc = ScalarExpr::product(acc, self.satom()?);
        }
        Ok(acc)
    }

    fn satom(&mut self) -> Result<ScalarExpr> {
        if self.eat("(") {
            let s = self.sexpr()?;
            self.expect(")")?;
            return Ok(s);
        }
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        let w = &rest[..len];
        self.pos += len;
        match w.chars().next() {
            None => Err(self.error("expected a scalar")),
            Some(c) if c.is_ascii_digit() => w.parse().map(ScalarExpr::Lit).map_err(|_| Error::Syntax {
                pos: start,
                msg: format!("bad numeral `{w}`"),
            }),
            Some(_) => Ok(ScalarExpr::Var(w.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dot_reads_right_to_left() {
        let t = parse("mul . comul").unwrap();
        assert_eq!(t, PathTerm::seq(PathTerm::Comul, PathTerm::Mul).unwrap());
        assert_eq!(t.arity(), (1, 1));
        assert_eq!(parse("comul . mul").unwrap().arity(), (2, 2));
    }

    #[test]
    fn bar_binds_tighter_than_dot() {
        let t = parse("mul . scalar(2) | scalar(3) . comul").unwrap();
        assert_eq!(t, parse("mul . (scalar(2) | scalar(3)) . comul").unwrap());
        assert_eq!(t.arity(), (1, 1));
    }

    #[test]
    fn scalar_expressions() {
        let t = parse("scalar(r + s*(t+1))").unwrap();
        assert_eq!(t.to_string(), "scalar(r+s*(t+1))");
        assert_eq!(t.vars(), vec!["r", "s", "t"]);
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(parse("mul . mul"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("mul . frob"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse("id(x)"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(mul"), Err(Error::Syntax { .. })));
        assert!(parse("").is_err());
        assert!(parse("mul mul").is_err());
    }

    fn leaf() -> impl Strategy<Value = PathTerm> {
        prop_oneof![
            (0usize..3).prop_map(PathTerm::Id),
            Just(PathTerm::Mul),
            Just(PathTerm::Unit),
            Just(PathTerm::Comul),
            Just(PathTerm::Counit),
            Just(PathTerm::Swap),
            "[a-c]".prop_map(|v| PathTerm::scalar(&v)),
            (0u64..4).prop_map(|n| PathTerm::Scalar(ScalarExpr::Lit(n))),
        ]
    }

    fn term() -> impl Strategy<Value = PathTerm> {
        leaf().prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| PathTerm::par(a, b)),
                (inner.clone(), inner).prop_filter_map("arity", |(a, b)| PathTerm::seq(a, b).ok()),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(t in term()) {
            prop_assert_eq!(parse(&t.to_string()).unwrap(), t);
        }
    }
}
