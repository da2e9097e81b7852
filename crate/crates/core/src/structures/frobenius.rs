//! The classical bit: `I ⊕ I`, seen as the 1-cell `codiagonal(2)·diagonal(2)`,
//! with multiplication and comultiplication built from the zero cap and cup.

use std::fmt;

use super::{cap, codiagonal, codiagonal_adjunction, cup, diagonal, diagonal_adjunction, zero_cap, zero_cup};
use crate::base::{BaseMor, Bimonoidal, Capability, StructuralKind};
use crate::error::Result;
use crate::matc::{associator, associator_iso, left_unitor, left_unitor_iso, right_unitor, right_unitor_iso, Cell1, Cell2};

/// One named law and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct FrobeniusReport {
    pub checks: Vec<Check>,
    /// `comult ; mult`, rendered, and whether it is an identity. Reported, not required.
    pub special: Option<(String, bool)>,
}

impl FrobeniusReport {
    /// Whether every required law held.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool) {
        self.checks.push(Check {
            name,
            passed,
            detail: None,
        });
    }
}

impl fmt::Display for FrobeniusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            match &c.detail {
                Some(d) => writeln!(f, " ({d})")?,
                None => writeln!(f)?,
            }
        }
        if let Some((m, id)) = &self.special {
            writeln!(f, "INFO special: comult;mult = {m} (identity: {id})")?;
        }
        Ok(())
    }
}

/// The multiplication and comultiplication on `X = c·d`.
struct Bit<C: Bimonoidal> {
    x: Cell1<C>,
    mult: Cell2<C>,
    comult: Cell2<C>,
    unit: Cell2<C>,
    counit: Cell2<C>,
}

impl<C: Bimonoidal> Bit<C> {
    fn new() -> Result<Self> {
        let (c, d) = (codiagonal::<C>(2), diagonal::<C>(2));
        let x = c.hcomp(&d)?;
        // (c·d)·(c·d) → c·(d·(c·d)) → c·((d·c)·d) → c·(1·d) → c·d
        let mult = associator(&c, &d, &x)?
            .vcomp(&Cell2::whisker_left(&c, &associator_iso(&d, &c, &d)?.backward()?)?)?
            .vcomp(&Cell2::whisker_left(&c, &Cell2::whisker_right(&zero_cap(2)?, &d)?)?)?
            .vcomp(&Cell2::whisker_left(&c, &left_unitor(&d)?)?)?;
        let comult = Cell2::whisker_left(&c, &left_unitor_iso(&d)?.backward()?)?
            .vcomp(&Cell2::whisker_left(&c, &Cell2::whisker_right(&zero_cup(2)?, &d)?)?)?
            .vcomp(&Cell2::whisker_left(&c, &associator(&d, &c, &d)?)?)?
            .vcomp(&associator_iso(&c, &d, &x)?.backward()?)?;
        Ok(Bit {
            x,
            mult,
            comult,
            unit: cup(2)?,
            counit: cap(2)?,
        })
    }
}

/// Check the classical bit on `I ⊕ I`: the four zig-zags of the ambidextrous
/// adjunction between diagonal and codiagonal, (co)associativity, (co)unit
/// laws, both Frobenius laws and (co)commutativity.
pub fn frobenius_suite<C: Bimonoidal>() -> Result<FrobeniusReport> {
    let mut report = FrobeniusReport::default();
    let (l1, r1) = diagonal_adjunction::<C>(2)?.check()?;
    let (l2, r2) = codiagonal_adjunction::<C>(2)?.check()?;
    report.push("zig-zag diagonal (left)", l1);
    report.push("zig-zag diagonal (right)", r1);
    report.push("zig-zag codiagonal (left)", l2);
    report.push("zig-zag codiagonal (right)", r2);

    let b = Bit::<C>::new()?;
    let x = &b.x;
    let id = Cell2::id2(x);
    let m_x = Cell2::whisker_right(&b.mult, x)?;
    let x_m = Cell2::whisker_left(x, &b.mult)?;
    let d_x = Cell2::whisker_right(&b.comult, x)?;
    let x_d = Cell2::whisker_left(x, &b.comult)?;
    let assoc = associator(x, x, x)?;
    let unassoc = associator_iso(x, x, x)?.backward()?;

    report.push(
        "associativity",
        m_x.vcomp(&b.mult)? == assoc.vcomp(&x_m)?.vcomp(&b.mult)?,
    );
    report.push(
        "left unit",
        left_unitor_iso(x)?
            .backward()?
            .vcomp(&Cell2::whisker_right(&b.unit, x)?)?
            .vcomp(&b.mult)?
            == id,
    );
    report.push(
        "right unit",
        right_unitor_iso(x)?
            .backward()?
            .vcomp(&Cell2::whisker_left(x, &b.unit)?)?
            .vcomp(&b.mult)?
            == id,
    );
    report.push(
        "coassociativity",
        b.comult.vcomp(&d_x)?.vcomp(&assoc)? == b.comult.vcomp(&x_d)?,
    );
    report.push(
        "left counit",
        b.comult
            .vcomp(&Cell2::whisker_right(&b.counit, x)?)?
            .vcomp(&left_unitor(x)?)?
            == id,
    );
    report.push(
        "right counit",
        b.comult
            .vcomp(&Cell2::whisker_left(x, &b.counit)?)?
            .vcomp(&right_unitor(x)?)?
            == id,
    );
    let mid = b.mult.vcomp(&b.comult)?;
    report.push("frobenius (left)", d_x.vcomp(&assoc)?.vcomp(&x_m)? == mid);
    report.push("frobenius (right)", x_d.vcomp(&unassoc)?.vcomp(&m_x)? == mid);

    if C::CAPS.has(Capability::MultSymmetry) {
        let t = x.get(0, 0).clone();
        let sigma = Cell2::single(BaseMor::<C>::structural(StructuralKind::SymTimes, vec![t.clone(), t])?);
        report.push("commutativity", sigma.vcomp(&b.mult)? == b.mult);
        report.push("cocommutativity", b.comult.vcomp(&sigma)? == b.comult);
    } else {
        report.checks.push(Check {
            name: "commutativity",
            passed: false,
            detail: Some(format!("{} has no multiplicative symmetry", C::NAME)),
        });
    }

    let special = b.comult.vcomp(&b.mult)?;
    report.special = Some((format!("{:?}", special.entry(0, 0)), special.is_identity()));
    Ok(report)
}
