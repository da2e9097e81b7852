use super::parser::parse;
use super::term::PathTerm;
use crate::error::Result;

/// A named equation between two path terms of equal arity.
#[derive(Clone, Debug, PartialEq)]
pub struct Axiom {
    pub name: String,
    pub lhs: PathTerm,
    pub rhs: PathTerm,
    /// Scalar variables, in order of first occurrence.
    pub vars: Vec<String>,
}

impl Axiom {
    fn new(name: &str, lhs: &str, rhs: &str) -> Result<Self> {
        let (lhs, rhs) = (parse(lhs)?, parse(rhs)?);
        let mut vars = lhs.vars();
        for v in rhs.vars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        Ok(Axiom {
            name: name.to_string(),
            lhs,
            rhs,
            vars,
        })
    }
}

/// The equations of the path calculus, as `(name, lhs, rhs)`.
const NAMED: [(&str, &str, &str); 20] = [
    ("l-unit", "mul . (unit | id(1))", "id(1)"),
    ("r-unit", "mul . (id(1) | unit)", "id(1)"),
    ("assoc", "mul . (mul | id(1))", "mul . (id(1) | mul)"),
    ("comm", "mul . swap", "mul"),
    ("l-counit", "(counit | id(1)) . comul", "id(1)"),
    ("r-counit", "(id(1) | counit) . comul", "id(1)"),
    ("coassoc", "(comul | id(1)) . comul", "(id(1) | comul) . comul"),
    ("cocomm", "swap . comul", "comul"),
    (
        "bimonoid",
        "comul . mul",
        "(mul | mul) . (id(1) | swap | id(1)) . (comul | comul)",
    ),
    ("comul-unit", "comul . unit", "unit | unit"),
    ("counit-mul", "counit . mul", "counit | counit"),
    ("counit-unit", "counit . unit", "id(0)"),
    ("unit-hom", "scalar(r) . unit", "unit"),
    ("mul-hom", "scalar(r) . mul", "mul . (scalar(r) | scalar(r))"),
    ("counit-hom", "counit . scalar(r)", "counit"),
    ("comul-hom", "comul . scalar(r)", "(scalar(r) | scalar(r)) . comul"),
    ("add", "mul . (scalar(r) | scalar(s)) . comul", "scalar(r+s)"),
    ("zero", "unit . counit", "scalar(0)"),
    ("mul", "scalar(r) . scalar(s)", "scalar(r*s)"),
    ("one", "scalar(1)", "id(1)"),
];

/// `σ_{1,n}`: the first wire moved past the next `n`, from swaps.
fn cross(n: usize) -> String {
    match n {
        0 => "id(1)".to_string(),
        1 => "swap".to_string(),
        _ => {
            let mut stages = vec!["swap | id(".to_string() + &(n - 1).to_string() + ")"];
            for k in 1..n {
                stages.push(format!("id({k}) | swap | id({})", n - 1 - k));
            }
            stages.reverse();
            stages.join(" . ")
        }
    }
}

/// Naturality of the swap against every generator, and involutivity.
fn swap_laws() -> Vec<(String, String, String)> {
    let gens = [
        ("mul", "mul", 1, 2),
        ("unit", "unit", 1, 0),
        ("comul", "comul", 2, 1),
        ("counit", "counit", 0, 1),
        ("scalar", "scalar(r)", 1, 1),
        ("swap", "swap", 2, 2),
    ];
    let mut out: Vec<_> = gens
        .iter()
        .map(|(name, g, m, n)| {
            (
                format!("swap-nat-{name}"),
                format!("({g} | id(1)) . ({})", cross(*n)),
                format!("({}) . (id(1) | {g})", cross(*m)),
            )
        })
        .collect();
    out.push(("swap-invol".into(), "swap . swap".into(), "id(2)".into()));
    out
}

/// The twenty named equations followed by the swap laws.
pub fn axiom_list() -> Vec<Axiom> {
    NAMED
        .iter()
        .map(|(n, l, r)| Axiom::new(n, l, r))
        .chain(swap_laws().iter().map(|(n, l, r)| Axiom::new(n, l, r)))
        .collect::<Result<_>>()
        .expect("the built-in equations parse")
}

pub fn axiom(name: &str) -> Option<Axiom> {
    axiom_list().into_iter().find(|a| a.name == name)
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use num_bigint::BigUint;
    use proptest::prelude::*;

    use super::*;
    use crate::pathcalc::{eval_rig, Bool, Nat};

    #[test]
    fn twenty_named_plus_swap_laws() {
        let all = axiom_list();
        assert_eq!(all.len(), 27);
        assert_eq!(all[0].name, "l-unit");
        assert_eq!(all[19].name, "one");
        for a in &all {
            assert_eq!(a.lhs.arity(), a.rhs.arity(), "{}", a.name);
        }
        assert_eq!(axiom("add").unwrap().vars, vec!["r", "s"]);
    }

    #[test]
    fn crossing_moves_the_first_wire_last() {
        let t = parse(&cross(3)).unwrap();
        let m = eval_rig::<Nat>(&t, &HashMap::new()).unwrap();
        // input wire 0 lands on output 3, wire k on output k-1
        let one = BigUint::from(1u8);
        assert_eq!(m.get(3, 0), &one);
        assert_eq!(m.get(0, 1), &one);
        assert_eq!(m.get(2, 3), &one);
    }

    proptest! {
        #[test]
        fn sound_over_nat_and_bool(r in 0u64..50, s in 0u64..50, p: bool, q: bool) {
            for a in axiom_list() {
                let mut nat = HashMap::new();
                nat.insert("r".to_string(), BigUint::from(r));
                nat.insert("s".to_string(), BigUint::from(s));
                prop_assert_eq!(eval_rig::<Nat>(&a.lhs, &nat).unwrap(), eval_rig::<Nat>(&a.rhs, &nat).unwrap(), "{}", a.name);
                let mut b = HashMap::new();
                b.insert("r".to_string(), p);
                b.insert("s".to_string(), q);
                prop_assert_eq!(eval_rig::<Bool>(&a.lhs, &b).unwrap(), eval_rig::<Bool>(&a.rhs, &b).unwrap(), "{}", a.name);
            }
        }
    }
}
