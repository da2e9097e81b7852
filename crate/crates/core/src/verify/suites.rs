use std::collections::HashMap;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::random::{random_cell1, random_cell2, random_dim, random_term, RandomInstance};
use super::Outcome;
use crate::base::{BaseMor, Capability, Expr, ObjExpr};
use crate::error::Result;
use crate::instances::{dim_of, truth, BoolCat, Matrix};
use crate::matc::{
    associator, associator_iso, left_unitor, left_unitor_iso, right_unitor, right_unitor_iso, sigma_naturalizer,
    syllepsis, Cell1, Cell2,
};
use crate::pathcalc::{axiom_list, coning_iso, eval_rig, lift, parse, Nat};
use crate::quantum::{is_unitary2, pauli_basis, pauli_x, teleportation};
use crate::scalars::GaussRational;
use crate::structures::{add_2cells, adjunction, frobenius_suite, layer_trace, obj_trace};
use crate::GaussVec;

type V = GaussVec;

/// Record a failed trial; only the first few are kept verbatim.
fn note(out: &mut Outcome, msg: String) {
    out.passed = false;
    out.failures += 1;
    if out.notes.len() < 5 {
        out.notes.push(msg);
    }
}

fn check(out: &mut Outcome, label: impl FnOnce() -> String, r: Result<bool>) {
    match r {
        Ok(true) => {}
        Ok(false) => note(out, label()),
        Err(e) => note(out, format!("{}: {e}", label())),
    }
}

/// Path-calculus semantics of the generator table.
pub fn path_semantics() -> Outcome {
    let mut out = Outcome::new(1, "path-calculus semantics", 3);
    for (t, expected) in [
        ("mul . comul", "[[2]]"),
        ("comul . mul", "[[1, 1], [1, 1]]"),
        ("swap", "[[0, 1], [1, 0]]"),
    ] {
        let got = parse(t).and_then(|t| eval_rig::<Nat>(&t, &HashMap::new()));
        check(
            &mut out,
            || format!("{t} evaluated to {got:?}"),
            got.as_ref().map(|m| m.to_string() == expected).map_err(Clone::clone),
        );
    }
    out
}

/// Every axiom agrees over ℕ for `trials` random assignments.
pub fn axioms_sound(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let axioms = axiom_list();
    let mut out = Outcome::new(2, "axiom soundness over the naturals", trials * axioms.len());
    for ax in &axioms {
        for _ in 0..trials {
            let asg: HashMap<String, BigUint> = ax
                .vars
                .iter()
                .map(|v| (v.clone(), BigUint::from(rng.gen_range(0u32..=20))))
                .collect();
            let r = eval_rig::<Nat>(&ax.lhs, &asg)
                .and_then(|l| Ok(l == eval_rig::<Nat>(&ax.rhs, &asg)?));
            check(&mut out, || format!("{} at {asg:?}", ax.name), r);
        }
    }
    out
}

fn dims_assignment(rng: &mut StdRng, vars: &[String]) -> HashMap<String, Expr<V>> {
    vars.iter()
        .map(|v| (v.clone(), ObjExpr::Base(rng.gen_range(0..=3))))
        .collect()
}

/// Coning isos of every axiom at random objects of `C`: mutually inverse,
/// and unitary when `C` has a dagger.
pub fn coning_for<C: RandomInstance>(out: &mut Outcome, rng: &mut StdRng, trials: usize) {
    let dagger = C::CAPS.has(Capability::Dagger);
    for ax in &axiom_list() {
        for _ in 0..trials {
            let asg: HashMap<String, Expr<C>> = ax.vars.iter().map(|v| (v.clone(), C::random_object(rng))).collect();
            let r = coning_iso::<C>(ax, &asg).and_then(|iso| {
                let (f, g) = (iso.forward()?, iso.backward()?);
                let inverse = f.vcomp(&g)?.is_identity() && g.vcomp(&f)?.is_identity();
                Ok(inverse && (!dagger || is_unitary2(&f)?))
            });
            check(out, || format!("{} at {asg:?}", ax.name), r);
        }
    }
}

pub fn coning(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(3, "coning isos invertible and unitary", trials * axiom_list().len());
    coning_for::<V>(&mut out, &mut rng, trials);
    out
}

fn interchange<C: RandomInstance>(rng: &mut StdRng) -> Result<bool> {
    let (m, n, p) = (random_dim(rng), random_dim(rng), random_dim(rng));
    let (a, b) = (random_cell1::<C>(rng, m, n), random_cell1::<C>(rng, n, p));
    let f = random_cell2(rng, &a);
    let g = random_cell2(rng, f.cod());
    let h = random_cell2(rng, &b);
    let k = random_cell2(rng, h.cod());
    Ok(f.vcomp(&g)?.hcomp(&h.vcomp(&k)?)? == f.hcomp(&h)?.vcomp(&g.hcomp(&k)?)?)
}

fn unitors<C: RandomInstance>(rng: &mut StdRng) -> Result<bool> {
    let (m, n) = (random_dim(rng), random_dim(rng));
    let a = random_cell1::<C>(rng, m, n);
    let f = random_cell2(rng, &a);
    let (l, r) = (left_unitor_iso(&a)?, right_unitor_iso(&a)?);
    let inverse = |iso: &crate::matc::CellIso<C>| -> Result<bool> {
        let (fw, bw) = (iso.forward()?, iso.backward()?);
        Ok(fw.vcomp(&bw)?.is_identity() && bw.vcomp(&fw)?.is_identity())
    };
    let left_natural = Cell2::whisker_left(&Cell1::id1(m), &f)?.vcomp(&left_unitor(f.cod())?)?
        == l.forward()?.vcomp(&f)?;
    let right_natural = Cell2::whisker_right(&f, &Cell1::id1(n))?.vcomp(&right_unitor(f.cod())?)?
        == r.forward()?.vcomp(&f)?;
    let one = Cell1::<C>::id1(m);
    let agree = left_unitor(&one)? == right_unitor(&one)?;
    Ok(inverse(&l)? && inverse(&r)? && left_natural && right_natural && agree)
}

fn pentagon<C: RandomInstance>(rng: &mut StdRng) -> Result<bool> {
    let d: Vec<usize> = (0..5).map(|_| random_dim(rng)).collect();
    let a = random_cell1::<C>(rng, d[0], d[1]);
    let b = random_cell1::<C>(rng, d[1], d[2]);
    let c = random_cell1::<C>(rng, d[2], d[3]);
    let e = random_cell1::<C>(rng, d[3], d[4]);
    let lhs = associator(&a.hcomp(&b)?, &c, &e)?.vcomp(&associator(&a, &b, &c.hcomp(&e)?)?)?;
    let rhs = Cell2::whisker_right(&associator(&a, &b, &c)?, &e)?
        .vcomp(&associator(&a, &b.hcomp(&c)?, &e)?)?
        .vcomp(&Cell2::whisker_left(&a, &associator(&b, &c, &e)?)?)?;
    Ok(lhs == rhs)
}

fn triangle<C: RandomInstance>(rng: &mut StdRng) -> Result<bool> {
    let (m, n, p) = (random_dim(rng), random_dim(rng), random_dim(rng));
    let (a, b) = (random_cell1::<C>(rng, m, n), random_cell1::<C>(rng, n, p));
    let lhs = associator(&a, &Cell1::id1(n), &b)?.vcomp(&Cell2::whisker_left(&a, &left_unitor(&b)?)?)?;
    Ok(lhs == Cell2::whisker_right(&right_unitor(&a)?, &b)?)
}

type Law = fn(&mut StdRng) -> Result<bool>;

/// Interchange, unitor laws, pentagon and triangle on random cells of one instance.
pub fn bicategory_laws_for<C: RandomInstance>(out: &mut Outcome, rng: &mut StdRng, trials: usize) {
    let laws: [(&str, Law); 4] = [
        ("interchange", interchange::<C>),
        ("unitors", unitors::<C>),
        ("pentagon", pentagon::<C>),
        ("triangle", triangle::<C>),
    ];
    for (name, law) in laws {
        for t in 0..trials {
            let r = law(rng);
            check(out, || format!("{} {name} trial {t}", C::NAME), r);
        }
    }
}

pub fn bicategory_laws(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(4, "bicategory laws (vecskel, bool)", 8 * trials);
    bicategory_laws_for::<V>(&mut out, &mut rng, trials);
    bicategory_laws_for::<BoolCat>(&mut out, &mut rng, trials);
    out
}

/// Horizontal composition in Mat(bool) is the relational product.
pub fn bool_relations(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(5, "Mat(bool) composition is relational product", trials);
    let obj = |rng: &mut StdRng, b: bool| -> Expr<BoolCat> {
        match (b, rng.gen_bool(0.5)) {
            (true, true) => ObjExpr::Unit,
            (false, true) => ObjExpr::Zero,
            (b, false) => ObjExpr::Base(b),
        }
    };
    for t in 0..trials {
        let (m, n, p) = (rng.gen_range(1..=5), rng.gen_range(1..=5), rng.gen_range(1..=5));
        let r: Vec<bool> = (0..m * n).map(|_| rng.gen_bool(0.4)).collect();
        let s: Vec<bool> = (0..n * p).map(|_| rng.gen_bool(0.4)).collect();
        let a = Cell1::<BoolCat>::new(m, n, r.iter().map(|&b| obj(&mut rng, b)).collect());
        let b = Cell1::<BoolCat>::new(n, p, s.iter().map(|&b| obj(&mut rng, b)).collect());
        let res = a.and_then(|a| a.hcomp(&b?)).and_then(|ab| {
            for i in 0..m {
                for k in 0..p {
                    let expected = (0..n).any(|j| r[i * n + j] && s[j * p + k]);
                    if truth(ab.get(i, k))? != expected {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        check(&mut out, || format!("trial {t} ({m}x{n} by {n}x{p})"), res);
    }
    out
}

/// Both snake equations for the dual-transpose adjunction of random cells.
pub fn snakes_for<C: RandomInstance>(out: &mut Outcome, rng: &mut StdRng, trials: usize) {
    for t in 0..trials {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let a = random_cell1::<C>(rng, m, n);
        let r = adjunction(&a).and_then(|adj| adj.check()).map(|(l, r)| l && r);
        check(out, || format!("trial {t}: {a}"), r);
    }
}

pub fn snakes(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(6, "snake equations", trials);
    snakes_for::<V>(&mut out, &mut rng, trials);
    out
}

fn random_expr(rng: &mut StdRng, depth: usize) -> Expr<V> {
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..8) {
            0 => ObjExpr::Unit,
            1 => ObjExpr::Zero,
            _ => ObjExpr::Base(rng.gen_range(0..=3)),
        };
    }
    let (a, b) = (random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    if rng.gen_bool(0.5) {
        ObjExpr::sum(a, b)
    } else {
        ObjExpr::prod(a, b)
    }
}

fn scalar_of(f: &BaseMor<V>) -> Option<GaussRational> {
    let m = f.payload();
    (m.rows() == 1 && m.cols() == 1).then(|| m.get(0, 0))
}

/// The trace of `d` is `d`, and traces add over `⊕`.
pub fn traces(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(7, "object traces", 7 + trials);
    for d in 0..=6usize {
        let r = obj_trace::<V>(&ObjExpr::Base(d)).map(|f| scalar_of(&f) == Some((d as i64).into()));
        check(&mut out, || format!("Tr({d})"), r);
    }
    for t in 0..trials {
        let (a, b) = (random_expr(&mut rng, 2), random_expr(&mut rng, 2));
        let r = (|| {
            let lhs = obj_trace::<V>(&ObjExpr::sum(a.clone(), b.clone()))?;
            let rhs = add_2cells(&obj_trace(&a)?, &obj_trace(&b)?)?;
            Ok(lhs == rhs && scalar_of(&lhs) == Some(((dim_of(&a) + dim_of(&b)) as i64).into()))
        })();
        check(&mut out, || format!("trial {t}: Tr({a} (+) {b})"), r);
    }
    out
}

/// The classical bit on `I ⊕ I` and the layer trace of two layers.
pub fn frobenius() -> Outcome {
    let mut out = Outcome::new(8, "frobenius classical bit", 15);
    match frobenius_suite::<V>() {
        Ok(report) => {
            for c in &report.checks {
                if !c.passed {
                    note(&mut out, c.name.to_string());
                }
            }
            if let Some((m, id)) = &report.special {
                out.notes.push(format!("special: comult;mult = {m} (identity: {id})"));
            }
        }
        Err(e) => note(&mut out, e.to_string()),
    }
    let r = layer_trace::<V>(&Cell2::id2(&Cell1::id1(2))).map(|t| scalar_of(t.entry(0, 0)) == Some(2.into()));
    check(&mut out, || "layer trace of two layers".into(), r);
    out
}

/// The teleportation identity for the qubit Pauli basis.
pub fn teleport(scalar: Option<GaussRational>) -> Outcome {
    let mut out = Outcome::new(9, "teleportation with the Pauli basis", 3);
    let shown = scalar.as_ref().map_or("1/2".to_string(), |s| s.to_string());
    match pauli_basis(scalar).and_then(|b| teleportation(&b)) {
        Ok(t) => {
            if !t.mu_unitary {
                let m = t.mu.entry(0, 0).payload();
                let gram = m.mul(&m.conj_transpose());
                note(&mut out, format!("mu is not unitary at scalar {shown}: mu mu^dag = {}", gram.pretty()));
            }
            if !t.equation {
                note(&mut out, "one-shot composite differs from the pulled cup".into());
            }
            if !t.chain_agrees {
                note(&mut out, "derivation chain does not agree".into());
            }
        }
        Err(e) => note(&mut out, e.to_string()),
    }
    out
}

/// The Pauli X assembled from structural 2-cells.
pub fn pauli() -> Outcome {
    let mut out = Outcome::new(10, "pauli X from structural 2-cells", 2);
    match pauli_x::<V>() {
        Ok(x) => {
            let got = x.entry(0, 0).payload();
            if got != &Matrix::permutation(2, &[1, 0]) {
                note(&mut out, format!("evaluated to {}", got.pretty()));
            }
            check(&mut out, || "not unitary".into(), is_unitary2(&x));
        }
        Err(e) => note(&mut out, e.to_string()),
    }
    out
}

/// Dimensions of a lifted term are its matrix over ℕ.
pub fn decategorification(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(11, "decategorification of lifted terms", trials);
    for _ in 0..trials {
        let inputs = rng.gen_range(0..=2);
        let t = random_term(&mut rng, 6, inputs);
        let objs = dims_assignment(&mut rng, &t.vars());
        let nat: HashMap<String, BigUint> = objs.iter().map(|(k, e)| (k.clone(), BigUint::from(dim_of(e)))).collect();
        let r = (|| {
            let cell = lift::<V>(&t, &objs)?;
            let m = eval_rig::<Nat>(&t, &nat)?;
            if cell.shape() != m.shape() || t.depth() > 6 {
                return Ok(false);
            }
            Ok((0..m.rows()).all(|i| (0..m.cols()).all(|j| BigUint::from(dim_of(cell.get(i, j))) == *m.get(i, j))))
        })();
        check(&mut out, || format!("{t}"), r);
    }
    out
}

/// Dagger is involutive and contravariant; structural 2-cells are unitary.
pub fn dagger_laws(seed: u64, trials: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(12, "dagger laws and unitary structure", 2 * trials);
    for t in 0..trials {
        let (m, n) = (random_dim(&mut rng), random_dim(&mut rng));
        let a = random_cell1::<V>(&mut rng, m, n);
        let f = random_cell2(&mut rng, &a);
        let g = random_cell2(&mut rng, f.cod());
        let r = (|| {
            let invol = f.dagger()?.dagger()? == f;
            let contra = f.vcomp(&g)?.dagger()? == g.dagger()?.vcomp(&f.dagger()?)?;
            Ok(invol && contra)
        })();
        check(&mut out, || format!("trial {t}: dagger of {m}x{n} pair"), r);
    }
    for t in 0..trials {
        let d: Vec<usize> = (0..4).map(|_| random_dim(&mut rng)).collect();
        let a = random_cell1::<V>(&mut rng, d[0], d[1]);
        let b = random_cell1::<V>(&mut rng, d[1], d[2]);
        let c = random_cell1::<V>(&mut rng, d[2], d[3]);
        let r = (|| {
            let cells = [
                associator(&a, &b, &c)?,
                associator_iso(&a, &b, &c)?.backward()?,
                left_unitor(&a)?,
                right_unitor(&a)?,
                sigma_naturalizer(&a, &c)?,
                syllepsis(d[0], d[3])?,
            ];
            for cell in &cells {
                if !is_unitary2(cell)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        check(&mut out, || format!("trial {t}: structural cells on shapes {d:?}"), r);
    }
    out
}

/// Default trial counts for each criterion.
pub const DEFAULT_TRIALS: [usize; 12] = [1, 100, 3, 200, 100, 50, 50, 1, 1, 1, 100, 100];

/// Run criterion `k` (1-based) with its default trial count.
pub fn criterion(k: usize, seed: u64) -> Option<Outcome> {
    let trials = *DEFAULT_TRIALS.get(k.checked_sub(1)?)?;
    Some(match k {
        1 => path_semantics(),
        2 => axioms_sound(seed, trials),
        3 => coning(seed, trials),
        4 => bicategory_laws(seed, trials),
        5 => bool_relations(seed, trials),
        6 => snakes(seed, trials),
        7 => traces(seed, trials),
        8 => frobenius(),
        9 => teleport(None),
        10 => pauli(),
        11 => decategorification(seed, trials),
        12 => dagger_laws(seed, trials),
        _ => return None,
    })
}
