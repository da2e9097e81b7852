//! `matc`: evaluate path terms, lift them into Mat(C), and run the
//! verification suites from the command line.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! and 2 on a usage or input error.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use matc::base::{synth_iso, Bimonoidal, Expr, ObjExpr};
use matc::instances::{BoolCat, NatDiscrete};
use matc::matc::{cell1_to_json, cell2_to_json, is_invertible_pair, microcosm_oplus_iso, microcosm_otimes, Cell1, Cell2};
use matc::pathcalc::{axiom_list, coning_iso, eval_rig, lift, parse, Bool, Nat, PathTerm, Rig, RigMatrix};
use matc::quantum::{pauli_basis, swap_through_surfaces, teleportation};
use matc::structures::{cap, cup, frobenius_suite, layer_trace, obj_trace};
use matc::verify::random::RandomInstance;
use matc::verify::{self, bicategory_laws_for, snakes_for, Outcome};
use matc::{Error, GaussRational, GaussVec};

#[derive(Parser)]
#[command(name = "matc", version, about = "Matrices over bimonoidal categories, checked exactly")]
struct Cli {
    /// Base category.
    #[arg(long, global = true, env = "MATC_INSTANCE", value_enum, default_value_t = Instance::Vecskel)]
    instance: Instance,
    /// Seed for randomized suites; the same seed gives the same report.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Instance {
    Bool,
    Vecskel,
    Natdiscrete,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RigArg {
    Nat,
    Bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Pauli,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline text.
    text: Option<String>,
    /// Read the text from a file instead.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> Result<String, Error> {
        match (&self.text, &self.file) {
            (Some(t), _) => Ok(t.clone()),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map(|s| s.trim().to_string())
                .map_err(|e| Error::Invalid(format!("{}: {e}", p.display()))),
            (None, None) => Err(Error::Invalid("no input".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a path term to a matrix over a rig.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = RigArg::Nat)]
        rig: RigArg,
        /// Scalar assignment `name=value`; repeatable.
        #[arg(long = "set", value_parser = binding)]
        set: Vec<(String, String)>,
    },
    /// Lift a path term to a 1-cell; scalars are assigned objects such as `#2`.
    Lift {
        #[command(flatten)]
        input: Input,
        #[arg(long = "set", value_parser = binding)]
        set: Vec<(String, String)>,
    },
    /// Check every axiom (or one) for soundness over a rig and invertibility of its coning iso.
    CheckAxioms {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = RigArg::Nat)]
        rig: RigArg,
        /// Random scalar assignments per axiom.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Random object assignments per coning iso.
        #[arg(long, default_value_t = 3)]
        coning_trials: usize,
    },
    /// Interchange, unitor, pentagon and triangle laws on random cells.
    Coherence {
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Snake equations for the dual-transpose adjunction of random 1-cells.
    SnakeCheck {
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Trace of one object, or the randomized additivity suite when none is given.
    Trace {
        object: Option<String>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// The classical bit on `I ⊕ I` and the layer trace of two layers.
    Frobenius,
    /// The teleportation identity for an error basis.
    Teleport {
        #[arg(long, value_enum, default_value_t = Basis::Pauli)]
        basis: Basis,
        /// Scalar attached to the measurement, e.g. `1/2` or `1/2+1/2 i`.
        #[arg(long)]
        scalar: Option<String>,
    },
    /// Sums and products of two objects inside Hom(1,1), and their swap.
    Microcosm { a: String, b: String },
}

fn binding(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// What a verb produced. `passed` is `None` for verbs that only compute.
struct Report {
    passed: Option<bool>,
    text: String,
    json: Value,
}

impl Report {
    fn value(text: String, json: Value) -> Self {
        Report { passed: None, text, json }
    }

    fn outcome(o: &Outcome) -> Self {
        Report {
            passed: Some(o.passed),
            text: o.to_string(),
            json: o.to_json(),
        }
    }
}

macro_rules! dispatch {
    ($inst:expr, $f:ident ( $($arg:expr),* )) => {
        match $inst {
            Instance::Bool => $f::<BoolCat>($($arg),*),
            Instance::Vecskel => $f::<GaussVec>($($arg),*),
            Instance::Natdiscrete => $f::<NatDiscrete>($($arg),*),
        }
    };
}

fn rig_matrix_json<E: Clone + std::fmt::Display>(m: &RigMatrix<E>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| Value::String(m.get(i, j).to_string())).collect())
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn eval_in<R: Rig>(t: &PathTerm, set: &[(String, String)]) -> Result<Report, Error>
where
    R::Elem: std::str::FromStr,
{
    let asg = set
        .iter()
        .map(|(k, v)| {
            v.parse::<R::Elem>()
                .map(|x| (k.clone(), x))
                .map_err(|_| Error::Invalid(format!("`{v}` is not a {} value", R::NAME)))
        })
        .collect::<Result<HashMap<_, _>, _>>()?;
    let m = eval_rig::<R>(t, &asg)?;
    Ok(Report::value(
        m.to_string(),
        json!({ "term": t.to_string(), "rig": R::NAME, "matrix": rig_matrix_json(&m) }),
    ))
}

fn objects<C: Bimonoidal>(set: &[(String, String)]) -> Result<HashMap<String, Expr<C>>, Error> {
    set.iter().map(|(k, v)| Ok((k.clone(), v.parse::<Expr<C>>()?))).collect()
}

fn lift_in<C: Bimonoidal>(t: &PathTerm, set: &[(String, String)]) -> Result<Report, Error> {
    let a = lift::<C>(t, &objects::<C>(set)?)?;
    Ok(Report::value(a.to_string(), cell1_to_json(&a)))
}

fn sound_in<R: Rig>(
    rng: &mut StdRng,
    ax: &matc::pathcalc::Axiom,
    trials: usize,
    sample: fn(&mut StdRng) -> R::Elem,
) -> Result<usize, Error> {
    let mut ok = 0;
    for _ in 0..trials {
        let asg: HashMap<String, R::Elem> = ax.vars.iter().map(|v| (v.clone(), sample(rng))).collect();
        if eval_rig::<R>(&ax.lhs, &asg)? == eval_rig::<R>(&ax.rhs, &asg)? {
            ok += 1;
        }
    }
    Ok(ok)
}

fn check_axioms<C: RandomInstance>(
    seed: u64,
    name: Option<&str>,
    rig: RigArg,
    trials: usize,
    coning_trials: usize,
) -> Result<Report, Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let axioms: Vec<_> = axiom_list()
        .into_iter()
        .filter(|a| name.is_none_or(|n| a.name == n))
        .collect();
    if axioms.is_empty() {
        return Err(Error::Invalid(format!("no axiom named `{}`", name.unwrap_or(""))));
    }
    let (mut text, mut rows, mut all) = (String::new(), Vec::new(), true);
    for ax in &axioms {
        let sound = match rig {
            RigArg::Nat => sound_in::<Nat>(&mut rng, ax, trials, |r| Nat::from_nat(r.gen_range(0..=20)))?,
            RigArg::Bool => sound_in::<Bool>(&mut rng, ax, trials, |r| r.gen_bool(0.5))?,
        };
        let mut coned = 0;
        for _ in 0..coning_trials {
            let asg: HashMap<String, Expr<C>> =
                ax.vars.iter().map(|v| (v.clone(), C::random_object(&mut rng))).collect();
            let iso = coning_iso::<C>(ax, &asg)?;
            if is_invertible_pair(&iso.forward()?, &iso.backward()?)? {
                coned += 1;
            }
        }
        let passed = sound == trials && coned == coning_trials;
        all &= passed;
        writeln!(
            text,
            "{} {:<16} {} = {}  (sound {sound}/{trials}, coning {coned}/{coning_trials})",
            if passed { "PASS" } else { "FAIL" },
            ax.name,
            ax.lhs,
            ax.rhs
        )
        .unwrap();
        rows.push(json!({
            "name": ax.name, "lhs": ax.lhs.to_string(), "rhs": ax.rhs.to_string(),
            "sound": sound, "coning": coned, "passed": passed,
        }));
    }
    Ok(Report {
        passed: Some(all),
        text: text.trim_end().to_string(),
        json: json!({ "rig": match rig { RigArg::Nat => "nat", RigArg::Bool => "bool" }, "trials": trials, "axioms": rows, "passed": all }),
    })
}

fn coherence<C: RandomInstance>(seed: u64, trials: usize) -> Result<Report, Error> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(4, "bicategory laws", 4 * trials);
    bicategory_laws_for::<C>(&mut out, &mut rng, trials);
    Ok(Report::outcome(&out))
}

fn snake_check<C: RandomInstance>(seed: u64, trials: usize) -> Result<Report, Error> {
    matc::base::require::<C>(matc::base::Capability::Duals)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Outcome::new(6, "snake equations", trials);
    snakes_for::<C>(&mut out, &mut rng, trials);
    Ok(Report::outcome(&out))
}

fn trace_of<C: Bimonoidal>(object: &str) -> Result<Report, Error> {
    let a: Expr<C> = object.parse()?;
    let t = obj_trace::<C>(&a)?;
    let text = format!("Tr({a}) = {:?}", t.payload());
    Ok(Report::value(
        text,
        json!({ "object": a.to_string(), "trace": C::mor_to_json(t.payload()) }),
    ))
}

fn frobenius<C: Bimonoidal>() -> Result<Report, Error> {
    let report = frobenius_suite::<C>()?;
    let two = Cell1::<C>::id1(2);
    let layered = layer_trace::<C>(&Cell2::id2(&two))?;
    let loop_value = cup::<C>(2)?.vcomp(&cap::<C>(2)?)?;
    let layer_ok = layered.entry(0, 0).payload() == loop_value.entry(0, 0).payload();
    let passed = report.passed() && layer_ok;
    let text = format!(
        "{}\n{} layer trace of 1_2 = {:?}",
        report.to_string().trim_end(),
        if layer_ok { "PASS" } else { "FAIL" },
        layered.entry(0, 0).payload()
    );
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    Ok(Report {
        passed: Some(passed),
        text,
        json: json!({
            "checks": checks,
            "special": report.special.as_ref().map(|(m, id)| json!({ "comult_then_mult": m, "identity": id })),
            "layer_trace": { "passed": layer_ok, "cell": cell2_to_json(&layered) },
            "passed": passed,
        }),
    })
}

fn microcosm<C: Bimonoidal>(a: &str, b: &str) -> Result<Report, Error> {
    let (a, b): (Expr<C>, Expr<C>) = (a.parse()?, b.parse()?);
    let oplus = microcosm_oplus_iso::<C>(&a, &b)?;
    let (fw, bw) = (oplus.forward()?, oplus.backward()?);
    let oplus_ok = is_invertible_pair(&fw, &bw)?;
    let (prod, otimes) = microcosm_otimes::<C>(&a, &b)?;
    let otimes_ok = otimes.is_identity() && otimes.cod().get(0, 0) == &prod;
    let swap = swap_through_surfaces::<C>(&a, &b)?;
    let direct = synth_iso::<C>(&ObjExpr::sum(a.clone(), b.clone()), &ObjExpr::sum(b.clone(), a.clone()))?;
    let swap_ok = swap.entry(0, 0) == &direct;
    let passed = oplus_ok && otimes_ok && swap_ok;
    let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let text = format!(
        "{} sum: {} => {}\n{} product: {}\n{} swap through surfaces = sum symmetry: {:?}",
        mark(oplus_ok),
        fw.dom(),
        fw.cod(),
        mark(otimes_ok),
        otimes.cod(),
        mark(swap_ok),
        swap.entry(0, 0).payload()
    );
    Ok(Report {
        passed: Some(passed),
        text,
        json: json!({
            "sum": { "passed": oplus_ok, "cell": cell2_to_json(&fw) },
            "product": { "passed": otimes_ok, "cell": cell2_to_json(&otimes) },
            "swap": { "passed": swap_ok, "cell": cell2_to_json(&swap) },
            "passed": passed,
        }),
    })
}

fn teleport(scalar: Option<&str>) -> Result<Report, Error> {
    let scalar = scalar.map(str::parse::<GaussRational>).transpose()?;
    let basis = pauli_basis(scalar)?;
    let t = teleportation(&basis)?;
    let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
    let mu = t.mu.entry(0, 0).payload();
    let mut text = format!("basis: pauli, n = {}, scalar {:?}\n", basis.n(), basis.scalar.payload());
    writeln!(text, "{} mu unitary", mark(t.mu_unitary)).unwrap();
    if !t.mu_unitary {
        writeln!(text, "    mu mu^dag = {}", mu.mul(&mu.conj_transpose())).unwrap();
    }
    writeln!(text, "{} one-shot composite equals the scaled pulled cup", mark(t.equation)).unwrap();
    write!(text, "{} derivation chain agrees", mark(t.chain_agrees)).unwrap();
    let chain: Vec<Value> = t.chain.iter().map(cell2_to_json).collect();
    Ok(Report {
        passed: Some(t.passed()),
        text,
        json: json!({
            "basis": "pauli",
            "n": basis.n(),
            "mu_unitary": t.mu_unitary,
            "equation": t.equation,
            "chain_agrees": t.chain_agrees,
            "passed": t.passed(),
            "cells": {
                "mu": cell2_to_json(&t.mu),
                "one_shot": cell2_to_json(&t.one_shot),
                "chain": chain,
                "rhs": cell2_to_json(&t.rhs),
            },
        }),
    })
}

fn vecskel_only(inst: Instance, verb: &str) -> Result<(), Error> {
    match inst {
        Instance::Vecskel => Ok(()),
        _ => Err(Error::Invalid(format!("`{verb}` runs on the vecskel instance"))),
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let inst = cli.instance;
    match &cli.command {
        Command::Eval { input, rig, set } => {
            let t = parse(&input.read()?)?;
            match rig {
                RigArg::Nat => eval_in::<Nat>(&t, set),
                RigArg::Bool => eval_in::<Bool>(&t, set),
            }
        }
        Command::Lift { input, set } => {
            let t = parse(&input.read()?)?;
            dispatch!(inst, lift_in(&t, set))
        }
        Command::CheckAxioms {
            name,
            rig,
            trials,
            coning_trials,
        } => dispatch!(inst, check_axioms(cli.seed, name.as_deref(), *rig, *trials, *coning_trials)),
        Command::Coherence { trials } => dispatch!(inst, coherence(cli.seed, *trials)),
        Command::SnakeCheck { trials } => dispatch!(inst, snake_check(cli.seed, *trials)),
        Command::Trace { object: Some(o), .. } => dispatch!(inst, trace_of(o)),
        Command::Trace { object: None, trials } => {
            vecskel_only(inst, "trace")?;
            Ok(Report::outcome(&verify::traces(cli.seed, *trials)))
        }
        Command::Frobenius => dispatch!(inst, frobenius()),
        Command::Teleport { basis: Basis::Pauli, scalar } => {
            vecskel_only(inst, "teleport")?;
            teleport(scalar.as_deref())
        }
        Command::Microcosm { a, b } => dispatch!(inst, microcosm(a, b)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = match cli.output {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json values serialize"),
            };
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout(), "{body}");
            match report.passed {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
