//! Command-line front end. JSON reports go to standard output, diagnostics
//! to standard error.
//!
//! Exit codes: `0` all checks pass, `1` a check failed (the report says
//! which), `2` invalid input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::{CartanData, Family};
use crate::chart;
use crate::doubleword::{self, DoubleWord};
use crate::error::{Error, Result};
use crate::leaves;
use crate::rational::{to_pq, Rational};
use crate::report::{all_pass, to_json};
use crate::sklyanin;
use crate::sln;
use crate::weyl::{self, WeylWord};

#[derive(Debug, Parser)]
#[command(
    name = "twisted-minors",
    version,
    about = "Exact checks for twisted generalized minors on double Bruhat cells",
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Pretty-print JSON with this many spaces.
    #[arg(long, global = true, value_name = "N")]
    pub json_indent: Option<usize>,
    /// Corrupt the first check of the report (harness testing).
    #[arg(long, global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pairings of all twisted minors against the bracket formula.
    BracketTable(InstanceArgs),
    /// The commuting family M_1, M_3, … for a reduced word of u (on S^{u,u}).
    Integrable(InstanceArgs),
    /// Dimension, components and defining equations of the leaf S^{u,v}.
    Leaf(InstanceArgs),
    /// Matrix-level evaluation in SL_n: chart point, twist, minors, membership.
    Eval(InstanceArgs),
    /// Bracket formula against the matrix-entry bracket at sample points.
    Oracle(InstanceArgs),
    /// A fixed suite of property checks.
    Selftest(InstanceArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InstanceArgs {
    /// Cartan type, e.g. A3, B2, G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan_type: Option<String>,
    /// Double word such as `1,2b,2` (or a reduced word for `integrable`).
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long)]
    pub u: Option<String>,
    #[arg(long)]
    pub v: Option<String>,
    /// Matrix size for the SL_n realization (type A_{n-1}).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON matrix file (array of rows of "p/q" strings).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// For `eval`: sample the point on the leaf S^{u,v} instead of the chart.
    #[arg(long)]
    pub on_leaf: bool,
}

/// A validated instance: Cartan data plus whatever words were given.
#[derive(Debug, Clone)]
pub struct InstanceSpec {
    pub cd: CartanData,
    pub args: InstanceArgs,
}

impl InstanceSpec {
    pub fn parse(args: &InstanceArgs) -> Result<Self> {
        let cd = match (&args.cartan_type, args.n) {
            (Some(t), None) => CartanData::parse(t)?,
            (None, Some(n)) => CartanData::sl(n)?,
            (Some(t), Some(n)) => {
                let cd = CartanData::parse(t)?;
                if cd.label.family != Family::A || cd.rank + 1 != n {
                    return Err(Error::input(format!("--type {t} is inconsistent with --n {n}")));
                }
                cd
            }
            (None, None) => return Err(Error::input("one of --type or --n is required")),
        };
        Ok(InstanceSpec { cd, args: args.clone() })
    }

    pub fn double_word(&self) -> Result<DoubleWord> {
        let w = self.args.word.as_deref().ok_or_else(|| Error::input("--word is required"))?;
        DoubleWord::parse(&self.cd, w)
    }

    pub fn reduced_word(&self) -> Result<WeylWord> {
        let w = self.args.word.as_deref().ok_or_else(|| Error::input("--word is required"))?;
        if w.contains(['b', 'B', '-']) {
            return Err(Error::input("expected a reduced word without barred letters"));
        }
        let j: WeylWord = w.parse()?;
        j.validate(&self.cd)?;
        Ok(j)
    }

    fn weyl(&self, s: &Option<String>, name: &str) -> Result<WeylWord> {
        let w: WeylWord = s.as_deref().ok_or_else(|| Error::input(format!("--{name} is required")))?.parse()?;
        w.validate(&self.cd)?;
        if !weyl::is_reduced(&self.cd, &w)? {
            return Err(Error::Validation(format!("--{name} ({w}) is not reduced")));
        }
        Ok(w)
    }

    /// `n` for the matrix realization; only type A has one.
    pub fn sl_size(&self) -> Result<usize> {
        if self.cd.label.family != Family::A {
            return Err(Error::input(format!("matrix computations need type A, got {}", self.cd.label)));
        }
        Ok(self.cd.rank + 1)
    }
}

fn pq_list(xs: &[Rational]) -> Value {
    xs.iter().map(|q| Value::from(to_pq(q))).collect()
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

type Outcome = (Value, bool, String);

fn bracket_table(spec: &InstanceSpec) -> Result<Outcome> {
    let dw = spec.double_word()?;
    let rep = chart::verify_bracket_theorem(&spec.cd, &dw);
    let pass = all_pass(&rep);
    let log = format!("bracket-table {} [{}]: {} pairs", spec.cd.label, dw, rep.len());
    Ok((value(&rep), pass, log))
}

fn integrable(spec: &InstanceSpec) -> Result<Outcome> {
    let j = spec.reduced_word()?;
    let rep = chart::verify_commuting_family(&spec.cd, &j)?;
    let mut pass = rep.pass;
    let mut out = value(&rep);
    if spec.cd.label.family == Family::A {
        let n = spec.sl_size()?;
        let dw = DoubleWord::double_from_reduced(&spec.cd, &j)?;
        let mut rng = ChaCha8Rng::seed_from_u64(spec.args.seed);
        let mut samples = Vec::new();
        for _ in 0..spec.args.samples {
            let s = sln::leaf_sample(n, &dw, &mut rng)?;
            let ms = sln::twisted_minors(&dw, &s.x)?;
            let chars = s.a.characters();
            let family: Vec<Rational> = (0..j.len()).map(|k| ms[2 * k].clone()).collect();
            let ok = rep.family.iter().zip(&family).all(|(mono, val)| mono.evaluate(&chars, &s.t) == *val)
                && sln::leaf_membership(dw.u(), dw.v(), &s.x)?.in_s;
            pass &= ok;
            samples.push(json!({"point": sln::matrix_to_json(&s.x), "family_values": pq_list(&family), "pass": ok}));
        }
        out["leaf_samples"] = Value::Array(samples);
    }
    out["pass"] = Value::Bool(pass);
    let log = format!("integrable {} ({}): family of {}", spec.cd.label, j, rep.family_size);
    Ok((out, pass, log))
}

fn leaf(spec: &InstanceSpec) -> Result<Outcome> {
    let dw = match &spec.args.word {
        Some(_) => Some(spec.double_word()?),
        None => None,
    };
    let (u, v) = match &dw {
        Some(dw) if spec.args.u.is_none() && spec.args.v.is_none() => (dw.u().clone(), dw.v().clone()),
        _ => (spec.weyl(&spec.args.u, "u")?, spec.weyl(&spec.args.v, "v")?),
    };
    if let Some(dw) = &dw {
        if !weyl::same_element(&spec.cd, dw.u(), &u)? || !weyl::same_element(&spec.cd, dw.v(), &v)? {
            return Err(Error::input("--word does not spell the given --u and --v"));
        }
    }
    let rep = leaves::leaf_report(&spec.cd, &u, &v, dw.as_ref())?;
    let pass = rep.chart_consistency.as_ref().is_none_or(|c| c.pass());
    let mut out = value(&rep);
    out["pass"] = Value::Bool(pass);
    let log = format!("leaf {} u=({u}) v=({v}): dimension {}", spec.cd.label, rep.dimension);
    Ok((out, pass, log))
}

fn eval(spec: &InstanceSpec) -> Result<Outcome> {
    let n = spec.sl_size()?;
    let dw = spec.double_word()?;
    let (u, v) = (dw.u(), dw.v());
    let mut rng = ChaCha8Rng::seed_from_u64(spec.args.seed);
    let mut out = json!({"n": n, "double_word": dw.to_string()});
    let mut pass = true;
    let x = match &spec.args.matrix {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
            let x = sln::matrix_from_json(&text)?;
            if x.size() != n {
                return Err(Error::input(format!("matrix is {}×{}, expected {n}×{n}", x.size(), x.size())));
            }
            x
        }
        None => {
            let (x, a, t) = if spec.args.on_leaf {
                let s = sln::leaf_sample(n, &dw, &mut rng)?;
                (s.x, s.a, s.t)
            } else {
                sln::random_chart_point(n, &dw, &mut rng)?
            };
            let chars = a.characters();
            let monomials: Vec<Rational> =
                chart::all_minor_exponents(&spec.cd, &dw).iter().map(|m| m.evaluate(&chars, &t)).collect();
            let ms = sln::twisted_minors(&dw, &x)?;
            pass &= ms == monomials;
            out["chart"] = json!({"a_characters": pq_list(&chars), "t": pq_list(&t)});
            out["monomials"] = pq_list(&monomials);
            x
        }
    };
    let xp = sln::twist(u, v, &x)?;
    let ms = sln::twisted_minors(&dw, &x)?;
    let (h, hp) = sln::h_pair(u, v, &x)?;
    let (_, first) = dw.fixed_set_and_first_occurrence(&spec.cd);
    let identities = (1..n).all(|j| {
        let wj = spec.cd.omega(j);
        let vinv = weyl::apply_unchecked(&spec.cd, &v.inverse(), &wj);
        h.character(&wj) * &ms[dw.m() + j - 1] == Rational::from_integer(1.into())
            && hp.character(&vinv) * &ms[first[j - 1] - 1] == Rational::from_integer(1.into())
    });
    pass &= identities;
    let membership = sln::leaf_membership(u, v, &x)?;
    if spec.args.on_leaf {
        pass &= membership.in_s;
    }
    out["point"] = sln::matrix_to_json(&x);
    out["twist"] = sln::matrix_to_json(&xp);
    out["minors"] = pq_list(&ms);
    out["h"] = pq_list(&h.characters());
    out["h_prime"] = pq_list(&hp.characters());
    out["h_identities"] = Value::Bool(identities);
    out["membership"] = value(&membership);
    out["pass"] = Value::Bool(pass);
    let log = format!("eval SL_{n} [{dw}]: {} minors", ms.len());
    Ok((out, pass, log))
}

fn oracle(spec: &InstanceSpec) -> Result<Outcome> {
    let n = spec.sl_size()?;
    let dw = spec.double_word()?;
    let rep = sklyanin::verify_oracle_vs_theorem(n, &dw, spec.args.samples, spec.args.seed)?;
    let log = format!("oracle SL_{n} [{dw}]: {} samples", rep.samples.len());
    let pass = rep.pass;
    Ok((value(&rep), pass, log))
}

type Check = fn(u64) -> Result<bool>;

fn check_bracket_small(_: u64) -> Result<bool> {
    for tag in ["A1", "A2"] {
        let cd = CartanData::parse(tag)?;
        for w in doubleword::all_double_words(&cd, 4) {
            if !all_pass(&chart::verify_bracket_theorem(&cd, &DoubleWord::new(&cd, &w)?)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_bracket_random(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for tag in ["A3", "B2", "C3", "D4", "G2", "F4"] {
        let cd = CartanData::parse(tag)?;
        let dw = doubleword::random_double_word(&cd, 10, &mut rng);
        if !all_pass(&chart::verify_bracket_theorem(&cd, &dw)) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_commuting(_: u64) -> Result<bool> {
    for (tag, j) in [("A2", "1,2,1"), ("A2", "2,1,2"), ("B2", "1,2,1,2"), ("A3", "1,2,1,3,2,1")] {
        let cd = CartanData::parse(tag)?;
        if !chart::verify_commuting_family(&cd, &j.parse()?)?.pass {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_leaf_arithmetic(_: u64) -> Result<bool> {
    for n in 2..=5 {
        let cd = CartanData::sl(n)?;
        let w0 = weyl::longest_element(&cd);
        if leaves::leaf_dimension(&cd, &w0, &w0)? != n * (n - 1) {
            return Ok(false);
        }
    }
    let cd = CartanData::parse("C3")?;
    let dw = DoubleWord::parse(&cd, "3b,1,2,3,2b,1b")?;
    Ok(leaves::check_against_chart(&cd, &dw)?.pass())
}

fn check_end_to_end(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (n, w) in [(2, "1,1b"), (3, "1,2b,2,1b"), (4, "1,2b,2,3b,3,2,1b")] {
        let cd = CartanData::sl(n)?;
        let dw = DoubleWord::parse(&cd, w)?;
        let (x, a, t) = sln::random_chart_point(n, &dw, &mut rng)?;
        let ms = sln::twisted_minors(&dw, &x)?;
        let chars = a.characters();
        if chart::all_minor_exponents(&cd, &dw).iter().zip(&ms).any(|(m, v)| m.evaluate(&chars, &t) != *v) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_sl3_leaf(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cd = CartanData::sl(3)?;
    let dw = DoubleWord::double_from_reduced(&cd, &"1,2,1".parse()?)?;
    let s = sln::leaf_sample(3, &dw, &mut rng)?;
    let x = &s.x;
    let ms = sln::twisted_minors(&dw, x)?;
    Ok(ms[0] == x.get(0, 2).recip()
        && ms[2] == x.get(2, 0).recip()
        && *x.get(2, 0) == sln::minor_by_sets(x, &[1, 2], &[2, 3])
        && *x.get(0, 2) == sln::minor_by_sets(x, &[2, 3], &[1, 2]))
}

fn check_oracle(seed: u64) -> Result<bool> {
    let cd = CartanData::sl(3)?;
    let dw = DoubleWord::parse(&cd, "1,2b,2,1b")?;
    Ok(sklyanin::verify_oracle_vs_theorem(3, &dw, 1, seed)?.pass)
}

fn check_poisson_lie(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = || {
        crate::matrix::RationalMatrix::from_rows(
            (0..3).map(|_| (0..3).map(|_| crate::rational::random_param(&mut rng)).collect()).collect(),
        )
    };
    let (x, y) = (random(), random());
    let jac = sklyanin::jacobi_sum(1, (0, 1), (1, 2), (2, 0), &x);
    Ok(sklyanin::multiplicativity_holds(1, &x, &y) && num_traits::Zero::is_zero(&jac))
}

pub fn selftest_suite() -> Vec<(&'static str, Check)> {
    vec![
        ("bracket theorem, A1/A2 double words m <= 4", check_bracket_small as Check),
        ("bracket theorem, random instances", check_bracket_random),
        ("commuting families", check_commuting),
        ("leaf dimensions and chart equations", check_leaf_arithmetic),
        ("twisted minors equal chart monomials", check_end_to_end),
        ("SL3 leaf example", check_sl3_leaf),
        ("entry-bracket oracle", check_oracle),
        ("Jacobi and Poisson-Lie", check_poisson_lie),
    ]
}

fn selftest(spec: &InstanceSpec) -> Result<Outcome> {
    let seed = spec.args.seed;
    let results: Vec<(&str, Result<bool>)> =
        selftest_suite().into_par_iter().map(|(name, f)| (name, f(seed))).collect();
    let mut rows = Vec::new();
    let mut pass = true;
    for (name, r) in results {
        let ok = matches!(r, Ok(true));
        pass &= ok;
        let mut row = json!({"check": name, "pass": ok});
        if let Err(e) = r {
            row["error"] = Value::from(e.to_string());
        }
        rows.push(row);
    }
    let log = format!("selftest: {} checks", rows.len());
    Ok((json!({"checks": rows, "pass": pass}), pass, log))
}

fn inject_fault(v: &mut Value) {
    match v {
        Value::Array(items) => {
            if let Some(Value::Object(first)) = items.first_mut() {
                first.insert("pass".into(), Value::Bool(false));
                first.insert("fault".into(), Value::from("injected"));
            }
        }
        Value::Object(obj) => {
            obj.insert("pass".into(), Value::Bool(false));
            obj.insert("fault".into(), Value::from("injected"));
        }
        _ => {}
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let (args, f): (&InstanceArgs, fn(&InstanceSpec) -> Result<Outcome>) = match &cli.command {
        Command::BracketTable(a) => (a, bracket_table),
        Command::Integrable(a) => (a, integrable),
        Command::Leaf(a) => (a, leaf),
        Command::Eval(a) => (a, eval),
        Command::Oracle(a) => (a, oracle),
        Command::Selftest(a) => (a, selftest),
    };
    let spec = match (&cli.command, args.cartan_type.is_none() && args.n.is_none()) {
        // selftest needs no instance
        (Command::Selftest(_), true) => InstanceSpec { cd: CartanData::sl(2)?, args: args.clone() },
        _ => InstanceSpec::parse(args)?,
    };
    f(&spec)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Validation(_) | Error::NotInG0 { .. } | Error::TwistUndefined(_) => 2,
        Error::Sampling(_) | Error::Invariant(_) => 1,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(&cli) {
        Ok((mut report, mut pass, log)) => {
            if cli.inject_fault {
                inject_fault(&mut report);
                pass = false;
            }
            let _ = writeln!(out, "{}", to_json(&report, cli.json_indent));
            let _ = writeln!(err, "{log}: {}", if pass { "pass" } else { "FAIL" });
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main_with_args() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
