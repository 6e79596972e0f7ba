//! Batch front end: a flat `key = value` input document, task dispatch and
//! exit codes.
//!
//! ```text
//! # one-magnon form factor
//! backend = rational
//! c = 1
//! entry = 1,2
//! uC = [2]
//! vC = []
//! uB = []
//! vB = []
//! z = 0
//! r1z = 3
//! ```
//!
//! Arrays are written in brackets, everything after `#` is a comment, and
//! unknown or repeated keys are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;

use crate::bethe::{bethe_residual, synthesize_on_shell, BetheData};
use crate::chain::{
    chain_r_functions, check_chain, local_form_factor, local_prefactor, rescaled_ff_at_zero, solve_bethe_newton,
    ChainSpec, NewtonOptions,
};
use crate::dwpf::{check_dwpf_recursions, check_g_recursions, check_summation_identities};
use crate::error::{Error, Result};
use crate::form_factor::{
    check_jacobian, check_mapping_coherence, check_omega, check_oracle_equivalence, check_reordering, ff_brute, ff_det,
    map_phi, map_psi, omega_split, Entry, FFProblem,
};
use crate::numeric::{format_c64, Backend, ParamSet, QComplex, Scalar};
use crate::report::{Report, SuiteConfig};
use crate::scalar_product::{check_highest_coefficient, check_orthogonality, scalar_product, scalar_product_reference};

/// Exit status when every check passed.
pub const EXIT_OK: i32 = 0;
/// A check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Malformed or inconsistent input.
pub const EXIT_INPUT: i32 = 2;
/// Singular configuration or missing r-value.
pub const EXIT_SINGULAR: i32 = 3;
/// Newton iteration failed.
pub const EXIT_NO_CONVERGENCE: i32 = 4;

const KEYS: &[&str] = &[
    "task", "backend", "c", "entry", "uC", "vC", "uB", "vB", "z", "r1z", "r3z", "suite", "max-n", "trials", "seed",
    "tol", "L", "xi", "a", "b", "init", "m",
];

/// What the program is asked to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Verify,
    Sp,
    Ff,
    Chain,
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Task> {
        match s {
            "verify" => Ok(Task::Verify),
            "sp" => Ok(Task::Sp),
            "ff" => Ok(Task::Ff),
            "chain" => Ok(Task::Chain),
            other => Err(Error::Parse(format!("unknown task `{other}` (verify, sp, ff, chain)"))),
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Task::Verify => "verify",
            Task::Sp => "sp",
            Task::Ff => "ff",
            Task::Chain => "chain",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Scalar(String),
    List(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
struct Field {
    line: usize,
    value: Value,
}

/// A parsed input document.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct InputDoc {
    fields: BTreeMap<String, Field>,
}

fn parse_error(line: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<InputDoc> {
        let mut fields = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .ok_or_else(|| parse_error(line, format!("expected `key = value`, got `{body}`")))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(parse_error(line, format!("unknown key `{key}`")));
            }
            let value = value.trim();
            let value = match value.strip_prefix('[') {
                Some(rest) => {
                    let inner = rest
                        .strip_suffix(']')
                        .ok_or_else(|| parse_error(line, format!("unterminated array for `{key}`")))?;
                    let items: Vec<String> =
                        inner.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
                    Value::List(items)
                }
                None if value.is_empty() => return Err(parse_error(line, format!("empty value for `{key}`"))),
                None => Value::Scalar(value.to_string()),
            };
            if let Some(prev) = fields.insert(key.to_string(), Field { line, value }) {
                return Err(parse_error(line, format!("`{key}` already set on line {}", prev.line)));
            }
        }
        Ok(InputDoc { fields })
    }

    fn scalar_text(&self, key: &str) -> Result<Option<(usize, &str)>> {
        match self.fields.get(key) {
            None => Ok(None),
            Some(Field { line, value: Value::Scalar(s) }) => Ok(Some((*line, s))),
            Some(Field { line, .. }) => Err(parse_error(*line, format!("`{key}` must be a single value"))),
        }
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: fmt::Display,
    {
        self.scalar_text(key)?
            .map(|(line, s)| s.parse::<T>().map_err(|e| parse_error(line, format!("`{key}`: {e}"))))
            .transpose()
    }

    fn required<T: FromStr>(&self, key: &str, task: Task) -> Result<T>
    where
        T::Err: fmt::Display,
    {
        self.parsed(key)?.ok_or_else(|| missing(key, task))
    }

    fn scalar<S: Scalar>(&self, key: &str) -> Result<Option<S>> {
        self.scalar_text(key)?
            .map(|(line, s)| S::parse_text(s).map_err(|e| parse_error(line, format!("`{key}`: {e}"))))
            .transpose()
    }

    fn list<S: Scalar>(&self, key: &str) -> Result<Option<Vec<S>>> {
        match self.fields.get(key) {
            None => Ok(None),
            Some(Field { line, value: Value::List(items) }) => items
                .iter()
                .map(|s| S::parse_text(s).map_err(|e| parse_error(*line, format!("`{key}`: {e}"))))
                .collect::<Result<Vec<S>>>()
                .map(Some),
            Some(Field { line, .. }) => Err(parse_error(*line, format!("`{key}` must be an array `[...]`"))),
        }
    }

    fn set<S: Scalar>(&self, key: &str, task: Task) -> Result<ParamSet<S>> {
        let line = self.fields.get(key).map(|f| f.line);
        let elems = self.list(key)?.ok_or_else(|| missing(key, task))?;
        ParamSet::new(key, elems).map_err(|e| parse_error(line.unwrap_or(0), e))
    }

    pub fn task(&self) -> Result<Option<Task>> {
        self.parsed("task")
    }
}

fn missing(key: &str, task: Task) -> Error {
    Error::Parse(format!("missing key `{key}` (required by task {task})"))
}

/// Command-line overrides; `None` falls back to the document, then to defaults.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub task: Option<Task>,
    pub backend: Option<Backend>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
}

/// Exit status for an error raised while running.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SingularConfiguration(_)
        | Error::MissingRValue { .. }
        | Error::ConflictingRValue { .. }
        | Error::DrawExhausted(_) => EXIT_SINGULAR,
        Error::NoConvergence { .. } | Error::DegenerateJacobian => EXIT_NO_CONVERGENCE,
        Error::Parse(_)
        | Error::CardinalityMismatch(_)
        | Error::OffShell(_)
        | Error::UnsupportedEntry(..)
        | Error::BackendMismatch(_) => EXIT_INPUT,
    }
}

/// Parses and runs a document, returning the text to print and the exit status.
pub fn run_text(input: &str, opts: &RunOptions) -> (String, i32) {
    let start = Instant::now();
    match InputDoc::parse(input).and_then(|doc| run(&doc, opts)) {
        Ok(mut report) => {
            report.elapsed = start.elapsed();
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            (format!("{report}time: {:.3} s\n", report.elapsed.as_secs_f64()), code)
        }
        Err(e) => (format!("error: {e}\nstatus: error\n"), exit_code(&e)),
    }
}

/// Runs a parsed document.
pub fn run(doc: &InputDoc, opts: &RunOptions) -> Result<Report> {
    let task = match (opts.task, doc.task()?) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Parse(format!("command line asks for task {a} but the document says {b}")))
        }
        (Some(t), _) | (None, Some(t)) => t,
        (None, None) => return Err(Error::Parse("no task given".into())),
    };
    let backend = match opts.backend {
        Some(b) => b,
        None => doc.parsed::<Backend>("backend")?.unwrap_or(match task {
            Task::Chain => Backend::Float,
            _ => Backend::Rational,
        }),
    };
    let mut report = match (task, backend) {
        (Task::Verify, Backend::Rational) => verify::<QComplex>(doc, opts)?,
        (Task::Verify, Backend::Float) => verify::<Complex64>(doc, opts)?,
        (Task::Sp, Backend::Rational) => sp::<QComplex>(doc)?,
        (Task::Sp, Backend::Float) => sp::<Complex64>(doc)?,
        (Task::Ff, Backend::Rational) => ff::<QComplex>(doc, opts)?,
        (Task::Ff, Backend::Float) => ff::<Complex64>(doc, opts)?,
        (Task::Chain, Backend::Float) => chain(doc, opts)?,
        (Task::Chain, Backend::Rational) => {
            return Err(Error::BackendMismatch("the chain task solves Bethe equations in floating point".into()))
        }
    };
    report.name = format!("{task} ({})", backend.name());
    Ok(report)
}

fn show<S: Scalar>(v: &S) -> String {
    match S::BACKEND {
        Backend::Rational => v.to_string(),
        Backend::Float => format_c64(&v.to_c64()),
    }
}

fn rational_c(doc: &InputDoc) -> Result<(i64, i64)> {
    let Some((line, text)) = doc.scalar_text("c")? else { return Ok((1, 1)) };
    let bad = || parse_error(line, format!("`c` must be a nonzero rational `p/q` for the suites, got `{text}`"));
    let (n, d) = text.split_once('/').unwrap_or((text, "1"));
    let (n, d): (i64, i64) = (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
    if n == 0 || d == 0 {
        return Err(bad());
    }
    Ok((n, d))
}

fn all_sizes(max: usize) -> Vec<(usize, usize)> {
    (0..=max).flat_map(|a| (0..=max).map(move |b| (a, b))).collect()
}

fn verify<S: Scalar>(doc: &InputDoc, opts: &RunOptions) -> Result<Report> {
    let suite: String = doc.required("suite", Task::Verify)?;
    let defaults = SuiteConfig::default();
    let cfg = SuiteConfig {
        trials: doc.parsed("trials")?.unwrap_or(defaults.trials),
        seed: opts.seed.or(doc.parsed("seed")?).unwrap_or(defaults.seed),
        tol: opts.tol.or(doc.parsed("tol")?).unwrap_or(defaults.tol),
        c: rational_c(doc)?,
    };
    let max_n: Option<usize> = doc.parsed("max-n")?;
    let n = |default: usize| max_n.unwrap_or(default);
    let mut report = Report::new("verify");
    let mut run_suite = |name: &str| -> Result<()> {
        match name {
            "dwpf" => {
                for k in 1..=n(4) {
                    report.absorb(check_dwpf_recursions::<S>(k, &cfg)?);
                }
            }
            "lemmas" => {
                report.absorb(check_summation_identities::<S>(n(6), n(5), n(4), &cfg)?);
                for m in 2..=n(3).max(2) {
                    report.absorb(check_g_recursions::<S>(m, &cfg)?);
                }
            }
            "hc" => report.absorb(check_highest_coefficient::<S>(n(3), n(3), &cfg)?),
            "orthogonality" => report.absorb(check_orthogonality::<S>(n(2), n(2), &cfg)?),
            "ff" => report.absorb(check_oracle_equivalence::<S>(&all_sizes(n(2)), &cfg)?),
            "mapping" => report.absorb(check_mapping_coherence::<S>(n(2), &cfg)?),
            "jacobian" => report.absorb(check_jacobian::<S>(&all_sizes(n(2)), &cfg)?),
            "omega" => report.absorb(check_omega::<S>(&all_sizes(n(1)), &cfg)?),
            "reorder" => report.absorb(check_reordering::<S>(&[(n(2), n(2))], &cfg)?),
            "chain" => report.absorb(check_chain(&cfg)?),
            other => {
                return Err(Error::Parse(format!(
                    "unknown suite `{other}` (dwpf, lemmas, hc, orthogonality, ff, mapping, jacobian, omega, reorder, chain, all)"
                )))
            }
        }
        Ok(())
    };
    if suite == "all" {
        for name in ["dwpf", "lemmas", "hc", "orthogonality", "ff", "mapping", "jacobian", "omega", "reorder", "chain"] {
            run_suite(name)?;
        }
    } else {
        run_suite(&suite)?;
    }
    report.value("suite", &suite);
    report.value("max_residual", format!("{:e}", report.max_residual()));
    Ok(report)
}

fn on_shell_pair<S: Scalar>(doc: &InputDoc, task: Task) -> Result<(BetheData<S>, BetheData<S>)> {
    let c: S = doc.scalar("c")?.unwrap_or_else(S::one);
    let cd = synthesize_on_shell(doc.set("uC", task)?, doc.set("vC", task)?, c.clone(), &[])?;
    let bd = synthesize_on_shell(doc.set("uB", task)?, doc.set("vB", task)?, c, &[])?;
    Ok((cd, bd))
}

fn agreement<S: Scalar>(report: &mut Report, label: &str, lhs: &S, rhs: &S, tol: f64) {
    report.compare(label, lhs, rhs, tol);
    let check = report.checks.last().expect("just pushed");
    report.note(match (S::BACKEND, check.passed) {
        (Backend::Rational, true) => format!("agreement: exact ({label})"),
        (_, true) => format!("agreement: {:e} ({label})", check.residual),
        (_, false) => format!("disagreement: {:e} ({label})", check.residual),
    });
}

fn sp<S: Scalar>(doc: &InputDoc) -> Result<Report> {
    let (cd, bd) = on_shell_pair::<S>(doc, Task::Sp)?;
    let r = cd.r.merged(&bd.r)?;
    let cd = BetheData { r: r.clone(), ..cd };
    let bd = BetheData { r, ..bd };
    let mut report = Report::new("sp");
    let s = scalar_product(&cd, &bd)?;
    report.value("S", show(&s));
    let tol = doc.parsed("tol")?.unwrap_or(SuiteConfig::default().tol);
    agreement(&mut report, "regularized vs literal sum", &s, &scalar_product_reference(&cd, &bd)?, tol);
    Ok(report)
}

/// Brute-force value for any entry, carried over by the mappings when the
/// entry has no action formula of its own.
fn transported_brute<S: Scalar>(p: &FFProblem<S>) -> Result<S> {
    match p.entry {
        Entry::E12 | Entry::E13 => ff_brute(p),
        Entry::E23 => ff_brute(&map_phi(p)),
        Entry::E21 => ff_brute(&map_psi(p)),
        Entry::E32 => ff_brute(&map_phi(&map_psi(p))),
    }
}

fn ff<S: Scalar>(doc: &InputDoc, opts: &RunOptions) -> Result<Report> {
    let entry: Entry = doc.required("entry", Task::Ff)?;
    let z: S = doc.scalar("z")?.ok_or_else(|| missing("z", Task::Ff))?;
    let (cd, bd) = on_shell_pair::<S>(doc, Task::Ff)?;
    let r1z = doc.scalar::<S>("r1z")?.unwrap_or_else(S::zero);
    let r3z = doc.scalar::<S>("r3z")?.unwrap_or_else(S::zero);
    let p = FFProblem::new(entry, z, cd, bd, Some(r1z), Some(r3z))?;
    let tol = opts.tol.or(doc.parsed("tol")?).unwrap_or(SuiteConfig::default().tol);
    ff_report(&p, tol)
}

fn ff_report<S: Scalar>(p: &FFProblem<S>, tol: f64) -> Result<Report> {
    let mut report = Report::new("ff");
    report.value("entry", p.entry);
    let brute = transported_brute(p)?;
    if p.entry == Entry::E13 {
        report.value("F", show(&brute));
        report.note("determinant: none for (1,3); brute force only");
        return Ok(report);
    }
    let det = ff_det(p)?;
    report.value("F", show(&det));
    if p.entry == Entry::E12 {
        let (o1, o2) = omega_split(p)?;
        report.value("omega1", show(&o1));
        report.value("omega2", show(&o2));
    }
    agreement(&mut report, "determinant vs brute force", &det, &brute, tol);
    Ok(report)
}

fn chain(doc: &InputDoc, opts: &RunOptions) -> Result<Report> {
    let l: usize = doc.required("L", Task::Chain)?;
    let c: Complex64 = doc.scalar("c")?.unwrap_or(Complex64::new(1.0, 0.0));
    let spec = match doc.list::<Complex64>("xi")? {
        Some(xi) if xi.len() != l => {
            return Err(Error::CardinalityMismatch(format!("`xi` has {} entries for L = {l}", xi.len())))
        }
        Some(xi) => ChainSpec::new(c, xi)?,
        None => ChainSpec::homogeneous(l, c)?,
    };
    let a: usize = doc.required("a", Task::Chain)?;
    let b: usize = doc.required("b", Task::Chain)?;
    let entry: Entry = doc.parsed("entry")?.unwrap_or(Entry::E12);
    let m: usize = doc.parsed("m")?.unwrap_or(1);
    let z: Complex64 = doc.scalar("z")?.unwrap_or(c * Complex64::new(0.37, 0.21));
    let newton = NewtonOptions {
        seed: opts.seed.or(doc.parsed("seed")?).unwrap_or(0),
        tol: opts.tol.or(doc.parsed("tol")?).unwrap_or(NewtonOptions::default().tol),
        ..NewtonOptions::default()
    };
    let init = doc.list::<Complex64>("init")?;
    let solve = |a: usize, b: usize, init: Option<&[Complex64]>| -> Result<BetheData<Complex64>> {
        if a + b == 0 {
            let r = chain_r_functions(&spec);
            return Ok(BetheData { on_shell: true, ..BetheData::new(ParamSet::empty("u"), ParamSet::empty("v"), r) });
        }
        solve_bethe_newton(&spec, a, b, init, &newton)
    };
    let bd = solve(a, b, init.as_deref())?;
    let (da, db) = entry.size_shift();
    let (ac, bc) = (a as isize + da, b as isize + db);
    if ac < 0 || bc < 0 {
        return Err(Error::CardinalityMismatch(format!("entry {entry} lowers a size below zero from ({a}, {b})")));
    }
    let cd = solve(ac as usize, bc as usize, None)?;

    let mut report = Report::new("chain");
    for (label, d) in [("B", &bd), ("C", &cd)] {
        report.value(format!("u{label}"), roots(&d.u));
        report.value(format!("v{label}"), roots(&d.v));
        let res = bethe_residual(d)?;
        report.flag(format!("{label}: Bethe residual {res:e} below {:e}", newton.tol), res < newton.tol);
    }
    let p = FFProblem::new(entry, z, cd, bd, None, None)?;
    report.value("z", format_c64(&z));
    report.absorb(ff_report(&p, opts.tol.unwrap_or(SuiteConfig::default().tol))?);
    report.value("local_prefactor", format_c64(&local_prefactor(&spec, m, &p.cd, &p.bd)?));
    if p.entry != Entry::E13 && spec.is_homogeneous() {
        report.value("rescaled_ff_at_zero", format_c64(&rescaled_ff_at_zero(&spec, &p)?));
        report.value(format!("local_ff_site_{m}"), format_c64(&local_form_factor(&spec, m, &p)?));
    }
    Ok(report)
}

fn roots(xs: &[Complex64]) -> String {
    let items: Vec<String> = xs.iter().map(format_c64).collect();
    format!("[{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE_MAGNON: &str = "
        # one-magnon form factor
        backend = rational
        c = 1
        entry = 1,2
        uC = [2]
        vC = []
        uB = []
        vB = []
        z = 0
        r1z = 3
    ";

    fn ff_opts() -> RunOptions {
        RunOptions { task: Some(Task::Ff), ..RunOptions::default() }
    }

    #[test]
    fn one_magnon_document() {
        let (out, code) = run_text(ONE_MAGNON, &ff_opts());
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("RESULT: F = 1\n"), "{out}");
        assert!(out.contains("agreement: exact"), "{out}");
    }

    #[test]
    fn missing_z_is_an_input_error() {
        let doc = ONE_MAGNON.replace("z = 0", "");
        let (out, code) = run_text(&doc, &ff_opts());
        assert_eq!(code, EXIT_INPUT);
        assert!(out.contains("missing key `z`"), "{out}");
    }

    #[test]
    fn parse_diagnostics_carry_line_numbers() {
        let err = InputDoc::parse("c = 1\nfoo = 2\n").unwrap_err();
        assert_eq!(err, Error::Parse("line 2: unknown key `foo`".into()));
        assert!(InputDoc::parse("c = 1\nc = 2").is_err());
        assert!(InputDoc::parse("uC = [1, 2").is_err());
        assert!(InputDoc::parse("just words").is_err());
        let doc = InputDoc::parse("uC = [1/2, x]\n").unwrap();
        assert!(matches!(doc.list::<QComplex>("uC"), Err(Error::Parse(m)) if m.starts_with("line 1")));
    }

    #[test]
    fn task_conflicts_are_rejected() {
        let doc = format!("task = sp\n{ONE_MAGNON}");
        let (_, code) = run_text(&doc, &ff_opts());
        assert_eq!(code, EXIT_INPUT);
        let (out, code) = run_text(&doc.replace("task = sp", "task = ff"), &RunOptions::default());
        assert_eq!(code, EXIT_OK, "{out}");
    }

    #[test]
    fn singular_input_exits_3() {
        let doc = ONE_MAGNON.replace("z = 0", "z = 2");
        let (out, code) = run_text(&doc, &ff_opts());
        assert_eq!(code, EXIT_SINGULAR, "{out}");
    }

    #[test]
    fn verify_dwpf_suite() {
        let doc = "task = verify\nsuite = dwpf\nmax-n = 4\nseed = 7\nbackend = rational\n";
        let (out, code) = run_text(doc, &RunOptions::default());
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("RESULT: max_residual = 0e0"), "{out}");
    }

    #[test]
    fn reports_are_deterministic() {
        let doc = "task = verify\nsuite = ff\nmax-n = 1\ntrials = 2\nbackend = float\n";
        let strip = |s: String| s.lines().filter(|l| !l.starts_with("time:")).collect::<Vec<_>>().join("\n");
        let (a, _) = run_text(doc, &RunOptions::default());
        let (b, _) = run_text(doc, &RunOptions::default());
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn scalar_product_task() {
        let doc = "task = sp\nc = 1\nuC = [1/3]\nvC = [5/2]\nuB = [-7/4]\nvB = [9/5]\n";
        let (out, code) = run_text(doc, &RunOptions::default());
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("RESULT: S = 0\n"), "{out}");
    }

    #[test]
    fn chain_task() {
        let doc = "task = chain\nL = 2\na = 0\nb = 0\nentry = 1,2\nm = 1\n";
        let (out, code) = run_text(doc, &RunOptions::default());
        assert_eq!(code, EXIT_OK, "{out}");
        let line = out.lines().find_map(|l| l.strip_prefix("RESULT: rescaled_ff_at_zero = ")).expect("value printed");
        let v = Complex64::parse_text(line).unwrap();
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-12, "{out}");
        let (_, code) = run_text(&format!("{doc}backend = rational\n"), &RunOptions::default());
        assert_eq!(code, EXIT_INPUT);
        let (_, code) = run_text("task = chain\nL = 2\na = 1\nb = 0\ninit = [0]\n", &RunOptions::default());
        assert!(code == EXIT_SINGULAR || code == EXIT_NO_CONVERGENCE);
    }
}
