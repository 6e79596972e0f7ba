use std::fmt;
use std::time::Duration;

use crate::numeric::{Backend, Scalar, FLOAT_REL_TOL};

/// Shared knobs of the randomized identity suites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    /// Relative tolerance for the float backend; ignored by the exact one.
    pub tol: f64,
    /// Coupling `c` as `(numerator, denominator)`.
    pub c: (i64, i64),
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { trials: 20, seed: 7, tol: FLOAT_REL_TOL, c: (1, 1) }
    }
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub residual: f64,
    pub passed: bool,
}

/// Outcome of a computation or identity suite.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
    pub values: Vec<(String, String)>,
    /// Free-form lines printed between the results and the check summary.
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report { name: name.into(), ..Default::default() }
    }

    /// Records `lhs` against `rhs`: exact equality for the rational backend,
    /// relative residual at most `tol` for floats.
    pub fn compare<S: Scalar>(&mut self, label: impl Into<String>, lhs: &S, rhs: &S, tol: f64) {
        let mut residual = lhs.residual(rhs);
        let passed = match S::BACKEND {
            Backend::Rational => {
                let equal = (lhs.clone() - rhs).is_zero();
                if !equal && residual == 0.0 {
                    residual = f64::MIN_POSITIVE;
                }
                equal
            }
            Backend::Float => residual <= tol,
        };
        self.checks.push(Check { label: label.into(), residual, passed });
    }

    pub fn flag(&mut self, label: impl Into<String>, passed: bool) {
        let residual = if passed { 0.0 } else { 1.0 };
        self.checks.push(Check { label: label.into(), residual, passed });
    }

    pub fn value(&mut self, name: impl Into<String>, v: impl fmt::Display) {
        self.values.push((name.into(), v.to_string()));
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn absorb(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.values.extend(other.values);
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "task: {}", self.name)?;
        for (name, v) in &self.values {
            writeln!(f, "RESULT: {name} = {v}")?;
        }
        for line in &self.notes {
            writeln!(f, "{line}")?;
        }
        if !self.checks.is_empty() {
            let failed = self.failures().count();
            writeln!(f, "checks: {} run, {} failed, max residual {:e}", self.checks.len(), failed, self.max_residual())?;
            for c in self.failures() {
                writeln!(f, "FAILED: {} (residual {:e})", c.label, c.residual)?;
            }
        }
        writeln!(f, "status: {}", if self.passed() { "pass" } else { "fail" })
    }
}
