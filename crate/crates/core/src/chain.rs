//! The SU(3)-invariant XXX chain in the fundamental representation.
//!
//! Sites carry inhomogeneities `ξ_n`; with the all-site-1 pseudovacuum the
//! r-functions are `r1(w) = ∏ f(w, ξ_n)` and `r3(w) = 1`.

use std::sync::Arc;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bethe::{bethe_residual, BetheData, RClosedForm, RTable};
use crate::error::{singular, Error, Result};
use crate::form_factor::{det_matrices, ff_brute, ff_det, map_phi, map_psi, Entry, FFProblem};
use crate::numeric::{f, set_product, solve_linear, t, Kernel, ParamSet, Scalar};
use crate::report::{Report, SuiteConfig};

/// Site count, coupling and inhomogeneities of a chain.
#[derive(Clone, Debug)]
pub struct ChainSpec<S> {
    pub c: S,
    pub xi: Vec<S>,
}

impl<S: Scalar> ChainSpec<S> {
    /// `l` sites, all inhomogeneities zero.
    pub fn homogeneous(l: usize, c: S) -> Result<Self> {
        Self::new(c, vec![S::zero(); l])
    }

    pub fn new(c: S, xi: Vec<S>) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::CardinalityMismatch("a chain needs at least one site".into()));
        }
        Ok(ChainSpec { c, xi })
    }

    pub fn sites(&self) -> usize {
        self.xi.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.xi.iter().all(S::is_zero)
    }
}

struct ChainR<S> {
    c: S,
    xi: Vec<S>,
}

impl<S: Scalar> RClosedForm<S> for ChainR<S> {
    fn r1(&self, w: &S) -> Result<S> {
        set_product(Kernel::F, std::slice::from_ref(w), &self.xi, &self.c)
    }
    fn r3(&self, _w: &S) -> Result<S> {
        Ok(S::one())
    }
}

/// An empty table backed by the chain's closed-form r-functions.
///
/// ```
/// use bethe_ff::chain::{chain_r_functions, ChainSpec};
/// use bethe_ff::numeric::{QComplex, Scalar};
///
/// let spec = ChainSpec::homogeneous(2, QComplex::one()).unwrap();
/// let r = chain_r_functions(&spec);
/// assert_eq!(r.r1(&QComplex::from_i64(1)).unwrap(), QComplex::from_i64(4));
/// assert_eq!(r.r3(&QComplex::from_i64(7)).unwrap(), QComplex::one());
/// ```
pub fn chain_r_functions<S: Scalar>(spec: &ChainSpec<S>) -> RTable<S> {
    let closed = ChainR { c: spec.c.clone(), xi: spec.xi.clone() };
    RTable::with_closed_form(spec.c.clone(), Arc::new(closed))
}

/// Controls for [`solve_bethe_newton`].
#[derive(Clone, Debug)]
pub struct NewtonOptions {
    pub max_iter: usize,
    pub tol: f64,
    /// Seed for the heuristic starting points.
    pub seed: u64,
    /// Number of heuristic starts tried when no guess is supplied.
    pub restarts: usize,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions { max_iter: 200, tol: 1e-12, seed: 0, restarts: 64 }
    }
}

#[derive(Clone, Copy)]
enum Arg {
    Root(usize),
    Site(usize),
}

/// `log f(p, q)` with multiplicity `sign`.
struct LogTerm {
    sign: f64,
    p: Arg,
    q: Arg,
}

fn log_terms(l: usize, a: usize, b: usize) -> Vec<Vec<LogTerm>> {
    let term = |sign, p, q| LogTerm { sign, p, q };
    let (u, v) = (|j| Arg::Root(j), |j| Arg::Root(a + j));
    let mut eqs = Vec::with_capacity(a + b);
    for j in 0..a {
        let mut e: Vec<LogTerm> = (0..l).map(|n| term(1.0, u(j), Arg::Site(n))).collect();
        for k in (0..a).filter(|&k| k != j) {
            e.push(term(-1.0, u(j), u(k)));
            e.push(term(1.0, u(k), u(j)));
        }
        e.extend((0..b).map(|k| term(-1.0, v(k), u(j))));
        eqs.push(e);
    }
    for j in 0..b {
        let mut e = Vec::new();
        for k in (0..b).filter(|&k| k != j) {
            e.push(term(1.0, v(j), v(k)));
            e.push(term(-1.0, v(k), v(j)));
        }
        e.extend((0..a).map(|k| term(-1.0, v(j), u(k))));
        eqs.push(e);
    }
    eqs
}

/// Logarithms of the Bethe-equation ratios and their Jacobian.
fn log_system(
    terms: &[Vec<LogTerm>],
    x: &[Complex64],
    xi: &[Complex64],
    c: Complex64,
) -> Result<(Vec<Complex64>, Vec<Vec<Complex64>>)> {
    let n = x.len();
    let val = |arg: Arg| match arg {
        Arg::Root(k) => x[k],
        Arg::Site(k) => xi[k],
    };
    let mut res = Vec::with_capacity(n);
    let mut jac = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for (row, eq) in terms.iter().enumerate() {
        let mut prod = Complex64::new(1.0, 0.0);
        for term in eq {
            let (p, q) = (val(term.p), val(term.q));
            let fv = f(&p, &q, &c)?;
            prod *= if term.sign > 0.0 { fv } else { fv.checked_inv().ok_or_else(|| singular("f = 0"))? };
            // d log f(p,q) / dp = -t(p,q)/c, d/dq = +t(p,q)/c
            let d = t(&p, &q, &c)? / c * term.sign;
            if let Arg::Root(k) = term.p {
                jac[row][k] -= d;
            }
            if let Arg::Root(k) = term.q {
                jac[row][k] += d;
            }
        }
        res.push(prod.ln());
    }
    Ok((res, jac))
}

fn pack(spec: &ChainSpec<Complex64>, a: usize, x: &[Complex64]) -> Result<BetheData<Complex64>> {
    Ok(BetheData::new(
        ParamSet::new("u", x[..a].to_vec())?,
        ParamSet::new("v", x[a..].to_vec())?,
        chain_r_functions(spec),
    ))
}

enum Attempt {
    Converged(BetheData<Complex64>),
    Failed(Error),
}

fn newton(spec: &ChainSpec<Complex64>, a: usize, mut x: Vec<Complex64>, opts: &NewtonOptions) -> Attempt {
    let terms = log_terms(spec.sites(), a, x.len() - a);
    let scale = spec.c.norm();
    let mut last = f64::INFINITY;
    for _ in 0..opts.max_iter {
        let (res, jac) = match log_system(&terms, &x, &spec.xi, spec.c) {
            Ok(s) => s,
            Err(e) => return Attempt::Failed(e),
        };
        last = res.iter().map(|r| r.norm()).fold(0.0, f64::max);
        if last < opts.tol * 1e-2 {
            break;
        }
        let rhs: Vec<Complex64> = res.iter().map(|r| -r).collect();
        let Some(mut dx) = solve_linear(&jac, &rhs) else {
            return Attempt::Failed(Error::DegenerateJacobian);
        };
        let step = dx.iter().map(|d| d.norm()).fold(0.0, f64::max);
        if step > scale {
            dx.iter_mut().for_each(|d| *d *= scale / step);
        }
        x.iter_mut().zip(&dx).for_each(|(xi, d)| *xi += d);
        if x.iter().any(|v| !v.is_finite() || v.norm() > 1e6 * scale) {
            return Attempt::Failed(Error::NoConvergence { iterations: opts.max_iter, residual: last });
        }
        if step < 1e-15 * scale {
            break;
        }
    }
    let distinct = x.iter().enumerate().all(|(i, p)| x[i + 1..].iter().all(|q| (p - q).norm() > 1e-6 * scale));
    let data = match pack(spec, a, &x) {
        Ok(d) if distinct => d,
        Ok(_) => return Attempt::Failed(singular("Newton collapsed two roots")),
        Err(e) => return Attempt::Failed(e),
    };
    match bethe_residual(&data) {
        Ok(r) if r < opts.tol => match data.mark_on_shell(opts.tol) {
            Ok(d) => Attempt::Converged(d),
            Err(e) => Attempt::Failed(e),
        },
        Ok(r) => Attempt::Failed(Error::NoConvergence { iterations: opts.max_iter, residual: r.min(last) }),
        Err(e) => Attempt::Failed(e),
    }
}

/// Heuristic start: u-roots near `Re u = -c/2`, v-roots near `Re v = -c`,
/// spread along the imaginary axis.
fn heuristic_start(rng: &mut ChaCha8Rng, c: Complex64, a: usize, b: usize) -> Vec<Complex64> {
    let mut spread = |centre: f64, count: usize| -> Vec<Complex64> {
        (0..count)
            .map(|j| {
                let im = (j as f64 - (count as f64 - 1.0) / 2.0) * 0.8 + rng.random_range(-0.4..0.4);
                c * Complex64::new(centre + rng.random_range(-0.15..0.15), im)
            })
            .collect()
    };
    let mut x = spread(-0.5, a);
    x.extend(spread(-1.0, b));
    x
}

/// Solves the chain's Bethe equations for `a` u-roots and `b` v-roots by
/// Newton iteration on their logarithmic form.
///
/// `init` lists the u-guesses followed by the v-guesses. Without it, seeded
/// heuristic starts are tried until one converges to distinct roots.
pub fn solve_bethe_newton(
    spec: &ChainSpec<Complex64>,
    a: usize,
    b: usize,
    init: Option<&[Complex64]>,
    opts: &NewtonOptions,
) -> Result<BetheData<Complex64>> {
    if a + b == 0 {
        return Err(Error::CardinalityMismatch("Newton needs at least one root".into()));
    }
    if let Some(guess) = init {
        if guess.len() != a + b {
            return Err(Error::CardinalityMismatch(format!("{} initial guesses for {} roots", guess.len(), a + b)));
        }
        return match newton(spec, a, guess.to_vec(), opts) {
            Attempt::Converged(d) => Ok(d),
            Attempt::Failed(e) => Err(e),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best = f64::INFINITY;
    for _ in 0..opts.restarts.max(1) {
        match newton(spec, a, heuristic_start(&mut rng, spec.c, a, b), opts) {
            Attempt::Converged(d) => return Ok(d),
            Attempt::Failed(Error::NoConvergence { residual, .. }) => best = best.min(residual),
            Attempt::Failed(_) => {}
        }
    }
    Err(Error::NoConvergence { iterations: opts.max_iter, residual: best })
}

/// Transfer-matrix eigenvalue with the site factors restored:
/// `∏(w-ξ+c) f(ū,w) + ∏(w-ξ) [f(w,ū) f(v̄,w) + f(w,v̄)]`.
pub fn tau_hat<S: Scalar>(spec: &ChainSpec<S>, w: &S, d: &BetheData<S>) -> Result<S> {
    let c = &spec.c;
    let ws = std::slice::from_ref(w);
    let (mut lam1, mut lam2) = (S::one(), S::one());
    for x in &spec.xi {
        let diff = w.clone() - x;
        lam1 = lam1 * (diff.clone() + c);
        lam2 = lam2 * diff;
    }
    let mut out = lam1 * set_product(Kernel::F, &d.u, ws, c)?;
    if !lam2.is_zero() {
        out = out
            + lam2
                * (set_product(Kernel::F, ws, &d.u, c)? * set_product(Kernel::F, &d.v, ws, c)?
                    + set_product(Kernel::F, ws, &d.v, c)?);
    }
    Ok(out)
}

/// `τ̂_C(0)^{m-1} τ̂_B(0)^{-m}`: the dressing that turns the monodromy entry
/// at zero into the local operator on site `m` (1-based).
pub fn local_prefactor<S: Scalar>(spec: &ChainSpec<S>, m: usize, cd: &BetheData<S>, bd: &BetheData<S>) -> Result<S> {
    if m == 0 || m > spec.sites() {
        return Err(Error::CardinalityMismatch(format!("site {m} outside 1..={}", spec.sites())));
    }
    if !cd.on_shell || !bd.on_shell {
        return Err(Error::OffShell("local prefactor needs on-shell states".into()));
    }
    let zero = S::zero();
    let tc = tau_hat(spec, &zero, cd)?;
    let tb = tau_hat(spec, &zero, bd)?;
    Ok(tc.powi(m as i64 - 1)? * tb.powi(-(m as i64))?)
}

/// `lim_{z→0} z^L F(z)` for a homogeneous chain.
///
/// Only the `r1(z)` term of the `z` column survives the limit; it is kept with
/// `z^L r1(z) → c^L` and everything else in that column is dropped.
pub fn rescaled_ff_at_zero<S: Scalar>(spec: &ChainSpec<S>, p: &FFProblem<S>) -> Result<S> {
    if !spec.is_homogeneous() {
        return Err(singular("the z → 0 limit needs a homogeneous chain"));
    }
    if p.entry == Entry::E13 {
        return Err(Error::UnsupportedEntry(1, 3));
    }
    let at_zero = |r1: S| {
        let mut q = p.clone();
        q.z = S::zero();
        q.r.override_r1(S::zero(), r1);
        q.r.override_r3(S::zero(), S::zero());
        q
    };
    let cl = spec.c.powi(spec.sites() as i64)?;
    let mut full = det_matrices(&at_zero(cl), None)?;
    let regular = det_matrices(&at_zero(S::zero()), None)?;
    let k = full
        .xbar
        .iter()
        .position(|x| x.is_zero())
        .expect("the union set contains z");
    for (row, reg) in full.n.iter_mut().zip(&regular.n) {
        row[k] = row[k].clone() - &reg[k];
    }
    Ok(full.value())
}

/// `⟨C| E_m |B⟩` for the local operator paired with entry `(i,j)`:
/// [`local_prefactor`] times [`rescaled_ff_at_zero`].
pub fn local_form_factor<S: Scalar>(spec: &ChainSpec<S>, m: usize, p: &FFProblem<S>) -> Result<S> {
    Ok(local_prefactor(spec, m, &p.cd, &p.bd)? * rescaled_ff_at_zero(spec, p)?)
}

/// `(L, a, b)` sectors exercised by [`check_chain`].
pub const SUITE_SECTORS: [(usize, usize, usize); 6] = [(2, 1, 0), (3, 1, 0), (3, 2, 1), (4, 1, 0), (4, 2, 0), (4, 2, 1)];

/// Newton solutions for [`SUITE_SECTORS`], the two-site one-magnon root, and
/// determinant against brute-force form factors between solved states at a
/// generic `z`.
pub fn check_chain(cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("chain");
    let c = Complex64::new(cfg.c.0 as f64 / cfg.c.1 as f64, 0.0);
    let opts = NewtonOptions { seed: cfg.seed, ..NewtonOptions::default() };
    let mut states = Vec::new();
    for (l, a, b) in SUITE_SECTORS {
        let spec = ChainSpec::homogeneous(l, c)?;
        let d = solve_bethe_newton(&spec, a, b, None, &opts)?;
        let res = bethe_residual(&d)?;
        report.flag(format!("L={l} ({a},{b}): Bethe residual {res:e} < {:e}", opts.tol), d.on_shell && res < opts.tol);
        states.push(((l, a, b), d));
    }
    let state = |key: (usize, usize, usize)| states.iter().find(|(k, _)| *k == key).map(|(_, d)| d.clone());
    if let Some(d) = state((2, 1, 0)) {
        report.compare("L=2 (1,0): root = -c/2", &d.u[0], &(-c * 0.5), opts.tol);
    }
    let z = c * Complex64::new(0.37, 0.21);
    let pairs = [
        (Entry::E12, (2, 1, 0), None),
        (Entry::E12, (3, 1, 0), None),
        (Entry::E12, (4, 2, 0), Some((4, 1, 0))),
        (Entry::E23, (4, 2, 1), Some((4, 2, 0))),
        (Entry::E32, (4, 2, 0), Some((4, 2, 1))),
        (Entry::E21, (4, 1, 0), Some((4, 2, 0))),
    ];
    for (entry, ck, bk) in pairs {
        let (Some(cd), bd) = (state(ck), bk.and_then(state)) else { continue };
        let bd = match bd {
            Some(bd) => bd,
            None => {
                let spec = ChainSpec::homogeneous(ck.0, c)?;
                BetheData { on_shell: true, ..BetheData::new(ParamSet::empty("u"), ParamSet::empty("v"), chain_r_functions(&spec)) }
            }
        };
        let p = FFProblem::new(entry, z, cd, bd, None, None)?;
        let brute = match entry {
            Entry::E12 => ff_brute(&p)?,
            Entry::E23 => ff_brute(&map_phi(&p))?,
            Entry::E21 => ff_brute(&map_psi(&p))?,
            _ => ff_brute(&map_phi(&map_psi(&p)))?,
        };
        report.compare(format!("L={} {entry}: determinant vs brute force", ck.0), &ff_det(&p)?, &brute, cfg.tol);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bethe::synthesize_on_shell;
    use crate::numeric::{g, QComplex};

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn solve(l: usize, a: usize, b: usize) -> BetheData<Complex64> {
        let spec = ChainSpec::homogeneous(l, cx(1.0, 0.0)).unwrap();
        solve_bethe_newton(&spec, a, b, None, &NewtonOptions::default()).unwrap()
    }

    fn vacuum(l: usize) -> BetheData<Complex64> {
        let spec = ChainSpec::homogeneous(l, cx(1.0, 0.0)).unwrap();
        BetheData { on_shell: true, ..BetheData::new(ParamSet::empty("u"), ParamSet::empty("v"), chain_r_functions(&spec)) }
    }

    #[test]
    fn suite_passes() {
        let rep = check_chain(&SuiteConfig::default()).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.checks.len(), SUITE_SECTORS.len() + 1 + 6);
    }

    #[test]
    fn r_functions() {
        let spec = ChainSpec::homogeneous(1, QComplex::one()).unwrap();
        let r = chain_r_functions(&spec);
        let w = QComplex::from_ratio(2, 3);
        assert_eq!(r.r1(&w).unwrap(), QComplex::from_ratio(5, 2));
        assert!(r.r1(&QComplex::zero()).is_err());
        let spec = ChainSpec::homogeneous(2, QComplex::from_ratio(3, 2)).unwrap();
        let w = QComplex::from_i64(1);
        assert_eq!(chain_r_functions(&spec).r1(&w).unwrap(), QComplex::from_ratio(25, 4));
    }

    #[test]
    fn two_sites_one_magnon() {
        let d = solve(2, 1, 0);
        assert!(d.on_shell);
        assert!((d.u[0] - cx(-0.5, 0.0)).norm() < 1e-12);
        assert!(bethe_residual(&d).unwrap() < 1e-12);
    }

    #[test]
    fn three_sites_one_magnon() {
        // (u+1)/u = e^{±2πi/3}  =>  u = -1/2 ∓ i √3/6
        let d = solve(3, 1, 0);
        let expected = [cx(-0.5, 3f64.sqrt() / 6.0), cx(-0.5, -(3f64.sqrt()) / 6.0)];
        assert!(expected.iter().any(|e| (d.u[0] - e).norm() < 1e-12), "{:?}", d.u);
    }

    #[test]
    fn sectors_converge() {
        for &(l, a, b) in &[(2, 1, 0), (3, 1, 0), (3, 2, 1), (4, 1, 0), (4, 2, 0), (4, 2, 1)] {
            let d = solve(l, a, b);
            assert!(d.on_shell && bethe_residual(&d).unwrap() < 1e-12, "L={l} ({a},{b})");
        }
    }

    #[test]
    fn bad_guess_reports_an_error() {
        let spec = ChainSpec::homogeneous(2, cx(1.0, 0.0)).unwrap();
        assert!(solve_bethe_newton(&spec, 1, 0, Some(&[cx(0.0, 0.0)]), &NewtonOptions::default()).is_err());
        assert!(solve_bethe_newton(&spec, 1, 0, Some(&[]), &NewtonOptions::default()).is_err());
    }

    #[test]
    fn prefactor_examples() {
        let spec = ChainSpec::homogeneous(2, cx(1.0, 0.0)).unwrap();
        let b = solve(2, 1, 0);
        assert!((tau_hat(&spec, &cx(0.0, 0.0), &b).unwrap() - cx(-1.0, 0.0)).norm() < 1e-12);
        let p1 = local_prefactor(&spec, 1, &b, &b).unwrap();
        let p2 = local_prefactor(&spec, 2, &b, &b).unwrap();
        assert!((p1 - cx(-1.0, 0.0)).norm() < 1e-12 && (p2 - p1).norm() < 1e-12);
        assert!(local_prefactor(&spec, 3, &b, &b).is_err());
    }

    #[test]
    fn rescaled_one_magnon_hand_value() {
        // z^2 g(u,z)(r1(z) - 1) → c^2 g(u,0) = -2 at u = -1/2
        let spec = ChainSpec::homogeneous(2, cx(1.0, 0.0)).unwrap();
        let p = FFProblem::new(Entry::E12, cx(0.3, 0.1), solve(2, 1, 0), vacuum(2), None, None).unwrap();
        let v = rescaled_ff_at_zero(&spec, &p).unwrap();
        assert!((v - cx(-2.0, 0.0)).norm() < 1e-12, "{v}");
    }

    /// Generalized-model data with the chain's `r1(z)`: `z^L F(z)` at three
    /// shrinking `z`, Richardson-extrapolated to zero.
    #[test]
    fn rescaled_matches_finite_z_limit() {
        let q = QComplex::from_ratio;
        let c = q(1, 1);
        let cases = [
            (Entry::E12, 3, vec![q(3, 7), q(-5, 4)], vec![q(7, 3)], vec![q(11, 5)], vec![q(-9, 7)]),
            (Entry::E23, 2, vec![q(3, 7)], vec![q(7, 3), q(-13, 6)], vec![q(11, 5)], vec![q(-9, 7)]),
            (Entry::E21, 2, vec![q(3, 7)], vec![q(7, 3)], vec![q(11, 5), q(-5, 4)], vec![q(-9, 7)]),
        ];
        for (entry, l, uc, vc, ub, vb) in cases {
            let spec = ChainSpec::homogeneous(l, c.clone()).unwrap();
            let chain = chain_r_functions(&spec);
            let mk = |u: Vec<QComplex>, v: Vec<QComplex>| {
                synthesize_on_shell(ParamSet::new("u", u).unwrap(), ParamSet::new("v", v).unwrap(), c.clone(), &[]).unwrap()
            };
            let (cd, bd) = (mk(uc, vc), mk(ub, vb));
            let at = |z: QComplex| {
                let r1 = chain.r1(&z).unwrap();
                let p = FFProblem::new(entry, z.clone(), cd.clone(), bd.clone(), Some(r1), Some(QComplex::one())).unwrap();
                z.powi(l as i64).unwrap() * ff_det(&p).unwrap()
            };
            let h = q(1, 1000);
            let (g1, g2, g4) = (at(h.clone()), at(h.clone() * q(1, 2)), at(h * q(1, 4)));
            let extrapolated = (g4 * q(8, 1) - g2 * q(6, 1) + g1) * q(1, 3);
            let p = FFProblem::new(entry, q(1, 1000), cd.clone(), bd.clone(), None, None).unwrap();
            let exact = rescaled_ff_at_zero(&spec, &p).unwrap();
            let rel = (extrapolated - &exact).modulus() / exact.modulus().max(1.0);
            assert!(rel < 1e-6, "{entry}: relative gap {rel}");
            assert!(!exact.is_zero());
        }
    }

    #[test]
    fn chain_det_matches_brute() {
        let z = cx(0.37, 0.21);
        let cases = [
            (Entry::E12, solve(3, 1, 0), vacuum(3)),
            (Entry::E12, solve(4, 2, 0), solve(4, 1, 0)),
            (Entry::E13, solve(4, 2, 1), solve(4, 1, 0)),
            (Entry::E23, solve(4, 2, 1), solve(4, 2, 0)),
        ];
        for (entry, cd, bd) in cases {
            let p = FFProblem::new(entry, z, cd, bd, None, None).unwrap();
            let brute = match entry {
                Entry::E23 => ff_brute(&map_phi(&p)).unwrap(),
                _ => ff_brute(&p).unwrap(),
            };
            if entry != Entry::E13 {
                let det = ff_det(&p).unwrap();
                assert!(det.residual(&brute) < 1e-9, "{entry}: {det} vs {brute}");
            } else {
                assert!(brute.is_finite());
            }
        }
    }

    #[test]
    fn one_magnon_form_factor_closed_form() {
        let b = vacuum(2);
        let cd = solve(2, 1, 0);
        let z = cx(0.3, -0.2);
        let p = FFProblem::new(Entry::E12, z, cd.clone(), b, None, None).unwrap();
        let r1 = p.r1z().unwrap();
        let expected = g(&cd.u[0], &z, &cx(1.0, 0.0)).unwrap() * (r1 - cx(1.0, 0.0));
        assert!(ff_det(&p).unwrap().residual(&expected) < 1e-12);
    }
}
