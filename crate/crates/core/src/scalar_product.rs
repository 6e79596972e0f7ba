//! Highest coefficients `Z_{a,b}` and the partition-sum scalar product `S_{a,b}`.

use std::time::Instant;

use crate::bethe::{synthesize_on_shell, BetheData, RTable};
use crate::dwpf::dwpf;
use crate::error::{Error, Result};
use crate::numeric::{concat, reciprocal_f_product, set_product, shift_all, Kernel, Scalar};
use crate::parallel::ordered_map;
use crate::numeric::ParamSet;
use crate::partitions::{split_indices, Split};
use crate::random::Draw;
use crate::report::{Report, SuiteConfig};

/// Which partition-sum representation of `Z_{a,b}` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZRep {
    /// Sum over splits of `w̄ = {s̄, x̄}`.
    A,
    /// Sum over splits of `ᾱ = {ȳ+c, t̄}` with an explicit `f`-prefactor.
    B,
}

fn check_sizes<S>(t: &[S], x: &[S], s: &[S], y: &[S]) -> Result<()> {
    if t.len() != x.len() || s.len() != y.len() {
        return Err(Error::CardinalityMismatch(format!(
            "Z needs |t| = |x| and |s| = |y|, got {}, {}, {}, {}",
            t.len(),
            x.len(),
            s.len(),
            y.len()
        )));
    }
    Ok(())
}

/// `Z_{a,b}(t̄;x̄|s̄;ȳ)` with `|t̄| = |x̄| = a`, `|s̄| = |ȳ| = b`.
///
/// ```
/// use bethe_ff::numeric::{QComplex, Scalar};
/// use bethe_ff::scalar_product::{highest_coefficient, ZRep};
///
/// let q = |n| QComplex::from_i64(n);
/// let none: [QComplex; 0] = [];
/// let z = highest_coefficient(&[q(1)], &[q(2)], &none, &none, ZRep::A, &q(1)).unwrap();
/// assert_eq!(z, q(1));
/// ```
pub fn highest_coefficient<S: Scalar>(t: &[S], x: &[S], s: &[S], y: &[S], rep: ZRep, c: &S) -> Result<S> {
    check_sizes(t, x, s, y)?;
    match rep {
        ZRep::A => z_rep_a(t, x, s, y, c),
        ZRep::B => Ok(S::sign(s.len())
            * set_product(Kernel::F, y, x, c)?
            * set_product(Kernel::F, s, t, c)?
            * z_hat(t, x, s, y, c)?),
    }
}

fn z_rep_a<S: Scalar>(t: &[S], x: &[S], s: &[S], y: &[S], c: &S) -> Result<S> {
    let (a, b) = (t.len(), s.len());
    let w = concat(s, x);
    let s_shift = shift_all(s, &-c.clone());
    let mut acc = S::zero();
    for split in split_indices(a + b, &[b, a])? {
        let (w1, w2) = split.pick2(&w);
        acc = acc
            + dwpf(&s_shift, &w1, c)?
                * dwpf(&w2, t, c)?
                * dwpf(y, &w1, c)?
                * set_product(Kernel::F, &w1, &w2, c)?;
    }
    Ok(S::sign(b) * acc)
}

/// The partition sum of representation B without its `(-1)^b f(ȳ,x̄) f(s̄,t̄)`
/// prefactor. Regular at coincidences that make the prefactor singular.
pub fn z_hat<S: Scalar>(t: &[S], x: &[S], s: &[S], y: &[S], c: &S) -> Result<S> {
    check_sizes(t, x, s, y)?;
    let (a, b) = (t.len(), s.len());
    let y_up = shift_all(y, c);
    let alpha = concat(&y_up, t);
    let minus_c = -c.clone();
    let mut acc = S::zero();
    for split in split_indices(a + b, &[a, b])? {
        let (a1, a2) = split.pick2(&alpha);
        let a2_down = shift_all(&a2, &minus_c);
        acc = acc
            + dwpf(&a2_down, &y_up, c)?
                * dwpf(x, &a1, c)?
                * dwpf(&a2_down, s, c)?
                * set_product(Kernel::F, &a1, &a2, c)?;
    }
    Ok(acc)
}

fn prod_r<S: Scalar>(table: &RTable<S>, pts: &[S], which: fn(&RTable<S>, &S) -> Result<S>) -> Result<S> {
    pts.iter().try_fold(S::one(), |acc, w| Ok(acc * which(table, w)?))
}

struct Term {
    uc: Split,
    ub: Split,
    vc: Split,
    vb: Split,
}

fn terms(a: usize, b: usize) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    for k in 0..=a {
        let u_splits = split_indices(a, &[k, a - k])?;
        for n in 0..=b {
            let v_splits = split_indices(b, &[n, b - n])?;
            for uc in &u_splits {
                for ub in &u_splits {
                    for vc in &v_splits {
                        for vb in &v_splits {
                            out.push(Term { uc: uc.clone(), ub: ub.clone(), vc: vc.clone(), vb: vb.clone() });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sizes<S: Scalar>(cd: &BetheData<S>, bd: &BetheData<S>) -> Result<(usize, usize)> {
    if cd.a() != bd.a() || cd.b() != bd.b() {
        return Err(Error::CardinalityMismatch(format!(
            "scalar product needs equal sizes, got C ({}, {}) and B ({}, {})",
            cd.a(),
            cd.b(),
            bd.a(),
            bd.b()
        )));
    }
    Ok((cd.a(), cd.b()))
}

/// `S_{a,b}(ū^C,v̄^C|ū^B,v̄^B)`, the sum over partitions of all four root sets.
///
/// Both highest coefficients are taken in representation B, whose
/// `f`-prefactors combine with the ratio of `f`-products in each term into
/// `(-1)^b / (f(v̄^C_II,ū^C_II) f(v̄^B_I,ū^B_I))`. The reciprocals are regular,
/// so the sum stays finite when a point is shared between `ū^B` and `v̄^B`
/// (as happens for the form factor of `T_13`). Terms whose reciprocal
/// vanishes are skipped without looking up their r-values.
///
/// ```
/// use bethe_ff::bethe::{BetheData, RTable};
/// use bethe_ff::numeric::{ParamSet, QComplex, Scalar};
/// use bethe_ff::scalar_product::scalar_product;
///
/// let q = |n| QComplex::from_i64(n);
/// let mut r = RTable::new(q(1));
/// r.set_r1(q(2), q(1)).unwrap();
/// r.set_r1(q(0), q(5)).unwrap();
/// let cd = BetheData::new(ParamSet::new("uC", vec![q(2)]).unwrap(), ParamSet::empty("vC"), r.clone());
/// let bd = BetheData::new(ParamSet::new("uB", vec![q(0)]).unwrap(), ParamSet::empty("vB"), r);
/// assert_eq!(scalar_product(&cd, &bd).unwrap(), q(2));
/// ```
pub fn scalar_product<S: Scalar>(cd: &BetheData<S>, bd: &BetheData<S>) -> Result<S> {
    let (a, b) = sizes(cd, bd)?;
    let c = cd.c().clone();
    let sign = S::sign(b);
    let all = terms(a, b)?;
    let values = ordered_map(&all, |term| -> Result<S> {
        let (uc1, uc2) = term.uc.pick2(&cd.u);
        let (ub1, ub2) = term.ub.pick2(&bd.u);
        let (vc1, vc2) = term.vc.pick2(&cd.v);
        let (vb1, vb2) = term.vb.pick2(&bd.v);
        let weight = reciprocal_f_product(&vc2, &uc2, &c)? * reciprocal_f_product(&vb1, &ub1, &c)?;
        if weight.is_zero() {
            return Ok(S::zero());
        }
        let r = prod_r(&bd.r, &ub1, RTable::r1)?
            * prod_r(&cd.r, &uc2, RTable::r1)?
            * prod_r(&bd.r, &vb1, RTable::r3)?
            * prod_r(&cd.r, &vc2, RTable::r3)?;
        if r.is_zero() {
            return Ok(S::zero());
        }
        let f = set_product(Kernel::F, &uc1, &uc2, &c)?
            * set_product(Kernel::F, &ub2, &ub1, &c)?
            * set_product(Kernel::F, &vc2, &vc1, &c)?
            * set_product(Kernel::F, &vb1, &vb2, &c)?;
        let z1 = z_hat(&uc2, &ub2, &vc1, &vb1, &c)?;
        let z2 = z_hat(&ub1, &uc1, &vb2, &vc2, &c)?;
        Ok(weight * r * f * z1 * z2)
    });
    values.into_iter().try_fold(S::zero(), |acc, v| Ok(acc + v?)).map(|s| sign * s)
}

/// The same sum evaluated literally: representation A for both highest
/// coefficients and the ratio of `f`-products as written. Requires
/// `v̄ ∩ ū = ∅` on both sides; serves as an independent oracle.
pub fn scalar_product_reference<S: Scalar>(cd: &BetheData<S>, bd: &BetheData<S>) -> Result<S> {
    let (a, b) = sizes(cd, bd)?;
    let c = cd.c().clone();
    let denom = set_product(Kernel::F, &cd.v, &cd.u, &c)? * set_product(Kernel::F, &bd.v, &bd.u, &c)?;
    let mut acc = S::zero();
    for term in terms(a, b)? {
        let (uc1, uc2) = term.uc.pick2(&cd.u);
        let (ub1, ub2) = term.ub.pick2(&bd.u);
        let (vc1, vc2) = term.vc.pick2(&cd.v);
        let (vb1, vb2) = term.vb.pick2(&bd.v);
        let r = prod_r(&bd.r, &ub1, RTable::r1)?
            * prod_r(&cd.r, &uc2, RTable::r1)?
            * prod_r(&bd.r, &vb1, RTable::r3)?
            * prod_r(&cd.r, &vc2, RTable::r3)?;
        let f = set_product(Kernel::F, &uc1, &uc2, &c)?
            * set_product(Kernel::F, &ub2, &ub1, &c)?
            * set_product(Kernel::F, &vc2, &vc1, &c)?
            * set_product(Kernel::F, &vb1, &vb2, &c)?
            * set_product(Kernel::F, &vc1, &uc1, &c)?
            * set_product(Kernel::F, &vb2, &ub2, &c)?;
        let z1 = highest_coefficient(&uc2, &ub2, &vc1, &vb1, ZRep::A, &c)?;
        let z2 = highest_coefficient(&ub1, &uc1, &vb2, &vc2, ZRep::A, &c)?;
        acc = acc + r * f * z1 * z2;
    }
    acc.try_div(&denom)
}

/// Both representations of `Z_{a,b}` on random data for every `a ≤ max_a`,
/// `b ≤ max_b`, plus invariance under permuting each argument set.
pub fn check_highest_coefficient<S: Scalar>(max_a: usize, max_b: usize, cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(format!("highest coefficient a<={max_a} b<={max_b}"));
    let mut draw = Draw::new(cfg.seed, cfg.c.0, cfg.c.1);
    let c: S = draw.c();
    for a in 0..=max_a {
        for b in 0..=max_b {
            for trial in 0..cfg.trials {
                let pts: Vec<S> = draw.generic_points(2 * (a + b))?;
                let (t, rest) = pts.split_at(a);
                let (x, rest) = rest.split_at(a);
                let (s, y) = rest.split_at(b);
                let za = highest_coefficient(t, x, s, y, ZRep::A, &c)?;
                let zb = highest_coefficient(t, x, s, y, ZRep::B, &c)?;
                report.compare(format!("({a},{b}) trial {trial}: A = B"), &za, &zb, cfg.tol);
                let perm = |xs: &[S], p: Vec<usize>| p.into_iter().map(|i| xs[i].clone()).collect::<Vec<_>>();
                let (pt, px) = (perm(t, draw.permutation(a)), perm(x, draw.permutation(a)));
                let (ps, py) = (perm(s, draw.permutation(b)), perm(y, draw.permutation(b)));
                let zp = highest_coefficient(&pt, &px, &ps, &py, ZRep::B, &c)?;
                report.compare(format!("({a},{b}) trial {trial}: permuted"), &zp, &za, cfg.tol);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// On-shell states with different roots in one model are orthogonal; checked
/// for every nonempty `(a, b)` with `a ≤ max_a`, `b ≤ max_b`.
pub fn check_orthogonality<S: Scalar>(max_a: usize, max_b: usize, cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(format!("orthogonality a<={max_a} b<={max_b}"));
    let mut draw = Draw::new(cfg.seed, cfg.c.0, cfg.c.1);
    let c: S = draw.c();
    for a in 0..=max_a {
        for b in (0..=max_b).filter(|&b| a + b > 0) {
            for trial in 0..cfg.trials {
                let mut pts: Vec<S> = draw.generic_points(2 * (a + b))?;
                let mut state = |label: &str| -> Result<BetheData<S>> {
                    let u = ParamSet::new(format!("u{label}"), pts.drain(..a).collect())?;
                    let v = ParamSet::new(format!("v{label}"), pts.drain(..b).collect())?;
                    synthesize_on_shell(u, v, c.clone(), &[])
                };
                let (cd, bd) = (state("C")?, state("B")?);
                let r = cd.r.merged(&bd.r)?;
                let cd = BetheData { r: r.clone(), ..cd };
                let bd = BetheData { r, ..bd };
                report.compare(format!("({a},{b}) trial {trial}"), &scalar_product(&cd, &bd)?, &S::zero(), cfg.tol);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
