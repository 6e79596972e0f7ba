//! Domain-wall partition function `K_n(x̄|ȳ)` and its summation identities.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::numeric::{
    concat, delta, delta_prime, f, g, h, reciprocal_f_product, set_product, shift_all, t,
    Kernel, Scalar,
};
use crate::partitions::{all_two_splits, split_indices};
use crate::random::Draw;
use crate::report::Report;
pub use crate::report::SuiteConfig;

/// `K_n(x̄|ȳ)`.
///
/// Evaluated as `Δ'(x̄)Δ(ȳ) det[g(x_j,y_k) ∏_{l≠k} h(x_j,y_l)]`, which equals
/// the `h(x̄,ȳ) det t` form wherever that is defined and stays regular at
/// `x_j = y_k - c`.
///
/// ```
/// use bethe_ff::dwpf::dwpf;
/// use bethe_ff::numeric::{QComplex, Scalar};
///
/// let q = |n| QComplex::from_i64(n);
/// let k2 = dwpf(&[q(5), q(0)], &[q(3), q(1)], &q(1)).unwrap();
/// assert_eq!(k2, QComplex::from_ratio(-1, 2));
/// ```
pub fn dwpf<S: Scalar>(xs: &[S], ys: &[S], c: &S) -> Result<S> {
    dwpf_pinned(xs, ys, c, None)
}

/// `lim_{x_j → y_k} f^{-1}(x_j, y_k) K_n(x̄|ȳ)`, the regular part of the pole.
///
/// The entry `x_j` is ignored and replaced by `y_k`.
pub fn dwpf_residue<S: Scalar>(xs: &[S], ys: &[S], j: usize, k: usize, c: &S) -> Result<S> {
    if j >= xs.len() || k >= ys.len() {
        return Err(Error::CardinalityMismatch(format!("pinned entry ({j},{k}) outside {}x{}", xs.len(), ys.len())));
    }
    let mut xs = xs.to_vec();
    xs[j] = ys[k].clone();
    dwpf_pinned(&xs, ys, c, Some((j, k)))
}

fn dwpf_pinned<S: Scalar>(xs: &[S], ys: &[S], c: &S, pinned: Option<(usize, usize)>) -> Result<S> {
    let n = xs.len();
    if ys.len() != n {
        return Err(Error::CardinalityMismatch(format!("K_n needs |x| = |y|, got {} and {}", n, ys.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (j, x) in xs.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for k in 0..n {
            let mut others = S::one();
            for (l, y) in ys.iter().enumerate() {
                if l != k {
                    others = others * h(x, y, c)?;
                }
            }
            let entry = match pinned {
                Some((pj, pk)) if pj == j => {
                    if pk == k {
                        others
                    } else {
                        S::zero()
                    }
                }
                _ => g(x, &ys[k], c)? * others,
            };
            row.push(entry);
        }
        rows.push(row);
    }
    Ok(delta_prime(xs, c)? * delta(ys, c)? * S::determinant(rows))
}

/// `K_n` straight from the `h(x̄,ȳ) det t` form; singular at `x_j = y_k - c`.
pub fn dwpf_t_form<S: Scalar>(xs: &[S], ys: &[S], c: &S) -> Result<S> {
    if ys.len() != xs.len() {
        return Err(Error::CardinalityMismatch(format!("K_n needs |x| = |y|, got {} and {}", xs.len(), ys.len())));
    }
    let rows = xs
        .iter()
        .map(|x| ys.iter().map(|y| t(x, y, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(delta_prime(xs, c)? * delta(ys, c)? * set_product(Kernel::H, xs, ys, c)? * S::determinant(rows))
}

fn sum<S: Scalar>(terms: impl IntoIterator<Item = Result<S>>) -> Result<S> {
    terms.into_iter().try_fold(S::zero(), |acc, term| Ok(acc + term?))
}

/// Both sides of the partition sum of `K_{m1}(ξ̄_I|ᾱ) K_{m2}(β̄|ξ̄_II) f(ξ̄_II,ξ̄_I)`
/// against `(-1)^{m1} f(ξ̄,ᾱ) K({ᾱ-c,β̄}|ξ̄)`.
pub fn identity_sum_a<S: Scalar>(xi: &[S], alpha: &[S], beta: &[S], c: &S) -> Result<(S, S)> {
    let (m1, m2) = (alpha.len(), beta.len());
    let splits = split_indices(xi.len(), &[m1, m2])?;
    let lhs = sum(splits.iter().map(|s| {
        let (xi1, xi2) = s.pick2(xi);
        Ok(dwpf(&xi1, alpha, c)? * dwpf(beta, &xi2, c)? * set_product(Kernel::F, &xi2, &xi1, c)?)
    }))?;
    let shifted = concat(&shift_all(alpha, &-c.clone()), beta);
    let rhs = S::sign(m1) * set_product(Kernel::F, xi, alpha, c)? * dwpf(&shifted, xi, c)?;
    Ok((lhs, rhs))
}

/// Both sides of the sum over all splits of `γ̄` that collapses to a single
/// determinant with coefficient functions `C1`, `C2` given at each `γ_k`.
pub fn identity_sum_det<S: Scalar>(gamma: &[S], xi: &[S], c1: &[S], c2: &[S], c: &S) -> Result<(S, S)> {
    let m = gamma.len();
    if xi.len() != m || c1.len() != m || c2.len() != m {
        return Err(Error::CardinalityMismatch(format!(
            "|γ| = {m}, |ξ| = {}, |C1| = {}, |C2| = {}",
            xi.len(),
            c1.len(),
            c2.len()
        )));
    }
    let minus_c = -c.clone();
    let lhs = sum(all_two_splits(m).iter().map(|s| {
        let (g1, g2) = s.pick2(gamma);
        let coeff: S = s.pick(c1, 0).into_iter().chain(s.pick(c2, 1)).fold(S::one(), |a, v| a * v);
        if coeff.is_zero() {
            return Ok(S::zero());
        }
        let args = concat(&shift_all(&g1, &minus_c), &g2);
        Ok(coeff
            * dwpf(&args, xi, c)?
            * set_product(Kernel::F, xi, &g1, c)?
            * set_product(Kernel::F, &g2, &g1, c)?)
    }))?;
    let sign_m = S::sign(m);
    let mut rows = Vec::with_capacity(m);
    for xj in xi {
        let mut row = Vec::with_capacity(m);
        for (k, gk) in gamma.iter().enumerate() {
            let a = c2[k].clone() * t(gk, xj, c)? * set_product(Kernel::H, std::slice::from_ref(gk), xi, c)?;
            let b = sign_m.clone()
                * &c1[k]
                * t(xj, gk, c)?
                * set_product(Kernel::H, xi, std::slice::from_ref(gk), c)?;
            row.push(a + b);
        }
        rows.push(row);
    }
    let rhs = delta_prime(xi, c)? * delta(gamma, c)? * S::determinant(rows);
    Ok((lhs, rhs))
}

/// Which of the three related double-partition identities to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GVariant {
    /// Weight `f(β̄_I, z)`.
    G,
    /// Weight `1/f(β̄_II, z)`.
    G1,
    /// `|β̄| = |ᾱ| - 1`, with `z` joined to `β̄_I` inside the first DWPF.
    G2,
}

/// Both sides of the double partition sum over `ᾱ` and `β̄` and its closed form.
pub fn identity_sum_g<S: Scalar>(alpha: &[S], beta: &[S], z: &S, variant: GVariant, c: &S) -> Result<(S, S)> {
    let m = alpha.len();
    let expected_b = if variant == GVariant::G2 { m.checked_sub(1) } else { Some(m) };
    if expected_b != Some(beta.len()) {
        return Err(Error::CardinalityMismatch(format!(
            "variant {variant:?} with |α| = {m} needs |β| = {expected_b:?}, got {}",
            beta.len()
        )));
    }
    let zs = std::slice::from_ref(z);
    let mut lhs = S::zero();
    for m1 in 0..=m {
        let b1 = match variant {
            GVariant::G2 if m1 == 0 => continue,
            GVariant::G2 => m1 - 1,
            _ => m1,
        };
        let a_splits = split_indices(m, &[m1, m - m1])?;
        let b_splits = split_indices(beta.len(), &[b1, beta.len() - b1])?;
        for sa in &a_splits {
            let (a1, a2) = sa.pick2(alpha);
            let fa = set_product(Kernel::F, &a1, &a2, c)?;
            let k2_args = shift_all(&a2, c);
            for sb in &b_splits {
                let (bb1, bb2) = sb.pick2(beta);
                let weight = match variant {
                    GVariant::G => set_product(Kernel::F, &bb1, zs, c)?,
                    GVariant::G1 => reciprocal_f_product(&bb2, zs, c)?,
                    GVariant::G2 => S::one(),
                };
                let k1 = match variant {
                    GVariant::G2 => dwpf(&concat(zs, &bb1), &a1, c)?,
                    _ => dwpf(&bb1, &a1, c)?,
                };
                lhs = lhs
                    + weight
                        * &fa
                        * set_product(Kernel::F, &bb2, &bb1, c)?
                        * k1
                        * dwpf(&k2_args, &bb2, c)?;
            }
        }
    }
    let rhs = lambda_closed(alpha, beta, z, variant, c, None)?;
    Ok((lhs, rhs))
}

/// Closed form of the `G`-type sums. `t_override` replaces the factor
/// `t(α_0, β_0)` by the given value.
fn lambda_closed<S: Scalar>(
    alpha: &[S],
    beta: &[S],
    z: &S,
    variant: GVariant,
    c: &S,
    t_override: Option<S>,
) -> Result<S> {
    let zs = std::slice::from_ref(z);
    let mut tt = S::one();
    for (j, a) in alpha.iter().enumerate() {
        for (k, b) in beta.iter().enumerate() {
            tt = tt
                * match (&t_override, j, k) {
                    (Some(v), 0, 0) => v.clone(),
                    _ => t(a, b, c)?,
                };
        }
    }
    let common = S::sign(alpha.len())
        * tt
        * set_product(Kernel::H, alpha, alpha, c)?
        * set_product(Kernel::H, beta, beta, c)?;
    Ok(match variant {
        GVariant::G => common * set_product(Kernel::H, alpha, zs, c)? * set_product(Kernel::G, beta, zs, c)?,
        GVariant::G1 => common
            * set_product(Kernel::H, alpha, zs, c)?
                .try_div(&set_product(Kernel::H, beta, zs, c)?)?,
        GVariant::G2 => common * set_product(Kernel::G, alpha, zs, c)? * set_product(Kernel::H, zs, beta, c)?,
    })
}

/// Verifies the pole and shift relations of `K_n` on random rational data.
///
/// Covers the residue at `x_j = y_k`, the two reductions
/// `K_{n+1}({x̄,z-c}|{ȳ,z}) = K_{n+1}({x̄,z}|{ȳ,z+c}) = -K_n(x̄|ȳ)`, the shift
/// relation `K(x̄-c|ȳ) = K(x̄|ȳ+c) = (-1)^n f^{-1}(ȳ,x̄) K(ȳ|x̄)`, and symmetry
/// within each argument set.
pub fn check_dwpf_recursions<S: Scalar>(n: usize, cfg: &SuiteConfig) -> Result<Report> {
    if n == 0 {
        return Err(Error::CardinalityMismatch("recursion suite needs n >= 1".into()));
    }
    let start = Instant::now();
    let mut report = Report::new(format!("dwpf recursions n={n}"));
    let mut draw = Draw::new(cfg.seed, cfg.c.0, cfg.c.1);
    let c: S = draw.c();
    let minus_c = -c.clone();
    for trial in 0..cfg.trials {
        let pts: Vec<S> = draw.generic_points(2 * n + 1)?;
        let (xs, rest) = pts.split_at(n);
        let (ys, zs) = rest.split_at(n);
        let z = &zs[0];
        let kn = dwpf(xs, ys, &c)?;

        // Residue at a random position of z in both sets.
        let (j, k) = (draw.index(n + 1), draw.index(n + 1));
        let mut xz = xs.to_vec();
        xz.insert(j, z.clone());
        let mut yz = ys.to_vec();
        yz.insert(k, z.clone());
        let res = dwpf_residue(&xz, &yz, j, k, &c)?;
        let zs1 = std::slice::from_ref(z);
        let expect = set_product(Kernel::F, zs1, ys, &c)? * set_product(Kernel::F, xs, zs1, &c)? * &kn;
        report.compare(format!("trial {trial}: residue"), &res, &expect, cfg.tol);

        let mut xzc = xs.to_vec();
        xzc.push(z.clone() - &c);
        let kk1 = dwpf(&xzc, &concat(ys, zs1), &c)?;
        report.compare(format!("trial {trial}: K(x,z-c|y,z)"), &kk1, &-kn.clone(), cfg.tol);
        let kk2 = dwpf(&concat(xs, zs1), &concat(ys, &[z.clone() + &c]), &c)?;
        report.compare(format!("trial {trial}: K(x,z|y,z+c)"), &kk2, &-kn.clone(), cfg.tol);

        let red1 = dwpf(&shift_all(xs, &minus_c), ys, &c)?;
        let red2 = dwpf(xs, &shift_all(ys, &c), &c)?;
        let red3 = S::sign(n) * reciprocal_f_product(ys, xs, &c)? * dwpf(ys, xs, &c)?;
        report.compare(format!("trial {trial}: K(x-c|y) = K(x|y+c)"), &red1, &red2, cfg.tol);
        report.compare(format!("trial {trial}: K(x|y+c) = swapped"), &red2, &red3, cfg.tol);

        let px = draw.permutation(n);
        let py = draw.permutation(n);
        let xs_p: Vec<S> = px.iter().map(|&i| xs[i].clone()).collect();
        let ys_p: Vec<S> = py.iter().map(|&i| ys[i].clone()).collect();
        report.compare(format!("trial {trial}: symmetry"), &dwpf(&xs_p, &ys_p, &c)?, &kn, cfg.tol);

        let tform = dwpf_t_form(xs, ys, &c)?;
        report.compare(format!("trial {trial}: t-form"), &tform, &kn, cfg.tol);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Verifies the two pole recursions of the closed form of the `G` identity.
///
/// At `α_0 = β_0` the singular factor `g(α_0,β_0)` is removed by replacing
/// `t(α_0,β_0)` with `1/h(α_0,β_0)`; at `α_0 = β_0 - c` the factor
/// `1/h(α_0,β_0)` is removed by replacing `t` with `g`.
pub fn check_g_recursions<S: Scalar>(m: usize, cfg: &SuiteConfig) -> Result<Report> {
    if m < 2 {
        return Err(Error::CardinalityMismatch("G recursions need m >= 2".into()));
    }
    let start = Instant::now();
    let mut report = Report::new(format!("G recursions m={m}"));
    let mut draw = Draw::new(cfg.seed, cfg.c.0, cfg.c.1);
    let c: S = draw.c();
    for trial in 0..cfg.trials {
        let pts: Vec<S> = draw.generic_points(2 * m + 1)?;
        let (alpha, rest) = pts.split_at(m);
        let (beta, zs) = rest.split_at(m);
        let z = &zs[0];
        let (b1, beta_rest) = (&beta[0], &beta[1..]);
        let alpha_rest = &alpha[1..];
        let lower = lambda_closed(alpha_rest, beta_rest, z, GVariant::G, &c, None)?;

        let mut a = alpha.to_vec();
        a[0] = b1.clone();
        let one_over_h = h(&a[0], b1, &c)?.checked_inv().ok_or_else(|| crate::error::singular("h(β,β)"))?;
        let lhs = lambda_closed(&a, beta, z, GVariant::G, &c, Some(one_over_h))?;
        let a0 = std::slice::from_ref(&a[0]);
        let rhs = -f(&a[0], z, &c)?
            * set_product(Kernel::F, beta_rest, std::slice::from_ref(b1), &c)?
            * set_product(Kernel::F, a0, alpha_rest, &c)?
            * &lower;
        report.compare(format!("trial {trial}: pole at α = β"), &lhs, &rhs, cfg.tol);

        a[0] = b1.clone() - &c;
        let gv = g(&a[0], b1, &c)?;
        let lhs = lambda_closed(&a, beta, z, GVariant::G, &c, Some(gv))?;
        let a0 = std::slice::from_ref(&a[0]);
        let rhs = set_product(Kernel::F, std::slice::from_ref(b1), beta_rest, &c)?
            * set_product(Kernel::F, alpha_rest, a0, &c)?
            * &lower;
        report.compare(format!("trial {trial}: pole at α = β - c"), &lhs, &rhs, cfg.tol);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Randomized run of the three summation families up to the given sizes.
pub fn check_summation_identities<S: Scalar>(max_total: usize, max_det: usize, max_g: usize, cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("summation identities");
    let mut draw = Draw::new(cfg.seed, cfg.c.0, cfg.c.1);
    let c: S = draw.c();
    for trial in 0..cfg.trials {
        for total in 0..=max_total {
            for m1 in 0..=total {
                let pts: Vec<S> = draw.generic_points(2 * total)?;
                let (xi, rest) = pts.split_at(total);
                let (alpha, beta) = rest.split_at(m1);
                let (l, r) = identity_sum_a(xi, alpha, beta, &c)?;
                report.compare(format!("trial {trial}: sum A m1={m1} m2={}", total - m1), &l, &r, cfg.tol);
            }
        }
        for m in 1..=max_det {
            let pts: Vec<S> = draw.generic_points(2 * m)?;
            let (gamma, xi) = pts.split_at(m);
            let c1: Vec<S> = draw.values(m);
            let c2: Vec<S> = draw.values(m);
            let (l, r) = identity_sum_det(gamma, xi, &c1, &c2, &c)?;
            report.compare(format!("trial {trial}: sum det m={m}"), &l, &r, cfg.tol);
        }
        for m in 1..=max_g {
            for variant in [GVariant::G, GVariant::G1, GVariant::G2] {
                let nb = if variant == GVariant::G2 { m - 1 } else { m };
                let pts: Vec<S> = draw.generic_points(m + nb + 1)?;
                let (alpha, rest) = pts.split_at(m);
                let (beta, z) = rest.split_at(nb);
                let (l, r) = identity_sum_g(alpha, beta, &z[0], variant, &c)?;
                report.compare(format!("trial {trial}: {variant:?} m={m}"), &l, &r, cfg.tol);
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Complex64, QComplex};

    fn q(n: i64) -> QComplex {
        QComplex::from_i64(n)
    }

    fn qr(n: i64, d: i64) -> QComplex {
        QComplex::from_ratio(n, d)
    }

    #[test]
    fn small_values() {
        let c = q(1);
        assert_eq!(dwpf(&[q(2)], &[q(1)], &c).unwrap(), q(1));
        let empty: [QComplex; 0] = [];
        assert_eq!(dwpf(&empty, &empty, &c).unwrap(), q(1));
        let k2 = dwpf(&[q(5), q(0)], &[q(3), q(1)], &c).unwrap();
        assert_eq!(k2, -dwpf(&[q(5)], &[q(3)], &c).unwrap());
        assert_eq!(k2, qr(-1, 2));
        assert!(dwpf(&[q(1), q(2)], &[q(1), q(3)], &c).is_err());
        assert!(dwpf(&[q(1)], &[q(1), q(3)], &c).is_err());
        assert!(dwpf_t_form(&[q(5), q(0)], &[q(3), q(1)], &c).is_err());
    }

    #[test]
    fn not_symmetric_under_set_exchange() {
        let mut d = Draw::new(3, 1, 1);
        let pts: Vec<QComplex> = d.generic_points(6).unwrap();
        let c = q(1);
        assert_ne!(dwpf(&pts[..3], &pts[3..], &c).unwrap(), dwpf(&pts[3..], &pts[..3], &c).unwrap());
    }

    #[test]
    fn identity_examples() {
        let c = q(1);
        let empty: [QComplex; 0] = [];
        let (l, r) = identity_sum_a(&[q(0)], &[q(2)], &empty, &c).unwrap();
        assert_eq!((l.clone(), r), (qr(-1, 2), qr(-1, 2)));
        let (l, r) = identity_sum_a(&[q(0), q(7)], &empty, &[q(3), q(-4)], &c).unwrap();
        assert_eq!(l, dwpf(&[q(3), q(-4)], &[q(0), q(7)], &c).unwrap());
        assert_eq!(l, r);

        let (c1, c2) = (qr(3, 7), qr(-5, 2));
        let (l, r) = identity_sum_det(&[q(2)], &[q(0)], &[c1.clone()], &[c2.clone()], &c).unwrap();
        let expect = (c1 + &c2) * qr(1, 2);
        assert_eq!(l, expect);
        assert_eq!(r, expect);

        let (l, r) = identity_sum_g(&[q(3)], &[q(1)], &q(0), GVariant::G, &c).unwrap();
        assert_eq!(l, qr(-2, 3));
        assert_eq!(r, qr(-2, 3));

        let (l, r) = identity_sum_g(&[q(3)], &empty, &q(0), GVariant::G2, &c).unwrap();
        assert_eq!(l, g(&q(0), &q(3), &c).unwrap());
        assert_eq!(r, -g(&q(3), &q(0), &c).unwrap());
    }

    #[test]
    fn vanishing_c1_branch() {
        let mut d = Draw::new(11, 1, 1);
        let c = q(1);
        let pts: Vec<QComplex> = d.generic_points(6).unwrap();
        let (gamma, xi) = pts.split_at(3);
        let c2: Vec<QComplex> = d.values(3);
        let (l, r) = identity_sum_det(gamma, xi, &[q(0), q(0), q(0)], &c2, &c).unwrap();
        let prod = c2.iter().fold(q(1), |a, v| a * v);
        assert_eq!(l, dwpf(gamma, xi, &c).unwrap() * prod);
        assert_eq!(l, r);
    }

    #[test]
    fn recursion_suite_exact() {
        let cfg = SuiteConfig { trials: 20, seed: 7, ..Default::default() };
        for n in [1, 3] {
            let r = check_dwpf_recursions::<QComplex>(n, &cfg).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.max_residual(), 0.0);
        }
    }

    #[test]
    fn recursion_suite_float() {
        let cfg = SuiteConfig { trials: 5, ..Default::default() };
        let r = check_dwpf_recursions::<Complex64>(4, &cfg).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.max_residual() < 1e-9);
    }

    #[test]
    fn recursion_suite_other_coupling() {
        let cfg = SuiteConfig { trials: 4, seed: 2, c: (3, 2), ..Default::default() };
        assert!(check_dwpf_recursions::<QComplex>(2, &cfg).unwrap().passed());
        assert!(check_g_recursions::<QComplex>(2, &cfg).unwrap().passed());
        assert!(check_summation_identities::<QComplex>(3, 2, 2, &cfg).unwrap().passed());
    }

    #[test]
    fn g_recursions() {
        let cfg = SuiteConfig { trials: 5, ..Default::default() };
        for m in [2, 3] {
            let r = check_g_recursions::<QComplex>(m, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = check_g_recursions::<Complex64>(2, &cfg).unwrap();
        assert!(r.passed() && r.max_residual() < 1e-9, "{r}");
    }

    #[test]
    fn summation_identities_small() {
        let cfg = SuiteConfig { trials: 2, seed: 5, ..Default::default() };
        let r = check_summation_identities::<QComplex>(4, 3, 3, &cfg).unwrap();
        assert!(r.passed(), "{r}");
    }
}
