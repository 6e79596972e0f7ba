use std::time::Instant;

use super::{
    det_matrices, ff_brute, ff_det, ff_det_direct, jacobian_check, map_phi, map_psi, omega2_ext_col, omega_split,
    Entry, FFProblem,
};
use crate::error::Result;
use crate::numeric::Scalar;
use crate::random::Draw;
use crate::report::{Check, Report, SuiteConfig};

fn draw_for(cfg: &SuiteConfig) -> Draw {
    Draw::new(cfg.seed, cfg.c.0, cfg.c.1)
}

/// `(1,2)` determinant against the scalar-product sum, `cfg.trials` random
/// on-shell instances per B-side size.
pub fn check_oracle_equivalence<S: Scalar>(sizes: &[(usize, usize)], cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("form factor (1,2): determinant vs brute force");
    let mut draw = draw_for(cfg);
    for &(a, b) in sizes {
        for trial in 0..cfg.trials {
            let p = FFProblem::<S>::random(Entry::E12, a, b, &mut draw)?;
            report.compare(format!("({a},{b}) trial {trial}"), &ff_det(&p)?, &ff_brute(&p)?, cfg.tol);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The other entries against brute force carried over by the reflection and
/// the transposition, for all B-side sizes up to `(max, max)`.
pub fn check_mapping_coherence<S: Scalar>(max: usize, cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(format!("mapping coherence a,b<={max}"));
    let mut draw = draw_for(cfg);
    for a in 0..=max {
        for b in 0..=max {
            for trial in 0..cfg.trials {
                let tag = |what: &str| format!("({a},{b}) trial {trial}: {what}");
                let p = FFProblem::<S>::random(Entry::E23, a, b, &mut draw)?;
                report.compare(tag("(2,3) vs reflected (1,2)"), &ff_det(&p)?, &ff_brute(&map_phi(&p))?, cfg.tol);
                report.compare(tag("(2,3) vs transposed (3,2)"), &ff_det(&p)?, &ff_det(&map_psi(&p))?, cfg.tol);

                let p = FFProblem::<S>::random(Entry::E12, a, b, &mut draw)?;
                report.compare(tag("(1,2) vs transposed (2,1)"), &ff_det(&p)?, &ff_det(&map_psi(&p))?, cfg.tol);
                let phi = map_phi(&map_phi(&p));
                report.compare(tag("reflection is an involution"), &ff_det(&phi)?, &ff_det(&p)?, cfg.tol);

                if a > 0 {
                    let p = FFProblem::<S>::random(Entry::E21, a, b, &mut draw)?;
                    report.compare(tag("(2,1) vs transposed brute"), &ff_det(&p)?, &ff_brute(&map_psi(&p))?, cfg.tol);
                    report.compare(tag("(2,1) direct reuse"), &ff_det_direct(&p)?, &ff_det(&p)?, cfg.tol);
                }
                if b > 0 {
                    let p = FFProblem::<S>::random(Entry::E32, a, b, &mut draw)?;
                    let back = map_phi(&map_psi(&p));
                    report.compare(tag("(3,2) vs transported brute"), &ff_det(&p)?, &ff_brute(&back)?, cfg.tol);
                    report.compare(tag("(3,2) direct reuse"), &ff_det_direct(&p)?, &ff_det(&p)?, cfg.tol);
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Entry-wise Jacobian form of the `(1,2)` matrix.
pub fn check_jacobian<S: Scalar>(sizes: &[(usize, usize)], cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("jacobian form of the (1,2) matrix");
    let mut draw = draw_for(cfg);
    for &(a, b) in sizes {
        for trial in 0..cfg.trials {
            let p = FFProblem::<S>::random(Entry::E12, a, b, &mut draw)?;
            for check in jacobian_check(&p, cfg.tol)?.checks {
                report.checks.push(Check { label: format!("({a},{b}) trial {trial}: {}", check.label), ..check });
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Affinity of the `(1,2)` form factor in `r3(z)` and the limit-column
/// construction of its slope.
pub fn check_omega<S: Scalar>(sizes: &[(usize, usize)], cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("r3(z) decomposition of the (1,2) form factor");
    let mut draw = draw_for(cfg);
    for &(a, b) in sizes {
        for trial in 0..cfg.trials {
            let p = FFProblem::<S>::random(Entry::E12, a, b, &mut draw)?;
            let vals: Vec<S> = (0..3).map(|k| ff_det(&p.with_r3z(S::from_i64(k)))).collect::<Result<_>>()?;
            let second = vals[2].clone() - &vals[1] - &vals[1] + &vals[0];
            report.compare(format!("({a},{b}) trial {trial}: collinear"), &second, &S::zero(), cfg.tol);
            let (o1, o2) = omega_split(&p)?;
            let f = ff_det(&p)?;
            report.compare(format!("({a},{b}) trial {trial}: F = r3 Ω2 + Ω1"), &(p.r3z()? * o2.clone() + &o1), &f, cfg.tol);
            report.compare(format!("({a},{b}) trial {trial}: Ω2 limit column"), &omega2_ext_col(&p)?, &o2, cfg.tol);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `H det N` under two random orderings of the union set, for every entry
/// with a determinant formula.
pub fn check_reordering<S: Scalar>(sizes: &[(usize, usize)], cfg: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("reordering invariance of H det N");
    let mut draw = draw_for(cfg);
    for &(a, b) in sizes {
        for entry in [Entry::E12, Entry::E23, Entry::E32, Entry::E21] {
            let (da, db) = entry.size_shift();
            if (a as isize) + da < 0 || (b as isize) + db < 0 {
                continue;
            }
            for trial in 0..cfg.trials {
                let p = FFProblem::<S>::random(entry, a, b, &mut draw)?;
                let base = det_matrices(&p, None)?;
                for k in 0..2 {
                    let perm = draw.permutation(base.dim());
                    let v = det_matrices(&p, Some(&perm))?.value();
                    report.compare(format!("{entry} ({a},{b}) trial {trial} ordering {k}"), &v, &base.value(), cfg.tol);
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
