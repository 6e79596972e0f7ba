use super::*;
use crate::bethe::{bethe_residual, synthesize_on_shell, BetheData, RTable};
use crate::numeric::{g, Complex64, ParamSet, QComplex, Scalar};
use crate::random::Draw;

fn q(n: i64) -> QComplex {
    QComplex::from_i64(n)
}

fn qr(n: i64, d: i64) -> QComplex {
    QComplex::from_ratio(n, d)
}

fn empty_vacuum_pair(uc: QComplex, r1z: QComplex) -> FFProblem<QComplex> {
    let cd = synthesize_on_shell(ParamSet::new("uC", vec![uc]).unwrap(), ParamSet::empty("vC"), q(1), &[]).unwrap();
    let bd = synthesize_on_shell(ParamSet::empty("uB"), ParamSet::empty("vB"), q(1), &[]).unwrap();
    FFProblem::new(Entry::E12, q(0), cd, bd, Some(r1z), None).unwrap()
}

fn random<S: Scalar>(entry: Entry, a: usize, b: usize, seed: u64) -> FFProblem<S> {
    FFProblem::random(entry, a, b, &mut Draw::new(seed, 1, 1)).unwrap()
}

#[test]
fn one_magnon_closed_form() {
    // F = g(u^C, z) (r1(z) - 1)
    let p = empty_vacuum_pair(q(2), q(3));
    assert_eq!(ff_brute(&p).unwrap(), q(1));
    assert_eq!(ff_det(&p).unwrap(), q(1));
    let p1 = p.with_r1z(q(1));
    assert_eq!(ff_brute(&p1).unwrap(), q(0));
    assert_eq!(ff_det(&p1).unwrap(), q(0));
    let (o1, o2) = omega_split(&p).unwrap();
    assert_eq!(o2, q(0));
    assert_eq!(o1, g(&q(2), &q(0), &q(1)).unwrap() * (q(3) - q(1)));
}

#[test]
fn act12_term_coefficients() {
    let r = RTable::new(q(1));
    let bd = BetheData::new(ParamSet::empty("uB"), ParamSet::new("vB", vec![q(2)]).unwrap(), r);
    let terms = act12_terms(&q(0), &bd).unwrap();
    assert_eq!(terms.len(), 2);
    // -f(0,2) g(2,1) and -f(2,0) g(0,1)
    assert_eq!(terms[0].0, qr(-1, 2));
    assert_eq!(terms[1].0, qr(3, 2));
    assert_eq!(terms[0].1.as_slice(), &[q(0)]);
    assert_eq!(terms[0].2.as_slice(), &[q(0)]);
    assert_eq!(terms[1].2.as_slice(), &[q(2)]);
}

#[test]
fn act12_term_count() {
    for b in 0..4 {
        let p = random::<QComplex>(Entry::E12, 1, b, 40 + b as u64);
        assert_eq!(act12_terms(&p.z, &p.bd).unwrap().len(), b + 1);
    }
}

#[test]
fn det_matches_brute_for_12() {
    for (k, &(a, b)) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 0)].iter().enumerate() {
        for seed in 0..3 {
            let p = random::<QComplex>(Entry::E12, a, b, 100 * k as u64 + seed);
            assert_eq!(ff_det(&p).unwrap(), ff_brute(&p).unwrap(), "(a,b) = ({a},{b}), seed {seed}");
        }
    }
}

#[test]
fn det_matches_brute_float() {
    let p = random::<Complex64>(Entry::E12, 2, 1, 9);
    let (d, b) = (ff_det(&p).unwrap(), ff_brute(&p).unwrap());
    assert!(d.residual(&b) < 1e-9, "{d} vs {b}");
}

#[test]
fn other_entries_match_transported_brute() {
    for &(a, b) in &[(0, 0), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let p = random::<QComplex>(Entry::E23, a, b, 7);
        let phi = map_phi(&p);
        assert_eq!(phi.entry, Entry::E12);
        assert_eq!(ff_det(&p).unwrap(), ff_brute(&phi).unwrap(), "(2,3) at ({a},{b})");

        let p = random::<QComplex>(Entry::E21, a + 1, b, 8);
        assert_eq!(ff_det(&p).unwrap(), ff_brute(&map_psi(&p)).unwrap(), "(2,1) at ({a},{b})");

        let p = random::<QComplex>(Entry::E32, a, b + 1, 9);
        let back = map_phi(&map_psi(&p));
        assert_eq!(back.entry, Entry::E12);
        assert_eq!(ff_det(&p).unwrap(), ff_brute(&back).unwrap(), "(3,2) at ({a},{b})");
    }
}

#[test]
fn direct_reuse_agrees_with_swap() {
    for &(a, b) in &[(1, 1), (2, 1), (1, 2), (2, 2)] {
        let p = random::<QComplex>(Entry::E32, a, b, 11);
        assert_eq!(ff_det_direct(&p).unwrap(), ff_det(&p).unwrap());
        let p = random::<QComplex>(Entry::E21, a, b, 12);
        assert_eq!(ff_det_direct(&p).unwrap(), ff_det(&p).unwrap());
    }
    assert!(ff_det_direct(&random::<QComplex>(Entry::E12, 1, 1, 1)).is_err());
}

#[test]
fn psi_pairs_agree() {
    for &(a, b) in &[(1, 1), (2, 2)] {
        for entry in [Entry::E12, Entry::E23, Entry::E32] {
            let p = random::<QComplex>(entry, a, b, 13);
            assert_eq!(ff_det(&p).unwrap(), ff_det(&map_psi(&p)).unwrap());
        }
    }
}

fn same_problem<S: Scalar>(p: &FFProblem<S>, r: &FFProblem<S>) {
    assert_eq!(p.entry, r.entry);
    assert!(p.z.same_point(&r.z));
    for (x, y) in [(&p.cd.u, &r.cd.u), (&p.cd.v, &r.cd.v), (&p.bd.u, &r.bd.u), (&p.bd.v, &r.bd.v)] {
        assert_eq!(x.len(), y.len());
        assert!(x.iter().zip(y.iter()).all(|(a, b)| a.same_point(b)));
    }
    for w in p.cd.u.iter().chain(p.bd.u.iter()).chain([&p.z]) {
        assert!(p.r.r1(w).unwrap().same_point(&r.r.r1(w).unwrap()));
    }
    for w in p.cd.v.iter().chain(p.bd.v.iter()).chain([&p.z]) {
        assert!(p.r.r3(w).unwrap().same_point(&r.r.r3(w).unwrap()));
    }
}

#[test]
fn mappings_are_involutions() {
    let p = random::<QComplex>(Entry::E12, 2, 1, 21);
    same_problem(&p, &map_phi(&map_phi(&p)));
    same_problem(&p, &map_psi(&map_psi(&p)));
    let phi = map_phi(&p);
    assert!(phi.cd.on_shell && phi.bd.on_shell);
    assert_eq!(bethe_residual(&phi.c_side()).unwrap(), 0.0);
    assert_eq!(bethe_residual(&phi.b_side()).unwrap(), 0.0);
    let psi = map_psi(&p);
    assert_eq!((psi.cd.a(), psi.cd.b(), psi.bd.a(), psi.bd.b()), (2, 1, 3, 1));
    assert!(FFProblem::new(psi.entry, psi.z.clone(), psi.cd.clone(), psi.bd.clone(), None, None).is_ok());
}

#[test]
fn reordering_invariance() {
    let mut draw = Draw::new(5, 1, 1);
    for entry in [Entry::E12, Entry::E23, Entry::E32, Entry::E21] {
        let p = random::<QComplex>(entry, 2, 2, 31);
        let base = det_matrices(&p, None).unwrap();
        for _ in 0..2 {
            let perm = draw.permutation(base.dim());
            assert_eq!(det_matrices(&p, Some(&perm)).unwrap().value(), base.value(), "{entry}");
        }
    }
}

#[test]
fn affine_in_free_r_values() {
    let p = random::<QComplex>(Entry::E12, 1, 1, 41);
    for set in [FFProblem::with_r1z, FFProblem::with_r3z] {
        let vals: Vec<QComplex> = (0..3).map(|k| ff_det(&set(&p, q(k))).unwrap()).collect();
        let slope = vals[1].clone() - &vals[0];
        assert_eq!(vals[2].clone() - &vals[1], slope);
        assert!(!slope.is_zero());
    }
    let (o1, o2) = omega_split(&p).unwrap();
    for r3 in [q(0), q(1), q(2), qr(-7, 3)] {
        assert_eq!(ff_det(&p.with_r3z(r3.clone())).unwrap(), r3 * o2.clone() + &o1);
    }
}

#[test]
fn omega2_matches_extended_column() {
    for &(a, b) in &[(0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let p = random::<QComplex>(Entry::E12, a, b, 51);
        let (_, o2) = omega_split(&p).unwrap();
        assert_eq!(omega2_ext_col(&p).unwrap(), o2, "({a},{b})");
    }
}

#[test]
fn jacobian_entries() {
    for &(a, b) in &[(1, 0), (1, 1), (2, 1)] {
        let p = random::<QComplex>(Entry::E12, a, b, 61);
        let rep = jacobian_check(&p, 0.0).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.max_residual(), 0.0);
    }
    let p = random::<Complex64>(Entry::E12, 2, 2, 62);
    let rep = jacobian_check(&p, 1e-9).unwrap();
    assert!(rep.passed() && rep.max_residual() < 1e-9, "{rep}");
}

#[test]
fn vacuum_b_side_has_only_l_rows() {
    for a in 0..3 {
        let p = random::<QComplex>(Entry::E12, a, 0, 71);
        let m = det_matrices(&p, None).unwrap();
        assert_eq!((m.dim(), m.l_rows), (a + 1, a + 1));
    }
}

#[test]
fn f13_brute_symmetric_in_each_set() {
    let p = random::<QComplex>(Entry::E13, 1, 1, 81);
    let base = ff_brute(&p).unwrap();
    let mut r = p.clone();
    r.cd.u = r.cd.u.permuted(&[1, 0]);
    r.cd.v = r.cd.v.permuted(&[1, 0]);
    assert_eq!(ff_brute(&r).unwrap(), base);
    assert!(matches!(ff_det(&p), Err(crate::Error::UnsupportedEntry(1, 3))));
}

#[test]
fn f13_vacuum_is_a_scalar_product() {
    let p = random::<QComplex>(Entry::E13, 0, 0, 82);
    let z = std::slice::from_ref(&p.z);
    let bd = BetheData::new(ParamSet::new("uB", z.to_vec()).unwrap(), ParamSet::new("vB", z.to_vec()).unwrap(), p.r.clone());
    let sp = crate::scalar_product::scalar_product(&p.c_side(), &bd).unwrap();
    assert_eq!(ff_brute(&p).unwrap(), sp);
}

#[test]
fn validation() {
    let p = random::<QComplex>(Entry::E12, 1, 1, 91);
    assert!(matches!(
        FFProblem::new(Entry::E23, p.z.clone(), p.cd.clone(), p.bd.clone(), None, None),
        Err(crate::Error::CardinalityMismatch(_))
    ));
    let mut off = p.cd.clone();
    off.on_shell = false;
    assert!(matches!(
        FFProblem::new(Entry::E12, p.z.clone(), off, p.bd.clone(), None, None),
        Err(crate::Error::OffShell(_))
    ));
    assert!(matches!(ff_brute(&random::<QComplex>(Entry::E23, 1, 1, 3)), Err(crate::Error::UnsupportedEntry(2, 3))));
}

#[test]
fn suites_pass() {
    let cfg = crate::report::SuiteConfig { trials: 1, ..Default::default() };
    for rep in [
        check_oracle_equivalence::<QComplex>(&[(1, 1)], &cfg).unwrap(),
        check_mapping_coherence::<QComplex>(1, &cfg).unwrap(),
        check_jacobian::<QComplex>(&[(1, 1)], &cfg).unwrap(),
        check_omega::<QComplex>(&[(1, 1)], &cfg).unwrap(),
        check_reordering::<QComplex>(&[(1, 1)], &cfg).unwrap(),
        check_oracle_equivalence::<Complex64>(&[(2, 1)], &cfg).unwrap(),
    ] {
        assert!(rep.passed(), "{rep}");
    }
}
