use super::problem::{Entry, FFProblem};
use crate::bethe::RTable;
use crate::error::{Error, Result};
use crate::numeric::{
    delta, delta_prime, reciprocal_f_product, set_product, t, Kernel, ParamSet, Scalar,
};

/// `H · det N`: the union set, the prefactor and the square matrix whose
/// first `l_rows` rows are L-entries and the rest M-entries.
#[derive(Clone, Debug)]
pub struct DetMatrices<S: Scalar> {
    pub xbar: ParamSet<S>,
    pub h: S,
    pub n: Vec<Vec<S>>,
    pub l_rows: usize,
}

impl<S: Scalar> DetMatrices<S> {
    pub fn value(&self) -> S {
        self.h.clone() * S::determinant(self.n.clone())
    }

    pub fn dim(&self) -> usize {
        self.n.len()
    }
}

/// The four root sets entering one determinant formula, already assigned to
/// their C/B roles.
pub(crate) struct Sets<'a, S> {
    pub uc: &'a [S],
    pub vc: &'a [S],
    pub ub: &'a [S],
    pub vb: &'a [S],
}

fn ordered<S: Clone>(points: Vec<S>, order: Option<&[usize]>) -> Result<Vec<S>> {
    match order {
        None => Ok(points),
        Some(perm) => {
            let mut seen = vec![false; points.len()];
            if perm.len() != points.len() || perm.iter().any(|&k| k >= seen.len() || std::mem::replace(&mut seen[k], true)) {
                return Err(Error::CardinalityMismatch(format!(
                    "ordering of length {} is not a permutation of {} points",
                    perm.len(),
                    points.len()
                )));
            }
            Ok(perm.iter().map(|&k| points[k].clone()).collect())
        }
    }
}

fn square_check(points: usize, l: usize, m: usize) -> Result<()> {
    if points != l + m {
        return Err(Error::CardinalityMismatch(format!(
            "union set has {points} points but the matrix needs {l} + {m} columns"
        )));
    }
    Ok(())
}

fn one<S: Clone>(x: &S) -> &[S] {
    std::slice::from_ref(x)
}

/// Matrices of the `(1,2)` formula: `x̄ = {ū^B, z, v̄^C}`, L-rows over `ū^C`,
/// M-rows over `v̄^B`.
pub(crate) fn det12_core<S: Scalar>(
    s: &Sets<'_, S>,
    z: &S,
    r: &RTable<S>,
    order: Option<&[usize]>,
) -> Result<DetMatrices<S>> {
    let c = r.c();
    let mut x = s.ub.to_vec();
    x.push(z.clone());
    x.extend_from_slice(s.vc);
    let x = ordered(x, order)?;
    square_check(x.len(), s.uc.len(), s.vb.len())?;

    let prefactor = set_product(Kernel::H, &x, s.ub, c)?
        * set_product(Kernel::H, s.vc, &x, c)?
        * delta_prime(s.uc, c)?
        * delta_prime(s.vb, c)?
        * delta(&x, c)?;
    let prefactor = prefactor.try_div(&set_product(Kernel::H, s.vc, s.ub, c)?)?;

    let sign_l = S::sign(s.uc.len().saturating_sub(1));
    let sign_m = S::sign(s.vb.len().saturating_sub(1));
    let mut n = Vec::with_capacity(x.len());
    for uj in s.uc {
        let mut row = Vec::with_capacity(x.len());
        for xk in &x {
            let inv_h = S::one().try_div(&set_product(Kernel::H, one(xk), s.ub, c)?)?;
            let w = reciprocal_f_product(s.vc, one(xk), c)?;
            let mut e = t(xk, uj, c)? * set_product(Kernel::H, one(xk), s.uc, c)? * &inv_h;
            if !w.is_zero() {
                e = e + sign_l.clone()
                    * t(uj, xk, c)?
                    * r.r1(xk)?
                    * set_product(Kernel::H, s.uc, one(xk), c)?
                    * w
                    * &inv_h;
            }
            row.push(e);
        }
        n.push(row);
    }
    for vj in s.vb {
        let mut row = Vec::with_capacity(x.len());
        for xk in &x {
            let inv_h = S::one().try_div(&set_product(Kernel::H, s.vc, one(xk), c)?)?;
            let w = reciprocal_f_product(one(xk), s.ub, c)?;
            let mut e = t(vj, xk, c)? * set_product(Kernel::H, s.vb, one(xk), c)? * &inv_h;
            if !w.is_zero() {
                e = e + sign_m.clone()
                    * t(xk, vj, c)?
                    * r.r3(xk)?
                    * set_product(Kernel::H, one(xk), s.vb, c)?
                    * w
                    * &inv_h;
            }
            row.push(e);
        }
        n.push(row);
    }
    Ok(DetMatrices { xbar: ParamSet::new("x", x)?, h: prefactor, n, l_rows: s.uc.len() })
}

/// Matrices of the `(2,3)` formula: `ȳ = {v̄^B, z, ū^C}`, L-rows over `ū^B`,
/// M-rows over `v̄^C`.
pub(crate) fn det23_core<S: Scalar>(
    s: &Sets<'_, S>,
    z: &S,
    r: &RTable<S>,
    order: Option<&[usize]>,
) -> Result<DetMatrices<S>> {
    let c = r.c();
    let mut y = s.vb.to_vec();
    y.push(z.clone());
    y.extend_from_slice(s.uc);
    let y = ordered(y, order)?;
    square_check(y.len(), s.ub.len(), s.vc.len())?;

    let prefactor = set_product(Kernel::H, &y, s.uc, c)?
        * set_product(Kernel::H, s.vb, &y, c)?
        * delta_prime(s.ub, c)?
        * delta_prime(s.vc, c)?
        * delta(&y, c)?;
    let prefactor = prefactor.try_div(&set_product(Kernel::H, s.vb, s.uc, c)?)?;

    let sign_l = S::sign(s.ub.len().saturating_sub(1));
    let sign_m = S::sign(s.vc.len().saturating_sub(1));
    let mut n = Vec::with_capacity(y.len());
    for uj in s.ub {
        let mut row = Vec::with_capacity(y.len());
        for yk in &y {
            let inv_h = S::one().try_div(&set_product(Kernel::H, one(yk), s.uc, c)?)?;
            let w = reciprocal_f_product(s.vb, one(yk), c)?;
            let mut e = t(yk, uj, c)? * set_product(Kernel::H, one(yk), s.ub, c)? * &inv_h;
            if !w.is_zero() {
                e = e + sign_l.clone()
                    * t(uj, yk, c)?
                    * r.r1(yk)?
                    * set_product(Kernel::H, s.ub, one(yk), c)?
                    * w
                    * &inv_h;
            }
            row.push(e);
        }
        n.push(row);
    }
    for vj in s.vc {
        let mut row = Vec::with_capacity(y.len());
        for yk in &y {
            let inv_h = S::one().try_div(&set_product(Kernel::H, s.vb, one(yk), c)?)?;
            let w = reciprocal_f_product(one(yk), s.uc, c)?;
            let mut e = t(vj, yk, c)? * set_product(Kernel::H, s.vc, one(yk), c)? * &inv_h;
            if !w.is_zero() {
                e = e + sign_m.clone()
                    * t(yk, vj, c)?
                    * r.r3(yk)?
                    * set_product(Kernel::H, one(yk), s.vc, c)?
                    * w
                    * &inv_h;
            }
            row.push(e);
        }
        n.push(row);
    }
    Ok(DetMatrices { xbar: ParamSet::new("y", y)?, h: prefactor, n, l_rows: s.ub.len() })
}

fn as_given<S: Scalar>(p: &FFProblem<S>) -> Sets<'_, S> {
    Sets { uc: &p.cd.u, vc: &p.cd.v, ub: &p.bd.u, vb: &p.bd.v }
}

fn swapped<S: Scalar>(p: &FFProblem<S>) -> Sets<'_, S> {
    Sets { uc: &p.bd.u, vc: &p.bd.v, ub: &p.cd.u, vb: &p.cd.v }
}

/// The matrices behind [`ff_det`]. `order` optionally permutes the union set.
///
/// For `(3,2)` and `(2,1)` the C and B data are exchanged and the `(2,3)`
/// resp. `(1,2)` formula is applied.
pub fn det_matrices<S: Scalar>(p: &FFProblem<S>, order: Option<&[usize]>) -> Result<DetMatrices<S>> {
    match p.entry {
        Entry::E12 => det12_core(&as_given(p), &p.z, &p.r, order),
        Entry::E23 => det23_core(&as_given(p), &p.z, &p.r, order),
        Entry::E32 => det23_core(&swapped(p), &p.z, &p.r, order),
        Entry::E21 => det12_core(&swapped(p), &p.z, &p.r, order),
        Entry::E13 => Err(Error::UnsupportedEntry(1, 3)),
    }
}

/// Form factor `⟨C| T_ij(z) |B⟩` from its determinant representation.
///
/// ```
/// use bethe_ff::bethe::synthesize_on_shell;
/// use bethe_ff::form_factor::{ff_det, Entry, FFProblem};
/// use bethe_ff::numeric::{ParamSet, QComplex, Scalar};
///
/// let q = |n| QComplex::from_i64(n);
/// let cd = synthesize_on_shell(ParamSet::new("uC", vec![q(2)]).unwrap(), ParamSet::empty("vC"), q(1), &[]).unwrap();
/// let bd = synthesize_on_shell(ParamSet::empty("uB"), ParamSet::empty("vB"), q(1), &[]).unwrap();
/// let p = FFProblem::new(Entry::E12, q(0), cd, bd, Some(q(3)), None).unwrap();
/// assert_eq!(ff_det(&p).unwrap(), q(1));
/// ```
pub fn ff_det<S: Scalar>(p: &FFProblem<S>) -> Result<S> {
    Ok(det_matrices(p, None)?.value())
}

/// `(3,2)` and `(2,1)` evaluated by feeding the data unswapped into the
/// `(1,2)` resp. `(2,3)` formula with reinterpreted sizes. Agrees with
/// [`ff_det`]; kept as a consistency check.
pub fn ff_det_direct<S: Scalar>(p: &FFProblem<S>) -> Result<S> {
    let m = match p.entry {
        Entry::E32 => det12_core(&as_given(p), &p.z, &p.r, None)?,
        Entry::E21 => det23_core(&as_given(p), &p.z, &p.r, None)?,
        other => {
            let (i, j) = other.indices();
            return Err(Error::UnsupportedEntry(i, j));
        }
    };
    Ok(m.value())
}
