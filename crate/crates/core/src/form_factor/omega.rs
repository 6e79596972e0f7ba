use super::det::{det12_core, Sets};
use super::problem::{Entry, FFProblem};
use super::ff_det;
use crate::error::{Error, Result};
use crate::numeric::{set_product, t, Kernel, Scalar};

fn require_12<S: Scalar>(p: &FFProblem<S>) -> Result<()> {
    match p.entry {
        Entry::E12 => Ok(()),
        other => {
            let (i, j) = other.indices();
            Err(Error::UnsupportedEntry(i, j))
        }
    }
}

/// `(Ω1, Ω2)` with `F = r3(z) Ω2 + Ω1` for the `(1,2)` form factor.
pub fn omega_split<S: Scalar>(p: &FFProblem<S>) -> Result<(S, S)> {
    require_12(p)?;
    let o1 = ff_det(&p.with_r3z(S::zero()))?;
    let f1 = ff_det(&p.with_r3z(S::one()))?;
    Ok((o1.clone(), f1 - &o1))
}

/// `Ω2` built independently: the determinant with the `z` column replaced by
/// its limiting form (zero in L-rows, `t(z,v_j) g(v̄^C,z)/g(v̄^B,z)` in
/// M-rows) and the prefactor divided by `f(v̄^B,z+c) f(z,ū^B) f(v̄^C,z)`.
pub fn omega2_ext_col<S: Scalar>(p: &FFProblem<S>) -> Result<S> {
    require_12(p)?;
    let c = p.c();
    let z = std::slice::from_ref(&p.z);
    let sets = Sets { uc: &p.cd.u, vc: &p.cd.v, ub: &p.bd.u, vb: &p.bd.v };
    let mut m = det12_core(&sets, &p.z, &p.r, None)?;
    let col = p.bd.u.len();
    let ratio = set_product(Kernel::G, &p.cd.v, z, c)?.try_div(&set_product(Kernel::G, &p.bd.v, z, c)?)?;
    for (i, row) in m.n.iter_mut().enumerate() {
        row[col] = if i < m.l_rows {
            S::zero()
        } else {
            t(&p.z, &p.bd.v[i - m.l_rows], c)? * &ratio
        };
    }
    let zc = [p.z.clone() + c];
    let denom = set_product(Kernel::F, &p.bd.v, &zc, c)?
        * set_product(Kernel::F, z, &p.bd.u, c)?
        * set_product(Kernel::F, &p.cd.v, z, c)?;
    Ok(-(m.value().try_div(&denom)?))
}
