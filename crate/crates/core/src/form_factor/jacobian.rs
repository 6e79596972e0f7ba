use super::det::{det12_core, Sets};
use super::problem::{Entry, FFProblem};
use crate::bethe::{dtau_weighted, Root};
use crate::error::{Error, Result};
use crate::numeric::{set_product, Kernel, Scalar};
use crate::report::Report;

/// Compares every entry of the `(1,2)` matrix with the weighted derivative of
/// the transfer-matrix eigenvalue it should equal:
/// `L(x,u_j) = c h(x,ū^B)^{-1} g(x,ū^C)^{-1} f(v̄^C,x)^{-1} ∂τ_C(x)/∂u_j` and
/// `M(x,v_j) = -c h(v̄^C,x)^{-1} g(v̄^B,x)^{-1} f(x,ū^B)^{-1} ∂τ_B(x)/∂v_j`.
pub fn jacobian_check<S: Scalar>(p: &FFProblem<S>, tol: f64) -> Result<Report> {
    if p.entry != Entry::E12 {
        let (i, j) = p.entry.indices();
        return Err(Error::UnsupportedEntry(i, j));
    }
    let c = p.c();
    let sets = Sets { uc: &p.cd.u, vc: &p.cd.v, ub: &p.bd.u, vb: &p.bd.v };
    let m = det12_core(&sets, &p.z, &p.r, None)?;
    let (cd, bd) = (p.c_side(), p.b_side());
    let mut report = Report::new("jacobian (1,2)");
    for (k, x) in m.xbar.iter().enumerate() {
        let xs = std::slice::from_ref(x);
        for j in 0..cd.a() {
            let scale = c.clone()
                .try_div(&set_product(Kernel::H, xs, &p.bd.u, c)?)?
                .try_div(&set_product(Kernel::G, xs, &p.cd.u, c)?)?;
            let rhs = scale * dtau_weighted(x, &cd, Root::U(j))?;
            report.compare(format!("L[{j},{k}]"), &m.n[j][k], &rhs, tol);
        }
        for j in 0..bd.b() {
            let scale = (-c.clone())
                .try_div(&set_product(Kernel::H, &p.cd.v, xs, c)?)?
                .try_div(&set_product(Kernel::G, &p.bd.v, xs, c)?)?;
            let rhs = scale * dtau_weighted(x, &bd, Root::V(j))?;
            report.compare(format!("M[{j},{k}]"), &m.n[m.l_rows + j][k], &rhs, tol);
        }
    }
    Ok(report)
}
