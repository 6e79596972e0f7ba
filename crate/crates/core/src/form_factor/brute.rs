use super::problem::{Entry, FFProblem};
use crate::bethe::BetheData;
use crate::error::{Error, Result};
use crate::numeric::{g, set_product, Kernel, ParamSet, Scalar};
use crate::parallel::ordered_map;
use crate::scalar_product::scalar_product;

/// Terms of `T_12(z)` acting on `B(ū; v̄)`: one per element `ξ_i` of
/// `ξ̄ = {v̄, z}`, with coefficient `-f(ξ̄_ii, ξ_i) g(ξ_i, z+c)`, new
/// `u = {ū, z}` and new `v = ξ̄_ii`.
///
/// ```
/// use bethe_ff::bethe::{BetheData, RTable};
/// use bethe_ff::form_factor::act12_terms;
/// use bethe_ff::numeric::{ParamSet, QComplex, Scalar};
///
/// let q = |n| QComplex::from_i64(n);
/// let bd = BetheData::new(ParamSet::empty("uB"), ParamSet::empty("vB"), RTable::new(q(1)));
/// let terms = act12_terms(&q(0), &bd).unwrap();
/// assert_eq!(terms.len(), 1);
/// assert_eq!(terms[0].0, q(1));
/// ```
pub fn act12_terms<S: Scalar>(z: &S, bd: &BetheData<S>) -> Result<Vec<(S, ParamSet<S>, ParamSet<S>)>> {
    let c = bd.c();
    let zc = z.clone() + c;
    let new_u = bd.u.union(std::slice::from_ref(z), bd.u.label())?;
    let mut xi = bd.v.to_vec();
    xi.push(z.clone());
    let mut out = Vec::with_capacity(xi.len());
    for i in 0..xi.len() {
        let rest: Vec<S> = xi.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        let coeff = -(set_product(Kernel::F, &rest, std::slice::from_ref(&xi[i]), c)? * g(&xi[i], &zc, c)?);
        out.push((coeff, new_u.clone(), ParamSet::new(bd.v.label(), rest)?));
    }
    Ok(out)
}

/// Form factor as a combination of scalar products: entries `(1,2)` and
/// `(1,3)` only, the others have no direct action formula.
pub fn ff_brute<S: Scalar>(p: &FFProblem<S>) -> Result<S> {
    let cd = p.c_side();
    match p.entry {
        Entry::E12 => {
            let terms = act12_terms(&p.z, &p.bd)?;
            let parts = ordered_map(&terms, |(coeff, u, v)| -> Result<S> {
                let bd = BetheData::new(u.clone(), v.clone(), p.r.clone());
                Ok(coeff.clone() * scalar_product(&cd, &bd)?)
            });
            parts.into_iter().try_fold(S::zero(), |acc, v| Ok(acc + v?))
        }
        Entry::E13 => {
            let z = std::slice::from_ref(&p.z);
            let u = p.bd.u.union(z, p.bd.u.label())?;
            let v = p.bd.v.union(z, p.bd.v.label())?;
            scalar_product(&cd, &BetheData::new(u, v, p.r.clone()))
        }
        other => {
            let (i, j) = other.indices();
            Err(Error::UnsupportedEntry(i, j))
        }
    }
}
