use super::problem::FFProblem;
use crate::bethe::BetheData;
use crate::numeric::{ParamSet, Scalar};

fn negated<S: Scalar>(xs: &ParamSet<S>, label: &str) -> ParamSet<S> {
    ParamSet::new(label, xs.negated().into_vec()).expect("negation keeps points distinct")
}

fn reflect_data<S: Scalar>(d: &BetheData<S>) -> BetheData<S> {
    BetheData {
        u: negated(&d.v, d.u.label()),
        v: negated(&d.u, d.v.label()),
        r: d.r.reflected(),
        on_shell: d.on_shell,
    }
}

/// The reflection: entry `(i,j) → (4-j, 4-i)`, `z → -z`, `ū → -v̄` and
/// `v̄ → -ū` on both sides, `r1(w) ↔ r3(-w)`.
pub fn map_phi<S: Scalar>(p: &FFProblem<S>) -> FFProblem<S> {
    FFProblem {
        entry: p.entry.reflected(),
        z: -p.z.clone(),
        cd: reflect_data(&p.cd),
        bd: reflect_data(&p.bd),
        r: p.r.reflected(),
    }
}

/// The transposition: entry `(i,j) → (j,i)` with the C and B data exchanged.
///
/// # Panics
/// On entry `(1,3)`, whose transpose is not a supported entry.
pub fn map_psi<S: Scalar>(p: &FFProblem<S>) -> FFProblem<S> {
    FFProblem {
        entry: p.entry.transposed().expect("(1,3) has no supported transpose"),
        z: p.z.clone(),
        cd: p.bd.clone(),
        bd: p.cd.clone(),
        r: p.r.clone(),
    }
}
