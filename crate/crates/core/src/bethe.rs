//! Functional parameters `r1`, `r3`, Bethe equations and the eigenvalue `τ`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numeric::{g, reciprocal_f_product, set_product, Kernel, ParamSet, Scalar};

/// Closed-form `r1`, `r3` (for example those of a concrete spin chain).
pub trait RClosedForm<S>: Send + Sync {
    fn r1(&self, w: &S) -> Result<S>;
    fn r3(&self, w: &S) -> Result<S>;
}

/// Closed forms seen through `w → -w` with `r1` and `r3` exchanged.
struct Reflected<S>(Arc<dyn RClosedForm<S>>);

impl<S: Scalar> RClosedForm<S> for Reflected<S> {
    fn r1(&self, w: &S) -> Result<S> {
        self.0.r3(&-w.clone())
    }
    fn r3(&self, w: &S) -> Result<S> {
        self.0.r1(&-w.clone())
    }
}

/// Point-supported values of `r1` and `r3`, optionally backed by closed forms.
///
/// Table entries take precedence; a point neither in the table nor covered by
/// a closed form is an error.
#[derive(Clone)]
pub struct RTable<S> {
    c: S,
    r1: Vec<(S, S)>,
    r3: Vec<(S, S)>,
    closed: Option<Arc<dyn RClosedForm<S>>>,
}

impl<S: Scalar> fmt::Debug for RTable<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RTable")
            .field("c", &self.c)
            .field("r1", &self.r1)
            .field("r3", &self.r3)
            .field("closed", &self.closed.is_some())
            .finish()
    }
}

fn find<'a, S: Scalar>(entries: &'a [(S, S)], w: &S) -> Option<&'a S> {
    entries.iter().find(|(p, _)| p.same_point(w)).map(|(_, v)| v)
}

fn upsert<S: Scalar>(entries: &mut Vec<(S, S)>, w: S, value: S) {
    match entries.iter_mut().find(|(p, _)| p.same_point(&w)) {
        Some(slot) => slot.1 = value,
        None => entries.push((w, value)),
    }
}

impl<S: Scalar> RTable<S> {
    pub fn new(c: S) -> Self {
        RTable { c, r1: Vec::new(), r3: Vec::new(), closed: None }
    }

    /// A table whose lookups fall back to `closed`.
    pub fn with_closed_form(c: S, closed: Arc<dyn RClosedForm<S>>) -> Self {
        RTable { c, r1: Vec::new(), r3: Vec::new(), closed: Some(closed) }
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn has_closed_form(&self) -> bool {
        self.closed.is_some()
    }

    pub fn r1_entries(&self) -> &[(S, S)] {
        &self.r1
    }

    pub fn r3_entries(&self) -> &[(S, S)] {
        &self.r3
    }

    /// Inserts or overwrites `r1(w)`. With a closed form present the value
    /// must agree with it.
    pub fn set_r1(&mut self, w: S, value: S) -> Result<()> {
        self.check_closed("r1", &w, &value, |cf, w| cf.r1(w))?;
        upsert(&mut self.r1, w, value);
        Ok(())
    }

    pub fn set_r3(&mut self, w: S, value: S) -> Result<()> {
        self.check_closed("r3", &w, &value, |cf, w| cf.r3(w))?;
        upsert(&mut self.r3, w, value);
        Ok(())
    }

    /// Overwrites `r1(w)` even where a closed form would disagree. The form
    /// factors treat `r1(z)`, `r3(z)` as free inputs.
    pub fn override_r1(&mut self, w: S, value: S) {
        upsert(&mut self.r1, w, value);
    }

    pub fn override_r3(&mut self, w: S, value: S) {
        upsert(&mut self.r3, w, value);
    }

    fn check_closed(
        &self,
        which: &'static str,
        w: &S,
        value: &S,
        eval: impl Fn(&dyn RClosedForm<S>, &S) -> Result<S>,
    ) -> Result<()> {
        if let Some(cf) = &self.closed {
            if let Ok(expected) = eval(cf.as_ref(), w) {
                if !value.same_point(&expected) {
                    return Err(Error::ConflictingRValue { which, point: w.to_string() });
                }
            }
        }
        Ok(())
    }

    pub fn r1(&self, w: &S) -> Result<S> {
        if let Some(v) = find(&self.r1, w) {
            return Ok(v.clone());
        }
        match &self.closed {
            Some(cf) => cf.r1(w),
            None => Err(Error::MissingRValue { which: "r1", point: w.to_string() }),
        }
    }

    pub fn r3(&self, w: &S) -> Result<S> {
        if let Some(v) = find(&self.r3, w) {
            return Ok(v.clone());
        }
        match &self.closed {
            Some(cf) => cf.r3(w),
            None => Err(Error::MissingRValue { which: "r3", point: w.to_string() }),
        }
    }

    /// Union of two tables; entries present in both must agree.
    pub fn merged(&self, other: &RTable<S>) -> Result<RTable<S>> {
        let mut out = self.clone();
        if out.closed.is_none() {
            out.closed = other.closed.clone();
        }
        for (which, src, dst) in [("r1", &other.r1, &mut out.r1), ("r3", &other.r3, &mut out.r3)] {
            for (w, v) in src {
                match find(dst, w) {
                    Some(existing) if !existing.same_point(v) => {
                        return Err(Error::ConflictingRValue { which, point: w.to_string() })
                    }
                    Some(_) => {}
                    None => dst.push((w.clone(), v.clone())),
                }
            }
        }
        Ok(out)
    }

    /// The table for reflected arguments: `r̃1(w) = r3(-w)`, `r̃3(w) = r1(-w)`.
    pub fn reflected(&self) -> RTable<S> {
        let flip = |entries: &[(S, S)]| entries.iter().map(|(w, v)| (-w.clone(), v.clone())).collect();
        RTable {
            c: self.c.clone(),
            r1: flip(&self.r3),
            r3: flip(&self.r1),
            closed: self.closed.clone().map(|cf| Arc::new(Reflected(cf)) as Arc<dyn RClosedForm<S>>),
        }
    }
}

/// Root sets of one Bethe vector together with the r-functions they see.
#[derive(Clone)]
pub struct BetheData<S> {
    pub u: ParamSet<S>,
    pub v: ParamSet<S>,
    pub r: RTable<S>,
    pub on_shell: bool,
}

impl<S: Scalar> fmt::Debug for BetheData<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BetheData")
            .field("u", &self.u)
            .field("v", &self.v)
            .field("r", &self.r)
            .field("on_shell", &self.on_shell)
            .finish()
    }
}

impl<S: Scalar> BetheData<S> {
    pub fn new(u: ParamSet<S>, v: ParamSet<S>, r: RTable<S>) -> Self {
        BetheData { u, v, r, on_shell: false }
    }

    pub fn c(&self) -> &S {
        self.r.c()
    }

    pub fn a(&self) -> usize {
        self.u.len()
    }

    pub fn b(&self) -> usize {
        self.v.len()
    }

    /// Checks the Bethe equations and sets the flag accordingly; `tol` is the
    /// absolute residual bound for the float backend.
    pub fn mark_on_shell(mut self, tol: f64) -> Result<Self> {
        let res = bethe_residual(&self)?;
        self.on_shell = match S::BACKEND {
            crate::numeric::Backend::Rational => res == 0.0,
            crate::numeric::Backend::Float => res <= tol,
        };
        Ok(self)
    }
}

fn without<S: Clone>(xs: &[S], j: usize) -> Vec<S> {
    xs.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect()
}

/// Right-hand side of the Bethe equation for `r1(u_j)`.
pub fn bethe_rhs_u<S: Scalar>(u: &[S], v: &[S], j: usize, c: &S) -> Result<S> {
    let uj = std::slice::from_ref(&u[j]);
    let rest = without(u, j);
    let ratio = set_product(Kernel::F, uj, &rest, c)?.try_div(&set_product(Kernel::F, &rest, uj, c)?)?;
    Ok(ratio * set_product(Kernel::F, v, uj, c)?)
}

/// Right-hand side of the Bethe equation for `r3(v_j)`.
pub fn bethe_rhs_v<S: Scalar>(u: &[S], v: &[S], j: usize, c: &S) -> Result<S> {
    let vj = std::slice::from_ref(&v[j]);
    let rest = without(v, j);
    let ratio = set_product(Kernel::F, &rest, vj, c)?.try_div(&set_product(Kernel::F, vj, &rest, c)?)?;
    Ok(ratio * set_product(Kernel::F, vj, u, c)?)
}

/// On-shell data for freely chosen roots: `r1` and `r3` at the roots are
/// defined by the Bethe equations. `free` installs extra points verbatim as
/// `(w, r1(w), r3(w))`.
///
/// ```
/// use bethe_ff::bethe::{bethe_residual, synthesize_on_shell};
/// use bethe_ff::numeric::{ParamSet, QComplex, Scalar};
///
/// let q = |n| QComplex::from_i64(n);
/// let u = ParamSet::new("u", vec![q(0)]).unwrap();
/// let v = ParamSet::new("v", vec![q(2)]).unwrap();
/// let d = synthesize_on_shell(u, v, q(1), &[]).unwrap();
/// assert_eq!(d.r.r1(&q(0)).unwrap(), QComplex::from_ratio(3, 2));
/// assert_eq!(d.r.r3(&q(2)).unwrap(), QComplex::from_ratio(3, 2));
/// assert_eq!(bethe_residual(&d).unwrap(), 0.0);
/// ```
pub fn synthesize_on_shell<S: Scalar>(
    u: ParamSet<S>,
    v: ParamSet<S>,
    c: S,
    free: &[(S, Option<S>, Option<S>)],
) -> Result<BetheData<S>> {
    let mut r = RTable::new(c.clone());
    for j in 0..u.len() {
        r.set_r1(u[j].clone(), bethe_rhs_u(&u, &v, j, &c)?)?;
    }
    for j in 0..v.len() {
        r.set_r3(v[j].clone(), bethe_rhs_v(&u, &v, j, &c)?)?;
    }
    for (w, r1, r3) in free {
        if let Some(val) = r1 {
            r.override_r1(w.clone(), val.clone());
        }
        if let Some(val) = r3 {
            r.override_r3(w.clone(), val.clone());
        }
    }
    Ok(BetheData { u, v, r, on_shell: true })
}

/// Largest `|lhs - rhs|` over the single-root Bethe equations. Exactly `0.0`
/// for exact on-shell data.
pub fn bethe_residual<S: Scalar>(d: &BetheData<S>) -> Result<f64> {
    let c = d.c();
    let mut worst = 0.0f64;
    let mut note = |lhs: S, rhs: S| {
        let diff = lhs - &rhs;
        let mut m = diff.modulus();
        if m == 0.0 && !diff.is_zero() {
            m = f64::MIN_POSITIVE;
        }
        worst = worst.max(m);
    };
    for j in 0..d.u.len() {
        note(d.r.r1(&d.u[j])?, bethe_rhs_u(&d.u, &d.v, j, c)?);
    }
    for j in 0..d.v.len() {
        note(d.r.r3(&d.v[j])?, bethe_rhs_v(&d.u, &d.v, j, c)?);
    }
    Ok(worst)
}

/// `τ(w) = r1(w) f(ū,w) + f(w,ū) f(v̄,w) + r3(w) f(w,v̄)`.
pub fn tau<S: Scalar>(w: &S, d: &BetheData<S>) -> Result<S> {
    let c = d.c();
    let ws = std::slice::from_ref(w);
    Ok(d.r.r1(w)? * set_product(Kernel::F, &d.u, ws, c)?
        + set_product(Kernel::F, ws, &d.u, c)? * set_product(Kernel::F, &d.v, ws, c)?
        + d.r.r3(w)? * set_product(Kernel::F, ws, &d.v, c)?)
}

/// Which root a derivative of `τ` is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Root {
    U(usize),
    V(usize),
}

/// `∂f(x,y)/∂x = -g(x,y)^2 / c`.
fn df_dx<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let gv = g(x, y, c)?;
    Ok(-(gv.clone() * gv).try_div(c)?)
}

/// `∂f(x,y)/∂y = g(x,y)^2 / c`.
fn df_dy<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    Ok(-df_dx(x, y, c)?)
}

/// Analytic `∂τ(w|ū,v̄)/∂(root)`, with `r1(w)`, `r3(w)` held fixed.
pub fn dtau<S: Scalar>(w: &S, d: &BetheData<S>, which: Root) -> Result<S> {
    let c = d.c();
    let ws = std::slice::from_ref(w);
    match which {
        Root::U(j) => {
            let rest = without(&d.u, j);
            let t1 = d.r.r1(w)? * set_product(Kernel::F, &rest, ws, c)? * df_dx(&d.u[j], w, c)?;
            let t2 = set_product(Kernel::F, &d.v, ws, c)?
                * set_product(Kernel::F, ws, &rest, c)?
                * df_dy(w, &d.u[j], c)?;
            Ok(t1 + t2)
        }
        Root::V(j) => {
            let rest = without(&d.v, j);
            let t1 = set_product(Kernel::F, ws, &d.u, c)?
                * set_product(Kernel::F, &rest, ws, c)?
                * df_dx(&d.v[j], w, c)?;
            let t2 = d.r.r3(w)? * set_product(Kernel::F, ws, &rest, c)? * df_dy(w, &d.v[j], c)?;
            Ok(t1 + t2)
        }
    }
}

/// `∂τ/∂u_j · f^{-1}(v̄,w)` or `∂τ/∂v_j · f^{-1}(w,ū)`, regular where the
/// weight vanishes. The r-value at `w` is not looked up when its weight is zero.
pub fn dtau_weighted<S: Scalar>(w: &S, d: &BetheData<S>, which: Root) -> Result<S> {
    let c = d.c();
    let ws = std::slice::from_ref(w);
    match which {
        Root::U(j) => {
            let rest = without(&d.u, j);
            let weight = reciprocal_f_product(&d.v, ws, c)?;
            let t1 = if weight.is_zero() {
                S::zero()
            } else {
                d.r.r1(w)? * weight * set_product(Kernel::F, &rest, ws, c)? * df_dx(&d.u[j], w, c)?
            };
            let t2 = set_product(Kernel::F, ws, &rest, c)? * df_dy(w, &d.u[j], c)?;
            Ok(t1 + t2)
        }
        Root::V(j) => {
            let rest = without(&d.v, j);
            let weight = reciprocal_f_product(ws, &d.u, c)?;
            let t1 = set_product(Kernel::F, &rest, ws, c)? * df_dx(&d.v[j], w, c)?;
            let t2 = if weight.is_zero() {
                S::zero()
            } else {
                d.r.r3(w)? * weight * set_product(Kernel::F, ws, &rest, c)? * df_dy(w, &d.v[j], c)?
            };
            Ok(t1 + t2)
        }
    }
}

/// `d.u` and `d.v` with one root replaced, everything else unchanged.
pub fn with_root<S: Scalar>(d: &BetheData<S>, which: Root, value: S) -> Result<BetheData<S>> {
    let mut out = d.clone();
    match which {
        Root::U(j) => {
            let mut u = d.u.to_vec();
            u[j] = value;
            out.u = ParamSet::new(d.u.label(), u)?;
        }
        Root::V(j) => {
            let mut v = d.v.to_vec();
            v[j] = value;
            out.v = ParamSet::new(d.v.label(), v)?;
        }
    }
    out.on_shell = false;
    Ok(out)
}
