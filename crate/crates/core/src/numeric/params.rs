use std::fmt;
use std::ops::Deref;

use super::scalar::Scalar;
use crate::error::{singular, Result};

/// An ordered set of pairwise-distinct parameters.
///
/// Order is significant only for the Vandermonde products; every subset
/// operation keeps the parent's relative order.
#[derive(Clone, PartialEq)]
pub struct ParamSet<S> {
    label: String,
    elems: Vec<S>,
}

impl<S: Scalar> ParamSet<S> {
    pub fn new(label: impl Into<String>, elems: Vec<S>) -> Result<Self> {
        let label = label.into();
        for (j, x) in elems.iter().enumerate() {
            if elems[..j].iter().any(|y| y.same_point(x)) {
                return Err(singular(format!("repeated element {x} in set `{label}`")));
            }
        }
        Ok(ParamSet { label, elems })
    }

    pub fn empty(label: impl Into<String>) -> Self {
        ParamSet { label: label.into(), elems: Vec::new() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn as_slice(&self) -> &[S] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<S> {
        self.elems
    }

    /// `x̄ + shift`, order preserved.
    pub fn shifted(&self, shift: &S) -> Self {
        ParamSet { label: self.label.clone(), elems: shift_all(&self.elems, shift) }
    }

    /// `-x̄`, order preserved.
    pub fn negated(&self) -> Self {
        ParamSet { label: self.label.clone(), elems: self.elems.iter().map(|x| -x.clone()).collect() }
    }

    /// Elements at strictly increasing `indices`.
    pub fn subset(&self, indices: &[usize]) -> Self {
        ParamSet { label: self.label.clone(), elems: pick(&self.elems, indices) }
    }

    /// The union `{self, other}`, checked for distinctness.
    pub fn union(&self, other: &[S], label: impl Into<String>) -> Result<Self> {
        let elems = self.elems.iter().chain(other).cloned().collect();
        ParamSet::new(label, elems)
    }

    /// Same elements in the order given by `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ParamSet { label: self.label.clone(), elems: perm.iter().map(|&i| self.elems[i].clone()).collect() }
    }
}

impl<S> Deref for ParamSet<S> {
    type Target = [S];
    fn deref(&self) -> &[S] {
        &self.elems
    }
}

impl<S: fmt::Display> fmt::Display for ParamSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = [", self.label)?;
        for (k, x) in self.elems.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl<S: fmt::Display> fmt::Debug for ParamSet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn shift_all<S: Scalar>(xs: &[S], shift: &S) -> Vec<S> {
    xs.iter().map(|x| x.clone() + shift).collect()
}

pub(crate) fn pick<S: Clone>(xs: &[S], indices: &[usize]) -> Vec<S> {
    indices.iter().map(|&i| xs[i].clone()).collect()
}

pub(crate) fn concat<S: Clone>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().chain(b).cloned().collect()
}
