//! The rational kernels and their products over parameter sets.

use super::scalar::Scalar;
use crate::error::{singular, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kernel {
    /// `c / (x - y)`
    G,
    /// `(x - y + c) / (x - y)`
    F,
    /// `(x - y + c) / c`
    H,
    /// `c^2 / ((x - y)(x - y + c))`
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vandermonde {
    /// `Δ(x̄) = ∏_{j>k} g(x_j, x_k)`
    Plain,
    /// `Δ'(x̄) = ∏_{j<k} g(x_j, x_k)`
    Primed,
}

fn inv_or<S: Scalar>(v: &S, what: impl FnOnce() -> String) -> Result<S> {
    v.checked_inv().ok_or_else(|| singular(what()))
}

pub fn g<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let d = x.clone() - y;
    Ok(c.clone() * inv_or(&d, || format!("g({x}, {y}): x = y"))?)
}

pub fn f<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let d = x.clone() - y;
    let inv = inv_or(&d, || format!("f({x}, {y}): x = y"))?;
    Ok((d + c) * inv)
}

pub fn h<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let inv = inv_or(c, || "h: c = 0".to_string())?;
    Ok((x.clone() - y + c) * inv)
}

pub fn t<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let d = x.clone() - y;
    let den = d.clone() * (d + c);
    let inv = inv_or(&den, || format!("t({x}, {y}): x = y or x = y - c"))?;
    Ok(c.clone() * c * inv)
}

/// `1 / f(x, y) = (x - y) / (x - y + c)`, regular (and zero) at `x = y`.
pub fn recip_f<S: Scalar>(x: &S, y: &S, c: &S) -> Result<S> {
    let d = x.clone() - y;
    let inv = inv_or(&(d.clone() + c), || format!("1/f({x}, {y}): x = y - c"))?;
    Ok(d * inv)
}

pub fn eval_kernel<S: Scalar>(kind: Kernel, x: &S, y: &S, c: &S) -> Result<S> {
    match kind {
        Kernel::G => g(x, y, c),
        Kernel::F => f(x, y, c),
        Kernel::H => h(x, y, c),
        Kernel::T => t(x, y, c),
    }
}

/// Product of `kind(x, y)` over all pairs `x ∈ xs`, `y ∈ ys`.
///
/// When `xs` and `ys` are the same set the diagonal pairs are included; this
/// is harmless for `h` (`h(x, x) = 1`) and singular for the other kernels.
pub fn set_product<S: Scalar>(kind: Kernel, xs: &[S], ys: &[S], c: &S) -> Result<S> {
    let mut acc = S::one();
    for x in xs {
        for y in ys {
            acc = acc * eval_kernel(kind, x, y, c)?;
        }
    }
    Ok(acc)
}

/// `∏ (x - y) / (x - y + c)`, exactly zero as soon as one pair coincides.
pub fn reciprocal_f_product<S: Scalar>(xs: &[S], ys: &[S], c: &S) -> Result<S> {
    let mut acc = S::one();
    for x in xs {
        for y in ys {
            acc = acc * recip_f(x, y, c)?;
        }
    }
    Ok(acc)
}

pub fn vandermonde<S: Scalar>(variant: Vandermonde, xs: &[S], c: &S) -> Result<S> {
    let mut acc = S::one();
    for j in 0..xs.len() {
        for k in (j + 1)..xs.len() {
            acc = acc
                * match variant {
                    Vandermonde::Primed => g(&xs[j], &xs[k], c)?,
                    Vandermonde::Plain => g(&xs[k], &xs[j], c)?,
                };
        }
    }
    Ok(acc)
}

pub fn delta<S: Scalar>(xs: &[S], c: &S) -> Result<S> {
    vandermonde(Vandermonde::Plain, xs, c)
}

pub fn delta_prime<S: Scalar>(xs: &[S], c: &S) -> Result<S> {
    vandermonde(Vandermonde::Primed, xs, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::QComplex;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> QComplex {
        QComplex::from_ratio(n, d)
    }

    fn one() -> QComplex {
        q(1, 1)
    }

    #[test]
    fn direct_values() {
        let c = one();
        assert_eq!(g(&q(3, 1), &q(1, 1), &c).unwrap(), q(1, 2));
        assert_eq!(t(&q(1, 1), &q(5, 1), &c).unwrap(), q(1, 12));
        assert_eq!(t(&q(5, 1), &q(2, 1), &c).unwrap(), q(1, 12));
        assert_eq!(f(&q(2, 1), &q(3, 1), &c).unwrap(), q(0, 1));
        assert_eq!(f(&q(1, 1), &q(3, 1), &c).unwrap(), q(1, 2));
        assert_eq!(f(&q(3, 1), &q(2, 1), &c).unwrap(), q(2, 1));
    }

    #[test]
    fn products() {
        let c = one();
        let empty: [QComplex; 0] = [];
        assert_eq!(set_product(Kernel::F, &empty, &[q(1, 1)], &c).unwrap(), one());
        assert_eq!(set_product(Kernel::G, &[q(4, 1)], &[q(1, 1), q(2, 1)], &c).unwrap(), q(1, 6));
        assert_eq!(set_product(Kernel::F, &[q(3, 1)], &[q(1, 1), q(2, 1)], &c).unwrap(), q(3, 1));
        let xs = [q(1, 3), q(-2, 1)];
        assert!(set_product(Kernel::H, &xs, &xs, &c).is_ok());
        assert!(set_product(Kernel::G, &xs, &xs, &c).is_err());
    }

    #[test]
    fn reciprocal_values() {
        let c = one();
        assert_eq!(reciprocal_f_product(&[q(2, 1)], &[q(2, 1)], &c).unwrap(), q(0, 1));
        assert_eq!(reciprocal_f_product(&[q(3, 1)], &[q(1, 1)], &c).unwrap(), q(2, 3));
        assert_eq!(reciprocal_f_product(&[q(0, 1), q(5, 1)], &[q(5, 1)], &c).unwrap(), q(0, 1));
        assert!(reciprocal_f_product(&[q(0, 1)], &[q(1, 1)], &c).is_err());
    }

    #[test]
    fn vandermonde_values() {
        let c = one();
        let xs = [q(5, 1), q(3, 1)];
        assert_eq!(delta_prime(&xs, &c).unwrap(), q(1, 2));
        assert_eq!(delta(&xs, &c).unwrap(), q(-1, 2));
        assert_eq!(delta(&[q(7, 1)], &c).unwrap(), one());
        assert!(delta(&[q(1, 1), q(1, 1)], &c).is_err());
    }

    #[test]
    fn singular_kernels() {
        let c = one();
        assert!(g(&q(1, 1), &q(1, 1), &c).is_err());
        assert!(t(&q(0, 1), &q(1, 1), &c).is_err());
        assert_eq!(h(&q(0, 1), &q(1, 1), &c).unwrap(), q(0, 1));
    }

    fn arb_q() -> impl Strategy<Value = QComplex> {
        (-50i64..=50, 1i64..=50).prop_map(|(n, d)| QComplex::from_ratio(n, d))
    }

    fn arb_c() -> impl Strategy<Value = QComplex> {
        (1i64..=10, 1i64..=5).prop_map(|(n, d)| QComplex::from_ratio(n, d))
    }

    proptest! {
        #[test]
        fn shift_properties(x in arb_q(), y in arb_q(), c in arb_c()) {
            let d = x.clone() - &y;
            prop_assume!(!d.is_zero() && !(d.clone() - &c).is_zero() && !(d.clone() + &c).is_zero());
            let xm = x.clone() - &c;
            prop_assert_eq!(h(&xm, &y, &c).unwrap(), g(&x, &y, &c).unwrap().checked_inv().unwrap());
            prop_assert_eq!(f(&xm, &y, &c).unwrap(), f(&y, &x, &c).unwrap().checked_inv().unwrap());
            prop_assert_eq!(t(&xm, &y, &c).unwrap(), t(&y, &x, &c).unwrap());
            prop_assert_eq!(g(&x, &y, &c).unwrap(), -g(&y, &x, &c).unwrap());
            let gv = g(&x, &y, &c).unwrap();
            let fv = f(&x, &y, &c).unwrap();
            prop_assert_eq!(t(&x, &y, &c).unwrap(), gv.clone() * &gv * fv.checked_inv().unwrap());
            prop_assert_eq!(h(&x, &y, &c).unwrap(), fv * gv.checked_inv().unwrap());
        }

        #[test]
        fn set_product_factorizes(
            xs in prop::collection::vec(arb_q(), 0..4),
            xs2 in prop::collection::vec(arb_q(), 0..4),
            ys in prop::collection::vec(arb_q(), 0..4),
        ) {
            let c = QComplex::one();
            let all: Vec<_> = xs.iter().chain(&xs2).cloned().collect();
            for kind in [Kernel::G, Kernel::F, Kernel::H, Kernel::T] {
                let (Ok(a), Ok(b)) = (set_product(kind, &xs, &ys, &c), set_product(kind, &xs2, &ys, &c)) else {
                    continue;
                };
                prop_assert_eq!(set_product(kind, &all, &ys, &c).unwrap(), a * b);
            }
        }

        #[test]
        fn reciprocal_inverts_f(xs in prop::collection::vec(arb_q(), 0..4), ys in prop::collection::vec(arb_q(), 0..4)) {
            let c = QComplex::one();
            if let Ok(fp) = set_product(Kernel::F, &xs, &ys, &c) {
                if let Ok(r) = reciprocal_f_product(&xs, &ys, &c) {
                    prop_assert_eq!(fp * r, QComplex::one());
                }
            }
        }

        #[test]
        fn vandermonde_sign(xs in prop::collection::btree_set(-50i64..=50, 0..=6)) {
            let c = QComplex::one();
            let xs: Vec<QComplex> = xs.into_iter().map(QComplex::from_i64).collect();
            let n = xs.len();
            let sign = QComplex::sign(n * (n.saturating_sub(1)) / 2);
            prop_assert_eq!(delta(&xs, &c).unwrap(), sign * delta_prime(&xs, &c).unwrap());
        }
    }
}
