use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{singular, Error, Result};

/// Relative tolerance used for every floating-point comparison.
pub const FLOAT_REL_TOL: f64 = 1e-9;
/// Absolute floor below which a floating-point magnitude counts as zero.
pub const FLOAT_ABS_FLOOR: f64 = 1e-12;

/// Which arithmetic a [`Scalar`] implementation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Rational => "rational",
            Backend::Float => "float",
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" | "exact" => Ok(Backend::Rational),
            "float" => Ok(Backend::Float),
            other => Err(Error::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

/// A complex field element.
///
/// Every algorithm in this crate is generic over this trait, so one code path
/// serves both the exact backend ([`QComplex`](super::QComplex)) and the
/// floating backend (`Complex64`). Mixing the two inside one computation is a
/// type error.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self;

    /// Exactly zero (rational) or below [`FLOAT_ABS_FLOOR`] (float).
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `None` when the value counts as zero.
    fn checked_inv(&self) -> Option<Self>;

    /// Equality of evaluation points: exact, or within tolerance for floats.
    fn same_point(&self, other: &Self) -> bool;

    /// Distance to a reference value: `|a - b|` for the exact backend (so
    /// `0.0` iff equal), relative distance with an absolute floor for floats.
    fn residual(&self, reference: &Self) -> f64;

    fn modulus(&self) -> f64;
    fn to_c64(&self) -> Complex64;
    fn parse_text(text: &str) -> Result<Self>;

    /// Determinant of a square row-major matrix.
    fn determinant(rows: Vec<Vec<Self>>) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn try_div(self, rhs: &Self) -> Result<Self> {
        match rhs.checked_inv() {
            Some(inv) => Ok(self * inv),
            None => Err(singular(format!("division by zero ({self} / {rhs})"))),
        }
    }

    fn powi(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.checked_inv()
                .ok_or_else(|| singular(format!("negative power of zero ({self})")))?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * &base;
        }
        Ok(acc)
    }

    /// `(-1)^n` as a scalar.
    fn sign(n: usize) -> Self {
        if n % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

/// Splits `"a+bi"`-style text into real and imaginary substrings.
///
/// Returns `(real, Some(imag))` when the text ends in `i`; an empty imaginary
/// coefficient (as in `"1+i"`) is reported as `"+1"`/`"-1"`.
pub(crate) fn split_complex(text: &str) -> Result<(String, Option<String>)> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok((t, None));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].to_string(), body[k..].to_string()),
        None => ("0".to_string(), body.to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        _ => im,
    };
    Ok((re, Some(im)))
}
