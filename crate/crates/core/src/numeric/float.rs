use nalgebra::DMatrix;
use num_complex::Complex64;

use super::scalar::{split_complex, Backend, Scalar, FLOAT_ABS_FLOOR, FLOAT_REL_TOL};
use crate::error::{Error, Result};

/// Decimal or `p/q`, so exact-backend inputs also run in floating point.
fn parse_f64(text: &str) -> Result<f64> {
    let t = text.strip_prefix('+').unwrap_or(text);
    let value = match t.split_once('/') {
        Some((n, d)) => n.parse::<f64>().ok().zip(d.parse::<f64>().ok()).map(|(n, d)| n / d),
        None => t.parse::<f64>().ok(),
    };
    value.filter(|v| v.is_finite()).ok_or_else(|| Error::Parse(format!("malformed float `{text}`")))
}

/// `re+imi` with shortest round-trip digits; the imaginary part is omitted
/// when it is exactly zero.
pub fn format_c64(z: &Complex64) -> String {
    if z.im == 0.0 {
        return format!("{}", z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        Complex64::new(re.0 as f64 / re.1 as f64, im.0 as f64 / im.1 as f64)
    }

    fn is_zero(&self) -> bool {
        self.norm() < FLOAT_ABS_FLOOR
    }

    fn checked_inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(self.inv())
        }
    }

    fn same_point(&self, other: &Self) -> bool {
        let scale = self.norm().max(other.norm()).max(1.0);
        (self - other).norm() <= FLOAT_REL_TOL * scale
    }

    fn residual(&self, reference: &Self) -> f64 {
        let scale = self.norm().max(reference.norm());
        if scale < FLOAT_ABS_FLOOR {
            return 0.0;
        }
        (self - reference).norm() / scale
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn parse_text(text: &str) -> Result<Self> {
        let (re, im) = split_complex(text)?;
        let im = match im {
            Some(im) => parse_f64(&im)?,
            None => 0.0,
        };
        Ok(Complex64::new(parse_f64(&re)?, im))
    }

    fn determinant(rows: Vec<Vec<Self>>) -> Self {
        let n = rows.len();
        if n == 0 {
            return Complex64::new(1.0, 0.0);
        }
        let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
        m.lu().determinant()
    }
}

/// Solves `a x = b` by LU with partial pivoting; `None` if `a` is singular.
pub fn solve_linear(a: &[Vec<Complex64>], b: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = b.len();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j]);
    let rhs = nalgebra::DVector::from_column_slice(b);
    let x = m.lu().solve(&rhs)?;
    x.iter().all(|v| v.re.is_finite() && v.im.is_finite()).then(|| x.iter().copied().collect())
}
