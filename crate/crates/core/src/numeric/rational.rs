use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::bareiss_determinant;
use super::scalar::{split_complex, Backend, Scalar};
use crate::error::{Error, Result};

/// Exact complex rational `(re + im·i) / den`.
///
/// Kept in lowest terms: `den > 0` and `gcd(re, im, den) = 1`. Equality is
/// therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QComplex {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

impl QComplex {
    fn normalized(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if re.is_zero() && im.is_zero() {
            return QComplex { re, im, den: BigInt::one() };
        }
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        let g = re.gcd(&im).gcd(&den);
        if !g.is_one() {
            re /= &g;
            im /= &g;
            den /= &g;
        }
        QComplex { re, im, den }
    }

    pub fn real(num: BigInt, den: BigInt) -> Self {
        Self::normalized(num, BigInt::zero(), den)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Reduced `(numerator, denominator)` of the real part.
    pub fn re_parts(&self) -> (BigInt, BigInt) {
        reduce(&self.re, &self.den)
    }

    /// Reduced `(numerator, denominator)` of the imaginary part.
    pub fn im_parts(&self) -> (BigInt, BigInt) {
        reduce(&self.im, &self.den)
    }

    fn conj(&self) -> Self {
        QComplex { re: self.re.clone(), im: -&self.im, den: self.den.clone() }
    }
}

fn reduce(num: &BigInt, den: &BigInt) -> (BigInt, BigInt) {
    if num.is_zero() {
        return (BigInt::zero(), BigInt::one());
    }
    let g = num.gcd(den);
    (num / &g, den / &g)
}

fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    match (num.to_f64(), den.to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge operands: shift both down to a comparable scale first.
            let shift = den.bits().max(num.bits()).saturating_sub(1000);
            let n = (num >> shift).to_f64().unwrap_or(0.0);
            let d = (den >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

fn parse_rational(text: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse(format!("malformed rational `{text}`"));
    let t = text.strip_prefix('+').unwrap_or(text);
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok((n, d));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let mut num = int_part.abs() * &scale + frac_part;
        if negative {
            num = -num;
        }
        return Ok((num, scale));
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok((n, BigInt::one()))
}

fn fmt_ratio(num: &BigInt, den: &BigInt) -> String {
    if den.is_one() {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (rn, rd) = self.re_parts();
        if self.im.is_zero() {
            return f.write_str(&fmt_ratio(&rn, &rd));
        }
        let (inum, id) = self.im_parts();
        let sign = if inum.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", fmt_ratio(&rn, &rd), sign, fmt_ratio(&inum.abs(), &id))
    }
}

impl fmt::Debug for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({self})")
    }
}

impl Add<&QComplex> for QComplex {
    type Output = QComplex;
    fn add(self, rhs: &QComplex) -> QComplex {
        if self.den == rhs.den {
            return QComplex::normalized(self.re + &rhs.re, self.im + &rhs.im, self.den);
        }
        let re = &self.re * &rhs.den + &rhs.re * &self.den;
        let im = if self.im.is_zero() && rhs.im.is_zero() {
            BigInt::zero()
        } else {
            &self.im * &rhs.den + &rhs.im * &self.den
        };
        QComplex::normalized(re, im, self.den * &rhs.den)
    }
}

impl Sub<&QComplex> for QComplex {
    type Output = QComplex;
    fn sub(self, rhs: &QComplex) -> QComplex {
        self + &(-rhs.clone())
    }
}

impl Mul<&QComplex> for QComplex {
    type Output = QComplex;
    fn mul(self, rhs: &QComplex) -> QComplex {
        if self.is_zero() || rhs.is_zero() {
            return QComplex::zero();
        }
        let den = self.den * &rhs.den;
        if self.im.is_zero() && rhs.im.is_zero() {
            return QComplex::normalized(self.re * &rhs.re, BigInt::zero(), den);
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        QComplex::normalized(re, im, den)
    }
}

impl Add for QComplex {
    type Output = QComplex;
    fn add(self, rhs: QComplex) -> QComplex {
        self + &rhs
    }
}

impl Sub for QComplex {
    type Output = QComplex;
    fn sub(self, rhs: QComplex) -> QComplex {
        self - &rhs
    }
}

impl Mul for QComplex {
    type Output = QComplex;
    fn mul(self, rhs: QComplex) -> QComplex {
        self * &rhs
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex { re: -self.re, im: -self.im, den: self.den }
    }
}

impl Scalar for QComplex {
    const BACKEND: Backend = Backend::Rational;

    fn zero() -> Self {
        QComplex { re: BigInt::zero(), im: BigInt::zero(), den: BigInt::one() }
    }

    fn one() -> Self {
        QComplex { re: BigInt::one(), im: BigInt::zero(), den: BigInt::one() }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        QComplex::real(BigInt::from(num), BigInt::from(den))
    }

    fn from_complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        let den = BigInt::from(re.1) * BigInt::from(im.1);
        QComplex::normalized(
            BigInt::from(re.0) * BigInt::from(im.1),
            BigInt::from(im.0) * BigInt::from(re.1),
            den,
        )
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(QComplex::normalized(self.den.clone(), BigInt::zero(), self.re.clone()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        let c = self.conj();
        Some(QComplex::normalized(&c.re * &self.den, &c.im * &self.den, norm))
    }

    fn same_point(&self, other: &Self) -> bool {
        self == other
    }

    fn residual(&self, reference: &Self) -> f64 {
        (self.clone() - reference).modulus()
    }

    fn modulus(&self) -> f64 {
        let re = ratio_to_f64(&self.re, &self.den);
        let im = ratio_to_f64(&self.im, &self.den);
        re.hypot(im)
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re, &self.den), ratio_to_f64(&self.im, &self.den))
    }

    fn parse_text(text: &str) -> Result<Self> {
        let (re, im) = split_complex(text)?;
        let (rn, rd) = parse_rational(&re)?;
        let (inum, id) = match im {
            Some(im) => parse_rational(&im)?,
            None => (BigInt::zero(), BigInt::one()),
        };
        Ok(QComplex::normalized(rn * &id, inum * &rd, rd * id))
    }

    fn determinant(rows: Vec<Vec<Self>>) -> Self {
        bareiss_determinant(rows)
    }
}
