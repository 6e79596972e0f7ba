//! Seeded draws of generic rational configurations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numeric::Scalar;

/// Numerators are drawn from `-MAX_NUM..=MAX_NUM`, denominators from `1..=MAX_DEN`.
pub const MAX_NUM: i64 = 50;
pub const MAX_DEN: i64 = 50;
/// Differences equal to `k·c` with `|k| <= FORBIDDEN_SHIFTS` are rejected.
pub const FORBIDDEN_SHIFTS: i64 = 3;
const MAX_ATTEMPTS: usize = 10_000;

/// Source of generic small-denominator rational points.
#[derive(Debug, Clone)]
pub struct Draw {
    rng: ChaCha8Rng,
    c: (i64, i64),
}

impl Draw {
    /// `c = c_num / c_den` is the coupling the genericity check refers to.
    pub fn new(seed: u64, c_num: i64, c_den: i64) -> Self {
        Draw { rng: ChaCha8Rng::seed_from_u64(seed), c: (c_num, c_den) }
    }

    pub fn c<S: Scalar>(&self) -> S {
        S::from_ratio(self.c.0, self.c.1)
    }

    fn ratio(&mut self) -> (i64, i64) {
        (self.rng.random_range(-MAX_NUM..=MAX_NUM), self.rng.random_range(1..=MAX_DEN))
    }

    /// `count` real rationals whose pairwise differences avoid `{0, ±c, ±2c, ±3c}`.
    pub fn generic_points<S: Scalar>(&mut self, count: usize) -> Result<Vec<S>> {
        self.generic_points_avoiding(count, &[])
    }

    /// As [`generic_points`](Self::generic_points), also keeping the same
    /// distance from the fixed points `avoid`.
    pub fn generic_points_avoiding<S: Scalar>(&mut self, count: usize, avoid: &[(i64, i64)]) -> Result<Vec<S>> {
        let raw = self.generic_ratios(count, avoid)?;
        Ok(raw.into_iter().map(|(n, d)| S::from_ratio(n, d)).collect())
    }

    /// The raw `(numerator, denominator)` pairs behind a generic draw.
    pub fn generic_ratios(&mut self, count: usize, avoid: &[(i64, i64)]) -> Result<Vec<(i64, i64)>> {
        for _ in 0..MAX_ATTEMPTS {
            let mut pts: Vec<(i64, i64)> = Vec::with_capacity(count);
            let mut ok = true;
            for _ in 0..count {
                let p = self.ratio();
                if pts.iter().chain(avoid).any(|q| self.degenerate(p, *q)) {
                    ok = false;
                    break;
                }
                pts.push(p);
            }
            if ok {
                return Ok(pts);
            }
        }
        Err(Error::DrawExhausted(MAX_ATTEMPTS))
    }

    /// Arbitrary rationals with no genericity requirement (coefficients, r-values).
    pub fn values<S: Scalar>(&mut self, count: usize) -> Vec<S> {
        (0..count)
            .map(|_| {
                let (n, d) = self.ratio();
                S::from_ratio(n, d)
            })
            .collect()
    }

    /// A uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    /// A uniformly random permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.rng.random_range(0..=i);
            p.swap(i, j);
        }
        p
    }

    fn degenerate(&self, p: (i64, i64), q: (i64, i64)) -> bool {
        // p - q = k c  <=>  (p.0 q.1 - q.0 p.1) c.1 = k c.0 p.1 q.1
        let lhs = (p.0 as i128 * q.1 as i128 - q.0 as i128 * p.1 as i128) * self.c.1 as i128;
        let unit = self.c.0 as i128 * p.1 as i128 * q.1 as i128;
        (-FORBIDDEN_SHIFTS..=FORBIDDEN_SHIFTS).any(|k| lhs == k as i128 * unit)
    }
}
