//! Ordered splits of a parameter set into parts of fixed sizes.

use crate::error::{Error, Result};

/// A split of `0..len` into parts, each part strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Split {
    len: usize,
    parts: Vec<Vec<usize>>,
}

impl Split {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, k: usize) -> &[usize] {
        &self.parts[k]
    }

    /// Elements of `xs` in part `k`, in natural order.
    pub fn pick<T: Clone>(&self, xs: &[T], k: usize) -> Vec<T> {
        debug_assert_eq!(xs.len(), self.len);
        self.parts[k].iter().map(|&i| xs[i].clone()).collect()
    }

    /// `(part 0, part 1)` of a two-part split.
    pub fn pick2<T: Clone>(&self, xs: &[T]) -> (Vec<T>, Vec<T>) {
        (self.pick(xs, 0), self.pick(xs, 1))
    }
}

/// Every split of `xs` into parts of sizes `cards`, in lexicographic order of
/// the index subsets (first part varies slowest).
pub fn enumerate_splits<T>(xs: &[T], cards: &[usize]) -> Result<Vec<Split>> {
    split_indices(xs.len(), cards)
}

/// Index-only form of [`enumerate_splits`].
pub fn split_indices(len: usize, cards: &[usize]) -> Result<Vec<Split>> {
    let total: usize = cards.iter().sum();
    if total != len {
        return Err(Error::CardinalityMismatch(format!(
            "part sizes {cards:?} sum to {total}, set has {len} elements"
        )));
    }
    let mut out = Vec::new();
    let remaining: Vec<usize> = (0..len).collect();
    recurse(len, &remaining, cards, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Every two-part split of `0..len`, ordered by the size of the first part
/// and then lexicographically.
pub fn all_two_splits(len: usize) -> Vec<Split> {
    (0..=len)
        .flat_map(|k| split_indices(len, &[k, len - k]).expect("sizes add up"))
        .collect()
}

fn recurse(len: usize, remaining: &[usize], cards: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Split>) {
    let Some((&first, rest)) = cards.split_first() else {
        out.push(Split { len, parts: acc.clone() });
        return;
    };
    for chosen in combinations(remaining, first) {
        let left: Vec<usize> = remaining.iter().copied().filter(|i| !chosen.contains(i)).collect();
        acc.push(chosen);
        recurse(len, &left, rest, acc, out);
        acc.pop();
    }
}

/// `k`-element subsets of `pool` in lexicographic order.
fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = pool.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for q in (pos + 1)..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Parity sign of the permutation taking `(part I, part II)` to natural order.
pub fn split_sign(s: &Split) -> i8 {
    assert_eq!(s.parts.len(), 2, "split_sign needs a two-part split");
    let inversions: usize = s.parts[0]
        .iter()
        .map(|&i| s.parts[1].iter().filter(|&&j| j < i).count())
        .sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
