use super::scalar::Scalar;

/// Fraction-free (Bareiss) elimination with row pivoting.
///
/// Every division is exact, so intermediate entries stay polynomial in the
/// input entries. An empty matrix has determinant one.
pub fn bareiss_determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    if n == 0 {
        return S::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = S::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return S::zero();
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        let prev_inv = prev.checked_inv().expect("previous Bareiss pivot is nonzero");
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in (k + 1)..n {
                let v = row[j].clone() * &pivot_row[k] - lead.clone() * &pivot_row[j];
                row[j] = v * &prev_inv;
            }
            row[k] = S::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
