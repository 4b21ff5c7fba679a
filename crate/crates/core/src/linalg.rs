//! Small exact linear algebra over `Ratio<i64>`.

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<Rational64>>;

pub fn to_rational(m: &[Vec<i64>]) -> Matrix {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect()
}

/// Gauss-Jordan inverse. Returns `None` for singular or non-square input.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut a: Matrix = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational64::one() } else { Rational64::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    Some(inv)
}

/// Row vector times matrix: `v * m`.
pub fn row_times(v: &[Rational64], m: &Matrix) -> Vec<Rational64> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Rational64::zero(), |acc, (&x, row)| acc + x * row[j])
        })
        .collect()
}

pub fn int_row_times(v: &[i64], m: &Matrix) -> Vec<Rational64> {
    let v: Vec<Rational64> = v.iter().map(|&x| Rational64::from_integer(x)).collect();
    row_times(&v, m)
}
