//! Dense matrix carriers: a symmetric `f64` matrix for the eigensolver and
//! exact integer helpers (matrix powers, fraction-free determinant and rank).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{AlgError, Result};

/// Real symmetric matrix, stored row-major and symmetric by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymmetricMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    /// Builds the matrix from `f(i, j)` evaluated on the upper triangle
    /// (including the diagonal) and mirrored, so the result is exactly
    /// symmetric regardless of `f`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                entries[i * dim + j] = v;
                entries[j * dim + i] = v;
            }
        }
        DenseSymmetricMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        DenseSymmetricMatrix {
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    /// Adds `c` to every diagonal entry, returning a new matrix.
    pub fn shift_diagonal(&self, c: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] += c;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub(crate) fn raw(&self) -> &[f64] {
        &self.entries
    }
}

/// Square integer matrix product: `a * b` for row-major `dim x dim` slices.
pub(crate) fn int_matmul(dim: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik == 0 {
                continue;
            }
            for j in 0..dim {
                out[i * dim + j] += aik * b[k * dim + j];
            }
        }
    }
    out
}

pub(crate) fn int_trace(dim: usize, a: &[i64]) -> i64 {
    (0..dim).map(|i| a[i * dim + i]).sum()
}

/// Exact determinant of an integer matrix via Bareiss fraction-free
/// elimination. All intermediate divisions are exact.
pub fn bareiss_determinant(dim: usize, entries: &[i64]) -> BigInt {
    if dim == 0 {
        return BigInt::from(1);
    }
    let mut m: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    let mut sign = 1i64;
    let mut prev = BigInt::from(1);
    for k in 0..dim - 1 {
        if m[k * dim + k].is_zero() {
            // pivot search below row k
            let Some(r) = (k + 1..dim).find(|&r| !m[r * dim + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..dim {
                m.swap(k * dim + j, r * dim + j);
            }
            sign = -sign;
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let num = &m[i * dim + j] * &m[k * dim + k] - &m[i * dim + k] * &m[k * dim + j];
                m[i * dim + j] = num / &prev;
            }
            m[i * dim + k] = BigInt::zero();
        }
        prev = m[k * dim + k].clone();
    }
    let det = m[(dim - 1) * dim + (dim - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact rank over the rationals of an integer matrix (`rows x cols`,
/// row-major), by fraction-free Gaussian elimination.
pub fn rational_rank(rows: usize, cols: usize, entries: &[i64]) -> usize {
    let mut m: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| !m[r * cols + col].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            m.swap(row * cols + j, pivot * cols + j);
        }
        for r in row + 1..rows {
            if m[r * cols + col].is_zero() {
                continue;
            }
            let a = m[row * cols + col].clone();
            let b = m[r * cols + col].clone();
            for j in col..cols {
                let v = &m[r * cols + j] * &a - &m[row * cols + j] * &b;
                m[r * cols + j] = v;
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Rounds a positive floating value to the nearest integer, failing when the
/// value is farther than `rel_tol * value` from that integer.
pub fn round_checked(value: f64, rel_tol: f64) -> Result<BigInt> {
    let rounded = value.round();
    let tol = rel_tol * rounded.abs().max(1.0);
    if (value - rounded).abs() > tol {
        return Err(AlgError::Numeric(format!(
            "value {value} not within {tol} of an integer"
        )));
    }
    // Desk-scale counts fit in i128 comfortably; fall back through the float
    // mantissa otherwise.
    if rounded.abs() < 9e18 {
        Ok(BigInt::from(rounded as i128))
    } else {
        Err(AlgError::Numeric(format!(
            "count {rounded} too large for exact rounding"
        )))
    }
}

pub(crate) fn big_abs_diff(a: &BigInt, b: &BigInt) -> BigInt {
    (a - b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_by_construction() {
        let m = DenseSymmetricMatrix::from_fn(3, |i, j| (i * 10 + j) as f64);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn bareiss_small_determinants() {
        // det [[1,2],[3,4]] = -2
        assert_eq!(bareiss_determinant(2, &[1, 2, 3, 4]), BigInt::from(-2));
        // Laplacian cofactor of K4: 16 spanning trees
        let minor = [3, -1, -1, -1, 3, -1, -1, -1, 3];
        assert_eq!(bareiss_determinant(3, &minor), BigInt::from(16));
        // singular
        assert_eq!(bareiss_determinant(2, &[1, 2, 2, 4]), BigInt::zero());
    }

    #[test]
    fn rank_of_rectangular() {
        // rank 2: third row = row0 + row1
        let m = [1, 0, 1, 0, 1, 1, 1, 1, 2];
        assert_eq!(rational_rank(3, 3, &m), 2);
        assert_eq!(rational_rank(2, 3, &[0, 0, 0, 0, 0, 0]), 0);
    }

    #[test]
    fn int_power_traces() {
        // S = adjacency of K3 => tr(S^3) = 2 * #closed triangle walks = 6
        let s = [0, 1, 1, 1, 0, 1, 1, 1, 0];
        let s2 = int_matmul(3, &s, &s);
        let s3 = int_matmul(3, &s2, &s);
        assert_eq!(int_trace(3, &s3), 6);
    }

    #[test]
    fn round_checked_rejects_drift() {
        assert_eq!(round_checked(15.9999999, 1e-6).unwrap(), BigInt::from(16));
        assert!(round_checked(15.9, 1e-6).is_err());
    }
}
