//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! A sweep visits every strict upper-triangle entry and applies a plane
//! rotation that annihilates it; sweeps repeat until the off-diagonal
//! Frobenius norm falls below `1e-12 * ||A||_F`. Robust and dependency-free
//! at the matrix sizes this crate targets (dense spectra of desk-scale
//! graphs).

use ndarray::{Array1, Array2};

use crate::scalar::Scalar;
use crate::spectral::SpectralError;

/// Relative off-diagonal Frobenius tolerance for convergence.
const SWEEP_TOL: f64 = 1e-12;
/// Maximum number of cyclic sweeps before giving up.
const MAX_SWEEPS: usize = 100;

/// Eigenvalues and eigenvectors of a symmetric matrix, unsorted.
///
/// Returns `(values, vectors)` with `vectors` column `k` paired with
/// `values[k]`, satisfying `A v = lambda v` to solver accuracy.
pub(crate) fn jacobi_eigen<T: Scalar>(
    a: &Array2<T>,
) -> Result<(Array1<T>, Array2<T>), SpectralError> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(SpectralError::DimensionMismatch {
            expected: n,
            got: a.ncols(),
        });
    }
    let mut m = a.clone();
    let mut v: Array2<T> = Array2::eye(n);
    if n <= 1 {
        return Ok((m.diag().to_owned(), v));
    }

    let total = frobenius(&m);
    let thresh = T::cast(SWEEP_TOL) * total;

    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_frobenius(&m) <= thresh {
            return Ok((m.diag().to_owned(), v));
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                if apq.abs() == T::zero() {
                    continue;
                }
                let (c, s) = rotation(m[[p, p]], m[[q, q]], apq);
                apply_two_sided(&mut m, p, q, c, s);
                apply_right(&mut v, p, q, c, s);
            }
        }
    }
    Err(SpectralError::ConvergenceFailure { sweeps: MAX_SWEEPS })
}

/// Classic symmetric Schur decomposition of the 2x2 pivot block.
fn rotation<T: Scalar>(app: T, aqq: T, apq: T) -> (T, T) {
    let two = T::cast(2.0);
    let theta = (aqq - app) / (two * apq);
    let t = if theta >= T::zero() {
        T::one() / (theta + (T::one() + theta * theta).sqrt())
    } else {
        -T::one() / (-theta + (T::one() + theta * theta).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    (c, t * c)
}

/// M <- J^T M J for the rotation J in the (p, q) plane.
fn apply_two_sided<T: Scalar>(m: &mut Array2<T>, p: usize, q: usize, c: T, s: T) {
    let n = m.nrows();
    for k in 0..n {
        let mkp = m[[k, p]];
        let mkq = m[[k, q]];
        m[[k, p]] = c * mkp - s * mkq;
        m[[k, q]] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let mpk = m[[p, k]];
        let mqk = m[[q, k]];
        m[[p, k]] = c * mpk - s * mqk;
        m[[q, k]] = s * mpk + c * mqk;
    }
}

/// V <- V J, accumulating the eigenvector basis.
fn apply_right<T: Scalar>(v: &mut Array2<T>, p: usize, q: usize, c: T, s: T) {
    let n = v.nrows();
    for k in 0..n {
        let vkp = v[[k, p]];
        let vkq = v[[k, q]];
        v[[k, p]] = c * vkp - s * vkq;
        v[[k, q]] = s * vkp + c * vkq;
    }
}

fn frobenius<T: Scalar>(m: &Array2<T>) -> T {
    m.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

fn off_diagonal_frobenius<T: Scalar>(m: &Array2<T>) -> T {
    let n = m.nrows();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + m[[i, j]] * m[[i, j]];
            }
        }
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn identity_is_a_fixed_point() {
        let a: Array2<f64> = Array2::eye(4);
        let (vals, vecs) = jacobi_eigen(&a).unwrap();
        for &v in vals.iter() {
            assert!((v - 1.0).abs() < 1e-14);
        }
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((vecs[[i, j]] - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn residual_and_orthonormality_on_dense_symmetric() {
        // Deterministic symmetric matrix with spread-out entries.
        let n = 12;
        let mut a: Array2<f64> = Array2::zeros((n, n));
        for i in 0..n {
            for j in i..n {
                let v = ((i * 31 + j * 17 + 5) % 23) as f64 / 7.0 - 1.5;
                a[[i, j]] = v;
                a[[j, i]] = v;
            }
        }
        let (vals, vecs) = jacobi_eigen(&a).unwrap();
        // A V = V diag(vals)
        for k in 0..n {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a[[i, j]] * vecs[[j, k]]).sum();
                assert!((av - vals[k] * vecs[[i, k]]).abs() < 1e-9);
            }
        }
        // V^T V = I
        for c1 in 0..n {
            for c2 in 0..n {
                let d: f64 = (0..n).map(|i| vecs[[i, c1]] * vecs[[i, c2]]).sum();
                let expect = if c1 == c2 { 1.0 } else { 0.0 };
                assert!((d - expect).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn known_2x2() {
        let a = array![[3.0, 4.0], [4.0, 9.0]];
        let (vals, _) = jacobi_eigen(&a).unwrap();
        let mut sorted: Vec<f64> = vals.to_vec();
        sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((sorted[0] - 1.0).abs() < 1e-12);
        assert!((sorted[1] - 11.0).abs() < 1e-12);
    }
}
