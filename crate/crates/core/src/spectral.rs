//! Laplacian spectra, the graph Fourier transform, and band-limited bases.
//!
//! Spectral indices are 1-based in the public API (`Band::new(29, 35)` spans
//! eigenvector columns 29..=35) to match the usual convention for passband
//! endpoints; vertex ids are 0-based everywhere.

use ndarray::{s, Array1, Array2, ArrayView1};
use thiserror::Error;

use crate::eigen::jacobi_eigen;
use crate::scalar::Scalar;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("band [{f_lo}, {f_hi}] out of range for n = {n}")]
    BandOutOfRange { f_lo: usize, f_hi: usize, n: usize },
    #[error("degenerate draw: band-limited sample collapsed to zero")]
    DegenerateDraw,
}

/// Eigendecomposition of a symmetric matrix, eigenvalues ascending.
///
/// Column `k` of [`eigenvectors`](Self::eigenvectors) pairs with
/// `eigenvalues()[k]`. Columns follow a deterministic sign convention: the
/// first component of magnitude above `1e-12` is positive.
#[derive(Debug, Clone)]
pub struct Spectrum<T: Scalar> {
    eigenvalues: Array1<T>,
    eigenvectors: Array2<T>,
}

impl<T: Scalar> Spectrum<T> {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &Array1<T> {
        &self.eigenvalues
    }

    /// Orthonormal eigenvector matrix `U`, one eigenvector per column.
    pub fn eigenvectors(&self) -> &Array2<T> {
        &self.eigenvectors
    }
}

/// Eigendecompose a symmetric matrix with the cyclic Jacobi solver.
pub fn eigendecompose<T: Scalar>(l: &Array2<T>) -> Result<Spectrum<T>, SpectralError> {
    let (vals, vecs) = jacobi_eigen(l)?;
    let n = vals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).expect("finite eigenvalues"));

    let mut eigenvalues = Array1::zeros(n);
    let mut eigenvectors = Array2::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        eigenvalues[dst] = vals[src];
        let mut flip = T::one();
        for i in 0..n {
            let v = vecs[[i, src]];
            if v.abs() > T::cast(1e-12) {
                if v < T::zero() {
                    flip = -T::one();
                }
                break;
            }
        }
        for i in 0..n {
            eigenvectors[[i, dst]] = flip * vecs[[i, src]];
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Graph Fourier transform: coefficients `U^T x`.
pub fn gft<T: Scalar>(spec: &Spectrum<T>, x: &Array1<T>) -> Result<Array1<T>, SpectralError> {
    let n = spec.n();
    if x.len() != n {
        return Err(SpectralError::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    Ok(spec.eigenvectors.t().dot(x))
}

/// Inverse graph Fourier transform: `U x_hat`.
pub fn igft<T: Scalar>(
    spec: &Spectrum<T>,
    coeffs: &Array1<T>,
) -> Result<Array1<T>, SpectralError> {
    let n = spec.n();
    if coeffs.len() != n {
        return Err(SpectralError::DimensionMismatch {
            expected: n,
            got: coeffs.len(),
        });
    }
    Ok(spec.eigenvectors.dot(coeffs))
}

/// Spectral passband `[f_lo, f_hi]`, endpoints 1-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    f_lo: usize,
    f_hi: usize,
}

impl Band {
    pub fn new(f_lo: usize, f_hi: usize) -> Result<Self, SpectralError> {
        if f_lo < 1 || f_lo > f_hi {
            return Err(SpectralError::BandOutOfRange {
                f_lo,
                f_hi,
                n: usize::MAX,
            });
        }
        Ok(Band { f_lo, f_hi })
    }

    pub fn f_lo(&self) -> usize {
        self.f_lo
    }

    pub fn f_hi(&self) -> usize {
        self.f_hi
    }

    pub fn bandwidth(&self) -> usize {
        self.f_hi - self.f_lo + 1
    }

    /// Does the 0-based spectral index `k` fall inside the band?
    pub fn contains(&self, k: usize) -> bool {
        (self.f_lo - 1..self.f_hi).contains(&k)
    }
}

/// The `n x B` submatrix of eigenvector columns spanning a passband.
#[derive(Debug, Clone)]
pub struct BandBasis<T: Scalar> {
    matrix: Array2<T>,
    band: Band,
}

impl<T: Scalar> BandBasis<T> {
    /// Wrap a matrix without checking column orthonormality.
    pub fn from_matrix_unchecked(matrix: Array2<T>, band: Band) -> Self {
        BandBasis { matrix, band }
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn bandwidth(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn matrix(&self) -> &Array2<T> {
        &self.matrix
    }

    /// Row `j`: the band profile seen by vertex `j`.
    pub fn row(&self, j: usize) -> ArrayView1<'_, T> {
        self.matrix.row(j)
    }

    /// Synthesize the vertex-domain signal `U_B alpha`.
    pub fn synthesize(&self, alpha: &Array1<T>) -> Array1<T> {
        self.matrix.dot(alpha)
    }

    /// Band coordinates `U_B^T x` of a vertex-domain signal.
    pub fn analyze(&self, x: &Array1<T>) -> Array1<T> {
        self.matrix.t().dot(x)
    }
}

/// Extract the band-limited basis `U_B` for a passband.
pub fn band_basis<T: Scalar>(
    spec: &Spectrum<T>,
    band: Band,
) -> Result<BandBasis<T>, SpectralError> {
    let n = spec.n();
    if band.f_hi > n {
        return Err(SpectralError::BandOutOfRange {
            f_lo: band.f_lo,
            f_hi: band.f_hi,
            n,
        });
    }
    let matrix = spec
        .eigenvectors
        .slice(s![.., band.f_lo - 1..band.f_hi])
        .to_owned();
    Ok(BandBasis { matrix, band })
}
