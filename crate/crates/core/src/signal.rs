//! Seeded signal generators.
//!
//! All randomness flows through `ChaCha8Rng` seeded from an explicit `u64`;
//! draws are made in `f64` and cast, so a fixed seed yields the same signal
//! at every scalar type.

use ndarray::Array1;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::scalar::Scalar;
use crate::spectral::{BandBasis, SpectralError};

/// Random unit-norm band-limited signal `x = U_B alpha / ||U_B alpha||`
/// with `alpha` standard normal.
///
/// Redraws internally (up to 8 times) if the synthesized vector is
/// numerically zero, then reports [`SpectralError::DegenerateDraw`].
pub fn random_bandlimited_signal<T: Scalar>(
    basis: &BandBasis<T>,
    seed: u64,
) -> Result<Array1<T>, SpectralError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let alpha: Array1<T> = (0..basis.bandwidth())
            .map(|_| T::cast(StandardNormal.sample(&mut rng)))
            .collect();
        let x = basis.synthesize(&alpha);
        let norm = x.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
        if norm >= T::cast(1e-12) {
            return Ok(x.mapv(|v| v / norm));
        }
    }
    Err(SpectralError::DegenerateDraw)
}

/// Random unit-norm signal in the full vertex domain (standard normal,
/// then normalized). Used for reconstruction starting points.
pub fn random_unit_signal<T: Scalar>(n: usize, seed: u64) -> Array1<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let x: Array1<T> = (0..n)
            .map(|_| T::cast(StandardNormal.sample(&mut rng)))
            .collect();
        let norm = x.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
        if norm >= T::cast(1e-12) {
            return x.mapv(|v| v / norm);
        }
    }
}
