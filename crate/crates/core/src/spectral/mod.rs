//! Real-valued mean-zero spectral fields on the circle.
//!
//! A field is stored as the Hermitian half of its Fourier coefficients:
//! amplitudes for modes `1..=max_mode` plus an optional real zero mode that
//! only appears on nonlinearity outputs. All integrals use the normalized
//! measure `dx/2π`, so `{e^{inx}}` is an orthonormal family and the mean of
//! a grid sample is the zero-mode coefficient.

mod fft;
mod field;

pub use fft::Fft;
pub use field::{GridFunction, PowerPlan, SpectralField};

use core::fmt;

/// Errors from grid/spectral conversions and dealiased products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectralError {
    /// Grid sizes must be powers of two for the radix-2 transform.
    GridNotPowerOfTwo { grid: usize },
    /// The grid cannot hold the requested band of modes without aliasing.
    GridTooSmall { grid: usize, needed: usize },
    /// The dealias-safe resolution for the requested output band exceeds the
    /// supported maximum transform size.
    ResolutionExceeded { needed: usize, cap: usize },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::GridNotPowerOfTwo { grid } => {
                write!(f, "grid size {grid} is not a power of two")
            }
            SpectralError::GridTooSmall { grid, needed } => {
                write!(f, "grid size {grid} is below the alias-safe size {needed}")
            }
            SpectralError::ResolutionExceeded { needed, cap } => {
                write!(
                    f,
                    "requested output band needs a grid of {needed} points, above the cap {cap}"
                )
            }
        }
    }
}

impl core::error::Error for SpectralError {}
