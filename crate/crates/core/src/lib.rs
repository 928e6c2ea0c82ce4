//! Spectral Monte Carlo toolkit for the periodic generalized KdV equation.
//!
//! The crate samples the mean-zero Wiener measure on the circle as random
//! Fourier series, reweights draws into truncated Gibbs ensembles, evolves
//! the truncated flow with an integrating-factor RK4 scheme, and evaluates
//! closed-form Wiener-chaos moments of the nonlinearity that serve as exact
//! oracles for the Monte Carlo layers.
//!
//! Everything in here is pure computation over heap buffers; IO, file
//! formats, and the CLI live in the companion `gkdv-lab` crate. The crate is
//! `no_std`-compatible (with `alloc`) when built with the `libm` feature
//! instead of `std`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("gkdv-core needs either the `std` or the `libm` feature for float math");

pub mod dynamics;
pub mod gaussian;
pub mod gibbs;
pub mod hermite;
pub(crate) mod math;
pub mod moments;
pub mod spectral;
pub mod stats;

pub use num_complex::Complex64;
