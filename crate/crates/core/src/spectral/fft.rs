//! Iterative radix-2 complex FFT with a precomputed twiddle table.
//!
//! Sizes are powers of two; callers round their alias-safe grid size up.
//! `forward` maps samples to unnormalized coefficient sums
//! `X_k = Σ_j x_j e^{-2πi jk/G}`; `inverse` is its unnormalized adjoint.

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::SpectralError;
use crate::math;

#[derive(Clone, Debug)]
pub struct Fft {
    size: usize,
    // e^{-2πi j/size} for j in 0..size/2
    twiddles: Vec<Complex64>,
}

impl Fft {
    pub fn new(size: usize) -> Result<Self, SpectralError> {
        if size == 0 || size & (size - 1) != 0 {
            return Err(SpectralError::GridNotPowerOfTwo { grid: size });
        }
        let mut twiddles = Vec::with_capacity(size / 2);
        for j in 0..size / 2 {
            let (s, c) = math::sin_cos(-2.0 * PI * j as f64 / size as f64);
            twiddles.push(Complex64::new(c, s));
        }
        Ok(Self { size, twiddles })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn forward(&self, buf: &mut [Complex64]) {
        self.transform(buf, false);
    }

    /// Unnormalized inverse: `x_j = Σ_k X_k e^{+2πi jk/G}`.
    pub fn inverse(&self, buf: &mut [Complex64]) {
        self.transform(buf, true);
    }

    fn transform(&self, buf: &mut [Complex64], invert: bool) {
        let n = self.size;
        assert_eq!(buf.len(), n, "buffer length must match plan size");
        if n == 1 {
            return;
        }
        // bit-reversal permutation
        let bits = n.trailing_zeros();
        for i in 0..n {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if j > i {
                buf.swap(i, j);
            }
        }
        let mut len = 2usize;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if invert {
                        w = w.conj();
                    }
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            len <<= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_dft(xs: &[Complex64], invert: bool) -> Vec<Complex64> {
        let n = xs.len();
        let sign = if invert { 1.0 } else { -1.0 };
        (0..n)
            .map(|k| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (j, &x) in xs.iter().enumerate() {
                    let ang = sign * 2.0 * PI * (j * k % n) as f64 / n as f64;
                    acc += x * Complex64::new(ang.cos(), ang.sin());
                }
                acc
            })
            .collect()
    }

    #[test]
    fn matches_naive_dft() {
        for &n in &[1usize, 2, 8, 64] {
            let plan = Fft::new(n).unwrap();
            let xs: Vec<Complex64> = (0..n)
                .map(|j| Complex64::new((j as f64 * 0.7).sin(), (j as f64 * 1.3).cos()))
                .collect();
            for invert in [false, true] {
                let mut buf = xs.clone();
                if invert {
                    plan.inverse(&mut buf);
                } else {
                    plan.forward(&mut buf);
                }
                let want = naive_dft(&xs, invert);
                for (got, want) in buf.iter().zip(&want) {
                    assert!((got - want).norm() < 1e-10 * (n as f64));
                }
            }
        }
    }

    #[test]
    fn forward_then_inverse_is_identity_times_n() {
        let n = 32;
        let plan = Fft::new(n).unwrap();
        let xs: Vec<Complex64> = (0..n)
            .map(|j| Complex64::new(j as f64, -(j as f64) * 0.5))
            .collect();
        let mut buf = xs.clone();
        plan.forward(&mut buf);
        plan.inverse(&mut buf);
        for (got, want) in buf.iter().zip(&xs) {
            assert!((got / n as f64 - want).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_power_of_two() {
        assert_eq!(
            Fft::new(48).unwrap_err(),
            SpectralError::GridNotPowerOfTwo { grid: 48 }
        );
    }
}
