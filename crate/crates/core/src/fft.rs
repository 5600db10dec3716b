//! Multi-dimensional FFT on flat row-major buffers, with cached plans.

use std::sync::{Arc, Mutex, OnceLock};

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::grid::Grid;

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    let mut p = PLANNER
        .get_or_init(|| Mutex::new(FftPlanner::new()))
        .lock()
        .expect("fft planner poisoned");
    if inverse {
        p.plan_fft_inverse(len)
    } else {
        p.plan_fft_forward(len)
    }
}

fn transform_axis(grid: &Grid, data: &mut [Complex64], axis: usize, inverse: bool) {
    let m = grid.shape()[axis];
    let stride = grid.strides()[axis];
    let fft = plan(m, inverse);
    let mut lane = vec![Complex64::default(); m];
    let total = grid.len();
    let block = m * stride;
    let mut base = 0;
    while base < total {
        for off in 0..stride {
            for (j, slot) in lane.iter_mut().enumerate() {
                *slot = data[base + off + j * stride];
            }
            fft.process(&mut lane);
            for (j, v) in lane.iter().enumerate() {
                data[base + off + j * stride] = *v;
            }
        }
        base += block;
    }
}

/// Real samples -> continuum-normalized Fourier coefficients
/// f̂(k) = (1/|grid|) Σ_j f(x_j) e^{-2πi k·x_j}.
pub fn forward(grid: &Grid, values: &[f64]) -> Vec<Complex64> {
    let mut data: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    forward_complex(grid, &mut data);
    data
}

/// In-place forward transform of a complex buffer with 1/|grid| normalization.
pub fn forward_complex(grid: &Grid, data: &mut [Complex64]) {
    for a in 0..grid.d() {
        transform_axis(grid, data, a, false);
    }
    let scale = 1.0 / grid.len() as f64;
    for v in data.iter_mut() {
        *v *= scale;
    }
}

/// Fourier coefficients -> complex samples (no further normalization).
pub fn inverse_complex(grid: &Grid, coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut data = coeffs.to_vec();
    for a in 0..grid.d() {
        transform_axis(grid, &mut data, a, true);
    }
    data
}

/// Fourier coefficients of a real field -> real samples.
pub fn inverse(grid: &Grid, coeffs: &[Complex64]) -> Vec<f64> {
    inverse_complex(grid, coeffs).iter().map(|v| v.re).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn round_trip_3d() {
        let grid = Grid::cubic(3, 8).unwrap();
        let n = grid.len();
        let values: Vec<f64> = (0..n).map(|i| ((i * 37 + 11) % 101) as f64 / 101.0).collect();
        let coeffs = forward(&grid, &values);
        let back = inverse(&grid, &coeffs);
        for (a, b) in values.iter().zip(back.iter()) {
            assert_relative_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn single_cosine_mode() {
        let grid = Grid::cubic(2, 16).unwrap();
        let m = 16;
        let mut values = vec![0.0; grid.len()];
        for i in 0..m {
            for j in 0..m {
                values[i * m + j] = (2.0 * std::f64::consts::PI * i as f64 / m as f64).cos();
            }
        }
        let coeffs = forward(&grid, &values);
        // Modes (±1, 0) with amplitude 1/2.
        assert_relative_eq!(coeffs[m].re, 0.5, epsilon = 1e-12);
        assert_relative_eq!(coeffs[(m - 1) * m].re, 0.5, epsilon = 1e-12);
        assert!(coeffs[0].norm() < 1e-12);
    }
}
