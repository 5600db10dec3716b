//! Uniform periodic grids on T^d and their Fourier index bookkeeping.
//!
//! Grid points sit at x_j = j / M per axis; frequencies follow the usual FFT
//! layout 0, 1, ..., M/2, -M/2+1, ..., -1.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    shape: Vec<usize>,
}

impl Grid {
    pub fn new(shape: Vec<usize>) -> Result<Self> {
        if shape.is_empty() {
            return Err(CoreError::InvalidParams("grid needs at least one axis".into()));
        }
        for &m in &shape {
            if m < 2 || !m.is_power_of_two() {
                return Err(CoreError::InvalidParams(format!(
                    "grid axis length {m} is not a power of two >= 2"
                )));
            }
        }
        Ok(Self { shape })
    }

    pub fn cubic(d: usize, m: usize) -> Result<Self> {
        Self::new(vec![m; d])
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.shape.len()
    }

    #[inline]
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Row-major strides.
    pub fn strides(&self) -> Vec<usize> {
        let d = self.d();
        let mut s = vec![1usize; d];
        for a in (0..d.saturating_sub(1)).rev() {
            s[a] = s[a + 1] * self.shape[a + 1];
        }
        s
    }

    /// Signed frequency for index `idx` along `axis`.
    #[inline]
    pub fn freq(&self, axis: usize, idx: usize) -> i64 {
        let m = self.shape[axis];
        if idx <= m / 2 {
            idx as i64
        } else {
            idx as i64 - m as i64
        }
    }

    /// Per-axis table of signed frequencies.
    pub fn freq_table(&self, axis: usize) -> Vec<i64> {
        (0..self.shape[axis]).map(|i| self.freq(axis, i)).collect()
    }

    /// Decode a flat index into per-axis indices.
    #[inline]
    pub fn decode(&self, mut flat: usize, out: &mut [usize]) {
        for a in (0..self.d()).rev() {
            out[a] = flat % self.shape[a];
            flat /= self.shape[a];
        }
    }

    /// Position of grid node with per-axis indices `idx`, in [0, 1)^d.
    pub fn node(&self, idx: &[usize], out: &mut [f64]) {
        for a in 0..self.d() {
            out[a] = idx[a] as f64 / self.shape[a] as f64;
        }
    }

    /// Iterate (flat, |2πk|², k) over all modes. `k` buffer is reused.
    pub fn for_each_mode(&self, mut f: impl FnMut(usize, f64, &[i64])) {
        let d = self.d();
        let tables: Vec<Vec<i64>> = (0..d).map(|a| self.freq_table(a)).collect();
        let mut idx = vec![0usize; d];
        let mut k = vec![0i64; d];
        let n = self.len();
        for flat in 0..n {
            self.decode(flat, &mut idx);
            let mut k2 = 0.0;
            for a in 0..d {
                let ka = tables[a][idx[a]];
                k[a] = ka;
                k2 += (ka * ka) as f64;
            }
            let two_pi_k = 2.0 * std::f64::consts::PI * k2.sqrt();
            f(flat, two_pi_k, &k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn freq_layout() {
        let g = Grid::cubic(1, 8).unwrap();
        let f: Vec<i64> = g.freq_table(0);
        assert_eq!(f, vec![0, 1, 2, 3, 4, -3, -2, -1]);
    }

    #[test]
    fn rejects_non_power_of_two() {
        assert!(Grid::cubic(2, 12).is_err());
    }

    #[test]
    fn strides_row_major() {
        let g = Grid::new(vec![4, 8, 2]).unwrap();
        assert_eq!(g.strides(), vec![16, 2, 1]);
    }
}
