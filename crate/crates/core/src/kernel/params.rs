use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::special::gamma_fn;

/// Parameters (d, s) of a periodic Riesz potential, with the normalizing
/// constant fixed by the near-origin behaviour |x|^{-s} (resp. -log|x|).
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct RieszParams {
    pub d: usize,
    pub s: f64,
    /// c_{d,s} = 4^{(d-s)/2} Γ((d-s)/2) π^{d/2} / Γ(s/2) for s > 0,
    /// Γ(d/2) (4π)^{d/2} / 2 for s = 0.
    pub c_ds: f64,
    /// True iff s < d - 2, the range on which (-Δ)g is again a pointwise
    /// evaluable Riesz kernel and the SDE/PDE modules are well-posed.
    pub dynamics_valid: bool,
}

impl RieszParams {
    pub fn new(d: usize, s: f64) -> Result<Self> {
        if d == 0 || d > 3 {
            return Err(CoreError::InvalidParams(format!(
                "spatial dimension d = {d} unsupported (1 <= d <= 3)"
            )));
        }
        if !(0.0..).contains(&s) || s >= d as f64 {
            return Err(CoreError::InvalidParams(format!(
                "Riesz exponent must satisfy 0 <= s < d (got s = {s}, d = {d})"
            )));
        }
        Ok(Self {
            d,
            s,
            c_ds: riesz_constant(d, s),
            dynamics_valid: s < d as f64 - 2.0,
        })
    }

    /// Fourier coefficient of g at |2πk| = `two_pi_k` (zero at k = 0).
    #[inline]
    pub fn fourier_coeff(&self, two_pi_k: f64) -> f64 {
        if two_pi_k == 0.0 {
            0.0
        } else {
            self.c_ds * two_pi_k.powf(self.s - self.d as f64)
        }
    }

    /// Parameters of the kernel representing (-Δ)g, which equals
    /// (c_{d,s}/c_{d,s+2}) times the Riesz potential with exponent s + 2.
    pub fn laplacian_kernel(&self) -> Result<(RieszParams, f64)> {
        if !self.dynamics_valid {
            return Err(CoreError::DynamicsInvalid { s: self.s, d: self.d });
        }
        let aux = RieszParams::new(self.d, self.s + 2.0)?;
        Ok((aux, self.c_ds / aux.c_ds))
    }
}

/// The scaling constant c_{d,s}.
pub fn riesz_constant(d: usize, s: f64) -> f64 {
    let df = d as f64;
    if s == 0.0 {
        gamma_fn(df / 2.0) * (4.0 * std::f64::consts::PI).powf(df / 2.0) / 2.0
    } else {
        4.0f64.powf((df - s) / 2.0) * gamma_fn((df - s) / 2.0)
            * std::f64::consts::PI.powf(df / 2.0)
            / gamma_fn(s / 2.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn coulomb_constant_3d() {
        let p = RieszParams::new(3, 1.0).unwrap();
        assert_relative_eq!(p.c_ds, 4.0 * PI, max_relative = 1e-14);
        assert!(!p.dynamics_valid);
    }

    #[test]
    fn log_constant_3d() {
        let p = RieszParams::new(3, 0.0).unwrap();
        assert_relative_eq!(p.c_ds, 2.0 * PI * PI, max_relative = 1e-14);
        assert!(p.dynamics_valid);
    }

    #[test]
    fn rejects_super_critical() {
        assert!(RieszParams::new(3, 3.0).is_err());
        assert!(RieszParams::new(3, -0.1).is_err());
    }

    #[test]
    fn laplacian_kernel_ratio() {
        let p = RieszParams::new(3, 0.5).unwrap();
        let (aux, ratio) = p.laplacian_kernel().unwrap();
        assert_relative_eq!(aux.s, 2.5);
        assert_relative_eq!(ratio, p.c_ds / aux.c_ds);
        assert!(RieszParams::new(3, 1.0).unwrap().laplacian_kernel().is_err());
    }
}
