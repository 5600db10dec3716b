//! The periodic Riesz potential on T^d and everything derived from it.
//!
//! `g` is the zero-mean periodic solution of `|∇|^{d-s} g = c_{d,s} (δ_0 - 1)`,
//! normalized so that `g(x) ~ |x|^{-s}` (or `-log|x|` at s = 0) near the
//! origin. Evaluation uses a generalized Ewald split: a screened short-range
//! image sum plus a Gaussian-screened Fourier tail, with the smooth part
//! tabulated on a grid for fast pairwise work.

mod ewald;
pub mod oracle;
mod params;
mod smear;
mod spline;
mod table;

pub use ewald::EwaldCore;
pub use params::RieszParams;
pub use table::{make_kernel, BuildOptions, KernelTable, ValidationReport};
