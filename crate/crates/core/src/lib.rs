//! Numerical toolbox for repulsive Riesz flows on the d-dimensional torus.
//!
//! The crate covers the full pipeline from kernel evaluation to path
//! functionals:
//!
//! * [`kernel`] — the periodic Riesz potential `g`, its derivatives,
//!   truncations and sphere smearings, evaluated by a generalized Ewald
//!   split with a validated fast pair path.
//! * [`fields`] — spectral scalar/vector fields on uniform grids: fractional
//!   Sobolev norms, Riesz convolutions, heat mollification, smearing, and an
//!   entropic Wasserstein-1 proxy.
//! * [`particles`] — Euler–Maruyama simulation of the interacting SDE with
//!   per-step energy/enstrophy diagnostics and counter-keyed noise streams.
//! * [`modenergy`] — the modulated energy between particle configurations
//!   and densities, and the associated inequality suite with a
//!   calibrate-then-freeze constant protocol.
//! * [`mve`] — a pseudo-spectral solver for the McKean–Vlasov equation and
//!   the heat-mollified recovery trajectories.
//! * [`rate`] — the action functional, weighted negative Sobolev dual norms,
//!   drift recovery, and the large-deviations rate function.

pub mod error;
pub mod fft;
pub mod fields;
pub mod grid;
pub mod kernel;
pub mod modenergy;
pub mod mve;
pub mod particles;
pub mod rate;
pub mod special;
pub mod torus;

pub use error::{CoreError, Result};
pub use fields::{FieldTrajectory, SpectralField, VectorField};
pub use grid::Grid;
pub use kernel::{KernelTable, RieszParams};
pub use particles::{DiagnosticsSeries, DriftSpec, ParticleState, SdeConfig};
