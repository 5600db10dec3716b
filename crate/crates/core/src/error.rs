use thiserror::Error;

/// Errors shared by all core modules.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("requested accuracy {requested:e} is tighter than the certifiable bound {achievable:e}")]
    Accuracy { requested: f64, achievable: f64 },

    #[error("kernel evaluated at the singularity x = 0")]
    Singularity,

    #[error("operation requires s < d - 2 (got s = {s}, d = {d})")]
    DynamicsInvalid { s: f64, d: usize },

    #[error("coincident particles at indices {i} and {j} (distance {dist:e})")]
    CoincidentParticles { i: usize, j: usize, dist: f64 },

    #[error("density has negative values (min {min:e})")]
    NegativeDensity { min: f64 },

    #[error("density not bounded below on grid (min {min:e})")]
    DensityNotBoundedBelow { min: f64 },

    #[error("iteration did not converge after {iters} steps (residual {residual:e})")]
    NonConvergence { iters: usize, residual: f64 },

    #[error("solver step produced values below -{tol:e} (min {min:e}); reduce the time step")]
    PositivityLoss { min: f64, tol: f64 },

    #[error("mismatched grids or shapes: {0}")]
    ShapeMismatch(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("corrupt or unsupported file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
