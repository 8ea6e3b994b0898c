use thiserror::Error;

/// Errors produced by the solver pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("negative nodal value {value:.3e} with non-integer exponent {exponent}")]
    NegativePower { value: f64, exponent: f64 },

    #[error("{what} did not converge within {iterations} iterations (residual {residual:.3e})")]
    NonConvergence {
        what: String,
        iterations: usize,
        residual: f64,
    },

    #[error(
        "monotone iteration violated ordering at step {iteration} by {magnitude:.3e}; \
         the contraction shift is too small"
    )]
    MonotonicityViolation { iteration: usize, magnitude: f64 },

    #[error(
        "coefficient a({alpha}) = {a_alpha:.3e} is below the floor {a_min:.3e}; \
         alpha is too close to a knot"
    )]
    DegenerateCoefficient {
        alpha: f64,
        a_alpha: f64,
        a_min: f64,
    },

    #[error("argument {value} lies outside (0, {gamma}), the domain of the inverse of f(t)/t")]
    PsiDomain { value: f64, gamma: f64 },

    #[error("hypothesis check failed ({failing}); rerun with --force to override")]
    HypothesisVeto { failing: String },

    #[error("bump {k}: found {found} fixed-point crossing(s), expected at least 2\n{diagnostic}")]
    TooFewCrossings {
        k: usize,
        found: usize,
        diagnostic: String,
    },

    #[error("ordering chain violated: {0}")]
    OrderingViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
