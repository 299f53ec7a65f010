use thiserror::Error;

/// Errors produced by model validation, data assembly, estimation and the
/// experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("trajectory must have at least one sample")]
    EmptyTrajectory,

    #[error("horizon must be at least 1")]
    EmptyHorizon,

    #[error(
        "trajectory too short: have {have} samples, need p + f + N - 1 = {need}"
    )]
    DataLength { have: usize, need: usize },

    #[error(
        "persistence of excitation failure at row {row}: smallest singular value {sigma_min:.3e} below tolerance {tol:.3e}"
    )]
    ExcitationFailure {
        row: usize,
        sigma_min: f64,
        tol: f64,
    },

    #[error(
        "rank deficiency: singular value {index} is {value:.3e}, below tolerance {tol:.3e}"
    )]
    RankDeficient {
        index: usize,
        value: f64,
        tol: f64,
    },

    #[error("system extraction failed: {0}")]
    Extraction(String),

    #[error("alignment transform is singular (condition number {0:.3e})")]
    SingularAlignment(f64),

    #[error("no past horizon in the grid satisfies the decay condition: {0}")]
    HorizonInfeasible(String),

    #[error("burn-in time not found below cap {cap}")]
    BurnInNotFound { cap: usize },

    #[error("perturbation {delta:.3e} exceeds sigma_n/4 = {limit:.3e}")]
    ConditionViolated { delta: f64, limit: f64 },

    #[error("covariance is not positive definite")]
    NotPositiveDefinite,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("all {trials} trials failed at N = {n}")]
    SweepFailed { n: usize, trials: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
