//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("data length {len} does not match shape {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("non-finite entry at flat index {index}")]
    NonFinite { index: usize },
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },
    #[error("SVD iteration did not converge after {iterations} QR steps")]
    SvdNoConvergence { iterations: usize },
    #[error("matrix not positive definite: pivot {pivot:e} at column {column}")]
    NotPositiveDefinite { column: usize, pivot: f64 },
    #[error("truncation rank {r} exceeds numerical rank: sigma_r = {sigma_r:e}, sigma_1 = {sigma_1:e}")]
    TruncationBeyondRank { r: usize, sigma_r: f64, sigma_1: f64 },
    #[error("tau = {tau} outside the open interval (0, 1)")]
    InvalidTau { tau: f64 },
    #[error("invalid argument: {context}")]
    InvalidArgument { context: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error("embedding shape requires 1 <= m <= p, got p = {p}, m = {m}")]
    BadShape { p: usize, m: usize },
    #[error("beta tail check requires 1 <= ell < p, got ell = {ell}, p = {p}")]
    BadBetaShape { ell: usize, p: usize },
    #[error("eps = {eps} outside admissible range (0, {max_eps}]")]
    BadEps { eps: f64, max_eps: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IncrementError {
    #[error("sketched system rank-deficient at replicate {replicate}: sigma_min = {sigma_min:e}, sigma_max = {sigma_max:e}")]
    SketchRankDeficient {
        replicate: usize,
        sigma_min: f64,
        sigma_max: f64,
    },
    #[error("sketch width m = {m} exceeds parameter count p = {p}")]
    SketchTooWide { m: usize, p: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Embed(EmbedError),
}

impl From<EmbedError> for IncrementError {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::Linalg(l) => IncrementError::Linalg(l),
            other => IncrementError::Embed(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("parameter vector length {got} does not match spec parameter count {expected}")]
    ParamLength { got: usize, expected: usize },
    #[error("checkpoint parse error: {context}")]
    Checkpoint { context: String },
    #[error("checkpoint header mismatch: {context}")]
    CheckpointMismatch { context: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("grid size must be even and positive, got {n}")]
    BadGridSize { n: usize },
    #[error("step size underflow at t = {t}: required dt below dt_min = {dt_min:e}")]
    StepUnderflow { t: f64, dt_min: f64 },
    #[error("requested time {t} is not among the stored output times")]
    TimeNotStored { t: f64 },
    #[error("output times must be nondecreasing and within [0, horizon]")]
    BadOutputTimes,
    #[error("solution file parse error: {context}")]
    Parse { context: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricsError {
    #[error("value lists have different lengths: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("reference values have zero norm")]
    ZeroReference,
    #[error("value list length {len} is not a multiple of outputs = {outputs}")]
    BadBlockSize { len: usize, outputs: usize },
    #[error("no reports supplied")]
    Empty,
}
