use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("operators do not commute: residual {residual:.3e} exceeds bound {bound:.3e}")]
    Commutativity { residual: f64, bound: f64 },

    #[error("group generation failed: {0}")]
    Generation(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal consistency check failed ({what}): residual {residual:.3e}")]
    Consistency { what: String, residual: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("matrix does not normalize the group: {0}")]
    Normalizer(String),

    #[error("parameter is not stable under tau: {0}")]
    ParameterStability(String),

    #[error("no regular fixed vector: {0}")]
    NotRegular(String),

    #[error("element has no finite order up to {0}")]
    Order(usize),

    #[error("base point lies on reflecting hyperplane {hyperplane} (|alpha(v)| = {value:.3e})")]
    OnHyperplane { hyperplane: usize, value: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported tau: {0}")]
    UnsupportedTau(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
