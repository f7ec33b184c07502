use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph not connected")]
    NotConnected,

    #[error("budget exceeded: {what} supports n <= {limit}, got n = {n}")]
    BudgetExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("graph is not reciprocal transmission regular (spread {0:e})")]
    NotTransmissionRegular(f64),

    #[error("graph is not regular with diameter 2: {0}")]
    NotRegularDiameterTwo(String),

    #[error("inconsistent regular spectrum: {0}")]
    InconsistentSpectrum(String),

    #[error("not a cluster: {0}")]
    NotACluster(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph class is empty: {0}")]
    EmptyClass(String),

    #[error("threshold bracket failure: {0}")]
    Bracket(String),
}
