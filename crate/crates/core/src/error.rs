use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad parameters or malformed specifications.
    Usage,
    /// Malformed or inconsistent input data.
    Input,
    /// The computation was refused because it exceeds a configured limit.
    Refused,
    /// Numerical failure or broken internal invariant.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) must be listed with u < v")]
    UnorderedEdge(usize, usize),
    #[error("edge ({0}, {1}) is not present in the host graph")]
    EdgeNotInHost(usize, usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph too small: n = {0}, need at least 3 vertices for an admissible set")]
    GraphTooSmall(usize),
    #[error("exact computation refused: n = {n} exceeds limit {limit}")]
    ExactRefused { n: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("eigensolver did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("matrix is not in SL: determinant {det} mod {modulus}")]
    NotInSl { det: u64, modulus: u64 },
    #[error("modulus {new} does not divide {old}")]
    NotADivisor { new: u64, old: u64 },
    #[error("group too large: enumeration reached {reached} elements, cap is {cap}")]
    GroupTooLarge { reached: usize, cap: usize },
    #[error("integer overflow while evaluating a word of length {0}")]
    WordOverflow(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("no simple graph after {0} configuration-model attempts")]
    RetryCapExceeded(usize),
    #[error("sample was drawn on a different host graph")]
    HostMismatch,
    #[error("family spec, position {position}: {message}")]
    Spec { position: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse { .. }
            | SelfLoop(_)
            | DuplicateEdge(..)
            | VertexOutOfRange { .. }
            | UnorderedEdge(..)
            | EdgeNotInHost(..)
            | HostMismatch
            | Disconnected => ErrorKind::Input,
            GraphTooSmall(_) | ExactRefused { .. } | GroupTooLarge { .. } | RetryCapExceeded(_) => {
                ErrorKind::Refused
            }
            NoConvergence(_) | WordOverflow(_) => ErrorKind::Internal,
            EmptySubset
            | DimMismatch(..)
            | ModulusMismatch(..)
            | NotInSl { .. }
            | NotADivisor { .. }
            | InvalidParameter(_)
            | InvalidProbability(_)
            | Spec { .. } => ErrorKind::Usage,
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
