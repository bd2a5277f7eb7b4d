use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A problem or configuration value violates its documented invariants.
    #[error("invalid specification: {0}")]
    Spec(String),

    #[error("{what} out of range: {detail}")]
    Range { what: &'static str, detail: String },

    /// The request exceeds the desk-scale limits of a dense computation.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A precondition of an operation does not hold for its input.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error(
        "infeasible layout: {required} physical qubits needed, capacity {capacity} (short by {shortfall})"
    )]
    Infeasible {
        required: u64,
        capacity: u64,
        shortfall: u64,
    },
}

impl Error {
    pub(crate) fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }

    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
