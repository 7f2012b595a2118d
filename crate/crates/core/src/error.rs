use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("algebra carries no 2-map on its even part")]
    MissingRestrictedData,
    #[error("incompatible inputs: {0}")]
    IncompatibleInputs(String),
    #[error("limit exceeded: {what} (limit {limit})")]
    LimitExceeded { what: String, limit: u64 },
    #[error("cochain is not a cocycle")]
    NotACocycle,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}
