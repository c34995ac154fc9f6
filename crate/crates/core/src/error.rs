use thiserror::Error;

/// Errors raised by the algebra, automaton and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live over different fields or lattices of different rank.
    #[error("structural mismatch: {0}")]
    Structural(String),
    /// The operation is not defined for this input.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    /// Text could not be parsed; `offset` is a byte offset into the input.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    /// The input is not a valid (symplectic) automaton.
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    /// A configured size limit would be exceeded.
    #[error("size guardrail exceeded: {0}")]
    Guardrail(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
