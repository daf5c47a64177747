use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("mismatched modules: {0}")]
    Mismatch(String),

    #[error("no equivariant complement: {0}")]
    InfeasibleSystem(String),

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("malformed module file: {0}")]
    Format(String),
}

impl Error {
    /// True for errors caused by malformed user input rather than by a
    /// computation that could not be carried out.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::BadRational(_) | Error::Format(_)
        )
    }
}
