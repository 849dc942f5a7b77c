use thiserror::Error;

/// Errors raised by the library.
///
/// Resource-cap errors are kept separate from the rest because the CLI maps
/// them to a dedicated exit code.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("polynomial is not bihomogeneous")]
    NotHomogeneous,

    #[error("span is not invariant under the symmetric group action")]
    NotInvariant,

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
