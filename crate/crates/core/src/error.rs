use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        bound: u128,
    },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("no conjugacy class of type {0}")]
    UnknownType(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("symmetric functions are expressed in different bases or alphabets")]
    BasisMismatch,

    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("class function does not live on a wreath product")]
    NotWreath,

    #[error("symmetric function is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("window of degree {needed} exceeds the maximum {max}")]
    WindowTooSmall { needed: usize, max: usize },

    #[error("annihilation of degree {n} needs a class function on at least Γ_{n}, got Γ_{m}")]
    DegreeTooSmall { n: usize, m: usize },

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("invalid character table: {0}")]
    InvalidCharacterTable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn bound(what: &'static str, value: impl Into<u128>, bound: impl Into<u128>) -> Self {
        Error::BoundExceeded {
            what,
            value: value.into(),
            bound: bound.into(),
        }
    }
}
