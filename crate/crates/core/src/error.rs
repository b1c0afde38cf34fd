use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quandle: {0}")]
    InvalidQuandle(String),

    #[error("cannot parse quandle spec `{0}`")]
    QuandleSpec(String),

    #[error("quandle `{0}` has no Alexander module structure")]
    NotAlexander(String),

    #[error("group ring modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },

    #[error("degenerate tuple {0:?} carries a nonzero coefficient")]
    DegenerateTuple(Vec<usize>),

    #[error("element {element} out of range for a quandle of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(String),

    #[error("cochain mismatch: {0}")]
    CochainMismatch(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("unknown cocycle `{0}`")]
    UnknownCocycle(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
