use alloc::string::String;

/// Errors raised by graph constructors and the invariant engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph has no edges")]
    Edgeless,

    #[error("exact search limited to {cap} vertices, graph has {n}; use heuristic mode")]
    Capacity { n: usize, cap: usize },

    #[error("structural error: {0}")]
    Structure(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! input_err {
    ($($arg:tt)*) => {
        $crate::Error::Input(alloc::format!($($arg)*))
    };
}
pub(crate) use input_err;
