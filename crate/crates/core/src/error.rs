use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),

    /// A graph file or family shorthand that failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// No k-tuple total dominating set exists (minimum degree below k).
    #[error("no kTDS exists: {0}")]
    Infeasible(String),

    /// An exact search refused to start because the instance exceeds its size cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The search budget ran out before optimality was proven.
    #[error("search budget exhausted after {nodes} nodes; gamma lies in [{lower}, {upper}]")]
    Budget { lower: usize, upper: usize, nodes: u64 },

    /// No constructive witness is implemented for the requested family/k.
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

impl Error {
    /// Process exit code for the command line: 2 for capacity or budget
    /// limits, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity(_) | Error::Budget { .. } => 2,
            _ => 1,
        }
    }
}
