use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("coefficient field mismatch: K={0} and K={1}")]
    FieldMismatch(u64, u64),
    #[error("divergence: {0}")]
    Divergence(String),
    #[error("unknown {kind} `{name}`")]
    Lookup { kind: &'static str, name: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("precision error: {0}")]
    Precision(String),
    #[error("degenerate case: {0}")]
    Degenerate(String),
    #[error("unsupported method `{method}` for {target}")]
    Unsupported { method: String, target: String },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
