use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("invalid input: {0}")]
    Input(String),
    /// Text that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A configured resource cap was exceeded.
    #[error("{what} exceeds cap ({value} > {limit})")]
    Cap {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// An order that fails to be a lattice.
    #[error("not a lattice: {0}")]
    NotLattice(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn check_cap(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Cap { what, value, limit })
    } else {
        Ok(())
    }
}
