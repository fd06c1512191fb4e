use alloc::string::String;

/// Failure categories shared by every module.
///
/// The CLI maps `Invariant` to exit code 2, `Resource` to 3 and the input
/// related variants to 4.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource guard: {0}")]
    Resource(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("undecidable at precision cap of {0} bits")]
    UndecidableAtCap(u32),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($t:tt)*) => { $crate::error::Error::Domain(alloc::format!($($t)*)) };
}
macro_rules! resource {
    ($($t:tt)*) => { $crate::error::Error::Resource(alloc::format!($($t)*)) };
}
macro_rules! invariant {
    ($($t:tt)*) => { $crate::error::Error::Invariant(alloc::format!($($t)*)) };
}
macro_rules! unsupported {
    ($($t:tt)*) => { $crate::error::Error::Unsupported(alloc::format!($($t)*)) };
}
pub(crate) use {domain, invariant, resource, unsupported};
