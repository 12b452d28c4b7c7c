use thiserror::Error;

/// Errors shared by the sequence engines and everything built on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    /// The next sequence value does not fit in 64 bits. The value stays
    /// below 3n, so this can only trigger with n around 2^64 / 3; callers
    /// must stop the stream when they see it.
    #[error("sequence value overflows 64 bits at n = {n}")]
    Overflow { n: u64 },

    /// The alternate sequence is only defined from its fixed start at 180.
    #[error("alternate sequence starts at n = 180, cannot evaluate n = {n}")]
    AltBeforeStart { n: u64 },

    /// An argument is below the smallest value an operation is defined for.
    #[error("{what} = {got} is below the minimum {min}")]
    BelowMinimum {
        what: &'static str,
        got: u64,
        min: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
