use thiserror::Error;

/// Errors raised by the exact and floating-point layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid trinomial partition: {r1} + {r2} + {r3} != {n}")]
    InvalidPartition { n: i64, r1: i64, r2: i64, r3: i64 },

    #[error("{what}: {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("quadrature did not converge after {doublings} panel doublings (last difference {last_diff:e})")]
    NonConvergence { doublings: u32, last_diff: f64 },

    #[error("cannot parse {input:?} as a rational")]
    Parse { input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, expected: &'static str) -> Error {
    Error::OutOfRange {
        what,
        value: value.try_into().unwrap_or(i64::MAX),
        expected,
    }
}
