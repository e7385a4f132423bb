use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A `ScatteringProblem` field failed validation.
    #[error("invalid {field} = {value}: {reason}")]
    InvalidProblem {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// Argument outside the accuracy domain of a special function.
    #[error("{function}({z}) is outside the supported domain {domain}")]
    Domain {
        function: &'static str,
        z: f64,
        domain: &'static str,
    },

    #[error("invalid epsilon schedule: {0}")]
    InvalidSchedule(String),

    /// The complex bracket of the regularized cross section vanished.
    #[error("regularized bracket is degenerate at eps = {eps} (modulus squared is zero)")]
    DegenerateBracket { eps: f64 },

    /// A closed-form expression is singular at the requested input.
    #[error("singular input: {0}")]
    SingularInput(&'static str),
}
