//! Batch front end for the synthesis library: problem files in, reports out.

mod problem;
mod report;
mod run;

pub use problem::{parse_problem, Options, ProblemFile};
pub use report::{render_pretty, ControllerOut, OracleOut, Outcome, Report, SearchOut, Status};
pub use run::{run, Command, RunOptions};

/// Problems with the input rather than with the mathematics.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0}")]
    Variables(String),
    #[error("verify needs a \"controller\" matrix in the problem file")]
    MissingController,
    #[error("{0}")]
    Invalid(String),
}

impl From<bsynth_core::Error> for InputError {
    fn from(e: bsynth_core::Error) -> Self {
        match e {
            bsynth_core::Error::Dimension(m) => InputError::Dimension(m),
            bsynth_core::Error::Variables(m) => InputError::Variables(m),
            other => InputError::Invalid(other.to_string()),
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSOLVABLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_ORACLE: i32 = 4;
