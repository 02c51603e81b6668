use std::fmt;

/// Failures of the algebra layer. None of these encode a mathematical
/// "no" answer; those are returned as `Option`, flags, or [`Unsolvable`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("intermediate degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("{0} is not full row rank")]
    NotFullRowRank(&'static str),
    #[error("variable mismatch: {0}")]
    Variables(String),
    #[error("search exhausted its budget of {0} nodes")]
    SearchLimit(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a synthesis problem has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Unsolvable {
    NotImplementable,
    NotRegularlyImplementable,
    PartitionConstraint,
}

impl fmt::Display for Unsolvable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unsolvable::NotImplementable => "specification is not implementable",
            Unsolvable::NotRegularlyImplementable => "specification is not regularly implementable",
            Unsolvable::PartitionConstraint => "input-output partition constraint is unsatisfiable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthesisError {
    #[error("unsolvable: {0}")]
    Unsolvable(Unsolvable),
    #[error(transparent)]
    Algebra(#[from] Error),
}

impl From<Unsolvable> for SynthesisError {
    fn from(u: Unsolvable) -> Self {
        SynthesisError::Unsolvable(u)
    }
}

impl SynthesisError {
    pub fn unsolvable(&self) -> Option<Unsolvable> {
        match self {
            SynthesisError::Unsolvable(u) => Some(*u),
            SynthesisError::Algebra(_) => None,
        }
    }
}
