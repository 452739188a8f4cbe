use thiserror::Error;

use crate::linsolve::Singular;

/// Everything that can go wrong between reading a problem and returning a ranking.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HreError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid value at ({row}, {col}): {message}")]
    InvalidValue { row: usize, col: usize, message: String },

    #[error("missingness is not symmetric: ({row}, {col}) is defined but ({col}, {row}) is missing")]
    AsymmetricMissing { row: usize, col: usize },

    #[error("invalid label: {0}")]
    Label(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is not reciprocal: c[{row}][{col}] * c[{col}][{row}] = {product}")]
    Reciprocity { row: usize, col: usize, product: f64 },

    #[error("alternative {row} has no defined comparisons")]
    DegenerateRow { row: usize },

    #[error("unknown alternatives {isolated:?} cannot reach any known alternative")]
    NotConnected { isolated: Vec<usize> },

    #[error(transparent)]
    Singular(#[from] Singular),

    #[error("computed priority of alternative {row} is not positive ({value})")]
    NonPositiveSolution { row: usize, value: f64 },

    #[error("fixed-point residual {residual:e} at alternative {row} exceeds {tolerance:e}")]
    IllConditioned { row: usize, residual: f64, tolerance: f64 },

    #[error("matrix has missing comparisons; method requires a complete matrix")]
    IncompleteMatrix,

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("log base must be positive, finite and different from 1, got {0}")]
    InvalidLogBase(f64),
}

impl HreError {
    /// Stable machine-readable code used on the command line.
    pub fn code(&self) -> &'static str {
        match self {
            HreError::Parse { .. } => "PARSE_ERROR",
            HreError::InvalidValue { .. } => "INVALID_VALUE",
            HreError::AsymmetricMissing { .. } => "ASYMMETRIC_MISSING",
            HreError::Label(_) => "INVALID_VALUE",
            HreError::InvalidPartition(_) => "INVALID_PARTITION",
            HreError::Reciprocity { .. } => "RECIPROCITY_VIOLATION",
            HreError::DegenerateRow { .. } => "DEGENERATE_ROW",
            HreError::NotConnected { .. } => "NOT_CONNECTED",
            HreError::Singular(_) => "SINGULAR_MATRIX",
            HreError::NonPositiveSolution { .. } => "NON_POSITIVE_SOLUTION",
            HreError::IllConditioned { .. } => "ILL_CONDITIONED",
            HreError::IncompleteMatrix => "INCOMPLETE_MATRIX",
            HreError::NoConvergence { .. } => "NO_CONVERGENCE",
            HreError::InvalidLogBase(_) => "INVALID_LOG_BASE",
        }
    }

    /// True for failures that happen after the input was accepted, i.e. inside a solver.
    pub fn is_solver_failure(&self) -> bool {
        matches!(
            self,
            HreError::Singular(_)
                | HreError::NonPositiveSolution { .. }
                | HreError::IllConditioned { .. }
                | HreError::NoConvergence { .. }
        )
    }
}
