//! Heuristic Rating Estimation (HRE) for pairwise-comparison matrices with
//! missing entries.
//!
//! Some alternatives have priorities fixed in advance (the *known* ones); the
//! rest are computed from the comparisons. Two variants are provided:
//! [`arithmetic`] (each unknown is the mean of `c_ij * w(a_j)`) and
//! [`geometric`] (the geometric mean). Missing comparisons are treated as if
//! they agreed perfectly with the final ranking.
//!
//! Solvers index alternatives so that unknowns come first: indices `0..k` are
//! unknown, `k..n` are known. [`io::ProblemFile::canonical`] performs that
//! reordering for labelled input.

// `!(x > 0.0)` style comparisons are how NaN gets rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod arithmetic;
pub mod baseline;
pub mod diagnostics;
pub mod error;
pub mod geometric;
mod guard;
pub mod io;
pub mod linsolve;
pub mod matrix;

pub use arithmetic::{build_arithmetic_system, solve_arithmetic, solve_arithmetic_with, ArithmeticSystem};
pub use baseline::{evm, gmm, BaselineMethod, BaselineResult};
pub use diagnostics::{
    check_connectivity, check_consistency, diagnose, undefined_counts, validate_reciprocity, Diagnostics,
    DEFAULT_TOLERANCE,
};
pub use error::HreError;
pub use geometric::{build_geometric_system, solve_geometric, solve_geometric_with, GeometricSystem, DEFAULT_LOG_BASE};
pub use guard::Tolerances;
pub use linsolve::{LinearSystem, Singular};
pub use matrix::{Partition, PcMatrix, Ranking};

/// Which HRE variant to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Arithmetic,
    Geometric,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Arithmetic => "arithmetic",
            Method::Geometric => "geometric",
        }
    }

    /// Geometric runs use the natural logarithm.
    pub fn solve(self, m: &PcMatrix, p: &Partition, tol: &Tolerances) -> Result<Ranking, HreError> {
        match self {
            Method::Arithmetic => solve_arithmetic_with(m, p, tol),
            Method::Geometric => solve_geometric_with(m, p, DEFAULT_LOG_BASE, tol),
        }
    }
}
