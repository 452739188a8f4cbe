use crate::diagnostics::{check_connectivity, undefined_counts, validate_reciprocity, DEFAULT_TOLERANCE};
use crate::error::HreError;
use crate::matrix::{Partition, PcMatrix};

/// Tolerances shared by both HRE solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance on `|c_ij * c_ji - 1|`.
    pub reciprocity: f64,
    /// Largest accepted relative residual of the fixed-point identity after solving.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            reciprocity: DEFAULT_TOLERANCE,
            residual: DEFAULT_TOLERANCE,
        }
    }
}

/// Runs the pre-solve checks in order (partition size, reciprocity, degenerate
/// rows, connectivity) and returns `s_i` for every row.
pub(crate) fn check_solvable(m: &PcMatrix, p: &Partition, tol: &Tolerances) -> Result<Vec<usize>, HreError> {
    p.check_against(m)?;
    if let Some(v) = validate_reciprocity(m, tol.reciprocity).first() {
        return Err(HreError::Reciprocity {
            row: v.i,
            col: v.j,
            product: v.c_ij * v.c_ji,
        });
    }
    let s = undefined_counts(m);
    let n = m.n();
    if let Some(row) = (0..p.k()).find(|&i| s[i] + 1 >= n) {
        return Err(HreError::DegenerateRow { row });
    }
    let conn = check_connectivity(m, p);
    if !conn.ok {
        return Err(HreError::NotConnected {
            isolated: conn.isolated_unknowns,
        });
    }
    Ok(s)
}
