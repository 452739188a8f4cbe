//! Geometric HRE over incomplete matrices.
//!
//! Each unknown priority is the geometric mean of `c_ij * w(a_j)` over its row,
//! with missing comparisons again standing in for `w(a_i) / w(a_j)`. Raising to
//! the power `n - 1` and cancelling the `s_i` copies of `w(a_i)` leaves
//!
//! ```text
//! w(a_i)^(n - s_i - 1) = prod_{j != i, c_ij defined} c_ij * w(a_j)
//! ```
//!
//! which is linear after taking logarithms. Any base works; the solution is
//! mapped back by exponentiation so it is always positive.

use crate::error::HreError;
use crate::guard::{check_solvable, Tolerances};
use crate::linsolve::LinearSystem;
use crate::matrix::{Partition, PcMatrix, Ranking};

pub const DEFAULT_LOG_BASE: f64 = std::f64::consts::E;

#[derive(Debug, Clone, PartialEq)]
pub struct GeometricSystem {
    /// Diagonal `n - s_i - 1`; `-1` for a defined unknown pair, 0 for a missing one.
    pub coeff: Vec<Vec<f64>>,
    /// `sum_{j unknown, defined} log c_ij + log g_i` where `g_i` is the product of
    /// `c_ij * w(a_j)` over defined known `j` (1 when there are none).
    pub constants: Vec<f64>,
    pub log_base: f64,
}

impl GeometricSystem {
    pub fn to_linear_system(&self) -> LinearSystem {
        LinearSystem::new(self.coeff.clone(), self.constants.clone())
    }
}

fn check_base(log_base: f64) -> Result<f64, HreError> {
    if log_base.is_finite() && log_base > 0.0 && log_base != 1.0 {
        Ok(log_base.ln())
    } else {
        Err(HreError::InvalidLogBase(log_base))
    }
}

pub fn build_geometric_system(m: &PcMatrix, p: &Partition, log_base: f64) -> Result<GeometricSystem, HreError> {
    build_geometric_system_with(m, p, log_base, &Tolerances::default())
}

pub fn build_geometric_system_with(
    m: &PcMatrix,
    p: &Partition,
    log_base: f64,
    tol: &Tolerances,
) -> Result<GeometricSystem, HreError> {
    let ln_base = check_base(log_base)?;
    let s = check_solvable(m, p, tol)?;
    let n = m.n();
    let k = p.k();
    let log = |x: f64| x.ln() / ln_base;

    let mut coeff = vec![vec![0.0; k]; k];
    let mut constants = vec![0.0; k];
    for i in 0..k {
        coeff[i][i] = (n - s[i] - 1) as f64;
        let mut unknown_part = 0.0;
        let mut known_part = 0.0;
        for (j, c) in m.defined_in_row(i) {
            if p.is_known(j) {
                known_part += log(c) + log(p.known_priority(j));
            } else {
                coeff[i][j] = -1.0;
                unknown_part += log(c);
            }
        }
        constants[i] = unknown_part + known_part;
    }
    Ok(GeometricSystem {
        coeff,
        constants,
        log_base,
    })
}

pub fn solve_geometric(m: &PcMatrix, p: &Partition, log_base: f64) -> Result<Ranking, HreError> {
    solve_geometric_with(m, p, log_base, &Tolerances::default())
}

pub fn solve_geometric_with(m: &PcMatrix, p: &Partition, log_base: f64, tol: &Tolerances) -> Result<Ranking, HreError> {
    let system = build_geometric_system_with(m, p, log_base, tol)?;
    let logs = system.to_linear_system().solve()?;
    let unknown: Vec<f64> = logs.iter().map(|&x| log_base.powf(x)).collect();
    if let Some((row, &value)) = unknown.iter().enumerate().find(|(_, &w)| !(w > 0.0 && w.is_finite())) {
        // only reachable through overflow or underflow of the exponential
        return Err(HreError::NonPositiveSolution { row, value });
    }
    let ranking = Ranking::assemble(unknown, p);
    let residuals = product_residuals(m, p, ranking.values());
    if let Some((row, &residual)) = residuals.iter().enumerate().find(|(_, &r)| !(r <= tol.residual)) {
        return Err(HreError::IllConditioned {
            row,
            residual,
            tolerance: tol.residual,
        });
    }
    Ok(ranking)
}

/// Relative residual of `w_i^(n - s_i - 1) = prod c_ij w_j` for every unknown
/// row, evaluated in log space as `|exp(lhs - rhs) - 1|`.
pub fn product_residuals(m: &PcMatrix, p: &Partition, w: &[f64]) -> Vec<f64> {
    (0..p.k())
        .map(|i| {
            let mut count = 0usize;
            let mut log_rhs = 0.0;
            for (j, c) in m.defined_in_row(i) {
                count += 1;
                log_rhs += c.ln() + w[j].ln();
            }
            ((count as f64) * w[i].ln() - log_rhs).exp_m1().abs()
        })
        .collect()
}
