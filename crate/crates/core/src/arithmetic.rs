//! Arithmetic HRE over incomplete matrices.
//!
//! Each unknown priority is the average of `c_ij * w(a_j)` over the defined
//! comparisons of its row. A missing `c_ij` is taken to equal `w(a_i) / w(a_j)`,
//! which contributes `w(a_i)` to the average and so simply shrinks the row's
//! denominator from `n - 1` to `n - s_i - 1`:
//!
//! ```text
//! w(a_i) = 1/(n - s_i - 1) * sum_{j != i, c_ij defined} c_ij * w(a_j)
//! ```
//!
//! Moving the known alternatives to the right-hand side gives the `k x k`
//! system `coeff * w = constants`.

use crate::error::HreError;
use crate::guard::{check_solvable, Tolerances};
use crate::linsolve::LinearSystem;
use crate::matrix::{Partition, PcMatrix, Ranking};

#[derive(Debug, Clone, PartialEq)]
pub struct ArithmeticSystem {
    /// Unit diagonal, `-c_ij / (n - s_i - 1)` for defined unknown pairs, 0 for missing ones.
    pub coeff: Vec<Vec<f64>>,
    /// `sum_{j known, c_ij defined} c_ij * w(a_j) / (n - s_i - 1)`
    pub constants: Vec<f64>,
    /// `n - s_i - 1` per unknown row.
    pub row_denominators: Vec<usize>,
}

impl ArithmeticSystem {
    pub fn to_linear_system(&self) -> LinearSystem {
        LinearSystem::new(self.coeff.clone(), self.constants.clone())
    }
}

pub fn build_arithmetic_system(m: &PcMatrix, p: &Partition) -> Result<ArithmeticSystem, HreError> {
    build_arithmetic_system_with(m, p, &Tolerances::default())
}

pub fn build_arithmetic_system_with(
    m: &PcMatrix,
    p: &Partition,
    tol: &Tolerances,
) -> Result<ArithmeticSystem, HreError> {
    let s = check_solvable(m, p, tol)?;
    let n = m.n();
    let k = p.k();

    let mut coeff = vec![vec![0.0; k]; k];
    let mut constants = vec![0.0; k];
    let mut row_denominators = Vec::with_capacity(k);
    for i in 0..k {
        let denom = n - s[i] - 1;
        row_denominators.push(denom);
        let d = denom as f64;
        coeff[i][i] = 1.0;
        for (j, c) in m.defined_in_row(i) {
            if p.is_known(j) {
                constants[i] += c * p.known_priority(j) / d;
            } else {
                coeff[i][j] = -c / d;
            }
        }
    }
    Ok(ArithmeticSystem {
        coeff,
        constants,
        row_denominators,
    })
}

pub fn solve_arithmetic(m: &PcMatrix, p: &Partition) -> Result<Ranking, HreError> {
    solve_arithmetic_with(m, p, &Tolerances::default())
}

pub fn solve_arithmetic_with(m: &PcMatrix, p: &Partition, tol: &Tolerances) -> Result<Ranking, HreError> {
    let system = build_arithmetic_system_with(m, p, tol)?;
    let unknown = system.to_linear_system().solve()?;
    if let Some((row, &value)) = unknown.iter().enumerate().find(|(_, &w)| !(w > 0.0)) {
        return Err(HreError::NonPositiveSolution { row, value });
    }
    let ranking = Ranking::assemble(unknown, p);
    let residuals = averaging_residuals(m, p, ranking.values());
    if let Some((row, &residual)) = residuals.iter().enumerate().find(|(_, &r)| !(r <= tol.residual)) {
        return Err(HreError::IllConditioned {
            row,
            residual,
            tolerance: tol.residual,
        });
    }
    Ok(ranking)
}

/// Relative residual of the averaging identity for every unknown row:
/// `|(n - s_i - 1) w_i - sum c_ij w_j| / sum c_ij w_j`.
pub fn averaging_residuals(m: &PcMatrix, p: &Partition, w: &[f64]) -> Vec<f64> {
    (0..p.k())
        .map(|i| {
            let mut count = 0usize;
            let mut sum = 0.0;
            for (j, c) in m.defined_in_row(i) {
                count += 1;
                sum += c * w[j];
            }
            ((count as f64) * w[i] - sum).abs() / sum.abs()
        })
        .collect()
}
