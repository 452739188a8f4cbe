//! Eigenvector and geometric-mean prioritization for complete matrices.

use serde::Serialize;

use crate::error::HreError;
use crate::matrix::PcMatrix;

pub const DEFAULT_MAX_ITER: usize = 10_000;
pub const DEFAULT_CONV_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaselineMethod {
    Evm,
    Gmm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BaselineResult {
    pub method: BaselineMethod,
    /// Sums to one.
    pub weights: Vec<f64>,
    /// Rayleigh-quotient estimate of the principal eigenvalue (EVM only).
    pub spectral_radius: Option<f64>,
    /// Reciprocal of the sum of row geometric means (GMM only).
    pub normalizer: Option<f64>,
    /// Power iterations performed (EVM only).
    pub iterations: Option<usize>,
}

fn complete_rows(m: &PcMatrix) -> Result<Vec<Vec<f64>>, HreError> {
    m.rows()
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<f64>>>())
        .collect::<Option<_>>()
        .ok_or(HreError::IncompleteMatrix)
}

fn normalize(v: &mut [f64]) {
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= total);
}

/// Power iteration from the uniform vector.
pub fn evm(m: &PcMatrix, max_iter: usize, conv_tol: f64) -> Result<BaselineResult, HreError> {
    let rows = complete_rows(m)?;
    let n = rows.len();
    let mul = |v: &[f64]| -> Vec<f64> { rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect() };

    let mut w = vec![1.0 / n as f64; n];
    for iter in 1..=max_iter {
        let mut next = mul(&w);
        normalize(&mut next);
        let delta = next.iter().zip(&w).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        w = next;
        if delta < conv_tol {
            let cw = mul(&w);
            let num: f64 = w.iter().zip(&cw).map(|(a, b)| a * b).sum();
            let den: f64 = w.iter().map(|a| a * a).sum();
            return Ok(BaselineResult {
                method: BaselineMethod::Evm,
                weights: w,
                spectral_radius: Some(num / den),
                normalizer: None,
                iterations: Some(iter),
            });
        }
    }
    Err(HreError::NoConvergence { iterations: max_iter })
}

/// Normalized row geometric means, exponent `1/n` over all `n` entries
/// including the unit diagonal.
pub fn gmm(m: &PcMatrix) -> Result<BaselineResult, HreError> {
    let rows = complete_rows(m)?;
    let n = rows.len() as f64;
    let means: Vec<f64> = rows
        .iter()
        .map(|r| (r.iter().map(|c| c.ln()).sum::<f64>() / n).exp())
        .collect();
    let alpha = 1.0 / means.iter().sum::<f64>();
    Ok(BaselineResult {
        method: BaselineMethod::Gmm,
        weights: means.iter().map(|g| alpha * g).collect(),
        spectral_radius: None,
        normalizer: Some(alpha),
        iterations: None,
    })
}
