#![allow(dead_code, clippy::needless_range_loop)]

use hre_core::{Partition, PcMatrix};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub struct Instance {
    pub generator: Vec<f64>,
    pub matrix: PcMatrix,
    pub partition: Partition,
}

/// Random connected instance: a random spanning tree is always kept, other
/// pairs go missing with probability `missing`. `perturb` is the largest
/// multiplicative factor applied to `v_i / v_j` (1 means consistent).
pub fn random_instance(seed: u64, n: usize, k: usize, missing: f64, perturb: f64) -> Instance {
    let mut rng = StdRng::seed_from_u64(seed);
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0f64..2.0).exp()).collect();

    let mut keep = vec![vec![false; n]; n];
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    for a in 1..n {
        let b = rng.gen_range(0..a);
        let (i, j) = (perm[a], perm[b]);
        keep[i][j] = true;
        keep[j][i] = true;
    }

    let mut rows = vec![vec![Some(1.0); n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if !keep[i][j] && rng.gen_bool(missing) {
                rows[i][j] = None;
                rows[j][i] = None;
                continue;
            }
            let f = if perturb > 1.0 {
                rng.gen_range(-perturb.ln()..perturb.ln()).exp()
            } else {
                1.0
            };
            let c = v[i] / v[j] * f;
            rows[i][j] = Some(c);
            rows[j][i] = Some(1.0 / c);
        }
    }
    Instance {
        matrix: PcMatrix::new(rows).unwrap(),
        partition: Partition::new(k, v[k..].to_vec()).unwrap(),
        generator: v,
    }
}

pub fn max_rel_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / x.abs().max(y.abs()))
        .fold(0.0, f64::max)
}

/// Mean of `c_ij * w_j` over defined comparisons, relative residual against `w_i`.
pub fn arithmetic_fixed_point_residual(m: &PcMatrix, k: usize, w: &[f64]) -> f64 {
    let n = m.n();
    (0..k)
        .map(|i| {
            let terms: Vec<f64> = (0..n)
                .filter(|&j| j != i)
                .filter_map(|j| m.get(i, j).map(|c| c * w[j]))
                .collect();
            let mean = terms.iter().sum::<f64>() / terms.len() as f64;
            (w[i] - mean).abs() / mean
        })
        .fold(0.0, f64::max)
}

/// `w_i^count` against the product of `c_ij * w_j`, both computed by direct multiplication.
pub fn geometric_fixed_point_residual(m: &PcMatrix, k: usize, w: &[f64]) -> f64 {
    let n = m.n();
    (0..k)
        .map(|i| {
            let terms: Vec<f64> = (0..n)
                .filter(|&j| j != i)
                .filter_map(|j| m.get(i, j).map(|c| c * w[j]))
                .collect();
            let lhs = w[i].powi(terms.len() as i32);
            let rhs: f64 = terms.iter().product();
            (lhs - rhs).abs() / rhs
        })
        .fold(0.0, f64::max)
}

/// Searches small, highly inconsistent reciprocal matrices (entries between
/// 1/9 and 9, one known alternative) until arithmetic HRE returns a
/// non-positive priority. Returns the seed and the instance.
pub fn find_non_positive_instance(max_seeds: u64) -> Option<(u64, PcMatrix, Partition)> {
    use hre_core::{solve_arithmetic, HreError};
    for seed in 0..max_seeds {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = rng.gen_range(4..=6);
        let mut rows = vec![vec![Some(1.0); n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let c: f64 = rng.gen_range(-9f64.ln()..9f64.ln()).exp();
                rows[i][j] = Some(c);
                rows[j][i] = Some(1.0 / c);
            }
        }
        let m = PcMatrix::new(rows).unwrap();
        let p = Partition::new(n - 1, vec![1.0]).unwrap();
        if let Err(HreError::NonPositiveSolution { .. }) = solve_arithmetic(&m, &p) {
            return Some((seed, m, p));
        }
    }
    None
}
