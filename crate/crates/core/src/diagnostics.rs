//! Structural checks the solvers rely on: reciprocity, triad consistency,
//! per-row missing counts and reachability of known alternatives.

use std::collections::VecDeque;

use serde::Serialize;

use crate::matrix::{Partition, PcMatrix};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A defined pair `{i, j}` (with `i < j`) whose product strays from 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReciprocityViolation {
    pub i: usize,
    pub j: usize,
    pub c_ij: f64,
    pub c_ji: f64,
}

/// A fully defined triad `i < j < k` where `c_ij` differs from `c_ik * c_kj`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriadDeviation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `|c_ij - c_ik * c_kj| / c_ij`
    pub deviation: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct TriadReport {
    /// Number of triads with all three comparisons defined.
    pub examined: usize,
    pub deviations: Vec<TriadDeviation>,
}

impl TriadReport {
    pub fn is_consistent(&self) -> bool {
        self.deviations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Connectivity {
    pub ok: bool,
    /// Unknown alternatives with no path to a known one, ascending.
    pub isolated_unknowns: Vec<usize>,
}

/// Everything [`diagnose`] finds about a matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub reciprocity_violations: Vec<ReciprocityViolation>,
    pub undefined_counts: Vec<usize>,
    /// `None` when no partition was supplied.
    pub connectivity: Option<Connectivity>,
    pub triads: TriadReport,
}

impl Diagnostics {
    /// Reciprocity violations, triad deviations or a failed connectivity check.
    pub fn has_findings(&self) -> bool {
        !self.reciprocity_violations.is_empty()
            || !self.triads.is_consistent()
            || self.connectivity.as_ref().is_some_and(|c| !c.ok)
    }
}

pub fn validate_reciprocity(m: &PcMatrix, tol: f64) -> Vec<ReciprocityViolation> {
    let n = m.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if let (Some(c_ij), Some(c_ji)) = (m.get(i, j), m.get(j, i)) {
                if (c_ij * c_ji - 1.0).abs() > tol {
                    out.push(ReciprocityViolation { i, j, c_ij, c_ji });
                }
            }
        }
    }
    out
}

pub fn check_consistency(m: &PcMatrix, tol: f64) -> TriadReport {
    let n = m.n();
    let mut report = TriadReport::default();
    for i in 0..n {
        for j in (i + 1)..n {
            let Some(c_ij) = m.get(i, j) else { continue };
            for k in (j + 1)..n {
                let (Some(c_ik), Some(c_kj)) = (m.get(i, k), m.get(k, j)) else {
                    continue;
                };
                report.examined += 1;
                let deviation = (c_ij - c_ik * c_kj).abs() / c_ij;
                if deviation > tol {
                    report.deviations.push(TriadDeviation { i, j, k, deviation });
                }
            }
        }
    }
    report
}

/// `s_i`: missing off-diagonal cells in each row.
pub fn undefined_counts(m: &PcMatrix) -> Vec<usize> {
    let n = m.n();
    (0..n)
        .map(|i| (0..n).filter(|&j| j != i && !m.is_defined(i, j)).count())
        .collect()
}

/// Breadth-first search from every known alternative over defined comparisons.
/// An unknown passes when it is reached and has at least one defined comparison.
pub fn check_connectivity(m: &PcMatrix, p: &Partition) -> Connectivity {
    let n = m.n();
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = (p.k()..n).collect();
    for &j in &queue {
        reached[j] = true;
    }
    while let Some(v) = queue.pop_front() {
        for (u, _) in m.defined_in_row(v) {
            if !reached[u] {
                reached[u] = true;
                queue.push_back(u);
            }
        }
    }
    let isolated_unknowns: Vec<usize> = (0..p.k().min(n))
        .filter(|&i| !reached[i] || m.defined_in_row(i).next().is_none())
        .collect();
    Connectivity {
        ok: isolated_unknowns.is_empty(),
        isolated_unknowns,
    }
}

/// Comparisons between two known alternatives that disagree with the ratio of
/// their priorities by more than `tol` (relative). The solvers ignore these
/// comparisons; this is for warnings only.
pub fn known_pair_mismatches(m: &PcMatrix, p: &Partition, tol: f64) -> Vec<(usize, usize, f64)> {
    let n = m.n();
    let mut out = Vec::new();
    for i in p.k()..n {
        for j in (i + 1)..n {
            if let Some(c) = m.get(i, j) {
                let implied = p.known_priority(i) / p.known_priority(j);
                if ((c - implied) / implied).abs() > tol {
                    out.push((i, j, c));
                }
            }
        }
    }
    out
}

pub fn diagnose(m: &PcMatrix, p: Option<&Partition>, tol: f64) -> Diagnostics {
    Diagnostics {
        reciprocity_violations: validate_reciprocity(m, tol),
        undefined_counts: undefined_counts(m),
        connectivity: p.map(|p| check_connectivity(m, p)),
        triads: check_consistency(m, tol),
    }
}
