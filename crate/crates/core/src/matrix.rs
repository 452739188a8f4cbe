//! Pairwise-comparison matrices, the known/unknown split and rankings.
//!
//! A missing comparison is `None`. It is never encoded as zero or NaN, so a
//! corrupt value and an absent one stay distinguishable all the way down.

use crate::error::HreError;

/// Square matrix of positive comparisons `c[i][j]`, "how many times `i` is
/// preferred over `j`", with explicit missing entries.
///
/// Construction enforces: defined entries are finite and strictly positive,
/// the diagonal is exactly 1, and `(i, j)` is missing iff `(j, i)` is missing.
/// Reciprocity is *not* enforced here; see [`crate::diagnostics`].
#[derive(Debug, Clone, PartialEq)]
pub struct PcMatrix {
    n: usize,
    entries: Vec<Option<f64>>,
}

impl PcMatrix {
    pub fn new(rows: Vec<Vec<Option<f64>>>) -> Result<Self, HreError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(HreError::InvalidValue {
                    row: i,
                    col: row.len(),
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            entries.extend(row);
        }
        let m = PcMatrix { n, entries };
        m.validate()?;
        Ok(m)
    }

    /// Complete matrix with every entry defined.
    pub fn from_complete(rows: Vec<Vec<f64>>) -> Result<Self, HreError> {
        Self::new(rows.into_iter().map(|r| r.into_iter().map(Some).collect()).collect())
    }

    /// Consistent matrix `c[i][j] = v[i] / v[j]`.
    pub fn from_priorities(v: &[f64]) -> Result<Self, HreError> {
        Self::from_complete(v.iter().map(|vi| v.iter().map(|vj| vi / vj).collect()).collect())
    }

    fn validate(&self) -> Result<(), HreError> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let c = self.entries[i * n + j];
                if i == j {
                    if c != Some(1.0) {
                        return Err(HreError::InvalidValue {
                            row: i,
                            col: j,
                            message: format!("diagonal entry must be 1, got {c:?}"),
                        });
                    }
                    continue;
                }
                match c {
                    Some(v) if !(v.is_finite() && v > 0.0) => {
                        return Err(HreError::InvalidValue {
                            row: i,
                            col: j,
                            message: format!("comparison must be positive and finite, got {v}"),
                        });
                    }
                    Some(_) if self.entries[j * n + i].is_none() => {
                        return Err(HreError::AsymmetricMissing { row: i, col: j });
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` for a missing comparison.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.entries[i * self.n + j]
    }

    pub fn is_defined(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Off-diagonal defined comparisons in row `i`, as `(j, c_ij)`.
    pub fn defined_in_row(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (0..self.n)
            .filter(move |&j| j != i)
            .filter_map(move |j| self.get(i, j).map(|c| (j, c)))
    }

    pub fn rows(&self) -> Vec<Vec<Option<f64>>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[_]>::to_vec)
            .take(self.n)
            .collect()
    }

    /// Same matrix with rows and columns permuted: entry `(a, b)` of the result is
    /// entry `(order[a], order[b])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> PcMatrix {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for &oi in order {
            for &oj in order {
                entries.push(self.get(oi, oj));
            }
        }
        PcMatrix { n, entries }
    }

    /// Matrix with `(i, j)` and `(j, i)` both set to missing.
    pub fn with_missing_pair(&self, i: usize, j: usize) -> PcMatrix {
        assert_ne!(i, j, "diagonal cannot be missing");
        let mut out = self.clone();
        out.entries[i * self.n + j] = None;
        out.entries[j * self.n + i] = None;
        out
    }

    /// Replaces every lower-triangle entry by the reciprocal of its upper-triangle
    /// mirror. Missingness is left alone (it is already symmetric).
    pub fn force_reciprocal(&self) -> PcMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in (i + 1)..n {
                if let Some(c) = self.get(i, j) {
                    out.entries[j * n + i] = Some(1.0 / c);
                }
            }
        }
        out
    }

    /// Fills every missing `c_ij` with `w[i] / w[j]`.
    pub fn completed_with(&self, w: &[f64]) -> PcMatrix {
        assert_eq!(w.len(), self.n, "priority vector length mismatch");
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                if out.entries[i * n + j].is_none() {
                    out.entries[i * n + j] = Some(w[i] / w[j]);
                }
            }
        }
        out
    }
}

/// Split of the alternatives into `k` unknowns (indices `0..k`) followed by
/// knowns (indices `k..n`) whose priorities are fixed in advance.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    k: usize,
    known: Vec<f64>,
}

impl Partition {
    pub fn new(k: usize, known: Vec<f64>) -> Result<Self, HreError> {
        if k == 0 {
            return Err(HreError::InvalidPartition(
                "at least one alternative must be unknown".into(),
            ));
        }
        if known.is_empty() {
            return Err(HreError::InvalidPartition(
                "at least one alternative must have a known priority".into(),
            ));
        }
        if let Some((idx, &w)) = known.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w > 0.0)) {
            return Err(HreError::InvalidPartition(format!(
                "known priority of alternative {} must be positive and finite, got {w}",
                k + idx
            )));
        }
        Ok(Partition { k, known })
    }

    /// Number of unknown alternatives.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.k + self.known.len()
    }

    pub fn known(&self) -> &[f64] {
        &self.known
    }

    /// Priority of alternative `j`, which must be known (`j >= k`).
    #[inline]
    pub fn known_priority(&self, j: usize) -> f64 {
        self.known[j - self.k]
    }

    pub fn is_known(&self, j: usize) -> bool {
        j >= self.k
    }

    /// Same partition with every known priority multiplied by `gamma`.
    pub fn scaled(&self, gamma: f64) -> Result<Self, HreError> {
        Partition::new(self.k, self.known.iter().map(|w| w * gamma).collect())
    }

    pub(crate) fn check_against(&self, m: &PcMatrix) -> Result<(), HreError> {
        if self.n() != m.n() {
            return Err(HreError::InvalidPartition(format!(
                "partition covers {} alternatives but the matrix has {}",
                self.n(),
                m.n()
            )));
        }
        Ok(())
    }
}

/// Full priority vector. The first `k` entries are computed, the rest are the
/// known priorities copied verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    values: Vec<f64>,
    k: usize,
}

impl Ranking {
    pub(crate) fn assemble(unknown: Vec<f64>, partition: &Partition) -> Ranking {
        let k = unknown.len();
        let mut values = unknown;
        values.extend_from_slice(partition.known());
        Ranking { values, k }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn computed(&self) -> &[f64] {
        &self.values[..self.k]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Copy rescaled to sum to one. Known priorities change too.
    pub fn normalized(&self) -> Vec<f64> {
        let total: f64 = self.values.iter().sum();
        self.values.iter().map(|v| v / total).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric_missing() {
        let err = PcMatrix::new(vec![vec![Some(1.0), Some(3.0)], vec![None, Some(1.0)]]).unwrap_err();
        assert_eq!(err, HreError::AsymmetricMissing { row: 0, col: 1 });
    }

    #[test]
    fn rejects_bad_diagonal_and_values() {
        let diag = PcMatrix::from_complete(vec![vec![2.0, 1.0], vec![1.0, 1.0]]).unwrap_err();
        assert_eq!(diag.code(), "INVALID_VALUE");
        let neg = PcMatrix::from_complete(vec![vec![1.0, -1.0], vec![-1.0, 1.0]]).unwrap_err();
        assert_eq!(neg.code(), "INVALID_VALUE");
        let zero = PcMatrix::from_complete(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap_err();
        assert_eq!(zero.code(), "INVALID_VALUE");
        let nan = PcMatrix::from_complete(vec![vec![1.0, f64::NAN], vec![1.0, 1.0]]).unwrap_err();
        assert_eq!(nan.code(), "INVALID_VALUE");
        let ragged = PcMatrix::from_complete(vec![vec![1.0, 2.0], vec![1.0]]).unwrap_err();
        assert_eq!(ragged.code(), "INVALID_VALUE");
        let missing_diag = PcMatrix::new(vec![vec![None]]).unwrap_err();
        assert_eq!(missing_diag.code(), "INVALID_VALUE");
    }

    #[test]
    fn partition_bounds() {
        assert!(Partition::new(0, vec![1.0]).is_err());
        assert!(Partition::new(2, vec![]).is_err());
        assert!(Partition::new(1, vec![0.0]).is_err());
        assert!(Partition::new(1, vec![f64::INFINITY]).is_err());
        let p = Partition::new(2, vec![3.0, 4.0]).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.known_priority(3), 4.0);
    }

    #[test]
    fn permutation_and_completion() {
        let m = PcMatrix::from_priorities(&[4.0, 2.0, 1.0])
            .unwrap()
            .with_missing_pair(1, 2);
        let p = m.permuted(&[2, 0, 1]);
        assert_eq!(p.get(0, 1), Some(0.25));
        assert_eq!(p.get(0, 2), None);
        assert_eq!(p.get(2, 0), None);
        let filled = m.completed_with(&[4.0, 2.0, 1.0]);
        assert!(filled.is_complete());
        assert_eq!(filled.get(1, 2), Some(2.0));
        assert_eq!(filled.get(2, 1), Some(0.5));
    }

    #[test]
    fn force_reciprocal_uses_upper_triangle() {
        let m = PcMatrix::from_complete(vec![vec![1.0, 2.0], vec![0.6, 1.0]]).unwrap();
        assert_eq!(m.force_reciprocal().get(1, 0), Some(0.5));
    }
}
