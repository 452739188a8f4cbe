//! Dense Gaussian elimination with partial pivoting.

use thiserror::Error;

/// Square system `matrix * x = rhs`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    dim: usize,
    matrix: Vec<f64>,
    rhs: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("matrix is singular: pivot {pivot:e} in column {column} is below {threshold:e}")]
pub struct Singular {
    pub column: usize,
    pub pivot: f64,
    pub threshold: f64,
}

impl LinearSystem {
    /// Panics if the shapes disagree or an entry is not finite.
    pub fn new(rows: Vec<Vec<f64>>, rhs: Vec<f64>) -> Self {
        let dim = rows.len();
        assert_eq!(rhs.len(), dim, "right-hand side length mismatch");
        let mut matrix = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix is not square");
            matrix.extend(row);
        }
        assert!(
            matrix.iter().chain(&rhs).all(|v| v.is_finite()),
            "linear system entries must be finite"
        );
        LinearSystem { dim, matrix, rhs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[i * self.dim + j]
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.matrix
            .chunks(self.dim.max(1))
            .map(<[_]>::to_vec)
            .take(self.dim)
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `matrix * x`
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }

    /// `max_i |(matrix * x - rhs)_i|`
    pub fn residual_inf(&self, x: &[f64]) -> f64 {
        self.apply(x)
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Default pivot threshold: `1e-12 * ||M||_inf`.
    pub fn default_pivot_tol(&self) -> f64 {
        1e-12 * self.norm_inf()
    }

    pub fn solve(&self) -> Result<Vec<f64>, Singular> {
        self.solve_with(self.default_pivot_tol())
    }

    /// Fails as soon as the chosen pivot has magnitude below `pivot_tol`.
    pub fn solve_with(&self, pivot_tol: f64) -> Result<Vec<f64>, Singular> {
        let n = self.dim;
        let mut a = self.matrix.clone();
        let mut b = self.rhs.clone();

        for col in 0..n {
            let (pivot_row, pivot) = (col..n)
                .map(|r| (r, a[r * n + col]))
                .fold(
                    (col, 0.0_f64),
                    |best, (r, v)| if v.abs() > best.1.abs() { (r, v) } else { best },
                );
            // a zero threshold still rejects an exactly zero pivot
            if !(pivot.abs() > pivot_tol) {
                return Err(Singular {
                    column: col,
                    pivot: pivot.abs(),
                    threshold: pivot_tol,
                });
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                b.swap(col, pivot_row);
            }
            for r in (col + 1)..n {
                let factor = a[r * n + col] / pivot;
                if factor == 0.0 {
                    continue;
                }
                a[r * n + col] = 0.0;
                for j in (col + 1)..n {
                    a[r * n + j] -= factor * a[col * n + j];
                }
                b[r] -= factor * b[col];
            }
        }

        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let tail: f64 = ((i + 1)..n).map(|j| a[i * n + j] * x[j]).sum();
            x[i] = (b[i] - tail) / a[i * n + i];
        }
        Ok(x)
    }
}
