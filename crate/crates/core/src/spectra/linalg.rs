//! Dense complex linear algebra for the path tracker (LU with partial
//! pivoting, infinity-norm condition estimates) and a cyclic Jacobi
//! eigensolver for the symmetric matrix oracle. Dimensions here are tiny
//! (the number of tracked variables), so simplicity wins over blocking.

use num::complex::Complex64;

/// Row-major square complex matrix.
#[derive(Debug, Clone)]
pub struct CMat {
    pub n: usize,
    pub a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> CMat {
        CMat {
            n,
            a: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] = v;
    }

    /// Max row sum of moduli.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn lu(mut self) -> Option<Lu> {
        let n = self.n;
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let (pivot_row, pivot_norm) = (col..n)
                .map(|r| (r, self.at(r, col).norm()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if pivot_norm == 0.0 || !pivot_norm.is_finite() {
                return None;
            }
            if pivot_row != col {
                for j in 0..n {
                    let tmp = self.at(col, j);
                    self.set(col, j, self.at(pivot_row, j));
                    self.set(pivot_row, j, tmp);
                }
                perm.swap(col, pivot_row);
            }
            let pivot = self.at(col, col);
            for r in (col + 1)..n {
                let factor = self.at(r, col) / pivot;
                self.set(r, col, factor);
                for j in (col + 1)..n {
                    let v = self.at(r, j) - factor * self.at(col, j);
                    self.set(r, j, v);
                }
            }
        }
        Some(Lu { mat: self, perm })
    }
}

/// LU factors with the row permutation applied during elimination.
#[derive(Debug, Clone)]
pub struct Lu {
    mat: CMat,
    perm: Vec<usize>,
}

impl Lu {
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.mat.n;
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let yj = y[j];
                y[i] -= self.mat.at(i, j) * yj;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let yj = y[j];
                y[i] -= self.mat.at(i, j) * yj;
            }
            y[i] /= self.mat.at(i, i);
        }
        y
    }

    /// Infinity-norm of the inverse, built column by column. Fine at the
    /// dimensions the tracker uses.
    pub fn inverse_inf_norm(&self) -> f64 {
        let n = self.mat.n;
        let mut row_sums = vec![0.0f64; n];
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        for col in 0..n {
            e[col] = Complex64::new(1.0, 0.0);
            let x = self.solve(&e);
            e[col] = Complex64::new(0.0, 0.0);
            for (i, v) in x.iter().enumerate() {
                row_sums[i] += v.norm();
            }
        }
        row_sums.into_iter().fold(0.0, f64::max)
    }
}

/// Infinity-norm condition number; `f64::INFINITY` when singular.
pub fn condition_inf(mat: &CMat) -> f64 {
    let norm = mat.inf_norm();
    match mat.clone().lu() {
        Some(lu) => norm * lu.inverse_inf_norm(),
        None => f64::INFINITY,
    }
}

pub fn inf_norm_vec(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Cyclic Jacobi eigendecomposition of a symmetric real matrix. Returns
/// eigenvalues (unsorted) and the orthogonal eigenvector matrix stored as
/// columns: `vectors[i][j]` is component `i` of eigenvector `j`.
pub fn jacobi_symmetric(matrix: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let scale = a
        .iter()
        .flatten()
        .map(|x| x.abs())
        .fold(0.0f64, f64::max)
        .max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p][q].abs());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() <= 1e-18 * scale {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let values = (0..n).map(|i| a[i][i]).collect();
    (values, v)
}
