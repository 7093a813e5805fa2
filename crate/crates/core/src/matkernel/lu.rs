use super::{Matrix, MatrixError};
use crate::C64;

/// LU factorization with partial (row) pivoting, `P·A = L·U`.
#[derive(Debug, Clone)]
pub struct LuFactors {
    n: usize,
    lu: Vec<C64>,
    perm: Vec<usize>,
    swaps: usize,
    singular: bool,
}

impl LuFactors {
    pub fn new(a: &Matrix) -> Result<Self, MatrixError> {
        let n = a.require_square("lu")?;
        let mut lu = a.as_slice().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        let mut singular = false;
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu[i * n + k].norm()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if pmax == 0.0 {
                singular = true;
                continue;
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let pivot = lu[k * n + k];
            for i in k + 1..n {
                let f = lu[i * n + k] / pivot;
                lu[i * n + k] = f;
                if f == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in k + 1..n {
                    let u = lu[k * n + j];
                    lu[i * n + j] -= f * u;
                }
            }
        }
        Ok(LuFactors {
            n,
            lu,
            perm,
            swaps,
            singular,
        })
    }

    pub fn determinant(&self) -> C64 {
        if self.singular {
            return C64::new(0.0, 0.0);
        }
        let mut d: C64 = (0..self.n).map(|i| self.lu[i * self.n + i]).product();
        if self.swaps % 2 == 1 {
            d = -d;
        }
        d
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Solves `A·x = b`.
    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>, MatrixError> {
        if self.singular {
            return Err(MatrixError::Singular);
        }
        let n = self.n;
        assert_eq!(b.len(), n, "right-hand side length");
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s;
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[i * n + j] * x[j];
            }
            x[i] = s / self.lu[i * n + i];
        }
        Ok(x)
    }

    /// Solves `A^H·x = b`.
    pub fn solve_adjoint(&self, b: &[C64]) -> Result<Vec<C64>, MatrixError> {
        if self.singular {
            return Err(MatrixError::Singular);
        }
        let n = self.n;
        // A = P^T L U, so A^H = U^H L^H P.
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for j in 0..i {
                s -= self.lu[j * n + i].conj() * y[j];
            }
            y[i] = s / self.lu[i * n + i].conj();
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for j in i + 1..n {
                s -= self.lu[j * n + i].conj() * y[j];
            }
            y[i] = s;
        }
        let mut x = vec![C64::new(0.0, 0.0); n];
        for (i, &p) in self.perm.iter().enumerate() {
            x[p] = y[i];
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let n = self.n;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            cols.push(self.solve(&e)?);
        }
        Ok(Matrix::from_fn(n, n, |i, j| cols[j][i]))
    }

    /// Hager–Higham estimate of `‖A⁻¹‖₁`, multiplied by `‖A‖₁` of the source.
    pub fn condition_estimate(&self, a: &Matrix) -> f64 {
        if self.singular {
            return f64::INFINITY;
        }
        let n = self.n;
        let norm_a = (0..n)
            .map(|j| (0..n).map(|i| a.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max);
        let mut x = vec![C64::new(1.0 / n as f64, 0.0); n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = match self.solve(&x) {
                Ok(y) => y,
                Err(_) => return f64::INFINITY,
            };
            let new_est: f64 = y.iter().map(|z| z.norm()).sum();
            let xi: Vec<C64> = y
                .iter()
                .map(|z| {
                    let r = z.norm();
                    if r == 0.0 {
                        C64::new(1.0, 0.0)
                    } else {
                        z / r
                    }
                })
                .collect();
            let zv = match self.solve_adjoint(&xi) {
                Ok(z) => z,
                Err(_) => return f64::INFINITY,
            };
            let (jmax, zmax) = zv
                .iter()
                .enumerate()
                .map(|(j, z)| (j, z.re))
                .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
            let ztx: f64 = zv.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
            if new_est <= est || zmax <= ztx {
                est = est.max(new_est);
                break;
            }
            est = new_est;
            x = vec![C64::new(0.0, 0.0); n];
            x[jmax] = C64::new(1.0, 0.0);
        }
        est * norm_a
    }
}

/// Determinant via LU with partial pivoting.
pub fn determinant(a: &Matrix) -> Result<C64, MatrixError> {
    Ok(LuFactors::new(a)?.determinant())
}
