use std::cmp::Ordering;

use super::{Matrix, MatrixError};
use crate::C64;

/// Relative subdiagonal deflation tolerance.
pub const DEFAULT_SCHUR_TOL: f64 = 1e-12;
/// Iteration budget per eigenvalue.
pub const DEFAULT_MAX_ITER: usize = 60;

/// `A = Q·T·Q*` with `Q` unitary and `T` upper triangular.
#[derive(Debug, Clone)]
pub struct SchurDecomposition {
    pub q: Matrix,
    pub t: Matrix,
}

impl SchurDecomposition {
    pub fn eigenvalues(&self) -> Vec<C64> {
        self.t.diagonal()
    }

    /// `‖Q·T·Q* − A‖_F`.
    pub fn reconstruction_error(&self, a: &Matrix) -> f64 {
        let qt = &self.q * &self.t;
        (&(&qt * &self.q.adjoint()) - a).frobenius_norm()
    }

    /// `‖Q·Q* − I‖_F`.
    pub fn unitarity_error(&self) -> f64 {
        let n = self.q.rows();
        (&(&self.q * &self.q.adjoint()) - &Matrix::identity(n)).frobenius_norm()
    }
}

struct Work {
    n: usize,
    h: Vec<C64>,
    z: Vec<C64>,
}

impl Work {
    #[inline]
    fn at(&self, i: usize, j: usize) -> C64 {
        self.h[i * self.n + j]
    }

    /// `H ← G·H` on rows (i, i+1), columns `cols..n`.
    fn rotate_rows(&mut self, i: usize, c: f64, s: C64, from_col: usize) {
        let n = self.n;
        for col in from_col..n {
            let a = self.h[i * n + col];
            let b = self.h[(i + 1) * n + col];
            self.h[i * n + col] = a * c + s * b;
            self.h[(i + 1) * n + col] = -s.conj() * a + b * c;
        }
    }

    /// `H ← H·G*` on columns (i, i+1) for rows `0..=to_row`; same for `Z`.
    fn rotate_cols(&mut self, i: usize, c: f64, s: C64, to_row: usize) {
        let n = self.n;
        for r in 0..=to_row {
            let a = self.h[r * n + i];
            let b = self.h[r * n + i + 1];
            self.h[r * n + i] = a * c + b * s.conj();
            self.h[r * n + i + 1] = -a * s + b * c;
        }
        for r in 0..n {
            let a = self.z[r * n + i];
            let b = self.z[r * n + i + 1];
            self.z[r * n + i] = a * c + b * s.conj();
            self.z[r * n + i + 1] = -a * s + b * c;
        }
    }
}

/// Rotation `[[c, s], [−s̄, c]]` mapping `(a, b)` to `(r, 0)`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    let an = a.norm();
    if an == 0.0 {
        return (0.0, C64::new(1.0, 0.0));
    }
    let r = an.hypot(bn);
    (an / r, (a / an) * b.conj() / r)
}

fn reduce_to_hessenberg(w: &mut Work) {
    let n = w.n;
    for k in 0..n.saturating_sub(2) {
        let x: Vec<C64> = (k + 1..n).map(|i| w.at(i, k)).collect();
        let tail: f64 = x[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let xnorm = (x[0].norm_sqr() + tail).sqrt();
        let phase = if x[0].norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            x[0] / x[0].norm()
        };
        let mut u = x;
        u[0] += phase * xnorm;
        let unorm2: f64 = u.iter().map(|z| z.norm_sqr()).sum();
        let m = u.len();
        // P = I − 2uu*/(u*u) on indices k+1..n; H ← P·H·P, Z ← Z·P.
        for col in 0..n {
            let dot: C64 = (0..m).map(|i| u[i].conj() * w.h[(k + 1 + i) * n + col]).sum();
            let f = dot * (2.0 / unorm2);
            for i in 0..m {
                w.h[(k + 1 + i) * n + col] -= u[i] * f;
            }
        }
        for row in 0..n {
            let dot: C64 = (0..m).map(|i| w.h[row * n + k + 1 + i] * u[i]).sum();
            let f = dot * (2.0 / unorm2);
            for i in 0..m {
                w.h[row * n + k + 1 + i] -= f * u[i].conj();
            }
        }
        for row in 0..n {
            let dot: C64 = (0..m).map(|i| w.z[row * n + k + 1 + i] * u[i]).sum();
            let f = dot * (2.0 / unorm2);
            for i in 0..m {
                w.z[row * n + k + 1 + i] -= f * u[i].conj();
            }
        }
        for i in k + 2..n {
            w.h[i * n + k] = C64::new(0.0, 0.0);
        }
    }
}

/// Upper Hessenberg matrix unitarily similar to `a`.
pub fn hessenberg(a: &Matrix) -> Result<Matrix, MatrixError> {
    let n = a.require_square("hessenberg")?;
    let mut w = Work {
        n,
        h: a.as_slice().to_vec(),
        z: Matrix::identity(n).into_raw(),
    };
    reduce_to_hessenberg(&mut w);
    Ok(Matrix::from_raw(n, n, w.h))
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5).powi(2) + b * c;
    let root = disc.sqrt();
    let l1 = half_tr + root;
    let l2 = half_tr - root;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Complex Schur decomposition.
///
/// `tol` is the relative deflation threshold on subdiagonal entries and
/// `max_iter` the QR sweep budget per eigenvalue.
pub fn schur(a: &Matrix, tol: f64, max_iter: usize) -> Result<SchurDecomposition, MatrixError> {
    let n = a.require_square("schur")?;
    assert!(max_iter > 0, "max_iter must be positive");
    let mut w = Work {
        n,
        h: a.as_slice().to_vec(),
        z: Matrix::identity(n).into_raw(),
    };
    reduce_to_hessenberg(&mut w);

    let norm = a.frobenius_norm();
    let floor = f64::EPSILON * norm;
    let budget = max_iter * n.max(1);
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n.saturating_sub(1);

    while hi > 0 {
        let mut lo = 0;
        for k in (1..=hi).rev() {
            let sub = w.at(k, k - 1).norm();
            let mut local = w.at(k, k).norm() + w.at(k - 1, k - 1).norm();
            if local == 0.0 {
                local = norm;
            }
            if sub <= tol * local || sub <= floor {
                w.h[k * n + k - 1] = C64::new(0.0, 0.0);
                lo = k;
                break;
            }
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }

        total += 1;
        since_deflation += 1;
        if total > budget {
            let residual = (1..n).map(|k| w.at(k, k - 1).norm()).fold(0.0, f64::max);
            return Err(MatrixError::NoConvergence {
                iterations: total - 1,
                residual,
            });
        }

        let sigma = if since_deflation % 11 == 10 {
            let s = w.at(hi, hi - 1).norm() + if hi >= 2 { w.at(hi - 1, hi - 2).norm() } else { 0.0 };
            w.at(hi, hi) + C64::new(0.75 * s, 0.5 * s)
        } else {
            wilkinson_shift(
                w.at(hi - 1, hi - 1),
                w.at(hi - 1, hi),
                w.at(hi, hi - 1),
                w.at(hi, hi),
            )
        };

        let (c, s) = givens(w.at(lo, lo) - sigma, w.at(lo + 1, lo));
        w.rotate_rows(lo, c, s, lo);
        w.rotate_cols(lo, c, s, (lo + 2).min(hi));
        for k in lo + 1..hi {
            let (c, s) = givens(w.at(k, k - 1), w.at(k + 1, k - 1));
            w.rotate_rows(k, c, s, k - 1);
            w.h[(k + 1) * n + k - 1] = C64::new(0.0, 0.0);
            w.rotate_cols(k, c, s, (k + 2).min(hi));
        }
    }

    for i in 1..n {
        for j in 0..i {
            w.h[i * n + j] = C64::new(0.0, 0.0);
        }
    }
    Ok(SchurDecomposition {
        q: Matrix::from_raw(n, n, w.z),
        t: Matrix::from_raw(n, n, w.h),
    })
}

pub fn schur_default(a: &Matrix) -> Result<SchurDecomposition, MatrixError> {
    schur(a, DEFAULT_SCHUR_TOL, DEFAULT_MAX_ITER)
}

fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let mag = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(digits - 1 - mag);
    (x * scale).round() / scale + 0.0
}

/// Total order on complex values used for canonical output.
pub fn canonical_cmp(a: &C64, b: &C64) -> Ordering {
    let ka = (round_sig(a.re, 12), round_sig(a.im, 12));
    let kb = (round_sig(b.re, 12), round_sig(b.im, 12));
    ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
}

/// Sorts lexicographically by `(re, im)` rounded to 12 significant digits.
pub fn canonical_sort(values: &mut [C64]) {
    values.sort_by(canonical_cmp);
}

/// Eigenvalues with multiplicity, in canonical order.
pub fn eigenvalues(a: &Matrix) -> Result<Vec<C64>, MatrixError> {
    let mut ev = schur_default(a)?.eigenvalues();
    canonical_sort(&mut ev);
    Ok(ev)
}
