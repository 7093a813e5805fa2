use super::PolyError;
use crate::matkernel::{determinant, schur_default, Matrix};
use crate::C64;

/// Dense univariate polynomial, constant term first. Trailing zero
/// coefficients are trimmed; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct UniPoly {
    coeffs: Vec<C64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// `Π (t − r_i)`, monic.
    pub fn from_roots(roots: &[C64]) -> Self {
        let mut c = vec![C64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![C64::new(0.0, 0.0); c.len() + 1];
            for (k, &a) in c.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            c = next;
        }
        UniPoly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn leading(&self) -> Option<C64> {
        self.coeffs.last().copied()
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn evaluate(&self, t: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * t + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, s: C64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn monic(&self) -> Option<UniPoly> {
        self.leading().map(|l| self.scale(l.inv()))
    }

    /// Largest coefficient difference over the larger maximal coefficient.
    pub fn relative_distance(&self, other: &UniPoly) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let diff = (0..len)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max);
        let scale = self.max_coeff().max(other.max_coeff());
        if scale == 0.0 {
            0.0
        } else {
            diff / scale
        }
    }
}

/// All complex roots with multiplicity, from the eigenvalues of the
/// companion matrix, followed by a guarded Newton polish.
pub fn uni_roots(q: &UniPoly) -> Result<Vec<C64>, PolyError> {
    let n = match q.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => {
            return Err(PolyError::DegreeTooLow {
                op: "uni_roots",
                degree: 0,
                required: 1,
            })
        }
        Some(n) => n,
    };
    let lead = q.leading().expect("nonzero");
    if n == 1 {
        return Ok(vec![-q.coeff(0) / lead]);
    }
    let companion = Matrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -q.coeff(i) / lead
        } else if i == j + 1 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let mut roots = schur_default(&companion)?.eigenvalues();
    let dq = q.derivative();
    for r in roots.iter_mut() {
        let mut best = q.evaluate(*r).norm();
        for _ in 0..3 {
            let d = dq.evaluate(*r);
            if d.norm() == 0.0 || best == 0.0 {
                break;
            }
            let cand = *r - q.evaluate(*r) / d;
            let val = q.evaluate(cand).norm();
            if !(val < best) {
                break;
            }
            *r = cand;
            best = val;
        }
    }
    Ok(roots)
}

/// Discriminant from the Sylvester resultant of `q` and `q′`:
/// `disc(q) = (−1)^{n(n−1)/2} · Res(q, q′) / a_n`.
pub fn discriminant(q: &UniPoly) -> Result<C64, PolyError> {
    let n = q.degree().unwrap_or(0);
    if n < 2 {
        return Err(PolyError::DegreeTooLow {
            op: "discriminant",
            degree: n,
            required: 2,
        });
    }
    let dq = q.derivative();
    let m = 2 * n - 1;
    // rows 0..n-1: shifts of q (highest coefficient first); rows n-1..: shifts of q′
    let syl = Matrix::from_fn(m, m, |i, j| {
        if i < n - 1 {
            let k = j as isize - i as isize;
            if (0..=n as isize).contains(&k) {
                q.coeff(n - k as usize)
            } else {
                C64::new(0.0, 0.0)
            }
        } else {
            let r = i - (n - 1);
            let k = j as isize - r as isize;
            if (0..n as isize).contains(&k) {
                dq.coeff(n - 1 - k as usize)
            } else {
                C64::new(0.0, 0.0)
            }
        }
    });
    let res = determinant(&syl)?;
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(res * sign / q.leading().expect("nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_re(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn root_examples() {
        let r = sorted_re(uni_roots(&UniPoly::from_real(&[-1.0, 0.0, 1.0])).unwrap());
        assert!((r[0] + 1.0).norm() < 1e-14 && (r[1] - 1.0).norm() < 1e-14);

        let r = uni_roots(&UniPoly::from_real(&[0.0, 0.0, 1.0])).unwrap();
        assert!(r.iter().all(|z| z.norm() < 1e-14));

        let r = sorted_re(uni_roots(&UniPoly::from_real(&[-6.0, 11.0, -6.0, 1.0])).unwrap());
        for (z, e) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((z - e).norm() < 1e-12, "{z}");
        }
    }

    #[test]
    fn root_errors() {
        assert_eq!(uni_roots(&UniPoly::zero()), Err(PolyError::ZeroPolynomial));
        assert!(matches!(
            uni_roots(&UniPoly::from_real(&[3.0])),
            Err(PolyError::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant(&UniPoly::from_real(&[0.0, 0.0, 1.0])).unwrap();
        assert!(d.norm() < 1e-15);
        let d = discriminant(&UniPoly::from_real(&[-1.0, 0.0, 1.0])).unwrap();
        assert!((d - 4.0).norm() < 1e-13);
        let d = discriminant(&UniPoly::from_real(&[1.0, 1.0, 1.0])).unwrap();
        assert!((d + 3.0).norm() < 1e-13);
        assert!(discriminant(&UniPoly::from_real(&[1.0, 1.0])).is_err());
    }

    #[test]
    fn discriminant_matches_root_product() {
        // disc = a^{2n-2} Π_{i<j} (r_i − r_j)^2
        let roots = [
            C64::new(1.0, 0.5),
            C64::new(-0.3, 2.0),
            C64::new(0.7, -1.1),
            C64::new(2.0, 0.0),
        ];
        let a = C64::new(1.5, -0.5);
        let q = UniPoly::from_roots(&roots).scale(a);
        let mut expect = a.powu(6);
        for i in 0..4 {
            for j in i + 1..4 {
                expect *= (roots[i] - roots[j]).powu(2);
            }
        }
        let d = discriminant(&q).unwrap();
        assert!((d - expect).norm() <= 1e-10 * expect.norm(), "{d} vs {expect}");
    }

    #[test]
    fn zero_trimming() {
        let p = UniPoly::new(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(UniPoly::new(vec![C64::new(0.0, 0.0)]).degree(), None);
    }
}
