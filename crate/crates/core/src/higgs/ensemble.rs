//! Random commuting tuples with planted joint spectra.

use rand::Rng;

use super::{HiggsError, HiggsTuple, DEFAULT_COMMUTE_TOL};
use crate::matkernel::{schur_default, Matrix};
use crate::seed::complex_gaussian;
use crate::C64;

/// Haar-like random unitary: the Schur vectors of a complex Gaussian matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix {
    let g = Matrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    schur_default(&g).expect("Gaussian matrices converge").q
}

/// `U·diag(σ)·V` with `σ` log-uniform in `[1, cond]`, so the 2-norm
/// condition number is at most `cond`.
pub fn random_well_conditioned<R: Rng + ?Sized>(n: usize, cond: f64, rng: &mut R) -> Matrix {
    let u = random_unitary(n, rng);
    let v = random_unitary(n, rng);
    let sigma: Vec<C64> = (0..n)
        .map(|_| C64::new(cond.powf(rng.gen::<f64>()), 0.0))
        .collect();
    &(&u * &Matrix::diag(&sigma)) * &v
}

/// `Φ_j = g·diag(w_j)·g⁻¹` together with the planted spectrum.
#[derive(Debug, Clone)]
pub struct DiagonalizableSample {
    pub tuple: HiggsTuple,
    /// `planted[a][j] = w^a_j`.
    pub planted: Vec<Vec<C64>>,
    pub gauge: Matrix,
}

impl DiagonalizableSample {
    /// Eigenvalue coordinates uniform in the square `[−1, 1] + i[−1, 1]`.
    pub fn draw<R: Rng + ?Sized>(n: usize, d: usize, cond: f64, rng: &mut R) -> Result<Self, HiggsError> {
        let planted: Vec<Vec<C64>> = (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect()
            })
            .collect();
        let gauge = random_well_conditioned(n, cond, rng);
        let base: Vec<Matrix> = (0..d)
            .map(|j| Matrix::diag(&planted.iter().map(|w| w[j]).collect::<Vec<_>>()))
            .collect();
        let diag = HiggsTuple::new(base, DEFAULT_COMMUTE_TOL)?;
        let tuple = diag.conjugated(&gauge)?;
        if !tuple.is_certified() {
            return Err(HiggsError::NotCommuting {
                max_commutator: tuple.certification().max_commutator,
                tol: DEFAULT_COMMUTE_TOL,
            });
        }
        Ok(DiagonalizableSample {
            tuple,
            planted,
            gauge,
        })
    }
}
