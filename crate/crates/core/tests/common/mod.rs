#![allow(dead_code)]

use higgs_cover::cover::match_sheets;
use higgs_cover::matkernel::Matrix;
use higgs_cover::poly::{all_monomials, MultiPoly};
use higgs_cover::seed::complex_gaussian;
use higgs_cover::C64;
use rand::Rng;

pub fn gaussian_matrix<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    Matrix::from_fn(n, n, |_, _| complex_gaussian(rng))
}

/// Dense random homogeneous polynomial with Gaussian coefficients.
pub fn random_multipoly<R: Rng>(num_vars: usize, degree: u32, rng: &mut R) -> MultiPoly {
    let terms: Vec<(Vec<u32>, C64)> = all_monomials(num_vars, degree)
        .into_iter()
        .map(|m| (m.exponents().to_vec(), complex_gaussian(rng)))
        .collect();
    MultiPoly::from_terms(num_vars, degree, terms).unwrap()
}

pub fn gaussian_vec<R: Rng>(len: usize, rng: &mut R) -> Vec<C64> {
    (0..len).map(|_| complex_gaussian(rng)).collect()
}

/// Bottleneck matching distance between two multisets of points of `C^d`.
pub fn multiset_distance(a: &[Vec<C64>], b: &[Vec<C64>]) -> f64 {
    match_sheets(a, b).unwrap().max_distance
}

pub fn scalars(v: &[C64]) -> Vec<Vec<C64>> {
    v.iter().map(|&x| vec![x]).collect()
}
