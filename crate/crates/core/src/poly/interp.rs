use rayon::prelude::*;

use super::multi::{all_monomials, Monomial, MultiPoly, PRUNE_REL};
use super::PolyError;
use crate::matkernel::{LuFactors, Matrix};
use crate::seed::{rng_for, unit_circle};
use crate::C64;

#[derive(Debug, Clone)]
pub struct InterpolationOptions {
    pub seed: u64,
    /// Extra held-out nodes, as a fraction of the monomial count.
    pub holdout_fraction: f64,
    /// Held-out residual bound, relative to the largest oracle value seen.
    pub residual_tol: f64,
    /// Condition estimate above which the node set is redrawn once.
    pub max_condition: f64,
    /// Lower bound on the residual scale, for oracles whose values may all
    /// sit at rounding level (e.g. a determinant that vanishes identically).
    pub value_floor: f64,
}

impl Default for InterpolationOptions {
    fn default() -> Self {
        InterpolationOptions {
            seed: 0x5eed,
            holdout_fraction: 0.25,
            residual_tol: 1e-8,
            max_condition: 1e10,
            value_floor: 0.0,
        }
    }
}

/// Random points of the unit torus `|x_i| = 1` (the distinguished boundary
/// of the unit polydisc); monomials are orthonormal there.
pub fn interpolation_nodes(num_vars: usize, count: usize, seed: u64, attempt: u64) -> Vec<Vec<C64>> {
    let mut rng = rng_for(seed, "interpolation-nodes", attempt);
    (0..count)
        .map(|_| (0..num_vars).map(|_| unit_circle(&mut rng)).collect())
        .collect()
}

pub fn interpolate_homogeneous<F>(num_vars: usize, degree: u32, oracle: F) -> Result<MultiPoly, PolyError>
where
    F: Fn(&[C64]) -> C64 + Sync,
{
    interpolate_homogeneous_with(num_vars, degree, oracle, &InterpolationOptions::default())
}

/// Recovers the homogeneous polynomial of the given degree that agrees with
/// `oracle` on `binom(degree + num_vars − 1, degree)` nodes, then certifies
/// it on held-out nodes. The oracle is evaluated concurrently.
pub fn interpolate_homogeneous_with<F>(
    num_vars: usize,
    degree: u32,
    oracle: F,
    opts: &InterpolationOptions,
) -> Result<MultiPoly, PolyError>
where
    F: Fn(&[C64]) -> C64 + Sync,
{
    assert!(num_vars >= 1, "num_vars must be positive");
    let monomials = all_monomials(num_vars, degree);
    let m = monomials.len();
    let holdout = ((m as f64 * opts.holdout_fraction).ceil() as usize).max(1);

    let mut last_condition = f64::INFINITY;
    for attempt in 0..2 {
        let nodes = interpolation_nodes(num_vars, m + holdout, opts.seed, attempt);
        let values: Vec<C64> = nodes.par_iter().map(|x| oracle(x)).collect();
        if values.iter().any(|v| !v.is_finite()) {
            return Err(PolyError::NonFinite);
        }
        let vander = vandermonde(&monomials, &nodes[..m], degree);
        let lu = LuFactors::new(&vander)?;
        let cond = lu.condition_estimate(&vander);
        last_condition = cond;
        if !(cond <= opts.max_condition) {
            continue;
        }
        let coeffs = lu.solve(&values[..m])?;
        let poly = MultiPoly::from_terms(
            num_vars,
            degree,
            monomials
                .iter()
                .zip(&coeffs)
                .map(|(mono, &c)| (mono.exponents().to_vec(), c)),
        )?
        .pruned(PRUNE_REL);

        let scale = values
            .iter()
            .map(|v| v.norm())
            .fold(opts.value_floor, f64::max);
        let residual = nodes[m..]
            .iter()
            .zip(&values[m..])
            .map(|(x, &v)| (poly.evaluate(x).expect("node length") - v).norm())
            .fold(0.0, f64::max);
        let rel = if scale == 0.0 { residual } else { residual / scale };
        if rel > opts.residual_tol {
            return Err(PolyError::InconsistentOracle {
                degree,
                residual: rel,
                tol: opts.residual_tol,
            });
        }
        return Ok(poly);
    }
    Err(PolyError::SingularInterpolation {
        condition: last_condition,
    })
}

fn vandermonde(monomials: &[Monomial], nodes: &[Vec<C64>], degree: u32) -> Matrix {
    let m = monomials.len();
    let mut data = Vec::with_capacity(m * m);
    for x in nodes {
        let powers: Vec<Vec<C64>> = x
            .iter()
            .map(|&xi| {
                let mut p = Vec::with_capacity(degree as usize + 1);
                let mut acc = C64::new(1.0, 0.0);
                for _ in 0..=degree {
                    p.push(acc);
                    acc *= xi;
                }
                p
            })
            .collect();
        for mono in monomials {
            data.push(
                mono.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| powers[i][e as usize])
                    .product(),
            );
        }
    }
    Matrix::new(m, m, data).expect("finite nodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matkernel::determinant;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn recovers_simple_product() {
        let p = interpolate_homogeneous(2, 2, |x| x[0] * x[1]).unwrap();
        let expect = MultiPoly::from_terms(2, 2, [(vec![1, 1], c(1.0))]).unwrap();
        assert!(p.relative_distance(&expect) < 1e-12, "{}", p.to_canonical_text());
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn recovers_diagonal_pencil() {
        let m = Matrix::diag_real(&[1.0, 2.0]);
        let p = interpolate_homogeneous(2, 2, |x| {
            determinant(&m.scale(x[1]).shift(x[0])).unwrap()
        })
        .unwrap();
        let expect = MultiPoly::from_terms(
            2,
            2,
            [(vec![2, 0], c(1.0)), (vec![1, 1], c(3.0)), (vec![0, 2], c(2.0))],
        )
        .unwrap();
        assert!(p.relative_distance(&expect) < 1e-12);
    }

    #[test]
    fn degree_zero_is_constant() {
        let p = interpolate_homogeneous(3, 0, |_| C64::new(2.0, -1.0)).unwrap();
        assert_eq!(p, MultiPoly::constant(3, C64::new(2.0, -1.0)));
    }

    #[test]
    fn rejects_non_homogeneous_oracle() {
        // x0^2 + x1 is not homogeneous of degree 2
        let err = interpolate_homogeneous(2, 2, |x| x[0] * x[0] + x[1]).unwrap_err();
        assert!(matches!(err, PolyError::InconsistentOracle { .. }), "{err:?}");
    }

    #[test]
    fn non_finite_oracle_is_reported() {
        let err = interpolate_homogeneous(2, 1, |_| C64::new(f64::NAN, 0.0)).unwrap_err();
        assert_eq!(err, PolyError::NonFinite);
    }
}
