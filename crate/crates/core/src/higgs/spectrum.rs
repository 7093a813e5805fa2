use std::cmp::Ordering;

use serde::Serialize;

use super::{HiggsError, HiggsTuple};
use crate::matkernel::{canonical_cmp, determinant, schur_default, Matrix};
use crate::poly::MultiPoly;
use crate::seed::{complex_gaussian_vec, rng_for};
use crate::C64;

/// Diagonal tuples closer than `CLUSTER_REL · (1 + max|w|)` merge.
pub const CLUSTER_REL: f64 = 1e-6;
/// Allowed strictly-lower leakage per component, relative to `max(1, ‖Φ_j‖_F)`.
pub const LEAKAGE_TOL: f64 = 1e-8;

/// One point `(w_1, …, w_d)` of the joint spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumPoint {
    pub w: Vec<C64>,
    pub multiplicity: usize,
}

/// Joint spectrum of a commuting tuple, with multiplicities summing to `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointSpectrum {
    pub points: Vec<SpectrumPoint>,
    /// Largest relative strictly-lower entry after simultaneous triangularization.
    pub residual: f64,
}

fn tuple_cmp(a: &[C64], b: &[C64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| canonical_cmp(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn distance(a: &[C64], b: &[C64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

impl JointSpectrum {
    /// Groups matched diagonal tuples into points with multiplicity, in
    /// canonical order.
    pub fn from_tuples(tuples: Vec<Vec<C64>>, residual: f64) -> Self {
        let scale = 1.0
            + tuples
                .iter()
                .flat_map(|t| t.iter().map(|z| z.norm()))
                .fold(0.0, f64::max);
        let radius = CLUSTER_REL * scale;
        let mut clusters: Vec<(Vec<C64>, Vec<Vec<C64>>)> = Vec::new();
        for t in tuples {
            match clusters.iter_mut().find(|(seed, _)| distance(seed, &t) < radius) {
                Some((_, members)) => members.push(t),
                None => clusters.push((t.clone(), vec![t])),
            }
        }
        let mut points: Vec<SpectrumPoint> = clusters
            .into_iter()
            .map(|(_, members)| {
                let k = members.len();
                let d = members[0].len();
                let w = (0..d)
                    .map(|j| members.iter().map(|m| m[j]).sum::<C64>() / k as f64)
                    .collect();
                SpectrumPoint { w, multiplicity: k }
            })
            .collect();
        points.sort_by(|a, b| tuple_cmp(&a.w, &b.w));
        JointSpectrum { points, residual }
    }

    pub fn n(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    /// Points repeated by multiplicity (the `n` sheets over this fiber).
    pub fn sheets(&self) -> Vec<Vec<C64>> {
        self.points
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.w.clone(), p.multiplicity))
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.points
            .iter()
            .flat_map(|p| p.w.iter().map(|z| z.norm()))
            .fold(0.0, f64::max)
    }

    /// `Π_a (ξ⁰ + Σ_j w^a_j ξʲ)` over the spectrum with multiplicity.
    pub fn linear_form_product(&self) -> MultiPoly {
        let d = self.points.first().map_or(0, |p| p.w.len());
        let mut acc = MultiPoly::constant(d + 1, C64::new(1.0, 0.0));
        for p in &self.points {
            let mut coeffs = vec![C64::new(1.0, 0.0)];
            coeffs.extend_from_slice(&p.w);
            let form = MultiPoly::linear_form(&coeffs);
            for _ in 0..p.multiplicity {
                acc = acc.mul(&form).expect("same variable count");
            }
        }
        acc
    }

    /// `max_a |det(ι_vΦ − ⟨v, w^a⟩·I)|` for a given direction.
    pub fn certify_direction(&self, h: &HiggsTuple, v: &[C64]) -> Result<f64, HiggsError> {
        let a = h.contract(v)?;
        let mut worst = 0.0f64;
        for p in &self.points {
            let s: C64 = v.iter().zip(&p.w).map(|(x, y)| x * y).sum();
            worst = worst.max(determinant(&a.shift(-s))?.norm());
        }
        Ok(worst)
    }
}

/// Simultaneous triangularization through the Schur form of a random
/// combination `Σ c_j Φ_j`, certified on every component.
pub fn joint_spectrum(h: &HiggsTuple, seed: u64, retries: usize) -> Result<JointSpectrum, HiggsError> {
    let n = h.n();
    let mut best = f64::INFINITY;
    let attempts = retries.max(1);
    for attempt in 0..attempts {
        let mut rng = rng_for(seed, "joint-spectrum", attempt as u64);
        let coeffs = complex_gaussian_vec(&mut rng, h.d());
        let combo = h.contract(&coeffs)?;
        let q = schur_default(&combo)?.q;
        let qh = q.adjoint();
        let triangular: Vec<Matrix> = h
            .components()
            .iter()
            .map(|phi| &(&qh * phi) * &q)
            .collect();
        let leakage = triangular
            .iter()
            .zip(h.components())
            .map(|(t, phi)| t.strict_lower_max() / phi.frobenius_norm().max(1.0))
            .fold(0.0, f64::max);
        if leakage <= LEAKAGE_TOL {
            let tuples = (0..n)
                .map(|a| triangular.iter().map(|t| t.get(a, a)).collect())
                .collect();
            return Ok(JointSpectrum::from_tuples(tuples, leakage));
        }
        best = best.min(leakage);
    }
    Err(HiggsError::SpectrumNotCertified {
        attempts,
        best_residual: best,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higgs::{DEFAULT_COMMUTE_TOL, DEFAULT_RETRIES};

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn spectrum_of(ms: Vec<Matrix>) -> JointSpectrum {
        let h = HiggsTuple::new(ms, DEFAULT_COMMUTE_TOL).unwrap();
        joint_spectrum(&h, 0, DEFAULT_RETRIES).unwrap()
    }

    fn assert_points(s: &JointSpectrum, expect: &[(&[f64], usize)]) {
        assert_eq!(s.points.len(), expect.len(), "{s:?}");
        for (p, (w, m)) in s.points.iter().zip(expect) {
            assert_eq!(p.multiplicity, *m);
            for (a, b) in p.w.iter().zip(w.iter()) {
                assert!((a - b).norm() < 1e-12, "{s:?}");
            }
        }
    }

    #[test]
    fn diagonal_pair() {
        let s = spectrum_of(vec![Matrix::diag_real(&[1.0, 2.0]), Matrix::diag_real(&[3.0, 4.0])]);
        assert_points(&s, &[(&[1.0, 3.0], 1), (&[2.0, 4.0], 1)]);
    }

    #[test]
    fn nilpotent_pair() {
        let s = spectrum_of(vec![
            Matrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap(),
            Matrix::from_real(&[&[0.0, 5.0], &[0.0, 0.0]]).unwrap(),
        ]);
        assert_points(&s, &[(&[0.0, 0.0], 2)]);
        assert_eq!(s.n(), 2);
    }

    #[test]
    fn triangular_with_square() {
        let a = Matrix::from_real(&[&[1.0, 1.0], &[0.0, 2.0]]).unwrap();
        let a2 = &a * &a;
        assert_eq!(a2, Matrix::from_real(&[&[1.0, 3.0], &[0.0, 4.0]]).unwrap());
        let s = spectrum_of(vec![a, a2]);
        assert_points(&s, &[(&[1.0, 1.0], 1), (&[2.0, 4.0], 1)]);
    }

    #[test]
    fn non_commuting_input_fails_certification() {
        let h = HiggsTuple::new_unchecked(
            vec![
                Matrix::diag_real(&[1.0, 2.0]),
                Matrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap(),
            ],
            DEFAULT_COMMUTE_TOL,
        )
        .unwrap();
        let err = joint_spectrum(&h, 3, 5).unwrap_err();
        assert!(matches!(err, HiggsError::SpectrumNotCertified { attempts: 5, .. }), "{err:?}");
    }

    #[test]
    fn product_of_forms_and_certification() {
        let h = HiggsTuple::new(
            vec![Matrix::diag_real(&[1.0, 2.0]), Matrix::diag_real(&[3.0, 4.0])],
            DEFAULT_COMMUTE_TOL,
        )
        .unwrap();
        let s = joint_spectrum(&h, 1, 5).unwrap();
        let f = s.linear_form_product();
        // (x0 + x1 + 3x2)(x0 + 2x1 + 4x2)
        assert!((f.coeff(&[2, 0, 0]) - 1.0).norm() < 1e-14);
        assert!((f.coeff(&[1, 1, 0]) - 3.0).norm() < 1e-14);
        assert!((f.coeff(&[0, 0, 2]) - 12.0).norm() < 1e-14);
        assert!((f.coeff(&[0, 1, 1]) - 10.0).norm() < 1e-14);
        assert!(s.certify_direction(&h, &[c(0.3), c(-1.2)]).unwrap() < 1e-12);
    }
}
