use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CoverError;
use crate::higgs::{check_commuting, CommutingReport, HiggsTuple};
use crate::matkernel::Matrix;
use crate::seed::{complex_gaussian, rng_for};
use crate::C64;

/// Random base points evaluated by [`ChartFamily::precheck`].
pub const PRECHECK_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseTerm {
    pub exponents: Vec<u32>,
    pub coefficient: Complex64,
}

/// Sparse polynomial in the base coordinates. Not necessarily homogeneous.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasePoly {
    pub terms: Vec<BaseTerm>,
}

impl BasePoly {
    pub fn zero() -> Self {
        BasePoly::default()
    }

    pub fn constant(c: C64, d: usize) -> Self {
        BasePoly {
            terms: vec![BaseTerm {
                exponents: vec![0; d],
                coefficient: c,
            }],
        }
    }

    pub fn monomial(exponents: Vec<u32>, c: C64) -> Self {
        BasePoly {
            terms: vec![BaseTerm {
                exponents,
                coefficient: c,
            }],
        }
    }

    pub fn evaluate(&self, z: &[C64]) -> C64 {
        self.terms
            .iter()
            .map(|t| {
                t.exponents
                    .iter()
                    .zip(z)
                    .fold(t.coefficient, |acc, (&e, &x)| acc * x.powu(e))
            })
            .sum()
    }
}

/// Polynomial Higgs field `Φ(z) = Σ_j Φ_j(z) dz^j` over a chart of `C^d`.
///
/// `components[j]` holds the `n × n` entries of `Φ_j` in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChartFamily {
    n: usize,
    d: usize,
    components: Vec<Vec<BasePoly>>,
    label: Option<String>,
}

impl ChartFamily {
    pub fn new(
        n: usize,
        d: usize,
        components: Vec<Vec<BasePoly>>,
        label: Option<String>,
    ) -> Result<Self, CoverError> {
        if n == 0 || d == 0 {
            return Err(CoverError::EmptyFamily { n, d });
        }
        if components.len() != d {
            return Err(CoverError::ComponentCount {
                expected: d,
                got: components.len(),
            });
        }
        for (j, comp) in components.iter().enumerate() {
            if comp.len() != n * n {
                return Err(CoverError::EntryCount {
                    component: j,
                    expected: n * n,
                    got: comp.len(),
                });
            }
            for (k, entry) in comp.iter().enumerate() {
                for t in &entry.terms {
                    if t.exponents.len() != d {
                        return Err(CoverError::ExponentLength {
                            component: j,
                            row: k / n,
                            col: k % n,
                            exponents: t.exponents.clone(),
                            expected: d,
                            got: t.exponents.len(),
                        });
                    }
                    if !t.coefficient.re.is_finite() || !t.coefficient.im.is_finite() {
                        return Err(CoverError::NonFinite {
                            component: j,
                            row: k / n,
                            col: k % n,
                        });
                    }
                }
            }
        }
        Ok(ChartFamily {
            n,
            d,
            components,
            label,
        })
    }

    /// Family whose components do not depend on `z`.
    pub fn constant(mats: &[Matrix], label: Option<String>) -> Result<Self, CoverError> {
        let d = mats.len();
        let n = mats.first().map_or(0, |m| m.rows());
        let components = mats
            .iter()
            .map(|m| {
                m.as_slice()
                    .iter()
                    .map(|&c| {
                        if c == C64::new(0.0, 0.0) {
                            BasePoly::zero()
                        } else {
                            BasePoly::constant(c, d)
                        }
                    })
                    .collect()
            })
            .collect();
        ChartFamily::new(n, d, components, label)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn components(&self) -> &[Vec<BasePoly>] {
        &self.components
    }

    pub fn matrices_at(&self, z: &[C64]) -> Result<Vec<Matrix>, CoverError> {
        if z.len() != self.d {
            return Err(CoverError::PointLength {
                expected: self.d,
                got: z.len(),
            });
        }
        self.components
            .iter()
            .map(|comp| {
                let data: Vec<C64> = comp.iter().map(|p| p.evaluate(z)).collect();
                Matrix::new(self.n, self.n, data)
                    .map_err(|e| CoverError::AtPoint {
                        z: z.to_vec(),
                        source: e.into(),
                    })
            })
            .collect()
    }

    /// Commutativity at [`PRECHECK_POINTS`] standard complex Gaussian base
    /// points. Returns the worst report.
    pub fn precheck(&self, seed: u64, tol: f64) -> Result<CommutingReport, CoverError> {
        let mut worst: Option<CommutingReport> = None;
        for i in 0..PRECHECK_POINTS {
            let mut rng = rng_for(seed, "family-precheck", i as u64);
            let z: Vec<C64> = (0..self.d).map(|_| complex_gaussian(&mut rng)).collect();
            let report = check_commuting(&self.matrices_at(&z)?, tol)?;
            if worst
                .as_ref()
                .is_none_or(|w| report.max_commutator > w.max_commutator)
            {
                worst = Some(report);
            }
        }
        Ok(worst.expect("at least one precheck point"))
    }
}

/// The commutativity-certified tuple `(Φ_1(z), …, Φ_d(z))`.
pub fn evaluate_family(fam: &ChartFamily, z: &[C64], tol: f64) -> Result<HiggsTuple, CoverError> {
    let mats = fam.matrices_at(z)?;
    HiggsTuple::new(mats, tol).map_err(|e| CoverError::AtPoint {
        z: z.to_vec(),
        source: e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::higgs::DEFAULT_COMMUTE_TOL;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    pub(crate) fn sqrt_family() -> ChartFamily {
        ChartFamily::new(
            2,
            1,
            vec![vec![
                BasePoly::zero(),
                BasePoly::constant(c(1.0), 1),
                BasePoly::monomial(vec![1], c(1.0)),
                BasePoly::zero(),
            ]],
            Some("w^2 = z".into()),
        )
        .unwrap()
    }

    #[test]
    fn substitution() {
        let h = evaluate_family(&sqrt_family(), &[c(4.0)], DEFAULT_COMMUTE_TOL).unwrap();
        let expect = Matrix::from_real(&[&[0.0, 1.0], &[4.0, 0.0]]).unwrap();
        assert_eq!(h.components()[0], expect);
    }

    #[test]
    fn constant_family_is_constant() {
        let m = Matrix::diag_real(&[1.0, 2.0]);
        let fam = ChartFamily::constant(std::slice::from_ref(&m), None).unwrap();
        for z in [c(0.0), c(-3.0), C64::new(1.0, 7.0)] {
            let h = evaluate_family(&fam, &[z], DEFAULT_COMMUTE_TOL).unwrap();
            assert_eq!(h.components()[0], m);
        }
    }

    fn poly2(terms: &[([u32; 2], f64)]) -> BasePoly {
        BasePoly {
            terms: terms
                .iter()
                .map(|(e, k)| BaseTerm {
                    exponents: e.to_vec(),
                    coefficient: c(*k),
                })
                .collect(),
        }
    }

    #[test]
    fn powers_commute() {
        // Φ₁ = M(z) = [[z, 1], [2, z²]] and Φ₂ = M(z)², in the first of two base variables.
        let m = vec![
            poly2(&[([1, 0], 1.0)]),
            poly2(&[([0, 0], 1.0)]),
            poly2(&[([0, 0], 2.0)]),
            poly2(&[([2, 0], 1.0)]),
        ];
        let m2 = vec![
            poly2(&[([2, 0], 1.0), ([0, 0], 2.0)]),
            poly2(&[([1, 0], 1.0), ([2, 0], 1.0)]),
            poly2(&[([1, 0], 2.0), ([2, 0], 2.0)]),
            poly2(&[([0, 0], 2.0), ([4, 0], 1.0)]),
        ];
        assert!(matches!(
            ChartFamily::new(2, 1, vec![m.clone(), m2.clone()], None),
            Err(CoverError::ComponentCount { .. })
        ));
        let fam = ChartFamily::new(2, 2, vec![m, m2], None).unwrap();
        assert!(fam.precheck(3, DEFAULT_COMMUTE_TOL).unwrap().pass);
        for z in [c(0.5), C64::new(-1.2, 0.3)] {
            let h = evaluate_family(&fam, &[z, c(9.0)], DEFAULT_COMMUTE_TOL).unwrap();
            let a = &h.components()[0];
            assert!((&(a * a) - &h.components()[1]).max_abs() < 1e-12);
        }
    }

    #[test]
    fn non_commuting_family_fails_precheck() {
        let fam = ChartFamily::new(
            2,
            2,
            vec![
                vec![
                    BasePoly::monomial(vec![1, 0], c(1.0)),
                    BasePoly::zero(),
                    BasePoly::zero(),
                    BasePoly::zero(),
                ],
                vec![
                    BasePoly::zero(),
                    BasePoly::constant(c(1.0), 2),
                    BasePoly::zero(),
                    BasePoly::zero(),
                ],
            ],
            None,
        )
        .unwrap();
        assert!(!fam.precheck(0, DEFAULT_COMMUTE_TOL).unwrap().pass);
        assert!(evaluate_family(&fam, &[c(1.0), c(0.0)], DEFAULT_COMMUTE_TOL).is_err());
        assert!(evaluate_family(&fam, &[c(0.0), c(0.0)], DEFAULT_COMMUTE_TOL).is_ok());
    }

    #[test]
    fn rejects_bad_shapes() {
        let bad = ChartFamily::new(2, 1, vec![vec![BasePoly::zero(); 3]], None);
        assert!(matches!(bad, Err(CoverError::EntryCount { .. })));
        let bad = ChartFamily::new(
            1,
            1,
            vec![vec![BasePoly::monomial(vec![1, 1], c(1.0))]],
            None,
        );
        assert!(matches!(bad, Err(CoverError::ExponentLength { .. })));
        assert!(matches!(
            sqrt_family().matrices_at(&[c(1.0), c(2.0)]),
            Err(CoverError::PointLength { .. })
        ));
    }
}
