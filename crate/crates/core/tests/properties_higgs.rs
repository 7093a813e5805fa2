mod common;

use common::{gaussian_matrix, gaussian_vec, multiset_distance};
use higgs_cover::higgs::{
    char_poly_direction, characteristic_polynomial, exterior_trace, joint_spectrum, pencil_determinant,
    power_traces, random_well_conditioned, residual_scale, spectral_residuals, DiagonalizableSample,
    HiggsTuple, DEFAULT_COMMUTE_TOL, DEFAULT_RETRIES,
};
use higgs_cover::matkernel::Matrix;
use higgs_cover::poly::UniPoly;
use higgs_cover::seed::{complex_gaussian, rng_for};
use higgs_cover::C64;
use proptest::prelude::*;

fn sample(seed: u64, n: usize, d: usize) -> DiagonalizableSample {
    DiagonalizableSample::draw(n, d, 100.0, &mut rng_for(seed, "prop-sample", 0)).unwrap()
}

/// Commuting but not diagonalizable: polynomials in one Jordan-type matrix.
fn polynomial_tuple(seed: u64, n: usize, d: usize) -> HiggsTuple {
    let mut rng = rng_for(seed, "prop-jordan", 0);
    let j = Matrix::from_fn(n, n, |r, c| {
        if c == r + 1 {
            C64::new(1.0, 0.0)
        } else if r == c {
            C64::new((r / 2) as f64 * 0.5, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let g = random_well_conditioned(n, 10.0, &mut rng);
    let m = &(&g * &j) * &higgs_cover::matkernel::inverse(&g).unwrap();
    let comps = (0..d)
        .map(|_| {
            let c = gaussian_vec(3, &mut rng);
            let lin = &Matrix::identity(n).scale(c[0]) + &m.scale(c[1]);
            &lin + &m.pow(2).scale(c[2] * 0.2)
        })
        .collect();
    HiggsTuple::new(comps, DEFAULT_COMMUTE_TOL).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pencil_factorizes(seed in any::<u64>(), n in 1usize..=6, d in 1usize..=4) {
        let s = sample(seed, n, d);
        let f = pencil_determinant(&s.tuple).unwrap();
        let js = joint_spectrum(&s.tuple, seed, DEFAULT_RETRIES).unwrap();
        let err = f.relative_distance(&js.linear_form_product());
        prop_assert!(err <= 1e-8, "{err:e}");
    }

    #[test]
    fn pencil_factorizes_without_diagonalizability(seed in any::<u64>(), n in 2usize..=5, d in 1usize..=3) {
        let h = polynomial_tuple(seed, n, d);
        let f = pencil_determinant(&h).unwrap();
        let js = joint_spectrum(&h, seed, DEFAULT_RETRIES).unwrap();
        let err = f.relative_distance(&js.linear_form_product());
        prop_assert!(err <= 1e-8, "{err:e}");
    }

    #[test]
    fn directional_char_poly_matches_pencil(seed in any::<u64>(), n in 1usize..=6, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let f = pencil_determinant(&s.tuple).unwrap();
        let mut rng = rng_for(seed, "prop-consistency", 0);
        for _ in 0..20 {
            let v = gaussian_vec(d, &mut rng);
            let w = complex_gaussian(&mut rng);
            let p = char_poly_direction(&s.tuple, &v).unwrap();
            let mut xi = vec![-w];
            xi.extend_from_slice(&v);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = f.evaluate(&xi).unwrap() * sign;
            let a = s.tuple.contract(&v).unwrap();
            let scale = (1.0 + w.norm() + a.frobenius_norm()).powi(n as i32);
            prop_assert!((p.evaluate(w) - rhs).norm() <= 1e-9 * scale);
        }
    }

    #[test]
    fn expansion_identity(seed in any::<u64>(), n in 1usize..=8) {
        let a = gaussian_matrix(n, &mut rng_for(seed, "prop-expansion", 0));
        let cp = characteristic_polynomial(&a).unwrap();
        let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
        for m in 0..=n {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[n - m] = exterior_trace(&a, m).unwrap() * sign;
        }
        let err = cp.relative_distance(&UniPoly::new(coeffs));
        prop_assert!(err <= 1e-10, "{err:e}");
    }

    #[test]
    fn newton_identities(seed in any::<u64>(), n in 1usize..=6, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let v = gaussian_vec(d, &mut rng_for(seed, "prop-newton", 0));
        let p = power_traces(&s.tuple, &v, n).unwrap();
        let a = s.tuple.contract(&v).unwrap();
        let e: Vec<C64> = (0..=n).map(|m| exterior_trace(&a, m).unwrap()).collect();
        let scale = 1.0 + a.frobenius_norm();
        for k in 1..=n {
            // p_k − e₁p_{k−1} + … + (−1)^{k−1} e_{k−1} p₁ + (−1)^k k e_k = 0
            let mut acc = p[k - 1];
            for i in 1..k {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                acc += e[i] * p[k - i - 1] * sign;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            acc += e[k] * (k as f64) * sign;
            prop_assert!(acc.norm() <= 1e-8 * scale.powi(k as i32), "k = {k}: {acc}");
        }
    }

    #[test]
    fn spectrum_is_gauge_invariant(seed in any::<u64>(), n in 1usize..=6, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let base = joint_spectrum(&s.tuple, seed, DEFAULT_RETRIES).unwrap();
        let g = random_well_conditioned(n, 10.0, &mut rng_for(seed, "prop-gauge", 0));
        let moved = joint_spectrum(&s.tuple.conjugated(&g).unwrap(), seed ^ 1, DEFAULT_RETRIES).unwrap();
        let dist = multiset_distance(&base.sheets(), &moved.sheets());
        prop_assert!(dist <= 1e-7 * (1.0 + base.max_abs()), "{dist:e}");
    }

    #[test]
    fn residuals_vanish_on_the_cover(seed in any::<u64>(), n in 1usize..=5, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let js = joint_spectrum(&s.tuple, seed, DEFAULT_RETRIES).unwrap();
        let scale = residual_scale(&s.tuple, seed).unwrap();
        for p in &js.points {
            let r = spectral_residuals(&s.tuple, &p.w).unwrap();
            prop_assert!(r.max_magnitude <= 1e-8 * scale, "{:e} vs scale {scale:e}", r.max_magnitude);
        }
    }
}

#[test]
fn commuting_check_rejects_generic_pairs() {
    let mut rng = rng_for(0, "commute-reject", 0);
    let a = gaussian_matrix(3, &mut rng);
    let b = gaussian_matrix(3, &mut rng);
    assert!(HiggsTuple::new(vec![a, b], DEFAULT_COMMUTE_TOL).is_err());
}
