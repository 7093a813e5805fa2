mod common;

use common::{gaussian_vec, random_multipoly};
use higgs_cover::poly::{discriminant, interpolate_homogeneous, uni_roots, UniPoly};
use higgs_cover::seed::{complex_gaussian, rng_for};
use higgs_cover::C64;
use proptest::prelude::*;
use rand::Rng;

fn scaled_discriminant(q: &UniPoly) -> f64 {
    let n = q.degree().unwrap() as i32;
    discriminant(q).unwrap().norm() / q.max_coeff().powi(2 * n - 2)
}

fn has_close_pair(roots: &[C64], tol: f64) -> bool {
    roots
        .iter()
        .enumerate()
        .any(|(i, a)| roots[i + 1..].iter().any(|b| (a - b).norm() < tol))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_identity(seed in any::<u64>(), vars in 1usize..=4, degree in 1u32..=5) {
        let mut rng = rng_for(seed, "prop-euler", 0);
        let p = random_multipoly(vars, degree, &mut rng);
        let x = gaussian_vec(vars, &mut rng);
        let g = p.gradient_at(&x).unwrap();
        let v = p.evaluate(&x).unwrap();
        let euler: C64 = x.iter().zip(&g).map(|(a, b)| a * b).sum();
        prop_assert!((euler - v * degree as f64).norm() <= 1e-9 * (1.0 + v.norm()));
    }

    #[test]
    fn gradient_matches_central_differences(seed in any::<u64>(), vars in 1usize..=4, degree in 1u32..=5) {
        let mut rng = rng_for(seed, "prop-fd", 0);
        let p = random_multipoly(vars, degree, &mut rng);
        let x = gaussian_vec(vars, &mut rng);
        let g = p.gradient_at(&x).unwrap();
        let h = 1e-6;
        let gnorm = g.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for i in 0..vars {
            let mut plus = x.clone();
            let mut minus = x.clone();
            plus[i] += h;
            minus[i] -= h;
            let fd = (p.evaluate(&plus).unwrap() - p.evaluate(&minus).unwrap()) / (2.0 * h);
            prop_assert!((fd - g[i]).norm() <= 1e-5 * (1.0 + gnorm), "component {i}: {fd} vs {}", g[i]);
        }
    }

    #[test]
    fn restriction_to_line_agrees(seed in any::<u64>(), vars in 1usize..=4, degree in 1u32..=6) {
        let mut rng = rng_for(seed, "prop-line", 0);
        let p = random_multipoly(vars, degree, &mut rng);
        let b = gaussian_vec(vars, &mut rng);
        let v = gaussian_vec(vars, &mut rng);
        let q = p.restrict_to_line(&b, &v).unwrap();
        for _ in 0..20 {
            let t = complex_gaussian(&mut rng);
            let x: Vec<C64> = b.iter().zip(&v).map(|(bi, vi)| bi + t * vi).collect();
            let direct = p.evaluate(&x).unwrap();
            let scale: f64 = p
                .terms()
                .map(|(m, c)| c.norm() * m.exponents().iter().zip(&x).map(|(&e, xi)| xi.norm().powi(e as i32)).product::<f64>())
                .sum();
            prop_assert!((q.evaluate(t) - direct).norm() <= 1e-10 * (1.0 + scale));
        }
    }

    #[test]
    fn roots_re_expand(seed in any::<u64>(), degree in 1usize..=10) {
        let mut rng = rng_for(seed, "prop-roots", 0);
        let q = UniPoly::new(gaussian_vec(degree + 1, &mut rng));
        let roots = uni_roots(&q).unwrap();
        prop_assert_eq!(roots.len(), degree);
        let rebuilt = UniPoly::from_roots(&roots).scale(q.leading().unwrap());
        prop_assert!(rebuilt.relative_distance(&q) <= 1e-8, "{:e}", rebuilt.relative_distance(&q));
    }

    #[test]
    fn discriminant_detects_planted_double_roots(seed in any::<u64>(), degree in 2usize..=6) {
        let mut rng = rng_for(seed, "prop-disc", 0);
        // Separated roots: perturbed roots of unity.
        let separated: Vec<C64> = (0..degree)
            .map(|k| {
                let angle = std::f64::consts::TAU * (k as f64 + rng.gen_range(-0.2..0.2)) / degree as f64;
                C64::from_polar(rng.gen_range(0.8..1.2), angle)
            })
            .collect();
        let q = UniPoly::from_roots(&separated);
        prop_assert!(scaled_discriminant(&q) > 1e-8);
        prop_assert!(!has_close_pair(&uni_roots(&q).unwrap(), 1e-4));

        let mut planted = separated.clone();
        planted[1] = planted[0];
        let q = UniPoly::from_roots(&planted).scale(complex_gaussian(&mut rng));
        prop_assert!(scaled_discriminant(&q) <= 1e-8, "{:e}", scaled_discriminant(&q));
        prop_assert!(has_close_pair(&uni_roots(&q).unwrap(), 1e-4));
    }

    #[test]
    fn interpolation_round_trips(seed in any::<u64>(), vars in 1usize..=4, degree in 1u32..=5) {
        let p = random_multipoly(vars, degree, &mut rng_for(seed, "prop-interp", 0));
        let got = interpolate_homogeneous(vars, degree, |x: &[C64]| p.evaluate(x).unwrap()).unwrap();
        prop_assert!(got.relative_distance(&p) <= 1e-9, "{:e}", got.relative_distance(&p));
    }
}
