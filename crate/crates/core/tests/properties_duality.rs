mod common;

use common::gaussian_vec;
use higgs_cover::duality::{
    chart_distance, dual_point, gauss_map, hitchin_check, incidence, sample_hypersurface, verify_dual_cover,
    Hyperplane, Verdict, DEFAULT_MATCH_TOL,
};
use higgs_cover::higgs::{pencil_determinant, DiagonalizableSample};
use higgs_cover::matkernel::Matrix;
use higgs_cover::poly::ProjectivePoint;
use higgs_cover::seed::{complex_gaussian, rng_for};
use higgs_cover::C64;
use proptest::prelude::*;
use rand::Rng;

fn sample(seed: u64, n: usize, d: usize) -> DiagonalizableSample {
    DiagonalizableSample::draw(n, d, 100.0, &mut rng_for(seed, "prop-dual-sample", 0)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn gauss_map_is_projectively_well_defined(seed in any::<u64>(), n in 1usize..=5, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let f = pencil_determinant(&s.tuple).unwrap();
        let pts = sample_hypersurface(&f, 5, seed).unwrap();
        let mut rng = rng_for(seed, "prop-gauss-scale", 0);
        for pt in &pts.points {
            let lambda = complex_gaussian(&mut rng);
            let scaled = ProjectivePoint::new(pt.coords().iter().map(|c| c * lambda).collect()).unwrap();
            let a = gauss_map(&f, pt).unwrap();
            let b = gauss_map(&f, &scaled).unwrap();
            for (x, y) in a.coords().iter().zip(b.coords()) {
                prop_assert!((x - y).norm() <= 1e-10);
            }
        }
    }

    #[test]
    fn incidence_is_symmetric(a in prop::collection::vec(-2i32..=2, 3), b in prop::collection::vec(-2i32..=2, 3)) {
        prop_assume!(a.iter().any(|&x| x != 0) && b.iter().any(|&x| x != 0));
        let to_f = |v: &[i32]| v.iter().map(|&x| x as f64).collect::<Vec<_>>();
        let ha = Hyperplane::from_real(&to_f(&a)).unwrap();
        let hb = Hyperplane::from_real(&to_f(&b)).unwrap();
        prop_assert_eq!(
            incidence(&ha, &dual_point(&hb), 1e-12).unwrap(),
            incidence(&hb, &dual_point(&ha), 1e-12).unwrap()
        );
        let dot: i32 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        prop_assert_eq!(incidence(&ha, &dual_point(&hb), 1e-12).unwrap(), dot == 0);
    }

    #[test]
    fn each_factor_maps_to_its_spectrum_point(seed in any::<u64>(), n in 1usize..=5, d in 1usize..=3) {
        let s = sample(seed, n, d);
        let f = pencil_determinant(&s.tuple).unwrap();
        let mut rng = rng_for(seed, "prop-factor", 0);
        for w in &s.planted {
            // A random point of the hyperplane ξ⁰ + Σ w_j ξ^j = 0.
            let tail = gaussian_vec(d, &mut rng);
            let head = -w.iter().zip(&tail).map(|(a, b)| a * b).sum::<C64>();
            let mut xi = vec![head];
            xi.extend(tail);
            let image = gauss_map(&f, &ProjectivePoint::new(xi).unwrap()).unwrap();
            let mut target = vec![C64::new(1.0, 0.0)];
            target.extend_from_slice(w);
            let dist = chart_distance(&image, &ProjectivePoint::new(target).unwrap());
            prop_assert!(dist <= 1e-8, "{dist:e}");
        }
    }

    #[test]
    fn hitchin_recovers_char_poly(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = rng_for(seed, "prop-hitchin", 0);
        let phi = Matrix::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let r = hitchin_check(&phi).unwrap();
        prop_assert!(r.max_deviation <= 1e-10, "{:e}", r.max_deviation);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn dual_cover_verifies_on_diagonalizable_tuples(seed in any::<u64>(), n in 1usize..=6, d in 1usize..=4) {
        let s = sample(seed, n, d);
        let r = verify_dual_cover(&s.tuple, 200, seed, DEFAULT_MATCH_TOL).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Verified);
        prop_assert_eq!(r.matched, 200);
    }
}
