mod common;

use common::{max_sorted_diff, random_density_matrix, random_hermitian};
use hawking_distill::analysis::{
    alice_rob_state, log_negativity, pt_eigs_generic, pt_eigs_maximal, pt_spectrum_numeric,
    threshold_closed_form,
};
use hawking_distill::channel::{coefficients, dilate_rob_mode, hawking_channel, isometry_defect};
use hawking_distill::eigen::eigh;
use hawking_distill::states::{werner_state, MAXIMAL_ALPHA};
use hawking_distill::tensor::{
    kron, partial_trace, partial_transpose, partial_transpose_hermitian, trace_norm,
};
use hawking_distill::{HawkingParams, WernerParams};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn hawking() -> impl Strategy<Value = HawkingParams> {
    (0.01..10.0_f64, prop_oneof![Just(0.0), 0.01..10.0_f64])
        .prop_map(|(omega, t)| HawkingParams::new(omega, t).unwrap())
}

fn werner() -> impl Strategy<Value = WernerParams> {
    (0.0..=1.0_f64, 0.01..0.99_f64).prop_map(|(f, a)| WernerParams::new(f, a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn partial_trace_preserves_state_properties(seed in any::<u64>(), k in 0usize..3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_density_matrix(&mut rng, vec![2, 2, 2]);
        let reduced = partial_trace(&rho, k).unwrap();
        prop_assert!((reduced.trace() - 1.0).abs() < 1e-12);
        prop_assert!(reduced.as_hermitian().hermiticity_defect() < 1e-12);
        prop_assert!(reduced.as_hermitian().eigenvalues().unwrap()[0] >= -1e-10);
    }

    #[test]
    fn partial_transpose_is_trace_preserving_involution(seed in any::<u64>(), k in 0usize..2) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_density_matrix(&mut rng, vec![2, 2]);
        let pt = partial_transpose(&rho, k).unwrap();
        prop_assert!((pt.trace() - 1.0).abs() < 1e-12);
        prop_assert!(pt.hermiticity_defect() < 1e-12);
        let back = partial_transpose_hermitian(&pt, k).unwrap();
        prop_assert!(back.max_abs_diff(rho.as_hermitian()) <= 1e-15);
    }

    #[test]
    fn eigensolver_reconstructs(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = random_hermitian(&mut rng, n);
        let e = eigh(&m).unwrap();
        prop_assert!(e.residual(&m) <= 1e-11);
        prop_assert!((e.values.iter().sum::<f64>() - m.trace()).abs() <= 1e-11);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn kron_spectrum_is_pairwise_products(seed in any::<u64>(), na in 1usize..4, nb in 1usize..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_hermitian(&mut rng, na);
        let b = random_hermitian(&mut rng, nb);
        let mut products: Vec<f64> = a
            .eigenvalues()
            .unwrap()
            .iter()
            .flat_map(|x| b.eigenvalues().unwrap().into_iter().map(move |y| x * y))
            .collect();
        products.sort_by(f64::total_cmp);
        let got = kron(&a, &b).eigenvalues().unwrap();
        for (x, y) in got.iter().zip(&products) {
            prop_assert!((x - y).abs() < 1e-11, "{got:?} vs {products:?}");
        }
    }

    #[test]
    fn states_have_unit_trace_norm(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_density_matrix(&mut rng, vec![2, 2]);
        prop_assert!((trace_norm(rho.as_hermitian()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn werner_is_affine_in_weight(f in 0.0..=1.0_f64, alpha in 0.01..0.99_f64) {
        let at = |w| werner_state(&WernerParams::new(w, alpha).unwrap());
        let (one, zero, mid) = (at(1.0), at(0.0), at(f));
        for i in 0..4 {
            for j in 0..4 {
                let want = one.get(i, j) * f + zero.get(i, j) * (1.0 - f);
                prop_assert!((mid.get(i, j) - want).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn channel_preserves_trace_and_positivity(seed in any::<u64>(), h in hawking()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let rho = random_density_matrix(&mut rng, vec![2, 2]);
        let big = dilate_rob_mode(&rho, &h).unwrap();
        prop_assert!((big.trace() - rho.trace()).abs() <= 1e-12);
        prop_assert!(big.as_hermitian().eigenvalues().unwrap()[0] >= -1e-10);
        let out = hawking_channel(&rho, &h).unwrap();
        prop_assert!((out.trace() - rho.trace()).abs() <= 1e-12);
        prop_assert!(out.as_hermitian().hermiticity_defect() <= 1e-12);
        prop_assert!(out.as_hermitian().eigenvalues().unwrap()[0] >= -1e-10);
    }

    #[test]
    fn isometry_and_unit_norm(h in hawking()) {
        let c = coefficients(&h);
        prop_assert!(isometry_defect(&c) <= 1e-14);
        prop_assert!((c.cos_sq() + c.sin_sq() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn maximal_pipeline_equals_generic_at_half_root(f in 0.0..=1.0_f64, h in hawking()) {
        let w = WernerParams::maximal(f).unwrap();
        let via_generic = alice_rob_state(&WernerParams::new(f, MAXIMAL_ALPHA).unwrap(), &h).unwrap();
        prop_assert_eq!(alice_rob_state(&w, &h).unwrap(), via_generic);
        let d = max_sorted_diff(pt_eigs_maximal(f, &h).unwrap(), pt_eigs_generic(&w, &h).unwrap());
        prop_assert!(d < 1e-12);
    }

    #[test]
    fn closed_forms_match_numeric_spectrum(w in werner(), h in hawking()) {
        let numeric = pt_spectrum_numeric(&alice_rob_state(&w, &h).unwrap()).unwrap();
        let generic = pt_eigs_generic(&w, &h).unwrap();
        prop_assert!(max_sorted_diff(numeric.eigenvalues, generic) < 1e-12);
        prop_assert!((numeric.eigenvalues.iter().sum::<f64>() - 1.0).abs() < 1e-11);
    }

    #[test]
    fn negativity_dual_formula(w in werner(), h in hawking()) {
        let rho = alice_rob_state(&w, &h).unwrap();
        let s = pt_spectrum_numeric(&rho).unwrap();
        let n = log_negativity(&rho).unwrap();
        prop_assert!(n >= 0.0);
        prop_assert_eq!(s.entangled, n > 0.0);
        if s.entangled {
            prop_assert!((n - (1.0 + 2.0 * s.negative_mass()).log2()).abs() < 1e-12);
        }
    }

    #[test]
    fn verdict_matches_threshold(w in werner(), h in hawking()) {
        let tau = threshold_closed_form(&h).tau;
        prop_assume!((w.weight() - tau).abs() > 1e-3);
        let s = pt_spectrum_numeric(&alice_rob_state(&w, &h).unwrap()).unwrap();
        prop_assert_eq!(s.entangled, w.weight() > tau);
    }
}
