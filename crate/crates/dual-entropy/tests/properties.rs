//! Randomized invariants for the measure maps, linear algebra kernels,
//! monogamy bounds, and serialization.

use dual_entropy::measures::{
    concurrence_2q_mixed, concurrence_pure, f_eof, f_ttq, g_tsallis, h_st, measure_pure,
    q_window, total_entropy_st, MeasureKind,
};
use dual_entropy::monogamy::{
    bound_mj, bound_powersum, bound_thm_mixed, bound_thm_ordered, bound_weighted_geo,
    cut_and_pairwise, lemma_residual, ordering_profile, LemmaKind,
};
use dual_entropy::qlinalg::{hermitian_eigs, partial_trace, psd_sqrt, tensor, ComplexMatrix};
use dual_entropy::sampler::Sampler;
use dual_entropy::states::{density_of, reduced, Bipartition, PureState};
use num_complex::Complex64;
use proptest::prelude::*;

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn random_hermitian(s: &mut Sampler, dim: usize) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        h.set(i, i, Complex64::new(s.standard_normal(), 0.0));
        for j in (i + 1)..dim {
            let v = s.complex_normal();
            h.set(i, j, v);
            h.set(j, i, v.conj());
        }
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn entropy_maps_stay_in_the_unit_interval(x in 0.0f64..=1.0) {
        let h = h_st(x).unwrap();
        prop_assert!((0.0..=1.0).contains(&h));
        // f_eof takes the squared concurrence and must agree with h_st.
        let f = f_eof(x * x).unwrap();
        prop_assert!((f - h).abs() < 1e-14);
    }

    #[test]
    fn entropy_map_is_monotone(x in 0.0f64..1.0, dx in 1e-6f64..0.1) {
        let hi = (x + dx).min(1.0);
        prop_assert!(h_st(hi).unwrap() >= h_st(x).unwrap() - 1e-14);
    }

    #[test]
    fn tsallis_map_at_q_two_is_the_square(x in 0.0f64..=1.0) {
        prop_assert!((f_ttq(x, 2.0).unwrap() - x * x).abs() < 1e-15);
    }

    #[test]
    fn tsallis_map_is_continuous_across_q_one(x in 0.0f64..=1.0) {
        let below = f_ttq(x, 1.0 - 1e-7).unwrap();
        let above = f_ttq(x, 1.0 + 1e-7).unwrap();
        prop_assert!((below - above).abs() < 1e-6, "jump at q=1: {below} vs {above}");
    }

    #[test]
    fn tsallis_map_is_nonnegative_over_the_window(x in 0.0f64..=1.0, f in 0.0f64..=1.0) {
        let (lo, hi) = q_window();
        let q = lo + f * (hi - lo);
        let g = g_tsallis(x, q).unwrap();
        prop_assert!(g >= -1e-15);
        prop_assert!(f_ttq(x, q).unwrap() >= -1e-15);
    }

    #[test]
    fn eigendecomposition_reconstructs_random_hermitians(seed in 0u64..10_000, dim in 2usize..=8) {
        let mut s = Sampler::new(seed);
        let h = random_hermitian(&mut s, dim);
        let spec = hermitian_eigs(&h).unwrap();
        // descending eigenvalues
        for w in spec.eigenvalues.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
        prop_assert!(spec.reconstruct().max_abs_diff(&h) < 1e-10 * (1.0 + h.frobenius_norm()));
        // orthonormal columns
        let v = &spec.eigenvectors;
        let gram = v.adjoint().mul(v).unwrap();
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(dim)) < 1e-12);
    }

    #[test]
    fn psd_sqrt_squares_back(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let rho = s.mixed_2q().unwrap();
        let root = psd_sqrt(&rho).unwrap();
        prop_assert!(root.mul(&root).unwrap().max_abs_diff(&rho) < 1e-12);
    }

    #[test]
    fn partial_trace_undoes_tensor(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let a = s.mixed_2q().unwrap();
        let b = density_of(&s.haar_pure(1).unwrap());
        let ab = tensor(&a, &b).unwrap();
        let back_a = partial_trace(&ab, &[4, 2], &[0]).unwrap();
        let back_b = partial_trace(&ab, &[4, 2], &[1]).unwrap();
        prop_assert!(back_a.max_abs_diff(&a) < 1e-13);
        prop_assert!(back_b.max_abs_diff(&b) < 1e-13);
    }

    #[test]
    fn reduced_matches_the_partial_trace_route(seed in 0u64..10_000, k in 0usize..3) {
        let mut s = Sampler::new(seed);
        let psi = s.haar_pure(3).unwrap();
        let fast = reduced(&psi, &[k]).unwrap();
        let slow = partial_trace(&density_of(&psi), &[2, 2, 2], &[k]).unwrap();
        prop_assert!(fast.max_abs_diff(&slow) < 1e-13);
    }

    #[test]
    fn pure_state_measures_stay_in_range(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let psi = s.haar_pure(3).unwrap();
        for k in 0..3 {
            let cut = Bipartition::single(3, k).unwrap();
            let c = concurrence_pure(&psi, &cut).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
            let e = measure_pure(&psi, &cut, MeasureKind::StEntropy).unwrap();
            prop_assert!((0.0..=1.0 + 1e-12).contains(&e.value));
            let t = measure_pure(&psi, &cut, MeasureKind::TtqEntropy(2.0)).unwrap();
            prop_assert!((t.value - c * c).abs() < 1e-10);
        }
    }

    #[test]
    fn mixed_concurrence_is_bounded_and_matches_schmidt_on_pure_input(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let rho = s.mixed_2q().unwrap();
        let c = concurrence_2q_mixed(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));

        let psi = s.haar_pure(2).unwrap();
        let from_mixed = concurrence_2q_mixed(&density_of(&psi)).unwrap();
        let from_pure = concurrence_pure(&psi, &Bipartition::single(2, 0).unwrap()).unwrap();
        prop_assert!((from_mixed - from_pure).abs() < 1e-10);
    }

    #[test]
    fn entropy_bound_holds_on_haar_states(seed in 0u64..20_000, a in 0.0f64..=6.0) {
        let mut s = Sampler::new(seed);
        let psi = s.haar_pure(3).unwrap();
        let alpha = SQRT2 + a;
        let (lhs, pairs) = cut_and_pairwise(&psi, 0, MeasureKind::StEntropy).unwrap();
        let rhs = bound_powersum(&pairs, alpha, SQRT2).unwrap();
        prop_assert!(lhs.powf(alpha) >= rhs - 1e-10);
    }

    #[test]
    fn weighted_bound_dominates_the_power_sum(
        seed in 0u64..10_000,
        len in 2usize..6,
        a in 0.0f64..=6.0,
        gamma_pick in 0usize..2,
    ) {
        let mut s = Sampler::new(seed);
        let vals: Vec<f64> = (0..len).map(|_| s.uniform()).collect();
        let gamma = [SQRT2, 2.0][gamma_pick];
        let alpha = gamma + a;
        let ps = bound_powersum(&vals, alpha, gamma).unwrap();
        let wg = bound_weighted_geo(&vals, alpha, gamma).unwrap();
        prop_assert!(wg >= ps - 1e-12 * (1.0 + ps.abs()));
    }

    #[test]
    fn product_bound_dominates_when_the_head_is_fully_ordered(
        seed in 0u64..10_000,
        len in 2usize..6,
        a in 0.0f64..=6.0,
    ) {
        // Strong geometric decay forces every head condition to hold.
        let mut s = Sampler::new(seed);
        let gamma = SQRT2;
        let top = 0.2 + 0.8 * s.uniform();
        let mut vals = vec![top];
        for _ in 1..len {
            let ratio = (0.1 + 0.3 * s.uniform()).powf(1.0 / gamma);
            vals.push(vals.last().unwrap() * ratio);
        }
        let profile = ordering_profile(&vals, gamma);
        prop_assert_eq!(profile.m, len - 1);
        let alpha = 2.0 * gamma + a;
        let wg = bound_weighted_geo(&vals, alpha, gamma).unwrap();
        let mj = bound_mj(&vals, alpha, gamma).unwrap();
        prop_assert!(mj >= wg - 1e-12 * (1.0 + wg.abs()));
        // With a fully ordered head the mixed-order bound at m = L-1
        // coincides with the ordered bound.
        let thm = bound_thm_ordered(&vals, alpha, gamma).unwrap();
        let mixed = bound_thm_mixed(&vals, alpha, gamma, len - 1).unwrap();
        prop_assert!((thm - mixed).abs() <= 1e-15 * (1.0 + thm.abs()));
    }

    #[test]
    fn ordering_profile_is_a_sorted_permutation(seed in 0u64..10_000, len in 2usize..7) {
        let mut s = Sampler::new(seed);
        let vals: Vec<f64> = (0..len).map(|_| s.uniform()).collect();
        let profile = ordering_profile(&vals, 2.0);
        for w in profile.sorted.windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
        let mut seen = vec![false; len];
        for (rank, &orig) in profile.permutation.iter().enumerate() {
            prop_assert!(!seen[orig]);
            seen[orig] = true;
            prop_assert_eq!(profile.sorted[rank], vals[orig]);
        }
        prop_assert!(profile.m <= len - 1);
        if len == 2 {
            // two values sorted descending always satisfy the single head condition
            prop_assert_eq!(profile.m, 1);
            prop_assert!(profile.consistent);
        }
    }

    #[test]
    fn lemma_residuals_are_nonnegative_on_their_domains(
        t in 0.0f64..=1.0,
        x in 2.0f64..=12.0,
    ) {
        prop_assert!(lemma_residual(t, x, LemmaKind::L1).unwrap() >= -1e-12);
        prop_assert!(lemma_residual(t, x, LemmaKind::L2).unwrap() >= -1e-12);
        let t4 = t * dual_entropy::monogamy::l4_domain_max();
        prop_assert!(lemma_residual(t4, x, LemmaKind::L4).unwrap() >= -1e-12);
    }

    #[test]
    fn json_round_trip_is_bit_exact(seed in 0u64..10_000, n in 1usize..=4) {
        let mut s = Sampler::new(seed);
        let psi = s.haar_pure(n).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("state.json");
        psi.write_json_file(&path).unwrap();
        let back = PureState::read_json_file(&path).unwrap();
        prop_assert_eq!(back.num_qubits(), n);
        for (a, b) in psi.amplitudes().iter().zip(back.amplitudes()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn symmetric_states_give_focus_independent_values(n in 3usize..=6) {
        let psi = dual_entropy::states::w_state(n).unwrap();
        let reference = measure_pure(&psi, &Bipartition::single(n, 0).unwrap(), MeasureKind::StEntropy)
            .unwrap()
            .value;
        for k in 1..n {
            let v = measure_pure(&psi, &Bipartition::single(n, k).unwrap(), MeasureKind::StEntropy)
                .unwrap()
                .value;
            prop_assert!((v - reference).abs() < 1e-12);
        }
    }

    #[test]
    fn total_entropy_agrees_with_the_two_level_formula(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed);
        let psi = s.haar_pure(2).unwrap();
        let rho = reduced(&psi, &[0]).unwrap();
        let spec = hermitian_eigs(&rho).unwrap();
        let lam = spec.eigenvalues[0].clamp(0.0, 1.0);
        let direct = 2.0 * dual_entropy::measures::binary_entropy_bits(lam);
        prop_assert!((total_entropy_st(&rho).unwrap() - direct).abs() < 1e-12);
    }
}
