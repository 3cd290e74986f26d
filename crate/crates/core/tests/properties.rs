use nucent_core::entropy::shannon;
use nucent_core::fit::{fit_plane, FitSample};
use nucent_core::kinematics::{uniform_entropy, wave_number, wave_number_leading, ParticlePair};
use nucent_core::observables::{partial_cross_sections, probabilities};
use nucent_core::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn normalized(w: &[f64]) -> Vec<f64> {
    let s: f64 = w.iter().sum();
    w.iter().map(|x| x / s).collect()
}

fn pair() -> impl Strategy<Value = ParticlePair> {
    (900.0..1000.0f64, 900.0..250_000.0f64).prop_map(|(m1, m2)| ParticlePair::new(m1, m2).unwrap())
}

fn design() -> impl Strategy<Value = Vec<(f64, f64, f64)>> {
    prop::collection::vec((20.0..1000.0f64, 4.0..240.0f64, 1.0..6.0f64), 6..40).prop_filter(
        "rank 3 with margin",
        |v| {
            let spread = |f: fn(&(f64, f64, f64)) -> f64| {
                let lo = v.iter().map(f).fold(f64::INFINITY, f64::min);
                let hi = v.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
                hi / lo
            };
            spread(|x| x.0) > 2.0 && spread(|x| x.1) > 2.0
        },
    )
}

fn samples(v: &[(f64, f64, f64)]) -> Vec<FitSample> {
    v.iter().map(|&(t, a, s)| FitSample::new(t, a, s)).collect()
}

proptest! {
    #[test]
    fn wave_number_is_monotone_in_energy(p in pair(), t in 0.0..999.0f64, dt in 1e-3..50.0f64) {
        prop_assert!(wave_number(t + dt, p).unwrap() > wave_number(t, p).unwrap());
    }

    #[test]
    fn exact_wave_number_dominates_leading_order(p in pair(), t in 1e-3..1000.0f64) {
        prop_assert!(wave_number(t, p).unwrap() >= wave_number_leading(t, p).unwrap() * (1.0 - 1e-15));
    }

    #[test]
    fn uniform_continuous_entropy_has_half_slope(
        t in 20.0..500.0f64, lambda in 1.01..2.0f64, z in 2u32..82, extra in 0u32..40,
    ) {
        // ln(kR) with the leading-order k: S(λT) − S(T) = ½ ln λ
        let nuc = NucleusSpec::new(z, z + extra, MassModel::MassNumber).unwrap();
        let p = ParticlePair::nucleon_on(Projectile::Neutron, &nuc);
        let a = uniform_entropy(t, &nuc, p).unwrap();
        let b = uniform_entropy(lambda * t, &nuc, p).unwrap();
        prop_assert!((b.entropy_continuous - a.entropy_continuous - 0.5 * lambda.ln()).abs() < 1e-12);
        prop_assert_eq!(a.intercept, b.intercept);
    }

    #[test]
    fn entropy_is_permutation_invariant(w in prop::collection::vec(1e-6..1.0f64, 1..60), seed in any::<u64>()) {
        let p = normalized(&w);
        let mut q = p.clone();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..q.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            q.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = shannon(p.iter().copied()).unwrap();
        let b = shannon(q.iter().copied()).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn splitting_a_mass_increases_entropy(w in prop::collection::vec(1e-3..1.0f64, 1..40), pick in any::<prop::sample::Index>()) {
        let p = normalized(&w);
        let i = pick.index(p.len());
        let mut q = p.clone();
        let half = q[i] / 2.0;
        q[i] = half;
        q.push(half);
        let a = shannon(p.iter().copied()).unwrap();
        let b = shannon(q.iter().copied()).unwrap();
        prop_assert!(b > a);
        prop_assert!((b - a - p[i] * 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn entropy_bounded_by_log_count(w in prop::collection::vec(1e-6..1.0f64, 1..60)) {
        let p = normalized(&w);
        let s = shannon(p.iter().copied()).unwrap();
        prop_assert!(s >= 0.0 && s <= (p.len() as f64).ln() + 1e-12);
    }

    #[test]
    fn probabilities_normalize_for_any_unitary_bounded_s_matrix(
        etas in prop::collection::vec((0.0..1.0f64, -3.2..3.2f64, 0.0..1.0f64, -3.2..3.2f64), 1..50),
        k in 0.1..10.0f64,
    ) {
        let e: Vec<_> = etas
            .iter()
            .map(|&(a, p, b, q)| (Complex64::from_polar(a, p), Complex64::from_polar(b, q)))
            .collect();
        let pw = PartialWaveSet::from_etas(k, &e).unwrap();
        let xs = partial_cross_sections(&pw).unwrap();
        if xs.total > 0.0 {
            let pr = probabilities(&xs).unwrap();
            prop_assert!((pr.sum() - 1.0).abs() < 1e-12);
            prop_assert!(pr.entries().all(|x| x >= 0.0));
        }
    }

    #[test]
    fn fit_ignores_sample_order(v in design(), seed in any::<u64>()) {
        let mut w = v.clone();
        let mut s = seed;
        for i in (1..w.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            w.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = fit_plane(&samples(&v)).unwrap();
        let b = fit_plane(&samples(&w)).unwrap();
        prop_assert!((a.a - b.a).abs() < 1e-12 && (a.b - b.b).abs() < 1e-12 && (a.c - b.c).abs() < 1e-12);
    }

    #[test]
    fn fit_shifts_intercept_with_constant_offset(v in design(), delta in -3.0..3.0f64) {
        let shifted: Vec<_> = v.iter().map(|&(t, a, s)| (t, a, s + delta)).collect();
        let f = fit_plane(&samples(&v)).unwrap();
        let g = fit_plane(&samples(&shifted)).unwrap();
        prop_assert!((g.a - f.a - delta).abs() < 1e-12);
        prop_assert!((g.b - f.b).abs() < 1e-12 && (g.c - f.c).abs() < 1e-12);
    }

    #[test]
    fn fit_absorbs_energy_rescaling_in_intercept(v in design(), lambda in 0.2..5.0f64) {
        let scaled: Vec<_> = v.iter().map(|&(t, a, s)| (lambda * t, a, s)).collect();
        let f = fit_plane(&samples(&v)).unwrap();
        let g = fit_plane(&samples(&scaled)).unwrap();
        prop_assert!((g.a - (f.a - f.b * lambda.ln())).abs() < 1e-10);
        prop_assert!((g.b - f.b).abs() < 1e-10 && (g.c - f.c).abs() < 1e-10);
    }

    #[test]
    fn fit_r_squared_and_residual_ordering(v in design()) {
        let f = fit_plane(&samples(&v)).unwrap();
        prop_assert!((0.0..=1.0).contains(&f.r_squared));
        prop_assert!(f.rms_residual <= f.max_residual + 1e-15);
    }
}
