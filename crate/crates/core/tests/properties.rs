use std::f64::consts::PI;

use delta2d::{
    cross_section_closed, cross_section_partial_wave, limit_extrapolate, mead_godines_wrong_limit,
    regularized_cross_section, s_wave_phase_shift, wrong_limit_ratio, EpsilonSchedule,
    RegularizationMode, ScatteringProblem,
};
use proptest::prelude::*;

const GRID_K: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 10.0];
const GRID_LOG_X: [f64; 7] = [-3.0, -1.0, -0.1, 0.0, 0.1, 1.0, 3.0];

fn grid() -> impl Iterator<Item = ScatteringProblem> {
    GRID_K.into_iter().flat_map(|k| {
        GRID_LOG_X
            .into_iter()
            .map(move |l| ScatteringProblem::from_log_x(k, l).unwrap())
    })
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn problem_strategy() -> impl Strategy<Value = ScatteringProblem> {
    (-3.0f64..1.5, -6.0f64..6.0).prop_map(|(log10_k, log_x)| {
        ScatteringProblem::from_log_x(10f64.powf(log10_k), log_x).unwrap()
    })
}

#[test]
fn grid_route_equivalence() {
    for p in grid() {
        let closed = cross_section_closed(&p).sigma();
        for m in [0, 1, 7, 100] {
            let pw = cross_section_partial_wave(&p, m).sigma();
            assert!(rel(pw, closed) <= 1e-12, "{p:?} m={m}");
        }
        let limit = limit_extrapolate(
            &p,
            &EpsilonSchedule::default_for(&p),
            RegularizationMode::Full,
        )
        .unwrap();
        assert!(rel(limit.sigma_limit, closed) <= 1e-6, "{p:?}: {limit:?}");
        let asym = limit_extrapolate(
            &p,
            &EpsilonSchedule::default_for(&p),
            RegularizationMode::Asymptotic,
        )
        .unwrap();
        assert!(rel(asym.sigma_limit, closed) <= 1e-8, "{p:?}: {asym:?}");
    }
}

#[test]
fn grid_truncated_log_discrepancy() {
    for p in grid().filter(|p| p.log_x().abs() > 1e-3) {
        let est = limit_extrapolate(
            &p,
            &EpsilonSchedule::default_for(&p),
            RegularizationMode::TruncatedLog,
        )
        .unwrap();
        assert!(est.converged);
        assert!(rel(est.sigma_limit, mead_godines_wrong_limit(&p).unwrap()) <= 1e-8);
        let ratio = est.sigma_limit / cross_section_closed(&p).sigma();
        assert!(rel(ratio, wrong_limit_ratio(&p).unwrap()) <= 1e-8);
    }
}

#[test]
fn grid_full_mode_error_decreases() {
    for p in grid() {
        let closed = cross_section_closed(&p).sigma();
        let est = limit_extrapolate(
            &p,
            &EpsilonSchedule::default_for(&p),
            RegularizationMode::Full,
        )
        .unwrap();
        let errs: Vec<f64> = est
            .samples
            .iter()
            .filter(|&&(eps, _)| eps < 1e-2)
            .map(|&(_, s)| (s - closed).abs())
            .collect();
        // below ~1e-15 relative the error is rounding noise
        let resolvable: Vec<f64> = errs.into_iter().filter(|&e| e > 1e-13 * closed).collect();
        assert!(
            resolvable.windows(2).all(|w| w[1] < w[0]),
            "{p:?}: {resolvable:?}"
        );
    }
}

proptest! {
    #[test]
    fn unitarity(p in problem_strategy()) {
        let cs = cross_section_closed(&p);
        prop_assert!(cs.sigma() > 0.0);
        prop_assert!(cs.sigma_times_k(&p) <= 4.0);
        prop_assert!(cross_section_partial_wave(&p, 3).sigma_times_k(&p) <= 4.0);
    }

    #[test]
    fn log_x_symmetry(log10_k in -3.0f64..1.5, log_x in -6.0f64..6.0) {
        let k = 10f64.powf(log10_k);
        let a = cross_section_closed(&ScatteringProblem::from_log_x(k, log_x).unwrap()).sigma();
        let b = cross_section_closed(&ScatteringProblem::from_log_x(k, -log_x).unwrap()).sigma();
        prop_assert!(rel(a, b) <= 1e-12);
    }

    #[test]
    fn resonance_is_maximum(k in 0.01f64..20.0, a in 0.0f64..5.0, b in 0.0f64..5.0) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assume!(hi - lo > 1e-6);
        let sk = |l: f64| {
            let p = ScatteringProblem::from_log_x(k, l).unwrap();
            cross_section_closed(&p).sigma_times_k(&p)
        };
        prop_assert!(sk(lo) > sk(hi));
    }

    #[test]
    fn partial_wave_independent_of_m_max(p in problem_strategy(), m in 0u32..200) {
        prop_assert_eq!(cross_section_partial_wave(&p, 0), cross_section_partial_wave(&p, m));
    }

    #[test]
    fn phase_shift_consistent(p in problem_strategy()) {
        let delta0 = s_wave_phase_shift(&p).delta0();
        prop_assert!(delta0 > 0.0 && delta0 < PI);
        let s = delta0.sin();
        let via_phase = 4.0 / p.k() * s * s;
        prop_assert!(rel(via_phase, cross_section_closed(&p).sigma()) <= 1e-12);
    }

    #[test]
    fn truncated_log_eps_independent(
        p in problem_strategy().prop_filter("off resonance", |p| p.log_x().abs() >= 0.1),
        e1 in -9.0f64..-1.0,
        e2 in -9.0f64..-1.0,
    ) {
        let mode = RegularizationMode::TruncatedLog;
        let a = regularized_cross_section(&p, 10f64.powf(e1), mode).unwrap();
        let b = regularized_cross_section(&p, 10f64.powf(e2), mode).unwrap();
        prop_assert!(rel(a, b) <= 1e-12);
    }

    #[test]
    fn regularized_sigma_positive(p in problem_strategy(), frac in 1e-6f64..1.0) {
        let eps = frac * 2.0 / p.bound_state_scale().max(p.k());
        for mode in [RegularizationMode::Full, RegularizationMode::Asymptotic] {
            let sigma = regularized_cross_section(&p, eps, mode).unwrap();
            prop_assert!(sigma > 0.0 && sigma.is_finite());
        }
    }

    #[test]
    fn limit_samples_ordered(p in problem_strategy()) {
        let est = limit_extrapolate(&p, &EpsilonSchedule::default_for(&p), RegularizationMode::Full)
            .unwrap();
        prop_assert!(est.samples.windows(2).all(|w| w[1].0 < w[0].0));
        prop_assert_eq!(est.sigma_limit, est.samples.last().unwrap().1);
        prop_assert!(est.error_estimate >= 0.0);
    }
}
