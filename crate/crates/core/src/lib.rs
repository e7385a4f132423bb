//! Total cross section for scattering from an attractive two-dimensional
//! delta-function potential.
//!
//! The cross section is computed three ways:
//!
//! * the closed form `4π² / (k [π² + 4 ln²x])` ([`cross_section_closed`]),
//! * the partial-wave sum with only the s-wave shifted
//!   ([`cross_section_partial_wave`]),
//! * the ε → 0 limit of the regularized expression
//!   `(1/4k) |K₀(με)/2π − (i/4) H₀⁽¹⁾(kε)|⁻²` ([`limit_extrapolate`]).
//!
//! Keeping only the logarithms of the small-argument expansions
//! ([`RegularizationMode::TruncatedLog`]) drops the constant terms of
//! K₀ and H₀⁽¹⁾ and produces the wrong limit `π² / (k ln²x)`
//! ([`mead_godines_wrong_limit`]).
//!
//! Units are ħ = 2m = 1, so `k` is the momentum and `e0 < 0` the bound-state
//! energy; `μ = √(−e0)` and `x = μ/k`.

pub mod error;
pub mod regularization;
pub mod scattering;
pub mod special_functions;

pub use error::{Error, Result};
pub use regularization::{
    limit_extrapolate, mead_godines_wrong_limit, regularized_bracket, regularized_cross_section,
    wrong_limit_ratio, EpsilonSchedule, LimitEstimate, RegularizationMode, CONVERGENCE_RTOL,
};
pub use scattering::{
    bound_state_scale, cross_section_closed, cross_section_partial_wave, log_x, s_wave_phase_shift,
    sin_sq_from_tan, CrossSection, PhaseShift, ScatteringProblem, Tangent,
};
pub use special_functions::{
    bessel_j0, bessel_k0, bessel_y0, hankel1_0, hankel1_0_small_z, k0_small_z, ComplexValue,
    EULER_GAMMA, SERIES_DOMAIN_MAX,
};
