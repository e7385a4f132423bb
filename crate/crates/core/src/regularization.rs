//! The regularized cross section at finite cutoff ε and its ε → 0 limit.
//!
//! ```text
//! σ(ε) = (1/4k) · | K₀(με)/2π − (i/4) H₀⁽¹⁾(kε) |⁻²
//! ```
//!
//! The bracket can be evaluated with the full series ([`RegularizationMode::Full`]),
//! with the two-term small-argument forms ([`RegularizationMode::Asymptotic`]),
//! or with only the logarithms kept ([`RegularizationMode::TruncatedLog`]).
//! The first two converge to the closed-form cross section; the last one is
//! ε-independent and equals `π² / (k ln²x)`, which misses the `π²` term in the
//! denominator of the correct result.

use std::f64::consts::{FRAC_2_PI, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scattering::ScatteringProblem;
use crate::special_functions::{
    bessel_k0, hankel1_0, hankel1_0_small_z, k0_small_z, ComplexValue, SERIES_DOMAIN_MAX,
};

/// Relative difference of the last two samples below which a limit study
/// is reported as converged.
pub const CONVERGENCE_RTOL: f64 = 1e-8;

/// `1/(2π)`, formed as `(2/π)/4` so that it is an exact power-of-two
/// rescaling of the `2/π` used by the Hankel forms.
const FRAC_1_2PI: f64 = FRAC_2_PI * 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegularizationMode {
    /// Series K₀ and H₀⁽¹⁾.
    Full,
    /// `K₀ ≈ −ln(z/2) − γ`, `H₀⁽¹⁾ ≈ 1 + (2i/π)(ln(z/2) + γ)`.
    Asymptotic,
    /// `K₀ ≈ −ln z`, `H₀⁽¹⁾ ≈ (2i/π) ln z`: the constants 1, γ and ln 2 are dropped.
    TruncatedLog,
}

impl RegularizationMode {
    pub const ALL: [Self; 3] = [Self::Full, Self::Asymptotic, Self::TruncatedLog];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Full => "full",
            Self::Asymptotic => "asymptotic",
            Self::TruncatedLog => "truncated-log",
        }
    }
}

impl fmt::Display for RegularizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegularizationMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "full" => Ok(Self::Full),
            "asymptotic" => Ok(Self::Asymptotic),
            "truncated-log" | "truncated_log" => Ok(Self::TruncatedLog),
            other => Err(format!(
                "unknown mode '{other}' (expected full, asymptotic or truncated-log)"
            )),
        }
    }
}

/// Geometric cutoff sequence `eps_start · factorⁱ`, `i = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonSchedule {
    eps_start: f64,
    factor: f64,
    count: usize,
}

impl Default for EpsilonSchedule {
    /// `10⁻², 10⁻³, …, 10⁻⁶`.
    fn default() -> Self {
        Self {
            eps_start: 1e-2,
            factor: 1e-1,
            count: 5,
        }
    }
}

impl EpsilonSchedule {
    pub fn new(eps_start: f64, factor: f64, count: usize) -> Result<Self> {
        if !(eps_start > 0.0 && eps_start.is_finite()) {
            return Err(Error::InvalidSchedule(format!(
                "eps_start must be positive and finite, got {eps_start}"
            )));
        }
        if !(factor > 0.0 && factor < 1.0) {
            return Err(Error::InvalidSchedule(format!(
                "factor must lie in (0, 1), got {factor}"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidSchedule(format!(
                "count must be at least 2, got {count}"
            )));
        }
        let schedule = Self {
            eps_start,
            factor,
            count,
        };
        if schedule.values().any(|eps| eps <= 0.0) {
            return Err(Error::InvalidSchedule(
                "schedule underflows to zero".to_owned(),
            ));
        }
        Ok(schedule)
    }

    /// The default schedule, with its start lowered to `1/max(μ, k)` when
    /// `10⁻²` would put `με` or `kε` outside the series domain.
    pub fn default_for(p: &ScatteringProblem) -> Self {
        let default = Self::default();
        let scale = p.bound_state_scale().max(p.k());
        if default.eps_start * scale <= SERIES_DOMAIN_MAX {
            default
        } else {
            Self {
                eps_start: 1.0 / scale,
                ..default
            }
        }
    }

    pub fn eps_start(&self) -> f64 {
        self.eps_start
    }

    pub fn factor(&self) -> f64 {
        self.factor
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.eps_start * self.factor.powi(i as i32))
    }

    /// Checks that every `με` and `kε` stays within the series domain.
    pub fn validate_for(&self, p: &ScatteringProblem) -> Result<()> {
        // the schedule is decreasing, so the first value is the binding one
        check_cutoff_domain(p, self.eps_start)
    }
}

fn check_cutoff_domain(p: &ScatteringProblem, eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::Domain {
            function: "regularized_cross_section",
            z: eps,
            domain: "eps > 0",
        });
    }
    let arg = p.bound_state_scale().max(p.k()) * eps;
    if arg > SERIES_DOMAIN_MAX {
        return Err(Error::Domain {
            function: "regularized_cross_section",
            z: arg,
            domain: "mu*eps <= 2 and k*eps <= 2",
        });
    }
    Ok(())
}

/// The complex bracket `K₀(με)/2π − (i/4) H₀⁽¹⁾(kε)` under `mode`.
pub fn regularized_bracket(
    p: &ScatteringProblem,
    eps: f64,
    mode: RegularizationMode,
) -> Result<ComplexValue> {
    let mu_eps = p.bound_state_scale() * eps;
    let k_eps = p.k() * eps;
    let (k0, h0) = match mode {
        RegularizationMode::Full => {
            check_cutoff_domain(p, eps)?;
            (bessel_k0(mu_eps)?, hankel1_0(k_eps)?)
        }
        RegularizationMode::Asymptotic => {
            check_cutoff_domain(p, eps)?;
            (k0_small_z(mu_eps)?, hankel1_0_small_z(k_eps)?)
        }
        RegularizationMode::TruncatedLog => {
            if !(mu_eps > 0.0 && k_eps > 0.0 && mu_eps.is_finite() && k_eps.is_finite()) {
                return Err(Error::Domain {
                    function: "regularized_cross_section",
                    z: eps,
                    domain: "eps > 0",
                });
            }
            let k0 = -mu_eps.ln();
            let h0 = ComplexValue::new(0.0, FRAC_2_PI * k_eps.ln());
            (k0, h0)
        }
    };
    // −(i/4)·H = H·i·(−1/4); both steps are exact
    Ok(ComplexValue::from_real(FRAC_1_2PI * k0) + h0.mul_i().scale(-0.25))
}

/// σ(ε) under `mode`.
pub fn regularized_cross_section(
    p: &ScatteringProblem,
    eps: f64,
    mode: RegularizationMode,
) -> Result<f64> {
    let modulus_sq = regularized_bracket(p, eps, mode)?.modulus_sq();
    if modulus_sq.is_nan() || modulus_sq <= 0.0 {
        return Err(Error::DegenerateBracket { eps });
    }
    Ok(1.0 / (4.0 * p.k() * modulus_sq))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitEstimate {
    /// σ at the smallest scheduled ε.
    pub sigma_limit: f64,
    /// `|σ(ε_last) − σ(ε_prev)|`.
    pub error_estimate: f64,
    /// `(ε, σ(ε))` in schedule order, ε strictly decreasing.
    pub samples: Vec<(f64, f64)>,
    /// Whether the last two samples agree to [`CONVERGENCE_RTOL`].
    pub converged: bool,
    /// Observed order `p` in `Δσ ∝ εᵖ`, from the last three samples.
    /// `None` when fewer than three samples exist or a difference is exactly zero.
    pub order_estimate: Option<f64>,
}

/// Evaluates σ(ε) along `schedule` and reports the smallest-ε value as the limit.
///
/// No acceleration is applied: the neglected terms are `O(ε² ln ε)`, so the
/// last sample already sits at the limit for the default schedule.
pub fn limit_extrapolate(
    p: &ScatteringProblem,
    schedule: &EpsilonSchedule,
    mode: RegularizationMode,
) -> Result<LimitEstimate> {
    schedule.validate_for(p)?;
    let samples = schedule
        .values()
        .map(|eps| regularized_cross_section(p, eps, mode).map(|sigma| (eps, sigma)))
        .collect::<Result<Vec<_>>>()?;

    let n = samples.len();
    let last = samples[n - 1].1;
    let prev = samples[n - 2].1;
    let error_estimate = (last - prev).abs();
    let converged = error_estimate <= CONVERGENCE_RTOL * last.abs();

    let order_estimate = if n >= 3 {
        let d_prev = (prev - samples[n - 3].1).abs();
        if d_prev > 0.0 && error_estimate > 0.0 {
            Some((d_prev / error_estimate).ln() / (1.0 / schedule.factor()).ln())
        } else {
            None
        }
    } else {
        None
    };

    Ok(LimitEstimate {
        sigma_limit: last,
        error_estimate,
        samples,
        converged,
        order_estimate,
    })
}

/// The limit obtained when only the `ln z` terms of K₀ and H₀⁽¹⁾ are kept:
/// `π² / (k ln²x)`. Singular at resonance.
pub fn mead_godines_wrong_limit(p: &ScatteringProblem) -> Result<f64> {
    let log_x = p.log_x();
    if log_x == 0.0 {
        return Err(Error::SingularInput(
            "log-only limit diverges at resonance (ln x = 0)",
        ));
    }
    Ok(PI * PI / (p.k() * log_x * log_x))
}

/// `wrong / correct = (π² + 4 ln²x) / (4 ln²x)`.
pub fn wrong_limit_ratio(p: &ScatteringProblem) -> Result<f64> {
    let log_x = p.log_x();
    if log_x == 0.0 {
        return Err(Error::SingularInput(
            "log-only limit diverges at resonance (ln x = 0)",
        ));
    }
    let four_log_sq = 4.0 * log_x * log_x;
    Ok((PI * PI + four_log_sq) / four_log_sq)
}
