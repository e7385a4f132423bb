//! Scattering problem definition and the two closed routes to σ: the
//! direct formula and the partial-wave sum.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// One physical scenario: momentum `k > 0` and bound-state energy `e0 < 0`,
/// in units with ħ = 2m = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringProblem {
    k: f64,
    e0: f64,
}

impl ScatteringProblem {
    pub fn new(k: f64, e0: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::InvalidProblem {
                field: "k",
                value: k,
                reason: "momentum must be finite",
            });
        }
        if k <= 0.0 {
            return Err(Error::InvalidProblem {
                field: "k",
                value: k,
                reason: "momentum must be positive",
            });
        }
        if !e0.is_finite() {
            return Err(Error::InvalidProblem {
                field: "e0",
                value: e0,
                reason: "bound-state energy must be finite",
            });
        }
        if e0 >= 0.0 {
            return Err(Error::InvalidProblem {
                field: "e0",
                value: e0,
                reason: "bound-state energy must be negative",
            });
        }
        Ok(Self { k, e0 })
    }

    /// Builds the problem with `ln x = log_x` at momentum `k`, i.e.
    /// `e0 = −(k e^{log_x})²`.
    pub fn from_log_x(k: f64, log_x: f64) -> Result<Self> {
        let mu = k * log_x.exp();
        Self::new(k, -(mu * mu))
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn e0(&self) -> f64 {
        self.e0
    }

    /// `μ = √(−e0)`.
    pub fn bound_state_scale(&self) -> f64 {
        (-self.e0).sqrt()
    }

    /// `x = μ / k`.
    pub fn x(&self) -> f64 {
        self.bound_state_scale() / self.k
    }

    /// `ln x`; zero exactly at resonance `k = μ`.
    pub fn log_x(&self) -> f64 {
        self.x().ln()
    }

    /// `tan δ₀ = −π / (2 ln x)`, with the pole at `ln x = 0` kept symbolic.
    pub fn s_wave_tangent(&self) -> Tangent {
        let log_x = self.log_x();
        if log_x == 0.0 {
            Tangent::Infinite
        } else {
            Tangent::Finite(-PI / (2.0 * log_x))
        }
    }
}

/// Free-function form of [`ScatteringProblem::bound_state_scale`].
pub fn bound_state_scale(p: &ScatteringProblem) -> f64 {
    p.bound_state_scale()
}

/// Free-function form of [`ScatteringProblem::log_x`].
pub fn log_x(p: &ScatteringProblem) -> f64 {
    p.log_x()
}

/// A tangent value that may sit on the pole at π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tangent {
    Finite(f64),
    Infinite,
}

/// Total cross section σ, a length (units of 1/k).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CrossSection(f64);

impl CrossSection {
    pub fn sigma(self) -> f64 {
        self.0
    }

    /// `σ·k`, bounded above by 4 (one unitarity-saturated channel).
    pub fn sigma_times_k(self, p: &ScatteringProblem) -> f64 {
        self.0 * p.k()
    }
}

/// s-wave phase shift δ₀ in radians, on the branch `(0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PhaseShift(f64);

impl PhaseShift {
    pub fn delta0(self) -> f64 {
        self.0
    }
}

/// `σ = 4π² / (k [π² + 4 ln²x])`.
pub fn cross_section_closed(p: &ScatteringProblem) -> CrossSection {
    let log_x = p.log_x();
    let pi_sq = PI * PI;
    CrossSection(4.0 * pi_sq / (p.k() * (pi_sq + 4.0 * log_x * log_x)))
}

/// δ₀ from `tan δ₀ = −π / (2 ln x)`, normalized to `(0, π)` so that it is
/// continuous through the resonance where δ₀ = π/2.
pub fn s_wave_phase_shift(p: &ScatteringProblem) -> PhaseShift {
    // atan2 with a positive first argument lands in (0, π) and returns π/2
    // exactly when ln x = 0.
    PhaseShift(PI.atan2(-2.0 * p.log_x()))
}

/// `sin²z` from `tan z` via `tan²z / (1 + tan²z)`; exactly 1 on the pole.
pub fn sin_sq_from_tan(t: Tangent) -> f64 {
    match t {
        Tangent::Infinite => 1.0,
        Tangent::Finite(t) if t.abs() <= 1.0 => {
            let t_sq = t * t;
            t_sq / (1.0 + t_sq)
        }
        // same identity divided through by tan²z; avoids overflow of t² near the pole
        Tangent::Finite(t) => {
            let cot = 1.0 / t;
            1.0 / (1.0 + cot * cot)
        }
    }
}

/// `σ = (4/k) Σ_{|m| ≤ m_max} sin²δₘ`, where a zero-range potential only
/// shifts the s-wave, so every `m ≠ 0` term is zero.
pub fn cross_section_partial_wave(p: &ScatteringProblem, m_max: u32) -> CrossSection {
    let sum: f64 = (-i64::from(m_max)..=i64::from(m_max))
        .map(|m| partial_wave_sin_sq(p, m))
        .sum();
    CrossSection(4.0 / p.k() * sum)
}

fn partial_wave_sin_sq(p: &ScatteringProblem, m: i64) -> f64 {
    if m == 0 {
        sin_sq_from_tan(p.s_wave_tangent())
    } else {
        0.0
    }
}
