//! Order-zero Bessel functions on the small-argument domain `0 < z ≤ 2`.
//!
//! All functions are evaluated from their ascending power series with
//! `q = (z/2)²`:
//!
//! ```text
//! J₀(z) = Σ (−1)ᵐ qᵐ / (m!)²
//! I₀(z) = Σ qᵐ / (m!)²
//! Y₀(z) = (2/π) [ (ln(z/2) + γ) J₀(z) + Σ_{m≥1} (−1)ᵐ⁺¹ hₘ qᵐ / (m!)² ]
//! K₀(z) = −(ln(z/2) + γ) I₀(z) + Σ_{m≥1} hₘ qᵐ / (m!)²
//! ```
//!
//! where `hₘ = 1 + 1/2 + … + 1/m`. The two-term small-argument forms
//! `K₀(z) ≈ −ln(z/2) − γ` and `H₀⁽¹⁾(z) ≈ 1 + (2i/π)(ln(z/2) + γ)` are
//! exposed separately; they differ from the series by `O(z² ln z)`.

mod complex;

pub use complex::ComplexValue;

use std::f64::consts::FRAC_2_PI;

use crate::error::{Error, Result};

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// Upper end of the argument domain accepted by the series evaluators.
pub const SERIES_DOMAIN_MAX: f64 = 2.0;

const SERIES_RTOL: f64 = 1e-16;
const SERIES_MAX_TERMS: u32 = 60;

fn check_series_domain(function: &'static str, z: f64) -> Result<()> {
    if z > 0.0 && z <= SERIES_DOMAIN_MAX {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            z,
            domain: "0 < z <= 2",
        })
    }
}

fn check_positive(function: &'static str, z: f64) -> Result<()> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            function,
            z,
            domain: "0 < z < inf",
        })
    }
}

/// `ln(z/2) + γ`, the logarithmic prefactor shared by Y₀ and K₀.
fn log_prefactor(z: f64) -> f64 {
    (0.5 * z).ln() + EULER_GAMMA
}

/// `Σ_{m≥0} sᵐ qᵐ / (m!)²` with `s = −1` when `alternating`.
fn plain_series(q: f64, alternating: bool) -> f64 {
    let ratio = if alternating { -q } else { q };
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..SERIES_MAX_TERMS {
        let m = f64::from(m);
        term *= ratio / (m * m);
        sum += term;
        if term.abs() < SERIES_RTOL * sum.abs() {
            break;
        }
    }
    sum
}

/// `Σ_{m≥1} sᵐ⁺¹ hₘ qᵐ / (m!)²` with `s = −1` when `alternating`.
fn harmonic_series(q: f64, alternating: bool) -> f64 {
    let ratio = if alternating { -q } else { q };
    // signed qᵐ/(m!)², starting at m = 1 where the sign is +
    let mut power = q;
    let mut harmonic = 1.0;
    let mut sum = q;
    for m in 2..=SERIES_MAX_TERMS {
        let m = f64::from(m);
        power *= ratio / (m * m);
        harmonic += 1.0 / m;
        let term = harmonic * power;
        sum += term;
        if term.abs() < SERIES_RTOL * sum.abs() {
            break;
        }
    }
    sum
}

fn quarter_square(z: f64) -> f64 {
    let half = 0.5 * z;
    half * half
}

/// Bessel function of the first kind J₀(z), `0 < z ≤ 2`.
pub fn bessel_j0(z: f64) -> Result<f64> {
    check_series_domain("bessel_j0", z)?;
    Ok(plain_series(quarter_square(z), true))
}

/// Bessel function of the second kind Y₀(z) (Neumann function N₀), `0 < z ≤ 2`.
pub fn bessel_y0(z: f64) -> Result<f64> {
    check_series_domain("bessel_y0", z)?;
    let q = quarter_square(z);
    let j0 = plain_series(q, true);
    Ok(FRAC_2_PI * (log_prefactor(z) * j0 + harmonic_series(q, true)))
}

/// Modified Bessel function of the second kind K₀(z), `0 < z ≤ 2`.
pub fn bessel_k0(z: f64) -> Result<f64> {
    check_series_domain("bessel_k0", z)?;
    let q = quarter_square(z);
    let i0 = plain_series(q, false);
    Ok(-log_prefactor(z) * i0 + harmonic_series(q, false))
}

/// Hankel function of the first kind `H₀⁽¹⁾(z) = J₀(z) + i Y₀(z)`, `0 < z ≤ 2`.
pub fn hankel1_0(z: f64) -> Result<ComplexValue> {
    Ok(ComplexValue::new(bessel_j0(z)?, bessel_y0(z)?))
}

/// Leading small-argument form `K₀(z) ≈ −ln(z/2) − γ`. Valid for any `z > 0`.
pub fn k0_small_z(z: f64) -> Result<f64> {
    check_positive("k0_small_z", z)?;
    // Written as a negated sum so that it is bit-for-bit the negative of
    // the Hankel imaginary part's logarithmic factor.
    Ok(-log_prefactor(z))
}

/// Leading small-argument form `H₀⁽¹⁾(z) ≈ 1 + (2i/π)(ln(z/2) + γ)`. Valid for any `z > 0`.
pub fn hankel1_0_small_z(z: f64) -> Result<ComplexValue> {
    check_positive("hankel1_0_small_z", z)?;
    Ok(ComplexValue::new(1.0, FRAC_2_PI * log_prefactor(z)))
}
