//! KS-entropy, Lyapunov sums and resonance lifetimes.
//!
//! Two routes lead to the Lyapunov sum at a solved KS-time `t₀`:
//!
//! * the KS-time route, `h_KS = ln(1/ΔV) / t₀`;
//! * the pole route, `Σ σ_i = (1/t₀) ln( (1/N) Σ_i exp(2γ_i t₀/ħ) )`.
//!
//! They agree whenever `t₀` is a root of the saturation equation, which is
//! what [`PesinReport::pole_lyap_sum`] lets callers check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ks::KsSolution;
use crate::spectra::{PoleSpectrum, UnitSystem};
use crate::volume::{log_mean_growth, VolumeElement};

/// KS-entropy in physical units together with the KS characteristic time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsEntropy {
    /// `h_KS` in 1/time.
    pub h_ks: f64,
    /// `h_KS` in units of `γ₀/ħ`.
    pub h_ks_natural: f64,
    /// `τ_KS = 1/h_KS`.
    pub tau_ks: f64,
}

/// `h_KS = ln(1/ΔV) / t₀`.
pub fn ks_entropy_from_time(
    sol: &KsSolution,
    v: &VolumeElement,
    units: &UnitSystem,
) -> Result<KsEntropy> {
    if sol.t0.is_nan() || sol.t0 <= 0.0 {
        return Err(Error::ZeroKsTime);
    }
    let h_ks = -v.dv0().ln() / sol.t0;
    Ok(KsEntropy {
        h_ks,
        h_ks_natural: h_ks * units.relaxation_time(),
        tau_ks: 1.0 / h_ks,
    })
}

/// Lyapunov sum from the poles at the solved KS-time.
pub fn lyapunov_sum_at(s: &PoleSpectrum, sol: &KsSolution) -> f64 {
    log_mean_growth(s, sol.t0) / sol.t0
}

/// Equal-contribution split of a Lyapunov sum over `N` bath oscillators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerModeExponent {
    /// `σ₀′ = h_KS / N` of the time-reversed system (1/time).
    pub sigma_prime: f64,
    /// `σ₀ = −σ₀′` of the original dissipative system.
    pub sigma_original: f64,
    /// Coupling constant `α = σ₀′ ħ/γ₀`.
    pub alpha: f64,
}

/// `h_ks` is in 1/time; `α` comes out dimensionless via `units`.
pub fn per_mode_exponent(h_ks: f64, n_bath: usize, units: &UnitSystem) -> Result<PerModeExponent> {
    if n_bath == 0 {
        return Err(Error::NoBathLevels);
    }
    let sigma_prime = h_ks / n_bath as f64;
    Ok(PerModeExponent {
        sigma_prime,
        sigma_original: -sigma_prime,
        alpha: sigma_prime * units.relaxation_time(),
    })
}

/// Everything derived from one solved system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PesinReport {
    pub h_ks: f64,
    pub tau_ks: f64,
    /// Sum of positive Lyapunov exponents; equal to `h_ks` by Pesin's identity.
    pub lyap_sum: f64,
    /// The same sum evaluated from the poles at `t0`.
    pub pole_lyap_sum: f64,
    pub sigma_per_mode: f64,
    pub sigma_original: f64,
    pub alpha: f64,
    /// True when the report describes the time-reversed (expanding) system.
    pub reversed: bool,
    pub solution: KsSolution,
}

impl PesinReport {
    /// `n_bath` is the number of bath oscillators sharing the Lyapunov sum;
    /// for a Gamow spectrum with `N + 1` poles that is `N`.
    pub fn new(
        s: &PoleSpectrum,
        v: &VolumeElement,
        sol: &KsSolution,
        n_bath: usize,
        reversed: bool,
    ) -> Result<Self> {
        let entropy = ks_entropy_from_time(sol, v, s.units())?;
        let per_mode = per_mode_exponent(entropy.h_ks, n_bath, s.units())?;
        Ok(Self {
            h_ks: entropy.h_ks,
            tau_ks: entropy.tau_ks,
            lyap_sum: entropy.h_ks,
            pole_lyap_sum: lyapunov_sum_at(s, sol),
            sigma_per_mode: per_mode.sigma_prime,
            sigma_original: per_mode.sigma_original,
            alpha: per_mode.alpha,
            reversed,
            solution: *sol,
        })
    }

    /// Relative gap between the KS-time route and the pole route.
    pub fn identity_gap(&self) -> f64 {
        ((self.pole_lyap_sum - self.h_ks) / self.h_ks).abs()
    }
}

/// One row of [`LifetimeTable`]: level `n`, decay rate magnitude `λ_n` and
/// lifetime `t_n = 1/λ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LifetimeRow {
    pub level: usize,
    pub lyapunov: f64,
    pub lifetime: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LifetimeTable {
    pub rows: Vec<LifetimeRow>,
    /// Sign of the exponents in the original system (always −1: the levels
    /// decay). Rates in `rows` are magnitudes.
    pub sign: i8,
}

/// `λ_n = nαγ₀/ħ` and `t_n = ħ/(nαγ₀)` for `n = 1..=levels`.
pub fn lifetimes(alpha: f64, levels: usize, units: &UnitSystem) -> Result<LifetimeTable> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "alpha must be finite and > 0, got {alpha}"
        )));
    }
    if levels == 0 {
        return Err(Error::NoBathLevels);
    }
    let base_rate = alpha * units.gamma0() / units.hbar();
    let rows = (1..=levels)
        .map(|n| {
            let lyapunov = n as f64 * base_rate;
            LifetimeRow {
                level: n,
                lyapunov,
                lifetime: 1.0 / lyapunov,
            }
        })
        .collect();
    Ok(LifetimeTable { rows, sign: -1 })
}

/// Generalized Pesin entropy `H_KS = Σσ′ − αNγ₀/ħ` for a solved
/// time-reversed Gamow spectrum with `N + 1` poles.
pub fn generalized_pesin_residual(s: &PoleSpectrum, sol: &KsSolution, alpha: f64) -> f64 {
    let n_bath = (s.len() - 1) as f64;
    let units = s.units();
    lyapunov_sum_at(s, sol) - alpha * n_bath * units.gamma0() / units.hbar()
}

/// `α` that makes [`generalized_pesin_residual`] vanish.
pub fn self_consistent_alpha(s: &PoleSpectrum, sol: &KsSolution) -> f64 {
    let n_bath = (s.len() - 1) as f64;
    let units = s.units();
    lyapunov_sum_at(s, sol) * units.hbar() / (n_bath * units.gamma0())
}
