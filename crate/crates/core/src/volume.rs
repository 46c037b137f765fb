//! Phase-space volume evolution under a pole spectrum.
//!
//! With equal diagonal weights the volume element evolves as
//!
//! ```text
//! ΔV(t) = ΔV/N · Σ_i exp(2 γ_i t / ħ)
//! ```
//!
//! Every sum of exponentials here goes through a max-shifted log-sum-exp so
//! large spectra and long times never overflow.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::PoleSpectrum;

/// Initial volume `ΔV = ħ/S` as a fraction of the bounded region. The
/// volume is considered spread once it reaches [`VolumeElement::SATURATION`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VolumeElement {
    dv0: f64,
}

impl VolumeElement {
    pub const SATURATION: f64 = 1.0;

    pub fn new(dv0: f64) -> Result<Self> {
        if dv0 > 0.0 && dv0 <= Self::SATURATION {
            Ok(Self { dv0 })
        } else {
            Err(Error::InvalidVolume(dv0))
        }
    }

    /// Volume element for quasiclassical parameter `q = S/ħ`.
    pub fn from_quasiclassical(q: f64) -> Result<Self> {
        Self::new(1.0 / q)
    }

    pub fn dv0(&self) -> f64 {
        self.dv0
    }

    pub fn is_saturated(&self) -> bool {
        self.dv0 == Self::SATURATION
    }
}

/// Contraction exponent of the conditionally invariant measure at `time`:
/// `μ(T(A)) = exp(−gamma_escape) μ(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EscapeFactor {
    pub gamma_escape: f64,
    pub time: f64,
}

impl EscapeFactor {
    /// Measure ratio `μ(T(A))/μ(A)`.
    pub fn measure_ratio(&self) -> f64 {
        (-self.gamma_escape).exp()
    }
}

/// `ln Σ exp(x_i)`, shifted by the maximum. Returns `-inf` for an empty
/// iterator.
pub fn log_sum_exp<I>(values: I) -> f64
where
    I: IntoIterator<Item = f64>,
    I::IntoIter: Clone,
{
    let iter = values.into_iter();
    let max = iter.clone().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY || !max.is_finite() {
        return max;
    }
    let sum: f64 = iter.map(|x| (x - max).exp()).sum();
    max + sum.ln()
}

/// `ln( (1/N) Σ_i exp(2 γ_i t / ħ) )`, the log of the mean growth factor.
pub(crate) fn log_mean_growth(s: &PoleSpectrum, t: f64) -> f64 {
    let scale = 2.0 * t / s.units().hbar();
    log_sum_exp(s.gammas().map(|g| g * scale)) - (s.len() as f64).ln()
}

/// Time derivative of [`log_mean_growth`]: the softmax-weighted mean of
/// `2γ_i/ħ`.
pub(crate) fn log_mean_growth_rate(s: &PoleSpectrum, t: f64) -> f64 {
    let hbar = s.units().hbar();
    let scale = 2.0 * t / hbar;
    let max = s
        .gammas()
        .map(|g| g * scale)
        .fold(f64::NEG_INFINITY, f64::max);
    let (num, den) = s.gammas().fold((0.0, 0.0), |(num, den), g| {
        let w = (g * scale - max).exp();
        (num + w * 2.0 * g / hbar, den + w)
    });
    num / den
}

/// `ln ΔV(t)`. Never overflows.
pub fn log_volume(s: &PoleSpectrum, v: &VolumeElement, t: f64) -> f64 {
    if t == 0.0 {
        return v.dv0.ln();
    }
    v.dv0.ln() + log_mean_growth(s, t)
}

/// `ΔV(t)`; fails with [`Error::VolumeOutOfRange`] when the value leaves the
/// normal f64 range. Negative `t` evolves backwards.
pub fn evolve_volume(s: &PoleSpectrum, v: &VolumeElement, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(v.dv0);
    }
    let lv = log_volume(s, v, t);
    let value = lv.exp();
    if value.is_finite() && value >= f64::MIN_POSITIVE {
        Ok(value)
    } else {
        Err(Error::VolumeOutOfRange {
            time: t,
            log_volume: lv,
        })
    }
}

/// Escape exponent `γ = −ln( (1/N) Σ_i exp(2γ_i t/ħ) )`. Independent of the
/// initial volume. At `t = 1` on the time-reversed spectrum this is the
/// contraction factor of the conditionally invariant measure under `T⁻¹`.
pub fn escape_factor(s: &PoleSpectrum, t: f64) -> EscapeFactor {
    let gamma_escape = if t == 0.0 {
        0.0
    } else {
        -log_mean_growth(s, t)
    };
    EscapeFactor {
        gamma_escape,
        time: t,
    }
}
