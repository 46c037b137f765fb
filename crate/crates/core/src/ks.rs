//! KS-time solver.
//!
//! The KS-time `t₀` is the smallest positive time at which the volume element
//! reaches unit size, i.e. the root of `ln ΔV(t) = 0`. The equation is solved
//! in the log domain: the upper bound is expanded geometrically until the
//! log-volume turns positive, the bracket is bisected down to the configured
//! relative tolerance, and a final linear interpolation inside the certified
//! bracket places the root.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{gamow_spectrum, has_positive_width, time_reverse, PoleSpectrum, UnitSystem};
use crate::volume::{log_mean_growth_rate, log_volume, VolumeElement};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Relative tolerance on the bracket width around `t₀`.
    pub rel_tol: f64,
    /// Cap on bracket expansions plus bisection steps.
    pub max_iter: usize,
    /// Log-spaced probe count used to locate the first sign change for
    /// spectra with widths of both signs.
    pub scan_points: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_iter: 200,
            scan_points: 1024,
        }
    }
}

impl SolverConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be >= 1".into()));
        }
        if self.scan_points < 2 {
            return Err(Error::InvalidConfig("scan_points must be >= 2".into()));
        }
        Ok(())
    }
}

/// A solved KS-time together with its root certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsSolution {
    /// KS-time in the spectrum's time unit.
    pub t0: f64,
    /// Adimensionalized KS-time `t0 / t_R`.
    #[serde(rename = "T0")]
    pub t0_relaxation: f64,
    /// `|ln ΔV(t0)|`.
    pub residual: f64,
    /// Final enclosing interval.
    pub bracket: (f64, f64),
    pub iterations: usize,
}

impl KsSolution {
    fn saturated() -> Self {
        Self {
            t0: 0.0,
            t0_relaxation: 0.0,
            residual: 0.0,
            bracket: (0.0, 0.0),
            iterations: 0,
        }
    }

    /// Residual bound `rel_tol · max(1, t0 · d ln ΔV/dt)` the solution is
    /// expected to satisfy for spectrum `s`.
    pub fn residual_bound(&self, s: &PoleSpectrum, cfg: &SolverConfig) -> f64 {
        let slope = if self.t0 > 0.0 {
            self.t0 * log_mean_growth_rate(s, self.t0)
        } else {
            0.0
        };
        cfg.rel_tol * slope.abs().max(1.0)
    }
}

/// Smallest positive `t₀` with `ΔV(t₀) = 1`.
pub fn solve_ks_time(
    s: &PoleSpectrum,
    v: &VolumeElement,
    cfg: &SolverConfig,
) -> Result<KsSolution> {
    cfg.validate()?;
    if v.is_saturated() {
        return Ok(KsSolution::saturated());
    }
    if !has_positive_width(s) {
        return Err(Error::NoPositiveRoot);
    }

    let f = |t: f64| log_volume(s, v, t);
    let t_r = s.units().relaxation_time();
    let mut iterations = 0;

    let start = cfg.rel_tol * t_r;
    let mut lo = 0.0;
    let mut hi = start;
    while f(hi) <= 0.0 {
        iterations += 1;
        if iterations > cfg.max_iter || !(hi * 2.0).is_finite() {
            return Err(Error::NonConvergence { iterations, lo, hi });
        }
        lo = hi;
        hi *= 2.0;
    }

    if s.min_gamma() < 0.0 {
        (lo, hi) = scan_first_crossing(&f, start.min(hi), hi, cfg.scan_points);
    }

    while hi - lo > cfg.rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if iterations > cfg.max_iter {
            return Err(Error::NonConvergence { iterations, lo, hi });
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let (f_lo, f_hi) = (f(lo), f(hi));
    let t0 = if f_hi > f_lo {
        (lo + (hi - lo) * (-f_lo / (f_hi - f_lo))).clamp(lo, hi)
    } else {
        0.5 * (lo + hi)
    };

    Ok(KsSolution {
        t0,
        t0_relaxation: t0 / t_r,
        residual: f(t0).abs(),
        bracket: (lo, hi),
        iterations,
    })
}

/// First sign change of `f` on `scan_points` log-spaced probes in
/// `[t_min, t_max]`; `f(0) < 0` is assumed and `f(t_max) > 0` is known.
fn scan_first_crossing(
    f: &impl Fn(f64) -> f64,
    t_min: f64,
    t_max: f64,
    scan_points: usize,
) -> (f64, f64) {
    let ratio = (t_max / t_min).ln() / (scan_points - 1) as f64;
    let mut prev = 0.0;
    for i in 0..scan_points {
        let t = if i + 1 == scan_points {
            t_max
        } else {
            t_min * (ratio * i as f64).exp()
        };
        if f(t) > 0.0 {
            return (prev, t);
        }
        prev = t;
    }
    (prev, t_max)
}

/// KS-time of the time-reversed Gamow model with `n` bath levels, in natural
/// units, so `t0 == t0_relaxation == T₀`.
pub fn solve_gamow(n: usize, dv0: f64, cfg: &SolverConfig) -> Result<KsSolution> {
    let s = time_reverse(&gamow_spectrum(n, UnitSystem::natural())?);
    let v = VolumeElement::new(dv0)?;
    solve_ks_time(&s, &v, cfg)
}

/// Positive root of `x = ln(1 + x/dv0)`, the large-`N` limit of the Gamow
/// saturation equation with `x = 2N·T₀`. For small `dv0` this is the fixed
/// point of `x = ln(x/dv0)`; keeping the `1 +` makes the root exist on all of
/// `0 < dv0 < 1`, with `x → 0` as `dv0 → 1`.
pub fn gamow_fixed_point(dv0: f64) -> Result<f64> {
    if !(dv0 > 0.0 && dv0 < 1.0) {
        return Err(Error::InvalidVolume(dv0));
    }
    // Newton on the convex φ(x) = x − ln(1 + x/dv0), started right of the root.
    let mut x = 2.0 - 2.0 * dv0.ln();
    for _ in 0..200 {
        let phi = x - (x / dv0).ln_1p();
        let dphi = 1.0 - 1.0 / (dv0 + x);
        let next = x - phi / dphi;
        if !(next.is_finite() && next > 0.0) {
            break;
        }
        if (x - next).abs() <= 4.0 * f64::EPSILON * x {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

/// Large-`N` estimate of the Gamow KS-time, `T₀ ≈ x / (2N)`.
pub fn asymptotic_t0(dv0: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::NoBathLevels);
    }
    Ok(gamow_fixed_point(dv0)? / (2.0 * n as f64))
}

/// Large-`N` slope of `h_KS(N)` in units of `γ₀/ħ`: `2 ln(1/dv0) / x`.
pub fn asymptotic_slope(dv0: f64) -> Result<f64> {
    Ok(-2.0 * dv0.ln() / gamow_fixed_point(dv0)?)
}
