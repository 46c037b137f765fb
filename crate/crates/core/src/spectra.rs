//! Pole spectra of non-Hermitian Hamiltonians.
//!
//! A spectrum is an ordered list of complex eigenvalues `E_k = ħω_k + iγ_k`.
//! Only the imaginary parts `γ_k` enter the phase-space quantities computed
//! elsewhere in the crate; the real parts are carried along for completeness
//! and for round-tripping spectrum files.
//!
//! # File format
//!
//! ```text
//! # hbar=1 gamma0=1
//! # omega gamma
//! 0 0
//! 1 -1
//! 2 -2
//! ```
//!
//! One pole per line as two decimal floats, `#` starts a comment. The
//! `hbar=` / `gamma0=` header is optional and defaults to natural units.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Action unit `ħ` and reference width `γ₀`, with relaxation time `t_R = ħ/γ₀`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    hbar: f64,
    gamma0: f64,
    t_r: f64,
}

impl UnitSystem {
    pub fn new(hbar: f64, gamma0: f64) -> Result<Self> {
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(Error::InvalidUnits(format!(
                "hbar must be finite and > 0, got {hbar}"
            )));
        }
        if !(gamma0.is_finite() && gamma0 > 0.0) {
            return Err(Error::InvalidUnits(format!(
                "gamma0 must be finite and > 0, got {gamma0}"
            )));
        }
        Ok(Self {
            hbar,
            gamma0,
            t_r: hbar / gamma0,
        })
    }

    /// `ħ = γ₀ = 1`: times are measured in `t_R`, rates in `γ₀/ħ`.
    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            gamma0: 1.0,
            t_r: 1.0,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn gamma0(&self) -> f64 {
        self.gamma0
    }

    /// Relaxation (decoherence) time `t_R = ħ/γ₀`.
    pub fn relaxation_time(&self) -> f64 {
        self.t_r
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::natural()
    }
}

/// One complex eigenvalue `ħω + iγ`. Negative `gamma` means decay.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub omega: f64,
    pub gamma: f64,
}

impl Pole {
    pub fn new(omega: f64, gamma: f64) -> Self {
        Self { omega, gamma }
    }

    /// Resonance width `-γ`; positive for a decaying state.
    pub fn width(&self) -> f64 {
        -self.gamma
    }
}

/// Ordered, non-empty list of poles together with the unit system they are
/// expressed in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoleSpectrum {
    poles: Vec<Pole>,
    units: UnitSystem,
}

impl PoleSpectrum {
    pub fn new(poles: Vec<Pole>, units: UnitSystem) -> Result<Self> {
        if poles.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        for (index, p) in poles.iter().enumerate() {
            if !(p.omega.is_finite() && p.gamma.is_finite()) {
                return Err(Error::NonFinitePole {
                    index,
                    omega: p.omega,
                    gamma: p.gamma,
                });
            }
        }
        Ok(Self { poles, units })
    }

    /// Spectrum from imaginary parts only; every `omega` is zero.
    pub fn from_gammas(gammas: &[f64], units: UnitSystem) -> Result<Self> {
        Self::new(gammas.iter().map(|&g| Pole::new(0.0, g)).collect(), units)
    }

    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    pub fn units(&self) -> &UnitSystem {
        &self.units
    }

    /// Number of poles `N` (always ≥ 1).
    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn gammas(&self) -> impl Iterator<Item = f64> + Clone + '_ {
        self.poles.iter().map(|p| p.gamma)
    }

    pub fn max_gamma(&self) -> f64 {
        self.gammas().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_gamma(&self) -> f64 {
        self.gammas().fold(f64::INFINITY, f64::min)
    }

    /// Same poles, different unit system.
    pub fn with_units(mut self, units: UnitSystem) -> Self {
        self.units = units;
        self
    }
}

/// Truncated Gamow-model spectrum `z_n = n(ħω₀ − iγ₀)`, `n = 0..=levels`,
/// with `ω₀ = 1`.
///
/// This is the original, decaying spectrum (`γ_k = −kγ₀`); use
/// [`time_reverse`] to obtain the expanding one.
pub fn gamow_spectrum(levels: usize, units: UnitSystem) -> Result<PoleSpectrum> {
    gamow_spectrum_with_frequency(levels, 1.0, units)
}

pub fn gamow_spectrum_with_frequency(
    levels: usize,
    omega0: f64,
    units: UnitSystem,
) -> Result<PoleSpectrum> {
    if levels == 0 {
        return Err(Error::NoBathLevels);
    }
    let gamma0 = units.gamma0();
    let poles = (0..=levels)
        .map(|k| {
            let k = k as f64;
            Pole::new(k * omega0, -k * gamma0)
        })
        .collect();
    PoleSpectrum::new(poles, units)
}

/// `t → −t`, realised on the spectrum as `γ_k → −γ_k`.
pub fn time_reverse(s: &PoleSpectrum) -> PoleSpectrum {
    PoleSpectrum {
        poles: s
            .poles
            .iter()
            .map(|p| Pole::new(p.omega, -p.gamma))
            .collect(),
        units: s.units,
    }
}

/// True iff some pole has `γ > 0`, which is required for an initial volume
/// smaller than one to ever spread to unit size.
pub fn has_positive_width(s: &PoleSpectrum) -> bool {
    s.gammas().any(|g| g > 0.0)
}

impl FromStr for PoleSpectrum {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut hbar = 1.0;
        let mut gamma0 = 1.0;
        let mut poles = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                for token in comment.split_whitespace() {
                    let Some((key, value)) = token.split_once('=') else {
                        continue;
                    };
                    let target = match key {
                        "hbar" => &mut hbar,
                        "gamma0" => &mut gamma0,
                        _ => continue,
                    };
                    *target = value.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("bad value for {key}: {value:?}"),
                    })?;
                }
                continue;
            }

            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"omega gamma\", got {} fields", fields.len()),
                });
            }
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("not a number: {s:?}"),
                })
            };
            poles.push(Pole::new(parse(fields[0])?, parse(fields[1])?));
        }

        let units = UnitSystem::new(hbar, gamma0)?;
        PoleSpectrum::new(poles, units)
    }
}

impl fmt::Display for PoleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# hbar={} gamma0={}", self.units.hbar, self.units.gamma0)?;
        for p in &self.poles {
            writeln!(f, "{} {}", p.omega, p.gamma)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gammas(s: &PoleSpectrum) -> Vec<f64> {
        s.gammas().collect()
    }

    #[test]
    fn gamow_small_cases() {
        let s = gamow_spectrum(2, UnitSystem::natural()).unwrap();
        assert_eq!(gammas(&s), vec![0.0, -1.0, -2.0]);
        assert_eq!(s.poles()[2].omega, 2.0);

        let s = gamow_spectrum(1, UnitSystem::natural()).unwrap();
        assert_eq!(gammas(&s), vec![0.0, -1.0]);

        let units = UnitSystem::new(1.0, 0.5).unwrap();
        let s = gamow_spectrum(5, units).unwrap();
        assert_eq!(gammas(&s), vec![0.0, -0.5, -1.0, -1.5, -2.0, -2.5]);
    }

    #[test]
    fn gamow_rejects_zero_levels() {
        assert_eq!(
            gamow_spectrum(0, UnitSystem::natural()),
            Err(Error::NoBathLevels)
        );
    }

    #[test]
    fn reverse_flips_gamma_only() {
        let s = gamow_spectrum(2, UnitSystem::natural()).unwrap();
        let r = time_reverse(&s);
        assert_eq!(gammas(&r), vec![0.0, 1.0, 2.0]);
        assert_eq!(r.poles()[1].omega, s.poles()[1].omega);

        let s = PoleSpectrum::from_gammas(&[0.3, -0.3], UnitSystem::natural()).unwrap();
        assert_eq!(gammas(&time_reverse(&s)), vec![-0.3, 0.3]);
    }

    #[test]
    fn positive_width() {
        let u = UnitSystem::natural();
        assert!(!has_positive_width(
            &PoleSpectrum::from_gammas(&[0.0, -1.0, -2.0], u).unwrap()
        ));
        assert!(has_positive_width(
            &PoleSpectrum::from_gammas(&[0.0, 1.0, 2.0], u).unwrap()
        ));
        assert!(!has_positive_width(
            &PoleSpectrum::from_gammas(&[0.0], u).unwrap()
        ));
    }

    #[test]
    fn invalid_inputs() {
        assert!(UnitSystem::new(0.0, 1.0).is_err());
        assert!(UnitSystem::new(1.0, -1.0).is_err());
        assert!(UnitSystem::new(f64::NAN, 1.0).is_err());
        assert_eq!(
            PoleSpectrum::new(vec![], UnitSystem::natural()),
            Err(Error::EmptySpectrum)
        );
        assert!(matches!(
            PoleSpectrum::from_gammas(&[0.0, f64::INFINITY], UnitSystem::natural()),
            Err(Error::NonFinitePole { index: 1, .. })
        ));
    }

    #[test]
    fn relaxation_time() {
        let u = UnitSystem::new(2.0, 0.5).unwrap();
        assert_eq!(u.relaxation_time(), 4.0);
        assert_eq!(u.relaxation_time() * u.gamma0(), u.hbar());
    }

    #[test]
    fn parse_file() {
        let text = "# hbar=2 gamma0=0.5\n# comment line\n0 0\n\n1.5 -0.25  \n  2 3e-1\n";
        let s: PoleSpectrum = text.parse().unwrap();
        assert_eq!(s.units().hbar(), 2.0);
        assert_eq!(s.units().gamma0(), 0.5);
        assert_eq!(gammas(&s), vec![0.0, -0.25, 0.3]);
        assert_eq!(s.poles()[1].omega, 1.5);

        let s: PoleSpectrum = "1 -1\n".parse().unwrap();
        assert_eq!(*s.units(), UnitSystem::natural());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "0 0\n1\n".parse::<PoleSpectrum>(),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            "0 x\n".parse::<PoleSpectrum>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "# hbar=abc\n0 0".parse::<PoleSpectrum>(),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            "# only comments\n".parse::<PoleSpectrum>(),
            Err(Error::EmptySpectrum)
        );
        assert!(matches!(
            "# gamma0=0\n0 0".parse::<PoleSpectrum>(),
            Err(Error::InvalidUnits(_))
        ));
    }

    proptest! {
        #[test]
        fn reverse_is_involution(gs in prop::collection::vec(-1e6f64..1e6, 1..50)) {
            let s = PoleSpectrum::from_gammas(&gs, UnitSystem::natural()).unwrap();
            prop_assert_eq!(time_reverse(&time_reverse(&s)), s);
        }

        #[test]
        fn gamow_gammas_are_exact_multiples(n in 1usize..2000, g0 in 1e-3f64..1e3) {
            let s = gamow_spectrum(n, UnitSystem::new(1.0, g0).unwrap()).unwrap();
            prop_assert_eq!(s.len(), n + 1);
            for (k, g) in s.gammas().enumerate() {
                prop_assert_eq!(g, -(k as f64) * g0);
            }
            prop_assert!(!has_positive_width(&s));
            prop_assert!(has_positive_width(&time_reverse(&s)));
        }

        #[test]
        fn text_round_trip(gs in prop::collection::vec(-1e3f64..1e3, 1..20), hbar in 1e-3f64..10.0) {
            let units = UnitSystem::new(hbar, 1.0).unwrap();
            let s = PoleSpectrum::new(
                gs.iter().enumerate().map(|(k, &g)| Pole::new(k as f64 * 0.1, g)).collect(),
                units,
            ).unwrap();
            let back: PoleSpectrum = s.to_string().parse().unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
