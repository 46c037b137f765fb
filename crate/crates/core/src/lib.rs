//! Phase-space dynamics from the pole spectrum of a non-Hermitian Hamiltonian.
//!
//! Given the complex eigenvalues `E_k = ħω_k + iγ_k`, this crate evolves a
//! phase-space volume element, solves for the Kolmogorov–Sinai time at which
//! it spreads over its accessible region, and turns that time into a
//! KS-entropy, Lyapunov exponents, resonance lifetimes and escape rates.
//!
//! ```
//! use pole_lyapunov::{solve_gamow, SolverConfig};
//!
//! let sol = solve_gamow(10, 1e-3, &SolverConfig::default()).unwrap();
//! assert!((sol.t0_relaxation - 0.4384).abs() < 1e-4);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod emit;
pub mod error;
pub mod fit;
pub mod ks;
pub mod pesin;
pub mod spectra;
pub mod sweep;
pub mod table1;
pub mod volume;

pub use error::{Error, Result};
pub use fit::{fit_hks, fit_hks_through_origin, FitError, FitResult};
pub use ks::{
    asymptotic_slope, asymptotic_t0, gamow_fixed_point, solve_gamow, solve_ks_time, KsSolution,
    SolverConfig,
};
pub use pesin::{
    generalized_pesin_residual, ks_entropy_from_time, lifetimes, lyapunov_sum_at,
    per_mode_exponent, self_consistent_alpha, KsEntropy, LifetimeRow, LifetimeTable,
    PerModeExponent, PesinReport,
};
pub use spectra::{
    gamow_spectrum, has_positive_width, time_reverse, Pole, PoleSpectrum, UnitSystem,
};
pub use sweep::{run_sweep, run_sweep_with, Execution, SweepGrid, SweepResult};
pub use table1::{compare_table1, Table1Report};
pub use volume::{escape_factor, evolve_volume, log_volume, EscapeFactor, VolumeElement};
