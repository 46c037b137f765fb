//! Solve for the KS-time: single pole, a spectrum with widths of both signs,
//! and the Gamow model against its large-N estimate.
//!
//!     cargo run --example ks_time

use pole_lyapunov::{
    asymptotic_t0, gamow_spectrum, solve_gamow, solve_ks_time, PoleSpectrum, SolverConfig,
    UnitSystem, VolumeElement,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SolverConfig::default();
    let v = VolumeElement::new(1e-2)?;

    let single = PoleSpectrum::from_gammas(&[0.5], UnitSystem::natural())?;
    let sol = solve_ks_time(&single, &v, &cfg)?;
    println!(
        "single pole gamma=0.5: t0 = {:.12} (closed form {:.12})",
        sol.t0,
        100f64.ln()
    );

    let mixed = PoleSpectrum::from_gammas(&[-1.0, 1.0], UnitSystem::natural())?;
    let sol = solve_ks_time(&mixed, &v, &cfg)?;
    println!(
        "mixed [-1, 1]:         t0 = {:.12} (closed form {:.12}), {} iterations",
        sol.t0,
        100f64.acosh() / 2.0,
        sol.iterations
    );

    match solve_ks_time(&gamow_spectrum(5, UnitSystem::natural())?, &v, &cfg) {
        Ok(_) => unreachable!("a decaying spectrum never spreads"),
        Err(e) => println!("decaying Gamow spectrum: {e}"),
    }

    println!("\n{:>6} {:>14} {:>14}", "N", "T0", "x/(2N)");
    for n in [10, 100, 1000, 10_000] {
        let sol = solve_gamow(n, 1e-3, &cfg)?;
        println!(
            "{n:>6} {:>14.6e} {:>14.6e}",
            sol.t0_relaxation,
            asymptotic_t0(1e-3, n)?
        );
    }
    Ok(())
}
