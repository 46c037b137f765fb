//! Escape exponent of the conditionally invariant measure, μ(T(A)) = e^{-γ} μ(A),
//! for the decaying Gamow spectrum and its time reversal.
//!
//!     cargo run --example escape_rate

use pole_lyapunov::{escape_factor, gamow_spectrum, time_reverse, UnitSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = gamow_spectrum(20, UnitSystem::natural())?;
    let r = time_reverse(&s);
    println!(
        "{:>6} {:>14} {:>14} {:>14}",
        "t", "gamma(S)", "gamma(S')", "mu ratio S"
    );
    for t in [0.01, 0.1, 0.5, 1.0, 2.0] {
        let e = escape_factor(&s, t);
        println!(
            "{t:>6} {:>14.6} {:>14.6} {:>14.6e}",
            e.gamma_escape,
            escape_factor(&r, t).gamma_escape,
            e.measure_ratio()
        );
    }
    Ok(())
}
