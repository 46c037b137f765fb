//! Lifetimes of the Gamow levels, t_n = ħ/(nαγ₀).
//!
//!     cargo run --example lifetimes

use pole_lyapunov::{lifetimes, solve_gamow, SolverConfig, UnitSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // α from a single run, rather than the rounded fit value
    let sol = solve_gamow(1000, 1e-3, &SolverConfig::default())?;
    let alpha = (1e3f64).ln() / sol.t0_relaxation / 1000.0;

    let units = UnitSystem::new(1.0, 2.0)?;
    let table = lifetimes(alpha, 8, &units)?;
    println!("alpha = {alpha:.5}, t_R = {}", units.relaxation_time());
    println!(
        "{:>3} {:>12} {:>12} {:>12}",
        "n", "lambda_n", "t_n", "lambda*t"
    );
    for row in &table.rows {
        println!(
            "{:>3} {:>12.6} {:>12.6} {:>12.3e}",
            row.level,
            row.lyapunov,
            row.lifetime,
            row.lyapunov * row.lifetime
        );
    }
    Ok(())
}
