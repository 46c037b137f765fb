//! KS-entropy and Lyapunov exponents of the Gamow model, from both the
//! KS-time and the poles, for several bath sizes.
//!
//!     cargo run --example pesin_report [dv]

use pole_lyapunov::{
    gamow_spectrum, solve_ks_time, time_reverse, PesinReport, SolverConfig, UnitSystem,
    VolumeElement,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dv: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1e-3);
    let v = VolumeElement::new(dv)?;
    let cfg = SolverConfig::default();

    println!("dV = {dv:e}");
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>10} {:>10}",
        "N", "h_KS", "pole sum", "tau_KS", "sigma0", "alpha"
    );
    for n in [5, 10, 30, 100, 1000] {
        let s = time_reverse(&gamow_spectrum(n, UnitSystem::natural())?);
        let sol = solve_ks_time(&s, &v, &cfg)?;
        let r = PesinReport::new(&s, &v, &sol, n, true)?;
        println!(
            "{n:>6} {:>12.5} {:>12.5} {:>12.4e} {:>10.4} {:>10.4}",
            r.h_ks, r.pole_lyap_sum, r.tau_ks, r.sigma_original, r.alpha
        );
    }
    Ok(())
}
