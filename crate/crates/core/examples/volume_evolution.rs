//! Evolve a phase-space volume element under a pole spectrum, forwards and
//! backwards in time, including a spectrum large enough that a naive sum of
//! exponentials would overflow.
//!
//!     cargo run --example volume_evolution

use pole_lyapunov::{
    evolve_volume, gamow_spectrum, log_volume, time_reverse, UnitSystem, VolumeElement,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let decaying = gamow_spectrum(10, UnitSystem::natural())?;
    let expanding = time_reverse(&decaying);
    let v = VolumeElement::new(1e-3)?;

    println!("{:>6} {:>14} {:>14}", "t", "dV expanding", "dV decaying");
    for i in 0..=10 {
        let t = 0.05 * i as f64;
        println!(
            "{t:>6.2} {:>14.6e} {:>14.6e}",
            evolve_volume(&expanding, &v, t)?,
            evolve_volume(&decaying, &v, t)?
        );
    }

    let big = time_reverse(&gamow_spectrum(10_000, UnitSystem::natural())?);
    let t = 0.1;
    println!("\nN=10000, t={t}: ln dV = {:.6}", log_volume(&big, &v, t));
    match evolve_volume(&big, &v, t) {
        Ok(dv) => println!("dV = {dv:e}"),
        Err(e) => println!("dV itself is not representable: {e}"),
    }
    Ok(())
}
