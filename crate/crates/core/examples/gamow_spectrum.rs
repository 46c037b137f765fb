//! Build the truncated Gamow spectrum, time-reverse it and round-trip it
//! through the text file format.
//!
//!     cargo run --example gamow_spectrum

use pole_lyapunov::{gamow_spectrum, has_positive_width, time_reverse, PoleSpectrum, UnitSystem};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let units = UnitSystem::new(1.0, 0.5)?;
    let original = gamow_spectrum(4, units)?;
    let reversed = time_reverse(&original);

    println!("t_R = {}", units.relaxation_time());
    println!(
        "{:>3} {:>8} {:>10} {:>10}",
        "k", "omega", "gamma", "reversed"
    );
    for (k, (p, r)) in original.poles().iter().zip(reversed.poles()).enumerate() {
        println!("{k:>3} {:>8} {:>10} {:>10}", p.omega, p.gamma, r.gamma);
    }
    println!("original expands: {}", has_positive_width(&original));
    println!("reversed expands: {}", has_positive_width(&reversed));

    let text = reversed.to_string();
    println!("\nfile form:\n{text}");
    let parsed: PoleSpectrum = text.parse()?;
    assert_eq!(parsed, reversed);
    Ok(())
}
