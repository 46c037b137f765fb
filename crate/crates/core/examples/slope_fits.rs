//! Linear fits of h_KS(N) per initial volume: free intercept, through the
//! origin, small and large bath ranges, and the large-N analytic slope.
//!
//!     cargo run --release --example slope_fits

use pole_lyapunov::{asymptotic_slope, run_sweep, FitError, FitResult, SweepGrid};

fn show(fit: &Result<FitResult, FitError>) -> String {
    match fit {
        Ok(f) => format!("{:.4} ± {:.1e}", f.slope, f.slope_stderr),
        Err(e) => e.to_string(),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let result = run_sweep(&SweepGrid::default())?;
    println!(
        "{:>6} {:>20} {:>20} {:>20} {:>20} {:>10}",
        "dV", "full", "origin", "N<=100", "N>=1000", "large-N"
    );
    for col in &result.fits {
        println!(
            "{:>6e} {:>20} {:>20} {:>20} {:>20} {:>10.4}",
            col.dv,
            show(&col.full),
            show(&col.through_origin),
            show(&col.small_bath),
            show(&col.large_bath),
            asymptotic_slope(col.dv)?
        );
    }
    if let Some(a) = result.aggregate_alpha {
        println!("aggregate: {:.3} ± {:.3}", a.mean, a.spread);
    }
    Ok(())
}
