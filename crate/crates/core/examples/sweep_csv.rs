//! Sweep a custom (N, dV) grid in parallel and write plot-ready CSV.
//!
//!     cargo run --release --example sweep_csv -- out.csv

use std::path::PathBuf;

use pole_lyapunov::emit::{emit, OutputFormat};
use pole_lyapunov::{run_sweep_with, Execution, SolverConfig, SweepGrid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "sweep.csv".into()),
    );
    let grid = SweepGrid::new(
        (1..=20).map(|k| 5 * k).collect(),
        vec![1e-2, 1e-4, 1e-8],
        SolverConfig::default(),
    )?;
    let result = run_sweep_with(&grid, Execution::Parallel)?;
    emit(&result, OutputFormat::Csv, &path)?;
    println!("wrote {} cells to {}", result.cells.len(), path.display());
    Ok(())
}
