//! Reproduce the published table of adimensionalized KS-times and compare
//! each cell with its printed value.
//!
//!     cargo run --release --example table1

use pole_lyapunov::table1::CellStatus;
use pole_lyapunov::{compare_table1, run_sweep_with, Execution, SweepGrid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let result = run_sweep_with(&SweepGrid::default(), Execution::Parallel)?;
    let report = compare_table1(&result);

    for c in &report.cells {
        println!(
            "N={:<6} dV={:<6e} printed={:<7} computed={:<12.6} {}",
            c.n,
            c.dv,
            c.golden.value,
            c.computed.unwrap_or(f64::NAN),
            c.status.label()
        );
    }
    println!(
        "\n{} pass, {} fail, {} excluded; max deviation {:.2}%",
        report.count(CellStatus::Pass),
        report.count(CellStatus::Fail),
        report.count(CellStatus::ExcludedAnomaly),
        100.0 * report.max_dev
    );
    Ok(())
}
