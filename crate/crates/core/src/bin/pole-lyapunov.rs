use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pole_lyapunov::emit::{self, fmt_dv, fmt_sig, OutputFormat};
use pole_lyapunov::sweep::{TABLE1_DV, TABLE1_N};
use pole_lyapunov::table1::CellStatus;
use pole_lyapunov::{
    compare_table1, escape_factor, gamow_spectrum, lifetimes, run_sweep_with, solve_ks_time,
    time_reverse, Execution, PesinReport, PoleSpectrum, SolverConfig, SweepGrid, UnitSystem,
    VolumeElement,
};

#[derive(Parser)]
#[command(
    name = "pole-lyapunov",
    version,
    about = "Lyapunov exponents and KS-entropy from Hamiltonian poles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the KS-time of one spectrum and report entropy and exponents.
    Solve(SolveArgs),
    /// Sweep the time-reversed Gamow model over a (N, dV) grid.
    Sweep(SweepArgs),
    /// Reproduce the published KS-time table and compare cell by cell.
    Table1(Table1Args),
    /// Lifetimes t_n and decay rates of the Gamow levels.
    Lifetimes(LifetimeArgs),
    /// Escape exponent of the conditionally invariant measure.
    Escape(EscapeArgs),
}

#[derive(Args)]
struct SpectrumSource {
    /// Spectrum file ("omega gamma" per line).
    #[arg(long, conflicts_with = "gamow", required_unless_present = "gamow")]
    spectrum: Option<PathBuf>,
    /// Use the time-reversed Gamow spectrum with N bath levels.
    #[arg(long, value_name = "N")]
    gamow: Option<usize>,
    /// Time-reverse a spectrum read from file (gamma -> -gamma).
    #[arg(long, requires = "spectrum")]
    reverse: bool,
}

impl SpectrumSource {
    /// The spectrum, the number of bath modes sharing the Lyapunov sum and
    /// whether it describes a time-reversed system.
    fn load(&self) -> Result<(PoleSpectrum, usize, bool), String> {
        if let Some(n) = self.gamow {
            let s = gamow_spectrum(n, UnitSystem::natural()).map_err(|e| e.to_string())?;
            return Ok((time_reverse(&s), n, true));
        }
        let path = self.spectrum.as_ref().expect("clap enforces one source");
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let s: PoleSpectrum = text
            .parse()
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let n = s.len();
        if self.reverse {
            Ok((time_reverse(&s), n, true))
        } else {
            Ok((s, n, false))
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: SpectrumSource,
    /// Initial volume dV = hbar/S.
    #[arg(long, default_value_t = 1e-3)]
    dv: f64,
    /// Relative tolerance of the KS-time.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Bath modes sharing the Lyapunov sum (default: N for --gamow, pole count otherwise).
    #[arg(long)]
    n_bath: Option<usize>,
    /// kv or json.
    #[arg(long, default_value = "kv")]
    format: OutputFormat,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated bath sizes.
    #[arg(long, value_delimiter = ',', default_values_t = TABLE1_N)]
    n: Vec<usize>,
    /// Comma-separated initial volumes.
    #[arg(long, value_delimiter = ',', default_values_t = TABLE1_DV)]
    dv: Vec<f64>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv, kv or json.
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Solve cells on all cores; output is identical to a serial run.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Also write the underlying sweep here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct LifetimeArgs {
    /// Coupling constant alpha.
    #[arg(long, default_value_t = 1.5)]
    alpha: f64,
    /// Number of levels.
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, default_value_t = 1.0)]
    gamma0: f64,
}

#[derive(Args)]
struct EscapeArgs {
    #[command(flatten)]
    source: SpectrumSource,
    /// Evaluation time.
    #[arg(long, default_value_t = 1.0)]
    t: f64,
}

fn config(tol: f64) -> SolverConfig {
    SolverConfig::default().with_rel_tol(tol)
}

fn run_solve(args: &SolveArgs) -> Result<ExitCode, String> {
    let (s, n_default, reversed) = args.source.load()?;
    let v = VolumeElement::new(args.dv).map_err(|e| e.to_string())?;
    let sol = solve_ks_time(&s, &v, &config(args.tol)).map_err(|e| e.to_string())?;
    let n_bath = args.n_bath.unwrap_or(n_default);
    let report = PesinReport::new(&s, &v, &sol, n_bath, reversed).map_err(|e| e.to_string())?;

    let mut out = io::stdout().lock();
    let res = match args.format {
        OutputFormat::Json => serde_json::to_writer_pretty(&mut out, &report)
            .map_err(io::Error::from)
            .and_then(|_| writeln!(out)),
        OutputFormat::KeyValue => {
            let lines = [
                ("poles", s.len().to_string()),
                ("n_bath", n_bath.to_string()),
                ("dV", fmt_dv(args.dv)),
                ("reversed", report.reversed.to_string()),
                ("t0", fmt_sig(sol.t0)),
                ("T0", fmt_sig(sol.t0_relaxation)),
                ("residual", fmt_sig(sol.residual)),
                ("iterations", sol.iterations.to_string()),
                ("h_ks", fmt_sig(report.h_ks)),
                ("tau_ks", fmt_sig(report.tau_ks)),
                ("lyap_sum", fmt_sig(report.lyap_sum)),
                ("pole_lyap_sum", fmt_sig(report.pole_lyap_sum)),
                ("sigma_per_mode", fmt_sig(report.sigma_per_mode)),
                ("sigma_original", fmt_sig(report.sigma_original)),
                ("alpha", fmt_sig(report.alpha)),
            ];
            lines.iter().try_for_each(|(k, v)| writeln!(out, "{k}={v}"))
        }
        OutputFormat::Csv => return Err("solve supports --format kv or json".into()),
    };
    res.map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn write_sweep(
    result: &pole_lyapunov::SweepResult,
    format: OutputFormat,
    out: Option<&PathBuf>,
) -> Result<(), String> {
    match out {
        Some(path) => emit::emit(result, format, path).map_err(|e| e.to_string()),
        None => emit::write(result, format, &mut io::stdout().lock()).map_err(|e| e.to_string()),
    }
}

fn execution(parallel: bool) -> Execution {
    if parallel {
        Execution::Parallel
    } else {
        Execution::Serial
    }
}

fn run_sweep_cmd(args: &SweepArgs) -> Result<ExitCode, String> {
    let grid = SweepGrid::new(args.n.clone(), args.dv.clone(), config(args.tol))
        .map_err(|e| e.to_string())?;
    let result = run_sweep_with(&grid, execution(args.parallel)).map_err(|e| e.to_string())?;
    write_sweep(&result, args.format, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn run_table1(args: &Table1Args) -> Result<ExitCode, String> {
    let grid = SweepGrid {
        solver: config(args.tol),
        ..SweepGrid::default()
    };
    let result = run_sweep_with(&grid, execution(args.parallel)).map_err(|e| e.to_string())?;
    if let Some(path) = &args.out {
        write_sweep(&result, args.format, Some(path))?;
    }
    let report = compare_table1(&result);

    let mut out = io::stdout().lock();
    let mut body = || -> io::Result<()> {
        writeln!(
            out,
            "{:>6} {:>6} {:>8} {:>14} {:>9} {:>9}  status",
            "N", "dV", "golden", "computed", "dev", "tol"
        )?;
        for c in &report.cells {
            writeln!(
                out,
                "{:>6} {:>6} {:>8} {:>14} {:>8.3}% {:>8.3}%  {}",
                c.n,
                fmt_dv(c.dv),
                c.golden.value,
                c.computed.map_or("-".into(), |t| format!("{t:.6e}")),
                c.rel_dev.map_or(f64::NAN, |d| 100.0 * d),
                100.0 * c.tolerance,
                c.status.label()
            )?;
        }
        writeln!(
            out,
            "pass={} fail={} excluded={} missing={} max_dev={:.3}% mean_dev={:.3}%",
            report.count(CellStatus::Pass),
            report.count(CellStatus::Fail),
            report.count(CellStatus::ExcludedAnomaly),
            report.count(CellStatus::Missing),
            100.0 * report.max_dev,
            100.0 * report.mean_dev
        )?;
        for col in &result.fits {
            if let Ok(f) = &col.full {
                writeln!(
                    out,
                    "fit dV={}: h_KS = ({:.4} ± {:.4}) N + {:.4}  (through origin: {:.4})",
                    fmt_dv(col.dv),
                    f.slope,
                    f.slope_stderr,
                    f.intercept,
                    col.through_origin.as_ref().map_or(f64::NAN, |g| g.slope)
                )?;
            }
        }
        if let Some(a) = result.aggregate_alpha {
            writeln!(out, "aggregate slope: {:.3} ± {:.3}", a.mean, a.spread)?;
        }
        Ok(())
    };
    body().map_err(|e| e.to_string())?;

    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_lifetimes(args: &LifetimeArgs) -> Result<ExitCode, String> {
    let units = UnitSystem::new(args.hbar, args.gamma0).map_err(|e| e.to_string())?;
    let table = lifetimes(args.alpha, args.n, &units).map_err(|e| e.to_string())?;
    let mut out = io::stdout().lock();
    let mut body = || -> io::Result<()> {
        writeln!(
            out,
            "# t_R={} alpha={} (lambda_n are decay-rate magnitudes)",
            units.relaxation_time(),
            args.alpha
        )?;
        writeln!(out, "n,lambda_n,t_n")?;
        for row in &table.rows {
            writeln!(
                out,
                "{},{},{}",
                row.level,
                fmt_sig(row.lyapunov),
                fmt_sig(row.lifetime)
            )?;
        }
        Ok(())
    };
    body().map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn run_escape(args: &EscapeArgs) -> Result<ExitCode, String> {
    let (s, _, _) = args.source.load()?;
    let e = escape_factor(&s, args.t);
    println!("t={}", fmt_sig(e.time));
    println!("gamma_escape={}", fmt_sig(e.gamma_escape));
    println!("measure_ratio={}", fmt_sig(e.measure_ratio()));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Sweep(a) => run_sweep_cmd(a),
        Command::Table1(a) => run_table1(a),
        Command::Lifetimes(a) => run_lifetimes(a),
        Command::Escape(a) => run_escape(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
