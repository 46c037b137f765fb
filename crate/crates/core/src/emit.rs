//! Sweep output: CSV, flat key-value text and JSON.
//!
//! Floats are written with 12 significant digits in scientific notation
//! (`4.38382161593e-1`); grid volumes use their shortest exact form (`1e-3`).
//! Output depends only on the sweep result, so identical inputs give
//! byte-identical files.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::fit::{FitError, FitResult};
use crate::sweep::{SweepResult, LARGE_BATH_MIN, SMALL_BATH_MAX};

pub const CSV_HEADER: &str = "N,dV,T0,h_ks_per_gamma0,sigma_prime,alpha,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    KeyValue,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown output format {0:?} (expected csv, kv or json)")]
pub struct UnknownFormat(pub String);

impl FromStr for OutputFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "kv" | "keyvalue" | "key-value" => Ok(Self::KeyValue),
            "json" => Ok(Self::Json),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::KeyValue => "kv",
            Self::Json => "json",
        })
    }
}

#[derive(Debug, Error)]
#[error("failed to write {}: {source}", path.display())]
pub struct EmitError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

/// 12 significant digits, scientific notation.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

/// Shortest round-trip scientific form of a grid volume.
pub fn fmt_dv(dv: f64) -> String {
    format!("{dv:e}")
}

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(",")
}

fn write_config_comments(result: &SweepResult, out: &mut impl Write) -> io::Result<()> {
    let g = &result.grid;
    writeln!(
        out,
        "# pole-lyapunov sweep of the time-reversed Gamow model"
    )?;
    writeln!(
        out,
        "# rel_tol={} max_iter={} scan_points={}",
        fmt_dv(g.solver.rel_tol),
        g.solver.max_iter,
        g.solver.scan_points
    )?;
    writeln!(out, "# n_values={}", join(&g.n_values, |n| n.to_string()))?;
    writeln!(out, "# dv_values={}", join(&g.dv_values, |&d| fmt_dv(d)))?;
    writeln!(
        out,
        "# units: hbar=1 gamma0=1 (T0 in t_R, rates in gamma0/hbar)"
    )
}

pub fn write_csv(result: &SweepResult, out: &mut impl Write) -> io::Result<()> {
    write_config_comments(result, out)?;
    writeln!(out, "{CSV_HEADER}")?;
    for cell in &result.cells {
        match cell.values() {
            Some(v) => writeln!(
                out,
                "{},{},{},{},{},{},ok",
                cell.n,
                fmt_dv(cell.dv),
                fmt_sig(v.t0),
                fmt_sig(v.h_ks),
                fmt_sig(v.sigma_prime),
                fmt_sig(v.alpha)
            )?,
            None => writeln!(out, "{},{},,,,,{}", cell.n, fmt_dv(cell.dv), cell.status())?,
        }
    }
    Ok(())
}

fn write_fit_kv(
    out: &mut impl Write,
    prefix: &str,
    fit: &Result<FitResult, FitError>,
) -> io::Result<()> {
    match fit {
        Ok(f) => {
            writeln!(out, "{prefix}.slope={}", fmt_sig(f.slope))?;
            writeln!(out, "{prefix}.intercept={}", fmt_sig(f.intercept))?;
            writeln!(out, "{prefix}.slope_stderr={}", fmt_sig(f.slope_stderr))?;
            writeln!(out, "{prefix}.r_squared={}", fmt_sig(f.r_squared))?;
            writeln!(out, "{prefix}.points={}", f.points)
        }
        Err(FitError::InsufficientPoints(_)) => {
            writeln!(out, "{prefix}.status=insufficient_points")
        }
        Err(FitError::DegenerateAbscissa) => writeln!(out, "{prefix}.status=degenerate"),
    }
}

pub fn write_key_value(result: &SweepResult, out: &mut impl Write) -> io::Result<()> {
    let g = &result.grid;
    writeln!(out, "config.rel_tol={}", fmt_dv(g.solver.rel_tol))?;
    writeln!(out, "config.max_iter={}", g.solver.max_iter)?;
    writeln!(out, "config.scan_points={}", g.solver.scan_points)?;
    writeln!(
        out,
        "config.n_values={}",
        join(&g.n_values, |n| n.to_string())
    )?;
    writeln!(
        out,
        "config.dv_values={}",
        join(&g.dv_values, |&d| fmt_dv(d))
    )?;
    for cell in &result.cells {
        let key = format!("cell.N={}.dV={}", cell.n, fmt_dv(cell.dv));
        writeln!(out, "{key}.status={}", cell.status())?;
        if let Some(v) = cell.values() {
            writeln!(out, "{key}.T0={}", fmt_sig(v.t0))?;
            writeln!(out, "{key}.h_ks_per_gamma0={}", fmt_sig(v.h_ks))?;
            writeln!(out, "{key}.sigma_prime={}", fmt_sig(v.sigma_prime))?;
            writeln!(out, "{key}.alpha={}", fmt_sig(v.alpha))?;
        }
    }
    for col in &result.fits {
        let key = format!("fit.dV={}", fmt_dv(col.dv));
        write_fit_kv(out, &format!("{key}.full"), &col.full)?;
        write_fit_kv(out, &format!("{key}.through_origin"), &col.through_origin)?;
        write_fit_kv(
            out,
            &format!("{key}.N_le_{SMALL_BATH_MAX}"),
            &col.small_bath,
        )?;
        write_fit_kv(
            out,
            &format!("{key}.N_ge_{LARGE_BATH_MIN}"),
            &col.large_bath,
        )?;
    }
    if let Some(a) = &result.aggregate_alpha {
        writeln!(out, "aggregate_alpha.mean={}", fmt_sig(a.mean))?;
        writeln!(out, "aggregate_alpha.spread={}", fmt_sig(a.spread))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonCell<'a> {
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "dV")]
    dv: f64,
    #[serde(rename = "T0")]
    t0: Option<f64>,
    h_ks_per_gamma0: Option<f64>,
    sigma_prime: Option<f64>,
    alpha: Option<f64>,
    status: &'a str,
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    config: &'a crate::sweep::SweepGrid,
    cells: Vec<JsonCell<'a>>,
    fits: &'a [crate::sweep::ColumnFits],
    aggregate_alpha: &'a Option<crate::sweep::AggregateAlpha>,
}

pub fn write_json(result: &SweepResult, out: &mut impl Write) -> io::Result<()> {
    let cells = result
        .cells
        .iter()
        .map(|c| {
            let v = c.values();
            JsonCell {
                n: c.n,
                dv: c.dv,
                t0: v.map(|v| v.t0),
                h_ks_per_gamma0: v.map(|v| v.h_ks),
                sigma_prime: v.map(|v| v.sigma_prime),
                alpha: v.map(|v| v.alpha),
                status: c.status(),
            }
        })
        .collect();
    let doc = JsonDocument {
        config: &result.grid,
        cells,
        fits: &result.fits,
        aggregate_alpha: &result.aggregate_alpha,
    };
    serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
    writeln!(out)
}

pub fn write(result: &SweepResult, format: OutputFormat, out: &mut impl Write) -> io::Result<()> {
    match format {
        OutputFormat::Csv => write_csv(result, out),
        OutputFormat::KeyValue => write_key_value(result, out),
        OutputFormat::Json => write_json(result, out),
    }
}

pub fn to_string(result: &SweepResult, format: OutputFormat) -> String {
    let mut buf = Vec::new();
    write(result, format, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("output is UTF-8")
}

/// Write `result` to `path`.
pub fn emit(result: &SweepResult, format: OutputFormat, path: &Path) -> Result<(), EmitError> {
    let wrap = |source| EmitError {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(wrap)?);
    write(result, format, &mut out).map_err(wrap)?;
    out.flush().map_err(wrap)
}
