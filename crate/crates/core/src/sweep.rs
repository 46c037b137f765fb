//! Parameter sweeps of the time-reversed Gamow model over bath size `N` and
//! initial volume `ΔV`, with per-volume line fits of `h_KS(N)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fit::{fit_hks, fit_hks_through_origin, FitError, FitResult};
use crate::ks::{solve_gamow, SolverConfig};

/// Bath sizes covered by the published KS-time table.
pub const TABLE1_N: [usize; 9] = [5, 10, 30, 60, 100, 1000, 3000, 7000, 10_000];
/// Initial volumes covered by the published KS-time table.
pub const TABLE1_DV: [f64; 4] = [1e-3, 1e-6, 1e-9, 1e-12];

/// Upper end of the small-bath range used for range-restricted fits.
pub const SMALL_BATH_MAX: usize = 100;
/// Lower end of the large-bath range used for range-restricted fits.
pub const LARGE_BATH_MIN: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub n_values: Vec<usize>,
    pub dv_values: Vec<f64>,
    pub solver: SolverConfig,
}

impl Default for SweepGrid {
    fn default() -> Self {
        Self {
            n_values: TABLE1_N.to_vec(),
            dv_values: TABLE1_DV.to_vec(),
            solver: SolverConfig::default(),
        }
    }
}

impl SweepGrid {
    pub fn new(n_values: Vec<usize>, dv_values: Vec<f64>, solver: SolverConfig) -> Result<Self> {
        let grid = Self {
            n_values,
            dv_values,
            solver,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.dv_values.is_empty() {
            return Err(Error::InvalidConfig(
                "sweep grid needs at least one N and one dV".into(),
            ));
        }
        if self.n_values[0] == 0 {
            return Err(Error::NoBathLevels);
        }
        if self.n_values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidConfig(
                "N values must be strictly increasing".into(),
            ));
        }
        if let Some(&dv) = self.dv_values.iter().find(|&&dv| !(dv > 0.0 && dv < 1.0)) {
            return Err(Error::InvalidVolume(dv));
        }
        self.solver.validate()
    }

    pub fn len(&self) -> usize {
        self.n_values.len() * self.dv_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid points in emission order: by `N`, then by position in `dv_values`.
    pub fn points(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.n_values
            .iter()
            .flat_map(move |&n| self.dv_values.iter().map(move |&dv| (n, dv)))
    }
}

/// Quantities for one solved cell, in natural units (`t_R = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellValues {
    #[serde(rename = "T0")]
    pub t0: f64,
    pub h_ks: f64,
    pub sigma_prime: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub n: usize,
    pub dv: f64,
    pub outcome: std::result::Result<CellValues, Error>,
}

impl Cell {
    pub fn values(&self) -> Option<&CellValues> {
        self.outcome.as_ref().ok()
    }

    pub fn status(&self) -> &'static str {
        match &self.outcome {
            Ok(_) => "ok",
            Err(e) => e.code(),
        }
    }
}

/// Fits of `h_KS` against `N` for one initial volume.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnFits {
    pub dv: f64,
    /// Free-intercept fit over every solved `N`.
    pub full: std::result::Result<FitResult, FitError>,
    /// Zero-intercept fit over every solved `N`.
    pub through_origin: std::result::Result<FitResult, FitError>,
    /// Free-intercept fit restricted to `N ≤ SMALL_BATH_MAX`.
    pub small_bath: std::result::Result<FitResult, FitError>,
    /// Free-intercept fit restricted to `N ≥ LARGE_BATH_MIN`.
    pub large_bath: std::result::Result<FitResult, FitError>,
}

/// Mean of the full-grid slopes and their largest deviation from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateAlpha {
    pub mean: f64,
    pub spread: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub grid: SweepGrid,
    pub cells: Vec<Cell>,
    pub fits: Vec<ColumnFits>,
    pub aggregate_alpha: Option<AggregateAlpha>,
}

impl SweepResult {
    pub fn cell(&self, n: usize, dv: f64) -> Option<&Cell> {
        self.cells.iter().find(|c| c.n == n && c.dv == dv)
    }

    pub fn column(&self, dv: f64) -> Option<&ColumnFits> {
        self.fits.iter().find(|f| f.dv == dv)
    }

    pub fn failed_cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.outcome.is_err())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Serial,
    Parallel,
}

fn solve_cell(n: usize, dv: f64, cfg: &SolverConfig) -> Cell {
    let outcome = solve_gamow(n, dv, cfg).map(|sol| {
        let t0 = sol.t0_relaxation;
        let h_ks = -dv.ln() / t0;
        let sigma_prime = h_ks / n as f64;
        CellValues {
            t0,
            h_ks,
            sigma_prime,
            alpha: sigma_prime,
        }
    });
    Cell { n, dv, outcome }
}

fn column_fits(dv: f64, cells: &[Cell]) -> ColumnFits {
    let points: Vec<(usize, f64)> = cells
        .iter()
        .filter(|c| c.dv == dv)
        .filter_map(|c| c.values().map(|v| (c.n, v.h_ks)))
        .collect();
    let select = |keep: &dyn Fn(usize) -> bool| -> Vec<(f64, f64)> {
        points
            .iter()
            .filter(|p| keep(p.0))
            .map(|&(n, h)| (n as f64, h))
            .collect()
    };
    let all = select(&|_| true);
    ColumnFits {
        dv,
        full: fit_hks(&all),
        through_origin: fit_hks_through_origin(&all),
        small_bath: fit_hks(&select(&|n| n <= SMALL_BATH_MAX)),
        large_bath: fit_hks(&select(&|n| n >= LARGE_BATH_MIN)),
    }
}

/// Solve every cell of `grid` serially.
pub fn run_sweep(grid: &SweepGrid) -> Result<SweepResult> {
    run_sweep_with(grid, Execution::Serial)
}

/// Solve every cell of `grid`. Cell failures are recorded, not propagated;
/// the output order is the grid order regardless of `execution`.
pub fn run_sweep_with(grid: &SweepGrid, execution: Execution) -> Result<SweepResult> {
    grid.validate()?;
    let points: Vec<(usize, f64)> = grid.points().collect();
    let cells: Vec<Cell> = match execution {
        Execution::Serial => points
            .iter()
            .map(|&(n, dv)| solve_cell(n, dv, &grid.solver))
            .collect(),
        Execution::Parallel => points
            .par_iter()
            .map(|&(n, dv)| solve_cell(n, dv, &grid.solver))
            .collect(),
    };

    let fits: Vec<ColumnFits> = grid
        .dv_values
        .iter()
        .map(|&dv| column_fits(dv, &cells))
        .collect();
    let slopes: Vec<f64> = fits
        .iter()
        .filter_map(|f| f.full.as_ref().ok())
        .map(|f| f.slope)
        .collect();
    let aggregate_alpha = (!slopes.is_empty()).then(|| {
        let mean = slopes.iter().sum::<f64>() / slopes.len() as f64;
        let spread = slopes.iter().map(|s| (s - mean).abs()).fold(0.0, f64::max);
        AggregateAlpha { mean, spread }
    });

    Ok(SweepResult {
        grid: grid.clone(),
        cells,
        fits,
        aggregate_alpha,
    })
}
