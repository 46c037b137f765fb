//! Golden comparison against the published table of adimensionalized
//! KS-times of the time-reversed Gamow model.
//!
//! Golden values are stored as printed so that each cell's tolerance follows
//! from its own rounding: a value printed with its last digit in the
//! `10^-k` place carries a rounding half-width of `0.5·10^-k`. A cell passes
//! when its relative deviation is within that half-width (relative to the
//! golden value) plus [`RELATIVE_SLACK`].

use serde::{Deserialize, Serialize};

use crate::sweep::{SweepResult, TABLE1_DV};

pub const RELATIVE_SLACK: f64 = 0.01;

/// Rows `(N, [ΔV = 1e-3, 1e-6, 1e-9, 1e-12])`, as printed.
pub const GOLDEN: [(usize, [&str; 4]); 9] = [
    (5, ["0.85", "1.56", "0.0313", "0.0313"]),
    (10, ["0.438", "0.799", "1.15", "1.5"]),
    (30, ["0.15", "0.287", "0.393", "0.511"]),
    (60, ["0.0837", "0.146", "0.198", "0.257"]),
    (100, ["0.0544", "0.0828", "0.119", "0.154"]),
    (1000, ["0.0045", "0.0083", "0.0112", "0.0155"]),
    (3000, ["0.0015", "0.0027", "0.004", "0.0051"]),
    (7000, ["0.0006", "0.0012", "0.0017", "0.0022"]),
    (10_000, ["0.0004", "0.0008", "0.0012", "0.0015"]),
];

/// Cells whose printed values break the monotone trend of their row and are
/// left out of the comparison.
pub const ANOMALIES: [(usize, f64); 2] = [(5, 1e-9), (5, 1e-12)];

/// A printed decimal with its rounding granularity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GoldenValue {
    pub value: f64,
    pub significant_figures: u32,
    /// Half a unit in the last printed place, absolute.
    pub half_width: f64,
}

impl GoldenValue {
    pub fn parse(printed: &str) -> Self {
        let value: f64 = printed.parse().expect("golden values are valid decimals");
        let decimals = printed.split_once('.').map_or(0, |(_, frac)| frac.len());
        let significant_figures = printed
            .chars()
            .filter(char::is_ascii_digit)
            .skip_while(|&c| c == '0')
            .count() as u32;
        Self {
            value,
            significant_figures,
            half_width: 0.5 * 10f64.powi(-(decimals as i32)),
        }
    }

    pub fn relative_half_width(&self) -> f64 {
        self.half_width / self.value
    }

    pub fn tolerance(&self) -> f64 {
        self.relative_half_width() + RELATIVE_SLACK
    }
}

/// Golden value for `(n, dv)` if the table has that cell.
pub fn golden(n: usize, dv: f64) -> Option<GoldenValue> {
    let col = TABLE1_DV.iter().position(|&d| d == dv)?;
    GOLDEN
        .iter()
        .find(|row| row.0 == n)
        .map(|row| GoldenValue::parse(row.1[col]))
}

pub fn is_anomaly(n: usize, dv: f64) -> bool {
    ANOMALIES.contains(&(n, dv))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellStatus {
    Pass,
    Fail,
    ExcludedAnomaly,
    Missing,
}

impl CellStatus {
    pub fn label(self) -> &'static str {
        match self {
            CellStatus::Pass => "PASS",
            CellStatus::Fail => "FAIL",
            CellStatus::ExcludedAnomaly => "EXCLUDED-ANOMALY",
            CellStatus::Missing => "MISSING",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellComparison {
    pub n: usize,
    pub dv: f64,
    pub golden: GoldenValue,
    pub computed: Option<f64>,
    pub rel_dev: Option<f64>,
    pub tolerance: f64,
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Report {
    pub cells: Vec<CellComparison>,
    /// Over included (non-anomalous, present) cells.
    pub max_dev: f64,
    pub mean_dev: f64,
}

impl Table1Report {
    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellComparison> {
        self.cells.iter().filter(|c| c.status == CellStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.count(CellStatus::Fail) == 0 && self.count(CellStatus::Missing) == 0
    }
}

/// Compare every golden cell with the corresponding sweep cell.
pub fn compare_table1(result: &SweepResult) -> Table1Report {
    let mut cells = Vec::with_capacity(GOLDEN.len() * TABLE1_DV.len());
    for &(n, _) in &GOLDEN {
        for &dv in &TABLE1_DV {
            let golden = golden(n, dv).expect("iterating golden grid");
            let computed = result.cell(n, dv).and_then(|c| c.values()).map(|v| v.t0);
            let rel_dev = computed.map(|t| ((t - golden.value) / golden.value).abs());
            let tolerance = golden.tolerance();
            let status = match rel_dev {
                _ if is_anomaly(n, dv) => CellStatus::ExcludedAnomaly,
                None => CellStatus::Missing,
                Some(d) if d <= tolerance => CellStatus::Pass,
                Some(_) => CellStatus::Fail,
            };
            cells.push(CellComparison {
                n,
                dv,
                golden,
                computed,
                rel_dev,
                tolerance,
                status,
            });
        }
    }

    let included: Vec<f64> = cells
        .iter()
        .filter(|c| c.status != CellStatus::ExcludedAnomaly)
        .filter_map(|c| c.rel_dev)
        .collect();
    let max_dev = included.iter().copied().fold(0.0, f64::max);
    let mean_dev = if included.is_empty() {
        0.0
    } else {
        included.iter().sum::<f64>() / included.len() as f64
    };

    Table1Report {
        cells,
        max_dev,
        mean_dev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ks::SolverConfig;
    use crate::sweep::{run_sweep, SweepGrid};

    #[test]
    fn golden_parsing() {
        let g = GoldenValue::parse("0.0004");
        assert_eq!(g.significant_figures, 1);
        assert!((g.relative_half_width() - 0.125).abs() < 1e-12);
        let g = GoldenValue::parse("0.0313");
        assert_eq!(g.significant_figures, 3);
        assert!((g.half_width - 5e-5).abs() < 1e-18);
        let g = GoldenValue::parse("1.5");
        assert_eq!(g.significant_figures, 2);
        assert!((g.half_width - 0.05).abs() < 1e-16);
        assert_eq!(GoldenValue::parse("0.15").significant_figures, 2);
    }

    #[test]
    fn lookup() {
        assert_eq!(golden(10, 1e-3).unwrap().value, 0.438);
        assert_eq!(golden(10_000, 1e-12).unwrap().value, 0.0015);
        assert!(golden(11, 1e-3).is_none());
        assert!(golden(10, 1e-4).is_none());
        assert!(is_anomaly(5, 1e-9) && is_anomaly(5, 1e-12) && !is_anomaly(5, 1e-6));
    }

    #[test]
    fn partial_sweep_reports_missing_and_anomalies() {
        let grid = SweepGrid::new(
            vec![5, 10],
            vec![1e-3, 1e-9, 1e-12],
            SolverConfig::default(),
        )
        .unwrap();
        let report = compare_table1(&run_sweep(&grid).unwrap());
        assert_eq!(report.cells.len(), 36);
        assert_eq!(report.count(CellStatus::ExcludedAnomaly), 2);
        // (5,1e-6), (10,1e-6) and the 7 rows not swept
        assert_eq!(report.count(CellStatus::Missing), 2 + 7 * 4);
        assert!(!report.passed());

        let c = report
            .cells
            .iter()
            .find(|c| c.n == 10 && c.dv == 1e-3)
            .unwrap();
        assert_eq!(c.status, CellStatus::Pass);
        assert!((c.rel_dev.unwrap() - 0.00087).abs() < 1e-4);

        // the anomalous cells are far off but do not enter the statistics
        let a = report
            .cells
            .iter()
            .find(|c| c.n == 5 && c.dv == 1e-12)
            .unwrap();
        assert!(a.rel_dev.unwrap() > 10.0);
        assert!(report.max_dev < 0.01);
    }
}
