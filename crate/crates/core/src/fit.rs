//! Least-squares line fits of `h_KS` against bath size.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum FitError {
    #[error("need at least 2 points, got {0}")]
    InsufficientPoints(usize),
    #[error("all abscissae are equal")]
    DegenerateAbscissa,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
    pub r_squared: f64,
    pub points: usize,
}

fn check(points: &[(f64, f64)]) -> Result<(), FitError> {
    if points.len() < 2 {
        return Err(FitError::InsufficientPoints(points.len()));
    }
    let x0 = points[0].0;
    if points.iter().all(|p| p.0 == x0) {
        return Err(FitError::DegenerateAbscissa);
    }
    Ok(())
}

fn r_squared(ssr: f64, sst: f64) -> f64 {
    if ssr == 0.0 {
        1.0
    } else if sst == 0.0 {
        0.0
    } else {
        (1.0 - ssr / sst).clamp(0.0, 1.0)
    }
}

/// Ordinary least squares `y = slope·x + intercept`.
pub fn fit_hks(points: &[(f64, f64)]) -> Result<FitResult, FitError> {
    check(points)?;
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (sxx, sxy) = points.iter().fold((0.0, 0.0), |(sxx, sxy), &(x, y)| {
        let dx = x - mean_x;
        (sxx + dx * dx, sxy + dx * (y - mean_y))
    });
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let (ssr, sst) = points.iter().fold((0.0, 0.0), |(ssr, sst), &(x, y)| {
        let r = y - (slope * x + intercept);
        (ssr + r * r, sst + (y - mean_y) * (y - mean_y))
    });
    let slope_stderr = if points.len() > 2 {
        (ssr / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Ok(FitResult {
        slope,
        intercept,
        slope_stderr,
        r_squared: r_squared(ssr, sst),
        points: points.len(),
    })
}

/// Least squares through the origin, `y = slope·x`. `r_squared` is the
/// uncentered coefficient of determination.
pub fn fit_hks_through_origin(points: &[(f64, f64)]) -> Result<FitResult, FitError> {
    check(points)?;
    let n = points.len() as f64;
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let syy: f64 = points.iter().map(|p| p.1 * p.1).sum();
    let slope = sxy / sxx;
    let ssr: f64 = points.iter().map(|&(x, y)| (y - slope * x).powi(2)).sum();
    Ok(FitResult {
        slope,
        intercept: 0.0,
        slope_stderr: (ssr / (n - 1.0) / sxx).sqrt(),
        r_squared: r_squared(ssr, syy),
        points: points.len(),
    })
}
