//! Status of a method over a rectangular grid of `s`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{ComplexValue, Method, SeriesStatus, ZetaError};

pub const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridStep {
    pub re: f64,
    pub im: f64,
}

impl GridStep {
    pub fn uniform(step: f64) -> Self {
        GridStep { re: step, im: step }
    }
}

/// Statuses in row-major order: one row per imaginary coordinate (ascending),
/// real coordinates ascending within a row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionGrid {
    pub method: String,
    pub re_values: Vec<f64>,
    pub im_values: Vec<f64>,
    pub statuses: Vec<SeriesStatus>,
}

impl RegionGrid {
    pub fn status(&self, row: usize, col: usize) -> SeriesStatus {
        self.statuses[row * self.re_values.len() + col]
    }

    pub fn points(&self) -> impl Iterator<Item = (ComplexValue, SeriesStatus)> + '_ {
        self.im_values.iter().enumerate().flat_map(move |(r, &im)| {
            self.re_values.iter().enumerate().map(move |(c, &re)| (ComplexValue::new(re, im), self.status(r, c)))
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,status\n");
        for (s, status) in self.points() {
            writeln!(out, "{},{},{}", s.re, s.im, status).expect("writing to a String");
        }
        out
    }
}

/// Half-open axis `min, min + step, ...` below `max`.
fn axis(range: (f64, f64), step: f64, label: &str) -> Result<Vec<f64>, ZetaError> {
    let (lo, hi) = range;
    if !(step.is_finite() && step > 0.0) {
        return Err(ZetaError::InvalidArgument(format!("{label} step must be positive, got {step}")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(ZetaError::InvalidArgument(format!("{label} range must satisfy min < max, got [{lo}, {hi}]")));
    }
    let count = ((hi - lo) / step - 1e-9).ceil();
    if count > MAX_GRID_POINTS as f64 {
        return Err(ZetaError::InvalidArgument(format!("{label} axis has {count} points (limit {MAX_GRID_POINTS})")));
    }
    Ok((0..count as usize).map(|i| lo + i as f64 * step).collect())
}

/// Evaluates `method` at every grid point. Refusals become `Pole` or
/// `OutOfDomain`; the result does not depend on how points are scheduled.
pub fn region_map(
    re_range: (f64, f64),
    im_range: (f64, f64),
    step: GridStep,
    method: Method,
) -> Result<RegionGrid, ZetaError> {
    if matches!(method, Method::Functional) {
        return Err(ZetaError::InvalidArgument(
            "region maps support dirichlet, euler_product, eta and euler_maclaurin".into(),
        ));
    }
    let re_values = axis(re_range, step.re, "real")?;
    let im_values = axis(im_range, step.im, "imaginary")?;
    let total = re_values.len() * im_values.len();
    if total > MAX_GRID_POINTS {
        return Err(ZetaError::InvalidArgument(format!("grid has {total} points (limit {MAX_GRID_POINTS})")));
    }
    let statuses = (0..total)
        .into_par_iter()
        .map(|k| {
            let s = ComplexValue::new(re_values[k % re_values.len()], im_values[k / re_values.len()]);
            match method.evaluate(s) {
                Ok(r) => r.status,
                Err(e) => e.as_status(),
            }
        })
        .collect();
    Ok(RegionGrid { method: method.name().to_string(), re_values, im_values, statuses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::EMParams;

    #[test]
    fn axis_counts() {
        assert_eq!(axis((-3.0, 3.0), 0.015, "re").unwrap().len(), 400);
        assert_eq!(axis((-10.0, 10.0), 0.1, "im").unwrap().len(), 200);
        assert_eq!(axis((0.0, 1.0), 0.5, "re").unwrap(), [0.0, 0.5]);
        assert!(axis((0.0, 1.0), 0.0, "re").is_err());
        assert!(axis((0.0, 1.0), -1.0, "re").is_err());
        assert!(axis((1.0, 0.0), 0.1, "re").is_err());
    }

    #[test]
    fn euler_maclaurin_strip() {
        let m = Method::EulerMaclaurin(EMParams { m: 3, n: 10 });
        let g = region_map((-9.0, 3.0), (-1.0, 1.0), GridStep { re: 0.5, im: 0.5 }, m).unwrap();
        for (s, status) in g.points() {
            let expect = if s == ComplexValue::new(1.0, 0.0) {
                SeriesStatus::Pole
            } else if s.re > -7.0 {
                SeriesStatus::Converged
            } else {
                SeriesStatus::OutOfDomain
            };
            assert_eq!(status, expect, "s={s}");
        }
    }

    #[test]
    fn row_major_csv() {
        let g = region_map((0.0, 3.0), (0.0, 2.0), GridStep { re: 1.0, im: 1.0 }, Method::Dirichlet { terms: 10 })
            .unwrap();
        let csv = g.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "re,im,status");
        assert_eq!(lines[1], "0,0,Diverged");
        assert_eq!(lines[2], "1,0,Pole");
        assert_eq!(lines[3], "2,0,Converged");
        assert_eq!(lines[5], "1,1,Oscillating");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn grid_limit() {
        let r = region_map((0.0, 2000.0), (0.0, 1000.0), GridStep::uniform(1.0), Method::Dirichlet { terms: 1 });
        assert!(r.is_err());
        assert!(region_map((0.0, 1.0), (0.0, 1.0), GridStep::uniform(0.5), Method::Functional).is_err());
    }
}
