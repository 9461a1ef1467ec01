//! Riemann zeta evaluation by Dirichlet partial sums, the Euler product, the
//! alternating (eta) series, and Euler–Maclaurin summation, each reporting an
//! absolute error bound and a convergence status.

pub mod bernoulli;
pub mod gamma;
pub mod quadrature;
pub mod region;
pub mod series;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

pub use bernoulli::bernoulli;
pub use gamma::{gamma, ln_gamma};
pub use quadrature::{bose_integral_check, BoseCheck};
pub use region::{region_map, GridStep, RegionGrid};
pub use series::{
    classify_line, classify_pseries, dirichlet_partial, em_zeta, eta_partial, eta_zeta, euler_product_partial,
    functional_eq_zeta, partial_sum_envelope, trig_components, EMParams, Envelope,
};

/// `s = σ + it` in double precision.
pub type ComplexValue = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesStatus {
    Converged,
    Diverged,
    Oscillating,
    Pole,
    OutOfDomain,
}

impl fmt::Display for SeriesStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexValue,
    /// Absolute bound on `|value - ζ(s)|`; infinite unless converged.
    pub error_bound: f64,
    pub terms_used: u64,
    pub status: SeriesStatus,
    pub note: Option<String>,
}

impl SeriesResult {
    fn converged(value: ComplexValue, error_bound: f64, terms_used: u64) -> Self {
        SeriesResult { value, error_bound, terms_used, status: SeriesStatus::Converged, note: None }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("out of domain: {rule}")]
    OutOfDomain { rule: String },
    #[error("pole at s = 1")]
    Pole,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl ZetaError {
    pub(crate) fn domain(rule: impl Into<String>) -> Self {
        ZetaError::OutOfDomain { rule: rule.into() }
    }

    /// The status a grid point gets when evaluation refuses it.
    pub fn as_status(&self) -> SeriesStatus {
        match self {
            ZetaError::Pole => SeriesStatus::Pole,
            _ => SeriesStatus::OutOfDomain,
        }
    }
}

/// Evaluation method, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    Dirichlet { terms: u64 },
    EulerProduct { prime_bound: u64 },
    Eta { tol: f64 },
    EulerMaclaurin(EMParams),
    Functional,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Dirichlet { .. } => "dirichlet",
            Method::EulerProduct { .. } => "euler_product",
            Method::Eta { .. } => "eta",
            Method::EulerMaclaurin(_) => "euler_maclaurin",
            Method::Functional => "functional",
        }
    }

    pub fn evaluate(&self, s: ComplexValue) -> Result<SeriesResult, ZetaError> {
        match *self {
            Method::Dirichlet { terms } => dirichlet_partial(s, terms),
            Method::EulerProduct { prime_bound } => euler_product_partial(s, prime_bound),
            Method::Eta { tol } => eta_zeta(s, tol),
            Method::EulerMaclaurin(params) => em_zeta(s, params),
            Method::Functional => functional_eq_zeta(s),
        }
    }
}

/// Method family named on the command line, before parameters are attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodKind {
    Dirichlet,
    EulerProduct,
    Eta,
    EulerMaclaurin,
    Functional,
}

impl FromStr for MethodKind {
    type Err = ZetaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "dirichlet" => Ok(MethodKind::Dirichlet),
            "euler_product" | "euler" | "product" => Ok(MethodKind::EulerProduct),
            "eta" => Ok(MethodKind::Eta),
            "em" | "euler_maclaurin" => Ok(MethodKind::EulerMaclaurin),
            "functional" | "fe" | "reflection" => Ok(MethodKind::Functional),
            other => Err(ZetaError::InvalidArgument(format!(
                "unknown method {other:?} (expected dirichlet, euler_product, eta, euler_maclaurin, functional)"
            ))),
        }
    }
}

/// Parses `"re,im"` (or a bare real `"re"`).
pub fn parse_complex(text: &str) -> Result<ComplexValue, ZetaError> {
    let bad = || ZetaError::InvalidArgument(format!("expected \"re,im\", got {text:?}"));
    let mut parts = text.split(',').map(str::trim);
    let re: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let im: f64 = match parts.next() {
        Some(p) => p.parse().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() || !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(ComplexValue::new(re, im))
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, z: ComplexValue) {
        neumaier(&mut self.re, &mut self.re_c, z.re);
        neumaier(&mut self.im, &mut self.im_c, z.im);
    }

    pub(crate) fn value(&self) -> ComplexValue {
        ComplexValue::new(self.re + self.re_c, self.im + self.im_c)
    }
}

/// `n^{-s}` as `n^{-σ} e^{-it ln n}`.
pub(crate) fn npow_neg(n: f64, s: ComplexValue) -> ComplexValue {
    let mag = n.powf(-s.re);
    let angle = -s.im * n.ln();
    ComplexValue::new(mag * angle.cos(), mag * angle.sin())
}

/// Relative rounding allowance for one `n^{-s}` evaluation: `powf` is good
/// to about an ulp, while the phase `t ln n` carries an absolute error of
/// order `ε |t| ln n`.
pub(crate) fn npow_rel_err(n: f64, s: ComplexValue) -> f64 {
    2.0 * f64::EPSILON * (s.im.abs() * n.ln() + 3.0)
}
