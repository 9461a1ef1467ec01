//! Real-axis check of `∫_0^∞ x^{s-1}/(e^x - 1) dx = Γ(s) ζ(s)` for real `s > 1`.

use std::sync::OnceLock;

use serde::Serialize;

use super::bernoulli::scaled;
use super::gamma::gamma;
use super::series::{em_zeta, EMParams};
use super::{ComplexValue, ZetaError};

// Gauss–Kronrod 7/15 on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

const MAX_DEPTH: u32 = 40;

/// Adaptive Gauss–Kronrod with an absolute tolerance. Returns the value and
/// the summed `|K15 - G7|` estimates of the accepted panels.
pub(crate) fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, whole: (f64, f64), depth: u32) -> (f64, f64) {
        let (value, err) = whole;
        if err <= tol || depth >= MAX_DEPTH {
            return (value, err);
        }
        let m = 0.5 * (a + b);
        let left = gk15(f, a, m);
        let right = gk15(f, m, b);
        let (lv, le) = recurse(f, a, m, 0.5 * tol, left, depth + 1);
        let (rv, re) = recurse(f, m, b, 0.5 * tol, right, depth + 1);
        (lv + rv, le + re)
    }
    recurse(f, a, b, tol, gk15(f, a, b), 0)
}

/// `x/(e^x - 1) - 1 + x/2`, which is `O(x^2)` at the origin.
fn bernoulli_remainder(x: f64) -> f64 {
    if x < 0.5 {
        // Σ_{k>=2} B_k x^k / k!; |B_k/k!| ~ 2/(2π)^k
        static COEF: OnceLock<Vec<f64>> = OnceLock::new();
        let coef = COEF.get_or_init(|| (2..=40).map(scaled).collect());
        let mut acc = 0.0;
        let mut pow = x * x;
        for c in coef {
            acc += c * pow;
            pow *= x;
        }
        acc
    } else {
        x / x.exp_m1() - 1.0 + 0.5 * x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoseCheck {
    pub s: f64,
    pub integral: f64,
    /// Quadrature estimate plus the bound on the discarded tail.
    pub integral_error: f64,
    pub gamma_times_zeta: f64,
    pub gamma_times_zeta_error: f64,
    pub difference: f64,
    pub cutoff: f64,
}

/// Integrates `x^{s-1}/(e^x - 1)` over `[0, ∞)` and compares with `Γ(s)ζ(s)`.
///
/// On `[0, 1]` the leading part `x^{s-2}(1 - x/2)` is integrated exactly and
/// only the smooth remainder is left to quadrature. The upper range is cut at
/// `T` with `e^{-T} T^{s-1} < tol/10`, and the tail bounded by
/// `Γ(s, T)/(1 - e^{-T}) <= 2 T^{s-1} e^{-T}/(1 - e^{-T})` for `T >= 2(s-1)`.
pub fn bose_integral_check(s: f64, quad_tol: f64) -> Result<BoseCheck, ZetaError> {
    if !(s.is_finite() && s > 1.0) {
        return Err(ZetaError::domain(format!("the integral converges only for real s > 1 (got s = {s})")));
    }
    if !(quad_tol.is_finite() && quad_tol > 0.0) {
        return Err(ZetaError::InvalidArgument(format!("quadrature tolerance must be positive, got {quad_tol}")));
    }
    if s > 150.0 {
        return Err(ZetaError::InvalidArgument(format!("s = {s} overflows Γ(s) in double precision")));
    }
    let head_exact = 1.0 / (s - 1.0) - 1.0 / (2.0 * s);
    let head_rest = |x: f64| if x == 0.0 { 0.0 } else { x.powf(s - 2.0) * bernoulli_remainder(x) };
    let (head, head_err) = adaptive(&head_rest, 0.0, 1.0, 0.25 * quad_tol);

    let mut cutoff = (2.0 * (s - 1.0) + 1.0).max(2.0);
    while (-cutoff).exp() * cutoff.powf(s - 1.0) >= 0.1 * quad_tol {
        cutoff *= 1.25;
    }
    let body = |x: f64| x.powf(s - 1.0) / x.exp_m1();
    let (mid, mid_err) = adaptive(&body, 1.0, cutoff, 0.25 * quad_tol);
    let decay = (-cutoff).exp();
    let tail_bound = 2.0 * cutoff.powf(s - 1.0) * decay / (1.0 - decay);

    let integral = head_exact + head + mid;
    let integral_error = head_err + mid_err + tail_bound + 8.0 * f64::EPSILON * integral.abs();

    let sc = ComplexValue::new(s, 0.0);
    let g = gamma(sc)?.re;
    let z = em_zeta(sc, EMParams { m: 10, n: 20 })?;
    let gamma_times_zeta = g * z.value.re;
    let gamma_times_zeta_error = g.abs() * z.error_bound + 1e-14 * gamma_times_zeta.abs();
    Ok(BoseCheck {
        s,
        integral,
        integral_error,
        gamma_times_zeta,
        gamma_times_zeta_error,
        difference: (integral - gamma_times_zeta).abs(),
        cutoff,
    })
}
