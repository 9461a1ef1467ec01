// Lanczos approximation, g = 7, nine coefficients (relative error ~1e-15
// on the right half-plane), with reflection for Re(s) < 1/2.

use std::f64::consts::PI;

use super::{ComplexValue, ZetaError};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(s: ComplexValue) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

fn pole_error(s: ComplexValue) -> ZetaError {
    ZetaError::domain(format!("gamma has a pole at the nonpositive integer {}", s.re))
}

/// ln Γ(s) for Re(s) >= 1/2 (principal branch pieces; the real part is exact ln|Γ|).
fn ln_gamma_right(s: ComplexValue) -> ComplexValue {
    let z = s - 1.0;
    let mut x = ComplexValue::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// ln |sin(π s)|, stable for large |Im s|.
fn ln_abs_sin_pi(s: ComplexValue) -> f64 {
    let y = PI * s.im.abs();
    if y > 20.0 {
        // |sin(x+iy)|^2 = sin^2 x + sinh^2 y, and sinh y ~ e^y / 2
        y - 2f64.ln() + 0.5 * (1.0 + ((PI * s.re).sin() * 2.0 * (-y).exp()).powi(2)).ln()
    } else {
        0.5 * ((PI * s.re).sin().powi(2) + y.sinh().powi(2)).ln()
    }
}

/// ln Γ(s). The imaginary part is a valid argument of Γ(s) modulo 2π.
pub fn ln_gamma(s: ComplexValue) -> Result<ComplexValue, ZetaError> {
    if is_pole(s) {
        return Err(pole_error(s));
    }
    if s.re >= 0.5 {
        return Ok(ln_gamma_right(s));
    }
    // Γ(s) = π / (sin(πs) Γ(1-s))
    let refl = ln_gamma_right(1.0 - s);
    let sin = (PI * s).sin();
    let re = PI.ln() - ln_abs_sin_pi(s) - refl.re;
    let im = -sin.arg() - refl.im;
    Ok(ComplexValue::new(re, im))
}

/// Γ(s) by Lanczos, reflected for Re(s) < 1/2.
pub fn gamma(s: ComplexValue) -> Result<ComplexValue, ZetaError> {
    if is_pole(s) {
        return Err(pole_error(s));
    }
    if s.re >= 0.5 {
        if s.im == 0.0 {
            return Ok(ComplexValue::new(gamma_real_right(s.re), 0.0));
        }
        return Ok(ln_gamma_right(s).exp());
    }
    let denom = (PI * s).sin() * gamma(1.0 - s)?;
    Ok(PI / denom)
}

fn gamma_real_right(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power to delay overflow near x = 171
    let half = t.powf(0.5 * (z + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * acc
}
