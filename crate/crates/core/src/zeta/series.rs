use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::bernoulli::{self, scaled_even};
use super::gamma::{gamma, ln_gamma};
use super::{npow_neg, npow_rel_err, ComplexValue, CompensatedSum, SeriesResult, SeriesStatus, ZetaError};

fn is_one(s: ComplexValue) -> bool {
    s.re == 1.0 && s.im == 0.0
}

/// Convergence of the p-series `Σ n^{-p}`: converges iff `p > 1`.
pub fn classify_pseries(p: f64) -> SeriesStatus {
    if p > 1.0 {
        SeriesStatus::Converged
    } else {
        SeriesStatus::Diverged
    }
}

/// Behaviour of the Dirichlet series on the line `Re(s) = 1`: a pole at
/// `s = 1`, bounded oscillation elsewhere. Assigned by rule.
pub fn classify_line(s: ComplexValue) -> Result<SeriesStatus, ZetaError> {
    if s.re != 1.0 {
        return Err(ZetaError::InvalidArgument(format!("classify_line needs Re(s) = 1, got {}", s.re)));
    }
    Ok(if s.im == 0.0 { SeriesStatus::Pole } else { SeriesStatus::Oscillating })
}

fn dirichlet_status(s: ComplexValue) -> SeriesStatus {
    if s.re > 1.0 {
        SeriesStatus::Converged
    } else if s.re == 1.0 {
        classify_line(s).expect("on the line")
    } else {
        SeriesStatus::Diverged
    }
}

/// `Σ_{n=1}^{N} n^{-s}` in ascending order.
///
/// Divergent inputs still return the literal partial sum, tagged by status.
/// For `σ > 1` the tail bound is `∫_N^∞ x^{-σ} dx = N^{1-σ}/(σ-1)`.
pub fn dirichlet_partial(s: ComplexValue, terms: u64) -> Result<SeriesResult, ZetaError> {
    if terms == 0 {
        return Err(ZetaError::InvalidArgument("Dirichlet partial sum needs N >= 1".into()));
    }
    let mut acc = CompensatedSum::default();
    let mut rounding = 0.0;
    for n in 1..=terms {
        let n = n as f64;
        let term = npow_neg(n, s);
        rounding += term.norm() * npow_rel_err(n, s);
        acc.add(term);
    }
    let value = acc.value();
    let status = dirichlet_status(s);
    let error_bound = match status {
        SeriesStatus::Converged => {
            let n = terms as f64;
            n.powf(1.0 - s.re) / (s.re - 1.0) + rounding + 2.0 * f64::EPSILON * value.norm()
        }
        _ => f64::INFINITY,
    };
    Ok(SeriesResult { value, error_bound, terms_used: terms, status, note: None })
}

/// Real and imaginary partial sums `Σ n^{-σ} cos(-t ln n)` and `Σ n^{-σ} sin(-t ln n)`.
pub fn trig_components(s: ComplexValue, terms: u64) -> Result<(f64, f64), ZetaError> {
    if terms == 0 {
        return Err(ZetaError::InvalidArgument("trigonometric partial sums need N >= 1".into()));
    }
    let (mut re, mut im) = (CompensatedSum::default(), CompensatedSum::default());
    for n in 1..=terms {
        let n = n as f64;
        let mag = n.powf(-s.re);
        let phase = -s.im * n.ln();
        re.add(ComplexValue::new(mag * phase.cos(), 0.0));
        im.add(ComplexValue::new(mag * phase.sin(), 0.0));
    }
    Ok((re.value().re, im.value().re))
}

/// Range of `|S_k|` over the partial sums `S_1..S_N` of the Dirichlet series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Envelope {
    pub min_modulus: f64,
    pub max_modulus: f64,
    pub final_value: ComplexValue,
}

/// Diagnostic for the oscillating regime: bounded on `Re(s) = 1, t ≠ 0`,
/// unbounded at `s = 1` and for `σ < 1`.
pub fn partial_sum_envelope(s: ComplexValue, terms: u64) -> Result<Envelope, ZetaError> {
    if terms == 0 {
        return Err(ZetaError::InvalidArgument("envelope needs N >= 1".into()));
    }
    let mut acc = CompensatedSum::default();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for n in 1..=terms {
        acc.add(npow_neg(n as f64, s));
        let m = acc.value().norm();
        lo = lo.min(m);
        hi = hi.max(m);
    }
    Ok(Envelope { min_modulus: lo, max_modulus: hi, final_value: acc.value() })
}

const MAX_PRIME_BOUND: u64 = 100_000_000;

fn sieve(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Primes up to `bound`, from the largest sieve computed so far.
fn primes_up_to(bound: u64) -> Arc<Vec<u64>> {
    static CACHE: Mutex<Option<(u64, Arc<Vec<u64>>)>> = Mutex::new(None);
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    match cache.as_ref() {
        Some((b, primes)) if *b >= bound => Arc::clone(primes),
        _ => {
            let primes = Arc::new(sieve(bound));
            *cache = Some((bound, Arc::clone(&primes)));
            primes
        }
    }
}

/// `Π_{p ≤ bound} (1 - p^{-s})^{-1}` over primes in ascending order; `σ > 1` only.
pub fn euler_product_partial(s: ComplexValue, prime_bound: u64) -> Result<SeriesResult, ZetaError> {
    if s.re <= 1.0 {
        return Err(ZetaError::domain(format!(
            "the Euler product converges only for Re(s) > 1 (got Re(s) = {})",
            s.re
        )));
    }
    if !(2..=MAX_PRIME_BOUND).contains(&prime_bound) {
        return Err(ZetaError::InvalidArgument(format!(
            "prime bound must be in 2..={MAX_PRIME_BOUND}, got {prime_bound}"
        )));
    }
    let all = primes_up_to(prime_bound);
    let primes = &all[..all.partition_point(|&p| p <= prime_bound)];
    let mut product = ComplexValue::new(1.0, 0.0);
    let mut rel_err = 0.0;
    for &p in primes {
        let p = p as f64;
        let factor = 1.0 / (1.0 - npow_neg(p, s));
        rel_err += npow_rel_err(p, s) + 4.0 * f64::EPSILON;
        product *= factor;
    }
    // ζ - P is a sum of n^{-s} over n > bound that are not bound-smooth
    let b = prime_bound as f64;
    let tail = b.powf(1.0 - s.re) / (s.re - 1.0);
    let error_bound = tail + rel_err * product.norm();
    Ok(SeriesResult::converged(product, error_bound, primes.len() as u64))
}

/// Plain alternating partial sum `Σ_{n=1}^{N} (-1)^{n+1} n^{-s}` (the eta series).
///
/// For real `s > 0` the terms decrease, so the bound is the first omitted
/// term. For complex `s` consecutive terms are paired instead.
pub fn eta_partial(s: ComplexValue, terms: u64) -> Result<SeriesResult, ZetaError> {
    if terms == 0 {
        return Err(ZetaError::InvalidArgument("eta partial sum needs N >= 1".into()));
    }
    if s.re <= 0.0 {
        return Err(ZetaError::domain(format!(
            "the alternating series converges only for Re(s) > 0 (got Re(s) = {})",
            s.re
        )));
    }
    let mut acc = CompensatedSum::default();
    let mut rounding = 0.0;
    for n in 1..=terms {
        let nf = n as f64;
        let term = npow_neg(nf, s);
        rounding += term.norm() * npow_rel_err(nf, s);
        acc.add(if n % 2 == 1 { term } else { -term });
    }
    let next = (terms + 1) as f64;
    let tail = if s.im == 0.0 {
        next.powf(-s.re)
    } else {
        // |a^{-s} - (a+1)^{-s}| <= |s| ∫_a^{a+1} x^{-σ-1} dx
        next.powf(-s.re) + s.norm() * (next + 1.0).powf(-s.re) / s.re
    };
    Ok(SeriesResult::converged(acc.value(), tail + rounding, terms))
}

const SPURIOUS_ZERO_TOL: f64 = 1e-9;
const MAX_ETA_TERMS: usize = 5_000;

/// ζ(s) = η(s) / (1 - 2^{1-s}) for `σ > 0`, `s ≠ 1`.
///
/// The alternating series is summed with Borwein's Chebyshev weights
/// `(d_n - d_k)/d_n`. With `P_n` the shifted Chebyshev polynomial, the
/// remainder of η obeys `|e_n| <= Γ(σ) η(σ) / (|Γ(s)| T_n(3))`, and
/// `η(σ) < 1`, `T_n(3) >= (3+√8)^n / 2` give the bound used to pick `n`.
pub fn eta_zeta(s: ComplexValue, tol: f64) -> Result<SeriesResult, ZetaError> {
    if !(tol.is_finite() && tol >= 1e-14) {
        return Err(ZetaError::InvalidArgument(format!("eta tolerance must be >= 1e-14, got {tol}")));
    }
    if is_one(s) {
        return Err(ZetaError::Pole);
    }
    if s.re <= 0.0 {
        return Err(ZetaError::domain(format!(
            "the eta construction requires Re(s) > 0 (got Re(s) = {})",
            s.re
        )));
    }
    let two_pow = (std::f64::consts::LN_2 * (1.0 - s)).exp();
    let denom = 1.0 - two_pow;
    if denom.norm() < SPURIOUS_ZERO_TOL {
        return Err(ZetaError::domain(format!(
            "1 - 2^(1-s) vanishes near s = 1 + 2πik/ln 2 (|1 - 2^(1-s)| = {:.3e})",
            denom.norm()
        )));
    }

    // ln of Γ(σ) / |Γ(s)|
    let ln_gamma_ratio = ln_gamma(ComplexValue::new(s.re, 0.0))?.re - ln_gamma(s)?.re;
    let ln_rate = (3.0 + 8f64.sqrt()).ln();
    let ln_target = (0.5 * tol * denom.norm()).ln();
    let needed = ((2f64.ln() + ln_gamma_ratio - ln_target) / ln_rate).ceil().max(1.0) as usize;
    if needed > MAX_ETA_TERMS {
        return Err(ZetaError::InvalidArgument(format!(
            "eta summation would need {needed} terms (limit {MAX_ETA_TERMS}); |Im s| too large"
        )));
    }
    let n = needed;

    // d_k = n Σ_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), via the term ratio,
    // rescaled as it grows so it never overflows.
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0 / n as f64;
    let mut running = 0.0;
    for i in 0..=n {
        running += n as f64 * term;
        d.push(running);
        if running > 1e250 {
            d.iter_mut().for_each(|x| *x *= 1e-250);
            running *= 1e-250;
            term *= 1e-250;
        }
        if i < n {
            let i = i as f64;
            let nf = n as f64;
            term *= 4.0 * (nf + i) * (nf - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
        }
    }
    let dn = d[n];

    let mut acc = CompensatedSum::default();
    let mut rounding = 0.0;
    for (k, dk) in d.iter().take(n).enumerate() {
        let weight = (dn - dk) / dn;
        let kf = (k + 1) as f64;
        let t = npow_neg(kf, s) * weight;
        rounding += t.norm() * (npow_rel_err(kf, s) + 4.0 * f64::EPSILON);
        acc.add(if k % 2 == 0 { t } else { -t });
    }
    let eta = acc.value();
    let truncation = 2.0 * (ln_gamma_ratio - n as f64 * ln_rate).exp();
    let value = eta / denom;
    let denom_rel = npow_rel_err(2.0, s - 1.0) * two_pow.norm() / denom.norm();
    let error_bound =
        (truncation + rounding) / denom.norm() + value.norm() * (denom_rel + 2.0 * f64::EPSILON);
    Ok(SeriesResult::converged(value, error_bound, n as u64))
}

/// Euler–Maclaurin parameters: `m` Bernoulli correction terms, cutoff `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EMParams {
    pub m: u32,
    pub n: u64,
}

impl EMParams {
    /// Largest `m` with `B_{2m+2}` available for the remainder estimate.
    pub const MAX_M: u32 = (bernoulli::MAX_INDEX as u32 - 2) / 2;

    pub fn new(m: u32, n: u64) -> Result<Self, ZetaError> {
        if m == 0 || n == 0 {
            return Err(ZetaError::InvalidArgument(format!(
                "Euler-Maclaurin needs positive m and n (got m={m}, n={n})"
            )));
        }
        if m > Self::MAX_M {
            return Err(ZetaError::InvalidArgument(format!("m must be <= {}, got {m}", Self::MAX_M)));
        }
        Ok(EMParams { m, n })
    }

    /// `σ > -(2m+1)`.
    pub fn admits(&self, s: ComplexValue) -> bool {
        s.re > -(2.0 * self.m as f64 + 1.0)
    }
}

/// Euler–Maclaurin:
///
/// `ζ(s) = Σ_{j<n} j^{-s} + n^{-s}/2 + n^{1-s}/(s-1) + Σ_{k=1}^{m} T_{k,n}(s) + E`,
/// `T_{k,n}(s) = B_{2k}/(2k)! · n^{1-s-2k} · Π_{j=0}^{2k-2} (s+j)`,
/// `|E| < |(s+2m+1)/(σ+2m+1) · T_{m+1,n}(s)|`, valid for `σ > -(2m+1)`.
pub fn em_zeta(s: ComplexValue, params: EMParams) -> Result<SeriesResult, ZetaError> {
    let EMParams { m, n } = EMParams::new(params.m, params.n)?;
    if is_one(s) {
        return Err(ZetaError::Pole);
    }
    if !params.admits(s) {
        return Err(ZetaError::domain(format!(
            "Euler-Maclaurin with m = {m} requires Re(s) > -(2m+1) = {} (got Re(s) = {}); increase m",
            -(2.0 * m as f64 + 1.0),
            s.re
        )));
    }
    let nf = n as f64;
    let mut acc = CompensatedSum::default();
    let mut magnitude = 0.0;
    let mut rounding = 0.0;
    for j in 1..n {
        let jf = j as f64;
        let t = npow_neg(jf, s);
        magnitude += t.norm();
        rounding += t.norm() * npow_rel_err(jf, s);
        acc.add(t);
    }
    let n_pow = npow_neg(nf, s);
    let half = 0.5 * n_pow;
    let integral = n_pow * nf / (s - 1.0);
    for t in [half, integral] {
        magnitude += t.norm();
        rounding += t.norm() * (npow_rel_err(nf, s) + 4.0 * f64::EPSILON);
        acc.add(t);
    }

    // T_{k,n}: running product Π_{j=0}^{2k-2}(s+j) and n^{1-s-2k}
    let correction = |k: u32, product: ComplexValue| -> ComplexValue {
        let coef = scaled_even(k as usize);
        product * n_pow * nf.powi(1 - 2 * k as i32) * coef
    };
    let mut product = s;
    for k in 1..=m {
        if k > 1 {
            product *= (s + (2 * k - 3) as f64) * (s + (2 * k - 2) as f64);
        }
        let t = correction(k, product);
        magnitude += t.norm();
        rounding += t.norm() * (npow_rel_err(nf, s) + (4 * k + 6) as f64 * f64::EPSILON);
        acc.add(t);
    }
    product *= (s + (2 * m - 1) as f64) * (s + (2 * m) as f64);
    let next = correction(m + 1, product);
    let sigma_shift = s.re + 2.0 * m as f64 + 1.0;
    let truncation = ((s + 2.0 * m as f64 + 1.0) / sigma_shift).norm() * next.norm();

    let value = acc.value();
    let error_bound = truncation + rounding + 2.0 * f64::EPSILON * (magnitude + value.norm());
    Ok(SeriesResult::converged(value, error_bound, (n - 1) + m as u64))
}

const TRIVIAL_ZERO_TOL: f64 = 1e-12;

/// Reflection `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)` for `σ < 0`,
/// with `ζ(1-s)` by Euler–Maclaurin. Trivial zeros `s = -2k` return exact 0.
pub fn functional_eq_zeta(s: ComplexValue) -> Result<SeriesResult, ZetaError> {
    if s.re >= 0.0 {
        return Err(ZetaError::domain(format!(
            "the reflection formula is used only for Re(s) < 0 (got Re(s) = {}); use euler_maclaurin",
            s.re
        )));
    }
    if s.im == 0.0 {
        let half = s.re / 2.0;
        if (half - half.round()).abs() * 2.0 < TRIVIAL_ZERO_TOL {
            return Ok(SeriesResult {
                value: ComplexValue::new(0.0, 0.0),
                error_bound: 0.0,
                terms_used: 0,
                status: SeriesStatus::Converged,
                note: Some("TrivialZero".into()),
            });
        }
    }
    let reflected = 1.0 - s;
    let params = EMParams { m: 12, n: 20u64.max(reflected.im.abs().ceil() as u64 + 10) };
    let zeta_reflected = em_zeta(reflected, params)?;
    let factor = (std::f64::consts::LN_2 * s).exp()
        * ((s - 1.0) * PI.ln()).exp()
        * (0.5 * PI * s).sin()
        * gamma(reflected)?;
    let value = factor * zeta_reflected.value;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(ZetaError::domain(format!("reflection overflows double precision at s = {s}")));
    }
    let rel = 1e-13 + 8.0 * f64::EPSILON * (2.0 * s.norm() + 4.0);
    let error_bound = factor.norm() * zeta_reflected.error_bound + value.norm() * rel;
    Ok(SeriesResult::converged(value, error_bound, zeta_reflected.terms_used))
}
