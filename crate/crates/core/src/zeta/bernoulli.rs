//! Exact Bernoulli numbers over big rationals.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::ZetaError;

/// Largest index served by [`bernoulli`].
pub const MAX_INDEX: usize = 120;

/// `B_k`, extending the shared table only as far as `k`.
fn entry(k: usize) -> BigRational {
    static TABLE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());
    let mut b = TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if b.is_empty() {
        b.push(BigRational::one());
    }
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, B_0 = 1 (so B_1 = -1/2).
    for m in b.len()..=k {
        // binom row m+1, built incrementally: C(m+1, j)
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * bj;
            }
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        // binom is now C(m+1, m) = m + 1
        b.push(-acc / BigRational::from_integer(binom));
    }
    b[k].clone()
}

/// Exact `B_k` with the `B_1 = -1/2` convention.
///
/// Odd `k > 1` is rejected (the value is zero) as is `k > 120`.
pub fn bernoulli(k: usize) -> Result<BigRational, ZetaError> {
    if k > MAX_INDEX {
        return Err(ZetaError::InvalidArgument(format!(
            "Bernoulli index {k} exceeds the supported maximum {MAX_INDEX}"
        )));
    }
    if k > 1 && k % 2 == 1 {
        return Err(ZetaError::InvalidArgument(format!(
            "Bernoulli index {k} is odd and greater than 1 (B_k = 0); request even indices"
        )));
    }
    Ok(entry(k))
}

/// `B_{2k} / (2k)!` as the nearest double, from the exact rational.
pub(crate) fn scaled_even(k: usize) -> f64 {
    let idx = 2 * k;
    let mut fact = BigInt::one();
    for i in 2..=idx {
        fact *= BigInt::from(i);
    }
    let r = entry(idx) / BigRational::from_integer(fact);
    ratio_to_f64(&r)
}

/// `B_j / j!` for any `j <= 120` (zero for odd `j > 1`).
pub(crate) fn scaled(j: usize) -> f64 {
    if j == 1 {
        return -0.5;
    }
    if j % 2 == 1 {
        return 0.0;
    }
    scaled_even(j / 2)
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // fall back on scaling both sides down to the top bits
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000) as usize;
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}
