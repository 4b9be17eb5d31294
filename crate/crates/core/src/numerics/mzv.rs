//! Multiple zeta values as iterated integrals, evaluated by splitting the
//! path `0 → 1` at `1/2`.
//!
//! With `ω_0 = dt/t` and `ω_1 = dt/(1-t)`, the integral `J(0; w; x)` is a
//! power series in `x` whose coefficients grow at most polynomially, so at
//! `x = 1/2` it converges like `2^{-m}`. Path composition gives
//! `J(0; w; 1) = Σ_k J(0; w_{≤k}; 1/2) · J(1/2; w_{>k}; 1)`, and `t ↦ 1 - t`
//! turns `J(1/2; v; 1)` into `J(0; v*; 1/2)` with `v*` the reversed,
//! bit-complemented word. For an admissible word `J(0; ε(n); 1) = ζ(n)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bigreal::{bits_for_digits, BigReal};
use super::cache::{default_cache, Cache};
use crate::integral_words::IntegralWord;
use crate::{Error, Result};

/// `J(0; w_{≤k}; 1/2)` for every prefix length `k = 0..=len`, as fixed-point
/// integers scaled by `2^bits`. Every nonempty prefix must start with `1`.
fn prefix_values(word: &[u8], bits: u32) -> Vec<BigInt> {
    // d[m] = c_m 2^{-m}, the terms of the series at x = 1/2; the geometric
    // decay makes K = bits + 8·len + 32 terms enough for a tail below 2^{-bits}
    let extra = 24 + 4 * word.len() as u32;
    let wbits = bits + extra;
    let k_max = (wbits + 8 * word.len() as u32 + 32) as usize;
    let one = BigInt::from(1) << wbits;
    let mut d = vec![BigInt::zero(); k_max + 1];
    d[0] = one;
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(BigInt::from(1) << bits);
    for &letter in word {
        if letter == 0 {
            debug_assert!(d[0].is_zero(), "prefix starting with 0 diverges");
            for (m, dm) in d.iter_mut().enumerate().skip(1) {
                *dm = &*dm / BigInt::from(m as u64);
            }
        } else {
            // d'_{m+1} = T_m / (2(m+1)), T_m = T_{m-1}/2 + d_m
            let mut t = BigInt::zero();
            let mut next = vec![BigInt::zero(); k_max + 1];
            for m in 0..k_max {
                t = (&t >> 1u32) + &d[m];
                next[m + 1] = &t / BigInt::from(2 * (m as u64 + 1));
            }
            d = next;
        }
        out.push(d.iter().sum::<BigInt>() >> extra);
    }
    out
}

/// `J(0; w; 1)` with `ω_1 = dt/(1-t)`, which is `ζ` of the corresponding
/// index for an admissible word.
fn positive_integral(interior: &[u8], bits: u32) -> BigInt {
    let n = interior.len();
    let dual: Vec<u8> = interior.iter().rev().map(|e| 1 - e).collect();
    let a = prefix_values(interior, bits);
    let b = prefix_values(&dual, bits);
    let mut sum = BigInt::zero();
    for k in 0..=n {
        sum += &a[k] * &b[n - k];
    }
    sum >> bits
}

fn check_admissible(w: &IntegralWord) -> Result<()> {
    if (w.left, w.right) != (0, 1) || !w.is_admissible() {
        return Err(Error::NotAdmissible(w.to_string()));
    }
    Ok(())
}

/// `ζ(n_1,…,n_r)` for the admissible word `ε(n)`, uncached.
pub fn mzv_numeric_uncached(w: &IntegralWord, digits: u32) -> Result<BigReal> {
    check_admissible(w)?;
    let bits = bits_for_digits(digits);
    Ok(BigReal::from_mantissa(
        positive_integral(&w.interior, bits),
        bits,
    ))
}

/// `ζ(n_1,…,n_r)` for the admissible word `ε(n)`, through the given cache.
pub fn mzv_numeric_with(cache: &Cache, w: &IntegralWord, digits: u32) -> Result<BigReal> {
    check_admissible(w)?;
    let key = w.interior_string();
    let bits = bits_for_digits(digits);
    if let Some(v) = cache.get(&key, digits) {
        if let Ok(x) = BigReal::parse_decimal(&v, bits) {
            return Ok(x);
        }
    }
    let x = mzv_numeric_uncached(w, digits)?;
    cache.insert(
        &key,
        digits,
        x.to_decimal(digits + super::bigreal::GUARD_DIGITS),
    )?;
    Ok(x)
}

/// `ζ(n_1,…,n_r) = (-1)^r I(0; ε(n); 1)` to `digits` digits, using the
/// process-wide disk cache.
pub fn mzv_numeric(w: &IntegralWord, digits: u32) -> Result<BigReal> {
    mzv_numeric_with(default_cache(), w, digits)
}

/// `I(0; w; 1)` itself, with the sign convention `ζ(n) = (-1)^r I(0; ε(n); 1)`.
pub fn iterated_integral(w: &IntegralWord, digits: u32) -> Result<BigReal> {
    let z = mzv_numeric(w, digits)?;
    Ok(if w.depth() % 2 == 1 { -&z } else { z })
}

/// `ζ(a,b)` shorthand.
pub fn double_zeta(a: u32, b: u32, digits: u32) -> Result<BigReal> {
    mzv_numeric(&crate::integral_words::encode(&[a, b]), digits)
}
