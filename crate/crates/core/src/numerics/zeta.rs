//! Single zeta values by Euler-Maclaurin summation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bigreal::{bits_for_digits, BigReal};
use crate::scalars::{bernoulli, Rational};
use crate::{Error, Result};

/// `ζ(n)` to `digits` decimal digits.
pub fn zeta_single(n: u32, digits: u32) -> Result<BigReal> {
    zeta_single_bits(n, bits_for_digits(digits))
}

/// `ζ(n)` at a given binary working precision.
///
/// `ζ(n) = Σ_{k<M} k^{-n} + M^{1-n}/(n-1) + M^{-n}/2
///        + Σ_j B_{2j}/(2j)! · n(n+1)…(n+2j-2) · M^{-n-2j+1} + R`.
/// With `M` about `bits/3` the correction terms shrink roughly like
/// `((n+2j)/(2πM))^{2j}`; we add them until one drops below `2^{-bits-8}`,
/// and the remainder is bounded by the first omitted term.
pub fn zeta_single_bits(n: u32, bits: u32) -> Result<BigReal> {
    if n < 2 {
        return Err(Error::Domain(format!("ζ(n) needs n >= 2, got {n}")));
    }
    let m = (bits / 3).max(20) as u64;
    let mut sum = BigReal::zero(bits);
    for k in 1..m {
        sum = &sum + &BigReal::inverse_power(k, n, bits);
    }
    let mm = Rational::from_integer(BigInt::from(m));
    let m_pow = |e: u32| -> Rational { (0..e).fold(Rational::one(), |acc, _| acc * &mm) };
    let mut tail = Rational::one() / (Rational::from_integer(BigInt::from(n - 1)) * m_pow(n - 1));
    tail += Rational::one() / (Rational::from_integer(BigInt::from(2)) * m_pow(n));
    sum = &sum + &BigReal::from_rational(&tail, bits);

    let threshold = Rational::new(BigInt::one(), BigInt::one() << (bits + 8));
    // rising factorial n(n+1)…(n+2j-2) and (2j)!
    let mut rising = Rational::from_integer(BigInt::from(n));
    let mut fact = Rational::from_integer(BigInt::from(2));
    let mut prev: Option<Rational> = None;
    for j in 1u32.. {
        let term = bernoulli(2 * j as usize) * &rising / (&fact * m_pow(n + 2 * j - 1));
        let mag = if term < Rational::zero() {
            -term.clone()
        } else {
            term.clone()
        };
        if let Some(p) = &prev {
            if &mag > p {
                return Err(Error::Domain(format!(
                    "Euler-Maclaurin terms for ζ({n}) stopped decreasing before reaching {bits} bits"
                )));
            }
        }
        sum = &sum + &BigReal::from_rational(&term, bits);
        if mag < threshold {
            break;
        }
        prev = Some(mag);
        let (a, b) = (n + 2 * j - 1, n + 2 * j);
        rising *= Rational::from_integer(BigInt::from(a as u64 * b as u64));
        fact *= Rational::from_integer(BigInt::from((2 * j + 1) as u64 * (2 * j + 2) as u64));
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bigreal::pi;
    use crate::scalars::{even_zeta_ratio, rat};

    #[test]
    fn zeta_two_and_four() {
        let bits = bits_for_digits(50);
        let p = pi(bits);
        let z2 = &(&p * &p) / &BigReal::from_integer(6, bits);
        assert!((&zeta_single(2, 50).unwrap() - &z2).abs_below_pow10(50));
        let z4 = z2.pow(2).scale(&rat(2, 5));
        assert!((&zeta_single(4, 50).unwrap() - &z4).abs_below_pow10(50));
    }

    #[test]
    fn even_values_match_ratios() {
        let bits = bits_for_digits(40);
        let z2 = zeta_single(2, 40).unwrap();
        for k in 1..=8 {
            let lhs = zeta_single(2 * k, 40).unwrap();
            let rhs = z2.pow(k).scale(&even_zeta_ratio(k));
            assert_eq!(lhs.bits(), bits);
            assert!((&lhs - &rhs).abs_below_pow10(40), "ζ({})", 2 * k);
        }
    }

    #[test]
    fn domain() {
        assert!(matches!(zeta_single(1, 20), Err(Error::Domain(_))));
        assert!(matches!(zeta_single(0, 20), Err(Error::Domain(_))));
    }

    #[test]
    fn zeta_three_by_bracketing() {
        // Σ_{k≤K} k^{-3} + tail, where the tail lies between
        // 1/(2(K+1)^2) and 1/(2K^2)
        let k_max = 1_000_000u64;
        let mut s = 0f64;
        for k in (1..=k_max).rev() {
            s += 1.0 / (k as f64).powi(3);
        }
        let lo = s + 1.0 / (2.0 * ((k_max + 1) as f64).powi(2));
        let hi = s + 1.0 / (2.0 * (k_max as f64).powi(2));
        let z3 = zeta_single(3, 30).unwrap().to_f64();
        assert!(z3 >= lo - 1e-15 && z3 <= hi + 1e-15, "{lo} {z3} {hi}");
        assert!((hi - lo) < 1e-12);
    }
}
