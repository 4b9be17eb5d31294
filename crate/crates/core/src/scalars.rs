//! Exact rational arithmetic and the rational constants used everywhere else.
//!
//! Rationals are `num_rational::BigRational`, which is kept in lowest terms
//! with a positive denominator by construction.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Binomial coefficient as a big integer; zero whenever `k < 0` or `k > n`.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` with the convention that out-of-range `k` gives 0.
///
/// Several closed formulas sum binomials over ranges where they silently
/// vanish, so this must never error.
pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::one()]));

/// The Bernoulli number `B_m`, with `B_1 = -1/2`.
///
/// Computed from `Σ_{k=0}^{m} C(m+1,k) B_k = 0` and memoized.
pub fn bernoulli(m: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().expect("bernoulli table poisoned").get(m) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    while table.len() <= m {
        let n = table.len();
        let mut acc = Rational::zero();
        for (k, bk) in table.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            acc += binomial(n as i64 + 1, k as i64) * bk;
        }
        let next = -acc / int(n as i64 + 1);
        table.push(next);
    }
    table[m].clone()
}

/// `b_n = ζ(2n) / ζ(2)^n`, exactly.
///
/// Uses `ζ(2n) = (-1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)` and `ζ(2) = π²/6`.
pub fn even_zeta_ratio(n: u32) -> Rational {
    assert!(n >= 1, "even_zeta_ratio needs n >= 1");
    let n = n as i64;
    let mut factorial = BigInt::one();
    for i in 2..=2 * n {
        factorial *= BigInt::from(i);
    }
    let num = bernoulli(2 * n as usize)
        * Rational::from_integer(BigInt::from(4).pow(n as u32) * BigInt::from(6).pow(n as u32));
    sign_pow(n + 1) * num / Rational::from_integer(BigInt::from(2) * factorial)
}

/// Renders as `"p"` or `"p/q"`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Serde adapter: rationals travel as decimal strings `"p/q"`, never floats.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), int(15));
        assert_eq!(binomial(4, 6), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        // the vanishing f_3 f_7 coefficient of ζ(3,7)
        assert_eq!(binomial(6, 4) - binomial(6, 2), int(0));
        assert_eq!(binomial(6, 4), int(15));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for m in (3..40).step_by(2) {
            assert!(bernoulli(m).is_zero(), "B_{m} should vanish");
        }
    }

    #[test]
    fn bernoulli_concurrent_readers() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || bernoulli(20 + 2 * i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], rat(-174611, 330));
    }

    #[test]
    fn even_zeta_ratios() {
        assert_eq!(even_zeta_ratio(1), int(1));
        assert_eq!(even_zeta_ratio(2), rat(2, 5));
        // ζ(6) = π⁶/945 and ζ(2)³ = π⁶/216
        assert_eq!(even_zeta_ratio(3), rat(216, 945));
        assert_eq!(even_zeta_ratio(3), rat(8, 35));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&int(-14)), "-14");
        assert_eq!(format_rational(&rat(2, 5)), "2/5");
        assert_eq!(parse_rational("-14").unwrap(), int(-14));
        assert_eq!(parse_rational("4/10").unwrap(), rat(2, 5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.4").is_err());
    }

    proptest! {
        #[test]
        fn binomial_row_sums(n in 0i64..=40) {
            let sum: BigInt = (0..=n).map(|k| binomial_int(n, k)).sum();
            prop_assert_eq!(sum, BigInt::from(2).pow(n as u32));
        }

        #[test]
        fn rational_string_roundtrip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let q = rat(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
}
