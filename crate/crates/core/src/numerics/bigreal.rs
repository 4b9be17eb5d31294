//! Fixed-point binary reals: `mant · 2^{-bits}` with an arbitrary-precision
//! mantissa. All values in one computation share the same `bits`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalars::Rational;
use crate::{Error, Result};

/// Guard digits carried beyond every requested precision.
pub const GUARD_DIGITS: u32 = 10;

/// Working precision in bits for `digits` decimal digits plus guards.
pub fn bits_for_digits(digits: u32) -> u32 {
    ((digits + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigReal {
    mant: BigInt,
    bits: u32,
}

fn div_round(n: BigInt, d: &BigInt) -> BigInt {
    // round half away from zero
    let (q, r) = n.div_rem(d);
    if (r.abs() * 2) >= d.abs() {
        if (n.sign() == Sign::Minus) != (d.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl BigReal {
    pub fn zero(bits: u32) -> Self {
        Self {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>, bits: u32) -> Self {
        Self {
            mant: n.into() << bits,
            bits,
        }
    }

    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        Self {
            mant: div_round(q.numer().clone() << bits, q.denom()),
            bits,
        }
    }

    /// `1 / n^s`.
    pub fn inverse_power(n: u64, s: u32, bits: u32) -> Self {
        let d = BigInt::from(n).pow(s);
        Self {
            mant: div_round(BigInt::from(1) << bits, &d),
            bits,
        }
    }

    /// The value `mant · 2^{-bits}`.
    pub fn from_mantissa(mant: BigInt, bits: u32) -> Self {
        Self { mant, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            mant: div_round(&self.mant * q.numer(), q.denom()),
            bits: self.bits,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_integer(1, self.bits);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `|self| < 10^{-k}`.
    pub fn abs_below_pow10(&self, k: u32) -> bool {
        self.mant.abs() * BigInt::from(10).pow(k) < (BigInt::from(1) << self.bits)
    }

    /// `|self| ≤ 2^{-e}` for an exponent relative to the working precision.
    pub fn abs_below_pow2(&self, e: u32) -> bool {
        e <= self.bits && self.mant.abs() <= (BigInt::from(1) << (self.bits - e))
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 significant bits, then scale
        let len = self.mant.bits();
        let drop = len.saturating_sub(64);
        let top = (&self.mant >> drop).to_f64().unwrap_or(0.0);
        top * 2f64.powi(drop as i32 - self.bits as i32)
    }

    /// Decimal string with `digits` digits after the point, rounded.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = div_round(
            &self.mant * BigInt::from(10).pow(digits),
            &(BigInt::from(1) << self.bits),
        );
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let d = digits as usize;
        let s = if s.len() <= d {
            format!("{}{s}", "0".repeat(d + 1 - s.len()))
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    pub fn parse_decimal(s: &str, bits: u32) -> Result<Self> {
        let bad = || Error::Parse(format!("not a decimal number: {s:?}"));
        let t = s.trim();
        let (neg, t) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if int.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let den = BigInt::from(10).pow(frac.len() as u32);
        let mant = div_round(digits << bits, &den);
        Ok(Self {
            mant: if neg { -mant } else { mant },
            bits,
        })
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "mixed precisions");
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        BigReal {
            mant: &self.mant + &rhs.mant,
            bits: self.bits,
        }
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        BigReal {
            mant: &self.mant - &rhs.mant,
            bits: self.bits,
        }
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        let p = &self.mant * &rhs.mant;
        BigReal {
            mant: div_round(p, &(BigInt::from(1) << self.bits)),
            bits: self.bits,
        }
    }
}

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        BigReal {
            mant: div_round(&self.mant << self.bits, &rhs.mant),
            bits: self.bits,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

fn atan_inv(x: u64, bits: u32) -> BigInt {
    // atan(1/x) = Σ (-1)^k / ((2k+1) x^{2k+1})
    let x2 = BigInt::from(x * x);
    let mut power = (BigInt::from(1) << bits) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// π by Machin's formula `π = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(bits: u32) -> BigReal {
    let extra = 32;
    let b = bits + extra;
    let v = atan_inv(5, b) * 16 - atan_inv(239, b) * 4;
    BigReal {
        mant: div_round(v, &(BigInt::from(1) << extra)),
        bits,
    }
}

/// A complex number as a pair of reals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: BigReal,
    pub im: BigReal,
}

impl Complex {
    pub fn real(re: BigReal) -> Self {
        let bits = re.bits();
        Self {
            re,
            im: BigReal::zero(bits),
        }
    }

    pub fn zero(bits: u32) -> Self {
        Self {
            re: BigReal::zero(bits),
            im: BigReal::zero(bits),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            re: self.re.scale(q),
            im: self.im.scale(q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn decimal_roundtrip() {
        let bits = bits_for_digits(30);
        let x = BigReal::from_rational(&rat(-1, 3), bits);
        assert_eq!(x.to_decimal(10), "-0.3333333333");
        let y = BigReal::parse_decimal(&x.to_decimal(40), bits).unwrap();
        assert!((&x - &y).abs_below_pow10(39));
        assert_eq!(BigReal::from_integer(7, bits).to_decimal(0), "7");
        assert!(BigReal::parse_decimal("1.2e3", bits).is_err());
    }

    #[test]
    fn pi_digits() {
        let p = pi(bits_for_digits(50));
        assert_eq!(
            p.to_decimal(50),
            "3.14159265358979323846264338327950288419716939937511"
        );
        assert!((p.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn arithmetic() {
        let bits = bits_for_digits(20);
        let a = BigReal::from_rational(&rat(1, 7), bits);
        let b = BigReal::from_integer(7, bits);
        let one = &a * &b;
        assert!((&one - &BigReal::from_integer(1, bits)).abs_below_pow10(25));
        let back = &one / &b;
        assert!((&back - &a).abs_below_pow10(25));
        assert_eq!(
            BigReal::from_integer(2, bits).pow(10),
            BigReal::from_integer(1024, bits)
        );
    }
}
