//! Iterated-integral symbols `I(ε_0; ε_1…ε_N; ε_{N+1})` and the reduction of
//! symbols containing at most one `1` to rational multiples of single zetas.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalars::{binomial, format_rational, sign_pow, Rational};
use crate::{Error, Result};

/// Motivic (`m`), de Rham (`a`) or Lie-coalgebra (`L`) level of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Level {
    #[serde(rename = "m")]
    Motivic,
    #[serde(rename = "a")]
    DeRham,
    #[serde(rename = "L")]
    Lie,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Motivic => "m",
            Level::DeRham => "a",
            Level::Lie => "L",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralWord {
    pub left: u8,
    pub interior: Vec<u8>,
    pub right: u8,
    pub level: Level,
}

impl IntegralWord {
    pub fn new(left: u8, interior: impl Into<Vec<u8>>, right: u8, level: Level) -> Self {
        let interior = interior.into();
        assert!(
            left <= 1 && right <= 1 && interior.iter().all(|&e| e <= 1),
            "integral words are made of bits"
        );
        Self {
            left,
            interior,
            right,
            level,
        }
    }

    /// Parses `"0;10010000;1"` at the given level.
    pub fn parse(s: &str, level: Level) -> Result<Self> {
        let bad = || Error::Parse(format!("not an integral word: {s:?}"));
        let parts: Vec<&str> = s.split(';').collect();
        let [l, mid, r] = parts.as_slice() else {
            return Err(bad());
        };
        let bit = |t: &str| match t.trim() {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            _ => Err(bad()),
        };
        let interior = mid
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Self::new(bit(l)?, interior, bit(r)?, level))
    }

    pub fn weight(&self) -> usize {
        self.interior.len()
    }

    pub fn depth(&self) -> usize {
        self.interior.iter().filter(|&&e| e == 1).count()
    }

    pub fn is_admissible(&self) -> bool {
        self.interior.first() == Some(&1) && self.interior.last() == Some(&0)
    }

    pub fn interior_string(&self) -> String {
        self.interior
            .iter()
            .map(|e| if *e == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn with_level(mut self, level: Level) -> Self {
        self.level = level;
        self
    }
}

impl fmt::Display for IntegralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "I^{}({};{};{})",
            self.level,
            self.left,
            self.interior_string(),
            self.right
        )
    }
}

/// The word `ε(n_1,…,n_r)`: blocks `1 0^{n_i-1}` between boundaries 0 and 1.
pub fn encode(n: &[u32]) -> IntegralWord {
    assert!(n.iter().all(|&k| k >= 1), "encode needs positive entries");
    let mut interior = Vec::new();
    for &k in n {
        interior.push(1);
        interior.extend(std::iter::repeat_n(0, k as usize - 1));
    }
    IntegralWord::new(0, interior, 1, Level::Motivic)
}

/// `coef · ζ^level(weight)`, where weight 0 stands for the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaMultiple {
    pub coef: Rational,
    pub weight: u32,
    pub level: Level,
}

impl ZetaMultiple {
    pub fn zero(level: Level) -> Self {
        Self {
            coef: Rational::zero(),
            weight: 0,
            level,
        }
    }

    pub fn unit(level: Level) -> Self {
        Self {
            coef: Rational::one(),
            weight: 0,
            level,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// The same quantity written as a multiple of `I(0;10…0;1)`, which is
    /// `-ζ(weight)`.
    pub fn integral_coefficient(&self) -> Rational {
        if self.weight == 0 {
            self.coef.clone()
        } else {
            -self.coef.clone()
        }
    }

    /// A symbol `s` and rational `c` with `c · reduce_single(s) == self`.
    pub fn to_symbol(&self) -> (Rational, IntegralWord) {
        if self.weight == 0 {
            let w = IntegralWord::new(0, vec![], 1, self.level);
            return (self.coef.clone(), w);
        }
        let w = encode(&[self.weight]).with_level(self.level);
        (-self.coef.clone(), w)
    }
}

impl fmt::Display for ZetaMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weight == 0 || self.coef.is_zero() {
            return write!(f, "{}", format_rational(&self.coef));
        }
        write!(
            f,
            "{}·ζ^{}({})",
            format_rational(&self.coef),
            self.level,
            self.weight
        )
    }
}

/// Reduces a symbol of depth at most one.
///
/// Rules are applied in order: equal boundaries give 0; weight at most one
/// gives 0 or 1; boundaries `(1,0)` are reversed with sign `(-1)^N`; depth 0
/// gives 0; a single `1` at index `k` in weight `m` gives
/// `(-1)^{k+1} C(m-1,k) ζ(m)`. At level `L` even single zetas vanish.
pub fn reduce_single(w: &IntegralWord) -> Result<ZetaMultiple> {
    let depth = w.depth();
    if depth >= 2 {
        return Err(Error::UnsupportedDepth { depth, max: 1 });
    }
    let n = w.weight();
    if w.left == w.right && n >= 1 {
        return Ok(ZetaMultiple::zero(w.level));
    }
    if n == 0 {
        return Ok(ZetaMultiple::unit(w.level));
    }
    if n == 1 {
        return Ok(ZetaMultiple::zero(w.level));
    }
    let mut sign = Rational::one();
    let mut interior = w.interior.clone();
    if (w.left, w.right) == (1, 0) {
        sign = sign_pow(n as i64);
        interior.reverse();
    }
    let Some(k) = interior.iter().position(|&e| e == 1) else {
        return Ok(ZetaMultiple::zero(w.level));
    };
    if w.level == Level::Lie && n.is_multiple_of(2) {
        return Ok(ZetaMultiple::zero(w.level));
    }
    let coef = sign * sign_pow(k as i64 + 1) * binomial(n as i64 - 1, k as i64);
    Ok(ZetaMultiple {
        coef,
        weight: n as u32,
        level: w.level,
    })
}

/// The duality `I(0;ε_1…ε_N;1) = (-1)^N I(0;(1-ε_N)…(1-ε_1);1)`.
pub fn dual(w: &IntegralWord) -> Result<(Rational, IntegralWord)> {
    if (w.left, w.right) != (0, 1) {
        return Err(Error::BoundaryMismatch {
            left: w.left,
            right: w.right,
        });
    }
    let interior: Vec<u8> = w.interior.iter().rev().map(|e| 1 - e).collect();
    Ok((
        sign_pow(w.weight() as i64),
        IntegralWord::new(0, interior, 1, w.level),
    ))
}
