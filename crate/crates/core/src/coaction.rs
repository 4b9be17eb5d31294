//! The operators `D_r` on double zeta values, the derivations `∂_r`, and the
//! decomposition of `ζ^m(a,b)` into the f-alphabet.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::f_alphabet::{FPoly, FWord};
use crate::integral_words::{encode, reduce_single, IntegralWord, Level};
use crate::scalars::{binomial, even_zeta_ratio, int, rat, serde_rational, sign_pow, Rational};
use crate::{Error, Result};

/// `D_r ζ^m(a,b) = q · ζ^L(r) ⊗ ζ^m(N-r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoactionResult {
    pub a: u32,
    pub b: u32,
    pub r: u32,
    #[serde(with = "serde_rational")]
    pub q: Rational,
}

impl CoactionResult {
    pub fn weight(&self) -> u32 {
        self.a + self.b
    }
}

/// The image `φ(ζ^m(a,b))`, exact for odd weight and modulo `f_2^{N/2}` for
/// even weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: u32,
    pub b: u32,
    pub weight: u32,
    pub modulo_f2_power: Option<u32>,
    #[serde(rename = "terms")]
    pub value: FPoly,
}

impl Decomposition {
    /// The coefficient `q_r` of `f_r f_{N-r}`, where for even `N-r = 2k` the
    /// symbol `f_{2k}` stands for `b_k f_2^k`.
    pub fn pair_coefficient(&self, r: u32) -> Rational {
        let n = self.weight;
        if r < 3 || r.is_multiple_of(2) || r + 2 > n {
            return Rational::zero();
        }
        let s = n - r;
        if s % 2 == 1 {
            self.value.coefficient(&FWord::new([r, s], 0))
        } else {
            self.value.coefficient(&FWord::new([r], s / 2)) / even_zeta_ratio(s / 2)
        }
    }

    /// The coefficient of the single letter `f_N` (zero for even weight).
    pub fn top_coefficient(&self) -> Rational {
        if self.weight % 2 == 1 {
            self.value.coefficient(&FWord::new([self.weight], 0))
        } else {
            Rational::zero()
        }
    }

    /// Odd letters `r` whose pair term `f_r f_{N-r}` is present.
    pub fn support(&self) -> Vec<u32> {
        (3..=self.weight.saturating_sub(2))
            .step_by(2)
            .filter(|&r| !self.pair_coefficient(r).is_zero())
            .collect()
    }

    pub fn to_latex(&self) -> String {
        let lhs = format!("\\phi(\\zeta^{{\\mathfrak m}}({},{}))", self.a, self.b);
        match self.modulo_f2_power {
            Some(k) => format!(
                "{lhs} \\equiv {} \\pmod{{f_{{2}}^{{{k}}}}}",
                self.value.to_latex()
            ),
            None => format!("{lhs} = {}", self.value.to_latex()),
        }
    }
}

fn check_pair(a: u32, b: u32) -> Result<()> {
    if a < 1 || b < 2 {
        return Err(Error::OutOfRange(format!(
            "need a >= 1 and b >= 2, got ({a},{b})"
        )));
    }
    Ok(())
}

fn check_r(a: u32, b: u32, r: u32) -> Result<()> {
    check_pair(a, b)?;
    let n = a + b;
    if r.is_multiple_of(2) || r < 3 || r + 2 > n {
        return Err(Error::OutOfRange(format!(
            "r must be odd and 3 ≤ r ≤ a+b−2 (got r = {r}, a+b = {n})"
        )));
    }
    Ok(())
}

/// `D_r ζ^m(a,b)` by summing over all subwords of length `r` of the
/// integral word of `ζ^m(a,b)`.
pub fn coaction_brute(a: u32, b: u32, r: u32) -> Result<CoactionResult> {
    check_r(a, b, r)?;
    let word = encode(&[a, b]);
    let n = word.weight();
    let r_us = r as usize;
    let mut eps = Vec::with_capacity(n + 2);
    eps.push(word.left);
    eps.extend_from_slice(&word.interior);
    eps.push(word.right);

    // ζ^m(a,b) = +I^m(0; ε(a,b); 1); single zetas carry their own sign inside
    // reduce_single, so q is a plain sum of products.
    let mut q = Rational::zero();
    for p in 0..=n - r_us {
        let left = IntegralWord::new(
            eps[p],
            eps[p + 1..=p + r_us].to_vec(),
            eps[p + r_us + 1],
            Level::Lie,
        );
        let mut rest = eps[1..=p].to_vec();
        rest.extend_from_slice(&eps[p + r_us + 1..=n]);
        let right = IntegralWord::new(eps[0], rest, eps[n + 1], Level::Motivic);
        if left.depth() >= 2 {
            let vanishes = right.depth() == 0 && reduce_single(&right)?.is_zero();
            if !vanishes {
                return Err(Error::Inconsistent(format!(
                    "depth-2 subword {left} paired with non-vanishing {right}"
                )));
            }
            continue;
        }
        let l = reduce_single(&left)?;
        if l.is_zero() {
            continue;
        }
        let rr = reduce_single(&right)?;
        if rr.is_zero() {
            continue;
        }
        debug_assert_eq!((l.weight, rr.weight), (r, n as u32 - r));
        q += l.coef * rr.coef;
    }
    Ok(CoactionResult { a, b, r, q })
}

/// `D_r ζ^m(a,b)` from the four-case closed formula.
pub fn coaction_closed(a: u32, b: u32, r: u32) -> Result<CoactionResult> {
    check_r(a, b, r)?;
    let (ai, bi, ri) = (a as i64, b as i64, r as i64);
    let b_term = || sign_pow(bi + 1) * binomial(ri - 1, bi - 1);
    let q = if r == a {
        if a < b {
            Rational::zero()
        } else {
            b_term()
        }
    } else if a < r {
        b_term() + sign_pow(ai) * binomial(ri - 1, ai - 1)
    } else {
        b_term()
    };
    Ok(CoactionResult { a, b, r, q })
}

/// The `q` with `∂_r^φ ζ^m(a,b) = q · ζ^m(N-r)`. Since `c_r(φ(ζ(r))) = 1`
/// this is the coefficient of the coaction, here taken from the brute-force
/// path.
pub fn derivation_coefficient(a: u32, b: u32, r: u32) -> Result<Rational> {
    Ok(coaction_brute(a, b, r)?.q)
}

/// Closed-form coefficients of `f_r f_{N-r}` for odd `3 ≤ r ≤ N-2`, by
/// parity case.
pub fn closed_pair_coefficients(a: u32, b: u32) -> BTreeMap<u32, Rational> {
    let n = a + b;
    let (ai, bi) = (a as i64, b as i64);
    let mut out = BTreeMap::new();
    for r in (3..=n.saturating_sub(2)).step_by(2) {
        let ri = r as i64;
        let cb = binomial(ri - 1, bi - 1);
        let ca = binomial(ri - 1, ai - 1);
        let diag = if r == a && a >= 3 { int(1) } else { int(0) };
        let c = match (a % 2, b % 2) {
            (1, 1) => cb - ca + diag,
            (0, 0) => ca - cb,
            (0, 1) => cb + ca,
            _ => -(cb + ca) + diag,
        };
        out.insert(r, c);
    }
    out
}

/// Coefficient of `f_N` for odd `N`; it is not reachable by the coaction and
/// comes from the classical evaluation of double zetas of odd weight.
pub fn top_coefficient(a: u32, b: u32) -> Option<Rational> {
    let n = a + b;
    if n.is_multiple_of(2) {
        return None;
    }
    let c = binomial(n as i64, a as i64);
    Some(if a.is_multiple_of(2) {
        -(c + int(1)) * rat(1, 2)
    } else {
        (c - int(1)) * rat(1, 2)
    })
}

/// `φ(ζ^m(w))` for a single zeta: `f_w` for odd `w`, `b_k f_2^k` for `w = 2k`.
pub fn phi_single(w: u32) -> FPoly {
    if w % 2 == 1 {
        FPoly::f(w)
    } else {
        FPoly::f2_power(w / 2).scale(&even_zeta_ratio(w / 2))
    }
}

/// `φ(ζ^m(a,b))`. Computes the pair coefficients both through the brute
/// coaction and through the closed formulas, and fails if they disagree.
pub fn decompose(a: u32, b: u32) -> Result<Decomposition> {
    check_pair(a, b)?;
    let n = a + b;
    let closed = closed_pair_coefficients(a, b);
    let mut value = FPoly::zero();
    for (&r, fast) in &closed {
        let q = derivation_coefficient(a, b, r)?;
        if &q != fast {
            return Err(Error::Inconsistent(format!(
                "coefficient of f_{r} in ζ({a},{b}): coaction gives {q}, closed form gives {fast}"
            )));
        }
        value = value.add(&phi_single(n - r).prepend(r).scale(&q));
    }
    let modulo_f2_power = match top_coefficient(a, b) {
        Some(c) => {
            value.add_term(FWord::new([n], 0), c);
            None
        }
        None => Some(n / 2),
    };
    Ok(Decomposition {
        a,
        b,
        weight: n,
        modulo_f2_power,
        value,
    })
}
