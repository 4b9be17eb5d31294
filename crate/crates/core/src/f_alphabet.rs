//! The f-alphabet: words in odd letters `f_3, f_5, ...` times a power of the
//! central element `f_2`, with shuffle product and deconcatenation coproduct.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::Poly;
use crate::scalars::{format_rational, parse_rational, rat, serde_rational, Rational};
use crate::{Error, Result};

/// A word `f_{l_1} ... f_{l_k} f_2^e`. Ordered lexicographically by letters,
/// then by the `f_2` exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FWord {
    letters: Vec<u32>,
    f2: u32,
}

impl FWord {
    /// Panics if a letter is even or below 3; use [`FWord::try_new`] for
    /// untrusted input.
    pub fn new(letters: impl Into<Vec<u32>>, f2: u32) -> Self {
        Self::try_new(letters, f2).expect("invalid f-word")
    }

    pub fn try_new(letters: impl Into<Vec<u32>>, f2: u32) -> Result<Self> {
        let letters = letters.into();
        if let Some(&bad) = letters.iter().find(|&&l| l < 3 || l % 2 == 0) {
            return Err(Error::Domain(format!(
                "f-word letters must be odd and at least 3, got {bad}"
            )));
        }
        Ok(Self { letters, f2 })
    }

    pub fn unit() -> Self {
        Self {
            letters: Vec::new(),
            f2: 0,
        }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn f2_exponent(&self) -> u32 {
        self.f2
    }

    pub fn degree(&self) -> u32 {
        self.letters.iter().sum::<u32>() + 2 * self.f2
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty() && self.f2 == 0
    }

    fn write_with(&self, f: &mut impl fmt::Write, latex: bool) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for l in &self.letters {
            if latex {
                write!(f, "f_{{{l}}}")?;
            } else {
                write!(f, "f_{l}")?;
            }
        }
        match (self.f2, latex) {
            (0, _) => Ok(()),
            (1, true) => write!(f, "f_{{2}}"),
            (1, false) => write!(f, "f_2"),
            (e, true) => write!(f, "f_{{2}}^{{{e}}}"),
            (e, false) => write!(f, "f_2^{e}"),
        }
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, false)
    }
}

/// A finite rational combination of f-words, kept without zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FPoly {
    terms: BTreeMap<FWord, Rational>,
}

/// A finite rational combination of `left ⊗ right` pairs of f-words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(FWord, FWord), Rational>,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// All shuffles of two letter sequences, with multiplicities.
fn shuffle_letters(x: &[u32], y: &[u32]) -> BTreeMap<Vec<u32>, u64> {
    fn go(x: &[u32], y: &[u32], prefix: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, u64>) {
        if x.is_empty() || y.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(x);
            w.extend_from_slice(y);
            *out.entry(w).or_insert(0) += 1;
            return;
        }
        prefix.push(x[0]);
        go(&x[1..], y, prefix, out);
        prefix.pop();
        prefix.push(y[0]);
        go(x, &y[1..], prefix, out);
        prefix.pop();
    }
    let mut out = BTreeMap::new();
    go(x, y, &mut Vec::new(), &mut out);
    out
}

impl FPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::word(FWord::unit())
    }

    pub fn word(w: FWord) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: FWord, c: Rational) -> Self {
        let mut p = Self::zero();
        add_into(&mut p.terms, w, c);
        p
    }

    /// The single letter `f_r`.
    pub fn f(r: u32) -> Self {
        Self::word(FWord::new([r], 0))
    }

    /// `f_2^k`.
    pub fn f2_power(k: u32) -> Self {
        Self::word(FWord::new([], k))
    }

    pub fn add_term(&mut self, w: FWord, c: Rational) {
        add_into(&mut self.terms, w, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &FWord) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The set of degrees present.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(FWord::degree).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, v) in &other.terms {
            out.add_term(w.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Concatenates `f_r` in front of every word.
    pub fn prepend(&self, r: u32) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            let mut letters = vec![r];
            letters.extend_from_slice(&w.letters);
            out.add_term(FWord::new(letters, w.f2), v.clone());
        }
        out
    }

    /// Shuffle product; `f_2` exponents add.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wx, cx) in &self.terms {
            for (wy, cy) in &other.terms {
                let c = cx * cy;
                for (letters, mult) in shuffle_letters(&wx.letters, &wy.letters) {
                    let w = FWord {
                        letters,
                        f2: wx.f2 + wy.f2,
                    };
                    out.add_term(w, &c * Rational::from_integer(mult.into()));
                }
            }
        }
        out
    }

    /// Deconcatenation coproduct, all cuts included. The `f_2` power of a word
    /// always goes to the left factor.
    pub fn deconcat(&self) -> TensorPoly {
        let mut out = TensorPoly::default();
        for (w, c) in &self.terms {
            for i in 0..=w.letters.len() {
                let left = FWord {
                    letters: w.letters[..i].to_vec(),
                    f2: w.f2,
                };
                let right = FWord {
                    letters: w.letters[i..].to_vec(),
                    f2: 0,
                };
                add_into(&mut out.terms, (left, right), c.clone());
            }
        }
        out
    }

    /// `∂_r`: strips a leading `f_r`; words starting otherwise, and pure
    /// powers of `f_2`, are sent to zero.
    pub fn derivation(&self, r: u32) -> Self {
        assert!(r >= 3 && r % 2 == 1, "∂_r needs odd r >= 3");
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            if w.letters.first() == Some(&r) {
                let rest = FWord {
                    letters: w.letters[1..].to_vec(),
                    f2: w.f2,
                };
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Coefficient of the one-letter word `f_r` in a polynomial that must be
    /// homogeneous of degree `r`.
    pub fn c_coefficient(&self, r: u32) -> Result<Rational> {
        let degrees = self.degrees();
        if degrees.iter().any(|&d| d != r) {
            return Err(Error::NonHomogeneous {
                expected: r,
                found: degrees.into_iter().collect(),
            });
        }
        Ok(self.coefficient(&FWord::new([r], 0)))
    }

    /// Plain-text rendering such as `-6 f_5f_5 - 14 f_7f_3`.
    pub fn to_text(&self) -> String {
        self.render(false)
    }

    /// LaTeX rendering such as `-6f_{5}f_{5}-14f_{7}f_{3}`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg, latex) {
                (0, true, _) => s.push('-'),
                (0, false, _) => {}
                (_, true, true) => s.push('-'),
                (_, false, true) => s.push('+'),
                (_, true, false) => s.push_str(" - "),
                (_, false, false) => s.push_str(" + "),
            }
            let unit = w.is_unit();
            if !mag.is_one() || unit {
                if latex && !mag.denom().is_one() {
                    s.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
                } else {
                    s.push_str(&format_rational(&mag));
                }
                if !unit && !latex {
                    s.push(' ');
                }
            }
            if !unit {
                w.write_with(&mut s, latex).expect("writing to a String");
            }
        }
        s
    }

    /// Parses the plain-text rendering produced by [`FPoly::to_text`].
    pub fn parse_text(input: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {input:?}"));
        let mut out = Self::zero();
        let compact: String = input.split_whitespace().collect();
        if compact == "0" {
            return Ok(out);
        }
        // split into signed chunks
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                neg ^= ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let split = chunk.find('f').unwrap_or(chunk.len());
            let (coef, word) = chunk.split_at(split);
            let mut c = if coef.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef)?
            };
            if neg {
                c = -c;
            }
            let mut letters = Vec::new();
            let mut f2 = 0;
            if word.is_empty() && coef.is_empty() {
                return Err(bad("empty term"));
            }
            for piece in word.split("f_").skip(1) {
                let (idx, pow) = match piece.split_once('^') {
                    Some((i, p)) => (i, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (piece, 1),
                };
                let idx: u32 = idx.parse().map_err(|_| bad("bad index"))?;
                if idx == 2 {
                    f2 += pow;
                } else if pow == 1 {
                    letters.push(idx);
                } else {
                    return Err(bad("exponent on an odd letter"));
                }
            }
            if !word.is_empty() && !word.starts_with("f_") {
                return Err(bad("unexpected text"));
            }
            out.add_term(FWord::try_new(letters, f2)?, c);
        }
        Ok(out)
    }
}

impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl TensorPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&(FWord, FWord), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: FWord, right: FWord, c: Rational) {
        add_into(&mut self.terms, (left, right), c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Factorwise shuffle `(a⊗b)(c⊗d) = (a⧢c)⊗(b⧢d)`.
    pub fn shuffle(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let left = FPoly::word(l1.clone()).shuffle(&FPoly::word(l2.clone()));
                let right = FPoly::word(r1.clone()).shuffle(&FPoly::word(r2.clone()));
                let c = c1 * c2;
                for (lw, lc) in left.terms() {
                    for (rw, rc) in right.terms() {
                        out.add_term(lw.clone(), rw.clone(), &c * lc * rc);
                    }
                }
            }
        }
        out
    }
}

/// Value of a word of length at most two at a generic element of the
/// unipotent group, in the coordinates λ_u and μ_{u,v} (u < v).
pub fn evaluate_word(w: &FWord) -> Result<Poly> {
    if w.f2 > 0 {
        return Ok(Poly::zero());
    }
    match *w.letters.as_slice() {
        [] => Ok(Poly::one()),
        [u] => Ok(Poly::lambda(u)),
        [u, v] if u < v => Ok(Poly::mu(u, v)),
        [u, v] if u > v => Ok(&(&Poly::lambda(u) * &Poly::lambda(v)) - &Poly::mu(v, u)),
        [u, _] => Ok((&Poly::lambda(u) * &Poly::lambda(u)).scale(&rat(1, 2))),
        _ => Err(Error::UnsupportedDepth {
            depth: w.letters.len(),
            max: 2,
        }),
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    word: Vec<u32>,
    f2: u32,
    #[serde(with = "serde_rational")]
    coef: Rational,
}

impl Serialize for FPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|(w, c)| TermRepr {
                word: w.letters.clone(),
                f2: w.f2,
                coef: c.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = FPoly::zero();
        for t in terms {
            let w = FWord::try_new(t.word, t.f2).map_err(serde::de::Error::custom)?;
            out.add_term(w, t.coef);
        }
        Ok(out)
    }
}
