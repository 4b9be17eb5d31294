//! Polynomials over Q in the coordinates λ_u and μ_{u,v} of the unipotent group.
//!
//! These are the values words take when evaluated at a generic group element;
//! only words of length at most two are ever evaluated, so the coordinates
//! stop at μ.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalars::{format_rational, Rational};

/// A coordinate function: `Lambda(u)` evaluates `f_u`, `Mu(u, v)` with `u < v`
/// evaluates the Lyndon word `f_u f_v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Lambda(u32),
    Mu(u32, u32),
}

impl Coord {
    /// Weight of the coordinate, used by the torus action.
    pub fn weight(&self) -> u32 {
        match *self {
            Coord::Lambda(u) => u,
            Coord::Mu(u, v) => u + v,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Lambda(u) => write!(f, "λ{u}"),
            Coord::Mu(u, v) => write!(f, "μ{u},{v}"),
        }
    }
}

/// Sorted list of (coordinate, exponent) with positive exponents.
pub type Monomial = Vec<(Coord, u32)>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

fn mul_monomials(x: &Monomial, y: &Monomial) -> Monomial {
    let mut acc: BTreeMap<Coord, u32> = x.iter().copied().collect();
    for &(c, e) in y {
        *acc.entry(c).or_insert(0) += e;
    }
    acc.into_iter().collect()
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn coord(c: Coord) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![(c, 1)], Rational::one());
        p
    }

    pub fn lambda(u: u32) -> Self {
        Self::coord(Coord::Lambda(u))
    }

    pub fn mu(u: u32, v: u32) -> Self {
        assert!(u < v, "μ coordinates need u < v");
        Self::coord(Coord::Mu(u, v))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Every coordinate that occurs.
    pub fn coords(&self) -> BTreeSet<Coord> {
        self.terms.keys().flatten().map(|(c, _)| *c).collect()
    }

    pub fn evaluate(&self, value: impl Fn(Coord) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(coord, e) in m {
                let v = value(coord);
                for _ in 0..e {
                    t *= &v;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn derivative(&self, by: Coord) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|(x, _)| *x == by) {
                let e = m[pos].1;
                let mut m2 = m.clone();
                if e == 1 {
                    m2.remove(pos);
                } else {
                    m2[pos].1 = e - 1;
                }
                out.add_term(m2, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// If this is `c · x` for a single coordinate `x`, return `(c, x)`.
    pub fn as_scaled_coord(&self) -> Option<(Rational, Coord)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        match m.as_slice() {
            [(x, 1)] => Some((c.clone(), *x)),
            _ => None,
        }
    }

    /// If this is `c · x²` for a single coordinate `x`, return `(c, x)`.
    pub fn as_scaled_square(&self) -> Option<(Rational, Coord)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        match m.as_slice() {
            [(x, 2)] => Some((c.clone(), *x)),
            _ => None,
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(mul_monomials(m1, m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{}", format_rational(c))?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{}·", format_rational(c))?;
            }
            for (j, (x, e)) in m.iter().enumerate() {
                if j > 0 {
                    write!(f, "·")?;
                }
                if *e == 1 {
                    write!(f, "{x}")?;
                } else {
                    write!(f, "{x}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    #[test]
    fn arithmetic_and_cancellation() {
        let x = Poly::lambda(3);
        let y = Poly::lambda(5);
        let p = &(&x * &y) - &Poly::mu(3, 5);
        let q = &p + &Poly::mu(3, 5);
        assert_eq!(q, &x * &y);
        assert!((&p - &p).is_zero());
        assert_eq!(p.coords().len(), 3);
    }

    #[test]
    fn evaluation_and_derivative() {
        let x = Poly::lambda(5);
        let p = (&x * &x).scale(&rat(1, 2));
        let v = p.evaluate(|c| match c {
            Coord::Lambda(5) => int(4),
            _ => int(0),
        });
        assert_eq!(v, int(8));
        assert_eq!(p.derivative(Coord::Lambda(5)), x);
        assert_eq!(p.as_scaled_square(), Some((rat(1, 2), Coord::Lambda(5))));
        assert!(p.derivative(Coord::Lambda(3)).is_zero());
    }
}
