//! Index sets, the minimal motive `M(a,b)`, the action of the unipotent part
//! of the motivic Galois group on it, and the group `G(a,b)` itself.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coaction::{decompose, Decomposition};
use crate::f_alphabet::evaluate_word;
use crate::linalg::{self, Matrix};
use crate::poly::{Coord, Poly};
use crate::scalars::{
    binomial, even_zeta_ratio, format_rational, int, serde_rational, sign_pow, Rational,
};
use crate::{Error, Result};

fn check_pair(a: u32, b: u32) -> Result<()> {
    if a < 1 || b < 2 {
        return Err(Error::OutOfRange(format!(
            "need a >= 1 and b >= 2, got ({a},{b})"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexData {
    #[serde(rename = "I")]
    pub i: Vec<u32>,
    #[serde(rename = "J")]
    pub j: Vec<u32>,
    pub d: usize,
    #[serde(rename = "N")]
    pub n: u32,
}

impl IndexData {
    pub fn intersection(&self) -> Vec<u32> {
        let j: BTreeSet<_> = self.j.iter().collect();
        self.i.iter().copied().filter(|x| j.contains(x)).collect()
    }

    /// `I` without the endpoints `0` and `N`.
    pub fn interior(&self) -> Vec<u32> {
        self.i
            .iter()
            .copied()
            .filter(|&x| x != 0 && x != self.n)
            .collect()
    }
}

fn odd_between(lo: u32, hi: u32) -> impl Iterator<Item = u32> {
    (lo..=hi).filter(|x| x % 2 == 1)
}

pub fn index_sets(a: u32, b: u32) -> Result<IndexData> {
    check_pair(a, b)?;
    let n = a + b;
    let mut i: BTreeSet<u32> = match a.cmp(&b) {
        std::cmp::Ordering::Equal => [0, a, 2 * a].into(),
        std::cmp::Ordering::Greater => odd_between(b, n - 2).collect(),
        std::cmp::Ordering::Less => odd_between(a + 1, n - 2).collect(),
    };
    i.insert(0);
    i.insert(n);
    let j: BTreeSet<u32> = i.iter().map(|x| n - x).collect();
    Ok(IndexData {
        d: i.len(),
        i: i.into_iter().collect(),
        j: j.into_iter().collect(),
        n,
    })
}

/// `d(a,b) = |I(a,b)|` by the seven-case closed form.
pub fn d_closed_form(a: u32, b: u32) -> usize {
    let (a, b) = (a as usize, b as usize);
    if a == b {
        3
    } else if b < a {
        match (a % 2, b % 2) {
            (1, _) => (a + 3) / 2,
            (0, 0) => a / 2 + 1,
            _ => a / 2 + 2,
        }
    } else {
        match (b % 2, a % 2) {
            (0, _) => b / 2 + 1,
            (1, 1) => b.div_ceil(2),
            _ => (b + 3) / 2,
        }
    }
}

/// Whether `(I ∩ J) \ {0, N}` is empty, for distinct `a, b` of equal parity.
pub fn ij_disjoint_criterion(a: u32, b: u32) -> Result<bool> {
    if a == b || (a + b) % 2 == 1 {
        return Err(Error::ParityMismatch(format!(
            "({a},{b}): need distinct a, b of the same parity"
        )));
    }
    let n = a + b;
    Ok(n.is_multiple_of(4) && a + 1 == n / 2)
}

/// Coefficient `c_i(a,b)` of `f_i f_{N-i}` in the decomposition, or of
/// `f_N` when `i = N`.
pub fn c_coefficient(a: u32, b: u32, i: u32) -> Result<Rational> {
    let d = decompose(a, b)?;
    Ok(if i == a + b {
        d.top_coefficient()
    } else {
        d.pair_coefficient(i)
    })
}

/// The alternative table of constants in which, for `a, b` of different
/// parity, the term `f_a f_b` carries no `+1` correction. Kept only to
/// document where it departs from [`c_coefficient`].
pub fn c_coefficient_uncorrected(a: u32, b: u32, i: u32) -> Rational {
    let n = a + b;
    let (ai, bi, ii) = (a as i64, b as i64, i as i64);
    let interior = i >= 3 && i % 2 == 1 && i + 2 <= n;
    if (a + b).is_multiple_of(2) {
        if !interior {
            return Rational::zero();
        }
        let ind = if i == a { int(1) } else { int(0) };
        sign_pow(ai) * (binomial(ii - 1, ai - 1) - binomial(ii - 1, bi - 1)) + ind
    } else if i == n {
        crate::coaction::top_coefficient(a, b).expect("odd weight")
    } else if interior {
        sign_pow(ai) * (binomial(ii - 1, ai - 1) + binomial(ii - 1, bi - 1))
    } else {
        Rational::zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub weight: u32,
    pub label: String,
}

/// How the motive is built from `ζ^m(a,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// The decomposition vanishes: `ζ^m(a,b)` is a rational multiple of a
    /// power of `ζ^m(2)` and spans the motive alone.
    Trivial,
    SameParity,
    DifferentParity,
}

fn shape(a: u32, b: u32, dec: &Decomposition) -> Shape {
    if dec.value.is_zero() {
        Shape::Trivial
    } else if (a + b).is_multiple_of(2) {
        Shape::SameParity
    } else {
        Shape::DifferentParity
    }
}

fn basis_from(a: u32, b: u32, dec: &Decomposition) -> Result<Vec<BasisElement>> {
    let idx = index_sets(a, b)?;
    let weights = match shape(a, b, dec) {
        Shape::Trivial => vec![idx.n],
        Shape::SameParity => idx.i.clone(),
        Shape::DifferentParity => idx.j.clone(),
    };
    Ok(weights
        .into_iter()
        .map(|w| BasisElement {
            weight: w,
            label: if w == 0 {
                "1".into()
            } else if w == idx.n {
                format!("ζ({a},{b})")
            } else {
                format!("ζ({w})")
            },
        })
        .collect())
}

/// Basis of the minimal motive `M(a,b)`, by ascending weight.
pub fn motive_basis(a: u32, b: u32) -> Result<Vec<BasisElement>> {
    let dec = decompose(a, b)?;
    basis_from(a, b, &dec)
}

/// The pieces `Gr^W_w M(a,b) = Q(-w)`.
pub fn weight_graded_pieces(a: u32, b: u32) -> Result<Vec<(u32, String)>> {
    Ok(motive_basis(a, b)?
        .into_iter()
        .map(|e| {
            (
                e.weight,
                if e.weight == 0 {
                    "Q(0)".into()
                } else {
                    format!("Q(-{})", e.weight)
                },
            )
        })
        .collect())
}

/// A point of the unipotent group, through its coordinates `λ_w` and
/// `μ_{u,v}` (`u < v`); absent coordinates are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnipotentElement {
    pub lambda: BTreeMap<u32, Rational>,
    pub mu: BTreeMap<(u32, u32), Rational>,
}

impl UnipotentElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn value(&self, c: Coord) -> Rational {
        let v = match c {
            Coord::Lambda(u) => self.lambda.get(&u),
            Coord::Mu(u, v) => self.mu.get(&(u, v)),
        };
        v.cloned().unwrap_or_else(Rational::zero)
    }

    /// Random rational coordinates for every odd weight `3 ≤ w ≤ max_weight`.
    pub fn random(rng: &mut impl Rng, max_weight: u32) -> Self {
        let mut draw = || {
            Rational::new(
                rng.gen_range(-40i64..=40).into(),
                rng.gen_range(1i64..=9).into(),
            )
        };
        let odd: Vec<u32> = (3..=max_weight).step_by(2).collect();
        let mut g = Self::default();
        for &u in &odd {
            g.lambda.insert(u, draw());
        }
        for &u in &odd {
            for &v in &odd {
                if u < v && u + v <= max_weight {
                    g.mu.insert((u, v), draw());
                }
            }
        }
        g
    }

    /// The product `u ∘ u'` with `λ'' = λ + λ'` and
    /// `μ''_{u,v} = μ_{u,v} + μ'_{u,v} + λ_u λ'_v`, so that
    /// `M(u) M(u') = M(u ∘ u')`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, x) in &other.lambda {
            *out.lambda.entry(*w).or_insert_with(Rational::zero) += x;
        }
        let weights: BTreeSet<u32> = self
            .lambda
            .keys()
            .chain(other.lambda.keys())
            .copied()
            .collect();
        let mut pairs: BTreeSet<(u32, u32)> =
            self.mu.keys().chain(other.mu.keys()).copied().collect();
        for &u in &weights {
            pairs.extend(weights.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        for (u, v) in pairs {
            let m = self.value(Coord::Mu(u, v))
                + other.value(Coord::Mu(u, v))
                + self.value(Coord::Lambda(u)) * other.value(Coord::Lambda(v));
            out.mu.insert((u, v), m);
        }
        out
    }

    /// The torus rescaling `λ_w ↦ t^w λ_w`, `μ_{u,v} ↦ t^{u+v} μ_{u,v}`.
    pub fn rescale(&self, t: &Rational) -> Self {
        let pow = |k: u32| (0..k).fold(Rational::one(), |acc, _| acc * t);
        Self {
            lambda: self.lambda.iter().map(|(w, x)| (*w, x * pow(*w))).collect(),
            mu: self
                .mu
                .iter()
                .map(|(&(u, v), x)| ((u, v), x * pow(u + v)))
                .collect(),
        }
    }
}

/// The action of a generic unipotent element on the motive, with polynomial
/// entries in the coordinates. Column `j` is the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct SymbolicAction {
    pub a: u32,
    pub b: u32,
    pub basis: Vec<BasisElement>,
    pub entries: Vec<Vec<Poly>>,
}

impl SymbolicAction {
    pub fn evaluate(&self, u: &UnipotentElement) -> Matrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(|c| u.value(c))).collect())
            .collect()
    }

    pub fn coords(&self) -> BTreeSet<Coord> {
        self.entries
            .iter()
            .flatten()
            .flat_map(Poly::coords)
            .collect()
    }

    /// Rank of the Jacobian of the strictly upper entries at a point.
    pub fn jacobian_rank(&self, u: &UnipotentElement) -> usize {
        let coords: Vec<Coord> = self.coords().into_iter().collect();
        let n = self.entries.len();
        let mut jac = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let p = &self.entries[i][j];
                jac.push(
                    coords
                        .iter()
                        .map(|&c| p.derivative(c).evaluate(|x| u.value(x)))
                        .collect(),
                );
            }
        }
        linalg::rank(&jac)
    }
}

pub fn symbolic_action(a: u32, b: u32) -> Result<SymbolicAction> {
    let dec = decompose(a, b)?;
    let basis = basis_from(a, b, &dec)?;
    let n = basis.len();
    let row_of: BTreeMap<u32, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, e)| (e.weight, k))
        .collect();
    let top = n - 1;
    let mut entries = vec![vec![Poly::zero(); n]; n];
    for (k, row) in entries.iter_mut().enumerate() {
        row[k] = Poly::one();
    }
    // single zetas: ζ(w) ↦ ζ(w) + λ_w for odd w, fixed for even w
    for (k, e) in basis.iter().enumerate().take(top) {
        if e.weight % 2 == 1 {
            let unit = *row_of
                .get(&0)
                .ok_or_else(|| Error::Inconsistent("basis without unit".into()))?;
            entries[unit][k] = Poly::lambda(e.weight);
        }
    }
    for ((left, right), c) in dec.value.deconcat().terms() {
        if right.is_unit() {
            continue;
        }
        let value = evaluate_word(right)?.scale(c);
        let (weight, scale) = match (left.letters(), left.f2_exponent()) {
            ([], 0) => (0, Rational::one()),
            ([], k) => (2 * k, Rational::one() / even_zeta_ratio(k)),
            ([w], 0) => (*w, Rational::one()),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "unexpected left factor {left} in ζ({a},{b})"
                )));
            }
        };
        let row = *row_of.get(&weight).ok_or_else(|| {
            Error::Inconsistent(format!(
                "weight {weight} missing from the basis of M({a},{b})"
            ))
        })?;
        entries[row][top] = &entries[row][top] + &value.scale(&scale);
    }
    Ok(SymbolicAction {
        a,
        b,
        basis,
        entries,
    })
}

/// The matrix of `u` acting on the basis of `M(a,b)`.
pub fn unipotent_action(a: u32, b: u32, u: &UnipotentElement) -> Result<Matrix> {
    Ok(symbolic_action(a, b)?.evaluate(u))
}

/// `diag(t^w)` over the basis weights.
pub fn torus_matrix(basis: &[BasisElement], t: &Rational) -> Matrix {
    let n = basis.len();
    let mut m = linalg::zeros(n, n);
    for (k, e) in basis.iter().enumerate() {
        m[k][k] = (0..e.weight).fold(Rational::one(), |acc, _| acc * t);
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntryDescriptor {
    Zero,
    One,
    TorusPower {
        weight: u32,
    },
    FreeParam {
        name: String,
    },
    Scaled {
        #[serde(with = "serde_rational")]
        coef: Rational,
        name: String,
    },
    /// `coef · name²`, for the square of a parameter.
    ScaledSquare {
        #[serde(with = "serde_rational")]
        coef: Rational,
        name: String,
    },
}

impl fmt::Display for EntryDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryDescriptor::Zero => write!(f, "0"),
            EntryDescriptor::One => write!(f, "1"),
            EntryDescriptor::TorusPower { weight } => write!(f, "t^{weight}"),
            EntryDescriptor::FreeParam { name } => write!(f, "{name}"),
            EntryDescriptor::Scaled { coef, name } => write!(f, "{}{name}", format_rational(coef)),
            EntryDescriptor::ScaledSquare { coef, name } => {
                write!(f, "{}{name}^2", format_rational(coef))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tie {
    pub first: (usize, usize),
    pub second: (usize, usize),
    #[serde(with = "serde_rational")]
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisPresentation {
    pub a: u32,
    pub b: u32,
    #[serde(rename = "weights")]
    pub basis_weights: Vec<u32>,
    pub entries: Vec<Vec<EntryDescriptor>>,
    pub ties: Vec<Tie>,
}

impl GaloisPresentation {
    /// Distinct parameter names, plus one for the torus.
    pub fn parameter_count(&self) -> usize {
        let names: BTreeSet<&str> = self
            .entries
            .iter()
            .flatten()
            .filter_map(|e| match e {
                EntryDescriptor::FreeParam { name }
                | EntryDescriptor::Scaled { name, .. }
                | EntryDescriptor::ScaledSquare { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect();
        names.len() + 1
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let mut out = format!(
            "G({},{}) over weights {:?}\n",
            self.a, self.b, self.basis_weights
        );
        for row in &cells {
            let padded: Vec<String> = row
                .iter()
                .map(|s| format!("{s}{}", " ".repeat(width - s.chars().count())))
                .collect();
            out.push_str(&format!("[ {} ]\n", padded.join("  ")));
        }
        for t in &self.ties {
            out.push_str(&format!(
                "tie: cell {:?} = {} × cell {:?}\n",
                t.second,
                format_rational(&t.ratio),
                t.first
            ));
        }
        out
    }
}

fn param_name(c: Coord) -> String {
    format!("α_{}", c.weight())
}

/// Symbolic presentation of `G(a,b)`: the unipotent action with its
/// coordinates renamed as parameters, times the torus on the diagonal.
#[allow(clippy::needless_range_loop)]
pub fn group_presentation(a: u32, b: u32) -> Result<GaloisPresentation> {
    let act = symbolic_action(a, b)?;
    let n = act.basis.len();
    let mut seen: BTreeMap<Coord, ((usize, usize), Rational)> = BTreeMap::new();
    let mut used_names: BTreeSet<String> = BTreeSet::new();
    let mut ties = Vec::new();
    let mut entries = vec![vec![EntryDescriptor::Zero; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = &act.entries[i][j];
            entries[i][j] = if i == j {
                match act.basis[i].weight {
                    0 => EntryDescriptor::One,
                    w => EntryDescriptor::TorusPower { weight: w },
                }
            } else if i > j || p.is_zero() {
                EntryDescriptor::Zero
            } else if let Some((c, x)) = p.as_scaled_coord() {
                match seen.get(&x) {
                    None => {
                        seen.insert(x, ((i, j), c));
                        used_names.insert(param_name(x));
                        EntryDescriptor::FreeParam {
                            name: param_name(x),
                        }
                    }
                    Some((cell, c0)) => {
                        let ratio = &c / c0;
                        ties.push(Tie {
                            first: *cell,
                            second: (i, j),
                            ratio: ratio.clone(),
                        });
                        EntryDescriptor::Scaled {
                            coef: ratio,
                            name: param_name(x),
                        }
                    }
                }
            } else if let Some((c, (_, c0))) = p
                .as_scaled_square()
                .and_then(|(c, x)| seen.get(&x).map(|s| (c, s.clone())))
            {
                let x = p.as_scaled_square().expect("checked").1;
                EntryDescriptor::ScaledSquare {
                    coef: &c / (&c0 * &c0),
                    name: param_name(x),
                }
            } else {
                let mut name = format!("α_{}", act.basis[j].weight - act.basis[i].weight);
                while used_names.contains(&name) {
                    name.push('\'');
                }
                used_names.insert(name.clone());
                EntryDescriptor::FreeParam { name }
            };
        }
    }
    Ok(GaloisPresentation {
        a,
        b,
        basis_weights: act.basis.iter().map(|e| e.weight).collect(),
        entries,
        ties,
    })
}

/// Both dimensions of `G(a,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimension {
    pub formula: usize,
    pub rank: usize,
}

/// Whether the pair coefficients satisfy `c_r = c_{N-r}`. Then the
/// decomposition is a combination of shuffles `f_r ⧢ f_{N-r}` and the
/// top-right entry of the action is a polynomial in the `λ`.
fn symmetric_pairs(dec: &Decomposition) -> bool {
    let n = dec.weight;
    (3..=n.saturating_sub(2))
        .step_by(2)
        .all(|r| dec.pair_coefficient(r) == dec.pair_coefficient(n - r))
}

/// Closed-form dimension of `G(a,b)`: `1` or `2` for `a = b`, `d` for
/// different parity, `2d - |I∩J|` for same parity. When the pair
/// coefficients are symmetric the last case drops by one, and a vanishing
/// decomposition gives `G_m`.
pub fn dimension_formula(a: u32, b: u32) -> Result<usize> {
    let dec = decompose(a, b)?;
    let idx = index_sets(a, b)?;
    if a == b {
        return Ok(if a.is_multiple_of(2) { 1 } else { 2 });
    }
    Ok(match shape(a, b, &dec) {
        Shape::Trivial => 1,
        Shape::DifferentParity => idx.d,
        Shape::SameParity => {
            let base = 2 * idx.d - idx.intersection().len();
            if symmetric_pairs(&dec) {
                base - 1
            } else {
                base
            }
        }
    })
}

/// The same-parity closed form `2d - |I∩J|` with no correction.
pub fn dimension_formula_uncorrected(a: u32, b: u32) -> Result<usize> {
    let idx = index_sets(a, b)?;
    Ok(if a == b {
        if a.is_multiple_of(2) {
            1
        } else {
            2
        }
    } else if (a + b).is_multiple_of(2) {
        2 * idx.d - idx.intersection().len()
    } else {
        idx.d
    })
}

/// `1 +` the largest Jacobian rank of the action over `trials` random points.
pub fn dimension_rank(a: u32, b: u32, seed: u64, trials: usize) -> Result<usize> {
    let act = symbolic_action(a, b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((a as u64) << 32) ^ b as u64);
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let u = UnipotentElement::random(&mut rng, a + b);
        best = best.max(act.jacobian_rank(&u));
    }
    Ok(best + 1)
}

pub fn dimension(a: u32, b: u32, seed: u64) -> Result<Dimension> {
    Ok(Dimension {
        formula: dimension_formula(a, b)?,
        rank: dimension_rank(a, b, seed, 3)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn index_examples() {
        let x = index_sets(3, 7).unwrap();
        assert_eq!(
            (x.i.as_slice(), x.j.as_slice(), x.d),
            (&[0, 5, 7, 10][..], &[0, 3, 5, 10][..], 4)
        );
        let x = index_sets(3, 5).unwrap();
        assert_eq!(
            (x.i.as_slice(), x.j.as_slice(), x.d),
            (&[0, 5, 8][..], &[0, 3, 8][..], 3)
        );
        let x = index_sets(3, 4).unwrap();
        assert_eq!(
            (x.i.as_slice(), x.j.as_slice(), x.d),
            (&[0, 5, 7][..], &[0, 2, 7][..], 3)
        );
        assert_eq!(x.intersection(), vec![0, 7]);
        assert_eq!(d_closed_form(7, 3), 5);
        assert_eq!(d_closed_form(3, 7), 4);
    }

    #[test]
    fn disjointness() {
        assert!(ij_disjoint_criterion(5, 7).unwrap());
        assert!(!ij_disjoint_criterion(3, 7).unwrap());
        assert!(!ij_disjoint_criterion(3, 9).unwrap());
        assert!(matches!(
            ij_disjoint_criterion(3, 4),
            Err(Error::ParityMismatch(_))
        ));
        assert!(matches!(
            ij_disjoint_criterion(5, 5),
            Err(Error::ParityMismatch(_))
        ));
    }

    #[test]
    fn bases() {
        let labels = |a, b| -> Vec<(u32, String)> {
            motive_basis(a, b)
                .unwrap()
                .into_iter()
                .map(|e| (e.weight, e.label))
                .collect()
        };
        assert_eq!(
            labels(3, 7),
            vec![
                (0, "1".into()),
                (5, "ζ(5)".into()),
                (7, "ζ(7)".into()),
                (10, "ζ(3,7)".into())
            ]
        );
        assert_eq!(
            labels(3, 4),
            vec![(0, "1".into()), (2, "ζ(2)".into()), (7, "ζ(3,4)".into())]
        );
        assert_eq!(labels(4, 4), vec![(8, "ζ(4,4)".into())]);
        assert_eq!(labels(1, 3), vec![(4, "ζ(1,3)".into())]);
        let pieces = weight_graded_pieces(3, 7).unwrap();
        assert_eq!(
            pieces.iter().map(|p| p.1.as_str()).collect::<Vec<_>>(),
            ["Q(0)", "Q(-5)", "Q(-7)", "Q(-10)"]
        );
    }

    #[test]
    fn action_3_7() {
        let act = symbolic_action(3, 7).unwrap();
        let e = &act.entries;
        assert_eq!(e[0][1], Poly::lambda(5));
        assert_eq!(e[0][2], Poly::lambda(7));
        assert_eq!(e[1][3], Poly::lambda(5).scale(&int(-6)));
        assert_eq!(e[2][3], Poly::lambda(3).scale(&int(-14)));
        let l5 = Poly::lambda(5);
        let expect = &(&l5 * &l5).scale(&int(-3))
            - &(&(&Poly::lambda(3) * &Poly::lambda(7)) - &Poly::mu(3, 7)).scale(&int(14));
        assert_eq!(e[0][3], expect);
    }

    #[test]
    fn action_3_4() {
        let mut u = UnipotentElement::identity();
        u.lambda.insert(5, rat(2, 1));
        u.lambda.insert(3, rat(3, 1));
        u.lambda.insert(7, rat(5, 1));
        let m = unipotent_action(3, 4, &u).unwrap();
        assert_eq!(m[1][2], int(-20));
        assert_eq!(m[0][2], int(85));
        assert_eq!(m[0][1], int(0));
        assert_eq!(
            unipotent_action(3, 4, &UnipotentElement::identity()).unwrap(),
            linalg::identity(3)
        );
    }

    #[test]
    fn presentations() {
        let g = group_presentation(4, 4).unwrap();
        assert_eq!(
            g.entries,
            vec![vec![EntryDescriptor::TorusPower { weight: 8 }]]
        );
        assert_eq!(g.parameter_count(), 1);

        let g = group_presentation(3, 7).unwrap();
        assert_eq!(g.ties.len(), 1);
        assert_eq!(
            (g.ties[0].first, g.ties[0].second, g.ties[0].ratio.clone()),
            ((0, 1), (1, 3), int(-6))
        );
        assert_eq!(g.parameter_count(), 5);

        let g = group_presentation(3, 4).unwrap();
        assert_eq!(g.entries[0][1], EntryDescriptor::Zero);
        assert!(matches!(g.entries[0][2], EntryDescriptor::FreeParam { .. }));
        assert!(matches!(g.entries[1][2], EntryDescriptor::FreeParam { .. }));
        assert_eq!(g.entries[1][1], EntryDescriptor::TorusPower { weight: 2 });
        assert_eq!(g.parameter_count(), 3);

        let g = group_presentation(5, 5).unwrap();
        assert_eq!(
            g.entries[0][2],
            EntryDescriptor::ScaledSquare {
                coef: rat(1, 2),
                name: "α_5".into()
            }
        );
    }

    #[test]
    fn known_dimensions() {
        for (a, b, dim) in [(3, 5, 4), (3, 7, 5), (3, 4, 3), (4, 4, 1), (5, 5, 2)] {
            let d = dimension(a, b, 7).unwrap();
            assert_eq!((d.formula, d.rank), (dim, dim), "({a},{b})");
        }
    }
}
