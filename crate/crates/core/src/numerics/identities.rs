//! Real-number identities between single and double zeta values, checked
//! numerically. Each check returns the absolute residual `|LHS - RHS|`.

use super::bigreal::BigReal;
use super::mzv::double_zeta;
use super::zeta::zeta_single;
use crate::scalars::{binomial, rat, Rational};
use crate::{Error, Result};

fn odd_between(lo: u32, hi: u32) -> impl Iterator<Item = u32> {
    (lo..=hi).filter(|r| r % 2 == 1)
}

/// The right-hand side of the parity relation: `ζ(a,b)` for `a, b` of
/// different parity as a combination of products of single zetas.
///
/// For `a` even: `Σ_r (C(r-1,b-1)+C(r-1,a-1)) ζ(r)ζ(N-r) - ½(C(N,a)+1) ζ(N)`.
/// For `a` odd: `-Σ_r (C(r-1,b-1)+C(r-1,a-1)) ζ(r)ζ(N-r) + [a≥3] ζ(a)ζ(b)
/// + ½(C(N,a)-1) ζ(N)`. Sums run over odd `3 ≤ r ≤ N-2`.
pub fn parity_relation_rhs(a: u32, b: u32) -> Result<Vec<(Rational, Vec<u32>)>> {
    if a < 1 || b < 2 {
        return Err(Error::OutOfRange(format!(
            "need a >= 1 and b >= 2, got ({a},{b})"
        )));
    }
    if (a + b).is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!(
            "({a},{b}) have the same parity"
        )));
    }
    let n = a + b;
    let (ai, bi, ni) = (a as i64, b as i64, n as i64);
    let sign = if a.is_multiple_of(2) {
        rat(1, 1)
    } else {
        rat(-1, 1)
    };
    let mut terms = Vec::new();
    for r in odd_between(3, n - 2) {
        let ri = r as i64;
        let c = &sign * (binomial(ri - 1, bi - 1) + binomial(ri - 1, ai - 1));
        terms.push((c, vec![r, n - r]));
    }
    let cn = binomial(ni, ai);
    if a.is_multiple_of(2) {
        terms.push((-(cn + rat(1, 1)) * rat(1, 2), vec![n]));
    } else {
        if a >= 3 {
            terms.push((rat(1, 1), vec![a, b]));
        }
        terms.push(((cn - rat(1, 1)) * rat(1, 2), vec![n]));
    }
    Ok(terms)
}

/// Evaluates `Σ c · Π ζ(k)`.
pub fn evaluate_products(terms: &[(Rational, Vec<u32>)], digits: u32) -> Result<BigReal> {
    let mut acc: Option<BigReal> = None;
    for (c, factors) in terms {
        let mut prod: Option<BigReal> = None;
        for &k in factors {
            let z = zeta_single(k, digits)?;
            prod = Some(match prod {
                None => z,
                Some(p) => &p * &z,
            });
        }
        let term = prod.expect("nonempty product").scale(c);
        acc = Some(match acc {
            None => term,
            Some(s) => &s + &term,
        });
    }
    acc.ok_or_else(|| Error::Domain("empty sum".into()))
}

/// `|ζ(a,b) - RHS|` for the parity relation.
pub fn verify_parity_relation(a: u32, b: u32, digits: u32) -> Result<BigReal> {
    let rhs = evaluate_products(&parity_relation_rhs(a, b)?, digits)?;
    let lhs = double_zeta(a, b, digits)?;
    Ok((&lhs - &rhs).abs())
}

/// Residual of `ζ(j,N-j) + ζ(N-j,j) + ζ(N) = Σ_{k=2}^{N-1} (C(k-1,j-1) +
/// C(k-1,N-j-1)) ζ(N-k,k)`, the combination of the shuffle and stuffle
/// products of `ζ(j)ζ(N-j)`.
pub fn verify_double_shuffle(n: u32, j: u32, digits: u32) -> Result<BigReal> {
    if j < 2 || j + 2 > n {
        return Err(Error::OutOfRange(format!(
            "need 2 ≤ j ≤ N−2, got N = {n}, j = {j}"
        )));
    }
    let (ji, ni) = (j as i64, n as i64);
    let mut lhs = &double_zeta(j, n - j, digits)? + &double_zeta(n - j, j, digits)?;
    lhs = &lhs + &zeta_single(n, digits)?;
    let mut rhs = BigReal::zero(lhs.bits());
    for k in 2..n {
        let ki = k as i64;
        let c = binomial(ki - 1, ji - 1) + binomial(ki - 1, ni - ji - 1);
        if c == rat(0, 1) {
            continue;
        }
        rhs = &rhs + &double_zeta(n - k, k, digits)?.scale(&c);
    }
    Ok((&lhs - &rhs).abs())
}

/// `|ζ(1,2) - ζ(3)|`.
pub fn verify_euler(digits: u32) -> Result<BigReal> {
    Ok((&double_zeta(1, 2, digits)? - &zeta_single(3, digits)?).abs())
}

/// `|2ζ(a,a) - ζ(a)² + ζ(2a)|`.
pub fn verify_square(a: u32, digits: u32) -> Result<BigReal> {
    if a < 2 {
        return Err(Error::OutOfRange(format!("need a >= 2, got {a}")));
    }
    let za = zeta_single(a, digits)?;
    let lhs = double_zeta(a, a, digits)?.scale(&rat(2, 1));
    let rhs = &(&za * &za) - &zeta_single(2 * a, digits)?;
    Ok((&lhs - &rhs).abs())
}
