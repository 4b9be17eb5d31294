//! Period matrices of minimal motives, symbolic and numeric.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bigreal::{bits_for_digits, pi, BigReal, Complex};
use super::mzv::double_zeta;
use super::zeta::zeta_single;
use crate::galois::{index_sets, motive_basis};
use crate::scalars::{format_rational, serde_rational, Rational};
use crate::Result;

/// `coef · (2πi)^k · Π ζ(n) · ζ(a,b)?`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodExpr {
    #[serde(with = "serde_rational")]
    pub coef: Rational,
    pub two_pi_i_power: u32,
    pub zeta_factors: Vec<u32>,
    pub double_factor: Option<(u32, u32)>,
}

impl PeriodExpr {
    pub fn zero() -> Self {
        Self {
            coef: Rational::zero(),
            two_pi_i_power: 0,
            zeta_factors: vec![],
            double_factor: None,
        }
    }

    pub fn one() -> Self {
        Self {
            coef: Rational::one(),
            ..Self::zero()
        }
    }

    pub fn zeta(n: u32) -> Self {
        Self {
            zeta_factors: vec![n],
            ..Self::one()
        }
    }

    pub fn double(a: u32, b: u32) -> Self {
        Self {
            double_factor: Some((a, b)),
            ..Self::one()
        }
    }

    pub fn two_pi_i(k: u32) -> Self {
        Self {
            two_pi_i_power: k,
            ..Self::one()
        }
    }

    pub fn with_two_pi_i(mut self, k: u32) -> Self {
        self.two_pi_i_power += k;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    /// The value as a complex number; `i^k` lands on the real or imaginary
    /// axis according to `k mod 4`.
    pub fn evaluate(&self, digits: u32) -> Result<Complex> {
        let bits = bits_for_digits(digits);
        if self.is_zero() {
            return Ok(Complex::zero(bits));
        }
        let two_pi = pi(bits).scale(&Rational::from_integer(2.into()));
        let mut x = BigReal::from_rational(&self.coef, bits);
        x = &x * &two_pi.pow(self.two_pi_i_power);
        for &n in &self.zeta_factors {
            x = &x * &zeta_single(n, digits)?;
        }
        if let Some((a, b)) = self.double_factor {
            x = &x * &double_zeta(a, b, digits)?;
        }
        Ok(match self.two_pi_i_power % 4 {
            0 => Complex::real(x),
            1 => Complex {
                re: BigReal::zero(bits),
                im: x,
            },
            2 => Complex::real(-&x),
            _ => Complex {
                re: BigReal::zero(bits),
                im: -&x,
            },
        })
    }
}

impl fmt::Display for PeriodExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        if self.two_pi_i_power > 0 {
            parts.push(format!("(2πi)^{}", self.two_pi_i_power));
        }
        parts.extend(self.zeta_factors.iter().map(|n| format!("ζ({n})")));
        if let Some((a, b)) = self.double_factor {
            parts.push(format!("ζ({a},{b})"));
        }
        let body = parts.concat();
        match (self.coef.is_one(), body.is_empty()) {
            (true, true) => f.write_str("1"),
            (true, false) => f.write_str(&body),
            (false, true) => f.write_str(&format_rational(&self.coef)),
            (false, false) if self.coef == -Rational::one() => write!(f, "-{body}"),
            (false, false) => write!(f, "{}·{body}", format_rational(&self.coef)),
        }
    }
}

pub type PeriodMatrix = Vec<Vec<PeriodExpr>>;

/// A period matrix of `M(a,b)` over the basis of ascending weights.
///
/// The first row holds `1`, the single zetas of the interior weights (same
/// parity) or zeros (different parity), and `ζ(a,b)` or `ζ(N)` in the last
/// column. An interior weight `w` contributes `(2πi)^w` on the diagonal and
/// `(2πi)^w ζ(N-w)` in the last column; the last row is `(2πi)^N`. When the
/// motive is one-dimensional the matrix is `(ζ(a,b))`.
pub fn period_matrix(a: u32, b: u32) -> Result<PeriodMatrix> {
    let basis = motive_basis(a, b)?;
    let n = index_sets(a, b)?.n;
    if basis.len() == 1 {
        return Ok(vec![vec![PeriodExpr::double(a, b)]]);
    }
    let same = (a + b).is_multiple_of(2);
    let d = basis.len();
    let mut m = vec![vec![PeriodExpr::zero(); d]; d];
    m[0][0] = PeriodExpr::one();
    m[0][d - 1] = if same {
        PeriodExpr::double(a, b)
    } else {
        PeriodExpr::zeta(n)
    };
    for (k, e) in basis.iter().enumerate().take(d - 1).skip(1) {
        let w = e.weight;
        if same {
            m[0][k] = PeriodExpr::zeta(w);
        }
        m[k][k] = PeriodExpr::two_pi_i(w);
        m[k][d - 1] = PeriodExpr::zeta(n - w).with_two_pi_i(w);
    }
    m[d - 1][d - 1] = PeriodExpr::two_pi_i(n);
    Ok(m)
}

/// Evaluates every entry of a period matrix.
pub fn numeric_instantiate(m: &PeriodMatrix, digits: u32) -> Result<Vec<Vec<Complex>>> {
    m.iter()
        .map(|row| row.iter().map(|e| e.evaluate(digits)).collect())
        .collect()
}

/// Text rendering, one row per line, entries separated by ` | `.
pub fn matrix_text(m: &PeriodMatrix) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" | ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Product of a complex matrix with a rational matrix on the right.
pub fn mul_rational(p: &[Vec<Complex>], g: &[Vec<Rational>]) -> Vec<Vec<Complex>> {
    let bits = p[0][0].re.bits();
    p.iter()
        .map(|row| {
            (0..g[0].len())
                .map(|j| {
                    row.iter()
                        .zip(g)
                        .fold(Complex::zero(bits), |acc, (x, grow)| {
                            if grow[j].is_zero() {
                                acc
                            } else {
                                acc.add(&x.scale(&grow[j]))
                            }
                        })
                })
                .collect()
        })
        .collect()
}
