//! The batch verification harness behind `mzv verify`.
//!
//! Every check is independent; they run in parallel and are reported in
//! name order as one JSON object per line.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coaction::{coaction_brute, coaction_closed, decompose};
use crate::f_alphabet::FPoly;
use crate::galois::{
    d_closed_form, dimension, ij_disjoint_criterion, index_sets, symbolic_action, torus_matrix,
    UnipotentElement,
};
use crate::linalg;
use crate::numerics::identities::{
    verify_double_shuffle, verify_euler, verify_parity_relation, verify_square,
};
use crate::numerics::BigReal;
use crate::scalars::rat;
use crate::{Error, Result};

/// Smallest accepted `max_weight`.
pub const MIN_WEIGHT: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_weight: u32,
    pub digits: u32,
    pub seed: u64,
}

/// Pairs `a ≥ 1, b ≥ 2` with `a + b ≤ max`.
pub fn pairs(max: u32) -> Vec<(u32, u32)> {
    (3..=max)
        .flat_map(|n| (1..=n - 2).map(move |a| (a, n - a)))
        .collect()
}

/// The golden decompositions, as `(a, b, text)`.
pub fn golden_decompositions() -> Vec<(u32, u32, String)> {
    let mut v = vec![
        (3, 5, "-5 f_5f_3".to_string()),
        (3, 7, "-6 f_5f_5 - 14 f_7f_3".into()),
        (4, 8, "4 f_5f_7 + 20 f_7f_5 + 48 f_9f_3".into()),
        (4, 3, "2/5 f_3f_2^2 + 10 f_5f_2 - 18 f_7".into()),
        (3, 4, "-10 f_5f_2 + 17 f_7".into()),
    ];
    for a in (3..=11).step_by(2) {
        v.push((a, a, format!("f_{a}f_{a}")));
    }
    v
}

type Outcome = Result<(usize, Vec<String>)>;

fn tolerance_ok(r: &BigReal, digits: u32) -> bool {
    r.abs_below_pow10(digits.saturating_sub(5))
}

fn coaction_sweep(c: &SuiteConfig) -> Outcome {
    let mut n = 0;
    let mut bad = vec![];
    for (a, b) in pairs(c.max_weight) {
        for r in (3..=a + b - 2).step_by(2) {
            n += 1;
            if coaction_brute(a, b, r)? != coaction_closed(a, b, r)? {
                bad.push(format!("({a},{b}) r={r}"));
            }
        }
    }
    Ok((n, bad))
}

fn golden(_: &SuiteConfig) -> Outcome {
    let cases = golden_decompositions();
    let mut bad = vec![];
    for (a, b, text) in &cases {
        if decompose(*a, *b)?.value != FPoly::parse_text(text)? {
            bad.push(format!("({a},{b})"));
        }
    }
    Ok((cases.len(), bad))
}

fn d_sweep(c: &SuiteConfig) -> Outcome {
    let ps = pairs(c.max_weight);
    let mut bad = vec![];
    for &(a, b) in &ps {
        if d_closed_form(a, b) != index_sets(a, b)?.i.len() {
            bad.push(format!("({a},{b})"));
        }
    }
    Ok((ps.len(), bad))
}

fn criterion_sweep(c: &SuiteConfig) -> Outcome {
    let mut n = 0;
    let mut bad = vec![];
    for (a, b) in pairs(c.max_weight) {
        if a == b || (a + b) % 2 == 1 {
            continue;
        }
        n += 1;
        let idx = index_sets(a, b)?;
        let direct = idx.intersection().iter().all(|&x| x == 0 || x == idx.n);
        if ij_disjoint_criterion(a, b)? != direct {
            bad.push(format!("({a},{b})"));
        }
    }
    Ok((n, bad))
}

fn dimension_sweep(c: &SuiteConfig) -> Outcome {
    let ps = pairs(c.max_weight.min(20));
    let results: Vec<_> = ps
        .par_iter()
        .map(|&(a, b)| (a, b, dimension(a, b, c.seed)))
        .collect();
    let mut bad = vec![];
    for (a, b, d) in results {
        let d = d?;
        if d.formula != d.rank {
            bad.push(format!("({a},{b}) formula={} rank={}", d.formula, d.rank));
        }
    }
    Ok((ps.len(), bad))
}

/// Closure `M(u)M(u') = M(u∘u')`, identity, unipotency and the torus
/// rescaling `D(t)^{-1} M(u) D(t) = M(t·u)` at `draws` random points.
pub fn group_law_failures(a: u32, b: u32, seed: u64, draws: usize) -> Result<Vec<String>> {
    let act = symbolic_action(a, b)?;
    let n = act.basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((a as u64) << 24) ^ ((b as u64) << 8));
    let mut bad = vec![];
    if act.evaluate(&UnipotentElement::identity()) != linalg::identity(n) {
        bad.push(format!("({a},{b}) identity"));
    }
    let t = rat(3, 2);
    let d = torus_matrix(&act.basis, &t);
    let d_inv = torus_matrix(&act.basis, &(rat(1, 1) / &t));
    for k in 0..draws {
        let u = UnipotentElement::random(&mut rng, a + b);
        let v = UnipotentElement::random(&mut rng, a + b);
        let mu = act.evaluate(&u);
        let mv = act.evaluate(&v);
        if linalg::mul(&mu, &mv) != act.evaluate(&u.compose(&v)) {
            bad.push(format!("({a},{b}) closure draw {k}"));
        }
        if !linalg::is_upper_unitriangular(&mu) {
            bad.push(format!("({a},{b}) unipotency draw {k}"));
        }
        if linalg::mul(&linalg::mul(&d_inv, &mu), &d) != act.evaluate(&u.rescale(&t)) {
            bad.push(format!("({a},{b}) torus draw {k}"));
        }
    }
    Ok(bad)
}

fn group_sweep(c: &SuiteConfig) -> Outcome {
    let ps = pairs(c.max_weight.min(16));
    let results: Vec<_> = ps
        .par_iter()
        .map(|&(a, b)| group_law_failures(a, b, c.seed, 5))
        .collect();
    let mut bad = vec![];
    for r in results {
        bad.extend(r?);
    }
    Ok((ps.len(), bad))
}

fn residual_sweep(cases: Vec<(String, Result<BigReal>)>, digits: u32) -> Outcome {
    let n = cases.len();
    let mut bad = vec![];
    for (label, r) in cases {
        let r = r?;
        if !tolerance_ok(&r, digits) {
            bad.push(format!("{label} residual={}", r.to_decimal(digits + 5)));
        }
    }
    Ok((n, bad))
}

fn parity_sweep(c: &SuiteConfig) -> Outcome {
    let ps: Vec<_> = pairs(c.max_weight)
        .into_iter()
        .filter(|(a, b)| (a + b) % 2 == 1)
        .collect();
    let cases = ps
        .par_iter()
        .map(|&(a, b)| (format!("({a},{b})"), verify_parity_relation(a, b, c.digits)))
        .collect();
    residual_sweep(cases, c.digits)
}

fn shuffle_sweep(c: &SuiteConfig) -> Outcome {
    let ps: Vec<_> = (4..=c.max_weight)
        .flat_map(|n| (2..=n - 2).map(move |j| (n, j)))
        .collect();
    let cases = ps
        .par_iter()
        .map(|&(n, j)| {
            (
                format!("N={n} j={j}"),
                verify_double_shuffle(n, j, c.digits),
            )
        })
        .collect();
    residual_sweep(cases, c.digits)
}

fn square_sweep(c: &SuiteConfig) -> Outcome {
    let cases = (2..=c.max_weight / 2)
        .map(|a| (format!("a={a}"), verify_square(a, c.digits)))
        .collect();
    residual_sweep(cases, c.digits)
}

fn euler(c: &SuiteConfig) -> Outcome {
    residual_sweep(vec![("ζ(1,2)".into(), verify_euler(c.digits))], c.digits)
}

type CheckFn = fn(&SuiteConfig) -> Outcome;

/// Every registered check, by name.
pub fn registry() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("coaction.brute_vs_closed", coaction_sweep as CheckFn),
        ("decompose.golden", golden),
        ("dimension.formula_vs_rank", dimension_sweep),
        ("group.law", group_sweep),
        ("index.d_closed_form", d_sweep),
        ("index.ij_criterion", criterion_sweep),
        ("numeric.double_shuffle", shuffle_sweep),
        ("numeric.euler", euler),
        ("numeric.parity_relations", parity_sweep),
        ("numeric.square", square_sweep),
    ]
}

/// Runs the full registry; reports come back sorted by check name.
pub fn verify_suite(config: SuiteConfig) -> Result<Vec<CheckReport>> {
    if config.max_weight < MIN_WEIGHT {
        return Err(Error::Usage(format!(
            "max-weight must be at least {MIN_WEIGHT} (got {})",
            config.max_weight
        )));
    }
    let mut reports: Vec<CheckReport> = registry()
        .into_par_iter()
        .map(|(name, f)| match f(&config) {
            Ok((cases, bad)) => CheckReport {
                check: name.into(),
                passed: bad.is_empty(),
                cases,
                detail: if bad.is_empty() {
                    "ok".into()
                } else {
                    bad.join("; ")
                },
            },
            Err(e) => CheckReport {
                check: name.into(),
                passed: false,
                cases: 0,
                detail: format!("error: {e}"),
            },
        })
        .collect();
    reports.sort_by(|x, y| x.check.cmp(&y.check));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_enumeration() {
        assert_eq!(pairs(4), vec![(1, 2), (1, 3), (2, 2)]);
    }

    #[test]
    fn small_run() {
        let r = verify_suite(SuiteConfig {
            max_weight: 8,
            digits: 20,
            seed: 1,
        })
        .unwrap();
        assert_eq!(r.len(), registry().len());
        assert!(r.windows(2).all(|w| w[0].check < w[1].check));
        for x in &r {
            assert!(x.passed, "{x:?}");
        }
        assert!(matches!(
            verify_suite(SuiteConfig {
                max_weight: 4,
                digits: 20,
                seed: 1
            }),
            Err(Error::Usage(_))
        ));
    }
}
