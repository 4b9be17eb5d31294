//! Acceptance run: one PASS/FAIL line per criterion, tolerances pinned.
//!
//! Runs without the libtest harness so the table is always printed:
//! `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use mzv_motive::coaction::{coaction_brute, coaction_closed, decompose};
use mzv_motive::f_alphabet::{FPoly, FWord};
use mzv_motive::galois::{
    d_closed_form, dimension_formula, dimension_formula_uncorrected, dimension_rank,
    ij_disjoint_criterion, index_sets, motive_basis, symbolic_action, torus_matrix,
    UnipotentElement,
};
use mzv_motive::linalg;
use mzv_motive::numerics::identities::{
    evaluate_products, verify_double_shuffle, verify_euler, verify_parity_relation, verify_square,
};
use mzv_motive::numerics::period::{mul_rational, numeric_instantiate, period_matrix, PeriodExpr};
use mzv_motive::numerics::{double_zeta, BigReal};
use mzv_motive::scalars::{rat, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240601;
const NUMERIC_DIGITS: u32 = 40;
const NUMERIC_TOL_EXP: u32 = 35;
const PERIOD_DIGITS: u32 = 30;
const HOPF_CASES: usize = 1000;

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pairs(max: u32) -> Vec<(u32, u32)> {
    (3..=max)
        .flat_map(|n| (1..=n - 2).map(move |a| (a, n - a)))
        .collect()
}

fn poly(terms: &[(&[u32], u32, Rational)]) -> FPoly {
    let mut p = FPoly::zero();
    for (w, f2, c) in terms {
        p.add_term(FWord::new(w.to_vec(), *f2), c.clone());
    }
    p
}

fn criterion_1() -> Outcome {
    let mut golden = vec![
        (3, 5, poly(&[(&[5, 3], 0, rat(-5, 1))])),
        (
            3,
            7,
            poly(&[(&[5, 5], 0, rat(-6, 1)), (&[7, 3], 0, rat(-14, 1))]),
        ),
        (
            4,
            8,
            poly(&[
                (&[5, 7], 0, rat(4, 1)),
                (&[7, 5], 0, rat(20, 1)),
                (&[9, 3], 0, rat(48, 1)),
            ]),
        ),
        (
            4,
            3,
            poly(&[
                (&[5], 1, rat(10, 1)),
                (&[3], 2, rat(2, 5)),
                (&[7], 0, rat(-18, 1)),
            ]),
        ),
        (3, 4, poly(&[(&[7], 0, rat(17, 1)), (&[5], 1, rat(-10, 1))])),
    ];
    for a in (3..=11).step_by(2) {
        golden.push((a, a, poly(&[(&[a, a], 0, rat(1, 1))])));
    }
    let mut bad = vec![];
    for (a, b, expect) in &golden {
        let d = decompose(*a, *b).unwrap();
        let modulus_ok = if (a + b) % 2 == 0 {
            d.modulo_f2_power == Some((a + b) / 2)
        } else {
            d.modulo_f2_power.is_none()
        };
        if d.value != *expect || !modulus_ok {
            bad.push(format!("({a},{b}) got {}", d.value.to_text()));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} decompositions equal exactly", golden.len())
        } else {
            bad.join("; ")
        },
    }
}

fn criterion_2() -> Outcome {
    let mut n = 0;
    let mut bad = vec![];
    for (a, b) in pairs(24) {
        for r in (3..=a + b - 2).step_by(2) {
            n += 1;
            let (x, y) = (
                coaction_brute(a, b, r).unwrap(),
                coaction_closed(a, b, r).unwrap(),
            );
            if x != y {
                bad.push(format!("D_{r}ζ(a,b)=({a},{b}): {} vs {}", x.q, y.q));
            }
        }
    }
    for (a, b, r, q) in [(5, 3, 3, 1), (3, 5, 5, -5), (7, 3, 7, 15), (3, 5, 3, 0)] {
        let got = coaction_brute(a, b, r).unwrap().q;
        if got != rat(q, 1) {
            bad.push(format!("D_{r}ζ^m({a},{b}) = {got}, expected {q}"));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{n} (a,b,r) triples plus 4 reference values")
        } else {
            bad.join("; ")
        },
    }
}

fn criterion_3() -> Outcome {
    let mut bad = vec![];
    for (a, b) in pairs(60) {
        let idx = index_sets(a, b).unwrap();
        // |I| by direct enumeration of the defining set
        let n = a + b;
        let direct: Vec<u32> = if a == b {
            vec![0, a, n]
        } else {
            let lo = if a > b { b } else { a + 1 };
            let mut v: Vec<u32> = (lo..=n - 2).filter(|x| x % 2 == 1).collect();
            v.insert(0, 0);
            v.push(n);
            v
        };
        if d_closed_form(a, b) != direct.len() || idx.i != direct {
            bad.push(format!("d({a},{b})"));
        }
        if a != b && (a + b) % 2 == 0 {
            let j: Vec<u32> = direct.iter().map(|x| n - x).collect();
            let disjoint = direct.iter().all(|x| *x == 0 || *x == n || !j.contains(x));
            if ij_disjoint_criterion(a, b).unwrap() != disjoint {
                bad.push(format!("criterion({a},{b})"));
            }
        }
    }
    let mut uncorrected_off = vec![];
    let mut checked = 0;
    for (a, b) in pairs(20) {
        checked += 1;
        let rank = dimension_rank(a, b, SEED, 3).unwrap();
        if dimension_formula(a, b).unwrap() != rank {
            bad.push(format!("dim({a},{b}) formula != rank {rank}"));
        }
        if dimension_formula_uncorrected(a, b).unwrap() != rank {
            uncorrected_off.push(format!("({a},{b})"));
        }
    }
    for (a, b, dim) in [(3, 5, 4), (3, 7, 5), (3, 4, 3)] {
        if dimension_formula(a, b).unwrap() != dim || dimension_rank(a, b, SEED, 3).unwrap() != dim
        {
            bad.push(format!("dim G({a},{b}) != {dim}"));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!(
                "d/I/J for a+b<=60; formula=rank for {checked} pairs a+b<=20 (formula includes the symmetric-pair \
                 correction; the uncorrected 2d-|I∩J| form disagrees with the rank at {})",
                uncorrected_off.join(" ")
            )
        } else {
            bad.join("; ")
        },
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = vec![];
    let mut draws = 0;
    for (a, b) in pairs(16) {
        let act = symbolic_action(a, b).unwrap();
        let n = act.basis.len();
        if act.evaluate(&UnipotentElement::identity()) != linalg::identity(n) {
            bad.push(format!("({a},{b}) identity"));
        }
        for _ in 0..5 {
            draws += 1;
            let u = UnipotentElement::random(&mut rng, a + b);
            let v = UnipotentElement::random(&mut rng, a + b);
            let (mu, mv) = (act.evaluate(&u), act.evaluate(&v));
            if linalg::mul(&mu, &mv) != act.evaluate(&u.compose(&v)) {
                bad.push(format!("({a},{b}) closure"));
            }
            if !linalg::is_upper_unitriangular(&mu) {
                bad.push(format!("({a},{b}) unipotency"));
            }
            let t = rat(
                rng.gen_range(1..=9) * if rng.gen_bool(0.5) { -1 } else { 1 },
                rng.gen_range(1..=9),
            );
            let d = torus_matrix(&act.basis, &t);
            let d_inv = torus_matrix(&act.basis, &(rat(1, 1) / &t));
            if linalg::mul(&linalg::mul(&d_inv, &mu), &d) != act.evaluate(&u.rescale(&t)) {
                bad.push(format!("({a},{b}) torus conjugation"));
            }
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{draws} draws over a+b<=16")
        } else {
            bad.join("; ")
        },
    }
}

fn below(r: &BigReal) -> bool {
    r.abs_below_pow10(NUMERIC_TOL_EXP)
}

fn criterion_5() -> Outcome {
    let d = NUMERIC_DIGITS;
    let mut bad = vec![];
    let mut n = 0;
    let mut check = |label: String, r: BigReal| {
        n += 1;
        if !below(&r) {
            bad.push(format!("{label}: residual {}", r.to_decimal(d + 5)));
        }
    };
    for (a, b) in pairs(13).into_iter().filter(|(a, b)| (a + b) % 2 == 1) {
        check(
            format!("parity ({a},{b})"),
            verify_parity_relation(a, b, d).unwrap(),
        );
    }
    // the two explicit relations, assembled here independently
    let z34 = evaluate_products(&[(rat(17, 1), vec![7]), (rat(-10, 1), vec![5, 2])], d).unwrap();
    check(
        "ζ(3,4)=17ζ(7)-10ζ(5)ζ(2)".into(),
        (&double_zeta(3, 4, d).unwrap() - &z34).abs(),
    );
    let z43 = evaluate_products(
        &[
            (rat(1, 1), vec![3, 4]),
            (rat(10, 1), vec![5, 2]),
            (rat(-18, 1), vec![7]),
        ],
        d,
    )
    .unwrap();
    check(
        "ζ(4,3)=ζ(3)ζ(4)+10ζ(5)ζ(2)-18ζ(7)".into(),
        (&double_zeta(4, 3, d).unwrap() - &z43).abs(),
    );
    check("ζ(1,2)=ζ(3)".into(), verify_euler(d).unwrap());
    for a in 2..=6 {
        check(format!("2ζ({a},{a})"), verify_square(a, d).unwrap());
    }
    for big_n in 4..=10 {
        for j in 2..=big_n - 2 {
            check(
                format!("double shuffle N={big_n} j={j}"),
                verify_double_shuffle(big_n, j, d).unwrap(),
            );
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{n} identities at {d} digits, residual < 1e-{NUMERIC_TOL_EXP}")
        } else {
            bad.join("; ")
        },
    }
}

fn expr(coef: i64, k: u32, zetas: &[u32], double: Option<(u32, u32)>) -> PeriodExpr {
    PeriodExpr {
        coef: rat(coef, 1),
        two_pi_i_power: k,
        zeta_factors: zetas.to_vec(),
        double_factor: double,
    }
}

fn criterion_6() -> Outcome {
    let z = || expr(0, 0, &[], None);
    let p37 = vec![
        vec![
            expr(1, 0, &[], None),
            expr(1, 0, &[5], None),
            expr(1, 0, &[7], None),
            expr(1, 0, &[], Some((3, 7))),
        ],
        vec![z(), expr(1, 5, &[], None), z(), expr(1, 5, &[5], None)],
        vec![z(), z(), expr(1, 7, &[], None), expr(1, 7, &[3], None)],
        vec![z(), z(), z(), expr(1, 10, &[], None)],
    ];
    let p35 = vec![
        vec![
            expr(1, 0, &[], None),
            expr(1, 0, &[5], None),
            expr(1, 0, &[], Some((3, 5))),
        ],
        vec![z(), expr(1, 5, &[], None), expr(1, 5, &[3], None)],
        vec![z(), z(), expr(1, 8, &[], None)],
    ];
    let mut bad = vec![];
    for (a, b, expect) in [(3, 7, &p37), (3, 5, &p35)] {
        if period_matrix(a, b).unwrap() != *expect {
            bad.push(format!("P({a},{b}) symbolic"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    for (a, b) in [(3, 7), (3, 5)] {
        let sym = period_matrix(a, b).unwrap();
        let num = numeric_instantiate(&sym, PERIOD_DIGITS).unwrap();
        let basis = motive_basis(a, b).unwrap();
        let act = symbolic_action(a, b).unwrap();
        for k in 0..3 {
            let u = UnipotentElement::random(&mut rng, a + b);
            let t = rat(rng.gen_range(1..=7), rng.gen_range(1..=7));
            let g = linalg::mul(&act.evaluate(&u), &torus_matrix(&basis, &t));
            let pg = mul_rational(&num, &g);
            for (i, row) in sym.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if e.is_zero() != pg[i][j].is_zero() {
                        bad.push(format!("P({a},{b})·g#{k} cell ({i},{j})"));
                    }
                }
            }
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("P(3,7), P(3,5) symbolic; zero pattern kept by 3 random g each at {PERIOD_DIGITS} digits")
        } else {
            bad.join("; ")
        },
    }
}

fn random_fpoly(rng: &mut ChaCha8Rng) -> FPoly {
    let mut p = FPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=3);
        let letters: Vec<u32> = (0..len)
            .map(|_| [3, 5, 7, 9][rng.gen_range(0..4)])
            .collect();
        let f2 = rng.gen_range(0..=2);
        p.add_term(
            FWord::new(letters, f2),
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)),
        );
    }
    p
}

type Triple = BTreeMap<(FWord, FWord, FWord), Rational>;

fn add3(m: &mut Triple, k: (FWord, FWord, FWord), c: Rational) {
    let e = m.entry(k.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}

fn coassoc_sides(x: &FPoly) -> (Triple, Triple) {
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((l, r), c) in x.deconcat().terms() {
        for ((ll, lr), c2) in FPoly::word(l.clone()).deconcat().terms() {
            add3(&mut left, (ll.clone(), lr.clone(), r.clone()), c * c2);
        }
        for ((rl, rr), c2) in FPoly::word(r.clone()).deconcat().terms() {
            add3(&mut right, (l.clone(), rl.clone(), rr.clone()), c * c2);
        }
    }
    (left, right)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let mut bad = vec![];
    for k in 0..HOPF_CASES {
        let (x, y, z) = (
            random_fpoly(&mut rng),
            random_fpoly(&mut rng),
            random_fpoly(&mut rng),
        );
        if x.shuffle(&y) != y.shuffle(&x) {
            bad.push(format!("case {k}: commutativity"));
        }
        if x.shuffle(&y).shuffle(&z) != x.shuffle(&y.shuffle(&z)) {
            bad.push(format!("case {k}: associativity"));
        }
        let (l, r) = coassoc_sides(&x);
        if l != r {
            bad.push(format!("case {k}: coassociativity"));
        }
        if x.shuffle(&y).deconcat() != x.deconcat().shuffle(&y.deconcat()) {
            bad.push(format!("case {k}: compatibility"));
        }
        let rr = [3, 5, 7, 9][k % 4];
        let lhs = x.shuffle(&y).derivation(rr);
        let rhs = x
            .derivation(rr)
            .shuffle(&y)
            .add(&x.shuffle(&y.derivation(rr)));
        if lhs != rhs {
            bad.push(format!("case {k}: Leibniz ∂_{rr}"));
        }
    }
    let mut support_pairs = 0;
    for (a, b) in pairs(40) {
        // ζ(a,a) for even a is a rational multiple of ζ(2)^a: empty support
        if a == b && a % 2 == 0 {
            continue;
        }
        support_pairs += 1;
        if decompose(a, b).unwrap().support() != index_sets(a, b).unwrap().interior() {
            bad.push(format!("support ({a},{b})"));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!(
                "{HOPF_CASES} random cases x 5 axioms; support = I∖{{0,N}} for {support_pairs} pairs a+b<=40 \
                 (even (a,a) excluded: decomposition is 0 mod f_2^a)"
            )
        } else {
            bad.into_iter().take(10).collect::<Vec<_>>().join("; ")
        },
    }
}

fn main() {
    // cold numeric cache for this run
    let cache = tempfile::tempdir().unwrap();
    std::env::set_var("MZV_CACHE_DIR", cache.path());

    let criteria: [Criterion; 7] = [
        ("golden decompositions", Duration::from_secs(1), criterion_1),
        (
            "coaction brute = closed, a+b<=24",
            Duration::from_secs(5),
            criterion_2,
        ),
        (
            "index sets and dimensions",
            Duration::from_secs(60),
            criterion_3,
        ),
        ("group law", Duration::from_secs(30), criterion_4),
        ("numeric identities", Duration::from_secs(120), criterion_5),
        ("period matrices", Duration::from_secs(30), criterion_6),
        (
            "Hopf axioms and support",
            Duration::from_secs(120),
            criterion_7,
        ),
    ];
    let mut failures = vec![];
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let ok = out.passed && elapsed <= *limit;
        println!(
            "criterion {}: {} | {name} | {:.2}s (limit {}s) | {}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            out.detail
        );
        if !ok {
            failures.push(k + 1);
        }
    }
    if !failures.is_empty() {
        eprintln!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
