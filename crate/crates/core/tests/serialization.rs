use mzv_motive::coaction::{decompose, Decomposition};
use mzv_motive::f_alphabet::{FPoly, FWord};
use mzv_motive::galois::{group_presentation, index_sets, GaloisPresentation, IndexData};
use mzv_motive::scalars::{parse_rational, Rational};
use serde_json::Value;

fn pairs(max: u32) -> Vec<(u32, u32)> {
    (3..=max)
        .flat_map(|n| (1..=n - 2).map(move |a| (a, n - a)))
        .collect()
}

#[test]
fn json_round_trips() {
    for (a, b) in pairs(14) {
        let d = decompose(a, b).unwrap();
        let back: Decomposition =
            serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        let i = index_sets(a, b).unwrap();
        let back: IndexData = serde_json::from_str(&serde_json::to_string(&i).unwrap()).unwrap();
        assert_eq!(back, i);
        let g = group_presentation(a, b).unwrap();
        let back: GaloisPresentation =
            serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn index_json_shape() {
    let v: Value = serde_json::to_value(index_sets(3, 7).unwrap()).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"I": [0, 5, 7, 10], "J": [0, 3, 5, 10], "d": 4, "N": 10})
    );
}

/// Reads `c f_{a}f_{b}f_{2}^{k}` terms back from the LaTeX rendering.
fn parse_latex(s: &str) -> FPoly {
    let rhs = s
        .split(['='])
        .nth(1)
        .or_else(|| s.split("\\equiv").nth(1))
        .unwrap();
    let rhs = rhs.split("\\pmod").next().unwrap().trim();
    let mut out = FPoly::zero();
    let chars: Vec<char> = rhs.chars().collect();
    let mut i = 0;
    let read_braced = |i: &mut usize| -> String {
        assert_eq!(chars[*i], '{');
        let end = chars[*i..].iter().position(|&c| c == '}').unwrap() + *i;
        let s: String = chars[*i + 1..end].iter().collect();
        *i = end + 1;
        s
    };
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '-' || chars[i] == '+' {
            sign = if chars[i] == '-' { -1 } else { 1 };
            i += 1;
        }
        let mut coef = Rational::from_integer(1.into());
        if rhs[rhs.char_indices().nth(i).unwrap().0..].starts_with("\\frac") {
            i += 5;
            let p = read_braced(&mut i);
            let q = read_braced(&mut i);
            coef = parse_rational(&format!("{p}/{q}")).unwrap();
        } else if chars[i].is_ascii_digit() {
            let start = i;
            while chars[i].is_ascii_digit() {
                i += 1;
            }
            coef = parse_rational(&chars[start..i].iter().collect::<String>()).unwrap();
        }
        let (mut letters, mut f2) = (vec![], 0);
        while i < chars.len() && chars[i] == 'f' {
            i += 2;
            let k: u32 = read_braced(&mut i).parse().unwrap();
            let mut e = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                e = read_braced(&mut i).parse().unwrap();
            }
            if k == 2 {
                f2 += e;
            } else {
                letters.extend(std::iter::repeat_n(k, e as usize));
            }
        }
        out.add_term(
            FWord::new(letters, f2),
            coef * Rational::from_integer(sign.into()),
        );
    }
    out
}

#[test]
fn renderings_agree_term_by_term() {
    for (a, b) in pairs(16) {
        let d = decompose(a, b).unwrap();
        if d.value.is_zero() {
            continue;
        }
        let from_text = FPoly::parse_text(&d.value.to_text()).unwrap();
        assert_eq!(from_text, d.value, "text ({a},{b})");
        let from_latex = parse_latex(&d.to_latex());
        assert_eq!(from_latex, d.value, "latex ({a},{b}): {}", d.to_latex());
        let v: Value = serde_json::to_value(&d).unwrap();
        let mut from_json = FPoly::zero();
        for t in v["terms"].as_array().unwrap() {
            let letters: Vec<u32> = t["word"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as u32)
                .collect();
            let f2 = t["f2"].as_u64().unwrap() as u32;
            from_json.add_term(
                FWord::new(letters, f2),
                parse_rational(t["coef"].as_str().unwrap()).unwrap(),
            );
        }
        assert_eq!(from_json, d.value, "json ({a},{b})");
    }
}
