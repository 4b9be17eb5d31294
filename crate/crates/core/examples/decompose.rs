//! f-alphabet decompositions of double zeta values.
//!
//! `cargo run --example decompose -- 3 7` decomposes one pair; without
//! arguments a small table is printed.

use mzv_motive::coaction::decompose;

fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let pairs = match args.as_slice() {
        [a, b] => vec![(*a, *b)],
        _ => vec![
            (3, 5),
            (3, 7),
            (4, 8),
            (4, 3),
            (3, 4),
            (5, 5),
            (1, 2),
            (1, 3),
            (2, 5),
        ],
    };
    for (a, b) in pairs {
        let d = decompose(a, b).unwrap();
        let modulus = d
            .modulo_f2_power
            .map(|k| format!("  (mod f_2^{k})"))
            .unwrap_or_default();
        println!("φ(ζ^m({a},{b})) = {}{modulus}", d.value);
        println!("    support {:?}, LaTeX {}", d.support(), d.to_latex());
    }
}
