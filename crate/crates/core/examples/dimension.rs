//! dim G(a,b) by the closed formula and by the Jacobian rank of the action.

use mzv_motive::galois::{dimension, dimension_formula_uncorrected};

fn main() {
    println!(
        "{:>7} {:>8} {:>5} {:>12}",
        "(a,b)", "formula", "rank", "uncorrected"
    );
    for n in 3..=12 {
        for a in 1..=n - 2 {
            let b = n - a;
            let d = dimension(a, b, 1).unwrap();
            let u = dimension_formula_uncorrected(a, b).unwrap();
            let mark = if u != d.rank { " *" } else { "" };
            println!(
                "{:>7} {:>8} {:>5} {:>12}{mark}",
                format!("({a},{b})"),
                d.formula,
                d.rank,
                u
            );
        }
    }
}
