//! The operators D_r on ζ^m(a,b): brute force over subwords against the
//! closed forms.

use mzv_motive::coaction::{coaction_brute, coaction_closed};
use mzv_motive::scalars::format_rational;

fn main() {
    for (a, b) in [(3, 5), (5, 3), (7, 3), (4, 3), (2, 9)] {
        for r in (3..=a + b - 2).step_by(2) {
            let brute = coaction_brute(a, b, r).unwrap();
            let closed = coaction_closed(a, b, r).unwrap();
            assert_eq!(brute, closed);
            println!(
                "D_{r} ζ^m({a},{b}) = {} ζ^L({r}) ⊗ ζ^m({})",
                format_rational(&brute.q),
                a + b - r
            );
        }
    }
    if let Err(e) = coaction_brute(3, 5, 4) {
        println!("r = 4: {e}");
    }
}
