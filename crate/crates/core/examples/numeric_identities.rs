//! High-precision checks of relations between single and double zetas.

use mzv_motive::numerics::identities::{
    verify_double_shuffle, verify_euler, verify_parity_relation, verify_square,
};
use mzv_motive::numerics::{double_zeta, zeta_single};

fn main() {
    let digits = 50;
    println!(
        "ζ(3)   = {}",
        zeta_single(3, digits).unwrap().to_decimal(digits)
    );
    println!(
        "ζ(3,5) = {}",
        double_zeta(3, 5, digits).unwrap().to_decimal(digits)
    );
    println!(
        "ζ(1,2) - ζ(3): {:e}",
        verify_euler(digits).unwrap().to_f64()
    );
    for (a, b) in [(3, 4), (4, 3), (2, 7), (1, 6)] {
        println!(
            "parity relation ({a},{b}): residual {:e}",
            verify_parity_relation(a, b, digits).unwrap().to_f64()
        );
    }
    for a in [3, 4, 5] {
        println!(
            "2ζ({a},{a}) = ζ({a})² - ζ({}): residual {:e}",
            2 * a,
            verify_square(a, digits).unwrap().to_f64()
        );
    }
    println!(
        "double shuffle N=9, j=4: residual {:e}",
        verify_double_shuffle(9, 4, digits).unwrap().to_f64()
    );
}
