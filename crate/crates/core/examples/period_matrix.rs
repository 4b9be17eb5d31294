//! Period matrices, symbolic and evaluated.

use mzv_motive::numerics::period::{matrix_text, numeric_instantiate, period_matrix};

fn main() {
    for (a, b) in [(3, 7), (3, 5), (3, 4), (4, 4)] {
        let m = period_matrix(a, b).unwrap();
        println!("P({a},{b}) =\n{}", matrix_text(&m));
        let values = numeric_instantiate(&m, 20).unwrap();
        let top_right = &values[0][values.len() - 1];
        println!(
            "top-right ≈ {} + {} i\n",
            top_right.re.to_decimal(20),
            top_right.im.to_decimal(20)
        );
    }
}
