//! The f-alphabet: shuffle product, deconcatenation and the derivations ∂_r.

use mzv_motive::f_alphabet::{evaluate_word, FPoly, FWord};

fn main() {
    let x = FPoly::f(3);
    let y = FPoly::parse_text("f_5f_2").unwrap();
    let p = x.shuffle(&y);
    println!("f_3 ⧢ f_5f_2 = {p}");
    println!("f_3 ⧢ f_3 = {}", x.shuffle(&x));

    println!("deconcatenation of f_5f_3:");
    for ((l, r), c) in FPoly::word(FWord::new([5, 3], 0)).deconcat().terms() {
        println!(
            "  {c} · ({}) ⊗ ({})",
            FPoly::word(l.clone()),
            FPoly::word(r.clone())
        );
    }

    println!(
        "∂_5 (f_5f_3 + 2 f_3f_5) = {}",
        FPoly::parse_text("f_5f_3 + 2 f_3f_5")
            .unwrap()
            .derivation(5)
    );

    // a word of length two as a function on the unipotent group
    for w in [FWord::new([7, 3], 0), FWord::new([5, 5], 0)] {
        println!(
            "{} ↦ {}",
            FPoly::word(w.clone()),
            evaluate_word(&w).unwrap()
        );
    }
}
