//! Minimal motive, Galois action and group presentation for ζ(a,b).

use mzv_motive::galois::{
    group_presentation, index_sets, motive_basis, symbolic_action, weight_graded_pieces,
};

fn main() {
    for (a, b) in [(3, 7), (3, 4), (5, 5)] {
        let idx = index_sets(a, b).unwrap();
        println!("({a},{b}): I = {:?}, J = {:?}, d = {}", idx.i, idx.j, idx.d);
        let basis: Vec<String> = motive_basis(a, b)
            .unwrap()
            .into_iter()
            .map(|e| e.label)
            .collect();
        println!("basis of M({a},{b}): {}", basis.join(", "));
        let pieces: Vec<String> = weight_graded_pieces(a, b)
            .unwrap()
            .into_iter()
            .map(|p| p.1)
            .collect();
        println!("graded pieces: {}", pieces.join(" ⊕ "));

        let act = symbolic_action(a, b).unwrap();
        println!("unipotent action:");
        for row in &act.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  [ {} ]", cells.join(", "));
        }
        print!("{}", group_presentation(a, b).unwrap().to_text());
        println!();
    }
}
