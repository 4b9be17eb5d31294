//! Iterated-integral words, their reduction at depth one, and duality.

use mzv_motive::integral_words::{dual, encode, reduce_single, IntegralWord, Level};

fn main() {
    let w = encode(&[3, 7]);
    println!(
        "ζ(3,7) ↔ {w}: weight {}, depth {}, admissible {}",
        w.weight(),
        w.depth(),
        w.is_admissible()
    );

    for s in ["0;00100;1", "0;0000100;1", "1;001;0", "0;0011;1"] {
        let w = IntegralWord::parse(s, Level::Lie).unwrap();
        match reduce_single(&w) {
            Ok(z) => {
                let (c, base) = z.to_symbol();
                println!(
                    "{w} = {z} = {} · {base}",
                    mzv_motive::scalars::format_rational(&c)
                );
            }
            Err(e) => println!("{w}: {e}"),
        }
    }

    let (sign, d) = dual(&encode(&[1, 2])).unwrap();
    println!("dual of I(0;110;1) is {sign} · {d}");
}
