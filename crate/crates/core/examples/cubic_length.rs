//! Nine components, the Hermitian matrix they describe, and the cubic length.

use finsler3::cubic::{length_cubed_by_det, INDEPENDENT_COMPONENTS};
use finsler3::json::{complex_text, real_text};
use finsler3::{cubic_tensor, herm_from_components, length, length_cubed, NineVector, Rational};

fn main() {
    let x = NineVector::<Rational>::from_i64([1, 2, 3, 4, 5, 6, 7, 8, 9]);
    let m = herm_from_components(&x);
    println!("X^(r s):");
    for r in 0..3 {
        let row: Vec<String> = m.matrix().row(r).iter().map(complex_text).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("|X|^3 = {}", real_text(&length_cubed(&x)));
    println!("det X = {}", real_text(&length_cubed_by_det(&x)));
    println!("|X|   = {:.12}", length(&x));

    let g = cubic_tensor();
    println!("G has {} stored components, {} nonzero", INDEPENDENT_COMPONENTS, g.nonzero().count());
    for [a, b, c] in [[0, 0, 8], [1, 1, 8], [1, 4, 6], [1, 1, 1]] {
        println!("  G_{a}{b}{c} = {}", real_text(g.get(a, b, c)));
    }

    let negative = NineVector::<f64>::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
    println!("length of diag(1, 1, -1) = {}", length(&negative));
}
