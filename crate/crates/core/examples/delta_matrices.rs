//! The 12×12 linearization, its δ-matrices, and the quartic identities.

use finsler3::dk::phat::{index_multisets, quartic_identity_check, symmetrized_relation_check};
use finsler3::dk::{assemble_phat, exact_delta_family};
use finsler3::json::{complex_text, real_text};
use finsler3::{length_cubed, NineVector, Rational};

fn main() {
    let deltas = exact_delta_family();
    for (a, d) in deltas.deltas.iter().enumerate() {
        let nonzero: Vec<String> = (0..12)
            .flat_map(|r| (0..12).map(move |c| (r, c)))
            .filter(|&(r, c)| !num_traits::Zero::is_zero(d.get(r, c)))
            .map(|(r, c)| format!("({r},{c})={}", complex_text(d.get(r, c))))
            .collect();
        println!("delta_{a}: {} nonzero entries", nonzero.len());
        if a == 8 {
            println!("  {}", nonzero.join(" "));
        }
    }

    let p = NineVector::<Rational>::from_i64([2, -1, 3, 0, 1, 4, -2, 1, 5]);
    let phat = assemble_phat(&p);
    println!("P^A delta_A reproduces P-hat: {}", deltas.combine(&p) == phat.0);
    println!("det P = {}", real_text(&length_cubed(&p)));
    println!("P-hat^4 = det(P) P-hat: {}", quartic_identity_check(&p));

    let holds = index_multisets().filter(|&[a, b, c, d]| symmetrized_relation_check(a, b, c, d)).count();
    println!("symmetrized relation: {holds}/495 index multisets");
}
