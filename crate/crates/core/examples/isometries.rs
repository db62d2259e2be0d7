//! The induced 9×9 map L(D) and the invariance of the cubic form.

use finsler3::isometry::{apply, induced_matrix, SpinorMap};
use finsler3::json::real_text;
use finsler3::sampling::{int_vector, transvection_sl3, trial_rng};
use finsler3::{length_cubed, NineVector, Rational};

type Q = Rational;

fn main() {
    let mut rng = trial_rng(42, 0);
    let d: SpinorMap<Q> = transvection_sl3(&mut rng);
    let l = induced_matrix(&d);
    println!("L(D) for a random product of transvections:");
    for r in 0..9 {
        let row: Vec<String> = l.row(r).iter().map(|v| format!("{:>6}", real_text(v))).collect();
        println!("  {}", row.join(" "));
    }

    for _ in 0..3 {
        let x: NineVector<Q> = int_vector(&mut rng, 9);
        let y = apply(&l, &x);
        println!(
            "|X|^3 = {:>6}   |L(D)X|^3 = {:>6}",
            real_text(&length_cubed(&x)),
            real_text(&length_cubed(&y))
        );
    }

    let e: SpinorMap<Q> = transvection_sl3(&mut rng);
    let composed = induced_matrix(&d.compose(&e)) == l.matmul(&induced_matrix(&e));
    println!("L(DE) = L(D) L(E): {composed}");
}
