//! The embedded SL(2,C): Lorentz and Majorana blocks, and the 4 + 4 + 1 split.

use finsler3::isometry::{embed_sl2, has_reduction_blocks, induced_matrix, minkowski, minkowski_pullback, sl2_block_tables};
use finsler3::json::real_text;
use finsler3::reduction::{length_cubed_4d, reduce, MajoranaGammas};
use finsler3::scalar::cx_int;
use finsler3::{length_cubed, CMatrix, Matrix, NineVector, Rational};

type Q = Rational;

fn print_block(name: &str, m: &Matrix<Q>) {
    println!("{name}:");
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|v| format!("{:>6}", real_text(v))).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() {
    // a = 1 + i, b = 1, c = 0, d = 1/(1 + i)
    let a = cx_int::<Q>(1, 1);
    let d: CMatrix<Q> = Matrix::from_rows(vec![
        vec![a.clone(), cx_int(1, 0)],
        vec![cx_int(0, 0), cx_int::<Q>(1, 0) / a],
    ]);
    let tables = sl2_block_tables(&d);
    print_block("Lorentz block", &tables.lorentz);
    print_block("Majorana block", &tables.majorana);

    let l = induced_matrix(&embed_sl2(&d).expect("unit determinant"));
    println!("4 + 4 + 1 block structure: {}", has_reduction_blocks(&l, 0.0));
    println!("tables equal the induced blocks: {}", l.block(0, 0, 4, 4) == tables.lorentz && l.block(4, 4, 4, 4) == tables.majorana);
    println!("Lorentz block preserves g: {}", minkowski_pullback(&tables.lorentz) == minkowski());

    println!("Clifford relations: {}", MajoranaGammas::<Q>::new().clifford_violation().is_none());
    let x = NineVector::<Q>::from_i64([3, -1, 2, 1, 4, 0, -2, 5, 7]);
    let r = reduce(&x);
    println!(
        "4D form {} vs cubic form {}",
        real_text(&length_cubed_4d(&r)),
        real_text(&length_cubed(&x))
    );
}
