//! Solving (P^A δ_A − M)Ψ = 0 on and off the mass shell.

use finsler3::dk::solve::{check_transport, solve_report};
use finsler3::dk::Mass;
use finsler3::json::{complex_text, real_text};
use finsler3::{length_cubed, NineVector, Rational, Real};

type Q = Rational;

fn describe(p: NineVector<Q>, m: i64) {
    let mass = Mass::new(Q::from_i64(m)).expect("positive mass");
    let report = solve_report(&p, &mass);
    println!(
        "P = {:?}, M = {m}: det P = {}, on shell {}, kernel dimension {}",
        p.components().iter().map(real_text).collect::<Vec<_>>(),
        real_text(&length_cubed(&p)),
        report.on_shell,
        report.kernel_dimension
    );
    for psi in &report.basis {
        let column: Vec<String> = psi.0.iter().map(complex_text).collect();
        println!("  [{}] transport ok: {}", column.join(", "), check_transport(&p, &mass, psi).passed());
    }
}

fn main() {
    describe(NineVector::from_i64([1, 0, 0, 0, 0, 0, 0, 0, 1]), 1);
    describe(NineVector::from_i64([5, 0, 0, 4, 0, 0, 0, 0, 3]), 3);
    describe(NineVector::from_i64([2, 0, 0, 0, 0, 0, 0, 0, 1]), 1);
}
