//! With P⁴..P⁷ = 0 and P⁸ = M the equation splits into a Dirac pair and a
//! scalar Klein-Gordon relation.

use finsler3::dk::{reduce_equation, Mass};
use finsler3::json::real_text;
use finsler3::{Rational, Real};

type Q = Rational;

fn main() {
    let cases = [
        ([1, 0, 0, 0], (1, 1)),
        ([5, 0, 0, 3], (4, 1)),
        ([5, 0, 0, 4], (3, 1)),
        ([2, 0, 0, 0], (1, 1)),
    ];
    for (p, (mn, md)) in cases {
        let p = p.map(Q::from_i64);
        let mass = Mass::new(Q::from_ratio(mn, md)).expect("positive mass");
        let r = reduce_equation(&p, &mass);
        println!(
            "p = ({}), M = {}: p^2 = {}, on shell {}, Dirac kernel {}, KG solvable {}, solutions {}, consistent {}",
            p.iter().map(real_text).collect::<Vec<_>>().join(", "),
            real_text(mass.value()),
            real_text(&r.minkowski_square),
            r.on_shell,
            r.dirac_kernel_dimension,
            r.klein_gordon_solvable,
            r.solutions.len(),
            r.consistent()
        );
    }
}
