//! The symplectic 3-product and its invariance under SL(3,C).

use finsler3::isometry::{transform_spinor, transvection};
use finsler3::json::complex_text;
use finsler3::scalar::cx_int;
use finsler3::{symplectic3, Rational, Spinor3};

type Q = Rational;

fn main() {
    let e = |k| Spinor3::<Q>::unit(k);
    println!("[e1, e2, e3] = {}", complex_text(&symplectic3(&e(0), &e(1), &e(2))));

    let xi = Spinor3::<Q>::new(cx_int(1, 2), cx_int(0, -1), cx_int(3, 0));
    let eta = Spinor3::new(cx_int(-2, 0), cx_int(1, 1), cx_int(0, 4));
    let lam = Spinor3::new(cx_int(5, -1), cx_int(2, 0), cx_int(1, 1));
    let before = symplectic3(&xi, &eta, &lam);
    println!("[xi, eta, lambda] = {}", complex_text(&before));

    let d = transvection(0, 2, cx_int(2, -1)).compose(&transvection(1, 0, cx_int(0, 3)));
    let moved = |s: &Spinor3<Q>| transform_spinor(&d, s);
    let after = symplectic3(&moved(&xi), &moved(&eta), &moved(&lam));
    println!("after D with det D = 1: {}", complex_text(&after));

    let dependent = xi.scale(&cx_int(2, 0)).add(&eta.scale(&cx_int(3, 0)));
    println!("[xi, eta, 2xi + 3eta] = {}", complex_text(&symplectic3(&xi, &eta, &dependent)));
}
