//! Scalar backends.
//!
//! Every complex quantity in the crate is a [`Complex<R>`] over a real field
//! `R: Real`. Two backends are provided:
//!
//! - [`Rational`] (exact): complex values are Gaussian rationals, arithmetic is
//!   closed and exact, and zero tests are exact.
//! - `f64` (float): complex values are ordinary double-precision pairs and
//!   comparisons go through an explicit tolerance.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Exact Gaussian rational `a + bi` with `a, b` rational.
pub type ExactComplex = Complex<Rational>;

/// Double-precision complex number.
pub type FloatComplex = Complex<f64>;

/// A real field that backs a complex scalar type.
pub trait Real:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// `true` when arithmetic is exact and zero tests ignore tolerances.
    const EXACT: bool;

    fn from_i64(value: i64) -> Self;

    /// `numer / denom`; `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact backends test `self == 0`; float backends test `|self| <= tol`.
    fn is_negligible(&self, tol: f64) -> bool;

    /// Parses a decimal (`-1.25`), integer, or `p/q` literal.
    fn parse_literal(text: &str) -> Result<Self>;

    /// Exact conversion from `f64`; fails for non-finite input.
    fn from_f64(value: f64) -> Option<Self>;

    /// Conversion from an exact rational (rounded on float backends).
    fn from_rational(value: &Rational) -> Self;

    /// Kernel (right null space) basis of a complex matrix, as columns.
    fn kernel(matrix: &crate::matrix::Matrix<Complex<Self>>) -> Vec<Vec<Complex<Self>>>;

    fn abs_value(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Closeness with a scale-aware tolerance: `|a - b| <= tol * max(1, |a|, |b|)`.
    fn close_to(&self, other: &Self, tol: f64) -> bool {
        if Self::EXACT {
            return self == other;
        }
        let a = self.to_f64();
        let b = other.to_f64();
        (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
    }
}

impl Real for Rational {
    const EXACT: bool = true;

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn from_f64(value: f64) -> Option<Self> {
        Rational::from_float(value)
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn kernel(matrix: &crate::matrix::Matrix<Complex<Self>>) -> Vec<Vec<Complex<Self>>> {
        crate::matrix::exact_kernel(matrix)
    }

    fn abs_value(&self) -> Self {
        self.abs()
    }
}

impl Real for f64 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn parse_literal(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p = f64::from_str(p.trim()).map_err(|_| Error::Parse(text.to_string()))?;
            let q = f64::from_str(q.trim()).map_err(|_| Error::Parse(text.to_string()))?;
            if q == 0.0 {
                return Err(Error::Parse(text.to_string()));
            }
            return Ok(p / q);
        }
        let v = f64::from_str(text).map_err(|_| Error::Parse(text.to_string()))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Parse(text.to_string()))
        }
    }

    fn from_f64(value: f64) -> Option<Self> {
        value.is_finite().then_some(value)
    }

    fn from_rational(value: &Rational) -> Self {
        ToPrimitive::to_f64(value).unwrap_or(f64::NAN)
    }

    fn kernel(matrix: &crate::matrix::Matrix<Complex<Self>>) -> Vec<Vec<Complex<Self>>> {
        crate::matrix::float_kernel(matrix, crate::matrix::FLOAT_KERNEL_THRESHOLD)
    }
}

/// Parses `p/q`, an integer, or a finite decimal literal (with optional
/// exponent) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], i64::from_str(&t[pos + 1..]).map_err(|_| bad())?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(&all_digits).map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 4096 {
        return Err(bad());
    }
    let ten = BigInt::from(10u8);
    let mut value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Canonical `p/q` rendering (denominator always present and positive).
pub fn rational_to_string(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn cx<R: Real>(re: R, im: R) -> Complex<R> {
    Complex::new(re, im)
}

pub fn cx_int<R: Real>(re: i64, im: i64) -> Complex<R> {
    Complex::new(R::from_i64(re), R::from_i64(im))
}

pub fn real<R: Real>(value: R) -> Complex<R> {
    Complex::new(value, R::zero())
}

pub fn imag_unit<R: Real>() -> Complex<R> {
    Complex::new(R::zero(), R::one())
}

pub fn is_negligible<R: Real>(z: &Complex<R>, tol: f64) -> bool {
    z.re.is_negligible(tol) && z.im.is_negligible(tol)
}

/// Component-wise scale-aware closeness, exact equality on exact backends.
pub fn close<R: Real>(a: &Complex<R>, b: &Complex<R>, tol: f64) -> bool {
    a.re.close_to(&b.re, tol) && a.im.close_to(&b.im, tol)
}

/// `max(|re|, |im|)` as a double.
pub fn max_abs_f64<R: Real>(z: &Complex<R>) -> f64 {
    z.re.to_f64().abs().max(z.im.to_f64().abs())
}

/// Multiplicative inverse, `None` for zero.
pub fn inverse<R: Real>(z: &Complex<R>) -> Option<Complex<R>> {
    let norm = z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone();
    if norm.is_zero() {
        return None;
    }
    Some(Complex::new(z.re.clone() / norm.clone(), -z.im.clone() / norm))
}

/// Exact backend to float backend; always defined.
pub fn exact_to_float(z: &ExactComplex) -> FloatComplex {
    Complex::new(Real::to_f64(&z.re), Real::to_f64(&z.im))
}

/// Float backend to exact backend; defined only for finite components (every
/// finite double is an exactly representable dyadic rational).
pub fn float_to_exact(z: &FloatComplex) -> Option<ExactComplex> {
    Some(Complex::new(
        Rational::from_float(z.re)?,
        Rational::from_float(z.im)?,
    ))
}

pub fn one<R: Real>() -> Complex<R> {
    Complex::one()
}

pub fn zero<R: Real>() -> Complex<R> {
    Complex::zero()
}
