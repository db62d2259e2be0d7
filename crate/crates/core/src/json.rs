//! Shared JSON encoding.
//!
//! Exact rationals are strings `"p/q"`, floats are JSON numbers, complex
//! numbers are two-element arrays `[re, im]`, and matrices are row-major
//! arrays of arrays.

use num_complex::Complex;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::dk::phat::DeltaFamily;
use crate::dk::solve::{SolveReport, TwelveColumn};
use crate::error::{Error, Result};
use crate::herm::NineVector;
use crate::isometry::Sl2Blocks;
use crate::matrix::Matrix;
use crate::reduction::MajoranaGammas;
use crate::scalar::{parse_rational, rational_to_string, Rational, Real};
use crate::spinor::Spinor3;

/// Scalars with a JSON form.
pub trait JsonScalar: Real {
    fn encode(&self) -> Value;
    fn decode(value: &Value) -> Result<Self>;
}

impl JsonScalar for Rational {
    fn encode(&self) -> Value {
        Value::String(rational_to_string(self))
    }

    fn decode(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() => Ok(Rational::from_i64(n.as_i64().unwrap_or_default())),
            other => Err(Error::Json(format!("expected a rational, got {other}"))),
        }
    }
}

impl JsonScalar for f64 {
    fn encode(&self) -> Value {
        json!(self)
    }

    fn decode(value: &Value) -> Result<Self> {
        match value {
            Value::Number(n) => n.as_f64().ok_or_else(|| Error::Json(n.to_string())),
            Value::String(s) => f64::parse_literal(s),
            other => Err(Error::Json(format!("expected a number, got {other}"))),
        }
    }
}

pub fn encode_complex<R: JsonScalar>(z: &Complex<R>) -> Value {
    json!([z.re.encode(), z.im.encode()])
}

pub fn decode_complex<R: JsonScalar>(value: &Value) -> Result<Complex<R>> {
    match value.as_array().map(Vec::as_slice) {
        Some([re, im]) => Ok(Complex::new(R::decode(re)?, R::decode(im)?)),
        _ => Err(Error::Json(format!("expected [re, im], got {value}"))),
    }
}

pub fn encode_matrix<T: crate::matrix::Ring>(m: &Matrix<T>, entry: impl Fn(&T) -> Value) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(&entry).collect()))
            .collect(),
    )
}

pub fn encode_complex_matrix<R: JsonScalar>(m: &Matrix<Complex<R>>) -> Value {
    encode_matrix(m, encode_complex)
}

pub fn encode_real_matrix<R: JsonScalar>(m: &Matrix<R>) -> Value {
    encode_matrix(m, JsonScalar::encode)
}

pub fn decode_complex_matrix<R: JsonScalar>(value: &Value) -> Result<Matrix<Complex<R>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Json("expected an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Json("expected a row array".into()))?
                .iter()
                .map(decode_complex)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Json("ragged matrix".into()));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn encode_nine<R: JsonScalar>(x: &NineVector<R>) -> Value {
    Value::Array(x.components().iter().map(JsonScalar::encode).collect())
}

pub fn decode_nine<R: JsonScalar>(value: &Value) -> Result<NineVector<R>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Json("expected 9 components".into()))?
        .iter()
        .map(R::decode)
        .collect::<Result<Vec<_>>>()?;
    NineVector::from_slice(&items)
}

pub fn encode_spinor<R: JsonScalar>(s: &Spinor3<R>) -> Value {
    Value::Array(s.components().iter().map(encode_complex).collect())
}

pub fn encode_column<R: JsonScalar>(psi: &TwelveColumn<R>) -> Value {
    Value::Array(psi.0.iter().map(encode_complex).collect())
}

pub fn decode_column<R: JsonScalar>(value: &Value) -> Result<TwelveColumn<R>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Json("expected a 12-component column".into()))?
        .iter()
        .map(decode_complex)
        .collect::<Result<Vec<_>>>()?;
    if items.len() != 12 {
        return Err(Error::Arity { expected: 12, got: items.len() });
    }
    Ok(TwelveColumn::from_slice(&items))
}

/// `{"delta_0": [[[re, im], …], …], …}` with integer entries.
pub fn encode_delta_family(family: &DeltaFamily<Rational>) -> Value {
    let int = |q: &Rational| -> Value {
        if q.is_integer() {
            json!(q.to_integer().to_i64().unwrap_or_default())
        } else {
            Value::String(rational_to_string(q))
        }
    };
    let mut map = Map::new();
    for (a, d) in family.deltas.iter().enumerate() {
        map.insert(
            format!("delta_{a}"),
            encode_matrix(d, |z| json!([int(&z.re), int(&z.im)])),
        );
    }
    Value::Object(map)
}

pub fn decode_delta_family(value: &Value) -> Result<DeltaFamily<Rational>> {
    let mut deltas = Vec::with_capacity(9);
    for a in 0..9 {
        let key = format!("delta_{a}");
        let m = value
            .get(&key)
            .ok_or_else(|| Error::Json(format!("missing {key}")))?;
        let m = decode_complex_matrix::<Rational>(m)?;
        if m.rows() != 12 || m.cols() != 12 {
            return Err(Error::Json(format!("{key} is not 12x12")));
        }
        deltas.push(m);
    }
    let deltas: [_; 9] = deltas
        .try_into()
        .map_err(|_| Error::Json("expected nine matrices".into()))?;
    Ok(DeltaFamily { deltas })
}

/// Solver output with fields `momentum`, `mass`, `on_shell`,
/// `kernel_dimension`, `basis`, `residual_max_abs`.
pub fn encode_solve_report<R: JsonScalar>(report: &SolveReport<R>) -> Value {
    json!({
        "momentum": encode_nine(&report.momentum),
        "mass": report.mass.encode(),
        "on_shell": report.on_shell,
        "kernel_dimension": report.kernel_dimension,
        "basis": report.basis.iter().map(encode_column).collect::<Vec<_>>(),
        "residual_max_abs": report.residual_max_abs,
    })
}

pub fn decode_solve_report<R: JsonScalar>(value: &Value) -> Result<SolveReport<R>> {
    let field = |k: &str| value.get(k).ok_or_else(|| Error::Json(format!("missing {k}")));
    let basis = field("basis")?
        .as_array()
        .ok_or_else(|| Error::Json("basis must be an array".into()))?
        .iter()
        .map(decode_column)
        .collect::<Result<Vec<_>>>()?;
    Ok(SolveReport {
        momentum: decode_nine(field("momentum")?)?,
        mass: R::decode(field("mass")?)?,
        on_shell: field("on_shell")?
            .as_bool()
            .ok_or_else(|| Error::Json("on_shell must be a boolean".into()))?,
        kernel_dimension: field("kernel_dimension")?
            .as_u64()
            .ok_or_else(|| Error::Json("kernel_dimension must be an integer".into()))? as usize,
        basis,
        residual_max_abs: field("residual_max_abs")?
            .as_f64()
            .ok_or_else(|| Error::Json("residual_max_abs must be a number".into()))?,
    })
}

/// `{"lorentz": 4×4, "majorana": 4×4}`.
pub fn encode_sl2_blocks<R: JsonScalar>(blocks: &Sl2Blocks<R>) -> Value {
    json!({
        "lorentz": encode_real_matrix(&blocks.lorentz),
        "majorana": encode_real_matrix(&blocks.majorana),
    })
}

/// `{"gamma_0": 4×4, …, "metric": [..]}`.
pub fn encode_gammas<R: JsonScalar>(gammas: &MajoranaGammas<R>) -> Value {
    let mut map = Map::new();
    for (mu, g) in gammas.gamma.iter().enumerate() {
        map.insert(format!("gamma_{mu}"), encode_complex_matrix(g));
    }
    map.insert(
        "metric".into(),
        Value::Array(gammas.metric.iter().map(JsonScalar::encode).collect()),
    );
    Value::Object(map)
}

/// Renders `z` as `a+bi` for text output.
pub fn complex_text<R: JsonScalar>(z: &Complex<R>) -> String {
    let show = real_text::<R>;
    if z.im.is_zero() {
        show(&z.re)
    } else if z.re.is_zero() {
        format!("{}i", show(&z.im))
    } else {
        let im = show(&z.im);
        let sign = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sign}{im}i", show(&z.re))
    }
}

/// Renders a real scalar for text output, dropping a `/1` denominator.
pub fn real_text<R: JsonScalar>(v: &R) -> String {
    match v.encode() {
        Value::String(s) => s.strip_suffix("/1").map(str::to_string).unwrap_or(s),
        other => other.to_string(),
    }
}
