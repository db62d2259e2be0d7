//! Verification campaigns and the command implementations behind the CLI.
//!
//! Every command returns a [`ReportDocument`]: inputs, one outcome per
//! check, an optional result payload and, when a check fails, the first
//! counterexample with the full inputs that produced it.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use num_complex::Complex;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cubic::{length, length_cubed, length_cubed_by_det, length_cubed_expanded};
use crate::dk::momentum::{wave_equation_residual, Mass, Momentum9};
use crate::dk::phat::{
    assemble_phat, delta_family, index_multisets, matrices_agree, quartic_identity_check_with,
    symmetrized_relation_check_with, DeltaFamily, IDENTITY_TOL,
};
use crate::dk::solve::{
    check_transport, equation_residual, expand_solution, is_on_shell, residual_scale, solve,
    solve_report, transform_momentum, transform_solution, FLOAT_RESIDUAL_TOL,
};
use crate::dk::split::reduce_equation;
use crate::error::{Error, Result};
use crate::herm::{LambdaBasis, NineVector};
use crate::isometry::{
    embed_sl2, has_reduction_blocks, induced_matrix, minkowski, minkowski_pullback,
    sl2_block_tables, sl2_block_tables_complex, SpinorMap,
};
use crate::json::{
    decode_delta_family, encode_complex, encode_complex_matrix, encode_delta_family, encode_nine,
    encode_solve_report, JsonScalar,
};
use crate::matrix::{CMatrix, Matrix};
use crate::reduction::{length_cubed_4d_with, reduce, MajoranaGammas};
use crate::sampling::{self, trial_rng, DEFAULT_BOUND};
use crate::scalar::{self, Rational, Real};

/// Tolerance for float campaign comparisons, relative to `max(1, |a|, |b|)`.
pub const FLOAT_CAMPAIGN_TOL: f64 = 1e-10;

/// Absolute tolerance for float block-table agreement.
pub const BLOCK_TABLE_TOL: f64 = 1e-12;

/// Number of random momenta used by the reconstruction check of `delta`.
pub const RECONSTRUCTION_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The identities `verify` knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    TraceDuality,
    CubicInvariance,
    Sl2Blocks,
    #[value(name = "reduction-4d")]
    Reduction4d,
    Quartic,
    Symmetrized,
    #[value(name = "equivalence-4-20")]
    Equivalence4To20,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::TraceDuality,
        Identity::CubicInvariance,
        Identity::Sl2Blocks,
        Identity::Reduction4d,
        Identity::Quartic,
        Identity::Symmetrized,
        Identity::Equivalence4To20,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TraceDuality => "trace-duality",
            Identity::CubicInvariance => "cubic-invariance",
            Identity::Sl2Blocks => "sl2-blocks",
            Identity::Reduction4d => "reduction-4d",
            Identity::Quartic => "quartic",
            Identity::Symmetrized => "symmetrized",
            Identity::Equivalence4To20 => "equivalence-4-20",
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Settings shared by randomized campaigns.
#[derive(Clone, Debug, PartialEq)]
pub struct CampaignConfig {
    pub trials: usize,
    pub seed: u64,
    pub backend: Backend,
    /// Integer entries are drawn from `[-bound, bound]`.
    pub bound: i64,
}

impl CampaignConfig {
    pub fn new(trials: usize, seed: u64, backend: Backend) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        Ok(Self { trials, seed, backend, bound: DEFAULT_BOUND })
    }

    fn echo(&self) -> Value {
        json!({
            "trials": self.trials,
            "seed": self.seed,
            "backend": self.backend.name(),
            "bound": self.bound,
        })
    }
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self { trials: 100, seed: 0, backend: Backend::Exact, bound: DEFAULT_BOUND }
    }
}

/// Pass count for one named check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: usize,
    pub total: usize,
}

impl CheckOutcome {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    fn single(name: &str, ok: bool) -> Self {
        Self { name: name.to_string(), passed: usize::from(ok), total: 1 }
    }
}

/// The inputs of a failing trial.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub check: String,
    pub trial: Option<usize>,
    pub message: String,
    pub inputs: Value,
}

impl Counterexample {
    fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "trial": self.trial,
            "message": self.message,
            "inputs": self.inputs,
        })
    }
}

/// Outcome of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<CheckOutcome>,
    pub result: Option<Value>,
    pub counterexample: Option<Counterexample>,
    pub timing_ms: Option<u128>,
}

impl ReportDocument {
    fn new(command: &str, inputs: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            checks: Vec::new(),
            result: None,
            counterexample: None,
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::ok) && self.counterexample.is_none()
    }

    /// `0` when every check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, outcome: CheckOutcome, counterexample: Option<Counterexample>) {
        self.checks.push(outcome);
        if self.counterexample.is_none() {
            self.counterexample = counterexample;
        }
    }

    /// Runs a trial-indexed check unless an earlier check already failed.
    fn run(&mut self, name: &str, total: usize, trial: impl Fn(usize) -> Trial + Sync) {
        if self.counterexample.is_some() {
            return;
        }
        let (outcome, cx) = run_trials(name, total, trial);
        self.push(outcome, cx);
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("inputs".into(), self.inputs.clone());
        doc.insert(
            "checks".into(),
            Value::Array(
                self.checks
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "total": c.total, "ok": c.ok()}))
                    .collect(),
            ),
        );
        doc.insert("passed".into(), json!(self.passed()));
        doc.insert(
            "counterexample".into(),
            self.counterexample.as_ref().map_or(Value::Null, Counterexample::to_json),
        );
        if let Some(result) = &self.result {
            doc.insert("result".into(), result.clone());
        }
        if let Some(ms) = self.timing_ms {
            doc.insert("timing_ms".into(), json!(ms));
        }
        Value::Object(doc)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        if let Some(result) = self.result.as_ref().and_then(Value::as_object) {
            for (key, value) in result {
                let _ = writeln!(out, "  {key}: {}", plain(value));
            }
        }
        for c in &self.checks {
            let tag = if c.ok() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {} {}/{}", c.name, c.passed, c.total);
        }
        if let Some(cx) = &self.counterexample {
            let trial = cx.trial.map(|t| format!(" (trial {t})")).unwrap_or_default();
            let _ = writeln!(out, "counterexample in {}{trial}: {}", cx.check, cx.message);
            let _ = writeln!(out, "  inputs: {}", cx.inputs);
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Compact rendering for text output: `"3/1"` shows as `3`.
fn plain(value: &Value) -> String {
    match value {
        Value::String(s) => s.strip_suffix("/1").unwrap_or(s).to_string(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(plain).collect();
            format!("[{}]", inner.join(", "))
        }
        other => other.to_string(),
    }
}

/// Result of one trial: `Err` carries the message and inputs.
type Trial = std::result::Result<(), (String, Value)>;

fn fail(message: impl Into<String>, inputs: Value) -> Trial {
    Err((message.into(), inputs))
}

fn ensure(ok: bool, message: &str, inputs: impl FnOnce() -> Value) -> Trial {
    if ok {
        Ok(())
    } else {
        fail(message, inputs())
    }
}

/// Runs trials `0..total` in parallel and keeps the lowest-index failure.
/// Trials after it are not counted as passed.
fn run_trials(
    name: &str,
    total: usize,
    trial: impl Fn(usize) -> Trial + Sync,
) -> (CheckOutcome, Option<Counterexample>) {
    let first = (0..total)
        .into_par_iter()
        .filter_map(|t| trial(t).err().map(|e| (t, e)))
        .find_first(|_| true);
    match first {
        None => (CheckOutcome { name: name.into(), passed: total, total }, None),
        Some((t, (message, inputs))) => (
            CheckOutcome { name: name.into(), passed: t, total },
            Some(Counterexample { check: name.into(), trial: Some(t), message, inputs }),
        ),
    }
}

/// Backend-specific sampling and comparison.
pub trait CampaignScalar: JsonScalar {
    fn sample_sl3(rng: &mut impl Rng) -> SpinorMap<Self>;
    fn sample_sl2(rng: &mut impl Rng, bound: i64) -> CMatrix<Self>;
}

impl CampaignScalar for Rational {
    fn sample_sl3(rng: &mut impl Rng) -> SpinorMap<Self> {
        sampling::transvection_sl3(rng)
    }

    fn sample_sl2(rng: &mut impl Rng, bound: i64) -> CMatrix<Self> {
        sampling::exact_sl2(rng, bound)
    }
}

impl CampaignScalar for f64 {
    fn sample_sl3(rng: &mut impl Rng) -> SpinorMap<Self> {
        sampling::float_sl3(rng)
    }

    fn sample_sl2(rng: &mut impl Rng, _bound: i64) -> CMatrix<Self> {
        sampling::float_sl2(rng)
    }
}

fn same<R: Real>(a: &R, b: &R) -> bool {
    a.close_to(b, FLOAT_CAMPAIGN_TOL)
}

fn same_real_matrix<R: Real>(a: &Matrix<R>, b: &Matrix<R>) -> bool {
    a.close_to_real(b, FLOAT_CAMPAIGN_TOL)
}

/// Every entry vanishes, up to `FLOAT_RESIDUAL_TOL · scale` on float
/// backends.
fn negligible<R: Real>(values: &[Complex<R>], scale: f64) -> bool {
    values
        .iter()
        .all(|z| if R::EXACT { scalar::is_negligible(z, 0.0) } else { scalar::max_abs_f64(z) <= FLOAT_RESIDUAL_TOL * scale })
}

/// `verify <identity>` on the configured backend.
pub fn cmd_verify(identity: Identity, cfg: &CampaignConfig) -> ReportDocument {
    match cfg.backend {
        Backend::Exact => verify::<Rational>(identity, cfg),
        Backend::Float => verify::<f64>(identity, cfg),
    }
}

pub fn verify<R: CampaignScalar>(identity: Identity, cfg: &CampaignConfig) -> ReportDocument {
    let mut inputs = cfg.echo();
    inputs["identity"] = json!(identity.name());
    let mut doc = ReportDocument::new(&format!("verify {}", identity.name()), inputs);
    match identity {
        Identity::TraceDuality => verify_trace_duality::<R>(&mut doc),
        Identity::CubicInvariance => verify_cubic_invariance::<R>(&mut doc, cfg),
        Identity::Sl2Blocks => verify_sl2_blocks::<R>(&mut doc, cfg),
        Identity::Reduction4d => verify_reduction::<R>(&mut doc, cfg),
        Identity::Quartic => verify_quartic::<R>(&mut doc, cfg),
        Identity::Symmetrized => verify_symmetrized::<R>(&mut doc),
        Identity::Equivalence4To20 => verify_equivalence::<R>(&mut doc, cfg),
    }
    doc
}

fn verify_trace_duality<R: CampaignScalar>(doc: &mut ReportDocument) {
    let table = LambdaBasis::<R>::new().trace_table();
    doc.run("trace-duality", 81, |k| {
        let (a, b) = (k / 9, k % 9);
        let want = R::from_i64(if a == b { 2 } else { 0 });
        let got = table.get(a, b);
        ensure(same(&got.re, &want) && same(&got.im, &R::zero()), "Tr(λ^A λ_B) ≠ 2δ", || {
            json!({"A": a, "B": b, "trace": encode_complex(got)})
        })
    });
}

fn verify_cubic_invariance<R: CampaignScalar>(doc: &mut ReportDocument, cfg: &CampaignConfig) {
    doc.run("cubic-fidelity", cfg.trials, |t| {
        let x: NineVector<R> = sampling::int_vector(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        let g = length_cubed(&x);
        ensure(same(&g, &length_cubed_by_det(&x)) && same(&g, &length_cubed_expanded(&x)), "G(X,X,X) ≠ det X", || {
            json!({"x": encode_nine(&x)})
        })
    });
    doc.run("cubic-invariance", cfg.trials, |t| {
        let mut rng = trial_rng(cfg.seed, t as u64);
        let d = R::sample_sl3(&mut rng);
        let x: NineVector<R> = sampling::int_vector(&mut rng, cfg.bound);
        let l = induced_matrix(&d);
        let y = crate::isometry::apply(&l, &x);
        ensure(same(&length_cubed(&y), &length_cubed(&x)), "|L(D)X|³ ≠ |X|³", || {
            json!({"d": encode_complex_matrix(d.matrix()), "x": encode_nine(&x)})
        })
    });
    doc.run("homomorphism", cfg.trials, |t| {
        let mut rng = trial_rng(cfg.seed, t as u64);
        let d1 = R::sample_sl3(&mut rng);
        let d2 = R::sample_sl3(&mut rng);
        let lhs = induced_matrix(&d1.compose(&d2));
        let rhs = induced_matrix(&d1).matmul(&induced_matrix(&d2));
        ensure(same_real_matrix(&lhs, &rhs), "L(D₁D₂) ≠ L(D₁)L(D₂)", || {
            json!({"d1": encode_complex_matrix(d1.matrix()), "d2": encode_complex_matrix(d2.matrix())})
        })
    });
}

fn verify_sl2_blocks<R: CampaignScalar>(doc: &mut ReportDocument, cfg: &CampaignConfig) {
    let abs_close = |a: &R, b: &R| (a.clone() - b.clone()).is_negligible(BLOCK_TABLE_TOL);
    doc.run("sl2-blocks", cfg.trials, |t| {
        let d = R::sample_sl2(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        let inputs = || json!({"d": encode_complex_matrix(&d)});
        let Ok(embedded) = embed_sl2(&d) else {
            return fail("sampled d is not unimodular", inputs());
        };
        let l = induced_matrix(&embedded);
        let tables = sl2_block_tables(&d);
        let (lc, mc) = sl2_block_tables_complex(&d);
        let agree = (0..4).all(|r| {
            (0..4).all(|c| {
                abs_close(l.get(r, c), tables.lorentz.get(r, c))
                    && abs_close(l.get(4 + r, 4 + c), tables.majorana.get(r, c))
            })
        });
        ensure(agree, "closed-form tables differ from L(diag(d, 1))", inputs)?;
        let real = lc.entries().chain(mc.entries()).all(|z| z.im.is_negligible(BLOCK_TABLE_TOL));
        ensure(real, "closed-form table entry has an imaginary part", inputs)?;
        ensure(has_reduction_blocks(&l, BLOCK_TABLE_TOL), "off-block entry or (8,8) ≠ 1", inputs)?;
        let pulled = minkowski_pullback(&tables.lorentz);
        ensure(pulled.close_to_real(&minkowski(), FLOAT_CAMPAIGN_TOL), "Lorentz block does not preserve g", inputs)
    });
}

fn verify_reduction<R: CampaignScalar>(doc: &mut ReportDocument, cfg: &CampaignConfig) {
    let gammas = MajoranaGammas::<R>::new();
    let violation = gammas.clifford_violation();
    let cx = violation.map(|(mu, nu)| Counterexample {
        check: "clifford".into(),
        trial: None,
        message: format!("γ^{mu}γ^{nu} + γ^{nu}γ^{mu} ≠ 2g^{mu}{nu}"),
        inputs: json!({"mu": mu, "nu": nu}),
    });
    doc.push(CheckOutcome::single("clifford", violation.is_none()), cx);
    doc.run("reduction-4d", cfg.trials, |t| {
        let x: NineVector<R> = sampling::int_vector(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        let r = reduce(&x);
        let ok = r.concat() == x && same(&length_cubed_4d_with(&gammas, &r), &length_cubed(&x));
        ensure(ok, "4-dimensional form differs from |X|³", || json!({"x": encode_nine(&x)}))
    });
}

fn verify_quartic<R: CampaignScalar>(doc: &mut ReportDocument, cfg: &CampaignConfig) {
    let deltas: DeltaFamily<R> = delta_family();
    doc.push(CheckOutcome::single("delta-entries", deltas.entries_are_units_or_zero()), None);
    doc.run("reconstruction", cfg.trials, |t| {
        let p: Momentum9<R> = sampling::int_vector(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        ensure(matrices_agree(&deltas.combine(&p), &assemble_phat(&p).0, IDENTITY_TOL), "P̂ ≠ P^A δ_A", || {
            json!({"momentum": encode_nine(&p)})
        })
    });
    doc.run("quartic", cfg.trials, |t| {
        let p: Momentum9<R> = sampling::int_vector(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        ensure(quartic_identity_check_with(&deltas, &p), "P̂⁴ ≠ det(P) P̂", || {
            json!({"momentum": encode_nine(&p)})
        })
    });
}

fn verify_symmetrized<R: CampaignScalar>(doc: &mut ReportDocument) {
    let deltas: DeltaFamily<R> = delta_family();
    let multisets: Vec<[usize; 4]> = index_multisets().collect();
    doc.run("symmetrized", multisets.len(), |k| {
        let idx = multisets[k];
        ensure(symmetrized_relation_check_with(&deltas, idx), "symmetrized product ≠ 6{G δ + …}", || {
            json!({"indices": idx})
        })
    });
}

fn verify_equivalence<R: CampaignScalar>(doc: &mut ReportDocument, cfg: &CampaignConfig) {
    doc.run("off-shell-empty", cfg.trials, |t| {
        let mut rng = trial_rng(cfg.seed, t as u64);
        let m = sampling::mass::<R>(&mut rng);
        let p = sampling::off_shell_momentum(&mut rng, &m, cfg.bound);
        ensure(solve(&p, &m).is_empty(), "nonempty kernel off the mass shell", || {
            json!({"momentum": encode_nine(&p), "mass": m.value().encode()})
        })
    });
    doc.run("equivalence-4-20", cfg.trials, |t| {
        let mut rng = trial_rng(cfg.seed, t as u64);
        let m = sampling::mass::<R>(&mut rng);
        let p = sampling::on_shell_momentum(&mut rng, &m);
        let d = R::sample_sl3(&mut rng);
        equivalence_trial(&p, &m, &d).map_err(|msg| {
            (
                msg,
                json!({
                    "momentum": encode_nine(&p),
                    "mass": m.value().encode(),
                    "d": encode_complex_matrix(d.matrix()),
                }),
            )
        })
    });
}

/// Solves at an on-shell `P`, checks both directions of the transport
/// between the linear and quadratic forms, and transports every solution
/// along `D`.
pub fn equivalence_trial<R: Real>(p: &Momentum9<R>, m: &Mass<R>, d: &SpinorMap<R>) -> std::result::Result<(), String> {
    let basis = solve(p, m);
    if basis.is_empty() {
        return Err("empty kernel on the mass shell".into());
    }
    if !is_on_shell(p, m) {
        return Err("nonempty kernel but det P ≠ M³".into());
    }
    let p2 = transform_momentum(d, p);
    for (k, psi) in basis.iter().enumerate() {
        if !check_transport(p, m, psi).passed() {
            return Err(format!("basis column {k} fails the transport check"));
        }
        let (i, beta) = (psi.i(), psi.beta());
        let Ok((i2, beta2)) = transform_solution(d, &i, &beta) else {
            return Err("singular transformation".into());
        };
        let fields: Vec<_> = i2.0.iter().chain(beta2.0.iter()).cloned().collect();
        let scale = residual_scale(&p2, m, &fields);
        let (upper, lower) = wave_equation_residual(&p2, m, &i2, &beta2);
        if !negligible(&upper.0, scale) || !negligible(&lower.0, scale) {
            return Err(format!("transformed column {k} does not solve the quadratic system"));
        }
        let lifted = expand_solution(&p2, m, &i2, &beta2);
        if !negligible(&equation_residual(&p2, m, &lifted), scale) {
            return Err(format!("transformed column {k} does not lift to the linear equation"));
        }
    }
    Ok(())
}

fn parse_values<R: Real>(values: &[String], expected: usize) -> Result<Vec<R>> {
    if values.len() != expected {
        return Err(Error::Arity { expected, got: values.len() });
    }
    values.iter().map(|v| R::parse_literal(v)).collect()
}

/// `length --x X⁰ … X⁸`.
pub fn cmd_length(values: &[String], backend: Backend) -> Result<ReportDocument> {
    match backend {
        Backend::Exact => length_report::<Rational>(values, backend),
        Backend::Float => length_report::<f64>(values, backend),
    }
}

fn length_report<R: JsonScalar>(values: &[String], backend: Backend) -> Result<ReportDocument> {
    let x = NineVector::from_slice(&parse_values::<R>(values, 9)?)?;
    let cubed = length_cubed(&x);
    let det = length_cubed_by_det(&x);
    let mut doc = ReportDocument::new("length", json!({"x": values, "backend": backend.name()}));
    doc.result = Some(json!({
        "length_cubed": cubed.encode(),
        "determinant": det.encode(),
        "length": length(&x),
    }));
    let ok = same(&cubed, &det) && same(&cubed, &length_cubed_expanded(&x));
    let finite = cubed.to_f64().is_finite() && det.to_f64().is_finite();
    let cx = (!ok).then(|| Counterexample {
        check: "determinant-cross-check".into(),
        trial: None,
        message: if finite { "G(X,X,X) ≠ det X" } else { "non-finite value (float overflow)" }.into(),
        inputs: json!({"x": encode_nine(&x)}),
    });
    doc.push(CheckOutcome::single("determinant-cross-check", ok), cx);
    Ok(doc)
}

/// Writes the δ-matrix dump to `path` and checks it.
pub fn cmd_delta(path: &Path, cfg: &CampaignConfig) -> Result<ReportDocument> {
    let family = crate::dk::phat::exact_delta_family();
    let text = delta_dump_text(family);
    std::fs::write(path, &text)?;
    let mut doc = ReportDocument::new(
        "delta",
        json!({"output": path.display().to_string(), "seed": cfg.seed}),
    );
    let shapes = family.deltas.iter().all(|d| d.rows() == 12 && d.cols() == 12);
    doc.push(CheckOutcome::single("shape", family.deltas.len() == 9 && shapes), None);
    doc.push(CheckOutcome::single("entries", family.entries_are_units_or_zero()), None);
    let reread: Value = serde_json::from_str(&std::fs::read_to_string(path)?)
        .map_err(|e| Error::Json(e.to_string()))?;
    let round_trip = decode_delta_family(&reread).is_ok_and(|f| &f == family);
    doc.push(CheckOutcome::single("round-trip", round_trip), None);
    doc.run("reconstruction", RECONSTRUCTION_TRIALS, |t| {
        let p: Momentum9<Rational> = sampling::int_vector(&mut trial_rng(cfg.seed, t as u64), cfg.bound);
        ensure(family.combine(&p) == assemble_phat(&p).0, "P̂ ≠ P^A δ_A", || json!({"momentum": encode_nine(&p)}))
    });
    doc.result = Some(json!({"path": path.display().to_string(), "matrices": 9, "bytes": text.len()}));
    Ok(doc)
}

/// The dump as text: one matrix row per line.
pub fn delta_dump_text(family: &DeltaFamily<Rational>) -> String {
    let value = encode_delta_family(family);
    let mut out = String::from("{\n");
    for a in 0..9 {
        let rows = value[format!("delta_{a}")].as_array().expect("matrix rows");
        let _ = writeln!(out, "  \"delta_{a}\": [");
        for (r, row) in rows.iter().enumerate() {
            let sep = if r + 1 < rows.len() { "," } else { "" };
            let _ = writeln!(out, "    {row}{sep}");
        }
        let _ = writeln!(out, "  ]{}", if a < 8 { "," } else { "" });
    }
    out.push_str("}\n");
    out
}

fn parse_mass<R: Real>(text: &str) -> Result<Mass<R>> {
    Mass::new(R::parse_literal(text)?)
}

/// `solve --p P⁰ … P⁸ --mass M`.
pub fn cmd_solve(momentum: &[String], mass: &str, backend: Backend) -> Result<ReportDocument> {
    match backend {
        Backend::Exact => solve_command::<Rational>(momentum, mass, backend),
        Backend::Float => solve_command::<f64>(momentum, mass, backend),
    }
}

fn solve_command<R: JsonScalar>(momentum: &[String], mass: &str, backend: Backend) -> Result<ReportDocument> {
    let p = NineVector::from_slice(&parse_values::<R>(momentum, 9)?)?;
    let m = parse_mass::<R>(mass)?;
    let report = solve_report(&p, &m);
    let mut doc = ReportDocument::new(
        "solve",
        json!({"momentum": momentum, "mass": mass, "backend": backend.name()}),
    );
    let inputs = || json!({"momentum": encode_nine(&p), "mass": m.value().encode()});
    doc.run("residual", report.basis.len(), |k| {
        ensure(check_transport(&p, &m, &report.basis[k]).linear_residual_zero, "nonzero residual", inputs)
    });
    doc.run("transport", report.basis.len(), |k| {
        ensure(check_transport(&p, &m, &report.basis[k]).passed(), "column does not transport", inputs)
    });
    let consistent = report.basis.is_empty() != report.on_shell;
    doc.push(
        CheckOutcome::single("shell-consistency", consistent),
        (!consistent).then(|| Counterexample {
            check: "shell-consistency".into(),
            trial: None,
            message: "kernel emptiness disagrees with det P = M³".into(),
            inputs: inputs(),
        }),
    );
    doc.result = Some(encode_solve_report(&report));
    Ok(doc)
}

/// `reduce --p p⁰ p¹ p² p³ --mass M`.
pub fn cmd_reduce(p: &[String], mass: &str, backend: Backend) -> Result<ReportDocument> {
    match backend {
        Backend::Exact => reduce_command::<Rational>(p, mass, backend),
        Backend::Float => reduce_command::<f64>(p, mass, backend),
    }
}

fn reduce_command<R: JsonScalar>(p: &[String], mass: &str, backend: Backend) -> Result<ReportDocument> {
    let values = parse_values::<R>(p, 4)?;
    let four: [R; 4] = std::array::from_fn(|k| values[k].clone());
    let m = parse_mass::<R>(mass)?;
    let r = reduce_equation(&four, &m);
    let mut doc = ReportDocument::new("reduce", json!({"p": p, "mass": mass, "backend": backend.name()}));
    let solvability = (!r.solutions.is_empty()) == r.on_shell
        && (r.dirac_kernel_dimension > 0) == r.on_shell
        && r.klein_gordon_solvable == r.on_shell;
    for (name, ok) in [
        ("block-diagonal", r.block_diagonal),
        ("cofactor-structure", r.cofactors_block_diagonal),
        ("dirac-system", r.dirac_system_matches),
        ("solutions-decouple", r.solutions_decouple),
        ("solvability-matches-shell", solvability),
    ] {
        let cx = (!ok).then(|| Counterexample {
            check: name.into(),
            trial: None,
            message: format!("{name} failed"),
            inputs: json!({"momentum": encode_nine(&r.momentum), "mass": r.mass.encode()}),
        });
        doc.push(CheckOutcome::single(name, ok), cx);
    }
    doc.result = Some(json!({
        "momentum": encode_nine(&r.momentum),
        "mass": r.mass.encode(),
        "minkowski_square": r.minkowski_square.encode(),
        "klein_gordon_factor": r.klein_gordon_factor.encode(),
        "on_shell": r.on_shell,
        "dirac_matrix": encode_complex_matrix(&r.dirac_matrix),
        "dirac_companion": encode_complex_matrix(&r.dirac_companion),
        "dirac_kernel_dimension": r.dirac_kernel_dimension,
        "klein_gordon_solvable": r.klein_gordon_solvable,
        "kernel_dimension": r.solutions.len(),
    }));
    Ok(doc)
}
