//! Check registry and report assembly shared by the command-line front end.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use regex::Regex;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::identities::{self, derivative_residual, DerivativePath, Identity, SpecialPoint};
use crate::numkernel::{log10_abs, pow2, PrecComplex};
use crate::polylog::li;
use crate::series::{partial_sum, tail_bound, SeriesVariant};
use crate::svpolylog::{check_distribution, d_tilde, d_tilde_direct};
use crate::symtensor::{builtin, builtin_unspecialized, check_fe, numeric_eval, tensor_invariant, Builtin, Expr};
use crate::Error;

/// `residual_log10` value reported for an exact zero.
pub const EXACT_ZERO: i64 = i64::MIN;

/// Outcome of one check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    /// The statement being checked, written out as a formula.
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub status: Status,
    /// `floor(log10 residual)`, or [`EXACT_ZERO`].
    pub residual_log10: i64,
    pub precision_bits: u32,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn error(id: &str, reference: &str, p: u32, msg: String, started: Instant) -> Self {
        CheckReport {
            id: id.to_string(),
            reference: reference.to_string(),
            status: Status::Error,
            residual_log10: 0,
            precision_bits: p,
            elapsed_ms: started.elapsed().as_millis() as u64,
            message: Some(msg),
        }
    }
}

/// `floor(log10 |x|)`, with [`EXACT_ZERO`] for zero.
pub fn residual_log10(x: &Float) -> i64 {
    if x.is_zero() {
        return EXACT_ZERO;
    }
    if !x.is_finite() {
        return i64::MAX;
    }
    log10_abs(x).floor() as i64
}

/// Decimal digits carried by `p` bits.
pub fn digits_for_bits(p: u32) -> u32 {
    (f64::from(p) * std::f64::consts::LOG10_2).floor() as u32
}

/// Tolerance exponent actually applied: the registered one, capped by what
/// `p` bits can deliver (`digits - 10`).
pub fn effective_tolerance(registered: u32, p: u32) -> u32 {
    registered.min(digits_for_bits(p).saturating_sub(10))
}

/// Report for a numeric residual checked against `10^-tolerance_exp`.
pub(crate) fn numeric_report(
    id: &str,
    reference: &str,
    p: u32,
    tolerance_exp: u32,
    outcome: crate::Result<Float>,
    started: Instant,
) -> CheckReport {
    match outcome {
        Err(e) => CheckReport::error(id, reference, p, e.to_string(), started),
        Ok(r) => {
            let tol = Float::with_val(r.prec().max(64), 10).pow(-(effective_tolerance(tolerance_exp, p) as i32));
            let ok = r.is_finite() && r.clone().abs() < tol;
            CheckReport {
                id: id.to_string(),
                reference: reference.to_string(),
                status: if ok { Status::Pass } else { Status::Fail },
                residual_log10: residual_log10(&r),
                precision_bits: p,
                elapsed_ms: started.elapsed().as_millis() as u64,
                message: None,
            }
        }
    }
}

/// Seed used by the randomized suites unless one is given.
pub const DEFAULT_SEED: u64 = 0x5eed_2718;

/// Points drawn per randomized suite.
pub const SUITE_POINTS: usize = 100;

/// Registered tolerance exponent of the relation suites.
pub const SUITE_TOLERANCE_EXP: u32 = 35;

/// Registered tolerance exponent of the derivative suite.
pub const DERIVATIVE_TOLERANCE_EXP: u32 = 20;

/// `θ` values used on every derivative path.
pub const DERIVATIVE_THETAS: [f64; 5] = [0.3, 1.0, 1.7, 2.5, 3.0];

/// `precision_bits` reported by exact symbolic checks.
pub const EXACT_PRECISION: u32 = 0;

/// What a registry entry verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Numeric identity between closed forms, series or quadrature.
    Identity,
    /// Exact tensor-criterion check (precision-independent).
    Symbolic,
    /// Relation checked over many deterministic pseudo-random points.
    Suite,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Identity => "identity",
            CheckKind::Symbolic => "symbolic",
            CheckKind::Suite => "suite",
        })
    }
}

/// Registry listing entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckInfo {
    pub id: String,
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub kind: CheckKind,
}

#[derive(Clone, Copy)]
enum FeCheck {
    /// `F` with one variable fixed at a rational.
    FFixed { fixed: &'static str, value: &'static str },
    Named(Builtin),
    /// Single term `[x]`, expected not to vanish.
    Control,
    /// Numeric evaluation of the bundled combinations at special points.
    Numeric,
}

#[derive(Clone, Copy)]
enum Suite {
    Distribution,
    Inversion,
    Conjugation,
    RealVanishing,
    TwoTermD2,
    Seam,
    DerivativeLemma,
    TailBounds,
}

#[derive(Clone)]
enum Entry {
    Identity(&'static Identity),
    Fe { id: String, reference: String, check: FeCheck },
    Suite { id: &'static str, reference: &'static str, suite: Suite },
}

const F_VALUES: [(&str, &str); 5] = [("13", "1/3"), ("25", "2/5"), ("neg2", "-2"), ("57", "5/7"), ("neg16", "-1/6")];

fn entries() -> Vec<Entry> {
    let mut out: Vec<Entry> = identities::registry().iter().map(Entry::Identity).collect();
    for (tag, value) in F_VALUES {
        out.push(Entry::Fe {
            id: format!("fe-F-y{tag}"),
            reference: format!("tensor of F(x, {value}) = H(x, {value}) + H({value}, x) vanishes for m = 4"),
            check: FeCheck::FFixed { fixed: "y", value },
        });
        out.push(Entry::Fe {
            id: format!("fe-F-swap-x{tag}"),
            reference: format!("tensor of F({value}, y) = H({value}, y) + H(y, {value}) vanishes for m = 4"),
            check: FeCheck::FFixed { fixed: "x", value },
        });
    }
    let named = [
        ("fe-G", Builtin::G, "tensor of the 21-term combination G(x) vanishes for m = 3"),
        ("fe-sub1", Builtin::Sub1, "tensor of the first 10-term component of G vanishes for m = 3"),
        ("fe-sub2", Builtin::Sub2, "tensor of the second 9-term component of G vanishes for m = 3"),
        ("fe-sub3", Builtin::Sub3, "tensor of the third 6-term component of G vanishes for m = 3"),
        ("fe-threeterm", Builtin::ThreeTerm, "tensor of [x/(1-x)] + [(1-2x)/(1-x)] + [-x/(1-2x)] - [1] vanishes for m = 3"),
    ];
    for (id, b, reference) in named {
        out.push(Entry::Fe { id: id.into(), reference: reference.into(), check: FeCheck::Named(b) });
    }
    out.push(Entry::Fe {
        id: "fe-control".into(),
        reference: "tensor of the single term [x] is nonzero for m = 3 (negative control)".into(),
        check: FeCheck::Control,
    });
    out.push(Entry::Fe {
        id: "fe-numeric".into(),
        reference: "D̃_4(F) = 0 at (ρ², ρ⁴), (ρ², ρ), (ρ², ρ⁵), (1/2, 1/2); D̃_3(G) = 0 at x = 0, -1/φ, 1/3 + i/2".into(),
        check: FeCheck::Numeric,
    });
    let suites: [(&str, &str, Suite); 8] = [
        ("dist-relations", "Σ_{ζ^N=1} D̃_m(ζx) = N^{1-m} D̃_m(x^N), N = 2, 3", Suite::Distribution),
        ("inversion", "D̃_m(1/x) = (-1)^{m-1} D̃_m(x)", Suite::Inversion),
        ("conjugation", "D̃_m(x̄) = (-1)^{m-1} D̃_m(x)", Suite::Conjugation),
        ("real-vanishing", "D̃_2(x) = D̃_4(x) = 0 for real x", Suite::RealVanishing),
        ("two-term-d2", "D_2(x) + D_2(1 - x) = 0", Suite::TwoTermD2),
        ("seam", "Li_j and D̃_m continuous across |z| = 3/4, 1, 4/3", Suite::Seam),
        ("derivative-lemma", "dD̃_m(f(θ))/dθ along the seven circle paths, m = 3, 4", Suite::DerivativeLemma),
        ("tail-bounds", "|Σ_{n≥N} a_n| ≤ certified tail bound for every Apéry-like series", Suite::TailBounds),
    ];
    for (id, reference, suite) in suites {
        out.push(Entry::Suite { id, reference, suite });
    }
    out
}

impl Entry {
    fn id(&self) -> &str {
        match self {
            Entry::Identity(i) => i.id,
            Entry::Fe { id, .. } => id,
            Entry::Suite { id, .. } => id,
        }
    }

    fn info(&self) -> CheckInfo {
        let (reference, kind) = match self {
            Entry::Identity(i) => (i.statement.to_string(), CheckKind::Identity),
            Entry::Fe { reference, check: FeCheck::Numeric, .. } => (reference.clone(), CheckKind::Identity),
            Entry::Fe { reference, .. } => (reference.clone(), CheckKind::Symbolic),
            Entry::Suite { reference, .. } => (reference.to_string(), CheckKind::Suite),
        };
        CheckInfo { id: self.id().to_string(), reference, kind }
    }

    fn run(&self, p: u32, seed: u64) -> CheckReport {
        let started = Instant::now();
        let info = self.info();
        if let Err(e) = crate::numkernel::check_precision(p) {
            return CheckReport::error(&info.id, &info.reference, p, e.to_string(), started);
        }
        match self {
            Entry::Identity(i) => numeric_report(i.id, i.statement, p, i.tolerance_exp, i.residual(p), started),
            Entry::Fe { check: FeCheck::Numeric, .. } => {
                numeric_report(&info.id, &info.reference, p, 40, fe_numeric(p), started)
            }
            Entry::Fe { check, .. } => symbolic_report(&info, *check, started),
            Entry::Suite { suite: Suite::TailBounds, .. } => tail_report(&info, p, started),
            Entry::Suite { suite, .. } => {
                let tol = match suite {
                    Suite::DerivativeLemma => DERIVATIVE_TOLERANCE_EXP,
                    _ => SUITE_TOLERANCE_EXP,
                };
                numeric_report(&info.id, &info.reference, p, tol, run_suite_residual(*suite, p, seed), started)
            }
        }
    }
}

fn symbolic_report(info: &CheckInfo, check: FeCheck, started: Instant) -> CheckReport {
    let outcome = (|| -> crate::Result<(bool, crate::symtensor::TensorElement)> {
        match check {
            FeCheck::FFixed { fixed, value } => {
                let subst = [(fixed.to_string(), Expr::parse(value)?)].into();
                let free = if fixed == "y" { "x" } else { "y" };
                let t = tensor_invariant(&builtin(Builtin::F, &subst)?, 4, free)?;
                Ok((t.is_zero(), t))
            }
            FeCheck::Named(b) => {
                let sum = builtin(b, &BTreeMap::new())?;
                let t = tensor_invariant(&sum, b.order(), "x")?;
                Ok((t.is_zero(), t))
            }
            FeCheck::Control => {
                let o = check_fe(crate::symtensor::builtins::CONTROL_SOURCE)?;
                Ok((!o.is_zero(), o.tensor))
            }
            FeCheck::Numeric => unreachable!("numeric bridge is reported numerically"),
        }
    })();
    match outcome {
        Err(e) => CheckReport::error(&info.id, &info.reference, EXACT_PRECISION, e.to_string(), started),
        Ok((ok, t)) => {
            // residual: largest coefficient of the tensor, exact zero when it vanishes
            let residual_log10 = t
                .terms
                .values()
                .map(|c| {
                    let f = Float::with_val(64, c);
                    residual_log10(&f)
                })
                .max()
                .unwrap_or(EXACT_ZERO);
            let message = match (&check, ok) {
                (FeCheck::Control, true) => Some(format!("{} nonzero tensor components, as expected", t.len())),
                (_, false) => Some(format!("{} nonzero tensor components", t.len())),
                _ => None,
            };
            CheckReport {
                id: info.id.clone(),
                reference: info.reference.clone(),
                status: if ok { Status::Pass } else { Status::Fail },
                residual_log10,
                precision_bits: EXACT_PRECISION,
                elapsed_ms: started.elapsed().as_millis() as u64,
                message,
            }
        }
    }
}

/// Largest `|Σ nᵢ D̃_m(xᵢ)|` over the bundled combinations at special points.
fn fe_numeric(p: u32) -> crate::Result<Float> {
    let w = p + 16;
    let sp = SpecialPoint::new(w);
    let f = builtin_unspecialized(Builtin::F);
    let g = builtin_unspecialized(Builtin::G);
    let half = PrecComplex::from_f64(w, 0.5, 0.0);
    let mut worst = Float::new(w);
    let pairs = [
        (sp.rho_pow(2), sp.rho_pow(4)),
        (sp.rho_pow(2), sp.rho_pow(1)),
        (sp.rho_pow(2), sp.rho_pow(5)),
        (half.clone(), half),
    ];
    for (x, y) in pairs {
        let a = [("x".to_string(), x), ("y".to_string(), y)].into();
        worst.max_mut(&numeric_eval(&f, 4, &a, w)?.abs());
    }
    let inv_phi = Float::with_val(w, sp.phi.recip_ref());
    let xs = [
        PrecComplex::zero(w),
        PrecComplex::from_real(&Float::with_val(w, -inv_phi)),
        PrecComplex::new(Float::with_val(w, 1) / 3u32, Float::with_val(w, 0.5)),
    ];
    for x in xs {
        let a = [("x".to_string(), x)].into();
        worst.max_mut(&numeric_eval(&g, 3, &a, w)?.abs());
    }
    Ok(Float::with_val(p, worst))
}

/// Pseudo-random complex point with modulus in `[e^-2.5, e^1.2]`, away from 1.
fn random_point(rng: &mut ChaCha8Rng, p: u32) -> PrecComplex {
    loop {
        let r: f64 = rng.random_range(-2.5f64..1.2).exp();
        let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let z = PrecComplex::from_f64(p, r * t.cos(), r * t.sin());
        if (r * t.cos() - 1.0).hypot(r * t.sin()) > 0.05 {
            return z;
        }
    }
}

fn sign(m: u32) -> i32 {
    if m % 2 == 0 {
        -1
    } else {
        1
    }
}

fn suite_rng(seed: u64, suite: Suite) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (suite as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Worst residual of a relation suite.
fn run_suite_residual(suite: Suite, p: u32, seed: u64) -> crate::Result<Float> {
    let w = p + 16;
    let mut rng = suite_rng(seed, suite);
    let mut worst = Float::new(w);
    let mut track = |v: Float| worst.max_mut(&v.abs());
    match suite {
        Suite::Distribution => {
            for i in 0..SUITE_POINTS {
                let x = random_point(&mut rng, w);
                let m = 2 + (i % 3) as u32;
                for n in [2, 3] {
                    track(check_distribution(m, n, &x, w)?);
                }
            }
        }
        Suite::Inversion => {
            for i in 0..SUITE_POINTS {
                let x = random_point(&mut rng, w);
                let m = 2 + (i % 3) as u32;
                let a = d_tilde_direct(m, &x.recip(), w)?;
                let b = d_tilde_direct(m, &x, w)? * sign(m);
                track(a - b);
            }
        }
        Suite::Conjugation => {
            for i in 0..SUITE_POINTS {
                let x = random_point(&mut rng, w);
                let m = 2 + (i % 3) as u32;
                let a = d_tilde(m, &x.conj(), w)?;
                let b = d_tilde(m, &x, w)? * sign(m);
                track(a - b);
            }
        }
        Suite::RealVanishing => {
            for i in 0..SUITE_POINTS {
                let mut x: f64 = rng.random_range(-6.0..6.0);
                if (x - 1.0).abs() < 1e-3 || x.abs() < 1e-3 {
                    x += 0.01;
                }
                let m = if i % 2 == 0 { 2 } else { 4 };
                track(d_tilde(m, &PrecComplex::from_f64(w, x, 0.0), w)?);
            }
        }
        Suite::TwoTermD2 => {
            for _ in 0..SUITE_POINTS {
                let x = random_point(&mut rng, w);
                // D̃_2 is the Bloch-Wigner D_2 extended to all of ℂ by inversion
                track(d_tilde(2, &x, w)? + d_tilde(2, &x.one_minus(), w)?);
            }
        }
        Suite::Seam => seam_residual(&mut rng, w, &mut track)?,
        Suite::DerivativeLemma => {
            for path in DerivativePath::ALL {
                for m in [3, 4] {
                    for t in DERIVATIVE_THETAS {
                        track(derivative_residual(path, m, &Float::with_val(w, t), w)?);
                    }
                }
            }
        }
        Suite::TailBounds => unreachable!("reported separately"),
    }
    Ok(Float::with_val(p, worst))
}

/// Central differences in `log z` across the algorithm switches of `Li_j`
/// (`|z| = 3/4, 4/3`) and disk/inversion agreement of `D̃_m` on `|z| = 1`.
fn seam_residual(rng: &mut ChaCha8Rng, w: u32, track: &mut impl FnMut(Float)) -> crate::Result<()> {
    // d/d(log z) Li_j = Li_{j-1}; symmetric steps leave an O(δ³) error
    let delta = pow2(w, -(w as i32) / 3 - 4);
    for i in 0..SUITE_POINTS {
        let radius = [0.75, 4.0 / 3.0, 1.0][i % 3];
        let t = rng.random_range(0.3..std::f64::consts::TAU - 0.3);
        let theta = Float::with_val(w, t);
        if i % 3 == 2 {
            let x = PrecComplex::exp_i(&theta);
            let m = 2 + (i / 3 % 3) as u32;
            let disk = d_tilde_direct(m, &x, w)?;
            let inverted = d_tilde_direct(m, &x.recip(), w)? * sign(m);
            track(disk - inverted);
            continue;
        }
        let r = Float::with_val(w, radius);
        let up = PrecComplex::polar(&Float::with_val(w, &r * Float::with_val(w, delta.exp_ref())), &theta);
        let down = PrecComplex::polar(&Float::with_val(w, &r / Float::with_val(w, delta.exp_ref())), &theta);
        let mid = PrecComplex::polar(&r, &theta);
        let step = Float::with_val(w, &delta * 2u32);
        let j = 2 + (i / 3 % 3) as u32;
        let diff = &li(j, &up, w)? - &li(j, &down, w)?;
        let predicted = li(j - 1, &mid, w)?.scale(&step);
        let err = &diff - &predicted;
        // relative to the step
        let scaled = err.abs() / &step;
        track(scaled);
    }
    Ok(())
}

fn tail_report(info: &CheckInfo, p: u32, started: Instant) -> CheckReport {
    // the true tail is approximated by 300 further terms (contributing < 4^-300)
    let mut excess = Float::new(p);
    let mut cases = 0;
    for variant in SeriesVariant::ALL {
        for n in [1u64, 2, 5, 10, 20, 40, 80] {
            let head = partial_sum(variant, n, p + 32);
            let long = partial_sum(variant, n + 300, p + 32);
            let actual = Float::with_val(p + 32, long - head).abs();
            let bound = tail_bound(variant, n, p + 32);
            if actual > bound {
                excess.max_mut(&Float::with_val(p, actual - bound));
            }
            cases += 1;
        }
    }
    let ok = excess.is_zero();
    CheckReport {
        id: info.id.clone(),
        reference: info.reference.clone(),
        status: if ok { Status::Pass } else { Status::Fail },
        residual_log10: residual_log10(&excess),
        precision_bits: p,
        elapsed_ms: started.elapsed().as_millis() as u64,
        message: (!ok).then(|| format!("a tail exceeded its bound in {cases} cases checked")),
    }
}

/// Every registered check, sorted by id.
pub fn list_checks() -> Vec<CheckInfo> {
    let mut v: Vec<CheckInfo> = entries().iter().map(Entry::info).collect();
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

/// Run one check with the default seed. Unknown ids give an ERROR report.
pub fn run_check(id: &str, p: u32) -> CheckReport {
    run_check_seeded(id, p, DEFAULT_SEED)
}

/// Run one check; `seed` drives the randomized suites.
pub fn run_check_seeded(id: &str, p: u32, seed: u64) -> CheckReport {
    match entries().into_iter().find(|e| e.id() == id) {
        Some(e) => e.run(p, seed),
        None => CheckReport::error(id, "", p, Error::UnknownId(id.to_string()).to_string(), Instant::now()),
    }
}

/// Compile a shell-style glob (`*`, `?`) into an anchored regex.
pub fn glob_regex(pattern: &str) -> Regex {
    let mut re = String::from("^");
    for c in pattern.chars() {
        match c {
            '*' => re.push_str(".*"),
            '?' => re.push('.'),
            c => re.push_str(&regex::escape(&c.to_string())),
        }
    }
    re.push('$');
    Regex::new(&re).expect("escaped glob is a valid regex")
}

/// Ids matching a glob, sorted.
pub fn select(pattern: &str) -> Vec<String> {
    let re = glob_regex(pattern);
    list_checks().into_iter().map(|c| c.id).filter(|id| re.is_match(id)).collect()
}

/// Run every check matching `pattern`, ordered by id.
pub fn run_suite(pattern: &str, p: u32, parallel: bool) -> Vec<CheckReport> {
    run_suite_seeded(pattern, p, parallel, DEFAULT_SEED)
}

/// [`run_suite`] with an explicit seed for the randomized suites.
pub fn run_suite_seeded(pattern: &str, p: u32, parallel: bool, seed: u64) -> Vec<CheckReport> {
    let re = glob_regex(pattern);
    let mut chosen: Vec<Entry> = entries().into_iter().filter(|e| re.is_match(e.id())).collect();
    chosen.sort_by(|a, b| a.id().cmp(b.id()));
    if parallel {
        chosen.par_iter().map(|e| e.run(p, seed)).collect()
    } else {
        chosen.iter().map(|e| e.run(p, seed)).collect()
    }
}
