//! Closed forms of the log-sine families in terms of `D̃_m`, derivative
//! formulas along circle paths, and the registry of numerically checkable
//! identities.

use std::time::Instant;

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::logsine::{lsc, lshch};
use crate::numkernel::{check_precision, constant, pi, pow2, ConstantName, PrecComplex};
use crate::polylog::li;
use crate::runner::{numeric_report, CheckReport};
use crate::series::{apery_sum, SeriesVariant};
use crate::svpolylog::d_tilde;

/// The algebraic points at which the conjectured values are assembled.
#[derive(Debug, Clone)]
pub struct SpecialPoint {
    /// `e^{2πi/12}`
    pub rho: PrecComplex,
    /// `e^{2πi/24}`
    pub rho_half: PrecComplex,
    /// `|1 - ρ| = (√6 - √2)/2`
    pub r: Float,
    /// `(√5 + 1)/2`
    pub phi: Float,
}

impl SpecialPoint {
    pub fn new(p: u32) -> Self {
        let pi = pi(p);
        let rho = PrecComplex::exp_i(&(Float::with_val(p, &pi / 6u32)));
        let rho_half = PrecComplex::exp_i(&(Float::with_val(p, &pi / 12u32)));
        let r = Float::with_val(p, Float::with_val(p, 6).sqrt() - Float::with_val(p, 2).sqrt()) / 2u32;
        let phi = Float::with_val(p, Float::with_val(p, 5).sqrt() + 1u32) / 2u32;
        SpecialPoint { rho, rho_half, r, phi }
    }

    /// `ρ^k`, computed directly as `e^{2πik/12}`.
    pub fn rho_pow(&self, k: i32) -> PrecComplex {
        let p = self.r.prec();
        PrecComplex::exp_i(&(Float::with_val(p, pi(p) * k) / 6u32))
    }

    /// `r^a ρ^{k/2}`.
    pub fn r_rho_half(&self, a: i32, k: i32) -> PrecComplex {
        let p = self.r.prec();
        let z = PrecComplex::exp_i(&(Float::with_val(p, pi(p) * k) / 12u32));
        z.scale(&Float::with_val(p, (&self.r).pow(a)))
    }
}

// ---------------------------------------------------------------------------
// Small evaluation helpers
// ---------------------------------------------------------------------------

fn dt(m: u32, x: &PrecComplex, w: u32) -> Result<Float> {
    d_tilde(m, x, w)
}

fn dt_real(m: u32, x: &Float, w: u32) -> Result<Float> {
    d_tilde(m, &PrecComplex::from_real(&Float::with_val(w, x)), w)
}

fn zeta3(w: u32) -> Result<Float> {
    constant(ConstantName::Zeta3, w)
}

fn pi_zeta3(w: u32) -> Result<Float> {
    Ok(Float::with_val(w, pi(w) * zeta3(w)?))
}

fn q(w: u32, num: i64, den: u64) -> Float {
    Float::with_val(w, num) / den
}

fn check_open_angle(theta: &Float) -> Result<()> {
    let pi = pi(theta.prec().max(64));
    if *theta <= 0 || *theta >= pi {
        return Err(Error::Domain(format!("θ must lie in (0, π), got {}", theta.to_f64())));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// `Ls_4(θ) = (3/2) ζ(3) θ + (3/2) { -D̃_4(e^{iθ}) - 4 D̃_4(1 - e^{iθ}) }`, `0 < θ < π`.
pub fn ls4_closed(theta: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    check_open_angle(theta)?;
    let w = p + 32;
    let th = Float::with_val(w, theta);
    let u = PrecComplex::exp_i(&th);
    let inner = -dt(4, &u, w)? - Float::with_val(w, dt(4, &u.one_minus(), w)? * 4u32);
    let v = Float::with_val(w, zeta3(w)? * &th) * 3u32 / 2u32 + inner * 3u32 / 2u32;
    Ok(Float::with_val(p, v))
}

/// `Lsc_{3,2}(θ)` in terms of `D̃_4`, `0 < θ < π`.
pub fn lsc32_closed(theta: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    check_open_angle(theta)?;
    let w = p + 32;
    let th = Float::with_val(w, theta);
    let u = PrecComplex::exp_i(&th);
    let one = PrecComplex::one(w);
    let cayley = &u.one_minus() / &(&one + &u);
    let mut v = -Float::with_val(w, zeta3(w)? * &th) / 4u32;
    v -= dt(4, &-&u, w)? / 2u32;
    v -= dt(4, &u, w)?;
    v += dt(4, &(&one + &u), w)? * 2u32;
    v += dt(4, &cayley, w)? * 2u32;
    v -= dt(4, &(&u * &u).one_minus(), w)? / 2u32;
    Ok(Float::with_val(p, v))
}

/// Members of the hyperbolic family with closed forms in `D̃_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LshKind {
    /// `Lsh_3 = Lshch_{3,1}`
    Lsh3,
    Lshch13,
    Lshch22,
}

impl LshKind {
    pub fn indices(self) -> (u32, u32) {
        match self {
            LshKind::Lsh3 => (3, 1),
            LshKind::Lshch13 => (1, 3),
            LshKind::Lshch22 => (2, 2),
        }
    }
}

/// `log(2 sinh(x/2))` and `log(2 cosh(x/2))`.
fn log_sinh_cosh_half(x: &Float, w: u32) -> (Float, Float) {
    let h = Float::with_val(w, x / 2u32);
    let (s, c) = h.sinh_cosh(Float::new(w));
    (Float::with_val(w, s * 2u32).ln(), Float::with_val(w, c * 2u32).ln())
}

/// Closed forms of `Lsh_3`, `Lshch_{1,3}` and `Lshch_{2,2}` for `x > 0`.
pub fn lsh_closed(which: LshKind, x: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    if *x <= 0 || !x.is_finite() {
        return Err(Error::Domain(format!("closed forms need x > 0, got {}", x.to_f64())));
    }
    let w = p + 32;
    let x = Float::with_val(w, x);
    let e1 = Float::with_val(w, -&x).exp();
    let e2 = Float::with_val(w, e1.square_ref());
    let z3 = zeta3(w)?;
    let (ls, lc) = log_sinh_cosh_half(&x, w);
    let third_x = Float::with_val(w, &x / 3u32);
    let inv_1pe = Float::with_val(w, 1 + &e1).recip();
    let v = match which {
        LshKind::Lsh3 => {
            -dt_real(3, &e1, w)? - dt_real(3, &Float::with_val(w, 1 - &e1), w)? * 2u32
                - Float::with_val(w, &third_x * Float::with_val(w, ls.square_ref()))
                + &z3
        }
        LshKind::Lshch13 => {
            -dt_real(3, &Float::with_val(w, -&e1), w)? - dt_real(3, &inv_1pe, w)? * 2u32
                - Float::with_val(w, &third_x * Float::with_val(w, lc.square_ref()))
                + &z3
        }
        LshKind::Lshch22 => {
            -dt_real(3, &e2, w)? / 8u32 - dt_real(3, &Float::with_val(w, 1 - &e2), w)? / 2u32
                + dt_real(3, &Float::with_val(w, 1 - &e1), w)?
                + dt_real(3, &inv_1pe, w)?
                - Float::with_val(w, &third_x * &ls) * &lc
                - Float::with_val(w, &z3 * 3u32) / 4u32
        }
    };
    Ok(Float::with_val(p, v))
}

/// `ψ(t) = D̃_3(1 - t) - D̃_3(1 - 1/t)`.
pub fn psi(t: &PrecComplex, p: u32) -> Result<Float> {
    check_precision(p)?;
    let w = p + 32;
    let t = t.with_prec(w);
    if t.is_zero() || t == PrecComplex::one(w) {
        return Err(Error::Domain("ψ is undefined at 0 and 1".into()));
    }
    let v = dt(3, &t.one_minus(), w)? - dt(3, &t.recip().one_minus(), w)?;
    Ok(Float::with_val(p, v))
}

/// Residual of the uniform `ψ` restatement of the hyperbolic closed forms:
/// `Lshch_{j,k}(x) + (x/3) log^{j-1}(2 sinh(x/2)) log^{k-1}(2 cosh(x/2))` against
/// `ψ(e^x)`, `(ψ(e^{2x}) - 2ψ(e^x) - 2ψ(-e^x))/4`, `ψ(-e^x)` for `(3,1), (2,2), (1,3)`.
pub fn psi_form_residual(which: LshKind, x: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    if *x <= 0 {
        return Err(Error::Domain("ψ restatement needs x > 0".into()));
    }
    let w = p + 32;
    let x = Float::with_val(w, x);
    let (j, k) = which.indices();
    let (ls, lc) = log_sinh_cosh_half(&x, w);
    let lhs = lshch(j, k, &x, w)?.value
        + Float::with_val(w, &x / 3u32) * Float::with_val(w, (&ls).pow(j - 1)) * Float::with_val(w, (&lc).pow(k - 1));
    let ex = PrecComplex::from_real(&Float::with_val(w, x.exp_ref()));
    let rhs = match which {
        LshKind::Lsh3 => psi(&ex, w)?,
        LshKind::Lshch13 => psi(&-&ex, w)?,
        LshKind::Lshch22 => {
            let e2x = &ex * &ex;
            (psi(&e2x, w)? - psi(&ex, w)? * 2u32 - psi(&-&ex, w)? * 2u32) / 4u32
        }
    };
    Ok(Float::with_val(p, lhs - rhs).abs())
}

// ---------------------------------------------------------------------------
// Derivatives along circle paths
// ---------------------------------------------------------------------------

/// Paths `θ ↦ f(e^{iθ})` with explicit derivative formulas for `D̃_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivativePath {
    /// `e^{iθ}`
    Exp,
    /// `-e^{iθ}`
    NegExp,
    /// `1 - e^{iθ}`
    OneMinusExp,
    /// `1 + e^{iθ}`
    OnePlusExp,
    /// `(1 - e^{iθ})/(1 + e^{iθ})`
    Cayley,
    /// `1 - e^{2iθ}`
    OneMinusExp2,
    /// `1/(1 + e^{iθ})`, handled by the general rational-function formula
    InvOnePlusExp,
}

impl DerivativePath {
    pub const ALL: [DerivativePath; 7] = [
        DerivativePath::Exp,
        DerivativePath::NegExp,
        DerivativePath::OneMinusExp,
        DerivativePath::OnePlusExp,
        DerivativePath::Cayley,
        DerivativePath::OneMinusExp2,
        DerivativePath::InvOnePlusExp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DerivativePath::Exp => "exp",
            DerivativePath::NegExp => "neg-exp",
            DerivativePath::OneMinusExp => "one-minus-exp",
            DerivativePath::OnePlusExp => "one-plus-exp",
            DerivativePath::Cayley => "cayley",
            DerivativePath::OneMinusExp2 => "one-minus-exp2",
            DerivativePath::InvOnePlusExp => "inv-one-plus-exp",
        }
    }

    /// `f(u)` and `f'(u)` at `u = e^{iθ}`.
    fn eval(self, u: &PrecComplex) -> (PrecComplex, PrecComplex) {
        let w = u.prec();
        let one = PrecComplex::one(w);
        let m1 = -&one;
        match self {
            DerivativePath::Exp => (u.clone(), one),
            DerivativePath::NegExp => (-u, m1),
            DerivativePath::OneMinusExp => (u.one_minus(), m1),
            DerivativePath::OnePlusExp => (&one + u, one),
            DerivativePath::Cayley => {
                let d = &one + u;
                let f = &u.one_minus() / &d;
                let fp = &PrecComplex::from_f64(w, -2.0, 0.0) / &(&d * &d);
                (f, fp)
            }
            DerivativePath::OneMinusExp2 => ((u * u).one_minus(), u.scale(&Float::with_val(w, -2))),
            DerivativePath::InvOnePlusExp => {
                let d = &one + u;
                let f = d.recip();
                let fp = -(&f * &f);
                (f, fp)
            }
        }
    }

    pub fn point(self, theta: &Float) -> PrecComplex {
        self.eval(&PrecComplex::exp_i(theta)).0
    }
}

fn factorial(n: u32) -> Float {
    Float::with_val(64, Float::factorial(n))
}

/// `A = log|1 - e^{iθ}|`, `B = log|1 + e^{iθ}|`, `a_1^+ = tan(θ/2)`, `a_1^- = -cot(θ/2)`.
struct CircleLogs {
    a: Float,
    b: Float,
    a1p: Float,
    a1m: Float,
}

impl CircleLogs {
    fn new(theta: &Float, w: u32) -> Self {
        let u = PrecComplex::exp_i(theta);
        let a = u.one_minus().abs().ln();
        let b = (&PrecComplex::one(w) + &u).abs().ln();
        let half = Float::with_val(w, theta / 2u32);
        let a1p = Float::with_val(w, half.tan_ref());
        let a1m = -Float::with_val(w, half.tan_ref()).recip();
        CircleLogs { a, b, a1p, a1m }
    }
}

/// General derivative of `D̃_m(f(e^{iθ}))` for a rational `f` with real coefficients,
/// from `f` and `f'` at `e^{iθ}` and at `e^{-iθ}`.
fn lemma_derivative(m: u32, theta: &Float, path: DerivativePath, w: u32) -> Result<Float> {
    let u = PrecComplex::exp_i(theta);
    let ub = u.conj();
    let i = PrecComplex::i(w);
    let (f, fp) = path.eval(&u);
    let (fb, fpb) = path.eval(&ub);
    // g(θ) = i u f'(u) / (2 f(u)),  h(θ) = i u f'(u) / (1 - f(u))
    let g = |u: &PrecComplex, f: &PrecComplex, fp: &PrecComplex| (&(&i * u) * fp) / f.scale(&Float::with_val(w, 2));
    let h = |u: &PrecComplex, f: &PrecComplex, fp: &PrecComplex| (&(&i * u) * fp) / f.one_minus();
    let (gp, gm) = (g(&u, &f, &fp), g(&ub, &fb, &fpb));
    let (hp, hm) = (h(&u, &f, &fp), h(&ub, &fb, &fpb));
    let lf = f.abs().ln();
    let l1f = f.one_minus().abs().ln();
    let even = m % 2 == 0;
    let sign_m = if even { 1 } else { -1 };
    let mf = factorial(m);
    let m1f = factorial(m - 1);

    // (-1)^m (D̃_{m-1}(f) - [m-1 odd] log^{m-2}|f| log|1-f| / (m-1)!) (g(θ)+g(-θ))/i
    let mut lower = d_tilde(m - 1, &f, w)?;
    if (m - 1) % 2 == 1 {
        lower -= Float::with_val(w, (&lf).pow(m - 2)) * &l1f / &m1f;
    }
    let gsum_over_i = &(&gp + &gm) / &i;
    let mut total = gsum_over_i.scale(&Float::with_val(w, lower * sign_m));

    // (-log|f|)^{m-1} / (σ_m (m-1)!) (h(θ) + (-1)^m h(-θ)),  σ = 2i (even), 2 (odd)
    let neg_l = Float::with_val(w, -&lf);
    let coef = Float::with_val(w, neg_l.pow(m - 1)) / &m1f / 2u32;
    let hcomb = if even { &hp + &hm } else { &hp - &hm };
    let hterm = if even { &hcomb / &i } else { hcomb };
    total = &total + &hterm.scale(&coef);

    if !even {
        // log^{m-1}|f| / (2 m!) (h(-θ) - h(θ)) + (m-1) log^{m-2}|f| log|1-f| / m! (g(θ) - g(-θ))
        let c1 = Float::with_val(w, (&lf).pow(m - 1)) / &mf / 2u32;
        total = &total + &(&hm - &hp).scale(&c1);
        let c2 = Float::with_val(w, (&lf).pow(m - 2)) * &l1f * (m - 1) / &mf;
        total = &total + &(&gp - &gm).scale(&c2);
    }
    Ok(total.re)
}

/// Closed derivative of `D̃_m` along `path` (the corollary forms; the inverse path
/// uses the general formula).
pub fn analytic_derivative(path: DerivativePath, m: u32, theta: &Float, p: u32) -> Result<Float> {
    if !(3..=4).contains(&m) {
        return Err(Error::Unsupported(format!("derivative formulas are checked for m = 3, 4 (got {m})")));
    }
    let w = p + 32;
    let th = Float::with_val(w, theta);
    let even = m % 2 == 0;
    let sgn = if even { 1i32 } else { -1 };
    let c = CircleLogs::new(&th, w);
    let m1f = factorial(m - 1);
    let mf = factorial(m);
    let v = match path {
        DerivativePath::Exp | DerivativePath::NegExp => d_tilde(m - 1, &path.point(&th), w)? * sgn,
        DerivativePath::OneMinusExp | DerivativePath::OnePlusExp => {
            let a = if path == DerivativePath::OneMinusExp { &c.a } else { &c.b };
            let mut v = d_tilde(m - 1, &path.point(&th), w)? * sgn / 2u32;
            if even {
                v += Float::with_val(w, a.pow(m - 1)) / &m1f;
            }
            v
        }
        DerivativePath::OneMinusExp2 => {
            // chain rule on θ ↦ 2θ; log|1 - e^{2iθ}| = A + B
            let ab = Float::with_val(w, &c.a + &c.b);
            let mut v = d_tilde(m - 1, &path.point(&th), w)? * sgn;
            if even {
                v += Float::with_val(w, ab.pow(m - 1)) * 2u32 / &m1f;
            }
            v
        }
        DerivativePath::Cayley => {
            // δ_m (A-B)^{m-2}/(2 m!) ((A-B) a_1^+ + (m-1)(log 2 - B)(a_1^+ - a_1^-))
            //   - (B-A)^{m-1}/(2 (m-1)!) a_m^+,   a_m^+ = 1 (even), tan(θ/2) (odd)
            let amb = Float::with_val(w, &c.a - &c.b);
            let bma = Float::with_val(w, -&amb);
            let am = if even { Float::with_val(w, 1) } else { c.a1p.clone() };
            let mut v = -Float::with_val(w, bma.pow(m - 1)) * am / &m1f / 2u32;
            if !even {
                let log2 = constant(ConstantName::Log2, w)?;
                let inner = Float::with_val(w, &amb * &c.a1p)
                    + Float::with_val(w, log2 - &c.b) * Float::with_val(w, &c.a1p - &c.a1m) * (m - 1);
                v += Float::with_val(w, (&amb).pow(m - 2)) * inner / &mf / 2u32;
            }
            v
        }
        DerivativePath::InvOnePlusExp => lemma_derivative(m, &th, path, w)?,
    };
    Ok(Float::with_val(p, v))
}

/// Step used by [`derivative_residual`].
pub const DERIVATIVE_STEP_EXP: i32 = -40;

/// `|(D̃_m(f(θ+h)) - D̃_m(f(θ-h)))/(2h) - analytic|` with `h = 2^-40`.
pub fn derivative_residual(path: DerivativePath, m: u32, theta0: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    let w = p + 32;
    let th = Float::with_val(w, theta0);
    let pi_w = pi(w);
    if th <= 0 || th >= Float::with_val(w, &pi_w * 2u32) {
        return Err(Error::Domain(format!("θ0 must lie in (0, 2π), got {}", theta0.to_f64())));
    }
    let u = PrecComplex::exp_i(&th);
    let tiny = pow2(w, -((p / 2) as i32));
    let near_minus_one = (&PrecComplex::one(w) + &u).abs() < tiny;
    let near_one = u.one_minus().abs() < tiny;
    let singular = match path {
        DerivativePath::Exp | DerivativePath::NegExp => false,
        DerivativePath::OneMinusExp => near_one,
        DerivativePath::OnePlusExp => near_minus_one,
        DerivativePath::Cayley | DerivativePath::InvOnePlusExp | DerivativePath::OneMinusExp2 => near_one || near_minus_one,
    };
    if singular {
        return Err(Error::Domain(format!("path {} is singular at θ0 = {}", path.name(), theta0.to_f64())));
    }
    let h = pow2(w, DERIVATIVE_STEP_EXP);
    let hi = path.point(&Float::with_val(w, &th + &h));
    let lo = path.point(&Float::with_val(w, &th - &h));
    let num = (d_tilde(m, &hi, w)? - d_tilde(m, &lo, w)?) / Float::with_val(w, &h * 2u32);
    let ana = analytic_derivative(path, m, &th, w)?;
    Ok(Float::with_val(p, num - ana).abs())
}

/// The auxiliary formula
/// `-B³/12 - (1/2) Σ_{j=1}^{3} B^{3-j}/(3-j)! (Li_j(v)/(1+e^{iθ}) + Li_j(v̄)/(1+e^{-iθ}))`, `v = 1/(1+e^{iθ})`,
/// which agrees with `d/dθ D̃_4(1/(1+e^{iθ}))` only in the limit `θ → 0`.
pub fn inverse_path_limit_form(theta: &Float, p: u32) -> Result<Float> {
    let w = p + 32;
    let th = Float::with_val(w, theta);
    let u = PrecComplex::exp_i(&th);
    let one = PrecComplex::one(w);
    let dp = &one + &u;
    let dm = &one + &u.conj();
    let v = dp.recip();
    let vb = dm.recip();
    let b = dp.abs().ln();
    let mut acc = Float::with_val(w, (&b).pow(3u32)) / -12i32;
    for j in 1..=3u32 {
        let c = Float::with_val(w, (&b).pow(3 - j)) / factorial(3 - j);
        let s = &(&li(j, &v, w)? / &dp) + &(&li(j, &vb, w)? / &dm);
        acc -= Float::with_val(w, &s.re * &c) / 2u32;
    }
    Ok(Float::with_val(p, acc))
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// A named, numerically checkable equation.
pub struct Identity {
    pub id: &'static str,
    /// The statement, written out.
    pub statement: &'static str,
    /// Registered tolerance `10^-tolerance_exp`.
    pub tolerance_exp: u32,
    eval: fn(u32) -> Result<Float>,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("tolerance_exp", &self.tolerance_exp).finish()
    }
}

impl Identity {
    /// `|LHS - RHS|` at `p` bits.
    pub fn residual(&self, p: u32) -> Result<Float> {
        check_precision(p)?;
        (self.eval)(p)
    }
}

/// Evaluation context: working precision and cached points.
struct Ctx {
    w: u32,
    sp: SpecialPoint,
}

impl Ctx {
    fn new(p: u32) -> Self {
        let w = p + 32;
        Ctx { w, sp: SpecialPoint::new(w) }
    }
    fn d4_rho(&self, k: i32) -> Result<Float> {
        dt(4, &self.sp.rho_pow(k), self.w)
    }
    fn d4_r(&self, a: i32, k: i32) -> Result<Float> {
        dt(4, &self.sp.r_rho_half(a, k), self.w)
    }
    fn angle(&self, num: u32, den: u32) -> Float {
        Float::with_val(self.w, pi(self.w) * num) / den
    }
    fn ls4(&self, num: u32, den: u32) -> Result<Float> {
        Ok(lsc(4, 1, &self.angle(num, den), self.w)?.value)
    }
    fn lsc(&self, j: u32, k: u32, num: u32, den: u32) -> Result<Float> {
        Ok(lsc(j, k, &self.angle(num, den), self.w)?.value)
    }
    fn log_phi(&self) -> Float {
        Float::with_val(self.w, self.sp.phi.ln_ref())
    }
    fn lshch(&self, j: u32, k: u32, x: &Float) -> Result<Float> {
        Ok(lshch(j, k, x, self.w)?.value)
    }
    fn d3(&self, x: &Float) -> Result<Float> {
        dt_real(3, x, self.w)
    }
    fn sqrt5(&self) -> Float {
        Float::with_val(self.w, 5).sqrt()
    }
    fn phi_pow(&self, k: i32) -> Float {
        Float::with_val(self.w, (&self.sp.phi).pow(k))
    }
    fn done(&self, p: u32, lhs: Float, rhs: Float) -> Result<Float> {
        Ok(Float::with_val(p, Float::with_val(self.w, lhs - rhs).abs()))
    }
}

/// Digits targeted by the series checks at `p` bits.
fn series_sum(variant: SeriesVariant, p: u32) -> Result<Float> {
    let digits = crate::runner::digits_for_bits(p).max(10);
    let bits = (f64::from(digits) * 3.33).ceil() as u32 + 64;
    Ok(apery_sum(variant, bits.max(p + 32), digits)?.0)
}

fn conj2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj2Lhs, p)?;
    let rhs = constant(ConstantName::Beta4, c.w)? * 40u32 + pi_zeta3(c.w)? * 5u32 / 12u32;
    c.done(p, lhs, rhs)
}

fn conj1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj1Lhs, p)?;
    c.done(p, lhs, zeta3(c.w)? * 14u32)
}

fn eqn_4_1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj2A, p)?;
    c.done(p, lhs, c.ls4(1, 3)? / 6u32)
}

fn eqn_4_2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj2B, p)?;
    let rhs = c.lsc(3, 2, 1, 3)? - c.lsc(3, 2, 1, 6)? * 2u32 - c.lsc(2, 3, 1, 6)? * 4u32 - c.lsc(1, 4, 1, 6)? * 2u32;
    c.done(p, lhs, rhs)
}

fn eqn_4_3(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj2B, p)?;
    let rhs = c.ls4(5, 6)? * 2u32 + c.lsc(3, 2, 1, 3)? - c.lsc(3, 2, 1, 6)? * 2u32 + c.lsc(3, 2, 5, 6)? * 4u32
        - pi_zeta3(c.w)? * 2u32;
    c.done(p, lhs, rhs)
}

/// `Lsc_{j,k}(θ) = Lsc_{j,k}(π) - Lsc_{k,j}(π - θ)` with the given value at `π`,
/// checked at `θ = π/6` and `θ = 2π/5`, plus the value at `π` itself.
fn reflection_check(p: u32, j: u32, k: u32, at_pi: Float) -> Result<Float> {
    let c = Ctx::new(p);
    let mut worst = Float::with_val(c.w, (c.lsc(j, k, 1, 1)? - &at_pi).abs());
    for (num, den) in [(1u32, 6u32), (2, 5)] {
        let lhs = c.lsc(k, j, num, den)?;
        let rhs = Float::with_val(c.w, &at_pi - c.lsc(j, k, den - num, den)?);
        worst = worst.max(&Float::with_val(c.w, (lhs - rhs).abs()));
    }
    Ok(Float::with_val(p, worst))
}

fn eqn_lsc14(p: u32) -> Result<Float> {
    let w = p + 32;
    reflection_check(p, 4, 1, pi_zeta3(w)? * 3u32 / 2u32)
}

fn eqn_lsc23(p: u32) -> Result<Float> {
    let w = p + 32;
    reflection_check(p, 3, 2, -pi_zeta3(w)? / 4u32)
}

fn eqn_ls4_pi3(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let rhs = pi_zeta3(c.w)? / 2u32 + c.d4_rho(2)? * 9u32 / 2u32;
    c.done(p, c.ls4(1, 3)?, rhs)
}

fn borwein_straub_cl4(p: u32) -> Result<Float> {
    // Cl_4(π/3) = Im Li_4(e^{iπ/3}) taken from the polylogarithm directly
    let c = Ctx::new(p);
    let cl4 = li(4, &c.sp.rho_pow(2), c.w)?.im;
    let rhs = pi_zeta3(c.w)? / 2u32 + cl4 * 9u32 / 2u32;
    c.done(p, c.ls4(1, 3)?, rhs)
}

fn eqn_lsc32_pi3(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let rhs = -pi_zeta3(c.w)? / 12u32 - c.d4_rho(2)? * 7u32 / 6u32;
    c.done(p, c.lsc(3, 2, 1, 3)?, rhs)
}

fn eqn_ls4_5pi6(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let rhs = pi_zeta3(c.w)? * 5u32 / 4u32 - c.d4_rho(5)? * 3u32 / 2u32 + c.d4_r(1, 1)? * 6u32;
    c.done(p, c.ls4(5, 6)?, rhs)
}

fn eqn_lsc32_pi6(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let rhs = -pi_zeta3(c.w)? / 24u32 - c.d4_rho(1)? + c.d4_rho(2)? / 2u32 + c.d4_rho(5)? / 2u32 + c.d4_r(1, 1)? * 2u32
        - c.d4_r(2, 6)? * 2u32;
    c.done(p, c.lsc(3, 2, 1, 6)?, rhs)
}

fn eqn_lsc32_5pi6(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let rhs = -pi_zeta3(c.w)? * 5u32 / 24u32 + c.d4_rho(1)? / 2u32 - c.d4_rho(2)? / 2u32 - c.d4_rho(5)? + c.d4_r(1, 5)? * 2u32
        - c.d4_r(2, 6)? * 2u32;
    c.done(p, c.lsc(3, 2, 5, 6)?, rhs)
}

fn f24(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let s3 = Float::with_val(c.w, 3).sqrt().recip();
    let a = dt(4, &c.sp.rho_pow(1).scale(&s3), c.w)?;
    let b = dt(4, &c.sp.rho_pow(3).scale(&s3), c.w)?;
    let v = -c.d4_rho(2)? * 9u32 + c.d4_rho(4)? * 6u32 - a * 15u32 + b * 12u32;
    c.done(p, v, Float::new(c.w))
}

fn f21(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let v = c.d4_rho(1)? * 5u32 - c.d4_rho(3)? * 3u32 + c.d4_r(1, 1)? * 3u32 - c.d4_r(1, 3)? - c.d4_r(1, 5)? * 2u32
        + c.d4_r(1, 9)? * 3u32;
    c.done(p, v, Float::new(c.w))
}

fn f25(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let v = -c.d4_rho(3)? * 3u32 + c.d4_rho(5)? * 5u32 - c.d4_r(1, 1)? * 2u32 - c.d4_r(1, 3)? * 3u32 + c.d4_r(1, 5)? * 3u32
        + c.d4_r(1, 9)?;
    c.done(p, v, Float::new(c.w))
}

fn d4_rho4(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d4_rho(4)?, c.d4_rho(2)? * 8u32 / 9u32)
}

fn tbp_0(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let v = c.d4_rho(1)? - c.d4_rho(2)? * 3u32 / 16u32 - c.d4_rho(3)? * 10u32 / 9u32 - c.d4_rho(5)? * 2u32
        + c.d4_r(1, 1)? * 2u32
        + c.d4_r(1, 5)? * 2u32
        - c.d4_r(2, 6)?;
    c.done(p, v, Float::new(c.w))
}

fn tbp_1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = c.d4_r(1, 1)? * 2u32 - c.d4_r(1, 3)? * 8u32 + c.d4_r(1, 5)? * 2u32 + c.d4_r(1, 9)? * 8u32;
    let rhs = -c.d4_rho(1)? + c.d4_rho(2)? * 3u32 / 16u32 + c.d4_rho(3)? * 10u32 / 9u32 + c.d4_rho(5)? * 2u32;
    c.done(p, lhs, rhs)
}

fn tbp_2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let v = -c.d4_rho(1)? * 9u32 - c.d4_rho(2)? * 3u32 / 16u32 + c.d4_rho(3)? * 98u32 / 9u32 - c.d4_rho(5)? * 12u32;
    c.done(p, v, Float::new(c.w))
}

fn rho2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d4_rho(2)?, c.d4_rho(1)? * 8u32 - c.d4_rho(5)? * 8u32)
}

fn rho3(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d4_rho(3)?, (c.d4_rho(1)? + c.d4_rho(5)?) * 27u32 / 28u32)
}

fn eqn_5_1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj1A, p)?;
    let x = Float::with_val(c.w, c.log_phi() * 2u32);
    c.done(p, lhs, -c.lshch(3, 1, &x)? / 2u32)
}

fn eqn_5_2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = series_sum(SeriesVariant::Conj1B, p)?;
    let l = c.log_phi();
    let l2 = Float::with_val(c.w, &l * 2u32);
    let rhs = -c.lshch(2, 2, &l2)? * 2u32 + c.lshch(1, 3, &l)? * 4u32 + c.lshch(2, 2, &l)? * 4u32;
    c.done(p, lhs, rhs)
}

/// Sample points for the hyperbolic closed forms.
fn hyperbolic_samples(c: &Ctx) -> Vec<Float> {
    vec![Float::with_val(c.w, 0.5), c.log_phi(), Float::with_val(c.w, 2)]
}

fn lemma_5_1(p: u32, which: LshKind) -> Result<Float> {
    let c = Ctx::new(p);
    let (j, k) = which.indices();
    let mut worst = Float::new(c.w);
    for x in hyperbolic_samples(&c) {
        let d = Float::with_val(c.w, c.lshch(j, k, &x)? - lsh_closed(which, &x, c.w)?).abs();
        worst = worst.max(&d);
    }
    Ok(Float::with_val(p, worst))
}

fn remark_psi(p: u32, which: LshKind) -> Result<Float> {
    let c = Ctx::new(p);
    let mut worst = Float::new(c.w);
    for x in [Float::with_val(c.w, 1), c.log_phi()] {
        worst = worst.max(&psi_form_residual(which, &x, c.w)?);
    }
    Ok(Float::with_val(p, worst))
}

fn phi_out_1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let x = Float::with_val(c.w, c.log_phi() * 2u32);
    let rhs = -c.d3(&c.phi_pow(-1))? * 2u32 + zeta3(c.w)? / 5u32;
    c.done(p, c.lshch(3, 1, &x)?, rhs)
}

fn phi_out_2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let x = Float::with_val(c.w, c.log_phi() * 2u32);
    let s5 = c.sqrt5();
    let rhs = -c.d3(&c.phi_pow(-4))? / 8u32 - c.d3(&Float::with_val(c.w, &s5 * c.phi_pow(-2)))? / 2u32
        + c.d3(&c.phi_pow(-1))?
        + c.d3(&Float::with_val(c.w, c.phi_pow(1) / &s5))?
        - zeta3(c.w)? * 3u32 / 4u32;
    c.done(p, c.lshch(2, 2, &x)?, rhs)
}

fn phi_out_3(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let l = c.log_phi();
    let rhs = -c.d3(&c.phi_pow(-1))? - Float::with_val(c.w, (&l).pow(3u32)) * 3u32 / 4u32 + zeta3(c.w)? * 4u32 / 5u32;
    c.done(p, c.lshch(1, 3, &l)?, rhs)
}

fn phi_out_4(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let l = c.log_phi();
    let rhs = c.d3(&c.phi_pow(-1))? / 2u32 + Float::with_val(c.w, (&l).pow(3u32)) * 3u32 / 4u32 - zeta3(c.w)? / 20u32;
    c.done(p, c.lshch(2, 2, &l)?, rhs)
}

fn d3_id_step2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let s5 = c.sqrt5();
    let v = c.d3(&c.phi_pow(-4))? * 5u32 / 4u32 + c.d3(&Float::with_val(c.w, &s5 * c.phi_pow(-2)))? * 5u32
        - c.d3(&c.phi_pow(-1))? * 3u32
        - c.d3(&Float::with_val(c.w, c.phi_pow(1) / &s5))? * 10u32
        + zeta3(c.w)? * 34u32 / 5u32;
    c.done(p, v, Float::new(c.w))
}

fn td3_neg1(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d3(&q(c.w, -1, 1))?, -zeta3(c.w)? * 3u32 / 4u32)
}

fn td3_half(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d3(&q(c.w, 1, 2))?, zeta3(c.w)? * 7u32 / 8u32)
}

fn td3_phi2(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    c.done(p, c.d3(&c.phi_pow(-2))?, zeta3(c.w)? * 4u32 / 5u32)
}

fn lewin_49_4(p: u32) -> Result<Float> {
    let c = Ctx::new(p);
    let lhs = c.d3(&q(c.w, -1, 8))? - c.d3(&q(c.w, -1, 2))? * 18u32;
    c.done(p, lhs, zeta3(c.w)? * 49u32 / 4u32)
}

fn complete_d2(p: u32) -> Result<Float> {
    // D_2(e^{iθ}) + D_2(1 - e^{iθ}) = 0 at a few angles
    let c = Ctx::new(p);
    let mut worst = Float::new(c.w);
    for (num, den) in [(1u32, 7u32), (1, 3), (5, 6), (3, 2)] {
        let u = PrecComplex::exp_i(&c.angle(num, den));
        let s = Float::with_val(c.w, dt(2, &u, c.w)? + dt(2, &u.one_minus(), c.w)?).abs();
        worst = worst.max(&s);
    }
    Ok(Float::with_val(p, worst))
}

macro_rules! ident {
    ($id:expr, $stmt:expr, $tol:expr, $f:expr) => {
        Identity { id: $id, statement: $stmt, tolerance_exp: $tol, eval: $f }
    };
}

static REGISTRY: &[Identity] = &[
    ident!("conj1", "Σ C(2n,n)/((2n+1)²(-16)ⁿ) (5H_{2n+1} + 12/(2n+1)) = 14ζ(3)", 50, conj1),
    ident!("conj2", "Σ C(2n,n)/((2n+1)³16ⁿ) (9H_{2n+1} + 32/(2n+1)) = 40β(4) + (5/12)πζ(3)", 50, conj2),
    ident!("eqn-4-1", "Σ C(2n,n)/((2n+1)⁴16ⁿ) = Ls_4(π/3)/6", 40, eqn_4_1),
    ident!(
        "eqn-4-2",
        "Σ C(2n,n)H_{2n}/((2n+1)³16ⁿ) = Lsc_{3,2}(π/3) - 2Lsc_{3,2}(π/6) - 4Lsc_{2,3}(π/6) - 2Lsc_{1,4}(π/6)",
        40,
        eqn_4_2
    ),
    ident!(
        "eqn-4-3",
        "Σ C(2n,n)H_{2n}/((2n+1)³16ⁿ) = 2Ls_4(5π/6) + Lsc_{3,2}(π/3) - 2Lsc_{3,2}(π/6) + 4Lsc_{3,2}(5π/6) - 2πζ(3)",
        40,
        eqn_4_3
    ),
    ident!("eqn-Lsc14", "Lsc_{1,4}(θ) = Ls_4(π) - Ls_4(π-θ), Ls_4(π) = (3/2)πζ(3)", 40, eqn_lsc14),
    ident!("eqn-Lsc23", "Lsc_{2,3}(θ) = Lsc_{3,2}(π) - Lsc_{3,2}(π-θ), Lsc_{3,2}(π) = -(1/4)πζ(3)", 40, eqn_lsc23),
    ident!("eqn-Ls4-Pi3", "Ls_4(π/3) = (1/2)πζ(3) + (9/2)D̃_4(ρ²)", 40, eqn_ls4_pi3),
    ident!("eqn-Lsc32-Pi3", "Lsc_{3,2}(π/3) = -(1/12)πζ(3) - (7/6)D̃_4(ρ²)", 40, eqn_lsc32_pi3),
    ident!("eqn-Ls4-5Pi6", "Ls_4(5π/6) = (5/4)πζ(3) - (3/2)D̃_4(ρ⁵) + 6D̃_4(rρ^{1/2})", 40, eqn_ls4_5pi6),
    ident!(
        "eqn-Lsc32-Pi6",
        "Lsc_{3,2}(π/6) = -(1/24)πζ(3) - D̃_4(ρ) + (1/2)D̃_4(ρ²) + (1/2)D̃_4(ρ⁵) + 2D̃_4(rρ^{1/2}) - 2D̃_4(r²ρ³)",
        40,
        eqn_lsc32_pi6
    ),
    ident!(
        "eqn-Lsc32-5Pi6",
        "Lsc_{3,2}(5π/6) = -(5/24)πζ(3) + (1/2)D̃_4(ρ) - (1/2)D̃_4(ρ²) - D̃_4(ρ⁵) + 2D̃_4(rρ^{5/2}) - 2D̃_4(r²ρ³)",
        40,
        eqn_lsc32_5pi6
    ),
    ident!("F24", "-9D̃_4(ρ²) + 6D̃_4(ρ⁴) - 15D̃_4(ρ/√3) + 12D̃_4(ρ³/√3) = 0", 40, f24),
    ident!(
        "F21",
        "5D̃_4(ρ) - 3D̃_4(ρ³) + 3D̃_4(rρ^{1/2}) - D̃_4(rρ^{3/2}) - 2D̃_4(rρ^{5/2}) + 3D̃_4(rρ^{9/2}) = 0",
        40,
        f21
    ),
    ident!(
        "F25",
        "-3D̃_4(ρ³) + 5D̃_4(ρ⁵) - 2D̃_4(rρ^{1/2}) - 3D̃_4(rρ^{3/2}) + 3D̃_4(rρ^{5/2}) + D̃_4(rρ^{9/2}) = 0",
        40,
        f25
    ),
    ident!("D4-rho4", "D̃_4(ρ⁴) = (8/9)D̃_4(ρ²)", 40, d4_rho4),
    ident!(
        "TBP-0",
        "D̃_4(ρ) - (3/16)D̃_4(ρ²) - (10/9)D̃_4(ρ³) - 2D̃_4(ρ⁵) + 2D̃_4(rρ^{1/2}) + 2D̃_4(rρ^{5/2}) - D̃_4(r²ρ³) = 0",
        40,
        tbp_0
    ),
    ident!(
        "TBP-1",
        "2D̃_4(rρ^{1/2}) - 8D̃_4(rρ^{3/2}) + 2D̃_4(rρ^{5/2}) + 8D̃_4(rρ^{9/2}) = -D̃_4(ρ) + (3/16)D̃_4(ρ²) + (10/9)D̃_4(ρ³) + 2D̃_4(ρ⁵)",
        40,
        tbp_1
    ),
    ident!("TBP-2", "-9D̃_4(ρ) - (3/16)D̃_4(ρ²) + (98/9)D̃_4(ρ³) - 12D̃_4(ρ⁵) = 0", 40, tbp_2),
    ident!("rho2", "D̃_4(ρ²) = 8D̃_4(ρ) - 8D̃_4(ρ⁵)", 40, rho2),
    ident!("rho3", "D̃_4(ρ³) = (27/28)(D̃_4(ρ) + D̃_4(ρ⁵))", 40, rho3),
    ident!("eqn-5-1", "Σ C(2n,n)/((2n+1)³(-16)ⁿ) = -(1/2)Lsh_3(2 log φ)", 40, eqn_5_1),
    ident!(
        "eqn-5-2",
        "Σ C(2n,n)H_{2n}/((2n+1)²(-16)ⁿ) = -2Lshch_{2,2}(2 log φ) + 4Lshch_{1,3}(log φ) + 4Lshch_{2,2}(log φ)",
        40,
        eqn_5_2
    ),
    ident!(
        "lemma-5-1-lsh3",
        "Lsh_3(x) = -D̃_3(e^{-x}) - 2D̃_3(1-e^{-x}) - (x/3)log²(2 sinh(x/2)) + D̃_3(1)",
        40,
        |p| lemma_5_1(p, LshKind::Lsh3)
    ),
    ident!(
        "lemma-5-1-lshch13",
        "Lshch_{1,3}(x) = -D̃_3(-e^{-x}) - 2D̃_3(1/(1+e^{-x})) - (x/3)log²(2 cosh(x/2)) + D̃_3(1)",
        40,
        |p| lemma_5_1(p, LshKind::Lshch13)
    ),
    ident!(
        "lemma-5-1-lshch22",
        "Lshch_{2,2}(x) = -(1/8)D̃_3(e^{-2x}) - (1/2)D̃_3(1-e^{-2x}) + D̃_3(1-e^{-x}) + D̃_3(1/(1+e^{-x})) - (x/3)log(2 sinh(x/2))log(2 cosh(x/2)) - (3/4)D̃_3(1)",
        40,
        |p| lemma_5_1(p, LshKind::Lshch22)
    ),
    ident!("remark-psi-31", "Lsh_3(x) + (x/3)log²(2 sinh(x/2)) = ψ(e^x)", 40, |p| remark_psi(p, LshKind::Lsh3)),
    ident!(
        "remark-psi-22",
        "Lshch_{2,2}(x) + (x/3)log(2 sinh(x/2))log(2 cosh(x/2)) = (ψ(e^{2x}) - 2ψ(e^x) - 2ψ(-e^x))/4",
        40,
        |p| remark_psi(p, LshKind::Lshch22)
    ),
    ident!("remark-psi-13", "Lshch_{1,3}(x) + (x/3)log²(2 cosh(x/2)) = ψ(-e^x)", 40, |p| remark_psi(p, LshKind::Lshch13)),
    ident!("phi-out-1", "Lsh_3(2 log φ) = -2D̃_3(1/φ) + (1/5)D̃_3(1)", 40, phi_out_1),
    ident!(
        "phi-out-2",
        "Lshch_{2,2}(2 log φ) = -(1/8)D̃_3(φ⁻⁴) - (1/2)D̃_3(√5/φ²) + D̃_3(1/φ) + D̃_3(φ/√5) - (3/4)D̃_3(1)",
        40,
        phi_out_2
    ),
    ident!("phi-out-3", "Lshch_{1,3}(log φ) = -D̃_3(1/φ) - (3/4)log³φ + (4/5)D̃_3(1)", 40, phi_out_3),
    ident!("phi-out-4", "Lshch_{2,2}(log φ) = (1/2)D̃_3(1/φ) + (3/4)log³φ - (1/20)D̃_3(1)", 40, phi_out_4),
    ident!(
        "d3-id-step2",
        "(5/4)D̃_3(φ⁻⁴) + 5D̃_3(√5/φ²) - 3D̃_3(1/φ) - 10D̃_3(φ/√5) + (34/5)D̃_3(1) = 0",
        40,
        d3_id_step2
    ),
    ident!("tD3-neg1", "D̃_3(-1) = -(3/4)D̃_3(1)", 40, td3_neg1),
    ident!("tD3-half", "D̃_3(1/2) = (7/8)D̃_3(1)", 40, td3_half),
    ident!("tD3-phi2", "D̃_3(φ⁻²) = (4/5)D̃_3(1)", 40, td3_phi2),
    ident!("lewin-49-4", "D̃_3(-1/8) - 18D̃_3(-1/2) = (49/4)D̃_3(1)", 40, lewin_49_4),
    ident!("completeD2", "D_2(e^{iθ}) + D_2(1 - e^{iθ}) = 0", 40, complete_d2),
    ident!("borwein-straub-cl4", "Ls_4(π/3) = (1/2)πζ(3) + (9/2)Cl_4(π/3)", 40, borwein_straub_cl4),
];

/// All registered identities, in registry order.
pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// Look up an identity by id.
pub fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Evaluate both sides of identity `id` and report against its tolerance.
pub fn identity_residual(id: &str, p: u32) -> Result<CheckReport> {
    let entry = lookup(id)?;
    let started = Instant::now();
    let outcome = entry.residual(p);
    Ok(numeric_report(entry.id, entry.statement, p, entry.tolerance_exp, outcome, started))
}
