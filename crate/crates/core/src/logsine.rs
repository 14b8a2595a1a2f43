//! Generalized log-sine-cosine integrals and their hyperbolic analogues.
//!
//! `Lsc_{j,k}(θ) = -∫_0^θ log^{j-1}|2 sin(t/2)| log^{k-1}|2 cos(t/2)| dt`
//! and `Lshch_{j,k}(x)` with `sinh`/`cosh` in place of `sin`/`cos`;
//! `Ls_j = Lsc_{j,1}` and `Lsh_j = Lshch_{j,1}`.
//!
//! Values come from tanh-sinh quadrature (see [`quadrature`]) at `p + 32`
//! working bits. The values at `θ = π` are also available in closed form from
//! the bivariate gamma-function generating function ([`lsc_pi`]).

pub mod quadrature;

use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{check_precision, constant, pi, pow2, zeta_int, ConstantName};
pub use quadrature::QuadratureResult;

/// Largest supported `j + k`.
pub const MAX_WEIGHT: u32 = 6;

/// Inputs of the hyperbolic family are capped at this value.
pub const LSHCH_MAX_X: f64 = 100.0;

/// Trigonometric or hyperbolic kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    SinCos,
    SinhCosh,
}

/// A member `(family, j, k)` of the two integral families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogTrigKind {
    pub family: Family,
    pub j: u32,
    pub k: u32,
}

impl LogTrigKind {
    pub fn new(family: Family, j: u32, k: u32) -> Result<Self> {
        if j < 1 || k < 1 {
            return Err(Error::InvalidArgument(format!("log-trig integral needs j, k >= 1 (got {j}, {k})")));
        }
        if j + k > MAX_WEIGHT {
            return Err(Error::Unsupported(format!("j + k = {} exceeds {MAX_WEIGHT}", j + k)));
        }
        Ok(LogTrigKind { family, j, k })
    }

    /// `Ls_j`.
    pub fn ls(j: u32) -> Result<Self> {
        Self::new(Family::SinCos, j, 1)
    }

    /// `Lsh_j`.
    pub fn lsh(j: u32) -> Result<Self> {
        Self::new(Family::SinhCosh, j, 1)
    }

    /// Evaluate at `arg` (θ or x).
    pub fn eval(&self, arg: &Float, p: u32) -> Result<QuadratureResult> {
        match self.family {
            Family::SinCos => lsc(self.j, self.k, arg, p),
            Family::SinhCosh => lshch(self.j, self.k, arg, p),
        }
    }
}

/// `log^{j-1}(a) log^{k-1}(b)` with the convention that a zeroth power is 1.
fn log_product(j: u32, k: u32, a: impl FnOnce() -> Float, b: impl FnOnce() -> Float, w: u32) -> Float {
    let mut v = Float::with_val(w, 1);
    if j > 1 {
        let la = a().ln();
        v *= Float::with_val(w, rug::ops::Pow::pow(&la, j - 1));
    }
    if k > 1 {
        let lb = b().ln();
        v *= Float::with_val(w, rug::ops::Pow::pow(&lb, k - 1));
    }
    v
}

/// `2 sin(δ/2)` for a nonnegative distance `δ`.
fn two_sin_half(delta: &Float, w: u32) -> Float {
    let h = Float::with_val(w, delta / 2u32);
    Float::with_val(w, h.sin_ref()) * 2u32
}

/// `Lsc_{j,k}(θ)` for `0 <= θ <= 2π`; the range is split at `π`.
pub fn lsc(j: u32, k: u32, theta: &Float, p: u32) -> Result<QuadratureResult> {
    LogTrigKind::new(Family::SinCos, j, k)?;
    check_precision(p)?;
    let w = p + 32;
    let pi_w = pi(w);
    let two_pi = Float::with_val(w, &pi_w * 2u32);
    let mut th = Float::with_val(w, theta);
    if th < 0 || !th.is_finite() {
        return Err(Error::Domain(format!("Lsc requires 0 <= θ <= 2π, got {}", theta.to_f64())));
    }
    // an input that is π (or 2π) to its own precision is taken as exact
    let snap = pow2(w, -(theta.prec() as i32) + 4);
    if Float::with_val(w, &th - &pi_w).abs() < snap {
        th = pi_w.clone();
    } else if Float::with_val(w, &th - &two_pi).abs() < snap {
        th = two_pi.clone();
    }
    if th > two_pi {
        return Err(Error::Domain(format!("Lsc requires 0 <= θ <= 2π, got {}", theta.to_f64())));
    }
    if th.is_zero() {
        return Ok(zero_result(p));
    }
    if j == 1 && k == 1 {
        return Ok(QuadratureResult { value: Float::with_val(p, -&th), error_estimate: Float::new(p), levels_used: 0 });
    }

    let zero = Float::new(w);
    let mut total = QuadratureResult { value: Float::new(w), error_estimate: Float::new(w), levels_used: 0 };
    // lower half [0, min(θ, π)]: singular at 0 (sin) and π (cos)
    let b1 = if th > pi_w { pi_w.clone() } else { th.clone() };
    let d1 = Float::with_val(w, &pi_w - &b1);
    let f1 = |_t: &Float, dl: &Float, dr: &Float| {
        let sin_dist = dl.clone();
        let cos_dist = Float::with_val(w, &d1 + dr);
        log_product(j, k, || two_sin_half(&sin_dist, w), || two_sin_half(&cos_dist, w), w)
    };
    integrate_graded(&zero, &b1, &d1, &f1, w, p, &mut total)?;
    // upper half [π, θ]: singular at π (cos) and 2π (sin)
    if th > pi_w {
        let d2 = Float::with_val(w, &two_pi - &th);
        let f2 = |_t: &Float, dl: &Float, dr: &Float| {
            let sin_dist = Float::with_val(w, &d2 + dr);
            log_product(j, k, || two_sin_half(&sin_dist, w), || two_sin_half(dl, w), w)
        };
        integrate_graded(&pi_w, &th, &d2, &f2, w, p, &mut total)?;
    }
    Ok(finish(total, p))
}

/// `Lshch_{j,k}(x)` for `0 <= x <= 100`.
pub fn lshch(j: u32, k: u32, x: &Float, p: u32) -> Result<QuadratureResult> {
    LogTrigKind::new(Family::SinhCosh, j, k)?;
    check_precision(p)?;
    if *x < 0 || !x.is_finite() || *x > LSHCH_MAX_X {
        return Err(Error::Domain(format!("Lshch requires 0 <= x <= {LSHCH_MAX_X}, got {}", x.to_f64())));
    }
    let w = p + 32;
    if x.is_zero() {
        return Ok(zero_result(p));
    }
    let xw = Float::with_val(w, x);
    if j == 1 && k == 1 {
        return Ok(QuadratureResult { value: Float::with_val(p, -&xw), error_estimate: Float::new(p), levels_used: 0 });
    }
    let f = |t: &Float, _dl: &Float, _dr: &Float| {
        log_product(
            j,
            k,
            || Float::with_val(w, Float::with_val(w, t / 2u32).sinh_ref()) * 2u32,
            || Float::with_val(w, Float::with_val(w, t / 2u32).cosh_ref()) * 2u32,
            w,
        )
    };
    // unit-length panels keep the complex singularities at t = ±iπ well separated
    let mut total = QuadratureResult { value: Float::new(w), error_estimate: Float::new(w), levels_used: 0 };
    let mut a = Float::new(w);
    while a < xw {
        let b = Float::with_val(w, &a + 1u32).min(&xw);
        let r = quadrature::integrate(&a, &b, &f, w, p + 8)?;
        accumulate(&mut total, r);
        a = b;
    }
    Ok(finish(total, p))
}

fn zero_result(p: u32) -> QuadratureResult {
    QuadratureResult { value: Float::new(p), error_estimate: Float::new(p), levels_used: 0 }
}

fn accumulate(total: &mut QuadratureResult, r: QuadratureResult) {
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.levels_used = total.levels_used.max(r.levels_used);
}

/// Negate (the families carry a leading minus sign) and round.
fn finish(total: QuadratureResult, p: u32) -> QuadratureResult {
    QuadratureResult {
        value: Float::with_val(p, -total.value),
        error_estimate: Float::with_val(p, total.error_estimate),
        levels_used: total.levels_used,
    }
}

/// Integrate over `[a, b]`, refining towards `b` when a singular point sits a
/// small distance `d` beyond it.
fn integrate_graded<F>(a: &Float, b: &Float, d: &Float, f: &F, w: u32, p: u32, total: &mut QuadratureResult) -> Result<()>
where
    F: Fn(&Float, &Float, &Float) -> Float,
{
    let breaks = quadrature::graded_breaks_right(a, b, d);
    let mut pts = Vec::with_capacity(breaks.len() + 2);
    pts.push(a.clone());
    pts.extend(breaks);
    pts.push(b.clone());
    for win in pts.windows(2) {
        let (lo, hi) = (&win[0], &win[1]);
        // distances handed to f are relative to the full interval's right end
        let shift_r = Float::with_val(w, b - hi);
        let shift_l = Float::with_val(w, lo - a);
        let g = |t: &Float, dl: &Float, dr: &Float| {
            let dr_full = Float::with_val(w, dr + &shift_r);
            let dl_full = Float::with_val(w, dl + &shift_l);
            f(t, &dl_full, &dr_full)
        };
        let r = quadrature::integrate(lo, hi, &g, w, p + 8)?;
        accumulate(total, r);
    }
    Ok(())
}

/// `Lsc_{j,k}(π) - Lsc_{k,j}(π - θ)`, equal to `Lsc_{j,k}(θ)` for `0 <= θ <= π`.
pub fn lsc_reflect(j: u32, k: u32, theta: &Float, p: u32) -> Result<Float> {
    if j + k > 5 {
        return Err(Error::Unsupported(format!("reflection is provided for j + k <= 5 (got {})", j + k)));
    }
    let w = p + 16;
    let pi_w = pi(w);
    let th = Float::with_val(w, theta);
    if th < 0 || th > pi_w {
        return Err(Error::Domain(format!("reflection requires 0 <= θ <= π, got {}", theta.to_f64())));
    }
    let at_pi = lsc_pi(j, k, w)?;
    let other = lsc(k, j, &Float::with_val(w, &pi_w - &th), w)?;
    Ok(Float::with_val(p, at_pi - other.value))
}

/// `Lsc_{j,k}(π)` from the generating function
/// `Σ Lsc_{j,k}(π) x^{j-1} y^{k-1}/((j-1)!(k-1)!) = -π · 2^{x+y}/π · Γ((1+x)/2)Γ((1+y)/2)/Γ(1+(x+y)/2)`.
///
/// The log of the gamma quotient is
/// `Σ_{n≥2} (-1)^n ζ(n)/n [(1 - 2^{-n})(x^n + y^n) - 2^{-n}(x + y)^n]`
/// (the linear terms cancel against `2^{x+y}`), exponentiated as a truncated series.
pub fn lsc_pi(j: u32, k: u32, p: u32) -> Result<Float> {
    LogTrigKind::new(Family::SinCos, j, k)?;
    check_precision(p)?;
    let w = p + 32;
    let deg = (j + k - 2) as usize;
    let dim = deg + 1;
    let zeta = |n: u32| -> Result<Float> {
        Ok(match n {
            2 => constant(ConstantName::Zeta2, w)?,
            3 => constant(ConstantName::Zeta3, w)?,
            _ => zeta_int(n, w),
        })
    };
    // bivariate coefficients c[a][b] of x^a y^b, truncated at total degree `deg`
    let mut log_poly = vec![vec![Float::new(w); dim]; dim];
    for n in 2..=deg as u32 {
        let zn = Float::with_val(w, zeta(n)? / n);
        let zn = if n % 2 == 1 { -zn } else { zn };
        let inv = pow2(w, -(n as i32));
        let pure = Float::with_val(w, 1u32 - &inv) * &zn;
        log_poly[n as usize][0] += &pure;
        log_poly[0][n as usize] += &pure;
        // -(2^{-n}) ζ-term times (x + y)^n
        let mut binom = rug::Integer::from(1);
        for a in 0..=n {
            if a > 0 {
                binom *= n - a + 1;
                binom /= a;
            }
            let c = Float::with_val(w, &inv * &zn) * &binom;
            log_poly[a as usize][(n - a) as usize] -= c;
        }
    }
    // exp(P) = Σ_r P^r / r!
    let mut result = vec![vec![Float::new(w); dim]; dim];
    result[0][0] = Float::with_val(w, 1);
    let mut power = result.clone();
    for r in 1..=(deg / 2) {
        power = bivariate_mul(&power, &log_poly, deg, w);
        for a in 0..dim {
            for b in 0..(dim - a) {
                let t = Float::with_val(w, &power[a][b] / factorial_u(r as u32));
                result[a][b] += t;
            }
        }
    }
    let coeff = &result[(j - 1) as usize][(k - 1) as usize];
    let scale = Float::with_val(w, factorial_u(j - 1)) * factorial_u(k - 1);
    let v = -Float::with_val(w, coeff * &scale) * pi(w);
    Ok(Float::with_val(p, v))
}

fn factorial_u(n: u32) -> rug::Integer {
    rug::Integer::from(rug::Integer::factorial(n))
}

fn bivariate_mul(a: &[Vec<Float>], b: &[Vec<Float>], deg: usize, w: u32) -> Vec<Vec<Float>> {
    let dim = deg + 1;
    let mut out = vec![vec![Float::new(w); dim]; dim];
    for i in 0..dim {
        for j in 0..(dim - i) {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..(dim - i - j) {
                for l in 0..(dim - i - j - k) {
                    if b[k][l].is_zero() {
                        continue;
                    }
                    out[i + k][j + l] += Float::with_val(w, &a[i][j] * &b[k][l]);
                }
            }
        }
    }
    out
}
