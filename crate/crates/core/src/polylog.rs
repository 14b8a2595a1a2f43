//! Classical polylogarithms `Li_j(z)` for `0 <= j <= 4`.
//!
//! - `|z| <= 3/4`: the defining power series `Σ z^n / n^j`.
//! - `3/4 < |z| <= 4/3`: the expansion in `μ = ln z`,
//!   `Li_s(e^μ) = μ^{s-1}/(s-1)! (H_{s-1} - ln(-μ)) + Σ_{k≠s-1} ζ(s-k) μ^k / k!`,
//!   whose negative-index zeta values are rewritten through `ζ(2r)`.
//! - `|z| > 4/3`: the inversion formula in terms of Bernoulli polynomials.
//!
//! Branch conventions: principal logarithms throughout; a real argument
//! `x > 1` is read as `x - i0`, so `Im Li_s(x) = -π ln^{s-1}(x)/(s-1)!`.
//! `Li_0` is the constant `-1/2`, the value used by the single-valued
//! polylogarithms (the function `z/(1-z)` itself is never needed).

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::numkernel::{check_precision, constant, pi, zeta_int, ConstantName, PrecComplex};

/// Highest supported order.
pub const MAX_ORDER: u32 = 4;

/// `Li_j(z)` at `p` bits.
pub fn li(j: u32, z: &PrecComplex, p: u32) -> Result<PrecComplex> {
    let mut all = li_upto(j, z, p)?;
    Ok(all.swap_remove(j as usize))
}

/// Real polylogarithm for real `x <= 1` (`x != 1` when `j <= 1`).
pub fn li_real(j: u32, x: &Float, p: u32) -> Result<Float> {
    if *x > 1 {
        return Err(Error::Domain(format!("li_real requires x <= 1, got {}", x.to_f64())));
    }
    Ok(li(j, &PrecComplex::from_real(x), p)?.re)
}

/// `[Li_0(z), Li_1(z), ..., Li_m(z)]`, computed together.
pub fn li_upto(m: u32, z: &PrecComplex, p: u32) -> Result<Vec<PrecComplex>> {
    check_precision(p)?;
    if m > MAX_ORDER {
        return Err(Error::Unsupported(format!("Li_{m}: orders above {MAX_ORDER} are not implemented")));
    }
    if !z.is_finite() {
        return Err(Error::Domain("Li_j at a non-finite argument".into()));
    }
    let w = p + 32;
    let mut z = z.with_prec(w);
    // x > 1 on the real axis: lower side of the cut
    if z.im.is_zero() && z.re > 1 {
        z.im = -Float::new(w);
    }
    let mut out = Vec::with_capacity(m as usize + 1);
    out.push(PrecComplex::from_f64(w, -0.5, 0.0));
    if m == 0 {
        return Ok(round_all(out, p));
    }
    if z.is_zero() {
        out.extend((1..=m).map(|_| PrecComplex::zero(w)));
        return Ok(round_all(out, p));
    }
    let one = PrecComplex::one(w);
    if z == one {
        if m == 1 {
            return Err(Error::Domain("Li_1 is singular at z = 1".into()));
        }
        return at_one(m, w).map(|v| round_all(v, p));
    }
    // Li_1 always from its closed form
    out.push(-z.one_minus().ln());
    if m == 1 {
        return Ok(round_all(out, p));
    }
    let r = z.abs().to_f64();
    let higher = if r <= 0.75 {
        taylor(m, &z, w)
    } else if r <= 4.0 / 3.0 {
        mu_expansion(m, &z, w)?
    } else {
        inversion(m, &z, w)?
    };
    out.extend(higher);
    Ok(round_all(out, p))
}

fn round_all(v: Vec<PrecComplex>, p: u32) -> Vec<PrecComplex> {
    v.into_iter().map(|c| c.with_prec(p)).collect()
}

/// Values at `z = 1` for `m >= 2`: `ζ(s)`; the `Li_1` slot carries `+inf`.
fn at_one(m: u32, w: u32) -> Result<Vec<PrecComplex>> {
    let mut out = vec![PrecComplex::from_f64(w, -0.5, 0.0), PrecComplex::from_f64(w, f64::INFINITY, 0.0)];
    for s in 2..=m {
        out.push(PrecComplex::from_real(&zeta_const(s, w)?));
    }
    Ok(out)
}

fn zeta_const(s: u32, w: u32) -> Result<Float> {
    match s {
        2 => constant(ConstantName::Zeta2, w),
        3 => constant(ConstantName::Zeta3, w),
        4 => {
            let pi = pi(w);
            Ok(Float::with_val(w, pi.square_ref()).square() / 90u32)
        }
        _ => Ok(zeta_int(s, w)),
    }
}

/// `Li_2..Li_m` from `Σ z^n / n^j`, valid for `|z| <= 3/4`.
fn taylor(m: u32, z: &PrecComplex, w: u32) -> Vec<PrecComplex> {
    let r = z.abs().to_f64();
    let n_max = ((f64::from(w) + 8.0) * std::f64::consts::LN_2 / -r.ln()).ceil() as u64 + 2;
    let mut sums: Vec<PrecComplex> = (2..=m).map(|_| PrecComplex::zero(w)).collect();
    let mut zn = z.clone();
    for n in 1..=n_max {
        let mut t = zn.clone();
        t.re /= n;
        t.im /= n;
        for s in sums.iter_mut() {
            t.re /= n;
            t.im /= n;
            s.re += &t.re;
            s.im += &t.im;
        }
        zn = &zn * z;
    }
    sums
}

type CoeffMemo = RwLock<HashMap<u32, Vec<Float>>>;

/// `c_r = 2 ζ(2r) / (2π)^{2r}` for `r = 1..=count`, memoized per precision.
fn even_zeta_coeffs(w: u32, count: usize) -> Vec<Float> {
    static MEMO: OnceLock<CoeffMemo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = memo.read().expect("coefficient memo poisoned").get(&w) {
        if v.len() >= count {
            return v[..count].to_vec();
        }
    }
    let two_pi = Float::with_val(w, pi(w) * 2u32);
    let inv_sq = Float::with_val(w, two_pi.square_ref()).recip();
    let mut scale = Float::with_val(w, 2u32);
    let mut v = Vec::with_capacity(count);
    for r in 1..=count {
        scale *= &inv_sq;
        v.push(Float::with_val(w, zeta_int(2 * r as u32, w) * &scale));
    }
    memo.write().expect("coefficient memo poisoned").insert(w, v.clone());
    v
}

/// `Li_2..Li_m` through the `μ = ln z` expansion, `|μ| < 2π`.
fn mu_expansion(m: u32, z: &PrecComplex, w: u32) -> Result<Vec<PrecComplex>> {
    let mu = z.ln();
    if mu.is_zero() {
        return Ok(at_one(m, w)?.split_off(2));
    }
    let two_pi = pi(w) * 2u32;
    let ratio = (mu.abs() / &two_pi).to_f64();
    if ratio >= 0.9 {
        return Err(Error::Domain("mu expansion outside its disk".into()));
    }
    // (|μ|/2π)^{2r} < 2^{-w-8}
    let r_max = (((f64::from(w) + 8.0) * std::f64::consts::LN_2) / (-2.0 * ratio.ln())).ceil() as usize + 1;
    let coeffs = even_zeta_coeffs(w, r_max);
    let neg_mu = -&mu;
    let log_neg_mu = neg_mu.ln();
    let mu2 = &mu * &mu;
    let mut out = Vec::new();
    for s in 2..=m {
        let mut acc = PrecComplex::zero(w);
        // k = 0..s-2: ζ(s-k) μ^k / k!
        let mut mk = PrecComplex::one(w);
        let mut fact = Rational::from(1);
        for k in 0..=(s - 2) {
            if k > 0 {
                mk = &mk * &mu;
                fact *= k;
            }
            let c = zeta_const(s - k, w)? / Float::with_val(w, &fact);
            acc = &acc + &mk.scale(&c);
        }
        // k = s-1: μ^{s-1}/(s-1)! (H_{s-1} - ln(-μ))
        let mu_s1 = &mk * &mu;
        let fact_s1 = Float::with_val(w, &fact * Rational::from(s - 1));
        let mut h = Rational::new();
        for i in 1..s {
            h += Rational::from((1, i));
        }
        let bracket = (-&log_neg_mu).add_real(&Float::with_val(w, &h));
        let log_term = (&mu_s1 * &bracket).scale(&Float::with_val(w, fact_s1.recip_ref()));
        acc = &acc + &log_term;
        // k = s: ζ(0) μ^s / s!
        let mu_s = &mu_s1 * &mu;
        let fact_s = Float::with_val(w, &fact_s1 * s);
        acc = &acc + &mu_s.scale(&(Float::with_val(w, -0.5f64) / fact_s));
        // k = s + 2r - 1: (-1)^r c_r μ^{s-1} μ^{2r} / ((2r)(2r+1)...(2r+s-1))
        let mut mu_pow = mu_s1.clone();
        for (idx, c) in coeffs.iter().enumerate() {
            let r = idx as u32 + 1;
            mu_pow = &mu_pow * &mu2;
            let mut denom = 1u64;
            for t in 0..s {
                denom *= u64::from(2 * r + t);
            }
            let mut k = Float::with_val(w, c / denom);
            if r % 2 == 1 {
                k = -k;
            }
            acc = &acc + &mu_pow.scale(&k);
        }
        out.push(acc);
    }
    Ok(out)
}

/// `Li_s(z) = -(-1)^s Li_s(1/z) - (2πi)^s / s! B_s(1/2 + ln(-z)/(2πi))` for `z ∉ (0, 1]`.
fn inversion(m: u32, z: &PrecComplex, w: u32) -> Result<Vec<PrecComplex>> {
    let zi = z.recip();
    let inner = taylor(m, &zi, w);
    let two_pi_i = PrecComplex::new(Float::new(w), pi(w) * 2u32);
    let arg = &(-z).ln() / &two_pi_i;
    let x = arg.add_real(&Float::with_val(w, 0.5f64));
    let mut out = Vec::new();
    for s in 2..=m {
        let b = bernoulli_poly(s, &x);
        let mut pref = two_pi_i.powi(s as i32);
        let fact = Float::with_val(w, Float::factorial(s));
        pref = pref.scale(&fact.recip());
        let mut v = -&(&pref * &b);
        let li_inv = &inner[(s - 2) as usize];
        if s % 2 == 0 {
            v = &v - li_inv;
        } else {
            v = &v + li_inv;
        }
        out.push(v);
    }
    Ok(out)
}

fn bernoulli_poly(s: u32, x: &PrecComplex) -> PrecComplex {
    let w = x.prec();
    let coeffs: &[(i64, i64)] = match s {
        1 => &[(-1, 2), (1, 1)],
        2 => &[(1, 6), (-1, 1), (1, 1)],
        3 => &[(0, 1), (1, 2), (-3, 2), (1, 1)],
        4 => &[(-1, 30), (0, 1), (1, 1), (-2, 1), (1, 1)],
        _ => unreachable!("orders above 4 are rejected earlier"),
    };
    // Horner from the top coefficient
    let mut acc = PrecComplex::zero(w);
    for &(n, d) in coeffs.iter().rev() {
        acc = (&acc * x).add_real(&Float::with_val(w, Rational::from((n, d))));
    }
    acc
}
