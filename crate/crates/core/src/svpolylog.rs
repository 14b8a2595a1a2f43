//! Single-valued polylogarithms.
//!
//! `D̃_m(x) = R_m( Σ_{j=1}^{m} (-ln|x|)^{m-j}/(m-j)! Li_j(x) + ln^{m-1}|x| ln|1-x| / m! )`
//! on the closed unit disk, with `R_m = Im` for even `m` and `Re` for odd
//! `m`, extended to `|x| > 1` by `D̃_m(x) = (-1)^{m-1} D̃_m(1/x)`.
//! The classical Zagier form `D_m` uses the same sum from `j = 0` with the
//! convention `Li_0 = -1/2` and no `ln|1-x|` correction.
//!
//! Only the exact points `0` and `1` are special-cased: the combination above
//! stays well conditioned arbitrarily close to both, so nearby arguments are
//! evaluated directly.

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::numkernel::{check_precision, pi, PrecComplex};
use crate::polylog::{li_upto, MAX_ORDER};

/// Supported orders `m` for `D_m` and `D̃_m`.
pub const ORDERS: std::ops::RangeInclusive<u32> = 2..=MAX_ORDER;

fn check_order(m: u32) -> Result<()> {
    if !ORDERS.contains(&m) {
        return Err(Error::Unsupported(format!("single-valued polylogarithm of order {m}; supported 2..=4")));
    }
    Ok(())
}

/// `Re` for odd `m`, `Im` for even `m`.
pub fn project(m: u32, z: PrecComplex) -> Float {
    if m % 2 == 0 {
        z.im
    } else {
        z.re
    }
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Evaluate `Σ_{j=lo}^{m} (-L)^{m-j}/(m-j)! Li_j(x)` with `L = ln|x|`.
fn weighted_sum(m: u32, lo: u32, x: &PrecComplex, minus_l: &Float, w: u32) -> Result<PrecComplex> {
    let lis = li_upto(m, x, w)?;
    let mut acc = PrecComplex::zero(w);
    let mut power = Float::with_val(w, 1);
    // iterate j = m, m-1, ..., lo; power = (-L)^{m-j}/(m-j)!
    for (step, j) in (lo..=m).rev().enumerate() {
        if step > 0 {
            power *= minus_l;
            power /= step as u32;
        }
        if j == 1 && power.is_zero() {
            // Li_1 may be infinite at x = 1 while its weight vanishes
            continue;
        }
        acc = &acc + &lis[j as usize].scale(&power);
    }
    Ok(acc)
}

/// Classical Zagier polylogarithm `D_m(x)` for `0 < |x| <= 1`.
pub fn d_classic(m: u32, x: &PrecComplex, p: u32) -> Result<Float> {
    check_order(m)?;
    check_precision(p)?;
    let w = p + 32;
    let input_prec = x.prec();
    let x = x.with_prec(w);
    if x.is_zero() {
        return Err(Error::Domain("D_m is defined here for 0 < |x| <= 1".into()));
    }
    let r = x.abs();
    if r > 1 && !on_unit_circle(&r, input_prec) {
        return Err(Error::Domain(format!("D_m requires |x| <= 1, got |x| = {}", r.to_f64())));
    }
    let minus_l = -r.ln();
    let s = weighted_sum(m, 0, &x, &minus_l, w)?;
    Ok(Float::with_val(p, project(m, s)))
}

/// `| |x| - 1 |` within rounding of an input carrying `input_prec` bits.
fn on_unit_circle(r: &Float, input_prec: u32) -> bool {
    let d = Float::with_val(r.prec(), r - 1u32).abs();
    d < Float::with_val(r.prec(), Float::i_exp(1, -(input_prec as i32) + 8))
}

/// Modified single-valued polylogarithm `D̃_m(x)` for any complex `x`.
pub fn d_tilde(m: u32, x: &PrecComplex, p: u32) -> Result<Float> {
    check_order(m)?;
    check_precision(p)?;
    if !x.is_finite() {
        return Err(Error::Domain("D̃_m at a non-finite argument".into()));
    }
    let w = p + 32;
    let x = x.with_prec(w);
    if x.is_zero() {
        return Ok(Float::new(p));
    }
    let r = x.abs();
    if r > 1 {
        let v = d_tilde_disk(m, &x.recip(), w)?;
        let v = if m % 2 == 0 { -v } else { v };
        return Ok(Float::with_val(p, v));
    }
    Ok(Float::with_val(p, d_tilde_disk(m, &x, w)?))
}

/// `D̃_m(x)` from the defining combination at any `x`, without the inversion step.
///
/// The combination is single-valued on all of `ℂ \ {0, 1}`, so this agrees with
/// [`d_tilde`] everywhere; it is the independent side of inversion checks.
pub fn d_tilde_direct(m: u32, x: &PrecComplex, p: u32) -> Result<Float> {
    check_order(m)?;
    check_precision(p)?;
    let w = p + 32;
    let x = x.with_prec(w);
    if x.is_zero() {
        return Ok(Float::new(p));
    }
    Ok(Float::with_val(p, d_tilde_disk(m, &x, w)?))
}

fn d_tilde_disk(m: u32, x: &PrecComplex, w: u32) -> Result<Float> {
    if *x == PrecComplex::one(w) {
        return Ok(if m % 2 == 1 { zeta_value(m, w)? } else { Float::new(w) });
    }
    let r = x.abs();
    let l = Float::with_val(w, r.ln_ref());
    let minus_l = Float::with_val(w, -&l);
    let s = weighted_sum(m, 1, x, &minus_l, w)?;
    let mut v = project(m, s);
    if m % 2 == 1 {
        // R_m of the real correction term is the term itself
        let l1 = x.one_minus().abs().ln();
        let mut corr = Float::with_val(w, (&l).pow(m as i32 - 1)) * l1;
        corr /= Float::with_val(w, &factorial(m));
        v += corr;
    }
    Ok(v)
}

fn zeta_value(m: u32, w: u32) -> Result<Float> {
    let one = PrecComplex::one(w);
    Ok(li_upto(m, &one, w)?.swap_remove(m as usize).re)
}

/// Residual of the distribution relation
/// `Σ_{ζ^N = 1} D̃_m(ζ x) = N^{1-m} D̃_m(x^N)`, as `|N^{m-1} Σ - D̃_m(x^N)|`.
pub fn check_distribution(m: u32, n: u32, x: &PrecComplex, p: u32) -> Result<Float> {
    check_order(m)?;
    if n == 0 {
        return Err(Error::InvalidArgument("distribution relation needs N >= 1".into()));
    }
    let w = p + 16;
    let x = x.with_prec(w);
    let two_pi = pi(w) * 2u32;
    let mut sum = Float::new(w);
    for k in 0..n {
        let ang = Float::with_val(w, &two_pi * k) / n;
        let zeta = PrecComplex::exp_i(&ang);
        sum += d_tilde(m, &(&zeta * &x), w)?;
    }
    sum *= Integer::from(Integer::u_pow_u(n, m - 1));
    let rhs = d_tilde(m, &x.powi(n as i32), w)?;
    Ok(Float::with_val(p, sum - rhs).abs())
}
