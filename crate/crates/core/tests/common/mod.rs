#![allow(dead_code)]

use apery_verify::numkernel::{agree_bits, parse_real, PrecComplex};
use rug::ops::Pow;
use rug::Float;

pub fn real(s: &str, p: u32) -> Float {
    parse_real(s, p).unwrap()
}

pub fn cx(re: &str, im: &str, p: u32) -> PrecComplex {
    PrecComplex::new(real(re, p), real(im, p))
}

/// Absolute difference `|a - b|` compared against `10^-digits`.
pub fn within(a: &Float, b: &Float, digits: i32) -> bool {
    let p = a.prec().max(b.prec()) + 16;
    let d = Float::with_val(p, a - b).abs();
    let tol = Float::with_val(p, 10).pow(-digits);
    d < tol
}

pub fn cwithin(a: &PrecComplex, b: &PrecComplex, digits: i32) -> bool {
    within(&a.re, &b.re, digits) && within(&a.im, &b.im, digits)
}

pub fn bits(a: &Float, b: &Float) -> i64 {
    agree_bits(a, b)
}
