//! Arbitrary-precision number kernel.
//!
//! Reals are [`rug::Float`] values (MPFR), which carry their own precision.
//! [`PrecComplex`] is a pair of such floats; binary operations round to the
//! smaller of the two operand precisions. Named constants are computed on
//! demand, cross-checked at two working precisions and memoized.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Arbitrary-precision real number.
pub type PrecReal = Float;

/// Smallest precision accepted anywhere in the crate.
pub const MIN_PRECISION: u32 = 64;

/// Sentinel returned by [`agree_bits`] when both values are bit-identical.
pub const EXACT_AGREEMENT: i64 = i64::MAX;

/// Validate a caller-supplied precision.
pub fn check_precision(p: u32) -> Result<u32> {
    if p < MIN_PRECISION {
        return Err(Error::InvalidArgument(format!(
            "precision {p} is below the minimum of {MIN_PRECISION} bits"
        )));
    }
    Ok(p)
}

/// `v` rounded to `p` bits.
pub fn real<T>(p: u32, v: T) -> Float
where
    Float: rug::Assign<T>,
{
    Float::with_val(p, v)
}

/// Parse a real from a decimal literal (`0.25`, `-3e-2`) or an exact fraction (`2/5`).
pub fn parse_real(s: &str, p: u32) -> Result<Float> {
    let s = s.trim();
    if s.contains('/') {
        let q = Rational::from_str(s)
            .map_err(|e| Error::InvalidArgument(format!("bad rational {s:?}: {e}")))?;
        return Ok(Float::with_val(p, &q));
    }
    let parsed = Float::parse(s).map_err(|e| Error::InvalidArgument(format!("bad number {s:?}: {e}")))?;
    Ok(Float::with_val(p, parsed))
}

/// Number of leading bits on which `a` and `b` agree:
/// `floor(-log2(|a - b| / max(1, |a|, |b|)))`, or [`EXACT_AGREEMENT`] when equal.
pub fn agree_bits(a: &Float, b: &Float) -> i64 {
    if a == b {
        return EXACT_AGREEMENT;
    }
    let p = a.prec().max(b.prec()) + 16;
    let diff = Float::with_val(p, a - b).abs();
    let mut scale = Float::with_val(p, 1);
    let aa = Float::with_val(p, a.abs_ref());
    let bb = Float::with_val(p, b.abs_ref());
    if aa > scale {
        scale = aa;
    }
    if bb > scale {
        scale = bb;
    }
    let rel = diff / scale;
    let lg = rel.log2();
    (-lg).floor().to_f64() as i64
}

/// `log10 |x|`, with `-inf` for zero; used for residual reporting.
pub fn log10_abs(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let p = x.prec().max(MIN_PRECISION);
    Float::with_val(p, x.abs_ref()).log10().to_f64()
}

/// `2^e` at precision `p`.
pub fn pow2(p: u32, e: i32) -> Float {
    Float::with_val(p, Float::i_exp(1, e))
}

// ---------------------------------------------------------------------------
// Complex numbers
// ---------------------------------------------------------------------------

/// Arbitrary-precision complex number `re + i im`.
#[derive(Clone, PartialEq)]
pub struct PrecComplex {
    pub re: Float,
    pub im: Float,
}

impl fmt::Debug for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}i)", self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for PrecComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec() as f64) * std::f64::consts::LOG10_2).floor() as usize;
        let re = self.re.to_string_radix(10, Some(digits));
        let im = self.im.to_string_radix(10, Some(digits));
        write!(f, "{re} + {im}i")
    }
}

impl PrecComplex {
    pub fn new(re: Float, im: Float) -> Self {
        let p = re.prec().min(im.prec());
        Self::with_prec_parts(p, re, im)
    }

    fn with_prec_parts(p: u32, mut re: Float, mut im: Float) -> Self {
        if re.prec() != p {
            re.set_prec(p);
        }
        if im.prec() != p {
            im.set_prec(p);
        }
        PrecComplex { re, im }
    }

    pub fn from_f64(p: u32, re: f64, im: f64) -> Self {
        PrecComplex { re: Float::with_val(p, re), im: Float::with_val(p, im) }
    }

    pub fn from_real(x: &Float) -> Self {
        PrecComplex { re: x.clone(), im: Float::new(x.prec()) }
    }

    pub fn from_rational(p: u32, q: &Rational) -> Self {
        PrecComplex { re: Float::with_val(p, q), im: Float::new(p) }
    }

    pub fn zero(p: u32) -> Self {
        PrecComplex { re: Float::new(p), im: Float::new(p) }
    }

    pub fn one(p: u32) -> Self {
        Self::from_f64(p, 1.0, 0.0)
    }

    pub fn i(p: u32) -> Self {
        Self::from_f64(p, 0.0, 1.0)
    }

    /// `e^{iθ}`.
    pub fn exp_i(theta: &Float) -> Self {
        let p = theta.prec();
        let (s, c) = theta.clone().sin_cos(Float::new(p));
        PrecComplex { re: c, im: s }
    }

    /// `r e^{iθ}`.
    pub fn polar(r: &Float, theta: &Float) -> Self {
        let p = r.prec().min(theta.prec());
        let u = Self::exp_i(theta);
        PrecComplex { re: Float::with_val(p, &u.re * r), im: Float::with_val(p, &u.im * r) }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().min(self.im.prec())
    }

    /// Copy rounded (or widened) to `p` bits.
    pub fn with_prec(&self, p: u32) -> Self {
        PrecComplex { re: Float::with_val(p, &self.re), im: Float::with_val(p, &self.im) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        PrecComplex { re: self.re.clone(), im: Float::with_val(self.im.prec(), -&self.im) }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let a = Float::with_val(p, self.re.square_ref());
        let b = Float::with_val(p, self.im.square_ref());
        a + b
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// Principal argument in `(-π, π]`.
    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        PrecComplex { re: self.abs().ln(), im: self.arg() }
    }

    pub fn exp(&self) -> Self {
        let r = Float::with_val(self.prec(), self.re.exp_ref());
        Self::polar(&r, &self.im)
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = self.norm_sqr();
        PrecComplex {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -Float::with_val(p, &self.im / &n)),
        }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec().min(k.prec());
        PrecComplex { re: Float::with_val(p, &self.re * k), im: Float::with_val(p, &self.im * k) }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let p = self.prec();
        PrecComplex { re: Float::with_val(p, &self.re * q), im: Float::with_val(p, &self.im * q) }
    }

    pub fn add_real(&self, x: &Float) -> Self {
        let p = self.prec().min(x.prec());
        PrecComplex { re: Float::with_val(p, &self.re + x), im: Float::with_val(p, &self.im) }
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        let p = self.prec();
        PrecComplex { re: Float::with_val(p, 1 - &self.re), im: Float::with_val(p, -&self.im) }
    }

    /// Integer power by repeated squaring (negative exponents invert).
    pub fn powi(&self, n: i32) -> Self {
        let p = self.prec();
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = PrecComplex::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<'a> Add<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn add(self, o: &PrecComplex) -> PrecComplex {
        let p = self.prec().min(o.prec());
        PrecComplex { re: Float::with_val(p, &self.re + &o.re), im: Float::with_val(p, &self.im + &o.im) }
    }
}

impl<'a> Sub<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn sub(self, o: &PrecComplex) -> PrecComplex {
        let p = self.prec().min(o.prec());
        PrecComplex { re: Float::with_val(p, &self.re - &o.re), im: Float::with_val(p, &self.im - &o.im) }
    }
}

impl<'a> Mul<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn mul(self, o: &PrecComplex) -> PrecComplex {
        let p = self.prec().min(o.prec());
        let w = p + 8;
        let ac = Float::with_val(w, &self.re * &o.re);
        let bd = Float::with_val(w, &self.im * &o.im);
        let ad = Float::with_val(w, &self.re * &o.im);
        let bc = Float::with_val(w, &self.im * &o.re);
        PrecComplex { re: Float::with_val(p, ac - bd), im: Float::with_val(p, ad + bc) }
    }
}

impl<'a> Div<&'a PrecComplex> for &'a PrecComplex {
    type Output = PrecComplex;
    fn div(self, o: &PrecComplex) -> PrecComplex {
        let p = self.prec().min(o.prec());
        let w = p + 8;
        let n = Float::with_val(w, o.norm_sqr());
        let ac = Float::with_val(w, &self.re * &o.re);
        let bd = Float::with_val(w, &self.im * &o.im);
        let bc = Float::with_val(w, &self.im * &o.re);
        let ad = Float::with_val(w, &self.re * &o.im);
        PrecComplex {
            re: Float::with_val(p, (ac + bd) / &n),
            im: Float::with_val(p, (bc - ad) / &n),
        }
    }
}

impl Neg for &PrecComplex {
    type Output = PrecComplex;
    fn neg(self) -> PrecComplex {
        PrecComplex { re: Float::with_val(self.re.prec(), -&self.re), im: Float::with_val(self.im.prec(), -&self.im) }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<PrecComplex> for PrecComplex {
            type Output = PrecComplex;
            fn $m(self, o: PrecComplex) -> PrecComplex {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a PrecComplex> for PrecComplex {
            type Output = PrecComplex;
            fn $m(self, o: &PrecComplex) -> PrecComplex {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for PrecComplex {
    type Output = PrecComplex;
    fn neg(self) -> PrecComplex {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

/// Named constants used throughout the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstantName {
    Pi,
    Log2,
    Zeta2,
    Zeta3,
    Beta4,
    LogPhi,
    Catalan,
}

impl ConstantName {
    pub const ALL: [ConstantName; 7] = [
        ConstantName::Pi,
        ConstantName::Log2,
        ConstantName::Zeta2,
        ConstantName::Zeta3,
        ConstantName::Beta4,
        ConstantName::LogPhi,
        ConstantName::Catalan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstantName::Pi => "PI",
            ConstantName::Log2 => "LOG2",
            ConstantName::Zeta2 => "ZETA2",
            ConstantName::Zeta3 => "ZETA3",
            ConstantName::Beta4 => "BETA4",
            ConstantName::LogPhi => "LOG_PHI",
            ConstantName::Catalan => "CATALAN",
        }
    }
}

impl FromStr for ConstantName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase().replace('-', "_");
        ConstantName::ALL
            .into_iter()
            .find(|c| c.as_str() == up)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown constant {s:?}")))
    }
}

type ConstMemo = RwLock<HashMap<(ConstantName, u32), Float>>;

fn const_memo() -> &'static ConstMemo {
    static MEMO: OnceLock<ConstMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The constant `name` correctly rounded to (at least) `p` good bits.
///
/// The value is computed at `p + 64` and `p + 128` bits; if the two disagree
/// beyond the target the working precision is doubled, at most twice.
pub fn constant(name: ConstantName, p: u32) -> Result<Float> {
    check_precision(p)?;
    if let Some(v) = const_memo().read().expect("constant memo poisoned").get(&(name, p)) {
        return Ok(v.clone());
    }
    let mut lo = p + 64;
    let mut hi = p + 128;
    for _ in 0..=2 {
        let a = raw_constant(name, lo);
        let b = raw_constant(name, hi);
        if agree_bits(&a, &b) >= i64::from(p) + 16 {
            let v = Float::with_val(p, &b);
            const_memo().write().expect("constant memo poisoned").insert((name, p), v.clone());
            return Ok(v);
        }
        lo *= 2;
        hi *= 2;
    }
    Err(Error::Convergence(format!("constant {} did not stabilise at {p} bits", name.as_str())))
}

/// Shorthand for `constant(Pi, p)`; π is always computable.
pub fn pi(p: u32) -> Float {
    if p < MIN_PRECISION {
        return Float::with_val(p, Constant::Pi);
    }
    constant(ConstantName::Pi, p).expect("pi")
}

fn raw_constant(name: ConstantName, w: u32) -> Float {
    match name {
        ConstantName::Pi => Float::with_val(w, Constant::Pi),
        ConstantName::Log2 => Float::with_val(w, Constant::Log2),
        ConstantName::Zeta2 => {
            let pi = Float::with_val(w, Constant::Pi);
            pi.square() / 6
        }
        ConstantName::Zeta3 => apery_zeta3(w),
        ConstantName::Beta4 => cohen_villegas_zagier(w, |k| {
            let d = Float::with_val(w + 16, 2 * k + 1);
            Float::with_val(w + 16, d.square_ref()).square().recip()
        }),
        ConstantName::Catalan => cohen_villegas_zagier(w, |k| {
            let d = Float::with_val(w + 16, 2 * k + 1);
            d.square().recip()
        }),
        ConstantName::LogPhi => {
            let s5 = Float::with_val(w, 5).sqrt();
            ((s5 + 1u32) / 2u32).ln()
        }
    }
}

/// `ζ(3) = 5/2 Σ_{n≥1} (-1)^{n-1} / (n^3 C(2n, n))`.
fn apery_zeta3(w: u32) -> Float {
    let wp = w + 16;
    let n_terms = w / 2 + 8;
    let mut sum = Float::new(wp);
    let mut binom = Integer::from(1);
    for n in 1..=n_terms {
        // C(2n, n) = C(2n-2, n-1) * 2(2n-1) / n
        binom *= 2 * (2 * n - 1);
        binom /= n;
        let denom = Integer::from(n).pow(3) * &binom;
        let term = Float::with_val(wp, 1) / denom;
        if n % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Float::with_val(w, sum * 5u32 / 2u32)
}

/// Alternating sum `Σ_{k≥0} (-1)^k a_k` for totally monotone `a_k`, using the
/// Cohen–Rodriguez Villegas–Zagier acceleration (algorithm 1).
pub fn cohen_villegas_zagier<F>(w: u32, a: F) -> Float
where
    F: Fn(u32) -> Float,
{
    let wp = w + 32;
    // convergence rate (3 + √8)^{-n}, log2(3 + √8) ≈ 2.543
    let n = ((f64::from(w) + 10.0) / 2.54).ceil() as u32 + 1;
    let base = Float::with_val(wp, 8).sqrt() + 3u32;
    let mut d: Float = base.pow(n);
    let dr = Float::with_val(wp, d.recip_ref());
    d = (d + dr) / 2u32;
    let mut b = Float::with_val(wp, -1);
    let mut c = Float::with_val(wp, -&d);
    let mut s = Float::new(wp);
    let nn = i64::from(n);
    for k in 0..n {
        c = Float::with_val(wp, &b - &c);
        s += Float::with_val(wp, &c * &a(k));
        let kk = i64::from(k);
        b *= (kk + nn) * (kk - nn);
        b /= Float::with_val(wp, kk) + 0.5f64;
        b /= kk + 1;
    }
    Float::with_val(w, s / d)
}

/// `ζ(n)` for integer `n >= 2` via MPFR, used for series coefficients.
pub fn zeta_int(n: u32, p: u32) -> Float {
    Float::with_val(p, Float::zeta_u(n))
}
