//! Central binomial series with harmonic numbers.
//!
//! Terms are formed exactly (integer binomials, rational harmonic numbers) and
//! rounded once; partial sums carry a certified geometric tail bound derived
//! from `|a_{n+1} / a_n| <= (1 + 1/n) / 4`.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::logsine::{lsc, lshch};
use crate::numkernel::{check_precision, pow2};

/// Largest number of terms `apery_sum` will sum.
pub const MAX_TERMS: u64 = 10_000;

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> Integer {
    Integer::from(Integer::binomial_u(2 * n as u32, n as u32))
}

/// `H_n = Σ_{k=1}^n 1/k`, exactly.
pub fn harmonic(n: u64) -> Rational {
    // sum over a common denominator: n! would be wasteful, use pairwise merging
    fn range(lo: u64, hi: u64) -> (Integer, Integer) {
        if hi - lo == 1 {
            return (Integer::from(1), Integer::from(lo));
        }
        let mid = (lo + hi) / 2;
        let (a, b) = range(lo, mid);
        let (c, d) = range(mid, hi);
        (a * &d + c * &b, b * d)
    }
    if n == 0 {
        return Rational::new();
    }
    let (num, den) = range(1, n + 1);
    Rational::from((num, den))
}

/// The series whose values are certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesVariant {
    /// `Σ C(2n,n) / ((2n+1)^4 16^n)`
    Conj2A,
    /// `Σ C(2n,n) H_{2n} / ((2n+1)^3 16^n)`
    Conj2B,
    /// `Σ C(2n,n) / ((2n+1)^3 (-16)^n)`
    Conj1A,
    /// `Σ C(2n,n) H_{2n} / ((2n+1)^2 (-16)^n)`
    Conj1B,
    /// `Σ C(2n,n) / ((2n+1)^3 16^n) (9 H_{2n+1} + 32/(2n+1))`
    Conj2Lhs,
    /// `Σ C(2n,n) / ((2n+1)^2 (-16)^n) (5 H_{2n+1} + 12/(2n+1))`
    Conj1Lhs,
}

impl SeriesVariant {
    pub const ALL: [SeriesVariant; 6] = [
        SeriesVariant::Conj2A,
        SeriesVariant::Conj2B,
        SeriesVariant::Conj1A,
        SeriesVariant::Conj1B,
        SeriesVariant::Conj2Lhs,
        SeriesVariant::Conj1Lhs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesVariant::Conj2A => "conj2_a",
            SeriesVariant::Conj2B => "conj2_b",
            SeriesVariant::Conj1A => "conj1_a",
            SeriesVariant::Conj1B => "conj1_b",
            SeriesVariant::Conj2Lhs => "conj2_lhs",
            SeriesVariant::Conj1Lhs => "conj1_lhs",
        }
    }

    /// Whether the terms alternate in sign.
    pub fn alternating(self) -> bool {
        matches!(self, SeriesVariant::Conj1A | SeriesVariant::Conj1B | SeriesVariant::Conj1Lhs)
    }
}

impl fmt::Display for SeriesVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        SeriesVariant::ALL
            .into_iter()
            .find(|v| v.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown series variant {s:?}")))
    }
}

/// Number of summed terms and a certified bound on the remainder.
#[derive(Debug, Clone)]
pub struct TailBound {
    pub terms: u64,
    pub bound: Float,
}

/// Incremental exact term generator.
struct TermStream {
    variant: SeriesVariant,
    n: u64,
    binom: Integer,
    h2n: Rational,
}

impl TermStream {
    fn new(variant: SeriesVariant) -> Self {
        TermStream { variant, n: 0, binom: Integer::from(1), h2n: Rational::new() }
    }

    /// Exact term `a_n` for the current `n`, then advance.
    fn next_term(&mut self) -> Rational {
        let n = self.n;
        let odd = Integer::from(2 * n + 1);
        let sixteen = Integer::from(16).pow(n as u32);
        let sign = if self.variant.alternating() && n % 2 == 1 { -1 } else { 1 };
        let base = |pow: u32| Rational::from((self.binom.clone() * sign, odd.clone().pow(pow) * &sixteen));
        let h2n1 = Rational::from(&self.h2n + Rational::from((1, odd.clone())));
        let t = match self.variant {
            SeriesVariant::Conj2A => base(4),
            SeriesVariant::Conj2B => base(3) * &self.h2n,
            SeriesVariant::Conj1A => base(3),
            SeriesVariant::Conj1B => base(2) * &self.h2n,
            SeriesVariant::Conj2Lhs => base(3) * (h2n1 * 9u32 + Rational::from((32, odd.clone()))),
            SeriesVariant::Conj1Lhs => base(2) * (h2n1 * 5u32 + Rational::from((12, odd.clone()))),
        };
        // advance: C(2n+2, n+1) = C(2n, n) 2(2n+1)/(n+1);  H_{2n+2} = H_{2n} + 1/(2n+1) + 1/(2n+2)
        self.binom *= 2 * (2 * n + 1);
        self.binom /= n + 1;
        self.h2n += Rational::from((1, 2 * n + 1)) + Rational::from((1, 2 * n + 2));
        self.n += 1;
        t
    }
}

/// Exact term `a_n`.
pub fn term_exact(variant: SeriesVariant, n: u64) -> Rational {
    let mut s = TermStream::new(variant);
    let mut t = s.next_term();
    for _ in 0..n {
        t = s.next_term();
    }
    t
}

/// `Σ_{n=0}^{terms-1} a_n` at `p` bits, each term rounded once.
pub fn partial_sum(variant: SeriesVariant, terms: u64, p: u32) -> Float {
    let mut s = TermStream::new(variant);
    let mut acc = Float::new(p + 16);
    for _ in 0..terms {
        acc += Float::with_val(p + 16, &s.next_term());
    }
    Float::with_val(p, acc)
}

/// Certified bound on `Σ_{n>=N} |a_n|` from `|a_N|` and the ratio bound `(1 + 1/N)/4`.
pub fn tail_bound(variant: SeriesVariant, n_terms: u64, p: u32) -> Float {
    let a_n = term_exact(variant, n_terms).abs();
    tail_from_term(&a_n, n_terms, p)
}

fn tail_from_term(a_n: &Rational, n: u64, p: u32) -> Float {
    // 1 / (1 - (1 + 1/N)/4) = 4N / (3N - 1), with N >= 1
    let n = n.max(1);
    let factor = Rational::from((4 * n, 3 * n - 1));
    let exact = Rational::from(a_n * &factor);
    // round upward so the bound stays a bound
    let (f, _) = Float::with_val_round(p, &exact, rug::float::Round::Up);
    f
}

/// Sum `variant` until the certified tail is below `10^{-(target_digits + 5)}`.
pub fn apery_sum(variant: SeriesVariant, p: u32, target_digits: u32) -> Result<(Float, TailBound)> {
    check_precision(p)?;
    if target_digits < 10 {
        return Err(Error::InvalidArgument("target_digits must be at least 10".into()));
    }
    let needed = (f64::from(target_digits) * 3.33).ceil() as u32 + 64;
    if p < needed {
        return Err(Error::InvalidArgument(format!(
            "{target_digits} digits need at least {needed} bits of precision, got {p}"
        )));
    }
    let goal = Rational::from((1, Integer::from(10).pow(target_digits + 5)));
    let w = p + 16;
    let mut stream = TermStream::new(variant);
    let mut acc = Float::new(w);
    let mut next = stream.next_term();
    let mut n = 0u64;
    loop {
        acc += Float::with_val(w, &next);
        n += 1;
        next = stream.next_term();
        let bound = Rational::from(next.clone().abs() * Rational::from((4 * n, 3 * n - 1)));
        if bound < goal {
            let tb = TailBound { terms: n, bound: tail_from_term(&next.abs(), n, p) };
            return Ok((Float::with_val(p, acc), tb));
        }
        if n >= MAX_TERMS {
            return Err(Error::Convergence(format!("{variant}: tail not below target within {MAX_TERMS} terms")));
        }
    }
}

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

/// Closed forms of the auxiliary generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenFunc {
    /// `Σ_{n≥1} C(2n,n) z^n / (2n) = log(1 + χ)`, `0 <= z < 1/4`
    BinomHalf,
    /// `Σ_{n≥1} C(2n,n) H_{2n-1} z^n = 2/(1-χ) [χ log(1+χ) - (1+χ) log(1-χ)]`, `0 <= z < 1/4`
    BinomH,
    /// `Σ_{n≥1} C(2n,n) H_{2n} z^{2n+1}`, `0 <= z < 1/2`
    H2nTrig,
    /// `Σ_{n≥1} C(2n,n) H_{2n} (-1)^n z^{2n+1}`, `0 <= z < 1/2`
    H2nHyp,
}

/// `χ = (1 - √(1-4z)) / (1 + √(1-4z))`.
pub fn chi(z: &Float) -> Float {
    let w = z.prec();
    let s = Float::with_val(w, 1 - Float::with_val(w, z * 4u32)).sqrt();
    Float::with_val(w, 1 - &s) / Float::with_val(w, 1 + &s)
}

/// Closed form of the generating function `which` at `z`.
pub fn genfunc_closed(which: GenFunc, z: &Float, p: u32) -> Result<Float> {
    check_precision(p)?;
    let w = p + 16;
    let z = Float::with_val(w, z);
    let limit = match which {
        GenFunc::BinomHalf | GenFunc::BinomH => Float::with_val(w, 0.25f64),
        GenFunc::H2nTrig | GenFunc::H2nHyp => Float::with_val(w, 0.5f64),
    };
    if z < 0 || z >= limit {
        return Err(Error::Domain(format!("generating function argument {} outside [0, {})", z.to_f64(), limit.to_f64())));
    }
    let v = match which {
        GenFunc::BinomHalf => Float::with_val(w, 1 + chi(&z)).ln(),
        GenFunc::BinomH => {
            let c = chi(&z);
            let l1 = Float::with_val(w, 1 + &c).ln();
            let l2 = Float::with_val(w, 1 - &c).ln();
            let inner = Float::with_val(w, &c * &l1) - Float::with_val(w, 1 + &c) * l2;
            inner * 2u32 / Float::with_val(w, 1 - &c)
        }
        GenFunc::H2nTrig | GenFunc::H2nHyp => {
            // z/√(1 ∓ 4z²) (log(2/(1+s)) - 2 log(2s/(1+s))), s = √(1 ∓ 4z²)
            let z2 = Float::with_val(w, z.square_ref()) * 4u32;
            let s = if which == GenFunc::H2nTrig { Float::with_val(w, 1 - z2) } else { Float::with_val(w, 1 + z2) }.sqrt();
            let one_s = Float::with_val(w, 1 + &s);
            let a = Float::with_val(w, 2 / Float::with_val(w, &one_s)).ln();
            let b = Float::with_val(w, Float::with_val(w, &s * 2u32) / &one_s).ln();
            Float::with_val(w, &z / &s) * (a - b * 2u32)
        }
    };
    Ok(Float::with_val(p, v))
}

// ---------------------------------------------------------------------------
// Series <-> integral reductions
// ---------------------------------------------------------------------------

/// The four reduction lemmas turning binomial series into log-trig integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionFamily {
    /// `Σ C(2n,n) z^{2n+1}/(2n+1)^{p+1}` in terms of `Ls_{j+1}(2θ)`, `θ = arcsin 2z`
    LscPlain,
    /// alternating analogue with `Lsh_{j+1}(2θ)`, `θ = arcsinh 2z`
    LshchPlain,
    /// `Σ C(2n,n) H_{2n} z^{2n+1}/(2n+1)^p` in terms of `Lsc`
    LscHarmonic,
    /// alternating analogue with `Lshch`
    LshchHarmonic,
}

impl ReductionFamily {
    pub const ALL: [ReductionFamily; 4] =
        [ReductionFamily::LscPlain, ReductionFamily::LshchPlain, ReductionFamily::LscHarmonic, ReductionFamily::LshchHarmonic];

    fn hyperbolic(self) -> bool {
        matches!(self, ReductionFamily::LshchPlain | ReductionFamily::LshchHarmonic)
    }

    fn harmonic(self) -> bool {
        matches!(self, ReductionFamily::LscHarmonic | ReductionFamily::LshchHarmonic)
    }

    pub fn name(self) -> &'static str {
        match self {
            ReductionFamily::LscPlain => "lsc-plain",
            ReductionFamily::LshchPlain => "lshch-plain",
            ReductionFamily::LscHarmonic => "lsc-harmonic",
            ReductionFamily::LshchHarmonic => "lshch-harmonic",
        }
    }
}

/// Direct sum of the series side with a certified tail: `(value, tail)`.
pub fn reduction_series(family: ReductionFamily, p_exp: u32, z: &Float, prec: u32) -> Result<(Float, Float)> {
    let w = prec + 32;
    let z = Float::with_val(w, z);
    let z2 = Float::with_val(w, z.square_ref());
    let q = Float::with_val(w, &z2 * 4u32);
    let pow = if family.harmonic() { p_exp } else { p_exp + 1 };
    let target = pow2(w, -(prec as i32) - 10);
    let mut binom = Integer::from(1);
    let mut h2n = Rational::new();
    let mut zpow = z.clone(); // z^{2n+1}
    let mut acc = Float::new(w);
    let edge = q >= 1;
    let max_terms: u64 = if edge { 20_000 } else { 2_000_000 };
    for n in 0u64.. {
        let odd = Integer::from(2 * n + 1);
        let mut t = Float::with_val(w, &binom) * &zpow / Float::with_val(w, odd.pow(pow));
        if family.harmonic() {
            t *= Float::with_val(w, &h2n);
        }
        if family.hyperbolic() && n % 2 == 1 {
            t = -t;
        }
        let abs_t = Float::with_val(w, t.abs_ref());
        if n >= 1 && !edge {
            let ratio = if family.harmonic() { Float::with_val(w, &q * (n + 1)) / n } else { q.clone() };
            if ratio < 1 {
                let tail = abs_t.clone() / (1 - ratio);
                if tail < target {
                    return Ok((acc, tail));
                }
            }
        }
        if n + 1 >= max_terms {
            let tail = if edge { edge_tail(&abs_t, n, pow, family.harmonic(), &h2n, w) } else {
                return Err(Error::Convergence(format!("{}: series did not reach its tail target", family.name())));
            };
            return Ok((acc, tail));
        }
        acc += t;
        binom *= 2 * (2 * n + 1);
        binom /= n + 1;
        h2n += Rational::from((1, 2 * n + 1)) + Rational::from((1, 2 * n + 2));
        zpow *= &z2;
    }
    unreachable!()
}

/// Polynomial tail bound at `4z² = 1`, for the remainder starting at term `n` with `|a_n| = a`.
///
/// With `s = pow + 1/2`, `a_M <= a_n ((n + 3/2)/(M + 3/2))^s`; harmonic numbers add
/// a factor `(M/n)^{1/H_{2n}}`.
fn edge_tail(a: &Float, n: u64, pow: u32, harmonic: bool, h2n: &Rational, w: u32) -> Float {
    let n_f = Float::with_val(w, n);
    let s = Float::with_val(w, pow) + 0.5f64;
    let eps = if harmonic { Float::with_val(w, h2n).recip() } else { Float::new(w) };
    let expo = Float::with_val(w, &s - &eps) - 1u32;
    if expo <= 0 {
        return Float::with_val(w, f64::INFINITY);
    }
    // a [1 + (n+3/2)^s n^{-ε} n^{1+ε-s} / (s - 1 - ε)]
    let base = Float::with_val(w, &n_f + 1.5f64);
    let factor = Float::with_val(w, base.pow(&s)) * Float::with_val(w, (&n_f).pow(Float::with_val(w, 1 - &s)));
    Float::with_val(w, a * (factor / expo + 1u32))
}

fn binom_u(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Integral side of a reduction lemma at `z`.
pub fn reduction_integral(family: ReductionFamily, p_exp: u32, z: &Float, prec: u32) -> Result<Float> {
    let w = prec + 16;
    let z = Float::with_val(w, z);
    let two_z = Float::with_val(w, &z * 2u32);
    let theta = if family.hyperbolic() { two_z.asinh() } else { two_z.asin() };
    let two_theta = Float::with_val(w, &theta * 2u32);
    // log(2 sin θ) = log(2 sinh θ) = log(4z)
    let l = Float::with_val(w, &z * 4u32).ln();
    let lpow = |e: u32| -> Float { Float::with_val(w, (&l).pow(e)) };
    let single = |j: u32, k: u32, x: &Float| -> Result<Float> {
        Ok(if family.hyperbolic() { lshch(j, k, x, w)?.value } else { lsc(j, k, x, w)?.value })
    };
    let mut acc = Float::new(w);
    if !family.harmonic() {
        let p = p_exp;
        let pf = Float::with_val(w, &factorial(p));
        acc += Float::with_val(w, &theta * &lpow(p)) / 2u32 / &pf;
        for j in 1..=p {
            let mut t = Float::with_val(w, &binom_u(p, j)) * lpow(p - j) * single(j + 1, 1, &two_theta)?;
            if j % 2 == 0 {
                t = -t;
            }
            acc += t / 4u32 / &pf;
        }
    } else {
        let p = p_exp;
        let pf = Float::with_val(w, &factorial(p - 1));
        for j in 1..=p {
            let mut inner = single(j, 2, &two_theta)? / 2u32;
            for l_idx in 1..=j {
                inner -= Float::with_val(w, &binom_u(j - 1, l_idx - 1)) * single(l_idx, j - l_idx + 2, &theta)?;
            }
            let mut t = Float::with_val(w, &binom_u(p - 1, j - 1)) * lpow(p - j) * inner;
            if j % 2 == 0 {
                t = -t;
            }
            acc += t / &pf;
        }
    }
    Ok(Float::with_val(prec, acc))
}

/// `|series - integral form| + tail bound` for one of the reduction lemmas.
pub fn series_to_integral_residual(family: ReductionFamily, p_exp: u32, z: &Float, prec: u32) -> Result<Float> {
    check_precision(prec)?;
    let half = Float::with_val(prec, 0.5f64);
    if *z <= 0 || *z > half {
        return Err(Error::Domain(format!("reduction lemmas need 0 < z <= 1/2, got {}", z.to_f64())));
    }
    if family == ReductionFamily::LshchHarmonic && *z == half {
        return Err(Error::Domain("the harmonic hyperbolic reduction excludes z = 1/2".into()));
    }
    if family.harmonic() && p_exp == 0 {
        return Err(Error::InvalidArgument("harmonic reductions need p >= 1".into()));
    }
    let max_p = if family.harmonic() { 4 } else { 5 };
    if p_exp > max_p {
        return Err(Error::Unsupported(format!("{} needs log-trig weights beyond 6 for p = {p_exp}", family.name())));
    }
    let (lhs, tail) = reduction_series(family, p_exp, z, prec)?;
    let rhs = reduction_integral(family, p_exp, z, prec)?;
    let w = prec + 32;
    Ok(Float::with_val(prec, Float::with_val(w, &lhs - &rhs).abs() + tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorics() {
        assert_eq!(central_binomial(0), 1);
        assert_eq!(central_binomial(2), 6);
        assert_eq!(central_binomial(5), 252);
        assert_eq!(harmonic(0), 0);
        assert_eq!(harmonic(1), 1);
        assert_eq!(harmonic(4), Rational::from((25, 12)));
    }

    #[test]
    fn first_terms() {
        assert_eq!(term_exact(SeriesVariant::Conj2Lhs, 0), 41);
        assert_eq!(term_exact(SeriesVariant::Conj1Lhs, 0), 17);
        assert_eq!(partial_sum(SeriesVariant::Conj2Lhs, 1, 64), 41);
        // n = 1 term of the alternating harmonic series: -2 * (3/2) / (9 * 16)
        assert_eq!(term_exact(SeriesVariant::Conj1B, 1), Rational::from((-1, 48)));
    }

    #[test]
    fn preconditions() {
        assert!(apery_sum(SeriesVariant::Conj1A, 100, 60).is_err());
        assert!(apery_sum(SeriesVariant::Conj1A, 300, 5).is_err());
        let z = Float::with_val(64, 0.3);
        assert!(genfunc_closed(GenFunc::BinomHalf, &z, 64).is_err());
        assert!(series_to_integral_residual(ReductionFamily::LscHarmonic, 0, &z, 64).is_err());
        let half = Float::with_val(64, 0.5);
        assert!(series_to_integral_residual(ReductionFamily::LshchHarmonic, 1, &half, 64).is_err());
    }
}
