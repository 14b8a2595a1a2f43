//! Dense univariate polynomials and rational functions over ℚ.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

use crate::numkernel::PrecComplex;

/// Polynomial with exact rational coefficients, lowest degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::new(), Rational::from(1)])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| Rational::from(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| Rational::from(c * i as u32)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.lead().recip();
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::new(); n - dd];
        for k in (0..n - dd).rev() {
            let c = Rational::from(&r[k + dd] * &lead_inv);
            if c != 0 {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= Rational::from(&c * dc);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (RatPoly::from_coeffs(q), RatPoly::from_coeffs(r))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &RatPoly) -> Option<RatPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_complex(&self, z: &PrecComplex) -> PrecComplex {
        let p = z.prec();
        let mut acc = PrecComplex::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &acc * z;
            acc = acc.add_real(&rug::Float::with_val(p, c));
        }
        acc
    }

    /// `self = c · P` with `P` a primitive integer polynomial with positive
    /// leading coefficient.
    pub fn to_primitive(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::new(), Vec::new());
        }
        let mut den = Integer::from(1);
        for c in &self.coeffs {
            den.lcm_mut(c.denom());
        }
        let ints: Vec<Integer> = self.coeffs.iter().map(|c| Integer::from(c.numer() * (&den / Integer::from(c.denom())))).collect();
        let mut g = Integer::new();
        for c in &ints {
            g.gcd_mut(c);
        }
        if ints.last().is_some_and(|l| *l < 0) {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| Integer::from(c.div_exact_ref(&g))).collect();
        (Rational::from((g, den)), prim)
    }

    /// Render in variable `var`, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let a = Rational::from(c.abs_ref());
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// Ordered by degree, then coefficient tuple from the constant term up.
impl Ord for RatPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for RatPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_default();
                let b = o.coeffs.get(i).cloned().unwrap_or_default();
                a + b
            })
            .collect();
        RatPoly::from_coeffs(c)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        self + &(-o)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect() }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![Rational::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += Rational::from(a * b);
            }
        }
        RatPoly::from_coeffs(c)
    }
}

/// Reduced quotient of polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    /// `num / den`, reduced; `None` if `den` is zero.
    pub fn new(num: RatPoly, den: RatPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc { num, den: RatPoly::one() });
        }
        let g = RatPoly::gcd(&num, &den);
        let (mut n, mut d) = (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"));
        let l = d.lead();
        if l != 1 {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Some(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RatFunc { num: p, den: RatPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(RatPoly::x())
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// No dependence on the variable.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value if [`is_constant`](Self::is_constant).
    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeffs().first().cloned().unwrap_or_default())
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(n, &self.den * &o.den).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }

    /// `None` on division by zero.
    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        if o.is_zero() {
            return None;
        }
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    /// Integer power; `None` for a negative power of zero.
    pub fn powi(&self, e: i64) -> Option<RatFunc> {
        let k = e.unsigned_abs() as u32;
        let r = RatFunc { num: self.num.pow(k), den: self.den.pow(k) };
        if e < 0 {
            RatFunc::from_poly(RatPoly::one()).div(&r)
        } else {
            RatFunc::new(r.num, r.den)
        }
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> RatFunc {
        RatFunc::from_poly(RatPoly::one()).sub(self)
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (d != 0).then(|| self.num.eval(x) / d)
    }

    pub fn render(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.render(var);
        }
        format!("({}) / ({})", self.num.render(var), self.den.render(var))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(c.iter().map(|&v| Rational::from(v)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(RatPoly::gcd(&a, &p(&[-2, 2])), p(&[-1, 1]));
    }

    #[test]
    fn ratfunc_normalization() {
        let f = RatFunc::new(p(&[-2, 0, 2]), p(&[3, 3])).unwrap();
        assert_eq!(f.num(), &p(&[-2, 2]).scale(&Rational::from((1, 3))));
        assert!(f.den().is_one());
        assert!(f.sub(&f).is_zero());
        assert!(f.div(&f).unwrap().is_one());
    }

    #[test]
    fn primitive_part() {
        let f = RatPoly::from_coeffs(vec![Rational::from((1, 2)), Rational::from((-3, 4))]);
        let (c, prim) = f.to_primitive();
        assert_eq!(prim, vec![Integer::from(-2), Integer::from(3)]);
        assert_eq!(c, Rational::from((-1, 4)));
    }
}
