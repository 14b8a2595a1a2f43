//! Exact symbolic checks of functional equations via the tensor criterion.
//!
//! A combination `Σ nᵢ [xᵢ(t)]` of rational functions is sent to
//! `Σ nᵢ xᵢ^{m-2} ⊗ (xᵢ ∧ (1 - xᵢ))` in `Sym^{m-2} ⊗ ∧²` of the multiplicative
//! group of ℚ(t), written over the basis of primes and monic irreducible
//! polynomials (signs are torsion and dropped). If that element vanishes,
//! `Σ nᵢ D̃_m(xᵢ(t))` is constant in `t`.

pub mod builtins;
pub mod expr;
pub mod factor;
pub mod fefile;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;

use rug::{Float, Rational};

pub use builtins::{builtin, builtin_unspecialized, Builtin};
pub use expr::{parse_formal_sum, Expr, FormalSum, FormalTerm};
pub use factor::{factor, FactoredElement, Gen};
pub use fefile::{check_fe, FeFile, FeOutcome};
pub use poly::{RatFunc, RatPoly};

use crate::numkernel::{check_precision, pow2, PrecComplex};
use crate::svpolylog::d_tilde;
use crate::{Error, Result};

/// Basis element `s₁·…·s_{m-2} ⊗ (a ∧ b)` with sorted `sᵢ` and `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorKey {
    pub sym: Vec<Gen>,
    pub wedge: (Gen, Gen),
}

impl TensorKey {
    /// Every generator is a prime.
    pub fn is_constant(&self) -> bool {
        self.sym.iter().all(Gen::is_prime) && self.wedge.0.is_prime() && self.wedge.1.is_prime()
    }
}

/// Element of `Sym^{m-2} ⊗ ∧²` with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    pub terms: BTreeMap<TensorKey, Rational>,
}

impl TensorElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: TensorKey, c: Rational) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&key);
        }
    }

    /// Drop keys built only from primes. Such a key is a constant of ℚ^×
    /// in every slot and contributes nothing to the derivative in `t`.
    pub fn without_constant_keys(mut self) -> Self {
        self.terms.retain(|k, _| !k.is_constant());
        self
    }

    /// Human-readable listing in variable `var`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| {
                let sym: Vec<String> = k.sym.iter().map(|g| g.render(var)).collect();
                format!("{c} · {} ⊗ ({} ∧ {})", sym.join("·"), k.wedge.0.render(var), k.wedge.1.render(var))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

/// Exponent vector of a nonzero rational function over the generators.
pub fn generator_vector(f: &RatFunc) -> Result<BTreeMap<Gen, i64>> {
    factor(f).map(|fe| fe.generators()).ok_or_else(|| Error::Degenerate("the zero function has no factorization".into()))
}

/// Put `c · (a ∧ b)` in canonical order; the diagonal `a ∧ a` vanishes.
pub fn canonical_wedge(a: Gen, b: Gen, c: Rational) -> Option<((Gen, Gen), Rational)> {
    match a.cmp(&b) {
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Less => Some(((a, b), c)),
        std::cmp::Ordering::Greater => Some(((b, a), -c)),
    }
}

/// All `(a ∧ b)` products of two generator vectors before canonicalization.
pub fn raw_wedge(u: &BTreeMap<Gen, i64>, v: &BTreeMap<Gen, i64>) -> Vec<(Gen, Gen, Rational)> {
    let mut out = Vec::new();
    for (a, ea) in u {
        for (b, eb) in v {
            out.push((a.clone(), b.clone(), Rational::from(ea * eb)));
        }
    }
    out
}

/// `v^k` in the symmetric power, as sorted multisets with multinomial weights.
fn sym_power(v: &BTreeMap<Gen, i64>, k: usize) -> Vec<(Vec<Gen>, Rational)> {
    let entries: Vec<(&Gen, i64)> = v.iter().map(|(g, &e)| (g, e)).collect();
    let mut out = Vec::new();
    fn rec(
        entries: &[(&Gen, i64)],
        start: usize,
        left: usize,
        cur: &mut Vec<Gen>,
        weight: Rational,
        out: &mut Vec<(Vec<Gen>, Rational)>,
    ) {
        if left == 0 {
            out.push((cur.clone(), weight));
            return;
        }
        for i in start..entries.len() {
            let (g, e) = entries[i];
            // choose j ≥ 1 copies of g
            let mut w = weight.clone();
            for j in 1..=left {
                w *= e;
                w /= j as u32;
                cur.push(g.clone());
                rec(entries, i + 1, left - j, cur, w.clone(), out);
            }
            for _ in 1..=left {
                cur.pop();
            }
        }
    }
    // multinomial k! / ∏ jᵢ! · ∏ eᵢ^{jᵢ}
    let mut fact = Rational::from(1);
    for j in 1..=k {
        fact *= j as u32;
    }
    rec(&entries, 0, k, &mut Vec::new(), fact, &mut out);
    out
}

/// Tensor invariant of a univariate combination in `var` for `m ∈ {3, 4}`,
/// modulo keys made only of constants.
///
/// Arguments independent of `var` (such as `[1]`) contribute nothing.
pub fn tensor_invariant(sum: &FormalSum, m: u32, var: &str) -> Result<TensorElement> {
    Ok(tensor_invariant_raw(sum, m, var)?.without_constant_keys())
}

/// [`tensor_invariant`] keeping the all-prime keys.
pub fn tensor_invariant_raw(sum: &FormalSum, m: u32, var: &str) -> Result<TensorElement> {
    if !(3..=4).contains(&m) {
        return Err(Error::Unsupported(format!("tensor criterion for m = {m}; only 3 and 4 are supported")));
    }
    let mut out = TensorElement::default();
    for term in &sum.terms {
        let x = term
            .arg
            .to_ratfunc(var)
            .map_err(|e| Error::InvalidArgument(format!("term {term}: {e}")))?
            .ok_or_else(|| Error::Degenerate(format!("term {term}: argument is undefined")))?;
        if x.is_constant() {
            continue;
        }
        let one_minus = x.one_minus();
        if x.is_zero() || one_minus.is_zero() {
            return Err(Error::Degenerate(format!("term {term}: argument is identically 0 or 1")));
        }
        let vx = generator_vector(&x)?;
        let v1 = generator_vector(&one_minus)?;
        let wedges: Vec<((Gen, Gen), Rational)> =
            raw_wedge(&vx, &v1).into_iter().filter_map(|(a, b, c)| canonical_wedge(a, b, c)).collect();
        for (sym, w) in sym_power(&vx, (m - 2) as usize) {
            let sw = Rational::from(&w * &term.coeff);
            for (pair, c) in &wedges {
                out.add_term(TensorKey { sym: sym.clone(), wedge: pair.clone() }, Rational::from(&sw * c));
            }
        }
    }
    Ok(out)
}

/// `Σ nᵢ D̃_m(xᵢ)` at a complex assignment of the free variables.
///
/// Arguments landing exactly on 0 or 1 are allowed (`D̃_m(0) = 0`); arguments
/// within `2^{-p/4}` of 0 or 1, beyond `2^{p/4}` in modulus, or hitting a
/// division by zero are rejected as degenerate.
pub fn numeric_eval(sum: &FormalSum, m: u32, assignment: &BTreeMap<String, PrecComplex>, p: u32) -> Result<Float> {
    check_precision(p)?;
    let w = p + 32;
    let near = pow2(w, -(p as i32) / 4);
    let far = pow2(w, (p as i32) / 4);
    let one = PrecComplex::one(w);
    let mut acc = Float::new(w);
    for term in &sum.terms {
        if let Some(v) = term.arg.variables().iter().find(|v| !assignment.contains_key(*v)) {
            return Err(Error::InvalidArgument(format!("variable '{v}' of term {term} is not assigned")));
        }
        let x = term
            .arg
            .eval_complex(assignment, w)
            .ok_or_else(|| Error::Degenerate(format!("term {term}: division by zero")))?;
        let exact = x.is_zero() || x == one;
        if !exact {
            let r = x.abs();
            let r1 = x.one_minus().abs();
            if r < near || r1 < near || r > far {
                return Err(Error::Degenerate(format!("term {term}: argument {x} is too close to 0, 1 or infinity")));
            }
        }
        let d = d_tilde(m, &x, w)?;
        acc += d * Float::with_val(w, &term.coeff);
    }
    Ok(Float::with_val(p, acc))
}
