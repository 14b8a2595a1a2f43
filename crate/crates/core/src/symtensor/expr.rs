//! Arithmetic expressions over named variables and the formal-sum grammar.
//!
//! Expressions use integer and decimal literals, `+ - * / ^`, parentheses and
//! implicit multiplication (`2x`, `x(1-x)`). `−`, `·` and `×` are accepted as
//! their ASCII forms. The names `xi`/`ξ` and `eta`/`η` stand for `1-x` and
//! `1-y`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rug::ops::Pow;
use rug::{Integer, Rational};

use super::poly::RatFunc;
use crate::numkernel::PrecComplex;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    pub fn num(q: Rational) -> Self {
        Expr::Num(q)
    }

    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    /// Parse a complete expression.
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser::new(text);
        let e = p.expr()?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.error(format!("unexpected '{c}'")));
        }
        Ok(e)
    }

    /// Free variables.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Simultaneous substitution of variables.
    pub fn substitute(&self, map: &BTreeMap<String, Expr>) -> Expr {
        let bx = |e: &Expr| Box::new(e.substitute(map));
        match self {
            Expr::Num(_) => self.clone(),
            Expr::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Expr::Neg(a) => Expr::Neg(bx(a)),
            Expr::Pow(a, k) => Expr::Pow(bx(a), *k),
            Expr::Add(a, b) => Expr::Add(bx(a), bx(b)),
            Expr::Sub(a, b) => Expr::Sub(bx(a), bx(b)),
            Expr::Mul(a, b) => Expr::Mul(bx(a), bx(b)),
            Expr::Div(a, b) => Expr::Div(bx(a), bx(b)),
        }
    }

    /// Exact rational function in `var`; `None` on division by zero.
    /// Any other free variable is an error.
    pub fn to_ratfunc(&self, var: &str) -> Result<Option<RatFunc>> {
        if let Some(other) = self.variables().into_iter().find(|v| v != var) {
            return Err(Error::InvalidArgument(format!("free variable '{other}' besides '{var}'")));
        }
        Ok(self.ratfunc(var))
    }

    fn ratfunc(&self, var: &str) -> Option<RatFunc> {
        Some(match self {
            Expr::Num(q) => RatFunc::constant(q.clone()),
            Expr::Var(_) => RatFunc::x(),
            Expr::Neg(a) => a.ratfunc(var)?.neg(),
            Expr::Pow(a, k) => a.ratfunc(var)?.powi(*k)?,
            Expr::Add(a, b) => a.ratfunc(var)?.add(&b.ratfunc(var)?),
            Expr::Sub(a, b) => a.ratfunc(var)?.sub(&b.ratfunc(var)?),
            Expr::Mul(a, b) => a.ratfunc(var)?.mul(&b.ratfunc(var)?),
            Expr::Div(a, b) => a.ratfunc(var)?.div(&b.ratfunc(var)?)?,
        })
    }

    /// Exact value; `None` on division by zero or an unassigned variable.
    pub fn eval_rational(&self, env: &BTreeMap<String, Rational>) -> Option<Rational> {
        Some(match self {
            Expr::Num(q) => q.clone(),
            Expr::Var(v) => env.get(v)?.clone(),
            Expr::Neg(a) => -a.eval_rational(env)?,
            Expr::Pow(a, k) => {
                let b = a.eval_rational(env)?;
                if b == 0 && *k < 0 {
                    return None;
                }
                let mut acc = Rational::from(1);
                for _ in 0..k.unsigned_abs() {
                    acc *= &b;
                }
                if *k < 0 {
                    acc.recip()
                } else {
                    acc
                }
            }
            Expr::Add(a, b) => a.eval_rational(env)? + b.eval_rational(env)?,
            Expr::Sub(a, b) => a.eval_rational(env)? - b.eval_rational(env)?,
            Expr::Mul(a, b) => a.eval_rational(env)? * b.eval_rational(env)?,
            Expr::Div(a, b) => {
                let d = b.eval_rational(env)?;
                if d == 0 {
                    return None;
                }
                a.eval_rational(env)? / d
            }
        })
    }

    /// Value at complex points; `None` on an exact division by zero or an
    /// unassigned variable.
    pub fn eval_complex(&self, env: &BTreeMap<String, PrecComplex>, p: u32) -> Option<PrecComplex> {
        Some(match self {
            Expr::Num(q) => PrecComplex::from_rational(p, q),
            Expr::Var(v) => env.get(v)?.with_prec(p),
            Expr::Neg(a) => -a.eval_complex(env, p)?,
            Expr::Pow(a, k) => {
                let b = a.eval_complex(env, p)?;
                if b.is_zero() && *k < 0 {
                    return None;
                }
                b.powi(i32::try_from(*k).ok()?)
            }
            Expr::Add(a, b) => &a.eval_complex(env, p)? + &b.eval_complex(env, p)?,
            Expr::Sub(a, b) => &a.eval_complex(env, p)? - &b.eval_complex(env, p)?,
            Expr::Mul(a, b) => &a.eval_complex(env, p)? * &b.eval_complex(env, p)?,
            Expr::Div(a, b) => {
                let d = b.eval_complex(env, p)?;
                if d.is_zero() {
                    return None;
                }
                &a.eval_complex(env, p)? / &d
            }
        })
    }

    fn prec_level(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(q) if *q < 0 || *q.denom() != 1 => 3,
            Expr::Num(_) | Expr::Var(_) => 5,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &Expr, min: u8| if e.prec_level() < min { format!("({e})") } else { e.to_string() };
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Neg(a) => write!(f, "-{}", wrap(a, 3)),
            Expr::Pow(a, k) => write!(f, "{}^{k}", wrap(a, 5)),
            Expr::Add(a, b) => write!(f, "{} + {}", a, wrap(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", a, wrap(b, 2)),
            Expr::Mul(a, b) => write!(f, "{}*{}", wrap(a, 2), wrap(b, 3)),
            Expr::Div(a, b) => write!(f, "{}/{}", wrap(a, 2), wrap(b, 4)),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    /// Added to every reported position.
    base: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0, base: 0 }
    }

    fn error(&self, msg: String) -> Error {
        Error::Parse { pos: self.base + self.pos, msg }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next().map(normalize)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.src[self.pos..].chars().next()?;
        self.pos += c.len_utf8();
        Some(normalize(c))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].chars().next().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|c| c == '(' || c.is_ascii_digit() || c == '.' || is_ident_start(c))
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let neg = self.eat('-');
            self.skip_ws();
            let start = self.pos;
            let k = self.integer()?;
            let k = i64::try_from(k).map_err(|_| Error::Parse { pos: self.base + start, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<Integer> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'".into()));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while self.peek().is_some_and(|c| is_ident_start(c) || c.is_ascii_digit()) {
                    self.bump();
                }
                let name = &self.src[start..self.pos];
                Ok(match name {
                    "xi" | "ξ" => one_minus("x"),
                    "eta" | "η" => one_minus("y"),
                    _ => Expr::var(name),
                })
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        let int_part = &self.src[start..self.pos];
        let mut value = if int_part.is_empty() { Rational::new() } else { Rational::from(int_part.parse::<Integer>().expect("digits")) };
        if self.peek() == Some('.') {
            self.bump();
            let fs = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.bump();
            }
            let frac = &self.src[fs..self.pos];
            if frac.is_empty() && int_part.is_empty() {
                return Err(Error::Parse { pos: self.base + start, msg: "malformed number".into() });
            }
            if !frac.is_empty() {
                let num: Integer = frac.parse().expect("digits");
                let den = Integer::from(10).pow(frac.len() as u32);
                value += Rational::from((num, den));
            }
        }
        Ok(Expr::Num(value))
    }
}

fn normalize(c: char) -> char {
    match c {
        '−' | '–' => '-',
        '·' | '×' | '⋅' => '*',
        c => c,
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn one_minus(v: &str) -> Expr {
    Expr::Sub(Box::new(Expr::Num(Rational::from(1))), Box::new(Expr::var(v)))
}

/// One `coeff · [argument]` term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalTerm {
    pub coeff: Rational,
    pub arg: Expr,
}

impl FormalTerm {
    /// The argument is the literal constant `1`.
    pub fn is_literal_one(&self) -> bool {
        matches!(&self.arg, Expr::Num(q) if *q == 1)
    }
}

impl fmt::Display for FormalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*[{}]", self.coeff, self.arg)
    }
}

/// Formal ℚ-linear combination `Σ nᵢ [xᵢ]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum {
    pub terms: Vec<FormalTerm>,
}

/// Rational sample points used to decide whether a multivariate argument is
/// identically 0 or 1: the argument is fixed at several values of all but
/// one variable and tested exactly in the remaining one.
const SAMPLE_VALUES: [(i64, i64); 3] = [(2, 7), (-3, 13), (11, 19)];

impl FormalSum {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.iter().flat_map(|t| t.arg.variables()).collect()
    }

    pub fn push(&mut self, coeff: Rational, arg: Expr) {
        self.terms.push(FormalTerm { coeff, arg });
    }

    pub fn extend(&mut self, other: FormalSum) {
        self.terms.extend(other.terms);
    }

    /// Apply a simultaneous substitution, rejecting terms that become
    /// degenerate (identically 0, 1 or undefined).
    pub fn substitute(&self, map: &BTreeMap<String, Expr>) -> Result<FormalSum> {
        let out = FormalSum {
            terms: self.terms.iter().map(|t| FormalTerm { coeff: t.coeff.clone(), arg: t.arg.substitute(map) }).collect(),
        };
        let bad: Vec<String> = out
            .terms
            .iter()
            .zip(&self.terms)
            .filter(|(t, _)| degeneracy(t).is_some())
            .map(|(t, src)| format!("{} -> {}", src, t))
            .collect();
        if !bad.is_empty() {
            return Err(Error::Degenerate(format!("substitution makes terms degenerate: {}", bad.join("; "))));
        }
        Ok(out)
    }

    /// Univariate form in `var`: exact `(coefficient, argument)` pairs.
    pub fn univariate(&self, var: &str) -> Result<Vec<(Rational, RatFunc)>> {
        self.terms
            .iter()
            .map(|t| {
                let f = t.arg.to_ratfunc(var)?.ok_or_else(|| Error::Degenerate(format!("argument of {t} is undefined")))?;
                Ok((t.coeff.clone(), f))
            })
            .collect()
    }

    /// Univariate form with equal arguments combined and zero coefficients
    /// dropped, in first-occurrence order.
    pub fn merged(&self, var: &str) -> Result<Vec<(Rational, RatFunc)>> {
        let mut out: Vec<(Rational, RatFunc)> = Vec::new();
        for (c, f) in self.univariate(var)? {
            match out.iter_mut().find(|(_, g)| *g == f) {
                Some(slot) => slot.0 += c,
                None => out.push((c, f)),
            }
        }
        out.retain(|(c, _)| *c != 0);
        Ok(out)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if t.coeff < 0 { " - " } else { " + " })?;
                write!(f, "{}*[{}]", Rational::from(t.coeff.abs_ref()), t.arg)?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

/// Why a term is unusable, if it is: argument identically 0, identically 1
/// (other than the literal `[1]`), or undefined.
fn degeneracy(t: &FormalTerm) -> Option<&'static str> {
    if t.is_literal_one() {
        return None;
    }
    let vars: Vec<String> = t.arg.variables().into_iter().collect();
    let Some((main, rest)) = vars.split_first() else {
        return match t.arg.eval_rational(&BTreeMap::new()) {
            None => Some("undefined"),
            Some(v) if v == 0 => Some("identically 0"),
            Some(v) if v == 1 => Some("identically 1"),
            Some(_) => None,
        };
    };
    let mut samples: Vec<BTreeMap<String, Expr>> = Vec::new();
    if rest.is_empty() {
        samples.push(BTreeMap::new());
    } else {
        for k in 0..SAMPLE_VALUES.len() {
            let mut m = BTreeMap::new();
            for (j, v) in rest.iter().enumerate() {
                let (a, b) = SAMPLE_VALUES[(k + j) % SAMPLE_VALUES.len()];
                m.insert(v.clone(), Expr::Num(Rational::from((a, b))));
            }
            samples.push(m);
        }
    }
    let mut zero = true;
    let mut one = true;
    for s in &samples {
        match t.arg.substitute(s).to_ratfunc(main) {
            Ok(Some(f)) => {
                zero &= f.is_zero();
                one &= f.is_one();
            }
            _ => return Some("undefined"),
        }
    }
    if zero {
        Some("identically 0")
    } else if one {
        Some("identically 1")
    } else {
        None
    }
}

/// Parse `Σ [sign] [coeff] [*] [ expr ]`, e.g. `6*[x] - 3/2[x*y]`.
pub fn parse_formal_sum(text: &str) -> Result<FormalSum> {
    let mut p = Parser::new(text);
    let mut sum = FormalSum::default();
    loop {
        p.skip_ws();
        if p.peek().is_none() {
            break;
        }
        let term_start = p.pos;
        let mut sign = 1i64;
        let mut saw_sign = false;
        loop {
            if p.eat('+') {
                saw_sign = true;
            } else if p.eat('-') {
                sign = -sign;
                saw_sign = true;
            } else {
                break;
            }
        }
        if !sum.is_empty() && !saw_sign {
            return Err(p.error("expected '+' or '-' between terms".into()));
        }
        p.skip_ws();
        let mut coeff = Rational::from(1);
        if p.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            let Expr::Num(c) = p.number()? else { unreachable!() };
            coeff = c;
            if p.eat('/') {
                p.skip_ws();
                let d = p.integer()?;
                if d == 0 {
                    return Err(p.error("zero denominator in coefficient".into()));
                }
                coeff /= Rational::from(d);
            }
            p.eat('*');
        }
        if !p.eat('[') {
            return Err(p.error("expected '['".into()));
        }
        let close = match p.src[p.pos..].find(']') {
            Some(i) => p.pos + i,
            None => return Err(p.error("missing ']'".into())),
        };
        let mut inner = Parser { src: &p.src[..close], pos: p.pos, base: p.base };
        let arg = inner.expr()?;
        inner.skip_ws();
        if inner.pos != close {
            return Err(inner.error(format!("unexpected '{}'", inner.peek().unwrap_or(' '))));
        }
        p.pos = close + 1;
        let term = FormalTerm { coeff: coeff * sign, arg };
        if let Some(why) = degeneracy(&term) {
            return Err(Error::Degenerate(format!(
                "term '{}' at byte {}: argument is {why}",
                text[term_start..p.pos].trim(),
                term_start
            )));
        }
        sum.terms.push(term);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::from((a, b))
    }

    #[test]
    fn expressions() {
        let e = Expr::parse("x^2 y / ((1 − y)^2 (1-x))").unwrap();
        let env: BTreeMap<String, Rational> = [("x".to_string(), q(1, 2)), ("y".to_string(), q(1, 3))].into();
        assert_eq!(e.eval_rational(&env).unwrap(), q(1, 4) * q(1, 3) / (q(4, 9) * q(1, 2)));
        assert_eq!(Expr::parse("-x^2").unwrap().eval_rational(&env).unwrap(), q(-1, 4));
        assert_eq!(Expr::parse("2^-2 + 0.25").unwrap().eval_rational(&env).unwrap(), q(1, 2));
        assert_eq!(Expr::parse("ξ·η").unwrap().eval_rational(&env).unwrap(), q(1, 3));
        let back = Expr::parse(&e.to_string()).unwrap();
        assert_eq!(back.eval_rational(&env), e.eval_rational(&env));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Expr::parse("x + * 2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse_formal_sum("6*[x] - 3*[x*y") {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_formal_sum("[x] [y]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn formal_sums() {
        let s = parse_formal_sum("6*[x] - 3*[x*y]").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.terms[1].coeff, -3);
        let s = parse_formal_sum("-3/2 [x/(1-x)] + 0.5[1]").unwrap();
        assert_eq!(s.terms[0].coeff, q(-3, 2));
        assert!(s.terms[1].is_literal_one());
        assert!(matches!(parse_formal_sum("[x - x]"), Err(Error::Degenerate(_))));
        assert!(matches!(parse_formal_sum("2[x/x]"), Err(Error::Degenerate(_))));
        assert!(matches!(parse_formal_sum("[x*y/(y*x)]"), Err(Error::Degenerate(_))));
        assert!(parse_formal_sum("[x*y]").is_ok());
    }
}
