//! Exact factorization of rational functions over ℚ.
//!
//! Pipeline per polynomial: content, squarefree decomposition, rational-root
//! stripping, then Berlekamp mod a small prime with Hensel lifting and
//! factor recombination for whatever is left.

use std::collections::BTreeMap;

use rug::integer::IsPrime;
use rug::ops::Pow;
use rug::{Integer, Rational};

use super::poly::{RatFunc, RatPoly};

/// Multiplicative generator: a positive prime or a monic irreducible polynomial.
/// Primes order before polynomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Prime(Integer),
    Poly(RatPoly),
}

impl Gen {
    pub fn is_prime(&self) -> bool {
        matches!(self, Gen::Prime(_))
    }

    pub fn render(&self, var: &str) -> String {
        match self {
            Gen::Prime(p) => p.to_string(),
            Gen::Poly(q) => format!("({})", q.render(var)),
        }
    }
}

/// `sign · ∏ p^e · ∏ q(t)^f` with primes `p` and monic irreducible `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredElement {
    pub sign: i8,
    pub primes: BTreeMap<Integer, i64>,
    pub irreducibles: BTreeMap<RatPoly, i64>,
}

impl FactoredElement {
    fn unit(sign: i8) -> Self {
        FactoredElement { sign, primes: BTreeMap::new(), irreducibles: BTreeMap::new() }
    }

    /// Multiply the factors back together.
    pub fn reconstruct(&self) -> RatFunc {
        let mut num = RatPoly::constant(Rational::from(self.sign));
        let mut den = RatPoly::one();
        let mut c = Rational::from(1);
        for (p, &e) in &self.primes {
            let pe = Rational::from(p.clone().pow(e.unsigned_abs() as u32));
            if e > 0 {
                c *= pe;
            } else {
                c /= pe;
            }
        }
        num = num.scale(&c);
        for (q, &e) in &self.irreducibles {
            let qe = q.pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &qe;
            } else {
                den = &den * &qe;
            }
        }
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// Exponent vector over the generators, sign dropped.
    pub fn generators(&self) -> BTreeMap<Gen, i64> {
        let mut v = BTreeMap::new();
        for (p, &e) in &self.primes {
            v.insert(Gen::Prime(p.clone()), e);
        }
        for (q, &e) in &self.irreducibles {
            v.insert(Gen::Poly(q.clone()), e);
        }
        v
    }
}

/// Factor a nonzero rational function; `None` for zero.
pub fn factor(f: &RatFunc) -> Option<FactoredElement> {
    if f.is_zero() {
        return None;
    }
    let mut out = FactoredElement::unit(1);
    accumulate(&mut out, f.num(), 1);
    accumulate(&mut out, f.den(), -1);
    out.primes.retain(|_, e| *e != 0);
    out.irreducibles.retain(|_, e| *e != 0);
    Some(out)
}

fn accumulate(out: &mut FactoredElement, f: &RatPoly, dir: i64) {
    let (content, prim) = f.to_primitive();
    let mut constant = content;
    for (g, e) in factor_primitive(&prim) {
        // g = lc · monic(g)
        let lc = g.last().cloned().expect("nonconstant factor");
        let lc_pow = lc.clone().pow(e as u32);
        constant *= Rational::from(lc_pow);
        let monic = RatPoly::from_integers(&g).monic();
        *out.irreducibles.entry(monic).or_default() += dir * e as i64;
    }
    if constant < 0 {
        out.sign = -out.sign;
        constant = -constant;
    }
    let (n, d) = constant.into_numer_denom();
    for (p, e) in factor_integer(&n) {
        *out.primes.entry(p).or_default() += dir * e as i64;
    }
    for (p, e) in factor_integer(&d) {
        *out.primes.entry(p).or_default() -= dir * e as i64;
    }
}

/// Prime factorization of `|n|`, ascending; empty for `|n| ≤ 1`.
pub fn factor_integer(n: &Integer) -> Vec<(Integer, u32)> {
    let mut n = Integer::from(n.abs_ref());
    let mut out: BTreeMap<Integer, u32> = BTreeMap::new();
    if n <= 1 {
        return Vec::new();
    }
    let mut d = 2u32;
    while d <= 1000 && n > 1 {
        while n.is_divisible_u(d) {
            n /= d;
            *out.entry(Integer::from(d)).or_default() += 1;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m <= 1 {
            continue;
        }
        if m.is_probably_prime(30) != IsPrime::No {
            *out.entry(m).or_default() += 1;
            continue;
        }
        let f = pollard_brent(&m);
        let g = Integer::from(&m / &f);
        stack.push(f);
        stack.push(g);
    }
    out.into_iter().collect()
}

/// A nontrivial factor of the odd composite `n`.
fn pollard_brent(n: &Integer) -> Integer {
    let mut c = Integer::from(1);
    loop {
        let f = |y: &Integer| Integer::from(y * y + &c) % n;
        let (mut x, mut y) = (Integer::from(2), Integer::from(2));
        let mut g = Integer::from(1);
        while g == 1 {
            x = f(&x);
            y = f(&f(&y));
            g = Integer::from(&x - &y).gcd(n);
        }
        if &g != n {
            return g;
        }
        c += 1;
    }
}

/// Irreducible factors of a primitive integer polynomial with positive
/// leading coefficient, each primitive with positive leading coefficient,
/// with multiplicities. Constants yield no factors.
pub fn factor_primitive(f: &[Integer]) -> Vec<(Vec<Integer>, u32)> {
    let rf = RatPoly::from_integers(f);
    if rf.is_constant() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (s, mult) in squarefree(&rf) {
        let (_, prim) = s.to_primitive();
        for g in factor_squarefree(prim) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

/// Yun's squarefree decomposition: nonconstant monic pieces with multiplicity.
pub fn squarefree(f: &RatPoly) -> Vec<(RatPoly, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = RatPoly::gcd(f, &df);
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let mut c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = RatPoly::gcd(&b, &d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Factor a squarefree primitive polynomial with positive leading coefficient.
fn factor_squarefree(mut f: Vec<Integer>) -> Vec<Vec<Integer>> {
    let mut out = Vec::new();
    // rational roots a/b: a | f(0), b | lc
    loop {
        if f.len() <= 2 {
            break;
        }
        match rational_root(&f) {
            Some(lin) => {
                f = int_div_exact(&f, &lin).expect("root factor divides");
                out.push(lin);
            }
            None => break,
        }
    }
    if f.len() >= 2 {
        if f.len() <= 4 {
            // degree ≤ 3 without rational roots
            out.push(f);
        } else {
            out.extend(zassenhaus(&f));
        }
    }
    out
}

/// A linear factor `b t - a` of `f`, primitive with `b > 0`, if one exists.
fn rational_root(f: &[Integer]) -> Option<Vec<Integer>> {
    if f[0] == 0 {
        return Some(vec![Integer::new(), Integer::from(1)]);
    }
    let nums = divisors(&f[0]);
    let dens = divisors(f.last().expect("nonzero"));
    for b in &dens {
        for a in &nums {
            for sa in [Integer::from(a), Integer::from(-a)] {
                if Integer::from(sa.gcd_ref(b)) != 1 {
                    continue;
                }
                let lin = vec![Integer::from(-&sa), b.clone()];
                if int_div_exact(f, &lin).is_some() {
                    return Some(lin);
                }
            }
        }
    }
    None
}

fn divisors(n: &Integer) -> Vec<Integer> {
    let mut ds = vec![Integer::from(1)];
    for (p, e) in factor_integer(n) {
        let cur = ds.clone();
        let mut pk = Integer::from(1);
        for _ in 0..e {
            pk *= &p;
            ds.extend(cur.iter().map(|d| Integer::from(d * &pk)));
        }
    }
    ds.sort();
    ds
}

/// Exact quotient over ℤ, or `None` when `d` does not divide `f`.
fn int_div_exact(f: &[Integer], d: &[Integer]) -> Option<Vec<Integer>> {
    let dd = d.len() - 1;
    if f.len() < d.len() {
        return None;
    }
    let lead = d.last().expect("nonzero divisor");
    let mut r = f.to_vec();
    let mut q = vec![Integer::new(); f.len() - dd];
    for k in (0..q.len()).rev() {
        let top = &r[k + dd];
        if !top.is_divisible(lead) {
            return None;
        }
        let c = Integer::from(top.div_exact_ref(lead));
        for (j, dc) in d.iter().enumerate() {
            r[k + j] -= Integer::from(&c * dc);
        }
        q[k] = c;
    }
    r.iter().all(|c| *c == 0).then_some(q)
}

// ---- arithmetic in F_p[t], coefficients low to high ----

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_from_int(f: &[Integer], p: u64) -> Fp {
    fp_trim(f.iter().map(|c| c.mod_u(p as u32) as u64).collect())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let r = Integer::from(a).invert(&Integer::from(p)).expect("unit mod p");
    r.to_u64().expect("small")
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    fp_trim(c)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a.clone());
    }
    let inv = inv_mod(*b.last().expect("nonzero"), p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bj % p) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = fp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant
    let inv = inv_mod(r0[0], p);
    let sc = |v: Fp| fp_trim(v.into_iter().map(|c| c * inv % p).collect());
    (sc(s0), sc(t0))
}

/// Monic irreducible factors of a monic squarefree polynomial (Berlekamp).
fn berlekamp(f: &Fp, p: u64) -> Vec<Fp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // rows: t^{ip} mod f
    let mut rows = Vec::with_capacity(n);
    let xp = {
        let mut acc = vec![1u64];
        let mut base = vec![0u64, 1];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // kernel of (Q - I)^T: vectors v with Σ_i v_i (row_i - e_i) = 0
    let mut m: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| (rows[i][j] + if i == j { p - 1 } else { 0 }) % p).collect()).collect();
    let basis = nullspace(&mut m, p);
    let r = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis.iter() {
        if factors.len() == r {
            break;
        }
        let g = fp_trim(v.clone());
        if g.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut pending = vec![u];
            for s in 0..p {
                let gs = fp_sub(&g, &vec![s], p);
                let mut split = Vec::new();
                for w in pending {
                    let d = fp_gcd(&w, &gs, p);
                    if d.len() > 1 && d.len() < w.len() {
                        let q = fp_divrem(&w, &d, p).0;
                        split.push(d);
                        split.push(fp_monic(&q, p));
                    } else {
                        split.push(w);
                    }
                }
                pending = split;
            }
            next.extend(pending);
        }
        factors = next;
    }
    factors
}

/// Basis of the right kernel of `m` over F_p.
fn nullspace(m: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = m[0].len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[i][fc]) % p;
            }
            v
        })
        .collect()
}

// ---- Hensel lifting and recombination ----

fn int_mul_mod(a: &[Integer], b: &[Integer], m: &Integer) -> Vec<Integer> {
    let mut c = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += Integer::from(x * y);
        }
    }
    c.into_iter().map(|v| modulo(v, m)).collect()
}

/// Least nonnegative residue.
fn modulo(a: Integer, m: &Integer) -> Integer {
    let r = a % m;
    if r < 0 {
        r + m
    } else {
        r
    }
}

fn fp_to_int(a: &Fp) -> Vec<Integer> {
    a.iter().map(|&c| Integer::from(c)).collect()
}

/// Lift `f ≡ g h (mod p)` with `h` monic to `f ≡ G H (mod p^k)`; returns `H`.
fn hensel_lift_monic(f: &[Integer], g: &Fp, h: &Fp, p: u64, k: u32) -> Vec<Integer> {
    let (s, t) = fp_bezout(g, h, p);
    let pz = Integer::from(p);
    let mut gi = fp_to_int(g);
    // carry the true leading coefficient so f - g h drops in degree
    let lc = f.last().expect("nonzero").clone();
    *gi.last_mut().expect("nonzero") = modulo(lc, &Integer::from(&pz).pow(k));
    let mut hi = fp_to_int(h);
    let mut pj = pz.clone();
    for _ in 1..k {
        let next = Integer::from(&pj * &pz);
        let prod = int_mul_mod(&gi, &hi, &next);
        let n = f.len().max(prod.len());
        let e: Vec<Integer> = (0..n)
            .map(|i| {
                let fi = f.get(i).cloned().unwrap_or_default();
                let pi = prod.get(i).cloned().unwrap_or_default();
                modulo(fi - pi, &next) / &pj
            })
            .collect();
        let e = fp_trim(e.iter().map(|c| c.mod_u(p as u32) as u64).collect());
        // g δh + h δg ≡ e, deg δh < deg h
        let (q, dh) = fp_divrem(&fp_mul(&e, &s, p), h, p);
        let dg = fp_add(&fp_mul(&e, &t, p), &fp_mul(&q, g, p), p);
        for (i, c) in dg.iter().enumerate() {
            if i >= gi.len() {
                gi.resize(i + 1, Integer::new());
            }
            gi[i] += Integer::from(*c) * &pj;
        }
        for (i, c) in dh.iter().enumerate() {
            hi[i] += Integer::from(*c) * &pj;
        }
        pj = next;
    }
    hi
}

fn centered(a: &[Integer], m: &Integer) -> Vec<Integer> {
    let half = Integer::from(m >> 1u32);
    a.iter()
        .map(|c| {
            let r = modulo(c.clone(), m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn primitive_positive(a: Vec<Integer>) -> Vec<Integer> {
    let mut g = Integer::new();
    for c in &a {
        g.gcd_mut(c);
    }
    if a.last().is_some_and(|l| *l < 0) {
        g = -g;
    }
    let mut v: Vec<Integer> = a.into_iter().map(|c| Integer::from(c.div_exact_ref(&g))).collect();
    while v.last() == Some(&Integer::ZERO) {
        v.pop();
    }
    v
}

/// Irreducible factors of a squarefree primitive polynomial of degree ≥ 4.
fn zassenhaus(f: &[Integer]) -> Vec<Vec<Integer>> {
    let n = f.len() - 1;
    let lc = f.last().expect("nonzero").clone();
    let df: Vec<Integer> = f.iter().enumerate().skip(1).map(|(i, c)| Integer::from(c * i as u32)).collect();
    let mut p = Integer::from(3);
    let p = loop {
        let pu = p.to_u64().expect("small prime");
        if !lc.is_divisible(&p) {
            let fp = fp_from_int(f, pu);
            let g = fp_gcd(&fp, &fp_from_int(&df, pu), pu);
            if g.len() == 1 {
                break pu;
            }
        }
        p.next_prime_mut();
    };
    let fp = fp_monic(&fp_from_int(f, p), p);
    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // p^k > 2 · 2^n (n+1) max|f_i| |lc|
    let maxc = f.iter().map(|c| Integer::from(c.abs_ref())).max().expect("nonempty");
    let bound = Integer::from(2) * (Integer::from(1) << n as u32) * Integer::from(n + 1) * maxc * Integer::from(lc.abs_ref());
    let mut k = 1u32;
    let mut pk = Integer::from(p);
    while pk <= bound {
        pk *= p;
        k += 1;
    }
    let lc_p = lc.mod_u(p as u32) as u64;
    let lifted: Vec<Vec<Integer>> = modular
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let mut g = vec![lc_p];
            for (j, o) in modular.iter().enumerate() {
                if j != i {
                    g = fp_mul(&g, o, p);
                }
            }
            hensel_lift_monic(f, &g, h, p, k)
        })
        .collect();

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut rest = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for subset in combinations(remaining.len(), size) {
            let lc_rest = rest.last().expect("nonzero").clone();
            let mut g = vec![lc_rest];
            for &i in &subset {
                g = int_mul_mod(&g, &lifted[remaining[i]], &pk);
            }
            let cand = primitive_positive(centered(&g, &pk));
            if let Some(q) = int_div_exact(&rest, &cand) {
                out.push(cand);
                rest = q;
                let chosen: Vec<usize> = subset.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !chosen.contains(i));
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if rest.len() > 1 {
        out.push(primitive_positive(rest));
    }
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> Vec<Integer> {
        c.iter().map(|&v| Integer::from(v)).collect()
    }

    fn product(fs: &[(Vec<Integer>, u32)]) -> Vec<Integer> {
        let mut acc = RatPoly::one();
        for (g, e) in fs {
            acc = &acc * &RatPoly::from_integers(g).pow(*e);
        }
        acc.to_primitive().1
    }

    #[test]
    fn integers() {
        let n = Integer::from(2u64 * 2 * 3 * 1_000_003 * 1_000_033);
        let f = factor_integer(&n);
        assert_eq!(f.len(), 4);
        assert_eq!(f[0], (Integer::from(2), 2));
        assert_eq!(f[3].0, 1_000_033);
    }

    #[test]
    fn swinnerton_dyer_like_splits_mod_every_prime() {
        // t^4 - 10 t^2 + 1 is irreducible over ℚ but splits modulo every prime
        let f = ip(&[1, 0, -10, 0, 1]);
        let fs = factor_primitive(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, f);
    }

    #[test]
    fn mixed_product() {
        // (t^2+1)^2 (t^4+t+1) (2t-3)^3 (t^4 - 2)
        let a = RatPoly::from_integers(&ip(&[1, 0, 1])).pow(2);
        let b = RatPoly::from_integers(&ip(&[1, 1, 0, 0, 1]));
        let c = RatPoly::from_integers(&ip(&[-3, 2])).pow(3);
        let d = RatPoly::from_integers(&ip(&[-2, 0, 0, 0, 1]));
        let f = (&(&(&a * &b) * &c) * &d).to_primitive().1;
        let fs = factor_primitive(&f);
        assert_eq!(fs.len(), 4);
        assert_eq!(product(&fs), f);
    }

    #[test]
    fn quartic_product_of_quadratics() {
        // (t^2 - 2)(t^2 - 3) has no rational root
        let f = ip(&[6, 0, -5, 0, 1]);
        let fs = factor_primitive(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs), f);
    }
}
