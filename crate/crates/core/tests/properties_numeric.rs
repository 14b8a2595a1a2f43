//! Property tests for the numeric modules: constants, polylogarithms,
//! single-valued polylogarithms, log-sine integrals and the series.

mod common;

use apery_verify::logsine::{lsc, lsc_pi, lsc_reflect, lshch, quadrature};
use apery_verify::numkernel::{agree_bits, constant, pi, pow2, ConstantName, PrecComplex};
use apery_verify::polylog::li;
use apery_verify::series::{partial_sum, tail_bound, term_exact, SeriesVariant};
use apery_verify::svpolylog::{check_distribution, d_classic, d_tilde};
use common::*;
use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Float, Rational};

const P: u32 = 192;

fn point(p: u32, r: f64, arg: f64) -> PrecComplex {
    PrecComplex::polar(&Float::with_val(p, r), &Float::with_val(p, arg))
}

fn cdist(a: &PrecComplex, b: &PrecComplex) -> Float {
    (a - b).abs()
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

#[test]
fn constants_are_stable_under_extra_precision() {
    for name in [
        ConstantName::Pi,
        ConstantName::Log2,
        ConstantName::Zeta2,
        ConstantName::Zeta3,
        ConstantName::Beta4,
        ConstantName::LogPhi,
        ConstantName::Catalan,
    ] {
        for p in [128, 256, 400] {
            let a = constant(name, p).unwrap();
            let b = constant(name, p + 64).unwrap();
            assert!(agree_bits(&a, &b) >= i64::from(p) - 10, "{name:?} at {p} bits");
        }
    }
}

/// Bernoulli numbers `B_0..B_n` from the standard recurrence.
fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::from(1)];
    for m in 1..=n {
        let mut s = Rational::new();
        let mut binom = rug::Integer::from(1);
        for (k, bk) in b.iter().enumerate() {
            s += Rational::from(&binom * bk);
            binom *= m + 1 - k;
            binom /= k + 1;
        }
        b.push(-s / Rational::from(m + 1));
    }
    b
}

#[test]
fn zeta3_matches_euler_maclaurin() {
    // Σ_{n<N} n^-3 + N^-2/2 + N^-3/2 + Σ_k B_2k (2k+1)/2 N^{-2k-2}
    let p = 256;
    let n = 100u32;
    let mut s = Float::new(p + 64);
    for k in 1..n {
        s += Float::with_val(p + 64, k).pow(-3);
    }
    let nf = Float::with_val(p + 64, n);
    s += Float::with_val(p + 64, (&nf).pow(-2)) / 2u32;
    s += Float::with_val(p + 64, (&nf).pow(-3)) / 2u32;
    let b = bernoulli(40);
    for k in 1..=20usize {
        let c = Rational::from(&b[2 * k] * (2 * k as u32 + 1)) / 2u32;
        s += Float::with_val(p + 64, &c) * Float::with_val(p + 64, (&nf).pow(-(2 * k as i32) - 2));
    }
    assert!(within(&s, &constant(ConstantName::Zeta3, p).unwrap(), 40));
}

// ---------------------------------------------------------------------------
// polylogarithms
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polylog_conjugation(r in 0.01f64..0.999, arg in -3.1f64..3.1, j in 1u32..=4) {
        let z = point(P, r, arg);
        let a = li(j, &z.conj(), P).unwrap();
        let b = li(j, &z, P).unwrap().conj();
        prop_assert!(cdist(&a, &b) < pow2(P, -(P as i32 - 10)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polylog_duplication(r in 0.01f64..0.9, arg in -3.1f64..3.1, j in 2u32..=4) {
        let z = point(P, r, arg);
        let lhs = li(j, &(&z * &z), P).unwrap();
        let sum = &li(j, &z, P).unwrap() + &li(j, &(-&z), P).unwrap();
        let rhs = sum.scale(&Float::with_val(P, 1u32 << (j - 1)));
        prop_assert!(cdist(&lhs, &rhs) < pow2(P, -(P as i32 - 20)));
    }

    #[test]
    fn polylog_derivative_ladder(r in 0.05f64..0.98, arg in -3.1f64..3.1, j in 2u32..=4) {
        // z d/dz Li_j(z) = Li_{j-1}(z)
        let z = point(P, r, arg);
        let h = pow2(P, -(P as i32) / 3);
        let up = z.scale(&Float::with_val(P, 1 + &h));
        let down = z.scale(&Float::with_val(P, 1 - &h));
        let diff = &li(j, &up, P).unwrap() - &li(j, &down, P).unwrap();
        let numeric = diff.scale(&Float::with_val(P, Float::with_val(P, &h * 2u32).recip_ref()));
        let exact = li(j - 1, &z, P).unwrap();
        let rel = Float::with_val(P, cdist(&numeric, &exact) / exact.abs());
        prop_assert!(rel < pow2(P, -(P as i32) / 3 + 8), "relative error {}", rel);
    }
}

#[test]
fn polylog_boundary_continuity() {
    for th in [0.3, 1.0, 2.5] {
        let th = Float::with_val(P, th);
        for j in 1..=4 {
            let edge = li(j, &PrecComplex::exp_i(&th), P).unwrap();
            let mut last = None;
            for k in [20, 40, 60] {
                let r = Float::with_val(P, 1 - pow2(P, -k));
                let err = cdist(&li(j, &PrecComplex::polar(&r, &th), P).unwrap(), &edge);
                if let Some(prev) = last {
                    assert!(err < prev, "j = {j}, θ = {}: no decrease at k = {k}", th.to_f64());
                }
                last = Some(err);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// single-valued polylogarithms
// ---------------------------------------------------------------------------

fn sign(m: u32) -> i32 {
    if m % 2 == 0 {
        -1
    } else {
        1
    }
}

/// The defining combination with the `j = 0` term, `Li_0 ≡ -1/2`, and the
/// correction `(1 - (-1)^m) log^{m-1}|x| (2 log|1-x| - log|x|) / (4 m!)`.
fn d_tilde_zero_form(m: u32, x: &PrecComplex, p: u32) -> Float {
    let w = p + 32;
    let x = x.with_prec(w);
    let l = x.abs().ln();
    let minus_l = Float::with_val(w, -&l);
    let fact = |n: u32| Float::with_val(w, Float::factorial(n));
    let mut s = PrecComplex::from_real(&(Float::with_val(w, (&minus_l).pow(m)) / fact(m) / -2i32));
    for j in 1..=m {
        let c = Float::with_val(w, (&minus_l).pow(m - j)) / fact(m - j);
        s = &s + &li(j, &x, w).unwrap().scale(&c);
    }
    let mut v = if m % 2 == 0 { s.im } else { s.re };
    if m % 2 == 1 {
        let l1 = x.one_minus().abs().ln();
        let corr = Float::with_val(w, (&l).pow(m - 1)) * (l1 * 2u32 - &l) / (fact(m) * 4u32) * 2u32;
        v += corr;
    }
    Float::with_val(p, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn d_tilde_inversion(r in 0.1f64..10.0, arg in -3.1f64..3.1, m in 2u32..=4) {
        prop_assume!((r - 1.0).abs() > 1e-3 || arg.abs() > 1e-3);
        let x = point(P, r, arg);
        let a = d_tilde(m, &x, P).unwrap();
        let b = d_tilde(m, &x.recip(), P).unwrap() * sign(m);
        prop_assert!(Float::with_val(P, a - b).abs() < pow2(P, -(P as i32 - 30)));
    }

    #[test]
    fn d_tilde_conjugation(r in 0.1f64..10.0, arg in -3.1f64..3.1, m in 2u32..=4) {
        prop_assume!((r - 1.0).abs() > 1e-3 || arg.abs() > 1e-3);
        let x = point(P, r, arg);
        let a = d_tilde(m, &x, P).unwrap();
        let b = d_tilde(m, &x.conj(), P).unwrap() * sign(m);
        prop_assert!(Float::with_val(P, a - b).abs() < pow2(P, -(P as i32 - 30)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn even_orders_vanish_on_the_real_line(x in -50.0f64..50.0, m in prop::sample::select(vec![2u32, 4])) {
        prop_assume!(x.abs() > 1e-6 && (x - 1.0).abs() > 1e-6);
        let v = d_tilde(m, &PrecComplex::from_f64(P, x, 0.0), P).unwrap();
        prop_assert!(v.is_zero() || v.abs() < pow2(P, -(P as i32 - 10)));
    }

    #[test]
    fn two_forms_of_the_definition_agree(r in 0.01f64..0.999, arg in -3.1f64..3.1, m in 2u32..=4) {
        let x = point(P, r, arg);
        prop_assume!(cdist(&x, &PrecComplex::one(P)) > Float::with_val(P, 1e-6));
        let a = d_tilde(m, &x, P).unwrap();
        let b = d_tilde_zero_form(m, &x, P);
        prop_assert!(within(&a, &b, 50), "{} vs {}", a, b);
    }

    #[test]
    fn distribution_relations(r in 0.1f64..3.0, arg in -3.1f64..3.1, m in 2u32..=4, n in 2u32..=3) {
        let x = point(P, r, arg);
        prop_assert!(check_distribution(m, n, &x, P).unwrap() < real("1e-35", P));
    }
}

#[test]
fn even_classic_equals_tilde() {
    for (r, a) in [(0.3, 0.4), (0.9, -2.0), (0.99, 3.0)] {
        let x = point(P, r, a);
        for m in [2, 4] {
            assert!(within(&d_classic(m, &x, P).unwrap(), &d_tilde(m, &x, P).unwrap(), 50));
        }
    }
}

#[test]
fn two_term_d2_on_the_circle() {
    // D_2(e^{iθ}) + D_2(1 - e^{iθ}) = 0
    let pi = pi(P);
    for k in 1..=20u32 {
        let th = Float::with_val(P, &pi * k) / 21u32;
        let u = PrecComplex::exp_i(&th);
        let s = d_tilde(2, &u, P).unwrap() + d_tilde(2, &u.one_minus(), P).unwrap();
        assert!(s.abs() < real("1e-50", P), "θ = {}π/21", k);
    }
}

#[test]
fn seam_disk_against_inversion() {
    for k in 0..24 {
        let th = Float::with_val(P, pi(P) * (2 * k + 1)) / 24u32;
        let x = PrecComplex::exp_i(&th);
        for m in 2..=4 {
            let direct = apery_verify::svpolylog::d_tilde_direct(m, &x, P).unwrap();
            let inv = d_tilde(m, &x.recip(), P).unwrap() * sign(m);
            assert!(agree_bits(&direct, &inv) >= i64::from(P) - 20 || within(&direct, &inv, 50));
        }
    }
}

// ---------------------------------------------------------------------------
// log-sine integrals
// ---------------------------------------------------------------------------

#[test]
fn reflection_identity() {
    let tol = pow2(P, -(P as i32 - 25));
    for (j, k) in [(1, 4), (2, 3), (3, 2), (4, 1)] {
        for i in 1..=10u32 {
            let th = Float::with_val(P, pi(P) * i) / 11u32;
            let a = lsc(j, k, &th, P).unwrap().value;
            let b = lsc_reflect(j, k, &th, P).unwrap();
            assert!(Float::with_val(P, a - b).abs() < tol, "({j},{k}) θ = {i}π/11");
        }
    }
}

#[test]
fn hyperbolic_duplication() {
    // Lsh_3(2x) = 2 Lsh_3(x) + 4 Lshch_{2,2}(x) + 2 Lshch_{1,3}(x)
    let phi = Float::with_val(P, Float::with_val(P, 5).sqrt() + 1u32) / 2u32;
    for x in [real("0.25", P), real("0.5", P), phi.ln(), real("1.5", P)] {
        let x2 = Float::with_val(P, &x * 2u32);
        let lhs = lshch(3, 1, &x2, P).unwrap().value;
        let rhs = lshch(3, 1, &x, P).unwrap().value * 2u32
            + lshch(2, 2, &x, P).unwrap().value * 4u32
            + lshch(1, 3, &x, P).unwrap().value * 2u32;
        assert!(within(&lhs, &rhs, 50), "x = {}", x.to_f64());
    }
}

#[test]
fn values_at_pi_match_quadrature() {
    let tol = pow2(P, -(P as i32 - 30));
    let pi = pi(P);
    for j in 1..=4 {
        for k in 1..=(5 - j) {
            let a = lsc_pi(j, k, P).unwrap();
            let b = lsc(j, k, &pi, P).unwrap().value;
            assert!(Float::with_val(P, &a - &b).abs() < tol, "({j},{k}): {a} vs {b}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn additivity_in_theta(t1 in 0.2f64..1.5, t2 in 1.6f64..2.9, j in 1u32..=3, k in 1u32..=2) {
        let (a, b) = (Float::with_val(P, t1), Float::with_val(P, t2));
        let w = P + 32;
        let f = |t: &Float, _: &Float, _: &Float| {
            let h = Float::with_val(w, t / 2u32);
            let s = (Float::with_val(w, h.sin_ref()) * 2u32).ln();
            let c = (Float::with_val(w, h.cos_ref()) * 2u32).ln();
            -Float::with_val(w, s.pow(j - 1)) * Float::with_val(w, c.pow(k - 1))
        };
        let middle = quadrature::integrate(&a, &b, &f, w, P + 8).unwrap().value;
        let lhs = lsc(j, k, &a, P).unwrap().value + middle;
        let rhs = lsc(j, k, &b, P).unwrap().value;
        prop_assert!(within(&lhs, &rhs, 50));
    }

    #[test]
    fn error_estimates_are_small(th in 0.05f64..6.2, j in 1u32..=4, k in 1u32..=2) {
        let q = lsc(j, k, &Float::with_val(P, th), P).unwrap();
        prop_assert!(q.error_estimate >= 0);
        prop_assert!(q.error_estimate < pow2(P, -(P as i32) + 16));
    }
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

#[test]
fn tail_bounds_hold() {
    let p = 400;
    for v in SeriesVariant::ALL {
        let mut prev: Option<Float> = None;
        for n in [10u64, 20, 40] {
            let bound = tail_bound(v, n, p);
            let gap = Float::with_val(p, partial_sum(v, 2 * n, p) - partial_sum(v, n, p)).abs();
            assert!(gap <= bound, "{v} N = {n}");
            if let Some(b) = prev {
                assert!(bound < b, "{v}: bound not decreasing at N = {n}");
            }
            prev = Some(bound);
        }
    }
}

#[test]
fn partial_sum_shapes() {
    let p = 256;
    let limit2 = partial_sum(SeriesVariant::Conj2Lhs, 200, p);
    let limit1 = partial_sum(SeriesVariant::Conj1Lhs, 200, p);
    let mut last = Float::new(p);
    for n in 1..=40u64 {
        let s2 = partial_sum(SeriesVariant::Conj2Lhs, n, p);
        assert!(s2 > last, "CONJ2 partial sums must increase");
        last = s2;
        // alternating: the error is bounded by the first omitted term
        let s1 = partial_sum(SeriesVariant::Conj1Lhs, n, p);
        let err = Float::with_val(p, &limit1 - &s1).abs();
        let next = Float::with_val(p, &term_exact(SeriesVariant::Conj1Lhs, n)).abs();
        assert!(err <= next, "CONJ1 N = {n}");
    }
    assert!(last < limit2);
}

#[test]
fn lhs_terms_decompose() {
    // a_n(CONJ2_LHS) = 41 a_n(CONJ2_A) + 9 a_n(CONJ2_B), a_n(CONJ1_LHS) = 17 a_n(CONJ1_A) + 5 a_n(CONJ1_B)
    for n in 0..60 {
        let c2 = term_exact(SeriesVariant::Conj2A, n) * 41u32 + term_exact(SeriesVariant::Conj2B, n) * 9u32;
        assert_eq!(term_exact(SeriesVariant::Conj2Lhs, n), c2);
        let c1 = term_exact(SeriesVariant::Conj1A, n) * 17u32 + term_exact(SeriesVariant::Conj1B, n) * 5u32;
        assert_eq!(term_exact(SeriesVariant::Conj1Lhs, n), c1);
    }
}
