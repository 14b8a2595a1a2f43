//! Exact factorization, the shipped combinations and the tensor criterion.

use std::collections::BTreeMap;

use apery_verify::identities::SpecialPoint;
use apery_verify::numkernel::{constant, ConstantName, PrecComplex};
use apery_verify::symtensor::{
    builtin, builtin_unspecialized, check_fe, factor, numeric_eval, parse_formal_sum, tensor_invariant, Builtin, Expr,
    FeFile, Gen, RatFunc, RatPoly,
};
use apery_verify::Error;
use rug::{Float, Integer, Rational};

fn rf(text: &str) -> RatFunc {
    Expr::parse(text).unwrap().to_ratfunc("t").unwrap().unwrap()
}

fn poly(coeffs: &[i64]) -> RatPoly {
    RatPoly::from_integers(&coeffs.iter().map(|&c| Integer::from(c)).collect::<Vec<_>>())
}

fn subst(var: &str, value: &str) -> BTreeMap<String, Expr> {
    [(var.to_string(), Expr::parse(value).unwrap())].into()
}

fn data(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn factor_mixed_product() {
    let f = rf("(1-2t)/((1-t)^3 (1+t))");
    let fe = factor(&f).unwrap();
    assert_eq!(fe.reconstruct(), f);
    assert_eq!(fe.sign, 1);
    assert_eq!(fe.primes.len(), 1);
    assert_eq!(fe.primes[&Integer::from(2)], 1);
    let half = RatPoly::from_coeffs(vec![Rational::from((-1, 2)), Rational::from(1)]);
    let expected: BTreeMap<RatPoly, i64> = [(half, 1), (poly(&[-1, 1]), -3), (poly(&[1, 1]), -1)].into();
    assert_eq!(fe.irreducibles, expected);
}

#[test]
fn factor_small_cases() {
    let fe = factor(&rf("t^2 - t")).unwrap();
    assert!(fe.primes.is_empty());
    assert_eq!(fe.irreducibles, [(poly(&[0, 1]), 1), (poly(&[-1, 1]), 1)].into());

    let fe = factor(&rf("(t^2+1)^2")).unwrap();
    assert_eq!(fe.irreducibles, [(poly(&[1, 0, 1]), 2)].into());

    let fe = factor(&rf("-12/(t^2 - 2)")).unwrap();
    assert_eq!(fe.sign, -1);
    assert_eq!(fe.primes, [(Integer::from(2), 2), (Integer::from(3), 1)].into());
    assert_eq!(fe.irreducibles, [(poly(&[-2, 0, 1]), -1)].into());

    assert!(factor(&RatFunc::constant(Rational::new())).is_none());
}

#[test]
fn factor_needs_more_than_rational_roots() {
    // (t² - 2)(t² - 3) has no rational root, t⁴ - 10t² + 1 is irreducible but splits mod every prime
    let fe = factor(&rf("(t^2-2)(t^2-3)")).unwrap();
    assert_eq!(fe.irreducibles, [(poly(&[-2, 0, 1]), 1), (poly(&[-3, 0, 1]), 1)].into());
    let fe = factor(&rf("t^4 - 10t^2 + 1")).unwrap();
    assert_eq!(fe.irreducibles.len(), 1);
    let f = rf("(t^3 - 2)^2 (t^4 - 10t^2 + 1) (3t + 5) / (7 (t^2 + t + 1)^3)");
    let fe = factor(&f).unwrap();
    assert_eq!(fe.reconstruct(), f);
    assert_eq!(fe.irreducibles.len(), 4);
    assert!(fe.generators().keys().any(|g| matches!(g, Gen::Prime(p) if *p == 7)));
}

#[test]
fn generators_are_ordered_primes_first() {
    let fe = factor(&rf("6 (t^2 + 1) / (t - 3)")).unwrap();
    let gens: Vec<Gen> = fe.generators().into_keys().collect();
    assert!(gens[0].is_prime() && gens[1].is_prime());
    // degree before coefficients
    assert_eq!(gens[2], Gen::Poly(poly(&[-3, 1])));
    assert_eq!(gens[3], Gen::Poly(poly(&[1, 0, 1])));
}

#[test]
fn parse_formal_sums() {
    let s = parse_formal_sum("6*[x] - 3*[x*y]").unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s.terms[1].coeff, -3);
    assert_eq!(parse_formal_sum("1/2*[x] + [xi/eta]").unwrap().terms[0].coeff, Rational::from((1, 2)));
    assert!(matches!(parse_formal_sum("2*[x"), Err(Error::Parse { pos: 3, .. })));
    assert!(matches!(parse_formal_sum("[x] +"), Err(Error::Parse { .. })));
    assert!(matches!(parse_formal_sum("[x-x]"), Err(Error::Degenerate(m)) if m.contains("[x-x]")));
    assert!(matches!(parse_formal_sum("[1-x+x]"), Err(Error::Degenerate(_))));
    assert!(matches!(parse_formal_sum("[x/(1-1)]"), Err(Error::Degenerate(_))));
    // the constant term is allowed
    assert_eq!(parse_formal_sum("-34*[1]").unwrap().len(), 1);
}

#[test]
fn expressions_round_trip() {
    for text in ["x^2*y/((1-y)^2 (1-x))", "-(1-x)*y/(1-y)", "(1-2x)/(1-x)^3", "1/3 + x/7"] {
        let e = Expr::parse(text).unwrap();
        let again = Expr::parse(&e.to_string()).unwrap();
        let env: BTreeMap<String, Rational> =
            [("x".to_string(), Rational::from((2, 7))), ("y".to_string(), Rational::from((-3, 5)))].into();
        assert_eq!(e.eval_rational(&env), again.eval_rational(&env), "{text}");
    }
}

#[test]
fn shipped_combination_sizes() {
    assert_eq!(builtin_unspecialized(Builtin::H).len(), 11);
    assert_eq!(builtin_unspecialized(Builtin::F).len(), 22);
    let f = builtin(Builtin::F, &subst("y", "1/3")).unwrap();
    assert_eq!(f.len(), 22);
    assert!(f.merged("x").unwrap().len() <= 22);
    let g = builtin(Builtin::G, &BTreeMap::new()).unwrap();
    assert_eq!(g.len(), 21);
    assert!(g.terms.iter().any(|t| t.coeff == -34 && t.is_literal_one()));
    assert_eq!(builtin(Builtin::ThreeTerm, &BTreeMap::new()).unwrap().len(), 4);
    for b in Builtin::ALL {
        assert_eq!(b.name().parse::<Builtin>().unwrap(), b);
    }
    assert!("nope".parse::<Builtin>().is_err());
}

#[test]
fn builtin_rejects_bad_substitutions() {
    // F needs y fixed; substituting a degenerate value names the terms
    assert!(matches!(builtin(Builtin::F, &BTreeMap::new()), Err(Error::InvalidArgument(_))));
    assert!(matches!(builtin(Builtin::F, &subst("y", "0")), Err(Error::Degenerate(_))));
    assert!(matches!(builtin(Builtin::F, &subst("y", "1")), Err(Error::Degenerate(_))));
}

#[test]
fn f_vanishes_in_both_roles() {
    for c in ["1/3", "2/5", "-2", "5/7", "-1/6"] {
        let fx = builtin(Builtin::F, &subst("y", c)).unwrap();
        assert!(tensor_invariant(&fx, 4, "x").unwrap().is_zero(), "F(x, {c})");
        let fy = builtin(Builtin::F, &subst("x", c)).unwrap();
        assert!(tensor_invariant(&fy, 4, "y").unwrap().is_zero(), "F({c}, y)");
    }
}

#[test]
fn g_and_its_parts_vanish() {
    for b in [Builtin::G, Builtin::Sub1, Builtin::Sub2, Builtin::Sub3, Builtin::ThreeTerm] {
        let s = builtin(b, &BTreeMap::new()).unwrap();
        assert!(tensor_invariant(&s, b.order(), "x").unwrap().is_zero(), "{b}");
    }
}

#[test]
fn single_terms_do_not_vanish() {
    let t = tensor_invariant(&parse_formal_sum("[t]").unwrap(), 3, "t").unwrap();
    assert!(!t.is_zero());
    // t ⊗ (t ∧ (1 - t)) up to the sign of 1 - t
    assert_eq!(t.len(), 1);
    let control = check_fe(&data("control.fe")).unwrap();
    assert!(!control.is_zero());
    assert!(tensor_invariant(&parse_formal_sum("[x]").unwrap(), 5, "x").is_err());
}

#[test]
fn constant_arguments_contribute_nothing() {
    let s = parse_formal_sum("[x/(1-x)] + [(1-2x)/(1-x)] + [-x/(1-2x)]").unwrap();
    let with_one = parse_formal_sum("[x/(1-x)] + [(1-2x)/(1-x)] + [-x/(1-2x)] - [1] + 5*[2/3]").unwrap();
    assert_eq!(tensor_invariant(&s, 3, "x").unwrap(), tensor_invariant(&with_one, 3, "x").unwrap());
}

#[test]
fn fe_files_check_out() {
    for name in ["G.fe", "F_y13.fe", "sub1.fe", "sub2.fe", "sub3.fe", "threeterm.fe"] {
        let out = check_fe(&data(name)).unwrap();
        assert!(out.is_zero(), "{name}: {}", out.tensor);
    }
    let file = FeFile::parse(&data("F_y13.fe")).unwrap();
    assert_eq!(file.m, 4);
    assert_eq!(file.specialized().unwrap().len(), 22);
}

#[test]
fn fe_file_errors() {
    assert!(FeFile::parse("[x]\n").is_err());
    assert!(matches!(FeFile::parse("m = 5\n[x]\n"), Err(Error::Unsupported(_))));
    assert!(matches!(FeFile::parse("m = 3\nfoo = 2\n"), Err(Error::Parse { .. })));
    let err = FeFile::parse("m = 3\n\n[x] + [y\n").unwrap_err();
    assert!(matches!(err, Error::Parse { pos, .. } if pos > 7));
    // a free variable other than `var` remains
    assert!(check_fe("m = 3\nvar = x\n[x*y]\n").is_err());
}

fn assign(pairs: &[(&str, PrecComplex)]) -> BTreeMap<String, PrecComplex> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

#[test]
fn numeric_evaluation_at_special_points() {
    let p = 192;
    let sp = SpecialPoint::new(p);
    let f = builtin_unspecialized(Builtin::F);
    let tol = Float::with_val(p, 1e-50);
    for (x, y) in [(sp.rho_pow(2), sp.rho_pow(4)), (sp.rho_pow(2), sp.rho_pow(1))] {
        let v = numeric_eval(&f, 4, &assign(&[("x", x), ("y", y)]), p).unwrap();
        assert!(v.abs() < tol);
    }
    let g = builtin(Builtin::G, &BTreeMap::new()).unwrap();
    let inv_phi = Float::with_val(p, sp.phi.recip_ref());
    for x in [PrecComplex::zero(p), PrecComplex::from_real(&-inv_phi)] {
        let v = numeric_eval(&g, 3, &assign(&[("x", x)]), p).unwrap();
        assert!(v.abs() < tol);
    }
}

#[test]
fn numeric_evaluation_rejects_bad_points() {
    let p = 192;
    let g = builtin(Builtin::G, &BTreeMap::new()).unwrap();
    // x = 1 makes denominators vanish
    assert!(matches!(numeric_eval(&g, 3, &assign(&[("x", PrecComplex::one(p))]), p), Err(Error::Degenerate(_))));
    assert!(numeric_eval(&g, 3, &BTreeMap::new(), p).is_err());
    let near = PrecComplex::from_f64(p, 1e-30, 0.0);
    let s = parse_formal_sum("[x]").unwrap();
    assert!(matches!(numeric_eval(&s, 3, &assign(&[("x", near)]), p), Err(Error::Degenerate(_))));
}

#[test]
fn zero_tensor_means_constant_not_zero() {
    // [x] + [1-x] + [1-1/x] has zero invariant; its value is the constant ζ(3)
    let p = 192;
    let s = parse_formal_sum("[x] + [1-x] + [1-1/x]").unwrap();
    assert!(tensor_invariant(&s, 3, "x").unwrap().is_zero());
    let z3 = constant(ConstantName::Zeta3, p).unwrap();
    for (re, im) in [(0.3, 0.45), (-2.0, 1.0), (5.0, -0.25)] {
        let v = numeric_eval(&s, 3, &assign(&[("x", PrecComplex::from_f64(p, re, im))]), p).unwrap();
        assert!(Float::with_val(p, v - &z3).abs() < Float::with_val(p, 1e-50));
    }
}
