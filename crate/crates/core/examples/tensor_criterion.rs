//! Exact factorization and the tensor criterion for functional equations.

use std::collections::BTreeMap;

use apery_verify::symtensor::{builtin, factor, parse_formal_sum, tensor_invariant, Builtin, Expr};

fn main() -> apery_verify::Result<()> {
    let f = Expr::parse("(1-2t)/((1-t)^3 (1+t))")?.to_ratfunc("t")?.expect("defined");
    let fe = factor(&f).expect("nonzero");
    println!("factor {f}:");
    println!("  sign {}, primes {:?}", fe.sign, fe.primes);
    for (q, e) in &fe.irreducibles {
        println!("  ({q})^{e}");
    }
    assert_eq!(fe.reconstruct(), f);

    let three = parse_formal_sum("[x/(1-x)] + [(1-2x)/(1-x)] + [-x/(1-2x)] - [1]")?;
    println!("three-term equation, m = 3: {}", tensor_invariant(&three, 3, "x")?);

    let control = parse_formal_sum("[x] + [1-x]")?;
    println!("[x] + [1-x], m = 3:\n{}", tensor_invariant(&control, 3, "x")?.render("x"));

    let g = builtin(Builtin::G, &BTreeMap::new())?;
    println!("G: {} terms, tensor zero: {}", g.len(), tensor_invariant(&g, 3, "x")?.is_zero());

    for y in ["1/3", "-2", "5/7"] {
        let subst = [("y".to_string(), Expr::parse(y)?)].into();
        let f = builtin(Builtin::F, &subst)?;
        let merged = f.merged("x")?.len();
        println!("F(x, {y}): {} terms ({merged} distinct), tensor zero: {}", f.len(), tensor_invariant(&f, 4, "x")?.is_zero());
    }
    Ok(())
}
