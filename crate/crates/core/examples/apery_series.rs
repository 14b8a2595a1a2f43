//! Certified summation of the two central binomial series and comparison
//! with their conjectured closed forms.

use apery_verify::numkernel::{constant, ConstantName};
use apery_verify::series::{apery_sum, term_exact, SeriesVariant};
use rug::Float;

fn main() -> apery_verify::Result<()> {
    let digits = 80;
    let p = 400;
    let pi = constant(ConstantName::Pi, p)?;
    let z3 = constant(ConstantName::Zeta3, p)?;
    let b4 = constant(ConstantName::Beta4, p)?;

    for v in [SeriesVariant::Conj2Lhs, SeriesVariant::Conj1Lhs] {
        let first: Vec<String> = (0..4).map(|n| term_exact(v, n).to_string()).collect();
        println!("{v}: first terms {}", first.join(", "));
    }

    let (lhs, tail) = apery_sum(SeriesVariant::Conj2Lhs, p, digits)?;
    let rhs = Float::with_val(p, &b4 * 40u32) + Float::with_val(p, &pi * &z3) * 5u32 / 12u32;
    println!("conj2: {} terms, tail ≤ {:.2e}", tail.terms, tail.bound.to_f64());
    println!("  Σ      = {}", lhs.to_string_radix(10, Some(digits as usize)));
    println!("  closed = {}", rhs.to_string_radix(10, Some(digits as usize)));
    println!("  |diff| = {:.2e}", Float::with_val(p, &lhs - &rhs).abs().to_f64());

    let (lhs, tail) = apery_sum(SeriesVariant::Conj1Lhs, p, digits)?;
    let rhs = Float::with_val(p, &z3 * 14u32);
    println!("conj1: {} terms, tail ≤ {:.2e}", tail.terms, tail.bound.to_f64());
    println!("  |Σ - 14ζ(3)| = {:.2e}", Float::with_val(p, &lhs - &rhs).abs().to_f64());
    Ok(())
}
