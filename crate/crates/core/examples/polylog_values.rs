//! Classical polylogarithms at a few classical points.

use apery_verify::numkernel::{constant, ConstantName, PrecComplex};
use apery_verify::polylog::{li, li_real};
use rug::Float;

fn main() -> apery_verify::Result<()> {
    let p = 200;
    let half = Float::with_val(p, 0.5);
    let ln2 = constant(ConstantName::Log2, p)?;
    let pi = constant(ConstantName::Pi, p)?;

    // Li_2(1/2) = π²/12 - ln²2/2
    let li2 = li_real(2, &half, p)?;
    let closed = Float::with_val(p, pi.square_ref()) / 12u32 - Float::with_val(p, ln2.square_ref()) / 2u32;
    println!("Li_2(1/2)        = {}", li2.to_string_radix(10, Some(40)));
    println!("  closed form gap  {:.3e}", Float::with_val(p, &li2 - &closed).abs().to_f64());

    // Li_2(i) = -π²/48 + i G
    let v = li(2, &PrecComplex::i(p), p)?;
    let catalan = constant(ConstantName::Catalan, p)?;
    println!("Li_2(i)          = {} + {}i", v.re.to_string_radix(10, Some(30)), v.im.to_string_radix(10, Some(30)));
    println!("  Im - Catalan     {:.3e}", Float::with_val(p, &v.im - &catalan).abs().to_f64());

    // Li_3 across the three evaluation regimes
    for r in [0.5, 1.0, 2.0] {
        let z = PrecComplex::polar(&Float::with_val(p, r), &Float::with_val(p, 1.0));
        let v = li(3, &z, p)?;
        println!("Li_3({r}·e^i)     = {} + {}i", v.re.to_string_radix(10, Some(25)), v.im.to_string_radix(10, Some(25)));
    }
    Ok(())
}
