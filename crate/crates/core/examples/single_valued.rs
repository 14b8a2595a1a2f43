//! Single-valued polylogarithms and the relations they satisfy.

use apery_verify::numkernel::PrecComplex;
use apery_verify::svpolylog::{check_distribution, d_tilde};
use rug::Float;

fn main() -> apery_verify::Result<()> {
    let p = 192;
    let x = PrecComplex::from_f64(p, 0.3, 0.7);
    for m in 2..=4 {
        let v = d_tilde(m, &x, p)?;
        let inv = d_tilde(m, &x.recip(), p)?;
        let conj = d_tilde(m, &x.conj(), p)?;
        println!("D̃_{m}(0.3+0.7i) = {}", v.to_string_radix(10, Some(30)));
        println!("  D̃_{m}(1/x) = {}", inv.to_string_radix(10, Some(30)));
        println!("  D̃_{m}(x̄)   = {}", conj.to_string_radix(10, Some(30)));
        for n in [2, 3] {
            println!("  distribution N = {n}: residual {:.2e}", check_distribution(m, n, &x, p)?.to_f64());
        }
    }
    // even orders vanish on the real line
    let real = PrecComplex::from_real(&Float::with_val(p, -3.5));
    println!("D̃_4(-3.5) = {}", d_tilde(4, &real, p)?.to_f64());
    // odd orders at 1 give ζ(m)
    println!("D̃_3(1)    = {}", d_tilde(3, &PrecComplex::one(p), p)?.to_string_radix(10, Some(30)));
    Ok(())
}
