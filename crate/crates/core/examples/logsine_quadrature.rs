//! Log-sine-cosine integrals by double-exponential quadrature, compared with
//! closed forms in single-valued polylogarithms.

use apery_verify::identities::{lsc32_closed, ls4_closed, lsh_closed, LshKind};
use apery_verify::logsine::{lsc, lshch, LogTrigKind};
use apery_verify::numkernel::pi;
use rug::Float;

fn main() -> apery_verify::Result<()> {
    let p = 256;
    let third = Float::with_val(p, pi(p) / 3u32);

    let q = LogTrigKind::ls(4)?.eval(&third, p)?;
    let closed = ls4_closed(&third, p)?;
    println!("Ls_4(π/3)        = {}", q.value.to_string_radix(10, Some(40)));
    println!("  closed form gap  {:.2e} (quadrature estimate {:.2e})", Float::with_val(p, &q.value - &closed).abs().to_f64(), q.error_estimate.to_f64());

    let q = lsc(3, 2, &third, p)?;
    let closed = lsc32_closed(&third, p)?;
    println!("Lsc_3,2(π/3)     = {}", q.value.to_string_radix(10, Some(40)));
    println!("  closed form gap  {:.2e}", Float::with_val(p, &q.value - &closed).abs().to_f64());

    let x = Float::with_val(p, 1.5);
    for which in [LshKind::Lsh3, LshKind::Lshch13, LshKind::Lshch22] {
        let (j, k) = which.indices();
        let q = lshch(j, k, &x, p)?;
        let closed = lsh_closed(which, &x, p)?;
        println!("Lshch_{j},{k}(1.5)   = {}  gap {:.2e}", q.value.to_string_radix(10, Some(30)), Float::with_val(p, &q.value - &closed).abs().to_f64());
    }
    Ok(())
}
