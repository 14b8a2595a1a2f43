//! Tanh-sinh (double-exponential) quadrature on finite panels.
//!
//! The integrand receives the abscissa together with its distances to both
//! panel ends, computed from the node complements `1 - |x_k|` without
//! cancellation, so logarithmic endpoint singularities can be evaluated to
//! full relative accuracy.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rug::Float;

use crate::error::{Error, Result};
use crate::numkernel::{pi, pow2};

/// Maximum number of step halvings.
pub const MAX_LEVEL: u32 = 12;

/// Value, error estimate and depth of a quadrature.
#[derive(Debug, Clone)]
pub struct QuadratureResult {
    pub value: Float,
    pub error_estimate: Float,
    pub levels_used: u32,
}

/// One node: complement `c = 1 - tanh(u)` and Jacobian `dx/dt`.
#[derive(Debug, Clone)]
struct Node {
    c: Float,
    jac: Float,
}

type NodeMemo = RwLock<HashMap<(u32, u32), Arc<Vec<Node>>>>;

fn node_memo() -> &'static NodeMemo {
    static MEMO: OnceLock<NodeMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Nodes added at `level` (all `t = k h`, `k >= 0`, at level 0; odd multiples of
/// `h = 2^-level` afterwards), truncated once the Jacobian drops below `2^-(w+40)`.
fn nodes(w: u32, level: u32) -> Arc<Vec<Node>> {
    if let Some(v) = node_memo().read().expect("node memo poisoned").get(&(w, level)) {
        return v.clone();
    }
    let half_pi = pi(w) / 2u32;
    let cutoff = pow2(w, -(w as i32) - 40);
    let h = pow2(w, -(level as i32));
    let (start, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
    let mut out = Vec::new();
    let mut k = start;
    loop {
        let t = Float::with_val(w, &h * k);
        let (sh, ch) = t.clone().sinh_cosh(Float::new(w));
        let u = Float::with_val(w, &half_pi * &sh);
        let cu = Float::with_val(w, u.cosh_ref());
        let emu = Float::with_val(w, (-u).exp_ref());
        let c = Float::with_val(w, &emu / &cu);
        let jac = Float::with_val(w, &half_pi * &ch) / Float::with_val(w, cu.square_ref());
        if jac < cutoff && k > 0 {
            break;
        }
        out.push(Node { c, jac });
        k += stride;
    }
    let v = Arc::new(out);
    node_memo().write().expect("node memo poisoned").insert((w, level), v.clone());
    v
}

/// `∫_a^b f` where `f(t, t - a, b - t)`; converged when successive levels agree
/// to `2^-target_bits` relative to `max(1, |S|)`.
pub fn integrate<F>(a: &Float, b: &Float, f: &F, w: u32, target_bits: u32) -> Result<QuadratureResult>
where
    F: Fn(&Float, &Float, &Float) -> Float,
{
    let len = Float::with_val(w, b - a);
    if len.is_zero() {
        return Ok(QuadratureResult { value: Float::new(w), error_estimate: Float::new(w), levels_used: 0 });
    }
    let half = Float::with_val(w, &len / 2u32);
    let mut prev: Option<Float> = None;
    let mut sum = Float::new(w);
    let tol = pow2(w, -(target_bits as i32));
    let mut last_diff = Float::with_val(w, f64::INFINITY);
    for level in 0..=MAX_LEVEL {
        let mut acc = Float::new(w);
        for (idx, node) in nodes(w, level).iter().enumerate() {
            let near = Float::with_val(w, &half * &node.c);
            let far = Float::with_val(w, &len - &near);
            if level == 0 && idx == 0 {
                let mid = Float::with_val(w, a + &half);
                acc += f(&mid, &half, &half) * &node.jac;
                continue;
            }
            // right node: distance `near` to b; left node: distance `near` to a
            let tr = Float::with_val(w, b - &near);
            let tl = Float::with_val(w, a + &near);
            let vr = f(&tr, &far, &near);
            let vl = f(&tl, &near, &far);
            acc += (vr + vl) * &node.jac;
        }
        let h = pow2(w, -(level as i32));
        let new_sum = match &prev {
            None => Float::with_val(w, &acc * &h),
            Some(s) => Float::with_val(w, s / 2u32) + Float::with_val(w, &acc * &h),
        };
        // `sum` holds the un-scaled trapezoid value h Σ f w; the integral is that times half
        sum = new_sum.clone();
        if let Some(p) = &prev {
            let diff = Float::with_val(w, &new_sum - p).abs() * &half;
            let scale = Float::with_val(w, &new_sum * &half).abs().max(&Float::with_val(w, 1));
            if diff <= Float::with_val(w, &tol * &scale) {
                return Ok(QuadratureResult {
                    value: Float::with_val(w, &new_sum * &half),
                    error_estimate: diff,
                    levels_used: level,
                });
            }
            last_diff = diff;
        }
        prev = Some(new_sum);
    }
    let value = Float::with_val(w, &sum * &half);
    Err(Error::Convergence(format!(
        "tanh-sinh did not converge after {MAX_LEVEL} levels: best estimate {} with difference {:.3e}",
        value.to_string_radix(10, Some(40)),
        last_diff.to_f64()
    )))
}

/// Break points refining `[a, b]` geometrically towards `b` when a singular
/// point lies at distance `d` beyond `b` with `d` small against `b - a`.
pub fn graded_breaks_right(a: &Float, b: &Float, d: &Float) -> Vec<Float> {
    let w = a.prec().max(b.prec());
    let len = Float::with_val(w, b - a);
    let mut out = Vec::new();
    if d.is_zero() || Float::with_val(w, d * 2u32) >= len {
        return out;
    }
    let mut span = Float::with_val(w, d);
    loop {
        let q = Float::with_val(w, b - &span);
        // keep the last panel at least as long as its distance to the singularity
        let room = Float::with_val(w, &q - a);
        if room <= span {
            break;
        }
        out.push(q);
        span = span * 2u32 + d;
    }
    out.reverse();
    out
}
