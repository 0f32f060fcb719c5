//! Harmonic, fractional-part and divisor sums restricted to residue classes.

use std::time::Instant;

use super::{require_at_least_one, APSpec, Algorithm, Oracle, SumTag, SumValue, SummatoryResult};
use crate::abscissa::Abscissa;
use crate::error::Result;
use crate::numeric::{chunked_exact_sum, chunked_real_sum};
use crate::zeta::{generalized_euler_constant, EULER_GAMMA};

/// (first member, step, member count) of the summation range n ≤ x.
fn members(x: Abscissa, ap: Option<APSpec>) -> (u64, u64, u64) {
    let n = x.floor();
    match ap {
        None => (1, 1, n),
        Some(ap) => (ap.a(), ap.q(), ap.count_up_to(n)),
    }
}

/// Σ 1/n over n ≤ x, optionally with n ≡ a (mod q).
pub fn harmonic_sum(x: Abscissa, ap: Option<APSpec>) -> Result<f64> {
    require_at_least_one(x)?;
    let (a, q, count) = members(x, ap);
    Ok(chunked_real_sum(0, count.saturating_sub(1), |m| {
        if count == 0 {
            0.0
        } else {
            1.0 / (a + m * q) as f64
        }
    }))
}

/// log x + γ, or (log x)/q + γ(a, q) on a progression.
pub fn harmonic_predictor(x: f64, ap: Option<APSpec>) -> Result<f64> {
    match ap {
        None => Ok(x.ln() + EULER_GAMMA),
        Some(ap) => Ok(x.ln() / ap.q() as f64 + generalized_euler_constant(ap.a(), ap.q())?),
    }
}

/// Σ {x/n} over n ≤ x, optionally with n ≡ a (mod q).
///
/// Each term is `((⌊x⌋ mod n) + frac(x)) / n`, which is exact up to one
/// rounding per term.
pub fn fractional_part_sum(x: Abscissa, ap: Option<APSpec>) -> Result<f64> {
    require_at_least_one(x)?;
    let (a, q, count) = members(x, ap);
    let (n, f) = (x.floor(), x.frac());
    Ok(chunked_real_sum(0, count.saturating_sub(1), |m| {
        if count == 0 {
            return 0.0;
        }
        let d = a + m * q;
        ((n % d) as f64 + f) / d as f64
    }))
}

/// (1 − γ) x / q, with q = 1 when no progression is given.
pub fn fractional_part_predictor(x: f64, ap: Option<APSpec>) -> f64 {
    let q = ap.map_or(1, |ap| ap.q()) as f64;
    (1.0 - EULER_GAMMA) * x / q
}

/// Σ_{n ≤ x} #{d | n : d ≡ a (mod q)} = Σ_{d ≡ a, d ≤ x} ⌊x/d⌋.
pub fn ap_divisor_sum(x: Abscissa, ap: APSpec) -> Result<SummatoryResult> {
    require_at_least_one(x)?;
    let n = x.floor();
    Oracle::default().check(n)?;
    let start = Instant::now();
    let count = ap.count_up_to(n);
    let v = if count == 0 {
        0
    } else {
        chunked_exact_sum(0, count - 1, |m| (n / (ap.a() + m * ap.q())) as i128)
    };
    Ok(SummatoryResult {
        x,
        tag: SumTag::Named(format!("d_restricted:{}:{}", ap.q(), ap.a())),
        value: SumValue::Exact(v),
        algorithm: Algorithm::Brute,
        elapsed: start.elapsed(),
    })
}

/// (x log x)/q + (γ(a, q) − (1 − γ)/q) x.
pub fn ap_divisor_predictor(x: f64, ap: APSpec) -> Result<f64> {
    let q = ap.q() as f64;
    let g = generalized_euler_constant(ap.a(), ap.q())?;
    Ok(x * x.ln() / q + (g - (1.0 - EULER_GAMMA) / q) * x)
}
