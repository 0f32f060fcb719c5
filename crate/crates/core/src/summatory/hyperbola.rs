use std::time::Instant;

use super::{require_at_least_one, Algorithm, SumTag, SumValue, SummatoryResult};
use crate::abscissa::Abscissa;
use crate::arith::{moebius_up_to, FnSpec};
use crate::error::Result;
use crate::numeric::isqrt;

/// D(n) = 2 Σ_{k ≤ √n} ⌊n/k⌋ − ⌊√n⌋².
pub fn divisor_sum_exact(n: u64) -> i128 {
    if n == 0 {
        return 0;
    }
    let r = isqrt(n);
    let s: u128 = (1..=r).map(|k| (n / k) as u128).sum();
    (2 * s - r as u128 * r as u128) as i128
}

/// S_{2ω}(n) = Σ_{d ≤ √n} μ(d) D(⌊n/d²⌋) using a precomputed Möbius table
/// covering `1..=√n`.
fn two_omega_with(n: u64, mu: &[i8]) -> i128 {
    let r = isqrt(n);
    (1..=r)
        .filter(|&d| mu[d as usize] != 0)
        .map(|d| mu[d as usize] as i128 * divisor_sum_exact(n / (d * d)))
        .sum()
}

pub fn two_omega_sum_exact(n: u64) -> i128 {
    let mu = moebius_up_to(isqrt(n));
    two_omega_with(n, &mu)
}

fn result(
    x: Abscissa,
    tag: SumTag,
    v: i128,
    algorithm: Algorithm,
    start: Instant,
) -> SummatoryResult {
    SummatoryResult {
        x,
        tag,
        value: SumValue::Exact(v),
        algorithm,
        elapsed: start.elapsed(),
    }
}

pub fn divisor_sum_hyperbola(x: Abscissa) -> Result<SummatoryResult> {
    require_at_least_one(x)?;
    let start = Instant::now();
    let v = divisor_sum_exact(x.floor());
    Ok(result(
        x,
        SumTag::Function(FnSpec::Divisors),
        v,
        Algorithm::Hyperbola,
        start,
    ))
}

/// Σ_{d ≤ x} ⌊x/d⌋, grouping the d that share a quotient.
pub fn floor_sum(x: Abscissa) -> Result<i128> {
    require_at_least_one(x)?;
    let n = x.floor();
    let mut total: u128 = 0;
    let mut d = 1u64;
    while d <= n {
        let q = n / d;
        let last = n / q;
        total += q as u128 * (last - d + 1) as u128;
        d = last + 1;
    }
    Ok(total as i128)
}

pub fn squarefree_divisor_sum(x: Abscissa) -> Result<SummatoryResult> {
    require_at_least_one(x)?;
    let start = Instant::now();
    let v = two_omega_sum_exact(x.floor());
    Ok(result(
        x,
        SumTag::Function(FnSpec::TwoOmega),
        v,
        Algorithm::MoebiusKernel,
        start,
    ))
}

/// D(x) = Σ_{d ≤ √x} S_{2ω}(x/d²).
pub fn divisor_sum_from_squarefree(x: Abscissa) -> Result<SummatoryResult> {
    require_at_least_one(x)?;
    let start = Instant::now();
    let n = x.floor();
    let r = isqrt(n);
    let mu = moebius_up_to(r);
    let v = (1..=r).map(|d| two_omega_with(n / (d * d), &mu)).sum();
    Ok(result(
        x,
        SumTag::Function(FnSpec::Divisors),
        v,
        Algorithm::ConvolutionKernel,
        start,
    ))
}
