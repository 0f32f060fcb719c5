//! Special values: ζ at negative odd integers, ζ' at negative even
//! integers, Stieltjes constants and derivatives of ζ at real s > 1.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::bernoulli::{bernoulli, even_bernoulli_over_factorial};
use super::evaluate::zeta_real;
use crate::error::{invalid, Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    /// ζ(−2n−1)
    ZetaAtNegOdd,
    /// ζ'(−2k), indexed by k ≥ 1
    ZetaPrimeAtNegEven,
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpecialKind::ZetaAtNegOdd => "zeta_at_neg_odd",
            SpecialKind::ZetaPrimeAtNegEven => "zeta_prime_at_neg_even",
        })
    }
}

impl FromStr for SpecialKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta_at_neg_odd" => Ok(SpecialKind::ZetaAtNegOdd),
            "zeta_prime_at_neg_even" => Ok(SpecialKind::ZetaPrimeAtNegEven),
            _ => invalid(format!("unknown special value {s:?}")),
        }
    }
}

/// ζ(−2n−1) = −B_{2n+2}/(2n+2) exactly, for n ≤ 31.
pub fn zeta_neg_odd_exact(n: usize) -> Result<BigRational> {
    let b = bernoulli(2 * n + 2).ok_or_else(|| {
        Error::AccuracyUnsupported(format!("B_{} is beyond the exact table", 2 * n + 2))
    })?;
    Ok(-b / BigRational::from_integer((2 * n as i64 + 2).into()))
}

/// ζ'(−2k) = (−1)^k ζ(2k+1) (2k)! / (2 (2π)^{2k}), k ≥ 1.
pub fn zeta_prime_neg_even(k: u32) -> Result<f64> {
    if k < 1 {
        return invalid("zeta_prime_at_neg_even needs k >= 1");
    }
    let z = zeta_real(2.0 * k as f64 + 1.0)?;
    // (2k)!/(2π)^{2k} as a running product to avoid overflow
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut ratio = 1.0;
    for j in 1..=2 * k {
        ratio *= j as f64 / two_pi;
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let v = sign * z * ratio / 2.0;
    if !v.is_finite() {
        return Err(Error::Overflow(format!("zeta'(-{}) overflows", 2 * k)));
    }
    Ok(v)
}

/// `kind = zeta_at_neg_odd`: ζ(−2n−1); `kind = zeta_prime_at_neg_even`:
/// ζ'(−2k) with k = n.
pub fn zeta_negative_special(kind: SpecialKind, n: u32) -> Result<f64> {
    match kind {
        SpecialKind::ZetaAtNegOdd => zeta_neg_odd_exact(n as usize)?
            .to_f64()
            .filter(|v| v.is_finite())
            .ok_or_else(|| Error::Overflow(format!("zeta(-{}) overflows", 2 * n + 1))),
        SpecialKind::ZetaPrimeAtNegEven => zeta_prime_neg_even(n),
    }
}

const LOG_SUM_CUTOFF: u64 = 50;
const LOG_SUM_TERMS: usize = 12;

/// Σ_{n≥1} (log n)^k n^{−s} for real s > 1, or the Stieltjes limit
/// lim_N [Σ_{n≤N} (log n)^k/n − (log N)^{k+1}/(k+1)] when s = 1.
///
/// Euler–Maclaurin with f^{(m)}(t) = t^{−s−m} P_m(log t),
/// P_{m+1} = P_m' − (s+m) P_m.
pub fn log_power_sum(k: u32, s: f64) -> Result<f64> {
    if !(s >= 1.0) || !s.is_finite() {
        return invalid(format!("log_power_sum needs real s >= 1, got {s}"));
    }
    let k = k as usize;
    let n_cut = LOG_SUM_CUTOFF;
    let mut head = crate::numeric::CompensatedSum::new();
    for n in 1..n_cut {
        let l = (n as f64).ln();
        head.add(l.powi(k as i32) * (n as f64).powf(-s));
    }
    let nf = n_cut as f64;
    let ln = nf.ln();
    let npow = nf.powf(-s);
    let mut total = head.value() + 0.5 * ln.powi(k as i32) * npow;

    if s == 1.0 {
        total -= ln.powi(k as i32 + 1) / (k as f64 + 1.0);
    } else {
        // ∫_N^∞ (log t)^k t^{−s} dt = N^{1−s} Σ_j k!/(k−j)! (log N)^{k−j}/(s−1)^{j+1}
        let mut falling = 1.0;
        let mut integral = 0.0;
        for j in 0..=k {
            integral += falling * ln.powi((k - j) as i32) / (s - 1.0).powi(j as i32 + 1);
            falling *= (k - j) as f64;
        }
        total += nf * npow * integral;
    }

    let eval = |p: &[f64]| p.iter().rev().fold(0.0, |acc, &c| acc * ln + c);
    let mut poly = vec![0.0; k + 1];
    poly[k] = 1.0;
    let coeffs = even_bernoulli_over_factorial(LOG_SUM_TERMS);
    let mut m = 0usize;
    for (j, &c) in coeffs.iter().enumerate() {
        let order = 2 * j + 1;
        while m < order {
            let mut next = vec![0.0; poly.len()];
            for (i, &a) in poly.iter().enumerate() {
                next[i] -= (s + m as f64) * a;
                if i > 0 {
                    next[i - 1] += i as f64 * a;
                }
            }
            poly = next;
            m += 1;
        }
        total -= c * nf.powf(-s - order as f64) * eval(&poly);
    }
    Ok(total)
}

/// Stieltjes constant γ_k, k ∈ {0, 1, 2}.
pub fn stieltjes(k: u32) -> Result<f64> {
    if k > 2 {
        return Err(Error::AccuracyUnsupported(format!(
            "Stieltjes constant gamma_{k} is not supported"
        )));
    }
    log_power_sum(k, 1.0)
}

/// k-th derivative of ζ at real s > 1.
pub fn zeta_real_derivative(k: u32, s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return invalid(format!("zeta_real_derivative needs s > 1, got {s}"));
    }
    let v = log_power_sum(k, s)?;
    Ok(if k.is_multiple_of(2) { v } else { -v })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaConstants {
    pub euler_gamma: f64,
    pub stieltjes1: f64,
    pub stieltjes2: f64,
    pub zeta_2: f64,
    pub zeta_prime_2: f64,
    pub zeta_double_prime_2: f64,
    /// 2γ − 1 − 2ζ'(2)/ζ(2), the linear coefficient in Σ 2^{ω(n)}.
    pub two_omega_linear: f64,
    /// Constant term of Σ 2^{ω(n)}/n from the triple pole at s = 0 of
    /// ζ(s+1)²/ζ(2s+2) · x^s/s.
    pub two_omega_over_n_constant: f64,
}

impl ZetaConstants {
    pub fn compute() -> Result<Self> {
        let euler_gamma = stieltjes(0)?;
        let stieltjes1 = stieltjes(1)?;
        let stieltjes2 = stieltjes(2)?;
        let zeta_2 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
        let zeta_prime_2 = zeta_real_derivative(1, 2.0)?;
        let zeta_double_prime_2 = zeta_real_derivative(2, 2.0)?;
        // 1/ζ(2+2s) = g0 + g1 s + g2 s² + …
        let g0 = 1.0 / zeta_2;
        let g1 = -2.0 * zeta_prime_2 / (zeta_2 * zeta_2);
        let g2 = 2.0
            * (2.0 * zeta_prime_2 * zeta_prime_2 / zeta_2.powi(3)
                - zeta_double_prime_2 / (zeta_2 * zeta_2));
        let g = euler_gamma;
        Ok(Self {
            euler_gamma,
            stieltjes1,
            stieltjes2,
            zeta_2,
            zeta_prime_2,
            zeta_double_prime_2,
            two_omega_linear: 2.0 * g - 1.0 - 2.0 * zeta_prime_2 / zeta_2,
            two_omega_over_n_constant: g2 + 2.0 * g * g1 + (g * g - 2.0 * stieltjes1) * g0,
        })
    }
}

/// Process-wide cached constants.
pub fn zeta_constants() -> &'static ZetaConstants {
    static C: OnceLock<ZetaConstants> = OnceLock::new();
    C.get_or_init(|| {
        ZetaConstants::compute().expect("constants are computed from fixed real arguments")
    })
}
