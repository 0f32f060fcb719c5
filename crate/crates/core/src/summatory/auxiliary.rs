//! Weighted divisor-type sums with their leading asymptotic predictors.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use super::scan::{scan_exact, scan_real};
use super::{require_at_least_one, Algorithm, Oracle, SumTag, SumValue, SummatoryResult};
use crate::abscissa::Abscissa;
use crate::arith::primes_up_to;
use crate::error::{invalid, Error, Result};
use crate::zeta::{zeta_constants, EULER_GAMMA};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxiliaryKind {
    /// Σ d(n)/n
    DOverN,
    /// Σ 2^{ω(n)}/n
    TwoOmegaOverN,
    /// Σ 2^{Ω(n)}
    TwoBigOmega,
    /// Σ 2^{Ω(n)}/n
    TwoBigOmegaOverN,
    /// Σ μ²(n) d(n)
    DOnSquarefree,
    /// Σ d(n²)
    DOfSquare,
    /// Σ d(n)²
    DSquared,
}

impl AuxiliaryKind {
    pub const ALL: [AuxiliaryKind; 7] = [
        AuxiliaryKind::DOverN,
        AuxiliaryKind::TwoOmegaOverN,
        AuxiliaryKind::TwoBigOmega,
        AuxiliaryKind::TwoBigOmegaOverN,
        AuxiliaryKind::DOnSquarefree,
        AuxiliaryKind::DOfSquare,
        AuxiliaryKind::DSquared,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AuxiliaryKind::DOverN => "d_over_n",
            AuxiliaryKind::TwoOmegaOverN => "two_omega_over_n",
            AuxiliaryKind::TwoBigOmega => "two_big_omega",
            AuxiliaryKind::TwoBigOmegaOverN => "two_big_omega_over_n",
            AuxiliaryKind::DOnSquarefree => "d_on_squarefree",
            AuxiliaryKind::DOfSquare => "d_of_square",
            AuxiliaryKind::DSquared => "d_squared",
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(
            self,
            AuxiliaryKind::DOverN | AuxiliaryKind::TwoOmegaOverN | AuxiliaryKind::TwoBigOmegaOverN
        )
    }

    /// The integer weight at n; the `_over_n` kinds divide it by n.
    fn weight(&self, factors: &[(u64, u32)]) -> i128 {
        let exps = factors.iter().map(|&(_, e)| e as i128);
        match self {
            AuxiliaryKind::DOverN => exps.map(|e| e + 1).product(),
            AuxiliaryKind::TwoOmegaOverN => 1 << factors.len(),
            AuxiliaryKind::TwoBigOmega | AuxiliaryKind::TwoBigOmegaOverN => 1 << exps.sum::<i128>(),
            AuxiliaryKind::DOnSquarefree => {
                if factors.iter().all(|&(_, e)| e == 1) {
                    1 << factors.len()
                } else {
                    0
                }
            }
            AuxiliaryKind::DOfSquare => exps.map(|e| 2 * e + 1).product(),
            AuxiliaryKind::DSquared => exps.map(|e| (e + 1) * (e + 1)).product(),
        }
    }
}

impl fmt::Display for AuxiliaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AuxiliaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown auxiliary sum {s:?}")))
    }
}

pub fn auxiliary_sums(kind: AuxiliaryKind, x: Abscissa) -> Result<SummatoryResult> {
    require_at_least_one(x)?;
    let n = x.floor();
    Oracle::default().check(n)?;
    let start = Instant::now();
    let value = if kind.is_real() {
        SumValue::Real(scan_real(&[n], |m, fs| Ok(kind.weight(fs) as f64 / m as f64))?[0])
    } else {
        SumValue::Exact(scan_exact(&[n], |_, fs| Ok(kind.weight(fs)))?[0])
    };
    Ok(SummatoryResult {
        x,
        tag: SumTag::Named(kind.name().to_string()),
        value,
        algorithm: Algorithm::Brute,
        elapsed: start.elapsed(),
    })
}

const PRODUCT_PRIME_LIMIT: u64 = 2_000_000;

/// Π_{p ≤ P} factor(p) times exp(c Σ_{p > P} p^{-2}), the tail estimated by
/// 1/(P log P).
fn euler_product(factor: impl Fn(f64) -> f64, tail_coefficient: f64) -> f64 {
    let primes = primes_up_to(PRODUCT_PRIME_LIMIT);
    let log_sum: f64 = primes.iter().map(|&p| factor(p as f64).ln()).sum();
    let p = PRODUCT_PRIME_LIMIT as f64;
    (log_sum + tail_coefficient / (p * p.ln())).exp()
}

/// a₀ = (8 log 2)⁻¹ Π_{p>2} (1 + 1/(p(p−2))).
pub fn two_big_omega_constant() -> f64 {
    static A0: OnceLock<f64> = OnceLock::new();
    *A0.get_or_init(|| {
        let prod = euler_product(
            |p| {
                if p == 2.0 {
                    1.0
                } else {
                    1.0 + 1.0 / (p * (p - 2.0))
                }
            },
            1.0,
        );
        prod / (8.0 * std::f64::consts::LN_2)
    })
}

/// Π_p (1 − 3/p² + 2/p³), the leading coefficient of Σ μ²(n) d(n) ~ C x log x.
pub fn squarefree_divisor_constant() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| euler_product(|p| 1.0 - 3.0 / (p * p) + 2.0 / (p * p * p), -3.0))
}

/// Main-term prediction for `kind` at `x`; the lower-order constants of
/// the last four kinds are not known in closed form and are omitted.
pub fn auxiliary_predictor(kind: AuxiliaryKind, x: f64) -> Result<f64> {
    if !(x > 1.0) {
        return invalid(format!("predictor needs x > 1, got {x}"));
    }
    let c = zeta_constants();
    let g = EULER_GAMMA;
    let l = x.ln();
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    Ok(match kind {
        AuxiliaryKind::DOverN => 0.5 * l * l + 2.0 * g * l + g * g - 2.0 * c.stieltjes1,
        AuxiliaryKind::TwoOmegaOverN => {
            let g0 = 6.0 / pi2;
            g0 * (0.5 * l * l + (2.0 * g - 2.0 * c.zeta_prime_2 / c.zeta_2) * l)
                + c.two_omega_over_n_constant
        }
        AuxiliaryKind::TwoBigOmega => two_big_omega_constant() * x * l * l,
        AuxiliaryKind::TwoBigOmegaOverN => two_big_omega_constant() * l * l * l / 3.0,
        AuxiliaryKind::DOnSquarefree => squarefree_divisor_constant() * x * l,
        AuxiliaryKind::DOfSquare => 3.0 / pi2 * x * l * l,
        AuxiliaryKind::DSquared => x * l * l * l / pi2,
    })
}
