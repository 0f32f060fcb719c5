//! Explicit formulas for D(x), Σ 2^{ω(n)} and Σ 2^{ω(n)}/n as a main term,
//! a sum over nontrivial zeros and a tail over the trivial zeros, together
//! with the error-term samples used to test them.

mod delta;
mod formula;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use delta::{delta_error, delta_samples, omega_scan, DeltaSample, OmegaReport};
pub use formula::{
    evaluate_explicit, evaluate_explicit_with, main_term, main_term_with, nontrivial_zero_sum,
    polynomial_residue, trivial_zero_tail, zero_coefficient_partial_sum, FormulaEvaluation,
    ZeroSum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// D(x) = Σ d(n)
    DivisorSum,
    /// Σ 2^{ω(n)}
    TwoOmegaSum,
    /// Σ 2^{ω(n)}/n
    TwoOmegaOverNSum,
}

impl Target {
    pub const ALL: [Target; 3] = [
        Target::DivisorSum,
        Target::TwoOmegaSum,
        Target::TwoOmegaOverNSum,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Target::DivisorSum => "divisor_sum",
            Target::TwoOmegaSum => "two_omega_sum",
            Target::TwoOmegaOverNSum => "two_omega_over_n_sum",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Accepts the full names and the short forms `d`, `divisor`,
    /// `two_omega`, `two_omega_over_n`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "divisor_sum" | "divisor" | "d" => Ok(Target::DivisorSum),
            "two_omega_sum" | "two_omega" => Ok(Target::TwoOmegaSum),
            "two_omega_over_n_sum" | "two_omega_over_n" => Ok(Target::TwoOmegaOverNSum),
            other => Err(Error::InvalidArgument(format!("unknown target {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TruncationConfig {
    pub num_zero_pairs: usize,
    pub tail_terms: usize,
    pub midpoint_delta: f64,
}

impl Default for TruncationConfig {
    fn default() -> Self {
        Self {
            num_zero_pairs: 100,
            tail_terms: 10,
            midpoint_delta: 0.5,
        }
    }
}

impl TruncationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tail_terms < 1 {
            return Err(Error::InvalidArgument(
                "tail_terms must be at least 1".into(),
            ));
        }
        if !(self.midpoint_delta > 0.0 && self.midpoint_delta < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "midpoint_delta must lie in (0, 1), got {}",
                self.midpoint_delta
            )));
        }
        Ok(())
    }
}

/// Weight of each zero pair: the printed coefficients (2, and π²/3 for D)
/// or the residue ζ(ρ/2)² x^{ρ/2}/(ρ ζ'(ρ)) with weight 1 (ζ(2) for D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroCoefficient {
    #[default]
    AsPrinted,
    Residue,
}

/// Derivative in the trivial-zero denominator: ζ'(−2(2n+1)) at the pole of
/// 1/ζ(2s), or the printed ζ'(−2n−1) without the factor 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialDenominator {
    #[default]
    Residue,
    AsPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TailSign {
    /// Tail subtracted, as in the stated formulas.
    #[default]
    Minus,
    /// Tail added.
    Plus,
}

/// Constant term of Σ 2^{ω(n)}/n: the printed 2γ − 1 or the value from the
/// triple pole at s = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverNConstant {
    #[default]
    AsPrinted,
    Residue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct FormulaVariant {
    pub zero_coefficient: ZeroCoefficient,
    pub trivial_denominator: TrivialDenominator,
    pub tail_sign: TailSign,
    pub over_n_constant: OverNConstant,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert_eq!("two_omega".parse::<Target>().unwrap(), Target::TwoOmegaSum);
        assert!("primes".parse::<Target>().is_err());
    }

    #[test]
    fn truncation_defaults() {
        let c = TruncationConfig::default();
        assert_eq!(
            (c.num_zero_pairs, c.tail_terms, c.midpoint_delta),
            (100, 10, 0.5)
        );
        assert!(c.validate().is_ok());
        assert!(TruncationConfig { tail_terms: 0, ..c }.validate().is_err());
        assert!(TruncationConfig {
            midpoint_delta: 1.0,
            ..c
        }
        .validate()
        .is_err());
    }
}
