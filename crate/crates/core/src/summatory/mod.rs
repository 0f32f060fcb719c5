//! Exact summatory functions: a sieve-driven brute-force oracle, sublinear
//! divisor-block algorithms, and the weighted, progression, lattice and
//! shifted sums used by the asymptotic checks.
//!
//! Integer-valued sums are accumulated in `i128` and never pass through
//! floating point.

mod auxiliary;
mod brute;
mod hyperbola;
mod lattice;
mod progression;
pub(crate) mod scan;

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::abscissa::Abscissa;
use crate::arith::FnSpec;
use crate::error::{invalid, Result};
use crate::numeric::gcd;

pub use auxiliary::{auxiliary_predictor, auxiliary_sums, two_big_omega_constant, AuxiliaryKind};
pub use brute::{brute_force_prefix_sums, brute_force_sum, Oracle, DEFAULT_ORACLE_BOUND};
pub use hyperbola::{
    divisor_sum_exact, divisor_sum_from_squarefree, divisor_sum_hyperbola, floor_sum,
    squarefree_divisor_sum, two_omega_sum_exact,
};
pub use lattice::{circle_lattice_sum, shifted_divisor_predictor, shifted_divisor_sum};
pub use progression::{
    ap_divisor_predictor, ap_divisor_sum, fractional_part_predictor, fractional_part_sum,
    harmonic_predictor, harmonic_sum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Brute,
    Hyperbola,
    MoebiusKernel,
    ConvolutionKernel,
    Lattice,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algorithm::Brute => "brute",
            Algorithm::Hyperbola => "hyperbola",
            Algorithm::MoebiusKernel => "moebius_kernel",
            Algorithm::ConvolutionKernel => "convolution_kernel",
            Algorithm::Lattice => "lattice",
        };
        f.write_str(s)
    }
}

/// What was summed: a pointwise function or a named composite sum.
#[derive(Debug, Clone, PartialEq)]
pub enum SumTag {
    Function(FnSpec),
    Named(String),
}

impl fmt::Display for SumTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumTag::Function(spec) => write!(f, "{spec}"),
            SumTag::Named(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SumValue {
    Exact(i128),
    Real(f64),
}

impl SumValue {
    pub fn as_f64(&self) -> f64 {
        match *self {
            SumValue::Exact(v) => v as f64,
            SumValue::Real(v) => v,
        }
    }

    pub fn exact(&self) -> Option<i128> {
        match *self {
            SumValue::Exact(v) => Some(v),
            SumValue::Real(_) => None,
        }
    }
}

impl fmt::Display for SumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SumValue::Exact(v) => write!(f, "{v}"),
            SumValue::Real(v) => f.write_str(&crate::numeric::format_sig15(*v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummatoryResult {
    pub x: Abscissa,
    pub tag: SumTag,
    pub value: SumValue,
    pub algorithm: Algorithm,
    pub elapsed: Duration,
}

impl SummatoryResult {
    /// The exact value; panics for real-valued sums.
    pub fn exact(&self) -> i128 {
        self.value
            .exact()
            .expect("real-valued sum has no exact value")
    }
}

/// The residue class `n ≡ a (mod q)` with `gcd(a, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct APSpec {
    q: u64,
    a: u64,
}

impl APSpec {
    pub fn new(q: u64, a: u64) -> Result<Self> {
        if q < 2 {
            return invalid(format!("modulus must be at least 2, got {q}"));
        }
        if a < 1 || a >= q {
            return invalid(format!(
                "residue must satisfy 1 <= a < q, got a = {a}, q = {q}"
            ));
        }
        if gcd(a, q) != 1 {
            return invalid(format!("gcd({a}, {q}) != 1"));
        }
        Ok(Self { q, a })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// Number of members `n ≤ n_max` of the progression.
    pub fn count_up_to(&self, n_max: u64) -> u64 {
        if n_max < self.a {
            0
        } else {
            (n_max - self.a) / self.q + 1
        }
    }
}

impl fmt::Display for APSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.a, self.q)
    }
}

pub(crate) fn require_at_least_one(x: Abscissa) -> Result<()> {
    if x.floor() < 1 {
        return invalid(format!("x = {x} must be at least 1"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ap_construction() {
        assert!(APSpec::new(1, 0).is_err());
        assert!(APSpec::new(4, 2).is_err());
        assert!(APSpec::new(4, 4).is_err());
        assert!(APSpec::new(4, 0).is_err());
        let ap = APSpec::new(4, 3).unwrap();
        assert_eq!(ap.count_up_to(10), 2);
        assert_eq!(ap.count_up_to(2), 0);
    }

    #[test]
    fn value_display() {
        assert_eq!(SumValue::Exact(27).to_string(), "27");
        assert_eq!(SumValue::Real(2.5).as_f64(), 2.5);
        assert_eq!(Algorithm::MoebiusKernel.to_string(), "moebius_kernel");
    }
}
