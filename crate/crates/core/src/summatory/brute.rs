use std::time::Instant;

use super::scan::scan_exact;
use super::{require_at_least_one, Algorithm, SumTag, SumValue, SummatoryResult};
use crate::abscissa::Abscissa;
use crate::arith::{eval_from_factors, FnSpec};
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_BOUND: u64 = 100_000_000;

/// Brute-force summation by a streaming segmented sieve, limited to
/// `⌊x⌋ ≤ bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub bound: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            bound: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    pub fn new(bound: u64) -> Self {
        Self { bound }
    }

    pub(crate) fn check(&self, n: u64) -> Result<()> {
        if n > self.bound {
            return Err(Error::ResourceLimit(format!(
                "n = {n} exceeds the brute-force oracle bound {}",
                self.bound
            )));
        }
        Ok(())
    }

    pub fn sum(&self, f: FnSpec, x: Abscissa) -> Result<SummatoryResult> {
        require_at_least_one(x)?;
        let start = Instant::now();
        let v = self.prefix_sums(f, &[x.floor()])?[0];
        Ok(SummatoryResult {
            x,
            tag: SumTag::Function(f),
            value: SumValue::Exact(v),
            algorithm: Algorithm::Brute,
            elapsed: start.elapsed(),
        })
    }

    /// `Σ_{n ≤ c} f(n)` for every checkpoint `c` in one pass.
    pub fn prefix_sums(&self, f: FnSpec, checkpoints: &[u64]) -> Result<Vec<i128>> {
        f.validate()?;
        let mut sorted: Vec<(usize, u64)> = checkpoints.iter().copied().enumerate().collect();
        sorted.sort_by_key(|&(_, c)| c);
        if let Some(&(_, top)) = sorted.last() {
            self.check(top)?;
        }
        let cps: Vec<u64> = sorted.iter().map(|&(_, c)| c).collect();
        let sums = scan_exact(&cps, |n, fs| Ok(eval_from_factors(f, n, fs)? as i128))?;
        let mut out = vec![0i128; checkpoints.len()];
        for ((i, _), s) in sorted.into_iter().zip(sums) {
            out[i] = s;
        }
        Ok(out)
    }
}

/// `Σ_{n ≤ x} f(n)` with the default oracle bound.
pub fn brute_force_sum(f: FnSpec, x: Abscissa) -> Result<SummatoryResult> {
    Oracle::default().sum(f, x)
}

pub fn brute_force_prefix_sums(f: FnSpec, checkpoints: &[u64], bound: u64) -> Result<Vec<i128>> {
    Oracle::new(bound).prefix_sums(f, checkpoints)
}
