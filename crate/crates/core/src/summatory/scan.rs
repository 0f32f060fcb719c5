//! Streaming sieve scans over `1..=n_max` with prefix sums at checkpoints.
//!
//! Each chunk of [`CHUNK_LEN`] integers is factorized independently and the
//! per-chunk sums are merged in ascending order, so results do not depend on
//! the number of worker threads.

use rayon::prelude::*;

use crate::arith::SegmentedFactorizer;
use crate::error::{invalid, Result};
use crate::numeric::{CompensatedSum, CHUNK_LEN};

pub(crate) trait Accumulate: Default + Clone + Send {
    type Item: Send;
    fn push(&mut self, v: Self::Item);
    fn merge(&mut self, other: &Self);
}

#[derive(Default, Clone, Debug)]
pub(crate) struct Exact(pub i128);

impl Accumulate for Exact {
    type Item = i128;
    fn push(&mut self, v: i128) {
        self.0 += v;
    }
    fn merge(&mut self, other: &Self) {
        self.0 += other.0;
    }
}

impl Accumulate for CompensatedSum {
    type Item = f64;
    fn push(&mut self, v: f64) {
        self.add(v);
    }
    fn merge(&mut self, other: &Self) {
        CompensatedSum::merge(self, other);
    }
}

/// Prefix sums of `term(n, factors)` at each (ascending) checkpoint.
pub(crate) fn scan_prefix<A, F>(checkpoints: &[u64], term: F) -> Result<Vec<A>>
where
    A: Accumulate,
    F: Fn(u64, &[(u64, u32)]) -> Result<A::Item> + Sync,
{
    if checkpoints.is_empty() {
        return Ok(Vec::new());
    }
    if checkpoints.windows(2).any(|w| w[0] > w[1]) {
        return invalid("checkpoints must be ascending");
    }
    let n_max = *checkpoints.last().unwrap();
    if n_max == 0 {
        return Ok(vec![A::default(); checkpoints.len()]);
    }
    let factorizer = SegmentedFactorizer::new(n_max)?;
    let chunks = (n_max - 1) / CHUNK_LEN + 1;

    // (chunk total, snapshots at checkpoints falling inside the chunk)
    let per_chunk: Vec<Result<(A, Vec<(usize, A)>)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = 1 + c * CHUNK_LEN;
            let hi = (lo + CHUNK_LEN - 1).min(n_max);
            let mut idx = checkpoints.partition_point(|&x| x < lo);
            let mut acc = A::default();
            let mut snaps = Vec::new();
            let mut failure = None;
            factorizer.for_each(lo, hi, |n, fs| {
                if failure.is_some() {
                    return;
                }
                match term(n, fs) {
                    Ok(v) => acc.push(v),
                    Err(e) => failure = Some(e),
                }
                while idx < checkpoints.len() && checkpoints[idx] == n {
                    snaps.push((idx, acc.clone()));
                    idx += 1;
                }
            });
            match failure {
                Some(e) => Err(e),
                None => Ok((acc, snaps)),
            }
        })
        .collect();

    let mut out = vec![A::default(); checkpoints.len()];
    // checkpoints equal to 0 keep the empty sum
    let mut running = A::default();
    for chunk in per_chunk {
        let (total, snaps) = chunk?;
        for (i, snap) in snaps {
            let mut v = running.clone();
            v.merge(&snap);
            out[i] = v;
        }
        running.merge(&total);
    }
    Ok(out)
}

pub(crate) fn scan_exact<F>(checkpoints: &[u64], term: F) -> Result<Vec<i128>>
where
    F: Fn(u64, &[(u64, u32)]) -> Result<i128> + Sync,
{
    Ok(scan_prefix::<Exact, _>(checkpoints, term)?
        .into_iter()
        .map(|e| e.0)
        .collect())
}

pub(crate) fn scan_real<F>(checkpoints: &[u64], term: F) -> Result<Vec<f64>>
where
    F: Fn(u64, &[(u64, u32)]) -> Result<f64> + Sync,
{
    Ok(scan_prefix::<CompensatedSum, _>(checkpoints, term)?
        .iter()
        .map(|c| c.value())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_counts() {
        let cps = [0u64, 1, 10, 65_536, 65_537, 200_000];
        let v = scan_exact(&cps, |_, _| Ok(1)).unwrap();
        assert_eq!(v, vec![0, 1, 10, 65_536, 65_537, 200_000]);
        let d = scan_exact(&[10], |_, fs| {
            Ok(fs.iter().map(|&(_, e)| e as i128 + 1).product())
        })
        .unwrap();
        assert_eq!(d, vec![27]);
    }

    #[test]
    fn duplicate_checkpoints() {
        let v = scan_exact(&[5, 5, 7], |n, _| Ok(n as i128)).unwrap();
        assert_eq!(v, vec![15, 15, 28]);
        assert!(scan_exact(&[7, 5], |_, _| Ok(1)).is_err());
    }

    #[test]
    fn real_scan_is_thread_count_independent() {
        let cps = [1000u64, 300_000];
        let run = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| scan_real(&cps, |n, _| Ok(1.0 / n as f64)).unwrap())
        };
        let a = run(1);
        let b = run(4);
        assert_eq!(a[0].to_bits(), b[0].to_bits());
        assert_eq!(a[1].to_bits(), b[1].to_bits());
    }
}
