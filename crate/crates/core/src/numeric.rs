//! Small numerical utilities: compensated summation, deterministic chunked
//! reduction and integer square roots.

use rayon::prelude::*;

/// Fixed chunk length for range reductions. Results never depend on the
/// number of worker threads because chunk boundaries never move.
pub const CHUNK_LEN: u64 = 1 << 16;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another accumulator in, keeping both error terms.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.comp);
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Sums `term(n)` for `lo <= n <= hi` with compensated summation inside each
/// fixed chunk and an ordered merge of the chunk results.
pub fn chunked_real_sum<F>(lo: u64, hi: u64, term: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    if hi < lo {
        return 0.0;
    }
    let chunks = (hi - lo) / CHUNK_LEN + 1;
    let partials: Vec<CompensatedSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let a = lo + c * CHUNK_LEN;
            let b = (a + CHUNK_LEN - 1).min(hi);
            (a..=b).map(&term).collect()
        })
        .collect();
    let mut total = CompensatedSum::new();
    for p in &partials {
        total.merge(p);
    }
    total.value()
}

/// Exact integer sum of `term(n)` over `lo <= n <= hi`, chunked like
/// [`chunked_real_sum`].
pub fn chunked_exact_sum<F>(lo: u64, hi: u64, term: F) -> i128
where
    F: Fn(u64) -> i128 + Sync,
{
    if hi < lo {
        return 0;
    }
    let chunks = (hi - lo) / CHUNK_LEN + 1;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let a = lo + c * CHUNK_LEN;
            let b = (a + CHUNK_LEN - 1).min(hi);
            (a..=b).map(&term).sum::<i128>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

#[inline]
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

#[inline]
pub fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Formats `v` like C's `%.15g`.
pub fn format_sig15(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.14e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..15).contains(&exp) {
        let m = trim_fraction(mantissa);
        let sign = if exp < 0 { "-" } else { "+" };
        return format!("{m}e{sign}{:02}", exp.abs());
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_fraction(&format!("{:.*}", decimals, v)).to_string()
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to the double nearest the 15-significant-digit decimal of `v`.
pub fn round_sig15(v: f64) -> f64 {
    format_sig15(v).parse().unwrap_or(v)
}
