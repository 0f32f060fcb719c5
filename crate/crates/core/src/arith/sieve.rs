//! Smallest-prime-factor tables, canonical factorizations and a segmented
//! factorizer for streaming scans.

use crate::error::{invalid, Error, Result};
use crate::numeric::isqrt;

/// Largest limit accepted by [`FactorTable::new`]. The table stores one
/// `u32` per integer, so this bound caps it at about 400 MB.
pub const MAX_FACTOR_TABLE_LIMIT: u64 = 100_000_000;

/// Largest integer the segmented factorizer handles; its base primes stay
/// below 2^20.
pub const MAX_SEGMENTED_N: u64 = 1 << 40;

/// At most 15 distinct primes divide an integer below 2^64.
const MAX_DISTINCT: usize = 15;

/// Smallest prime factor of every integer in `2..=limit`.
#[derive(Debug, Clone)]
pub struct FactorTable {
    limit: u64,
    spf: Vec<u32>,
}

impl FactorTable {
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return invalid(format!(
                "factor table limit must be at least 2, got {limit}"
            ));
        }
        if limit > MAX_FACTOR_TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "factor table limit {limit} exceeds {MAX_FACTOR_TABLE_LIMIT}"
            )));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let root = isqrt(limit) as usize;
        for i in 2..=n {
            if spf[i] != 0 {
                continue;
            }
            spf[i] = i as u32;
            if i <= root {
                let mut j = i * i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Ok(Self { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    pub fn spf(&self, n: u64) -> Option<u64> {
        if n < 2 || n > self.limit {
            None
        } else {
            Some(self.spf[n as usize] as u64)
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.spf(n) == Some(n)
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        if n == 0 {
            return invalid("cannot factorize 0");
        }
        if n > self.limit {
            return invalid(format!("{n} exceeds the factor table limit {}", self.limit));
        }
        let mut factors = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        Ok(Factorization { n, factors })
    }
}

/// Canonical prime factorization: strictly increasing primes, exponents ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn divisors(&self) -> Vec<u64> {
        divisors_from_factors(&self.factors)
    }
}

/// All divisors in ascending order.
pub fn divisors_from_factors(factors: &[(u64, u32)]) -> Vec<u64> {
    let mut divs = vec![1u64];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Factorizes `n`, using `table` when given and trial division otherwise.
pub fn factorize(n: u64, table: Option<&FactorTable>) -> Result<Factorization> {
    if let Some(t) = table {
        return t.factorize(n);
    }
    if n == 0 {
        return invalid("cannot factorize 0");
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut push = |m: &mut u64, p: u64| {
        let mut e = 0;
        while (*m).is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut m, 2);
    push(&mut m, 3);
    let mut p = 5u64;
    while p.saturating_mul(p) <= m {
        push(&mut m, p);
        push(&mut m, p + 2);
        p += 6;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Möbius function on `0..=n` by a linear sieve (`mu[0]` is unused).
pub fn moebius_up_to(n: u64) -> Vec<i8> {
    let n = n as usize;
    let mut mu = vec![0i8; n + 1];
    if n >= 1 {
        mu[1] = 1;
    }
    let mut is_comp = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n {
        if !is_comp[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            is_comp[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            }
            mu[ip] = -mu[i];
        }
    }
    mu
}

/// Streaming factorizer for a window of consecutive integers, backed by
/// primes up to the square root of the largest integer it will see.
#[derive(Debug, Clone)]
pub struct SegmentedFactorizer {
    base: Vec<u64>,
    hi: u64,
}

impl SegmentedFactorizer {
    pub fn new(hi: u64) -> Result<Self> {
        if hi > MAX_SEGMENTED_N {
            return Err(Error::ResourceLimit(format!(
                "segmented factorization above {MAX_SEGMENTED_N} is not supported"
            )));
        }
        Ok(Self {
            base: primes_up_to(isqrt(hi)),
            hi,
        })
    }

    /// Calls `f(n, factors)` for every `n` in `lo..=hi` in increasing order.
    pub fn for_each<F>(&self, lo: u64, hi: u64, mut f: F)
    where
        F: FnMut(u64, &[(u64, u32)]),
    {
        assert!(
            lo >= 1 && hi <= self.hi,
            "window outside the factorizer range"
        );
        if hi < lo {
            return;
        }
        let len = (hi - lo + 1) as usize;
        let mut rem: Vec<u64> = (lo..=hi).collect();
        let mut count = vec![0u8; len];
        let mut slots = vec![(0u32, 0u8); len * MAX_DISTINCT];
        for &p in &self.base {
            if p * p > hi {
                break;
            }
            let first = lo.div_ceil(p) * p;
            let mut m = first;
            while m <= hi {
                let i = (m - lo) as usize;
                let mut e = 0u8;
                while rem[i].is_multiple_of(p) {
                    rem[i] /= p;
                    e += 1;
                }
                let c = count[i] as usize;
                slots[i * MAX_DISTINCT + c] = (p as u32, e);
                count[i] += 1;
                m += p;
            }
        }
        let mut buf = [(0u64, 0u32); MAX_DISTINCT + 1];
        for i in 0..len {
            let c = count[i] as usize;
            for (j, slot) in slots[i * MAX_DISTINCT..i * MAX_DISTINCT + c]
                .iter()
                .enumerate()
            {
                buf[j] = (slot.0 as u64, slot.1 as u32);
            }
            let mut k = c;
            if rem[i] > 1 {
                buf[k] = (rem[i], 1);
                k += 1;
            }
            f(lo + i as u64, &buf[..k]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_spf(n: u64) -> u64 {
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return d;
            }
            d += 1;
        }
        n
    }

    #[test]
    fn small_table() {
        let t = FactorTable::new(10).unwrap();
        assert_eq!(t.spf(4), Some(2));
        assert_eq!(t.spf(9), Some(3));
        assert_eq!(t.spf(7), Some(7));
        assert_eq!(t.spf(11), None);
        let t2 = FactorTable::new(2).unwrap();
        assert_eq!(t2.spf(2), Some(2));
    }

    #[test]
    fn table_limits() {
        assert!(matches!(
            FactorTable::new(1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            FactorTable::new(MAX_FACTOR_TABLE_LIMIT + 1),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn ten_million_spot_checks() {
        let t = FactorTable::new(10_000_000).unwrap();
        assert_eq!(trial_spf(9_999_991), 9_999_991);
        assert_eq!(t.spf(9_999_991), Some(9_999_991));
        for n in [9_999_990u64, 9_999_997, 4_999_999, 7_777_777, 10_000_000] {
            assert_eq!(t.spf(n), Some(trial_spf(n)), "n = {n}");
        }
    }

    #[test]
    fn spf_invariants_exhaustive() {
        let t = FactorTable::new(20_000).unwrap();
        for n in 2..=20_000u64 {
            let p = t.spf(n).unwrap();
            assert_eq!(n % p, 0);
            assert_eq!(trial_spf(p), p);
            assert_eq!(p == n, trial_spf(n) == n);
        }
    }

    #[test]
    fn factorizations() {
        assert!(factorize(1, None).unwrap().factors.is_empty());
        assert_eq!(factorize(100, None).unwrap().factors, vec![(2, 2), (5, 2)]);
        assert!(factorize(0, None).is_err());
        let t = FactorTable::new(1000).unwrap();
        assert_eq!(
            factorize(360, Some(&t)).unwrap().factors,
            vec![(2, 3), (3, 2), (5, 1)]
        );
        assert!(factorize(1001, Some(&t)).is_err());
    }

    /// Exponent of p in 12! by Legendre's formula.
    fn legendre(n: u64, p: u64) -> u32 {
        let mut e = 0;
        let mut pk = p;
        while pk <= n {
            e += (n / pk) as u32;
            pk *= p;
        }
        e
    }

    #[test]
    fn twelve_factorial() {
        let f = factorize(479_001_600, None).unwrap();
        let expected: Vec<(u64, u32)> = [2u64, 3, 5, 7, 11]
            .iter()
            .map(|&p| (p, legendre(12, p)))
            .collect();
        assert_eq!(expected, vec![(2, 10), (3, 5), (5, 2), (7, 1), (11, 1)]);
        assert_eq!(f.factors, expected);
    }

    #[test]
    fn moebius_small() {
        let mu = moebius_up_to(30);
        assert_eq!(&mu[1..=10], &[1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
        assert_eq!(mu[30], -1);
    }

    #[test]
    fn segmented_matches_trial_division() {
        let seg = SegmentedFactorizer::new(1_000_300).unwrap();
        seg.for_each(999_700, 1_000_300, |n, fs| {
            assert_eq!(
                fs,
                factorize(n, None).unwrap().factors.as_slice(),
                "n = {n}"
            );
        });
        seg.for_each(1, 500, |n, fs| {
            assert_eq!(
                fs,
                factorize(n, None).unwrap().factors.as_slice(),
                "n = {n}"
            );
        });
    }
}
