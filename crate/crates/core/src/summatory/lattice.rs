use rayon::prelude::*;

use super::{require_at_least_one, Oracle};
use crate::abscissa::Abscissa;
use crate::arith::SegmentedFactorizer;
use crate::error::{invalid, Result};
use crate::numeric::{isqrt, CHUNK_LEN};

/// #{(a, b) ∈ Z² : 0 < a² + b² ≤ x}, counted column by column.
pub fn circle_lattice_sum(x: Abscissa) -> i128 {
    let n = x.floor();
    let r = isqrt(n);
    let mut total: i128 = 0;
    for a in 0..=r {
        let col = 2 * isqrt(n - a * a) as i128 + 1;
        total += if a == 0 { col } else { 2 * col };
    }
    total - 1
}

/// Σ_{n ≤ x} d(n) d(n + m).
pub fn shifted_divisor_sum(x: Abscissa, m: u64) -> Result<i128> {
    require_at_least_one(x)?;
    if m < 1 {
        return invalid("shift m must be at least 1");
    }
    let n = x.floor();
    let top = n
        .checked_add(m)
        .ok_or_else(|| crate::Error::Overflow("x + m".into()))?;
    Oracle::default().check(top)?;
    let factorizer = SegmentedFactorizer::new(top)?;
    let chunks = (n - 1) / CHUNK_LEN + 1;
    let partials: Vec<i128> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = 1 + c * CHUNK_LEN;
            let hi = (lo + CHUNK_LEN - 1).min(n);
            let mut d = Vec::with_capacity((hi + m - lo + 1) as usize);
            factorizer.for_each(lo, hi + m, |_, fs| {
                d.push(fs.iter().map(|&(_, e)| e as i128 + 1).product::<i128>());
            });
            let span = (hi - lo + 1) as usize;
            (0..span).map(|i| d[i] * d[i + m as usize]).sum()
        })
        .collect();
    Ok(partials.into_iter().sum())
}

/// Leading term (6/π²)(σ(m)/m) x log² x.
pub fn shifted_divisor_predictor(x: f64, m: u64) -> f64 {
    let sigma: u64 = (1..=m).filter(|d| m.is_multiple_of(*d)).sum();
    let l = x.ln();
    6.0 / (std::f64::consts::PI * std::f64::consts::PI) * (sigma as f64 / m as f64) * x * l * l
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate(n: i64) -> i128 {
        let r = (n as f64).sqrt() as i64 + 1;
        let mut c = 0;
        for a in -r..=r {
            for b in -r..=r {
                let s = a * a + b * b;
                if s > 0 && s <= n {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn circle_examples() {
        assert_eq!(circle_lattice_sum(10.into()), 36);
        assert_eq!(circle_lattice_sum(Abscissa::from_f64(0.5).unwrap()), 0);
        assert_eq!(circle_lattice_sum(0.into()), 0);
        for n in [1i64, 2, 5, 25, 99, 1000] {
            assert_eq!(circle_lattice_sum((n as u64).into()), enumerate(n), "{n}");
        }
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(shifted_divisor_sum(5.into(), 1).unwrap(), 26);
        assert_eq!(shifted_divisor_sum(1.into(), 1).unwrap(), 2);
        assert!(shifted_divisor_sum(5.into(), 0).is_err());
        let mut d = vec![0i128; 70_007];
        for j in 1..d.len() {
            for k in (j..d.len()).step_by(j) {
                d[k] += 1;
            }
        }
        let direct: i128 = (1..=70_000usize).map(|k| d[k] * d[k + 6]).sum();
        assert_eq!(shifted_divisor_sum(70_000.into(), 6).unwrap(), direct);
    }
}
