use serde::Serialize;

use super::functions::{eval_from_factors, FnSpec};
use super::sieve::FactorTable;
use crate::error::{invalid, Result};

/// Finite-range evidence for the upper and lower growth bounds of d(n)
/// expressed through 2^{log n / log log n}.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub n_max: u64,
    pub epsilon: f64,
    /// n with d(n) ≥ 2^{(1+ε) log n / log log n}.
    pub upper_violations: Vec<u64>,
    /// How many n have d(n) > 2^{(1−ε) log n / log log n}.
    pub lower_bound_hits: u64,
    /// Fraction of n strictly inside the two-sided band.
    pub band_fraction: f64,
}

/// log₂ of the reference size 2^{log n / log log n}, i.e. log n / log log n.
pub fn growth_exponent(n: u64) -> f64 {
    let l = (n as f64).ln();
    l / l.ln()
}

pub fn growth_bound_check(n_max: u64, epsilon: f64) -> Result<GrowthReport> {
    if n_max < 16 {
        return invalid(format!("growth check needs n_max >= 16, got {n_max}"));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return invalid(format!("epsilon must lie in (0, 1), got {epsilon}"));
    }
    let table = FactorTable::new(n_max)?;
    let mut upper_violations = Vec::new();
    let mut lower_bound_hits = 0u64;
    let mut inside = 0u64;
    for n in 16..=n_max {
        let f = table.factorize(n)?;
        let log2_d = (eval_from_factors(FnSpec::Divisors, n, &f.factors)? as f64).log2();
        let g = growth_exponent(n);
        let above_lower = log2_d > (1.0 - epsilon) * g;
        let below_upper = log2_d < (1.0 + epsilon) * g;
        if !below_upper {
            upper_violations.push(n);
        }
        if above_lower {
            lower_bound_hits += 1;
        }
        if above_lower && below_upper {
            inside += 1;
        }
    }
    Ok(GrowthReport {
        n_max,
        epsilon,
        upper_violations,
        lower_bound_hits,
        band_fraction: inside as f64 / (n_max - 15) as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_band_is_nearly_everything() {
        let r = growth_bound_check(1000, 0.99).unwrap();
        assert!(r.band_fraction > 0.9, "{}", r.band_fraction);
        let narrow = growth_bound_check(1000, 0.2).unwrap();
        assert!(narrow.band_fraction <= r.band_fraction);
    }

    #[test]
    fn upper_violations_thin_out() {
        let r = growth_bound_check(10_000, 0.5).unwrap();
        let early = r.upper_violations.iter().filter(|&&n| n < 1000).count();
        let late = r.upper_violations.iter().filter(|&&n| n >= 9000).count();
        assert!(late <= early);
        for &n in &r.upper_violations {
            assert!((16..=10_000).contains(&n));
        }
    }

    #[test]
    fn highly_composite_exceeds_reference() {
        let g = growth_exponent(720_720);
        let reference = 2f64.powf(g);
        assert!((reference - 36.4).abs() < 0.5, "{reference}");
        assert!(240.0 > reference);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(growth_bound_check(15, 0.5).is_err());
        assert!(growth_bound_check(100, 1.0).is_err());
    }
}
