use serde::{Deserialize, Serialize};

use super::formula::main_parts;
use super::{FormulaVariant, OverNConstant, Target};
use crate::abscissa::Abscissa;
use crate::error::{invalid, Result};
use crate::summatory::scan::scan_real;
use crate::summatory::{divisor_sum_exact, two_omega_sum_exact, Oracle};

/// Exact S(x) for each point; the `_over_n` sum is scanned once up to the
/// largest point.
pub(crate) fn exact_sums(target: Target, xs: &[Abscissa]) -> Result<Vec<f64>> {
    let oracle = Oracle::default();
    for x in xs {
        oracle.check(x.floor())?;
    }
    match target {
        Target::DivisorSum => Ok(xs
            .iter()
            .map(|x| divisor_sum_exact(x.floor()) as f64)
            .collect()),
        Target::TwoOmegaSum => Ok(xs
            .iter()
            .map(|x| two_omega_sum_exact(x.floor()) as f64)
            .collect()),
        Target::TwoOmegaOverNSum => {
            let mut cps: Vec<u64> = xs.iter().map(|x| x.floor()).collect();
            cps.sort_unstable();
            cps.dedup();
            let sums = scan_real(&cps, |m, fs| Ok((1u64 << fs.len()) as f64 / m as f64))?;
            Ok(xs
                .iter()
                .map(|x| sums[cps.binary_search(&x.floor()).unwrap()])
                .collect())
        }
    }
}

pub(crate) fn exact_sum(target: Target, x: Abscissa) -> Result<f64> {
    Ok(exact_sums(target, &[x])?[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaSample {
    pub x: f64,
    pub exact: f64,
    pub predicted: f64,
    pub delta: f64,
    pub delta_over_x14: f64,
    pub delta_over_x12: f64,
}

impl DeltaSample {
    pub fn new(x: f64, exact: f64, predicted: f64) -> Self {
        let delta = exact - predicted;
        Self {
            x,
            exact,
            predicted,
            delta,
            delta_over_x14: delta / x.powf(0.25),
            delta_over_x12: delta / x.sqrt(),
        }
    }
}

/// The prediction Δ is measured against: the x-dependent main term for D
/// and Σ 2^{ω(n)}, and main term plus the residue constant for
/// Σ 2^{ω(n)}/n, whose main term alone does not tend to the sum.
fn prediction(target: Target, x: f64) -> f64 {
    let variant = FormulaVariant {
        over_n_constant: OverNConstant::Residue,
        ..Default::default()
    };
    let (constant, main) = main_parts(target, x, variant);
    match target {
        Target::TwoOmegaOverNSum => constant + main,
        _ => main,
    }
}

fn require_at_least_one(x: Abscissa) -> Result<()> {
    if x.floor() < 1 {
        return invalid(format!("delta needs x >= 1, got {x}"));
    }
    Ok(())
}

pub fn delta_error(target: Target, x: Abscissa) -> Result<DeltaSample> {
    require_at_least_one(x)?;
    let exact = exact_sum(target, x)?;
    let xv = x.value();
    Ok(DeltaSample::new(xv, exact, prediction(target, xv)))
}

/// Samples at every grid point, sharing one scan where the target needs it.
pub fn delta_samples(target: Target, grid: &[Abscissa]) -> Result<Vec<DeltaSample>> {
    for &x in grid {
        require_at_least_one(x)?;
    }
    let exact = exact_sums(target, grid)?;
    Ok(grid
        .iter()
        .zip(exact)
        .map(|(x, e)| DeltaSample::new(x.value(), e, prediction(target, x.value())))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaReport {
    pub target: Target,
    pub samples: usize,
    /// max of Δ/x^{1/4} and where it occurs
    pub sup: f64,
    pub sup_at: f64,
    pub inf: f64,
    pub inf_at: f64,
    /// Sign changes of Δ between consecutive grid points.
    pub sign_changes: usize,
}

pub fn omega_scan(target: Target, grid: &[Abscissa]) -> Result<OmegaReport> {
    if grid.is_empty() {
        return invalid("omega_scan needs a nonempty grid");
    }
    let samples = delta_samples(target, grid)?;
    let mut report = OmegaReport {
        target,
        samples: samples.len(),
        sup: f64::NEG_INFINITY,
        sup_at: f64::NAN,
        inf: f64::INFINITY,
        inf_at: f64::NAN,
        sign_changes: 0,
    };
    for s in &samples {
        if s.delta_over_x14 > report.sup {
            report.sup = s.delta_over_x14;
            report.sup_at = s.x;
        }
        if s.delta_over_x14 < report.inf {
            report.inf = s.delta_over_x14;
            report.inf_at = s.x;
        }
    }
    report.sign_changes = samples
        .windows(2)
        .filter(|w| {
            w[0].delta != 0.0 && w[1].delta != 0.0 && (w[0].delta > 0.0) != (w[1].delta > 0.0)
        })
        .count();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_delta_examples() {
        let s = delta_error(Target::DivisorSum, 100.into()).unwrap();
        assert_eq!(s.exact, 482.0);
        assert!((s.delta - 6.04).abs() < 0.01, "{}", s.delta);
        let s = delta_error(Target::DivisorSum, 1.into()).unwrap();
        assert!((s.delta - 0.8456).abs() < 1e-4, "{}", s.delta);
        assert!((s.delta_over_x14 - s.delta_over_x12 * s.x.powf(0.25)).abs() < 1e-15);
    }

    #[test]
    fn over_n_exact_matches_auxiliary_sum() {
        use crate::summatory::{auxiliary_sums, AuxiliaryKind};
        let grid: Vec<Abscissa> = [500u64, 20, 20, 7000]
            .iter()
            .map(|&n| Abscissa::half_above(n))
            .collect();
        let e = exact_sums(Target::TwoOmegaOverNSum, &grid).unwrap();
        for (x, v) in grid.iter().zip(e) {
            let direct = auxiliary_sums(AuxiliaryKind::TwoOmegaOverN, *x)
                .unwrap()
                .value
                .as_f64();
            assert_eq!(v, direct);
        }
    }

    #[test]
    fn scan_finds_both_signs() {
        let grid: Vec<Abscissa> = (10..10_000).step_by(37).map(Abscissa::half_above).collect();
        let r = omega_scan(Target::DivisorSum, &grid).unwrap();
        assert!(r.sup > 0.0 && r.inf < 0.0);
        assert!(r.sign_changes > 0);
        let one = omega_scan(Target::TwoOmegaSum, &grid[..1]).unwrap();
        assert_eq!(one.sup, one.inf);
        assert!(omega_scan(Target::DivisorSum, &[]).is_err());
    }
}
