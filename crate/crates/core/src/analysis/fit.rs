use serde::Serialize;

use crate::error::{invalid, Result};
use crate::explicit::DeltaSample;

/// Least-squares fit of log|Δ| = θ log x + c.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentFit {
    pub theta: f64,
    pub intercept: f64,
    pub samples: usize,
    pub decades: f64,
    /// Standard error of θ.
    pub theta_stderr: f64,
    /// Root-mean-square residual of log|Δ| about the fitted line.
    pub rms_residual: f64,
    pub r_squared: f64,
    /// Set when the residual scatter shows the samples oscillate about the
    /// line rather than follow a clean power law.
    pub oscillating: bool,
    /// Nearest of 1/4, 1/3, 1/2.
    pub nearest_landmark: String,
}

const OSCILLATION_RMS: f64 = 0.05;

pub fn exponent_fit(samples: &[DeltaSample]) -> Result<ExponentFit> {
    if samples.len() < 10 {
        return invalid(format!(
            "exponent fit needs at least 10 samples, got {}",
            samples.len()
        ));
    }
    if let Some(s) = samples
        .iter()
        .find(|s| !(s.delta.abs() > 0.0) || !(s.x > 0.0))
    {
        return invalid(format!("sample at x = {} has zero or undefined delta", s.x));
    }
    let (xmin, xmax) = samples.iter().fold((f64::INFINITY, 0.0f64), |(a, b), s| {
        (a.min(s.x), b.max(s.x))
    });
    let decades = (xmax / xmin).log10();
    if decades < 3.0 {
        return invalid(format!(
            "exponent fit needs samples spanning 3 decades, got {decades:.2}"
        ));
    }
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| (s.x.ln(), s.delta.abs().ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let theta = sxy / sxx;
    let intercept = my - theta * mx;
    let sse: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - theta * p.0).powi(2))
        .sum();
    let rms_residual = (sse / n).sqrt();
    let theta_stderr = (sse / (n - 2.0) / sxx).sqrt();
    let r_squared = if syy > 0.0 { 1.0 - sse / syy } else { 1.0 };
    let landmarks = [("1/4", 0.25), ("1/3", 1.0 / 3.0), ("1/2", 0.5)];
    let nearest = landmarks
        .iter()
        .min_by(|a, b| (a.1 - theta).abs().total_cmp(&(b.1 - theta).abs()))
        .expect("landmarks are nonempty");
    Ok(ExponentFit {
        theta,
        intercept,
        samples: samples.len(),
        decades,
        theta_stderr,
        rms_residual,
        r_squared,
        oscillating: rms_residual > OSCILLATION_RMS,
        nearest_landmark: nearest.0.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(f: impl Fn(f64) -> f64) -> Vec<DeltaSample> {
        (0..60)
            .map(|i| 10f64.powf(2.0 + i as f64 / 10.0))
            .map(|x| DeltaSample::new(x, f(x), 0.0))
            .collect()
    }

    #[test]
    fn planted_exponents() {
        for theta in [0.25, 1.0 / 3.0, 0.5] {
            let fit = exponent_fit(&synthetic(|x| 3.0 * x.powf(theta))).unwrap();
            assert!((fit.theta - theta).abs() < 1e-6, "{}", fit.theta);
            assert!(!fit.oscillating);
        }
        assert_eq!(
            exponent_fit(&synthetic(|x| x.powf(0.34)))
                .unwrap()
                .nearest_landmark,
            "1/3"
        );
    }

    #[test]
    fn oscillation_is_flagged() {
        let fit = exponent_fit(&synthetic(|x| x.powf(0.25) * (2.0 + x.ln().cos()))).unwrap();
        assert!((fit.theta - 0.25).abs() < 0.05, "{}", fit.theta);
        assert!(fit.oscillating);
    }

    #[test]
    fn degenerate_inputs() {
        let s = synthetic(|x| x);
        assert!(exponent_fit(&s[..5]).is_err());
        assert!(exponent_fit(&s[..20]).is_err());
        let mut z = s.clone();
        z[3] = DeltaSample::new(z[3].x, 0.0, 0.0);
        assert!(exponent_fit(&z).is_err());
    }
}
