//! Order-one Bessel functions J₁, Y₁, K₁ for real arguments.
//!
//! Ascending series below the switch point, Hankel-type asymptotic
//! expansions above it.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::zeta::EULER_GAMMA;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselAccuracy {
    pub series_cutoff_terms: usize,
    pub asymptotic_switch_point: f64,
    pub target_abs_error: f64,
    /// Largest supported argument; beyond it the phase of the oscillatory
    /// factor loses too many digits.
    pub envelope: f64,
}

impl Default for BesselAccuracy {
    fn default() -> Self {
        Self {
            series_cutoff_terms: 80,
            asymptotic_switch_point: 12.0,
            target_abs_error: 1e-10,
            envelope: 1e8,
        }
    }
}

fn check(z: f64, acc: &BesselAccuracy, singular_at_zero: bool) -> Result<()> {
    if !z.is_finite() || z < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "Bessel argument must be finite and >= 0, got {z}"
        )));
    }
    if singular_at_zero && z == 0.0 {
        return Err(Error::Singularity("Y1 and K1 are singular at z = 0".into()));
    }
    if z > acc.envelope {
        return Err(Error::AccuracyUnsupported(format!(
            "Bessel argument {z} exceeds {}",
            acc.envelope
        )));
    }
    Ok(())
}

/// Σ_k c_k (σ z²/4)^k (z/2) / (k!(k+1)!) where `weight(k)` supplies c_k.
fn ascending(z: f64, sign: f64, terms: usize, weight: impl Fn(usize) -> f64) -> f64 {
    let q = sign * z * z / 4.0;
    let mut t = z / 2.0; // (z/2)(q)^k/(k!(k+1)!) at k = 0
    let mut sum = 0.0;
    for k in 0..terms {
        let term = weight(k) * t;
        sum += term;
        if t.abs() < 1e-18 * sum.abs().max(1e-300) && k > 2 {
            break;
        }
        t *= q / ((k + 1) as f64 * (k + 2) as f64);
    }
    sum
}

/// ψ(k+1) + ψ(k+2) = −2γ + 2H_k + 1/(k+1).
fn psi_pair(k: usize) -> f64 {
    let h: f64 = (1..=k).map(|j| 1.0 / j as f64).sum();
    -2.0 * EULER_GAMMA + 2.0 * h + 1.0 / (k + 1) as f64
}

pub fn j1_series(z: f64, terms: usize) -> f64 {
    ascending(z, -1.0, terms, |_| 1.0)
}

fn i1_series(z: f64, terms: usize) -> f64 {
    ascending(z, 1.0, terms, |_| 1.0)
}

pub fn y1_series(z: f64, terms: usize) -> f64 {
    -2.0 / (PI * z) + 2.0 / PI * (z / 2.0).ln() * j1_series(z, terms)
        - ascending(z, -1.0, terms, psi_pair) / PI
}

pub fn k1_series(z: f64, terms: usize) -> f64 {
    1.0 / z + (z / 2.0).ln() * i1_series(z, terms) - 0.5 * ascending(z, 1.0, terms, psi_pair)
}

/// (P, Q) of the Hankel expansion for ν = 1, summed until terms stop
/// decreasing.
fn hankel_pq(z: f64) -> (f64, f64) {
    let mu = 4.0;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut a: f64 = 1.0; // a_k(1) / z^k
    let mut last = f64::INFINITY;
    for k in 0..60usize {
        if a.abs() > last {
            break;
        }
        last = a.abs();
        match k % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
        if a.abs() < 1e-17 {
            break;
        }
        let odd = (2 * k + 1) as f64;
        a *= (mu - odd * odd) / ((k + 1) as f64 * 8.0 * z);
    }
    (p, q)
}

pub fn j1_asymptotic(z: f64) -> f64 {
    let (p, q) = hankel_pq(z);
    let chi = z - 3.0 * PI / 4.0;
    (2.0 / (PI * z)).sqrt() * (p * chi.cos() - q * chi.sin())
}

pub fn y1_asymptotic(z: f64) -> f64 {
    let (p, q) = hankel_pq(z);
    let chi = z - 3.0 * PI / 4.0;
    (2.0 / (PI * z)).sqrt() * (p * chi.sin() + q * chi.cos())
}

pub fn k1_asymptotic(z: f64) -> f64 {
    let mu = 4.0;
    let mut sum = 0.0;
    let mut a: f64 = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..60usize {
        if a.abs() > last {
            break;
        }
        last = a.abs();
        sum += a;
        if a.abs() < 1e-17 {
            break;
        }
        let odd = (2 * k + 1) as f64;
        a *= (mu - odd * odd) / ((k + 1) as f64 * 8.0 * z);
    }
    (FRAC_PI_2 / z).sqrt() * (-z).exp() * sum
}

pub fn bessel_j1_with(z: f64, acc: &BesselAccuracy) -> Result<f64> {
    check(z, acc, false)?;
    Ok(if z < acc.asymptotic_switch_point {
        j1_series(z, acc.series_cutoff_terms)
    } else {
        j1_asymptotic(z)
    })
}

pub fn bessel_y1_with(z: f64, acc: &BesselAccuracy) -> Result<f64> {
    check(z, acc, true)?;
    Ok(if z < acc.asymptotic_switch_point {
        y1_series(z, acc.series_cutoff_terms)
    } else {
        y1_asymptotic(z)
    })
}

pub fn bessel_k1_with(z: f64, acc: &BesselAccuracy) -> Result<f64> {
    check(z, acc, true)?;
    Ok(if z < acc.asymptotic_switch_point {
        k1_series(z, acc.series_cutoff_terms)
    } else {
        k1_asymptotic(z)
    })
}

pub fn bessel_j1(z: f64) -> Result<f64> {
    bessel_j1_with(z, &BesselAccuracy::default())
}

pub fn bessel_y1(z: f64) -> Result<f64> {
    bessel_y1_with(z, &BesselAccuracy::default())
}

pub fn bessel_k1(z: f64) -> Result<f64> {
    bessel_k1_with(z, &BesselAccuracy::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_one() {
        assert_eq!(bessel_j1(0.0).unwrap(), 0.0);
        assert!((bessel_j1(1.0).unwrap() - 0.440_050_585_744_933_5).abs() < 1e-14);
        assert!((bessel_y1(1.0).unwrap() + 0.781_212_821_300_288_7).abs() < 1e-14);
        assert!((bessel_k1(1.0).unwrap() - 0.601_907_230_197_234_6).abs() < 1e-14);
    }

    #[test]
    fn singular_and_envelope() {
        assert!(matches!(bessel_y1(0.0), Err(Error::Singularity(_))));
        assert!(matches!(bessel_k1(0.0), Err(Error::Singularity(_))));
        assert!(matches!(bessel_j1(1e9), Err(Error::AccuracyUnsupported(_))));
        assert!(bessel_j1(-1.0).is_err());
    }

    #[test]
    fn branches_meet_at_switch() {
        for z in [10.5, 11.0, 11.5, 12.0, 12.5, 13.0, 14.0] {
            assert!(
                (j1_series(z, 80) - j1_asymptotic(z)).abs() < 1e-10,
                "J1 {z}"
            );
            assert!(
                (y1_series(z, 80) - y1_asymptotic(z)).abs() < 1e-10,
                "Y1 {z}"
            );
            assert!(
                (k1_series(z, 80) - k1_asymptotic(z)).abs() < 1e-10,
                "K1 {z}"
            );
        }
    }

    #[test]
    fn k1_large_argument_law() {
        let z: f64 = 50.0;
        let r = bessel_k1(z).unwrap() * z.exp() * z.sqrt() / FRAC_PI_2.sqrt();
        assert!((r - 1.0).abs() < 0.01, "{r}");
    }

    #[test]
    fn reference_values() {
        // J1(20), Y1(20), K1(5) from an independent evaluation
        assert!((bessel_j1(20.0).unwrap() - 0.066_833_124_175_850_05).abs() < 1e-12);
        assert!((bessel_y1(20.0).unwrap() + 0.165_511_614_362_521_4).abs() < 1e-12);
        assert!((bessel_k1(5.0).unwrap() - 0.004_044_613_445_452_164).abs() < 1e-14);
    }
}
