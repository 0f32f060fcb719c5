//! Log-gamma and digamma by recurrence shift plus Stirling-type series.

use num_complex::Complex64;

use super::bernoulli::bernoulli_f64;
use crate::error::{invalid, Result};

const SHIFT_TO: f64 = 10.0;
const SERIES_TERMS: usize = 10;

/// ln Γ(z) for Re z > 0, continuous in z (branch followed from the
/// positive real axis).
pub(crate) fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut acc = (w - 0.5) * w.ln() - w + half_ln_2pi;
    let w2 = w * w;
    let mut wpow = w;
    for k in 1..=SERIES_TERMS {
        let b = bernoulli_f64(2 * k).unwrap();
        acc += b / ((2 * k * (2 * k - 1)) as f64 * wpow);
        wpow *= w2;
    }
    acc - shift
}

/// ψ(z) for Re z > 0.
pub(crate) fn digamma_complex(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0);
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < SHIFT_TO {
        shift += w.inv();
        w += 1.0;
    }
    let mut acc = w.ln() - 0.5 / w;
    let w2 = w * w;
    let mut wpow = w2;
    for k in 1..=SERIES_TERMS {
        let b = bernoulli_f64(2 * k).unwrap();
        acc -= b / ((2 * k) as f64 * wpow);
        wpow *= w2;
    }
    acc - shift
}

/// ψ(z) = Γ'(z)/Γ(z) for real z > 0.
pub fn digamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return invalid(format!("digamma needs a finite z > 0, got {z}"));
    }
    let mut shift = 0.0;
    let mut w = z;
    while w < SHIFT_TO {
        shift += 1.0 / w;
        w += 1.0;
    }
    let mut acc = w.ln() - 0.5 / w;
    let w2 = w * w;
    let mut wpow = w2;
    for k in 1..=SERIES_TERMS {
        acc -= bernoulli_f64(2 * k).unwrap() / ((2 * k) as f64 * wpow);
        wpow *= w2;
    }
    Ok(acc - shift)
}

/// γ(a, q) = −(ψ(a/q) + log q)/q.
pub fn generalized_euler_constant(a: u64, q: u64) -> Result<f64> {
    if a < 1 || q < 1 {
        return invalid(format!(
            "generalized Euler constant needs a, q >= 1, got a = {a}, q = {q}"
        ));
    }
    let qf = q as f64;
    Ok(-(digamma(a as f64 / qf)? + qf.ln()) / qf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::EULER_GAMMA;

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-13);
        let half = -EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5).unwrap() - half).abs() < 1e-13);
        // ψ(z+1) = ψ(z) + 1/z
        for z in [0.01, 0.3, 2.7, 55.0] {
            assert!(
                (digamma(z + 1.0).unwrap() - digamma(z).unwrap() - 1.0 / z).abs()
                    < 1e-11 * (1.0 / z).max(1.0)
            );
        }
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
    }

    #[test]
    fn generalized_constants() {
        assert!((generalized_euler_constant(1, 1).unwrap() - EULER_GAMMA).abs() < 1e-13);
        let diff =
            generalized_euler_constant(1, 4).unwrap() - generalized_euler_constant(3, 4).unwrap();
        assert!((diff - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
        // the classes mod q partition the harmonic constant
        let sum: f64 = (1..=6)
            .map(|a| generalized_euler_constant(a, 6).unwrap())
            .sum();
        assert!((sum - EULER_GAMMA).abs() < 1e-12, "{sum}");
    }

    #[test]
    fn log_gamma_values() {
        let l = ln_gamma(Complex64::new(0.5, 0.0));
        assert!((l.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-13 && l.im.abs() < 1e-15);
        let l = ln_gamma(Complex64::new(11.0, 0.0));
        assert!((l.re - 3_628_800f64.ln()).abs() < 1e-12);
        // |Γ(1/2 + it)|² = π / cosh(πt)
        let t: f64 = 3.0;
        let l = ln_gamma(Complex64::new(0.5, t));
        let expected = 0.5 * (std::f64::consts::PI / (std::f64::consts::PI * t).cosh()).ln();
        assert!((l.re - expected).abs() < 1e-12);
        let d = digamma_complex(Complex64::new(1.0, 0.0));
        assert!((d.re + EULER_GAMMA).abs() < 1e-13);
    }
}
