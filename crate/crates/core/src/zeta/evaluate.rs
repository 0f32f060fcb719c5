//! ζ(s) and ζ'(s) by Euler–Maclaurin summation, continued to Re s < 0 by
//! the functional equation.

use num_complex::Complex64;

use super::bernoulli::even_bernoulli_over_factorial;
use super::gamma::{digamma_complex, ln_gamma};
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

pub type ComplexValue = Complex64;

/// Largest |Im s| for which the documented accuracy holds.
pub const IM_ENVELOPE: f64 = 1.0e5;
const CORRECTION_TERMS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaRoute {
    /// Pick the route from Re s.
    Auto,
    EulerMaclaurin,
    FunctionalEquation,
}

fn check_input(s: Complex64) -> Result<()> {
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::NonFinite(format!("argument {s}")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole);
    }
    if s.im.abs() > IM_ENVELOPE {
        return Err(Error::AccuracyUnsupported(format!(
            "|Im s| = {} exceeds the envelope {IM_ENVELOPE}",
            s.im.abs()
        )));
    }
    Ok(())
}

fn finite(v: Complex64, what: &str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

fn cutoff(s: Complex64) -> u64 {
    20u64.max((2.0 * s.im.abs()).ceil() as u64)
}

#[derive(Default)]
struct ComplexSum {
    re: CompensatedSum,
    im: CompensatedSum,
}

impl ComplexSum {
    fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }
    fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// (ζ(s), ζ'(s)) by Euler–Maclaurin with cutoff N and ten correction terms.
fn euler_maclaurin(s: Complex64, derivative: bool) -> (Complex64, Complex64) {
    let n_cut = cutoff(s);
    let mut head = ComplexSum::default();
    let mut dhead = ComplexSum::default();
    for n in 1..n_cut {
        let ln_n = (n as f64).ln();
        let t = (-s * ln_n).exp();
        head.add(t);
        if derivative {
            dhead.add(-ln_n * t);
        }
    }
    let nf = n_cut as f64;
    let ln_n = nf.ln();
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    let sm1 = s - 1.0;
    let mut z = head.value() + n_pow * nf / sm1 + 0.5 * n_pow;
    let mut dz = dhead.value() - n_pow * nf * (ln_n / sm1 + 1.0 / (sm1 * sm1)) - 0.5 * ln_n * n_pow;

    // Σ B_{2k}/(2k)! (s)_{2k−1} N^{−s−2k+1}
    let coeffs = even_bernoulli_over_factorial(CORRECTION_TERMS);
    let mut poch = Complex64::new(1.0, 0.0);
    let mut dpoch = Complex64::new(0.0, 0.0);
    let mut next = 0usize; // rising factorial currently has `next` factors
    let mut npow = n_pow; // N^{−s−j} with j = next
    for (k, &c) in coeffs.iter().enumerate() {
        let j = 2 * k + 1;
        while next < j {
            let f = s + next as f64;
            dpoch = dpoch * f + poch;
            poch *= f;
            npow /= nf;
            next += 1;
        }
        z += c * poch * npow;
        if derivative {
            dz += c * npow * (dpoch - ln_n * poch);
        }
    }
    (z, dz)
}

/// ln|prefactor| pieces of χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s), leaving
/// the sine out: returns ln(2^s π^{s−1} Γ(1−s)).
fn chi_log_without_sine(s: Complex64) -> Complex64 {
    let ln2 = std::f64::consts::LN_2;
    let lnpi = std::f64::consts::PI.ln();
    s * ln2 + (s - 1.0) * lnpi + ln_gamma(1.0 - s)
}

/// Multiplies `exp(log)` by `sin(z)` or `cos(z)` without overflow for
/// large |Im z|.
fn exp_times_trig(log: Complex64, z: Complex64, cosine: bool) -> Complex64 {
    if z.im.abs() < 300.0 {
        let trig = if cosine { z.cos() } else { z.sin() };
        return log.exp() * trig;
    }
    // sin z = (e^{iz} − e^{−iz})/(2i), cos z = (e^{iz} + e^{−iz})/2; keep only
    // the dominant exponential, the other is below e^{−600}.
    let i = Complex64::new(0.0, 1.0);
    if z.im > 0.0 {
        let dom = log - i * z; // e^{−iz}
        if cosine {
            (dom - std::f64::consts::LN_2).exp()
        } else {
            -(dom - std::f64::consts::LN_2).exp() / i
        }
    } else {
        let dom = log + i * z; // e^{iz}
        if cosine {
            (dom - std::f64::consts::LN_2).exp()
        } else {
            (dom - std::f64::consts::LN_2).exp() / i
        }
    }
}

fn functional_equation(s: Complex64, derivative: bool) -> Result<(Complex64, Complex64)> {
    let (z1, dz1) = euler_maclaurin(1.0 - s, derivative);
    let half_pi_s = std::f64::consts::FRAC_PI_2 * s;
    let log = chi_log_without_sine(s);
    let chi = exp_times_trig(log, half_pi_s, false);
    let z = chi * z1;
    if !derivative {
        return Ok((z, Complex64::new(0.0, 0.0)));
    }
    // χ'(s) = 2^s π^{s−1} Γ(1−s) [(ln 2π − ψ(1−s)) sin(πs/2) + (π/2) cos(πs/2)]
    let l2pi = (2.0 * std::f64::consts::PI).ln();
    let psi = digamma_complex(1.0 - s);
    let chi_prime =
        (l2pi - psi) * chi + std::f64::consts::FRAC_PI_2 * exp_times_trig(log, half_pi_s, true);
    Ok((z, chi_prime * z1 - chi * dz1))
}

fn evaluate(s: Complex64, route: ZetaRoute, derivative: bool) -> Result<(Complex64, Complex64)> {
    check_input(s)?;
    let use_fe = match route {
        ZetaRoute::Auto => s.re < 0.0,
        ZetaRoute::EulerMaclaurin => false,
        ZetaRoute::FunctionalEquation => {
            if s.re > 1.0 || (1.0 - s) == Complex64::new(1.0, 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "functional-equation route needs Re s <= 1 and s != 0, got {s}"
                )));
            }
            true
        }
    };
    let (z, dz) = if use_fe {
        functional_equation(s, derivative)?
    } else {
        euler_maclaurin(s, derivative)
    };
    Ok((finite(z, "zeta value")?, finite(dz, "zeta derivative")?))
}

/// ζ(s) for s ≠ 1, |Im s| ≤ 10⁵.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    Ok(evaluate(s, ZetaRoute::Auto, false)?.0)
}

/// ζ(s) by an explicitly chosen route; used for cross-checks.
pub fn zeta_via(s: ComplexValue, route: ZetaRoute) -> Result<ComplexValue> {
    Ok(evaluate(s, route, false)?.0)
}

/// ζ'(s) by the differentiated Euler–Maclaurin formula (and the
/// differentiated functional equation for Re s < 0).
pub fn zeta_derivative(s: ComplexValue) -> Result<ComplexValue> {
    Ok(evaluate(s, ZetaRoute::Auto, true)?.1)
}

pub fn zeta_derivative_via(s: ComplexValue, route: ZetaRoute) -> Result<ComplexValue> {
    Ok(evaluate(s, route, true)?.1)
}

/// ζ(s) and ζ'(s) from one Euler–Maclaurin pass.
pub fn zeta_and_derivative(s: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    evaluate(s, ZetaRoute::Auto, true)
}

pub fn zeta_real(s: f64) -> Result<f64> {
    Ok(zeta(Complex64::new(s, 0.0))?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_values() {
        assert!((zeta_real(0.0).unwrap() + 0.5).abs() < 1e-14);
        assert!((zeta_real(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_real(-1.0).unwrap() + 1.0 / 12.0).abs() < 1e-14);
        assert!((zeta_real(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta_real(0.5).unwrap() + 1.4603545088095868).abs() < 1e-13);
        for n in 1..=5 {
            assert!(zeta_real(-2.0 * n as f64).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn first_zero() {
        let z = zeta(c(0.5, 14.134_725_141_734_695)).unwrap();
        assert!(z.norm() < 1e-9, "{z}");
    }

    #[test]
    fn derivative_values() {
        assert!((zeta_derivative(c(2.0, 0.0)).unwrap().re + 0.937_548_254_315_843_8).abs() < 1e-12);
        assert!(
            (zeta_derivative(c(-2.0, 0.0)).unwrap().re + 0.030_448_457_058_393_27).abs() < 1e-12
        );
        assert!((zeta_derivative(c(0.0, 0.0)).unwrap().re + 0.5 * (2.0 * PI).ln()).abs() < 1e-12);
        let d = zeta_derivative(c(0.5, 14.134_725_141_734_695)).unwrap();
        assert!(
            (d - c(0.783296511867031, 0.124699829748171)).norm() < 1e-10,
            "{d}"
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(zeta(c(1.0, 0.0)), Err(Error::Pole)));
        assert!(matches!(
            zeta(c(0.5, 2.0e5)),
            Err(Error::AccuracyUnsupported(_))
        ));
        assert!(matches!(zeta(c(f64::NAN, 0.0)), Err(Error::NonFinite(_))));
    }

    #[test]
    fn large_height() {
        // |ζ(1/2 + 10⁴ i)| from an independent evaluation
        let z = zeta(c(0.5, 10_000.0)).unwrap();
        assert!(
            (z.norm() - 0.341_394_724_231_208_54).abs() < 1e-8,
            "{}",
            z.norm()
        );
        let w = zeta(c(-0.5, 3_000.0)).unwrap();
        let v = zeta_via(c(-0.5, 3_000.0), ZetaRoute::EulerMaclaurin).unwrap();
        assert!((w - v).norm() < 1e-8 * v.norm().max(1.0), "{w} {v}");
    }
}
