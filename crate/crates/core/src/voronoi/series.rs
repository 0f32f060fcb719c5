//! Bessel-series expressions for D(x) and Σ r(n).

use std::f64::consts::PI;

use serde::Serialize;

use super::bessel::{bessel_j1_with, bessel_k1_with, bessel_y1_with, BesselAccuracy};
use crate::abscissa::Abscissa;
use crate::error::{invalid, Error, Result};
use crate::numeric::{chunked_real_sum, isqrt};
use crate::summatory::divisor_sum_exact;
use crate::zeta::EULER_GAMMA;

/// Which constant is folded into Δ(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaConvention {
    /// Δ(x) = D(x) − (log x + 2γ − 1)x
    MainTermOnly,
    /// Δ(x) = D(x) − (log x + 2γ − 1)x − 1/4
    WithQuarter,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VoronoiSum {
    pub x: f64,
    pub terms: usize,
    pub value: f64,
    /// |n-th summand| at n = N, a truncation-quality indicator.
    pub last_term: f64,
}

fn require_non_integer(x: Abscissa) -> Result<()> {
    if x.is_integer() {
        return invalid(format!("x = {x} must not be an integer"));
    }
    Ok(())
}

/// d(1..=n) by a divisor sieve; index 0 unused.
pub(crate) fn divisor_table(n: usize) -> Vec<u32> {
    let mut d = vec![0u32; n + 1];
    for j in 1..=n {
        for k in (j..=n).step_by(j) {
            d[k] += 1;
        }
    }
    d
}

/// r(1..=n) by enumerating lattice points; index 0 unused.
pub(crate) fn two_squares_table(n: usize) -> Vec<u32> {
    let mut r = vec![0u32; n + 1];
    let root = isqrt(n as u64) as i64;
    for a in -root..=root {
        for b in -root..=root {
            let s = (a * a + b * b) as usize;
            if s >= 1 && s <= n {
                r[s] += 1;
            }
        }
    }
    r
}

/// Exact Δ(x) under the chosen convention.
pub fn divisor_delta(x: Abscissa, convention: DeltaConvention) -> Result<f64> {
    if x.floor() < 1 {
        return invalid("divisor_delta needs x >= 1");
    }
    let xv = x.value();
    let main = (xv.ln() + 2.0 * EULER_GAMMA - 1.0) * xv;
    let d = divisor_sum_exact(x.floor()) as f64;
    Ok(match convention {
        DeltaConvention::MainTermOnly => d - main,
        DeltaConvention::WithQuarter => d - main - 0.25,
    })
}

/// 1/4 + (log x + 2γ − 1)x − (2√x/π) Σ_{n≤N} d(n)/√n (K₁(z_n) + (π/2) Y₁(z_n)),
/// z_n = 4π√(nx).
pub fn voronoi_full(x: Abscissa, n_terms: usize) -> Result<VoronoiSum> {
    require_non_integer(x)?;
    let xv = x.value();
    if !(xv > 1.0) {
        return invalid("voronoi_full needs x > 1");
    }
    if n_terms < 1 {
        return invalid("voronoi_full needs N >= 1");
    }
    let acc = BesselAccuracy::default();
    let d = divisor_table(n_terms);
    let summand = |n: u64| -> Result<f64> {
        let nf = n as f64;
        let z = 4.0 * PI * (nf * xv).sqrt();
        let k = bessel_k1_with(z, &acc)?;
        let y = bessel_y1_with(z, &acc)?;
        Ok(d[n as usize] as f64 / nf.sqrt() * (k + 0.5 * PI * y))
    };
    // surface any argument error before the parallel sum
    let last = summand(n_terms as u64)?;
    let series = chunked_real_sum(1, n_terms as u64, |n| summand(n).unwrap_or(f64::NAN));
    if !series.is_finite() {
        return Err(Error::NonFinite("Voronoi series".into()));
    }
    let scale = 2.0 * xv.sqrt() / PI;
    Ok(VoronoiSum {
        x: xv,
        terms: n_terms,
        value: 0.25 + (xv.ln() + 2.0 * EULER_GAMMA - 1.0) * xv - scale * series,
        last_term: (scale * last).abs(),
    })
}

/// n-th summand of the truncated cosine series.
pub fn voronoi_cosine_term(x: f64, n: u64, d_n: u32) -> f64 {
    let nf = n as f64;
    x.powf(0.25) / (PI * 2f64.sqrt())
        * d_n as f64
        * nf.powf(-0.75)
        * (4.0 * PI * (nf * x).sqrt() - PI / 4.0).cos()
}

/// (x^{1/4}/(π√2)) Σ_{n≤N} d(n) n^{−3/4} cos(4π√(nx) − π/4), the
/// approximation to Δ(x) in the [`DeltaConvention::WithQuarter`] sense.
pub fn voronoi_truncated(x: Abscissa, n_terms: usize) -> Result<f64> {
    require_non_integer(x)?;
    let xv = x.value();
    if n_terms < 2 || n_terms as f64 >= xv {
        return invalid(format!(
            "voronoi_truncated needs 2 <= N < x, got N = {n_terms}, x = {x}"
        ));
    }
    let d = divisor_table(n_terms);
    Ok(chunked_real_sum(1, n_terms as u64, |n| {
        voronoi_cosine_term(xv, n, d[n as usize])
    }))
}

/// πx + √x Σ_{n≤N} r(n) n^{−1/2} J₁(2π√(nx)).
pub fn sierpinski_sum(x: Abscissa, n_terms: usize) -> Result<f64> {
    require_non_integer(x)?;
    if n_terms < 1 {
        return invalid("sierpinski_sum needs N >= 1");
    }
    let xv = x.value();
    let acc = BesselAccuracy::default();
    let zmax = 2.0 * PI * (n_terms as f64 * xv).sqrt();
    bessel_j1_with(zmax, &acc)?;
    let r = two_squares_table(n_terms);
    let series = chunked_real_sum(1, n_terms as u64, |n| {
        let rn = r[n as usize];
        if rn == 0 {
            return 0.0;
        }
        let nf = n as f64;
        let z = 2.0 * PI * (nf * xv).sqrt();
        rn as f64 / nf.sqrt() * bessel_j1_with(z, &acc).unwrap_or(f64::NAN)
    });
    if !series.is_finite() {
        return Err(Error::NonFinite("Sierpinski series".into()));
    }
    Ok(PI * xv + xv.sqrt() * series)
}
