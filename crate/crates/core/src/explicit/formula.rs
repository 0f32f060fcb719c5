use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::delta::exact_sum;
use super::{
    FormulaVariant, OverNConstant, TailSign, Target, TrivialDenominator, TruncationConfig,
    ZeroCoefficient,
};
use crate::abscissa::Abscissa;
use crate::error::{invalid, Error, Result};
use crate::numeric::CompensatedSum;
use crate::zeta::{
    zeta, zeta_and_derivative, zeta_constants, zeta_derivative, zeta_negative_special, SpecialKind,
    ZeroTable,
};

/// (constant, main) for `target`, evaluated without a domain check.
pub(crate) fn main_parts(target: Target, x: f64, variant: FormulaVariant) -> (f64, f64) {
    let c = zeta_constants();
    let g = c.euler_gamma;
    let l = x.ln();
    let six_over_pi2 = 6.0 / (PI * PI);
    match target {
        Target::DivisorSum => (-PI * PI / 12.0, (l + 2.0 * g - 1.0) * x),
        Target::TwoOmegaSum => (-0.5, six_over_pi2 * (l + c.two_omega_linear) * x),
        Target::TwoOmegaOverNSum => {
            let constant = match variant.over_n_constant {
                OverNConstant::AsPrinted => 2.0 * g - 1.0,
                OverNConstant::Residue => c.two_omega_over_n_constant,
            };
            let log_coeff = 2.0 * g - 12.0 * c.zeta_prime_2 / (PI * PI);
            (constant, six_over_pi2 * (0.5 * l * l + log_coeff * l))
        }
    }
}

fn require_above_one(x: f64) -> Result<()> {
    if !(x > 1.0) || !x.is_finite() {
        return invalid(format!("x must exceed 1, got {x}"));
    }
    Ok(())
}

fn require_non_integer(x: f64) -> Result<()> {
    if x.fract() == 0.0 {
        return invalid(format!(
            "x = {x} is an integer; use evaluate_explicit for midpoint averaging"
        ));
    }
    Ok(())
}

pub fn main_term(target: Target, x: f64) -> Result<(f64, f64)> {
    main_term_with(target, x, FormulaVariant::default())
}

pub fn main_term_with(target: Target, x: f64, variant: FormulaVariant) -> Result<(f64, f64)> {
    require_above_one(x)?;
    Ok(main_parts(target, x, variant))
}

/// Residue of ζ(s)^k x^s/s at s = 1 divided by x, as a polynomial in
/// `l = log x`; k ∈ {2, 3}.
pub fn polynomial_residue(k: u32, l: f64) -> Result<f64> {
    let c = zeta_constants();
    let g = c.euler_gamma;
    match k {
        2 => Ok(l + 2.0 * g - 1.0),
        // γ₁ in the standard Laurent convention ζ(s) = 1/(s−1) + γ − γ₁(s−1) + …
        3 => Ok(
            l * l / 2.0 + (3.0 * g - 1.0) * l + 3.0 * g * g - 3.0 * g - 3.0 * c.stieltjes1 + 1.0,
        ),
        _ => invalid(format!(
            "polynomial_residue is available for k = 2, 3, got {k}"
        )),
    }
}

fn zero_weight(target: Target, variant: FormulaVariant) -> f64 {
    let zeta2 = PI * PI / 6.0;
    let base = match variant.zero_coefficient {
        ZeroCoefficient::AsPrinted => 2.0,
        ZeroCoefficient::Residue => 1.0,
    };
    match target {
        Target::DivisorSum => zeta2 * base,
        Target::TwoOmegaSum | Target::TwoOmegaOverNSum => base,
    }
}

/// ζ(ρ/2)²/(ρ ζ'(ρ)) for ρ = 1/2 + it.
fn zero_coefficient(t: f64) -> Result<Complex64> {
    let rho = Complex64::new(0.5, t);
    let (_, dz) = zeta_and_derivative(rho)?;
    let half = zeta(rho / 2.0)?;
    Ok(half * half / (rho * dz))
}

/// Running sums of `pair(t_k)` over the first `n` ordinates, terms computed
/// in parallel and accumulated in ascending order.
fn pair_partials(
    zeros: &ZeroTable,
    n: usize,
    pair: impl Fn(f64) -> Result<f64> + Sync,
) -> Result<Vec<f64>> {
    if n > zeros.len() {
        return invalid(format!(
            "{n} zero pairs requested but the table has {}",
            zeros.len()
        ));
    }
    let terms: Vec<Result<f64>> = zeros.ordinates()[..n]
        .par_iter()
        .map(|&t| pair(t))
        .collect();
    let mut acc = CompensatedSum::new();
    let mut out = Vec::with_capacity(n);
    for t in terms {
        acc.add(t?);
        out.push(acc.value());
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSum {
    /// `partials[k]` uses the first k + 1 zero pairs.
    pub partials: Vec<f64>,
    /// False when the table was not validated; the values are then a
    /// warning-level result.
    pub zeros_validated: bool,
}

pub fn nontrivial_zero_sum(
    target: Target,
    x: f64,
    zeros: &ZeroTable,
    n: usize,
    variant: FormulaVariant,
) -> Result<ZeroSum> {
    require_above_one(x)?;
    require_non_integer(x)?;
    let weight = zero_weight(target, variant);
    let lx = x.ln();
    let shift = if target == Target::TwoOmegaOverNSum {
        -1.0
    } else {
        0.0
    };
    let partials = pair_partials(zeros, n, |t| {
        let rho = Complex64::new(0.5, t);
        let power = ((rho / 2.0 + shift) * lx).exp();
        Ok(weight * 2.0 * (zero_coefficient(t)? * power).re)
    })?;
    Ok(ZeroSum {
        partials,
        zeros_validated: zeros.validated(),
    })
}

/// Partial sums of Σ_ρ ζ(ρ/2)²/(ρ ζ'(ρ)) with conjugate pairs combined.
pub fn zero_coefficient_partial_sum(zeros: &ZeroTable, n: usize) -> Result<Vec<f64>> {
    pair_partials(zeros, n, |t| Ok(2.0 * zero_coefficient(t)?.re))
}

fn trivial_term(target: Target, x: f64, n: u32, variant: FormulaVariant) -> Result<f64> {
    let z = zeta_negative_special(SpecialKind::ZetaAtNegOdd, n)?;
    let odd = 2.0 * n as f64 + 1.0;
    let denom = match variant.trivial_denominator {
        TrivialDenominator::Residue => {
            2.0 * odd * zeta_negative_special(SpecialKind::ZetaPrimeAtNegEven, 2 * n + 1)?
        }
        TrivialDenominator::AsPrinted => odd * zeta_derivative(Complex64::new(-odd, 0.0))?.re,
    };
    let exponent = if target == Target::TwoOmegaOverNSum {
        -odd - 1.0
    } else {
        -odd
    };
    let v = z * z / denom * x.powf(exponent);
    if !v.is_finite() {
        return Err(Error::NonFinite(format!("trivial-zero term n = {n}")));
    }
    Ok(v)
}

/// Signed sum of the first `m` trivial-zero terms.
pub fn trivial_zero_tail(target: Target, x: f64, m: usize, variant: FormulaVariant) -> Result<f64> {
    require_above_one(x)?;
    if m < 1 {
        return invalid("trivial_zero_tail needs at least one term");
    }
    let coefficient = match target {
        Target::DivisorSum => PI * PI / 6.0,
        Target::TwoOmegaSum | Target::TwoOmegaOverNSum => 1.0,
    } * match variant.tail_sign {
        TailSign::Minus => -1.0,
        TailSign::Plus => 1.0,
    };
    let mut acc = CompensatedSum::new();
    for n in 0..m {
        acc.add(trivial_term(target, x, n as u32, variant)?);
    }
    Ok(coefficient * acc.value())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaEvaluation {
    pub x: f64,
    pub target: Target,
    pub variant: FormulaVariant,
    /// True when x was an integer and every component is the average of
    /// its values at x − δ and x + δ.
    pub midpoint_averaged: bool,
    pub constant_term: f64,
    pub main_term: f64,
    /// (N, partial sum over the first N zero pairs), N = 1, 2, …
    pub zero_sum_partials: Vec<(usize, f64)>,
    pub trivial_tail: f64,
    pub exact: Option<f64>,
    pub zeros_validated: bool,
}

impl FormulaEvaluation {
    /// Zero-pair contribution after N pairs; 0 at N = 0.
    pub fn zero_sum_at(&self, n: usize) -> Option<f64> {
        match n {
            0 => Some(0.0),
            _ => self.zero_sum_partials.get(n - 1).map(|&(_, v)| v),
        }
    }

    /// constant + main + (first N zero pairs) + tail.
    pub fn total_at(&self, n: usize) -> Option<f64> {
        Some(self.constant_term + self.main_term + self.zero_sum_at(n)? + self.trivial_tail)
    }

    /// exact − total_at(N).
    pub fn residual_at(&self, n: usize) -> Option<f64> {
        Some(self.exact? - self.total_at(n)?)
    }

    pub fn zero_pairs(&self) -> usize {
        self.zero_sum_partials.len()
    }
}

struct Components {
    constant: f64,
    main: f64,
    partials: Vec<f64>,
    tail: f64,
    exact: Option<f64>,
}

fn components(
    target: Target,
    x: Abscissa,
    zeros: &ZeroTable,
    cfg: &TruncationConfig,
    variant: FormulaVariant,
) -> Result<Components> {
    let xv = x.value();
    let (constant, main) = main_term_with(target, xv, variant)?;
    let partials = nontrivial_zero_sum(target, xv, zeros, cfg.num_zero_pairs, variant)?.partials;
    let tail = trivial_zero_tail(target, xv, cfg.tail_terms, variant)?;
    let exact = match exact_sum(target, x) {
        Ok(v) => Some(v),
        Err(Error::ResourceLimit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Components {
        constant,
        main,
        partials,
        tail,
        exact,
    })
}

pub fn evaluate_explicit(
    target: Target,
    x: Abscissa,
    zeros: &ZeroTable,
    cfg: &TruncationConfig,
) -> Result<FormulaEvaluation> {
    evaluate_explicit_with(target, x, zeros, cfg, FormulaVariant::default())
}

pub fn evaluate_explicit_with(
    target: Target,
    x: Abscissa,
    zeros: &ZeroTable,
    cfg: &TruncationConfig,
    variant: FormulaVariant,
) -> Result<FormulaEvaluation> {
    cfg.validate()?;
    if cfg.num_zero_pairs > zeros.len() {
        return invalid(format!(
            "{} zero pairs requested but the table has {}",
            cfg.num_zero_pairs,
            zeros.len()
        ));
    }
    let midpoint = x.is_integer();
    let c = if midpoint {
        let lo = components(target, x.shifted(-cfg.midpoint_delta)?, zeros, cfg, variant)?;
        let hi = components(target, x.shifted(cfg.midpoint_delta)?, zeros, cfg, variant)?;
        let avg = |a: f64, b: f64| 0.5 * (a + b);
        Components {
            constant: avg(lo.constant, hi.constant),
            main: avg(lo.main, hi.main),
            partials: lo
                .partials
                .iter()
                .zip(&hi.partials)
                .map(|(&a, &b)| avg(a, b))
                .collect(),
            tail: avg(lo.tail, hi.tail),
            exact: lo.exact.zip(hi.exact).map(|(a, b)| avg(a, b)),
        }
    } else {
        components(target, x, zeros, cfg, variant)?
    };
    Ok(FormulaEvaluation {
        x: x.value(),
        target,
        variant,
        midpoint_averaged: midpoint,
        constant_term: c.constant,
        main_term: c.main,
        zero_sum_partials: c
            .partials
            .into_iter()
            .enumerate()
            .map(|(i, v)| (i + 1, v))
            .collect(),
        trivial_tail: c.tail,
        exact: c.exact,
        zeros_validated: zeros.validated(),
    })
}
