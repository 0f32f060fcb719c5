//! Formal Dirichlet series with integer coefficients, used to check the
//! generating-function identities behind the divisor explicit formulas.

use std::fmt;
use std::str::FromStr;

use super::functions::{eval_from_factors, FnSpec};
use super::sieve::{moebius_up_to, FactorTable};
use crate::error::{invalid, Error, Result};

/// A named identity between a quotient of zeta factors and an arithmetic
/// function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirichletIdentity {
    /// ζ(s)²/ζ(2s) = Σ 2^{ω(n)} n^{-s}
    ZetaSqOverZeta2s,
    /// ζ(s)³/ζ(2s) = Σ d(n²) n^{-s}
    ZetaCuOverZeta2s,
    /// ζ(s)⁴/ζ(2s) = Σ d(n)² n^{-s}
    Zeta4OverZeta2s,
    /// ζ(s)^k = Σ d_k(n) n^{-s}
    ZetaPower(u32),
    /// ζ(s)ζ(s−a)ζ(s−b)ζ(s−a−b)/ζ(2s−a−b) = Σ σ_a(n)σ_b(n) n^{-s}
    SigmaProduct { a: u32, b: u32 },
}

impl fmt::Display for DirichletIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirichletIdentity::ZetaSqOverZeta2s => write!(f, "zeta_sq_over_zeta2s"),
            DirichletIdentity::ZetaCuOverZeta2s => write!(f, "zeta_cu_over_zeta2s"),
            DirichletIdentity::Zeta4OverZeta2s => write!(f, "zeta_4_over_zeta2s"),
            DirichletIdentity::ZetaPower(k) => write!(f, "zeta_k:{k}"),
            DirichletIdentity::SigmaProduct { a, b } => write!(f, "sigma_product:{a}:{b}"),
        }
    }
}

impl FromStr for DirichletIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| {
            t.parse::<u32>().map_err(|_| {
                Error::InvalidArgument(format!("bad parameter {t:?} in identity {s:?}"))
            })
        };
        match parts.as_slice() {
            ["zeta_sq_over_zeta2s"] => Ok(Self::ZetaSqOverZeta2s),
            ["zeta_cu_over_zeta2s"] => Ok(Self::ZetaCuOverZeta2s),
            ["zeta_4_over_zeta2s"] => Ok(Self::Zeta4OverZeta2s),
            ["zeta_k", k] => {
                let k = num(k)?;
                if k < 1 {
                    return invalid("zeta_k requires k >= 1");
                }
                Ok(Self::ZetaPower(k))
            }
            ["sigma_product", a, b] => Ok(Self::SigmaProduct {
                a: num(a)?,
                b: num(b)?,
            }),
            _ => invalid(format!("unknown identity {s:?}")),
        }
    }
}

/// Coefficients `c[1..=len]` of a Dirichlet series (index 0 unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletSeries {
    coeffs: Vec<i128>,
}

impl DirichletSeries {
    fn len(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// ζ(s − c): coefficient n^c.
    pub fn shifted_zeta(len: usize, c: u32) -> Result<Self> {
        let mut coeffs = vec![0i128; len + 1];
        for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
            *slot = (n as i128)
                .checked_pow(c)
                .ok_or_else(|| Error::Overflow(format!("n^{c} at n = {n}")))?;
        }
        Ok(Self { coeffs })
    }

    /// 1/ζ(2s − c): coefficient μ(m) m^c at n = m², zero elsewhere.
    pub fn inverse_zeta_double(len: usize, c: u32) -> Result<Self> {
        let mut coeffs = vec![0i128; len + 1];
        let root = (len as u64).isqrt() as usize;
        let mu = moebius_up_to(root as u64);
        for m in 1..=root {
            let mc = (m as i128)
                .checked_pow(c)
                .ok_or_else(|| Error::Overflow(format!("m^{c} at m = {m}")))?;
            coeffs[m * m] = mu[m] as i128 * mc;
        }
        Ok(Self { coeffs })
    }

    /// Dirichlet convolution truncated to the common length.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        let len = self.len().min(other.len());
        let mut coeffs = vec![0i128; len + 1];
        for d in 1..=len {
            let a = self.coeffs[d];
            if a == 0 {
                continue;
            }
            for (m, n) in (d..=len).step_by(d).enumerate() {
                let b = other.coeffs[m + 1];
                if b == 0 {
                    continue;
                }
                let t = a
                    .checked_mul(b)
                    .and_then(|t| t.checked_add(coeffs[n]))
                    .ok_or_else(|| Error::Overflow(format!("Dirichlet convolution at n = {n}")))?;
                coeffs[n] = t;
            }
        }
        Ok(Self { coeffs })
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coeffs[1..]
    }
}

/// First `len` coefficients of the zeta-side of `identity`, computed purely
/// by formal convolution.
pub fn dirichlet_coefficients(identity: DirichletIdentity, len: usize) -> Result<Vec<i128>> {
    if len < 1 {
        return invalid("at least one coefficient is required");
    }
    let zeta = DirichletSeries::shifted_zeta(len, 0)?;
    let power = |k: u32| -> Result<DirichletSeries> {
        let mut acc = zeta.clone();
        for _ in 1..k {
            acc = acc.convolve(&zeta)?;
        }
        Ok(acc)
    };
    let series = match identity {
        DirichletIdentity::ZetaSqOverZeta2s => {
            power(2)?.convolve(&DirichletSeries::inverse_zeta_double(len, 0)?)?
        }
        DirichletIdentity::ZetaCuOverZeta2s => {
            power(3)?.convolve(&DirichletSeries::inverse_zeta_double(len, 0)?)?
        }
        DirichletIdentity::Zeta4OverZeta2s => {
            power(4)?.convolve(&DirichletSeries::inverse_zeta_double(len, 0)?)?
        }
        DirichletIdentity::ZetaPower(k) => power(k)?,
        DirichletIdentity::SigmaProduct { a, b } => {
            let c = a + b;
            zeta.convolve(&DirichletSeries::shifted_zeta(len, a)?)?
                .convolve(&DirichletSeries::shifted_zeta(len, b)?)?
                .convolve(&DirichletSeries::shifted_zeta(len, c)?)?
                .convolve(&DirichletSeries::inverse_zeta_double(len, c)?)?
        }
    };
    Ok(series.coefficients().to_vec())
}

/// Pointwise values of the arithmetic side of `identity` for `n = 1..=len`.
pub fn pointwise_coefficients(identity: DirichletIdentity, len: usize) -> Result<Vec<i128>> {
    if len < 1 {
        return invalid("at least one coefficient is required");
    }
    let table = FactorTable::new((len as u64).max(2))?;
    (1..=len as u64)
        .map(|n| {
            let f = table.factorize(n)?;
            let fs = &f.factors;
            let v: i128 = match identity {
                DirichletIdentity::ZetaSqOverZeta2s => {
                    eval_from_factors(FnSpec::TwoOmega, n, fs)? as i128
                }
                DirichletIdentity::ZetaCuOverZeta2s => {
                    fs.iter().map(|&(_, e)| 2 * e as i128 + 1).product()
                }
                DirichletIdentity::Zeta4OverZeta2s => {
                    let d = eval_from_factors(FnSpec::Divisors, n, fs)? as i128;
                    d * d
                }
                DirichletIdentity::ZetaPower(1) => 1,
                DirichletIdentity::ZetaPower(k) => {
                    eval_from_factors(FnSpec::DivisorsK(k), n, fs)? as i128
                }
                DirichletIdentity::SigmaProduct { a, b } => {
                    eval_from_factors(FnSpec::Sigma(a), n, fs)? as i128
                        * eval_from_factors(FnSpec::Sigma(b), n, fs)? as i128
                }
            };
            Ok(v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_omega_from_quotient() {
        let c = dirichlet_coefficients(DirichletIdentity::ZetaSqOverZeta2s, 8).unwrap();
        assert_eq!(c, vec![1, 2, 2, 2, 2, 4, 2, 2]);
    }

    #[test]
    fn zeta_squared_is_d() {
        let c = dirichlet_coefficients(DirichletIdentity::ZetaPower(2), 6).unwrap();
        assert_eq!(c, vec![1, 2, 2, 3, 2, 4]);
    }

    #[test]
    fn sigma_product_zero_zero() {
        let c = dirichlet_coefficients(DirichletIdentity::SigmaProduct { a: 0, b: 0 }, 4).unwrap();
        assert_eq!(c[3], 9);
    }

    #[test]
    fn every_identity_matches_pointwise() {
        let ids = [
            DirichletIdentity::ZetaSqOverZeta2s,
            DirichletIdentity::ZetaCuOverZeta2s,
            DirichletIdentity::Zeta4OverZeta2s,
            DirichletIdentity::ZetaPower(3),
            DirichletIdentity::ZetaPower(5),
            DirichletIdentity::SigmaProduct { a: 1, b: 0 },
            DirichletIdentity::SigmaProduct { a: 1, b: 2 },
        ];
        for id in ids {
            assert_eq!(
                dirichlet_coefficients(id, 3000).unwrap(),
                pointwise_coefficients(id, 3000).unwrap(),
                "{id}"
            );
        }
    }

    #[test]
    fn names() {
        assert!("bogus".parse::<DirichletIdentity>().is_err());
        let id: DirichletIdentity = "sigma_product:1:2".parse().unwrap();
        assert_eq!(id, DirichletIdentity::SigmaProduct { a: 1, b: 2 });
        assert_eq!(id.to_string(), "sigma_product:1:2");
    }
}
