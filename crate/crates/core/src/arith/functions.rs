//! Pointwise arithmetic functions evaluated from prime factorizations.

use std::fmt;
use std::str::FromStr;

use super::sieve::{divisors_from_factors, factorize, FactorTable};
use crate::error::{invalid, Error, Result};
use crate::numeric::{gcd, is_square, isqrt};

/// An arithmetic function selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FnSpec {
    /// d(n), the number of divisors.
    Divisors,
    /// d_k(n), ordered factorizations into k factors (k ≥ 2).
    DivisorsK(u32),
    /// σ_a(n) = Σ_{d|n} d^a for a ≥ 0.
    Sigma(u32),
    Moebius,
    MoebiusSquared,
    Omega,
    BigOmega,
    TwoOmega,
    TwoBigOmega,
    /// r(n), representations as a sum of two squares.
    TwoSquares,
    /// d(n, q, a) = #{d | n : d ≡ a (mod q)}.
    RestrictedDivisors {
        q: u64,
        a: u64,
    },
}

impl FnSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FnSpec::DivisorsK(k) if k < 2 => invalid(format!("d_k requires k >= 2, got {k}")),
            FnSpec::RestrictedDivisors { q, a } => {
                if q < 2 || a == 0 || a >= q || gcd(a, q) != 1 {
                    invalid(format!(
                        "d_restricted requires 1 <= a < q and gcd(a, q) = 1, got q={q}, a={a}"
                    ))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Whether f(mn) = f(m) f(n) for coprime m, n.
    pub fn is_multiplicative(&self) -> bool {
        !matches!(
            self,
            FnSpec::Omega | FnSpec::BigOmega | FnSpec::RestrictedDivisors { .. }
        )
    }
}

impl fmt::Display for FnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FnSpec::Divisors => write!(f, "d"),
            FnSpec::DivisorsK(k) => write!(f, "d_k:{k}"),
            FnSpec::Sigma(a) => write!(f, "sigma:{a}"),
            FnSpec::Moebius => write!(f, "mu"),
            FnSpec::MoebiusSquared => write!(f, "mu_squared"),
            FnSpec::Omega => write!(f, "omega"),
            FnSpec::BigOmega => write!(f, "big_omega"),
            FnSpec::TwoOmega => write!(f, "two_omega"),
            FnSpec::TwoBigOmega => write!(f, "two_big_omega"),
            FnSpec::TwoSquares => write!(f, "r2"),
            FnSpec::RestrictedDivisors { q, a } => write!(f, "d_restricted:{q}:{a}"),
        }
    }
}

impl FromStr for FnSpec {
    type Err = Error;

    /// Accepts the names printed by `Display`, plus `d_K` and `sigma_A`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| -> Result<u64> {
            t.parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad parameter {t:?} in {s:?}")))
        };
        let spec = match parts.as_slice() {
            ["d"] => FnSpec::Divisors,
            ["d_k", k] => FnSpec::DivisorsK(num(k)? as u32),
            ["sigma", a] => FnSpec::Sigma(num(a)? as u32),
            ["mu"] => FnSpec::Moebius,
            ["mu_squared"] => FnSpec::MoebiusSquared,
            ["omega"] => FnSpec::Omega,
            ["big_omega"] => FnSpec::BigOmega,
            ["two_omega"] => FnSpec::TwoOmega,
            ["two_big_omega"] => FnSpec::TwoBigOmega,
            ["r2"] => FnSpec::TwoSquares,
            ["d_restricted", q, a] => FnSpec::RestrictedDivisors {
                q: num(q)?,
                a: num(a)?,
            },
            [name] if name.starts_with("d_") => FnSpec::DivisorsK(num(&name[2..])? as u32),
            [name] if name.starts_with("sigma_") => FnSpec::Sigma(num(&name[6..])? as u32),
            _ => return invalid(format!("unknown arithmetic function {s:?}")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Binomial coefficient in `u128`, `None` on overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u128> {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

fn sigma_prime_power(p: u64, e: u32, a: u32) -> Option<i64> {
    let pa = (p as i64).checked_pow(a)?;
    let mut term: i64 = 1;
    let mut total: i64 = 1;
    for _ in 0..e {
        term = term.checked_mul(pa)?;
        total = total.checked_add(term)?;
    }
    Some(total)
}

/// Σ_{d|n} χ₄(d), the multiplicative part of r(n)/4.
fn chi4_divisor_sum(factors: &[(u64, u32)]) -> i64 {
    let mut acc: i64 = 1;
    for &(p, e) in factors {
        match p % 4 {
            1 => acc *= e as i64 + 1,
            3 if e % 2 == 1 => return 0,
            _ => {}
        }
    }
    acc
}

/// Evaluates `spec` at `n` from its canonical factorization.
pub fn eval_from_factors(spec: FnSpec, n: u64, factors: &[(u64, u32)]) -> Result<i64> {
    let overflow = || Error::Overflow(format!("{spec} at n = {n}"));
    let v = match spec {
        FnSpec::Divisors => factors.iter().map(|&(_, e)| e as i64 + 1).product(),
        FnSpec::DivisorsK(k) => {
            let mut acc: i64 = 1;
            for &(_, e) in factors {
                let b = binomial(e as u64 + k as u64 - 1, k as u64 - 1).ok_or_else(overflow)?;
                let b = i64::try_from(b).map_err(|_| overflow())?;
                acc = acc.checked_mul(b).ok_or_else(overflow)?;
            }
            acc
        }
        FnSpec::Sigma(a) => {
            let mut acc: i64 = 1;
            for &(p, e) in factors {
                let s = sigma_prime_power(p, e, a).ok_or_else(overflow)?;
                acc = acc.checked_mul(s).ok_or_else(overflow)?;
            }
            acc
        }
        FnSpec::Moebius => {
            if factors.iter().any(|&(_, e)| e > 1) {
                0
            } else if factors.len().is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
        FnSpec::MoebiusSquared => factors.iter().all(|&(_, e)| e == 1) as i64,
        FnSpec::Omega => factors.len() as i64,
        FnSpec::BigOmega => factors.iter().map(|&(_, e)| e as i64).sum(),
        FnSpec::TwoOmega => 1i64 << factors.len(),
        FnSpec::TwoBigOmega => 1i64 << factors.iter().map(|&(_, e)| e).sum::<u32>(),
        FnSpec::TwoSquares => 4 * chi4_divisor_sum(factors),
        FnSpec::RestrictedDivisors { q, a } => divisors_from_factors(factors)
            .into_iter()
            .filter(|d| d % q == a)
            .count() as i64,
    };
    Ok(v)
}

/// Exact value of the arithmetic function `spec` at `n ≥ 1`.
pub fn eval_arithmetic(spec: FnSpec, n: u64, table: Option<&FactorTable>) -> Result<i64> {
    spec.validate()?;
    if n == 0 {
        return invalid("arithmetic functions are defined for n >= 1");
    }
    let f = match table {
        Some(t) if n <= t.limit() => t.factorize(n)?,
        _ => factorize(n, None)?,
    };
    eval_from_factors(spec, n, &f.factors)
}

/// d(n) = 2·#{d | n : d ≤ √n} − δ(n), δ the indicator of perfect squares.
pub fn hermite_divisor_count(n: u64) -> Result<i64> {
    if n == 0 {
        return invalid("hermite_divisor_count requires n >= 1");
    }
    let small = (1..=isqrt(n)).filter(|d| n.is_multiple_of(*d)).count() as i64;
    Ok(2 * small - is_square(n) as i64)
}

/// d(n, q, a) by divisor enumeration; any residue `0 <= a < q` is allowed.
pub fn restricted_divisor_count(n: u64, q: u64, a: u64) -> Result<i64> {
    if n == 0 {
        return invalid("restricted_divisor_count requires n >= 1");
    }
    if q < 2 {
        return invalid(format!("modulus must be at least 2, got {q}"));
    }
    if a >= q {
        return invalid(format!("residue {a} not reduced mod {q}"));
    }
    let f = factorize(n, None)?;
    Ok(f.divisors().into_iter().filter(|d| d % q == a).count() as i64)
}

/// r(n) = 4 Σ_{d|n} χ₄(d).
pub fn two_squares_count(n: u64) -> Result<i64> {
    if n == 0 {
        return invalid("two_squares_count requires n >= 1");
    }
    let f = factorize(n, None)?;
    Ok(4 * chi4_divisor_sum(&f.factors))
}
