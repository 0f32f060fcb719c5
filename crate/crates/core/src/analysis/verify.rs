use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::abscissa::Abscissa;
use crate::arith::{
    dirichlet_coefficients, eval_from_factors, hermite_divisor_count, pointwise_coefficients,
    restricted_divisor_count, DirichletIdentity, FactorTable, FnSpec,
};
use crate::error::{Error, Result};
use crate::summatory::{
    ap_divisor_sum, brute_force_prefix_sums, divisor_sum_from_squarefree, divisor_sum_hyperbola,
    squarefree_divisor_sum, APSpec, DEFAULT_ORACLE_BOUND,
};
use crate::voronoi::{
    bessel_j1, bessel_k1, bessel_y1, j1_asymptotic, j1_series, y1_asymptotic, y1_series,
};
use crate::zeta::{
    stieltjes, zeta, zeta_negative_special, zeta_real, zeta_real_derivative, SpecialKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Summatory,
    Zeta,
    Bessel,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "identities" => Ok(Suite::Identities),
            "summatory" => Ok(Suite::Summatory),
            "zeta" => Ok(Suite::Zeta),
            "bessel" => Ok(Suite::Bessel),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Identities => "identities",
            Suite::Summatory => "summatory",
            Suite::Zeta => "zeta",
            Suite::Bessel => "bessel",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Index-0-unused table of `spec(n)` for n ≤ len.
fn table_of(spec: FnSpec, t: &FactorTable, len: u64) -> Result<Vec<i64>> {
    let mut v = vec![0i64; len as usize + 1];
    for n in 1..=len {
        v[n as usize] = eval_from_factors(spec, n, &t.factorize(n)?.factors)?;
    }
    Ok(v)
}

/// First n ≤ len where `lhs(n) != rhs(n)`.
fn first_mismatch(len: u64, lhs: impl Fn(u64) -> i64, rhs: impl Fn(u64) -> i64) -> Option<u64> {
    (1..=len).find(|&n| lhs(n) != rhs(n))
}

fn outcome(suite: Suite, name: &str, mismatch: Option<u64>, range: &str) -> Check {
    Check {
        suite: suite.to_string(),
        name: name.to_string(),
        passed: mismatch.is_none(),
        detail: match mismatch {
            None => format!("holds for {range}"),
            Some(n) => format!("fails at n = {n}"),
        },
    }
}

fn close(suite: Suite, name: &str, got: f64, want: f64, tol: f64) -> Check {
    let err = (got - want).abs();
    Check {
        suite: suite.to_string(),
        name: name.to_string(),
        passed: err <= tol,
        detail: format!("got {got:.15e}, want {want:.15e}, |err| = {err:.2e} (tol {tol:.0e})"),
    }
}

const IDENTITY_N: u64 = 10_000;
const HERMITE_N: u64 = 100_000;

fn identities() -> Result<Vec<Check>> {
    let s = Suite::Identities;
    let n = IDENTITY_N;
    let t = FactorTable::new(n)?;
    let mu = table_of(FnSpec::Moebius, &t, n)?;
    let mu2 = table_of(FnSpec::MoebiusSquared, &t, n)?;
    let two_omega = table_of(FnSpec::TwoOmega, &t, n)?;
    let d = table_of(FnSpec::Divisors, &t, n)?;
    let dk: Vec<Vec<i64>> = (2..=5)
        .map(|k| table_of(FnSpec::DivisorsK(k), &t, n))
        .collect::<Result<_>>()?;
    let divisors: Vec<Vec<u64>> = (0..=n)
        .map(|m| {
            if m == 0 {
                Ok(Vec::new())
            } else {
                t.factorize(m).map(|f| f.divisors())
            }
        })
        .collect::<Result<_>>()?;
    let square_sum = |k: usize, m: u64| -> i64 {
        (1..)
            .take_while(|e: &u64| e * e <= m)
            .filter(|e| m.is_multiple_of(e * e))
            .map(|e| mu[e as usize] * dk[k - 2][(m / (e * e)) as usize])
            .sum()
    };
    let d_of_square = |m: u64| -> i64 {
        t.factorize(m)
            .map(|f| f.factors.iter().map(|&(_, e)| 2 * e as i64 + 1).product())
            .unwrap_or(0)
    };

    let mut out = vec![
        outcome(
            s,
            "squarefree_divisor_count",
            first_mismatch(
                n,
                |m| divisors[m as usize].iter().map(|&e| mu2[e as usize]).sum(),
                |m| two_omega[m as usize],
            ),
            "n <= 10000",
        ),
        outcome(
            s,
            "d_of_square_from_d3",
            first_mismatch(n, |m| square_sum(3, m), d_of_square),
            "n <= 10000",
        ),
        outcome(
            s,
            "d_squared_from_d4",
            first_mismatch(n, |m| square_sum(4, m), |m| d[m as usize] * d[m as usize]),
            "n <= 10000",
        ),
    ];
    for k in 3..=5usize {
        out.push(outcome(
            s,
            &format!("d_{k}_recursion"),
            first_mismatch(
                n,
                |m| {
                    divisors[m as usize]
                        .iter()
                        .map(|&e| dk[k - 3][e as usize])
                        .sum()
                },
                |m| dk[k - 2][m as usize],
            ),
            "n <= 10000",
        ));
    }
    let ids = [
        DirichletIdentity::ZetaSqOverZeta2s,
        DirichletIdentity::ZetaCuOverZeta2s,
        DirichletIdentity::Zeta4OverZeta2s,
        DirichletIdentity::ZetaPower(2),
        DirichletIdentity::ZetaPower(3),
        DirichletIdentity::ZetaPower(4),
        DirichletIdentity::ZetaPower(5),
        DirichletIdentity::SigmaProduct { a: 0, b: 0 },
        DirichletIdentity::SigmaProduct { a: 1, b: 0 },
        DirichletIdentity::SigmaProduct { a: 1, b: 1 },
        DirichletIdentity::SigmaProduct { a: 1, b: 2 },
    ];
    for id in ids {
        let a = dirichlet_coefficients(id, n as usize)?;
        let b = pointwise_coefficients(id, n as usize)?;
        let mismatch = a
            .iter()
            .zip(&b)
            .position(|(x, y)| x != y)
            .map(|i| i as u64 + 1);
        out.push(outcome(
            s,
            &format!("dirichlet:{id}"),
            mismatch,
            "N = 10000",
        ));
    }
    let mut hermite_mismatch = None;
    for m in 1..=HERMITE_N {
        if hermite_divisor_count(m)?
            != eval_from_factors(
                FnSpec::Divisors,
                m,
                &crate::arith::factorize(m, None)?.factors,
            )?
        {
            hermite_mismatch = Some(m);
            break;
        }
    }
    out.push(outcome(
        s,
        "hermite_divisor_count",
        hermite_mismatch,
        "n <= 100000",
    ));
    Ok(out)
}

const SUMMATORY_N: u64 = 10_000;

fn summatory() -> Result<Vec<Check>> {
    let s = Suite::Summatory;
    let cps: Vec<u64> = (1..=SUMMATORY_N).collect();
    let d = brute_force_prefix_sums(FnSpec::Divisors, &cps, DEFAULT_ORACLE_BOUND)?;
    let w = brute_force_prefix_sums(FnSpec::TwoOmega, &cps, DEFAULT_ORACLE_BOUND)?;
    let mut hyper = None;
    let mut kernel = None;
    let mut conv = None;
    for (i, &n) in cps.iter().enumerate() {
        let x = Abscissa::integer(n);
        if hyper.is_none() && divisor_sum_hyperbola(x)?.exact() != d[i] {
            hyper = Some(n);
        }
        if kernel.is_none() && squarefree_divisor_sum(x)?.exact() != w[i] {
            kernel = Some(n);
        }
        if conv.is_none() && divisor_sum_from_squarefree(x)?.exact() != d[i] {
            conv = Some(n);
        }
    }
    let mut out = vec![
        outcome(s, "divisor_sum_hyperbola", hyper, "x <= 10000"),
        outcome(s, "squarefree_divisor_sum", kernel, "x <= 10000"),
        outcome(s, "divisor_sum_from_squarefree", conv, "x <= 10000"),
    ];
    for q in [3u64, 4, 5] {
        for a in (1..q).filter(|&a| crate::numeric::gcd(a, q) == 1) {
            let ap = APSpec::new(q, a)?;
            let mut running = 0i128;
            let mut mismatch = None;
            for n in 1..=1000u64 {
                running += restricted_divisor_count(n, q, a)? as i128;
                if ap_divisor_sum(n.into(), ap)?.exact() != running {
                    mismatch = Some(n);
                    break;
                }
            }
            out.push(outcome(
                s,
                &format!("ap_divisor_sum:{q}:{a}"),
                mismatch,
                "x <= 1000",
            ));
        }
    }
    Ok(out)
}

fn zeta_suite() -> Result<Vec<Check>> {
    let s = Suite::Zeta;
    let pi2 = std::f64::consts::PI.powi(2);
    Ok(vec![
        close(s, "zeta(0)", zeta_real(0.0)?, -0.5, 1e-8),
        close(s, "zeta(2)", zeta_real(2.0)?, pi2 / 6.0, 1e-8),
        close(
            s,
            "zeta'(2)",
            zeta_real_derivative(1, 2.0)?,
            -0.937_548_254_315_843_8,
            1e-8,
        ),
        close(s, "gamma_1", stieltjes(1)?, -0.072_815_845_483_676_72, 1e-8),
        close(
            s,
            "zeta(-1)",
            zeta_negative_special(SpecialKind::ZetaAtNegOdd, 0)?,
            -1.0 / 12.0,
            1e-8,
        ),
        close(
            s,
            "zeta(-3)",
            zeta_negative_special(SpecialKind::ZetaAtNegOdd, 1)?,
            1.0 / 120.0,
            1e-8,
        ),
        close(
            s,
            "zeta'(-2)",
            zeta_negative_special(SpecialKind::ZetaPrimeAtNegEven, 1)?,
            -0.030_448_457_058_393_27,
            1e-8,
        ),
        close(
            s,
            "|zeta(rho_1)|",
            zeta(Complex64::new(0.5, 14.134_725_142))?.norm(),
            0.0,
            1e-6,
        ),
    ])
}

fn bessel_suite() -> Result<Vec<Check>> {
    let s = Suite::Bessel;
    let mut out = vec![
        close(s, "J1(1)", bessel_j1(1.0)?, 0.440_050_585_744_933_5, 1e-8),
        close(s, "Y1(1)", bessel_y1(1.0)?, -0.781_212_821_300_288_7, 1e-8),
        close(s, "K1(1)", bessel_k1(1.0)?, 0.601_907_230_197_234_6, 1e-8),
    ];
    let worst = [11.0, 11.5, 12.0, 12.5, 13.0]
        .iter()
        .map(|&z| {
            (j1_series(z, 80) - j1_asymptotic(z))
                .abs()
                .max((y1_series(z, 80) - y1_asymptotic(z)).abs())
        })
        .fold(0.0, f64::max);
    out.push(close(s, "series_asymptotic_agreement", worst, 0.0, 1e-8));
    Ok(out)
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>> {
    match suite {
        Suite::Identities => identities(),
        Suite::Summatory => summatory(),
        Suite::Zeta => zeta_suite(),
        Suite::Bessel => bessel_suite(),
        Suite::All => {
            let mut v = identities()?;
            v.extend(summatory()?);
            v.extend(zeta_suite()?);
            v.extend(bessel_suite()?);
            Ok(v)
        }
    }
}
