use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub const MAX_BERNOULLI_INDEX: usize = 64;

fn table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Σ_{k=0}^{m} C(m+1, k) B_k = 0 for m ≥ 1, B_1 = −1/2.
        let mut b: Vec<BigRational> = Vec::with_capacity(MAX_BERNOULLI_INDEX + 1);
        b.push(BigRational::from_integer(1.into()));
        for m in 1..=MAX_BERNOULLI_INDEX {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1); // C(m+1, 0)
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bk;
                binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
            }
            // binom is now C(m+1, m)
            b.push(-acc / BigRational::from_integer(binom));
        }
        b
    })
}

/// B_n as an exact rational, `n ≤ 64`, with the convention B_1 = −1/2.
pub fn bernoulli(n: usize) -> Option<BigRational> {
    table().get(n).cloned()
}

pub fn bernoulli_f64(n: usize) -> Option<f64> {
    table().get(n).map(|b| b.to_f64().unwrap_or(f64::NAN))
}

/// B_{2k}/(2k)! for k = 1..=terms, as used by Euler–Maclaurin corrections.
pub(crate) fn even_bernoulli_over_factorial(terms: usize) -> &'static [f64] {
    static T: OnceLock<Vec<f64>> = OnceLock::new();
    let all = T.get_or_init(|| {
        let mut fact = BigInt::from(1);
        let mut out = Vec::new();
        for k in 1..=MAX_BERNOULLI_INDEX / 2 {
            fact *= BigInt::from(2 * k - 1) * BigInt::from(2 * k);
            let v = &table()[2 * k] / BigRational::from_integer(fact.clone());
            out.push(v.to_f64().unwrap_or(0.0));
        }
        out
    });
    &all[..terms.min(all.len())]
}
