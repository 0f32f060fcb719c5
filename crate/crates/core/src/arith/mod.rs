//! Sieve-backed pointwise arithmetic functions and Dirichlet-coefficient
//! identities.
//!
//! [`FactorTable`] is immutable once built and can be shared freely between
//! threads.

mod dirichlet;
mod functions;
mod growth;
mod sieve;

pub use dirichlet::{
    dirichlet_coefficients, pointwise_coefficients, DirichletIdentity, DirichletSeries,
};
pub use functions::{
    eval_arithmetic, eval_from_factors, hermite_divisor_count, restricted_divisor_count,
    two_squares_count, FnSpec,
};
pub use growth::{growth_bound_check, growth_exponent, GrowthReport};
pub use sieve::{
    divisors_from_factors, factorize, moebius_up_to, primes_up_to, FactorTable, Factorization,
    SegmentedFactorizer, MAX_FACTOR_TABLE_LIMIT, MAX_SEGMENTED_N,
};
