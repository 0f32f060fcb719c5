//! Riemann zeta machinery in binary64: ζ and ζ' on the complex plane,
//! exact Bernoulli numbers, special values at negative integers, Stieltjes
//! constants, digamma, and nontrivial-zero tables.

mod bernoulli;
mod evaluate;
mod gamma;
mod special;
mod zeros;

pub use bernoulli::{bernoulli, bernoulli_f64, MAX_BERNOULLI_INDEX};
pub use evaluate::{
    zeta, zeta_and_derivative, zeta_derivative, zeta_derivative_via, zeta_real, zeta_via,
    ComplexValue, ZetaRoute, IM_ENVELOPE,
};
pub use gamma::{digamma, generalized_euler_constant};
pub use special::{
    log_power_sum, stieltjes, zeta_constants, zeta_neg_odd_exact, zeta_negative_special,
    zeta_prime_neg_even, zeta_real_derivative, SpecialKind, ZetaConstants, EULER_GAMMA,
};
pub use zeros::{
    load_zero_file, load_zero_table, ValidationFailure, ZeroTable, VALIDATION_THRESHOLD,
};
