//! Integer arithmetic: Kronecker symbols, factorization and prime
//! classification, divisor sums, `U₂` and multiplicativity checks.

mod divisor;
mod factor;
mod kronecker;

pub use divisor::{check_multiplicative, divisor_series, divisor_sum, hecke_u2, hecke_u2_to, Kernel};
pub use factor::{
    classify, divisors, factorize, is_prime, Factorization, LabeledPrime, PrimeClassification, PrimeLabel, Scheme,
};
pub use kronecker::{cubic_residue_2, kronecker, pow_mod, quartic_class_2};
