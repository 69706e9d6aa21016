//! Small builders shared by the catalog entries.

use num_bigint::BigInt;

use crate::error::Result;
use crate::lambert::{self, LambertSpec};
use crate::qfunctions::{self, Monomial};
use crate::series::{LaurentSeries, Rational};

pub type R = Result<LaurentSeries>;

/// `g(±q^k)` to `order`, where `g` builds a power series to a given order.
fn at(negative: bool, k: u32, order: i64, g: impl Fn(i64) -> LaurentSeries) -> LaurentSeries {
    let mut s = g(order.div_euclid(k as i64) + 1);
    if negative {
        s = s.negate_variable();
    }
    s.compose_power(k).truncate(order)
}

pub fn phi(k: u32, n: i64) -> LaurentSeries {
    qfunctions::phi(k, n)
}

pub fn phin(k: u32, n: i64) -> LaurentSeries {
    at(true, k, n, |m| qfunctions::phi(1, m))
}

pub fn psi(k: u32, n: i64) -> LaurentSeries {
    qfunctions::psi(k, n)
}

pub fn psin(k: u32, n: i64) -> LaurentSeries {
    at(true, k, n, |m| qfunctions::psi(1, m))
}

pub fn e(k: u32, n: i64) -> LaurentSeries {
    qfunctions::euler_e(k, n)
}

pub fn en(k: u32, n: i64) -> LaurentSeries {
    at(true, k, n, |m| qfunctions::euler_e(1, m))
}

pub fn g(k: u32, n: i64) -> LaurentSeries {
    at(false, k, n, qfunctions::rr_g)
}

pub fn h(k: u32, n: i64) -> LaurentSeries {
    at(false, k, n, qfunctions::rr_h)
}

/// `q^e`.
pub fn pq(e: i64) -> Monomial {
    Monomial::q(e)
}

/// `-q^e`.
pub fn mq(e: i64) -> Monomial {
    Monomial::neg_q(e)
}

pub fn f(a: Monomial, b: Monomial, n: i64) -> R {
    qfunctions::theta_f(a, b, n)
}

pub fn eta(shift: i64, factors: &[(u32, i32)], n: i64) -> R {
    qfunctions::eta(shift, factors, n)
}

pub fn lam(spec: LambertSpec, n: i64) -> R {
    lambert::expand(&spec, n)
}

pub fn one(n: i64) -> LaurentSeries {
    LaurentSeries::one(n)
}

pub fn konst(c: i64, n: i64) -> LaurentSeries {
    LaurentSeries::monomial(c as i128, 0, n)
}

pub fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// `c₀ + Σ_{k=1}^{n} a(k) q^k`.
pub fn coeff_series(n: i64, c0: i64, a: impl Fn(u64) -> i64) -> LaurentSeries {
    let values = std::iter::once(c0 as i128).chain((1..=n).map(|k| a(k as u64) as i128)).collect();
    LaurentSeries::from_i128(0, n, values)
}

/// Indicator series: coefficient 1 where `keep(exponent, coefficient)` holds.
pub fn indicator(s: &LaurentSeries, n: i64, keep: impl Fn(i64, &Rational) -> bool) -> LaurentSeries {
    pattern(n, |k| keep(k, &s.coeff_or_zero(k).expect("tracked")))
}

/// Indicator series of an arithmetic predicate on the exponent.
pub fn pattern(n: i64, keep: impl Fn(i64) -> bool) -> LaurentSeries {
    LaurentSeries::from_i128(0, n, (0..=n).map(|k| i128::from(keep(k))).collect())
}

/// Order at which each of `m` interleaved parts must be built for the
/// combined series to reach `n`.
pub fn part(n: i64, m: i64) -> i64 {
    n.div_euclid(m) + 1
}

/// Interleave: part `j` of `m` lands on the exponents `≡ j (mod m)`, so one
/// comparison checks every part.
pub fn weave(parts: &[LaurentSeries]) -> LaurentSeries {
    let m = parts.len() as u32;
    let mut it = parts.iter().enumerate().map(|(j, s)| s.compose_power(m).shift(j as i64));
    let first = it.next().expect("at least one part");
    it.fold(first, |acc, s| acc + s)
}
