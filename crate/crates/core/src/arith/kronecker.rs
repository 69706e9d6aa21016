use crate::arith::factor::factorize;
use crate::error::{Error, Result};

/// `base^exp mod m`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(n/p)` for an odd prime `p`, by Euler's criterion.
fn legendre(n: i64, p: u64) -> i8 {
    let r = n.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    match pow_mod(r, (p - 1) / 2, p) {
        1 => 1,
        v if v == p - 1 => -1,
        v => unreachable!("Euler criterion gave {v} mod {p}"),
    }
}

/// `(n/2)`: 0 for even n, 1 for n ≡ ±1 (mod 8), -1 for n ≡ ±3 (mod 8).
fn kronecker_two(n: i64) -> i8 {
    match n.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => 0,
    }
}

/// Kronecker symbol `(n/m)` for a positive lower argument `m`, extended
/// multiplicatively over the prime factorization of `m`. `(n/1) = 1`.
pub fn kronecker(n: i64, m: u64) -> i8 {
    assert!(m >= 1, "kronecker symbol needs a positive lower argument");
    let mut acc: i8 = 1;
    for &(p, e) in &factorize(m).factors {
        let s = if p == 2 { kronecker_two(n) } else { legendre(n, p) };
        if s == 0 {
            return 0;
        }
        if s == -1 && e % 2 == 1 {
            acc = -acc;
        }
    }
    acc
}

/// Gauss' criterion: for a prime `p ≡ 1 (mod 3)`, true iff `2^{(p-1)/3} ≡ 1 (mod p)`.
pub fn cubic_residue_2(p: u64) -> Result<bool> {
    if p % 3 != 1 || !crate::arith::factor::is_prime(p) {
        return Err(Error::InapplicablePrime(p));
    }
    Ok(pow_mod(2, (p - 1) / 3, p) == 1)
}

/// For a prime `p ≡ 1 (mod 8)`, the value `2^{(p-1)/4} mod p` as ±1.
pub fn quartic_class_2(p: u64) -> Result<i8> {
    if p % 8 != 1 || !crate::arith::factor::is_prime(p) {
        return Err(Error::InapplicablePrime(p));
    }
    match pow_mod(2, (p - 1) / 4, p) {
        1 => Ok(1),
        v if v == p - 1 => Ok(-1),
        v => unreachable!("2 is a quadratic residue mod {p}, got {v}"),
    }
}
