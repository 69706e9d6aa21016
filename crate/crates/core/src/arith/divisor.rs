use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::factor::divisors;
use crate::arith::kronecker::kronecker;
use crate::error::{Error, Result};
use crate::series::{LaurentSeries, Rational};

/// Summand of a divisor sum `Σ_{d | n} k(n, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kernel {
    /// `(-20/d)`
    K1,
    /// `(-4/d) ((n/d)/5)`
    K2,
    /// `(-24/d)`
    K3,
    /// `(d/2) ((n/d)/3)`
    K4,
    /// `(-1)^(n+d) (-15/(n/d))`
    K5,
    /// `(-1)^(n+d) (-3/d) (5/(n/d))`
    K6,
    /// `(d/5) d`
    K7,
    /// `(-4/d)`
    K8,
    /// `(-1)^(n+d) d (d/5)`
    K9,
    /// `(-1)^(n+d) d ((n/d)/5)`
    K10,
    /// `d (d/5) γ(n/d)` with γ the odd indicator
    K11,
    /// `γ(d) (d/5) (n/d)`
    K12,
    /// `2 (d/3)`, plus `4 (d/3)` over the divisors of `n/4` when `4 | n`
    K13,
    /// `(-1)^(n+d) d² (d/3)`
    K14,
    /// `(-1)^(n+d) d² ((n/d)/3)`
    K15,
    /// `(d/5) (n/d)`
    K16,
}

impl Kernel {
    pub const ALL: [Kernel; 16] = [
        Kernel::K1,
        Kernel::K2,
        Kernel::K3,
        Kernel::K4,
        Kernel::K5,
        Kernel::K6,
        Kernel::K7,
        Kernel::K8,
        Kernel::K9,
        Kernel::K10,
        Kernel::K11,
        Kernel::K12,
        Kernel::K13,
        Kernel::K14,
        Kernel::K15,
        Kernel::K16,
    ];
}

fn gamma(n: i64) -> i64 {
    n & 1
}

fn sign_nd(n: i64, d: i64) -> i64 {
    if (n + d) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn chi(a: i64, m: i64) -> i64 {
    kronecker(a, m as u64) as i64
}

/// `Σ_{d | n} kernel(n, d)`.
pub fn divisor_sum(n: u64, kernel: Kernel) -> i64 {
    assert!(n >= 1, "divisor_sum needs n >= 1");
    if kernel == Kernel::K13 {
        let base: i64 = divisors(n).iter().map(|&d| chi(d as i64, 3)).sum();
        let extra: i64 = if n.is_multiple_of(4) {
            divisors(n / 4).iter().map(|&d| chi(d as i64, 3)).sum()
        } else {
            0
        };
        return 2 * base + 4 * extra;
    }
    let ni = n as i64;
    divisors(n)
        .into_iter()
        .map(|d| {
            let d = d as i64;
            let e = ni / d;
            match kernel {
                Kernel::K1 => chi(-20, d),
                Kernel::K2 => chi(-4, d) * chi(e, 5),
                Kernel::K3 => chi(-24, d),
                Kernel::K4 => chi(d, 2) * chi(e, 3),
                Kernel::K5 => sign_nd(ni, d) * chi(-15, e),
                Kernel::K6 => sign_nd(ni, d) * chi(-3, d) * chi(5, e),
                Kernel::K7 => chi(d, 5) * d,
                Kernel::K8 => chi(-4, d),
                Kernel::K9 => sign_nd(ni, d) * d * chi(d, 5),
                Kernel::K10 => sign_nd(ni, d) * d * chi(e, 5),
                Kernel::K11 => d * chi(d, 5) * gamma(e),
                Kernel::K12 => gamma(d) * chi(d, 5) * e,
                Kernel::K13 => unreachable!(),
                Kernel::K14 => sign_nd(ni, d) * d * d * chi(d, 3),
                Kernel::K15 => sign_nd(ni, d) * d * d * chi(e, 3),
                Kernel::K16 => chi(d, 5) * e,
            }
        })
        .sum()
}

/// The series `Σ_{n=1}^{order} divisor_sum(n, kernel) q^n`.
pub fn divisor_series(kernel: Kernel, order: i64) -> LaurentSeries {
    let values = (1..=order.max(0)).map(|n| divisor_sum(n as u64, kernel) as i128).collect();
    LaurentSeries::from_i128(1, order, values)
}

/// `U₂`: the coefficient of `q^n` in the result is the coefficient of
/// `q^{2n}` in `s`. The result tracks `⌈min/2⌉ ..= ⌊order/2⌋`.
pub fn hecke_u2(s: &LaurentSeries) -> LaurentSeries {
    let lo = s.min_exp().div_euclid(2) + i64::from(s.min_exp().rem_euclid(2) != 0);
    let hi = s.order().div_euclid(2);
    let values = (lo..=hi).map(|n| s.coeff(2 * n).expect("2n lies in the tracked range")).collect();
    LaurentSeries::from_rationals(lo, hi, values)
}

/// [`hecke_u2`] with a target order: fails unless `s` tracks `q^{2 order}`.
pub fn hecke_u2_to(s: &LaurentSeries, order: i64) -> Result<LaurentSeries> {
    if s.order() < 2 * order {
        return Err(Error::InsufficientOrder { needed: 2 * order, have: s.order() });
    }
    Ok(hecke_u2(s).truncate(order))
}

/// Coprime pairs `(m, n)`, `1 < m < n`, `mn <= limit`, with `a(mn) != a(m) a(n)`,
/// where `a(k)` is the coefficient of `q^k`. Requires `a(1) = 1`.
pub fn check_multiplicative(s: &LaurentSeries, limit: i64) -> Result<Vec<(i64, i64)>> {
    if s.order() < limit {
        return Err(Error::InsufficientOrder { needed: limit, have: s.order() });
    }
    let a1 = s.coeff_or_zero(1)?;
    if !a1.is_one() {
        return Err(Error::NotNormalized(a1.to_string()));
    }
    let a: Vec<Rational> = (0..=limit)
        .map(|k| if k == 0 { Rational::zero() } else { s.coeff_or_zero(k).expect("k is tracked") })
        .collect();
    let mut bad = Vec::new();
    for m in 2..=limit {
        for n in (m + 1)..=(limit / m) {
            if num_integer::gcd(m, n) == 1 && a[(m * n) as usize] != &a[m as usize] * &a[n as usize] {
                bad.push((m, n));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        assert_eq!(divisor_sum(3, Kernel::K1), 2);
        assert_eq!(divisor_sum(3, Kernel::K2), -2);
        assert_eq!(divisor_sum(1, Kernel::K7), 1);
    }

    #[test]
    fn k8_counts_sums_of_two_squares() {
        for n in 1..300u64 {
            let direct = (-20i64..=20)
                .flat_map(|x| (-20i64..=20).map(move |y| x * x + y * y))
                .filter(|&v| v == n as i64)
                .count() as i64;
            assert_eq!(4 * divisor_sum(n, Kernel::K8), direct, "n = {n}");
        }
    }

    #[test]
    fn u2_extracts_even_coefficients() {
        let geo = LaurentSeries::from_i128(0, 20, vec![1; 21]);
        assert_eq!(hecke_u2(&geo), LaurentSeries::from_i128(0, 10, vec![1; 11]));
        let s = LaurentSeries::from_i128(-3, 7, (0..11).collect());
        let u = hecke_u2(&s);
        assert_eq!((u.min_exp(), u.order()), (-1, 3));
        assert_eq!(u.coeff_i128(-1), Some(1));
        assert!(hecke_u2_to(&s, 4).is_err());
    }

    #[test]
    fn multiplicativity_rejects_unnormalized() {
        let one = LaurentSeries::one(10);
        assert!(matches!(check_multiplicative(&one, 10), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn divisor_series_is_multiplicative() {
        for k in [Kernel::K1, Kernel::K2, Kernel::K5, Kernel::K6, Kernel::K7, Kernel::K11, Kernel::K12] {
            let s = divisor_series(k, 300);
            assert_eq!(check_multiplicative(&s, 300).unwrap(), vec![], "{k:?}");
        }
        let tau = LaurentSeries::from_i128(1, 12, vec![1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]);
        assert!(check_multiplicative(&tau, 12).unwrap().is_empty());
        let bad = LaurentSeries::from_i128(1, 6, vec![1, 2, 2, 3, 2, 5]);
        assert_eq!(check_multiplicative(&bad, 6).unwrap(), vec![(2, 3)]);
    }
}
