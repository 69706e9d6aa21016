//! Closed-form representation counts and coefficient formulas, evaluated
//! from a prime factorization.

use serde::Serialize;

use crate::arith::{classify, factorize, kronecker, PrimeClassification, PrimeLabel, Scheme};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub n: u64,
    pub value: i64,
    pub scheme: Option<PrimeClassification>,
}

fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn scheme_of(scheme: Scheme, n: u64) -> PrimeClassification {
    assert!(n >= 1, "formulas are defined for n >= 1");
    classify(scheme, &factorize(n))
}

/// `∏(1 + v_i) ∏(1 + (-1)^{w_j})/2` over split and inert primes.
fn split_inert(c: &PrimeClassification) -> i64 {
    c.count_factor(PrimeLabel::Split) * c.parity_factor(PrimeLabel::Inert)
}

/// Representations by `x² + y²`.
pub fn r2(n: u64) -> i64 {
    4 * split_inert(&scheme_of(Scheme::Mod4, n))
}

fn mod20(n: u64, s: i64) -> i64 {
    let c = scheme_of(Scheme::Mod20, n);
    (1 + s * sign(c.exponent_of(2) + c.t)) * split_inert(&c)
}

/// Representations by `x² + 5y²`.
pub fn rep_1_0_5(n: u64) -> i64 {
    mod20(n, 1)
}

/// Representations by `2x² + 2xy + 3y²`.
pub fn rep_2_2_3(n: u64) -> i64 {
    mod20(n, -1)
}

fn mod24(n: u64, s: i64) -> i64 {
    let c = scheme_of(Scheme::Mod24, n);
    (1 + s * sign(c.exponent_of(2) + c.exponent_of(3) + c.t)) * split_inert(&c)
}

/// Representations by `x² + 6y²`.
pub fn rep_1_0_6(n: u64) -> i64 {
    mod24(n, 1)
}

/// Representations by `2x² + 3y²`.
pub fn rep_2_0_3(n: u64) -> i64 {
    mod24(n, -1)
}

fn mod15(n: u64, s: i64) -> i64 {
    let c = scheme_of(Scheme::Mod15, n);
    let a = c.exponent_of(2);
    let parity = sign(a + c.exponent_of(3) + c.exponent_of(5) + c.t);
    (a as i64 - 1).abs() * (1 + s * parity) * split_inert(&c)
}

/// Representations by `x² + 15y²`.
pub fn rep_1_0_15(n: u64) -> i64 {
    mod15(n, 1)
}

/// Representations by `3x² + 5y²`.
pub fn rep_3_0_5(n: u64) -> i64 {
    mod15(n, -1)
}

/// `(a(n), b(n))` for `x² + 27y²` and `4x² + 2xy + 7y²`.
fn cubic_pair(n: u64) -> (i64, i64) {
    let c = scheme_of(Scheme::Cubic27, n);
    let parity = c.parity_factor(PrimeLabel::Inert);
    if n % 6 != 1 {
        let alpha = c.exponent_of(2);
        let beta = c.exponent_of(3);
        let split = c.count_factor(PrimeLabel::CubicResidue) * c.count_factor(PrimeLabel::CubicNonResidue);
        let v = if beta >= 2 {
            (3 - 2 * i64::from(alpha == 0)) * (1 + sign(alpha)) * split * parity
        } else if beta == 0 && alpha > 0 {
            (1 + sign(alpha)) * split * parity
        } else {
            0
        };
        return (v, v);
    }
    let res = c.count_factor(PrimeLabel::CubicResidue);
    let non: i64 = c.count_factor(PrimeLabel::CubicNonResidue);
    let chi: i64 = c
        .with_label(PrimeLabel::CubicNonResidue)
        .map(|lp| kronecker(1 + lp.exponent as i64, 3) as i64)
        .product();
    let exact = |num: i64| {
        debug_assert_eq!(num % 3, 0, "n = {n}");
        num / 3
    };
    let a = exact(2 * res * (non + 2 * chi) * parity);
    let b = exact(2 * res * (non - chi) * parity);
    (a, b)
}

/// Representations by `x² + 27y²`.
pub fn rep_1_0_27(n: u64) -> i64 {
    cubic_pair(n).0
}

/// Representations by `4x² + 2xy + 7y²`.
pub fn rep_4_2_7(n: u64) -> i64 {
    cubic_pair(n).1
}

/// The four quaternary products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Quat {
    /// `φ(q) φ³(q⁵)`
    A,
    /// `φ³(q) φ(q⁵)`
    B,
    /// `4q ψ³(q) ψ(q⁵)`
    C,
    /// `4q² ψ(q) ψ³(q⁵)`
    D,
}

/// `∏ (p^{v+1} - 1)/(p - 1)` over split primes times
/// `∏ (1 - (-q)^{w+1})/(1 + q)` over inert primes.
fn quint_core(c: &PrimeClassification) -> i64 {
    let split: i64 = c.with_label(PrimeLabel::Split).map(|lp| (0..=lp.exponent).map(|k| (lp.prime as i64).pow(k)).sum::<i64>()).product();
    let inert: i64 = c.with_label(PrimeLabel::Inert).map(|lp| (0..=lp.exponent).map(|k| (-(lp.prime as i64)).pow(k)).sum::<i64>()).product();
    split * inert
}

/// Coefficient of `qⁿ` in the quaternary product `which`.
pub fn rep_quat(which: Quat, n: u64) -> i64 {
    let c = scheme_of(Scheme::Quint, n);
    let g = c.exponent_of(2);
    let d = c.exponent_of(5);
    let s = sign(g + c.t);
    let core = quint_core(&c);
    let nsign = sign(((n - 1) % 2) as u32);
    let two_factor = (5 + (-2i64).pow(g + 1)) / 3;
    match which {
        Quat::A => nsign * (1 + 5i64.pow(d) * s) * two_factor * core,
        Quat::B => nsign * (1 + 5i64.pow(d + 1) * s) * two_factor * core,
        Quat::C => (-2i64).pow(g) * (-1 + 5i64.pow(d + 1) * s) * core,
        Quat::D => (-2i64).pow(g) * (-1 + 5i64.pow(d) * s) * core,
    }
}

/// Coefficient of `qⁿ` in `q E⁴(q¹⁶) / (E(q³²) E(q⁸))`.
///
/// A prime `p ≡ 5 (mod 8)` to an even power `u` contributes `(-1)^{u/2}`;
/// an odd power kills the coefficient.
pub fn thm81_coeff(n: u64) -> i64 {
    let c = scheme_of(Scheme::Octic81, n);
    if c.exponent_of(2) != 0 {
        return 0;
    }
    let five: i64 = c
        .with_label(PrimeLabel::FiveMod8)
        .map(|lp| if lp.exponent % 2 == 0 { sign(lp.exponent / 2) } else { 0 })
        .product();
    let res = c.count_factor(PrimeLabel::QuarticResidue);
    let non: i64 = c.with_label(PrimeLabel::QuarticNonResidue).map(|lp| sign(lp.exponent) * (1 + lp.exponent as i64)).product();
    five * res * non * c.parity_factor(PrimeLabel::ThreeMod4)
}

/// `2(-60/n) - 2δ(2|n)(-60/(n/2)) + 2δ(4|n)(-15/(n/4))`.
pub fn williams_atilde(n: u64) -> i64 {
    assert!(n >= 1);
    let mut v = 2 * kronecker(-60, n) as i64;
    if n.is_multiple_of(2) {
        v -= 2 * kronecker(-60, n / 2) as i64;
    }
    if n.is_multiple_of(4) {
        v += 2 * kronecker(-15, n / 4) as i64;
    }
    v
}

/// Prime-power coefficient tables of the multiplicative divisor sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `Σ (-20/d)`
    B315,
    /// `Σ (-4/d)((n/d)/5)`
    C316,
    /// `Σ (-24/d)`
    C440,
    /// `Σ (d/2)((n/d)/3)`
    D441,
    /// `Σ (-1)^{n+d}(-15/(n/d))`
    C525,
    /// `Σ (-1)^{n+d}(-3/d)(5/(n/d))`
    D526,
    /// coefficients of `q E(q⁶) E(q¹⁸)`
    D618,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::B315, Family::C316, Family::C440, Family::D441, Family::C525, Family::D526, Family::D618];
}

/// Value of the family's multiplicative function at `p^alpha`.
pub fn coeff_prime_power(family: Family, p: u64, alpha: u32) -> Result<i64> {
    if !crate::arith::is_prime(p) {
        return Err(Error::InapplicablePrime(p));
    }
    if alpha == 0 {
        return Ok(1);
    }
    let a = alpha as i64;
    let s = sign(alpha);
    let parity = i64::from(alpha.is_multiple_of(2));
    let v = match family {
        Family::B315 => match p % 20 {
            _ if p == 2 || p == 5 => 1,
            1 | 3 | 7 | 9 => 1 + a,
            _ => parity,
        },
        Family::C316 => match p % 20 {
            _ if p == 2 => s,
            _ if p == 5 => 1,
            1 | 9 => 1 + a,
            3 | 7 => s * (1 + a),
            _ => parity,
        },
        Family::C440 => match p % 24 {
            _ if p == 2 || p == 3 => 1,
            1 | 5 | 7 | 11 => 1 + a,
            _ => parity,
        },
        Family::D441 => match p % 24 {
            _ if p == 2 || p == 3 => s,
            1 | 7 => 1 + a,
            5 | 11 => s * (1 + a),
            _ => parity,
        },
        Family::C525 => match p % 15 {
            _ if p == 2 => (a - 1).abs(),
            _ if p == 3 || p == 5 => 1,
            1 | 2 | 4 | 8 => 1 + a,
            _ => parity,
        },
        Family::D526 => match p % 15 {
            _ if p == 2 => s * (a - 1).abs(),
            _ if p == 3 || p == 5 => s,
            1 | 4 => 1 + a,
            2 | 8 => s * (1 + a),
            _ => parity,
        },
        Family::D618 => match p % 3 {
            _ if p == 2 || p == 3 => 0,
            1 => {
                if crate::arith::cubic_residue_2(p)? {
                    a + 1
                } else {
                    kronecker(a + 1, 3) as i64
                }
            }
            _ => parity,
        },
    };
    Ok(v)
}

/// Names accepted by [`evaluate`].
pub const FORMULA_NAMES: [&str; 15] = [
    "r2",
    "rep_1_0_5",
    "rep_2_2_3",
    "rep_1_0_6",
    "rep_2_0_3",
    "rep_1_0_15",
    "rep_3_0_5",
    "rep_1_0_27",
    "rep_4_2_7",
    "rep_quat_a",
    "rep_quat_b",
    "rep_quat_c",
    "rep_quat_d",
    "thm81_coeff",
    "williams_atilde",
];

/// Evaluate a formula by name, attaching the classification it used.
pub fn evaluate(name: &str, n: u64) -> Result<FormulaResult> {
    if n == 0 {
        return Err(Error::Precondition("formulas need n >= 1".into()));
    }
    let (value, scheme) = match name {
        "r2" => (r2(n), Some(Scheme::Mod4)),
        "rep_1_0_5" => (rep_1_0_5(n), Some(Scheme::Mod20)),
        "rep_2_2_3" => (rep_2_2_3(n), Some(Scheme::Mod20)),
        "rep_1_0_6" => (rep_1_0_6(n), Some(Scheme::Mod24)),
        "rep_2_0_3" => (rep_2_0_3(n), Some(Scheme::Mod24)),
        "rep_1_0_15" => (rep_1_0_15(n), Some(Scheme::Mod15)),
        "rep_3_0_5" => (rep_3_0_5(n), Some(Scheme::Mod15)),
        "rep_1_0_27" => (rep_1_0_27(n), Some(Scheme::Cubic27)),
        "rep_4_2_7" => (rep_4_2_7(n), Some(Scheme::Cubic27)),
        "rep_quat_a" => (rep_quat(Quat::A, n), Some(Scheme::Quint)),
        "rep_quat_b" => (rep_quat(Quat::B, n), Some(Scheme::Quint)),
        "rep_quat_c" => (rep_quat(Quat::C, n), Some(Scheme::Quint)),
        "rep_quat_d" => (rep_quat(Quat::D, n), Some(Scheme::Quint)),
        "thm81_coeff" => (thm81_coeff(n), Some(Scheme::Octic81)),
        "williams_atilde" => (williams_atilde(n), None),
        other => return Err(Error::UnknownIdentity(format!("formula {other}"))),
    };
    Ok(FormulaResult { n, value, scheme: scheme.map(|s| classify(s, &factorize(n))) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{divisor_sum, Kernel};

    #[test]
    fn documented_values() {
        assert_eq!((r2(5), r2(3), r2(25)), (8, 0, 12));
        assert_eq!((rep_1_0_5(21), rep_1_0_5(3), rep_2_2_3(2)), (8, 0, 2));
        assert_eq!((rep_1_0_6(6), rep_1_0_6(5), rep_2_0_3(5)), (2, 0, 4));
        assert_eq!((rep_1_0_15(16), rep_1_0_15(2), rep_3_0_5(8)), (6, 0, 4));
        assert_eq!((rep_1_0_27(7), rep_4_2_7(7), rep_1_0_27(28), rep_1_0_27(31)), (0, 2, 4, 4));
        assert_eq!((rep_quat(Quat::A, 1), rep_quat(Quat::B, 1), rep_quat(Quat::C, 1), rep_quat(Quat::A, 2)), (2, 6, 4, 0));
        assert_eq!((thm81_coeff(1), thm81_coeff(17), thm81_coeff(2)), (1, -2, 0));
        assert_eq!((thm81_coeff(25), thm81_coeff(625), thm81_coeff(5)), (-1, 1, 0));
        assert_eq!((williams_atilde(1), williams_atilde(2), williams_atilde(4)), (2, -2, 2));
    }

    #[test]
    fn table_examples() {
        assert_eq!(coeff_prime_power(Family::B315, 3, 2), Ok(3));
        assert_eq!(coeff_prime_power(Family::C316, 2, 3), Ok(-1));
        assert_eq!(coeff_prime_power(Family::D618, 7, 1), Ok(-1));
        assert_eq!(coeff_prime_power(Family::B315, 4, 1), Err(Error::InapplicablePrime(4)));
    }

    #[test]
    fn tables_agree_with_divisor_sums() {
        let pairs = [
            (Family::B315, Kernel::K1),
            (Family::C316, Kernel::K2),
            (Family::C440, Kernel::K3),
            (Family::D441, Kernel::K4),
            (Family::C525, Kernel::K5),
            (Family::D526, Kernel::K6),
        ];
        for p in (2..60u64).filter(|&p| crate::arith::is_prime(p)) {
            for alpha in 0..4 {
                for (fam, k) in pairs {
                    assert_eq!(coeff_prime_power(fam, p, alpha).unwrap(), divisor_sum(p.pow(alpha), k), "{fam:?} {p}^{alpha}");
                }
            }
        }
    }

    #[test]
    fn dirichlet_split() {
        for n in 1..500 {
            assert_eq!(rep_1_0_5(n), divisor_sum(n, Kernel::K1) + divisor_sum(n, Kernel::K2));
            assert_eq!(rep_2_2_3(n), rep_1_0_5(2 * n));
            assert_eq!(rep_1_0_5(n) * rep_2_2_3(n), 0);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(evaluate("nope", 3), Err(Error::UnknownIdentity(_))));
        assert_eq!(evaluate("r2", 5).unwrap().value, 8);
    }
}
