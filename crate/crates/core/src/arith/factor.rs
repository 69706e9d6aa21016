use serde::Serialize;

use crate::arith::kronecker::{cubic_residue_2, quartic_class_2};

/// Complete prime factorization, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }
}

/// Prime factorization by trial division. `factorize(1)` has no factors.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { n, factors }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).factors == [(n, 1)]
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for &(p, e) in &factorize(n).factors {
        let len = ds.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// Classification rule for the prime factors of `n`, one per family of
/// representation formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Scheme {
    /// Sums of two squares: split p ≡ 1, inert p ≡ 3 (mod 4).
    Mod4,
    /// Discriminant -20: split p ≡ 1, 3, 7, 9; inert p ≡ 11, 13, 17, 19 (mod 20);
    /// t counts primes ≡ 3, 7 (mod 20).
    Mod20,
    /// Discriminant -24: split p ≡ 1, 5, 7, 11; inert p ≡ 13, 17, 19, 23 (mod 24);
    /// t counts primes ≡ 5, 11 (mod 24).
    Mod24,
    /// Discriminant -60: split odd p ≡ 1, 2, 4, 8; inert p ≡ 7, 11, 13, 14 (mod 15);
    /// t counts odd primes ≡ 2, 8 (mod 15).
    Mod15,
    /// Discriminant -108: p ≡ 1 (mod 3) split by whether 2 is a cubic residue;
    /// inert p ≡ 2 (mod 3), p ≠ 2.
    Cubic27,
    /// The quaternary forms: split p ≡ ±1, inert odd p ≡ ±2 (mod 5);
    /// t counts odd primes ≡ ±2 (mod 5).
    Quint,
    /// Level 256 eta-product: p ≡ 5 (mod 8), p ≡ 1 (mod 8) split by the
    /// quartic character of 2, p ≡ 3 (mod 4).
    Octic81,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeLabel {
    /// A prime whose exponent is tracked by name (2, 3 or 5 depending on the scheme).
    Special,
    /// Contributes a `(1 + v)`-type factor.
    Split,
    /// Contributes `(1 + (-1)^w) / 2`.
    Inert,
    CubicResidue,
    CubicNonResidue,
    FiveMod8,
    QuarticResidue,
    QuarticNonResidue,
    ThreeMod4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledPrime {
    pub prime: u64,
    pub exponent: u32,
    pub label: PrimeLabel,
}

/// Labels for every prime factor of `n` under one scheme, plus the counter `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeClassification {
    pub scheme: Scheme,
    pub n: u64,
    pub primes: Vec<LabeledPrime>,
    pub t: u32,
}

impl PrimeClassification {
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.primes.iter().find(|lp| lp.prime == p).map_or(0, |lp| lp.exponent)
    }

    pub fn with_label(&self, label: PrimeLabel) -> impl Iterator<Item = &LabeledPrime> {
        self.primes.iter().filter(move |lp| lp.label == label)
    }

    /// `∏ (1 + v)` over primes carrying `label`.
    pub fn count_factor(&self, label: PrimeLabel) -> i64 {
        self.with_label(label).map(|lp| 1 + lp.exponent as i64).product()
    }

    /// `∏ (1 + (-1)^w) / 2` over primes carrying `label`: 1 if every exponent is even, else 0.
    pub fn parity_factor(&self, label: PrimeLabel) -> i64 {
        i64::from(self.with_label(label).all(|lp| lp.exponent % 2 == 0))
    }
}

/// Label each prime factor of `f` under `scheme` and compute `t`.
pub fn classify(scheme: Scheme, f: &Factorization) -> PrimeClassification {
    use PrimeLabel::*;
    let mut t = 0u32;
    let primes = f
        .factors
        .iter()
        .map(|&(p, e)| {
            let label = match scheme {
                Scheme::Mod4 => match p % 4 {
                    _ if p == 2 => Special,
                    1 => Split,
                    _ => Inert,
                },
                Scheme::Mod20 => match p % 20 {
                    _ if p == 2 || p == 5 => Special,
                    1 | 9 => Split,
                    3 | 7 => {
                        t += e;
                        Split
                    }
                    _ => Inert,
                },
                Scheme::Mod24 => match p % 24 {
                    _ if p == 2 || p == 3 => Special,
                    1 | 7 => Split,
                    5 | 11 => {
                        t += e;
                        Split
                    }
                    _ => Inert,
                },
                Scheme::Mod15 => match p % 15 {
                    _ if p == 2 || p == 3 || p == 5 => Special,
                    1 | 4 => Split,
                    2 | 8 => {
                        t += e;
                        Split
                    }
                    _ => Inert,
                },
                Scheme::Cubic27 => match p % 3 {
                    _ if p == 2 || p == 3 => Special,
                    1 => {
                        if cubic_residue_2(p).expect("p ≡ 1 (mod 3) is a prime factor") {
                            CubicResidue
                        } else {
                            CubicNonResidue
                        }
                    }
                    _ => Inert,
                },
                Scheme::Quint => match p % 5 {
                    _ if p == 2 || p == 5 => Special,
                    1 | 4 => Split,
                    _ => {
                        t += e;
                        Inert
                    }
                },
                Scheme::Octic81 => match p % 8 {
                    _ if p == 2 => Special,
                    5 => FiveMod8,
                    1 => {
                        if quartic_class_2(p).expect("p ≡ 1 (mod 8) is a prime factor") == 1 {
                            QuarticResidue
                        } else {
                            QuarticNonResidue
                        }
                    }
                    _ => ThreeMod4,
                },
            };
            LabeledPrime { prime: p, exponent: e, label }
        })
        .collect();
    PrimeClassification { scheme, n: f.n, primes, t }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(21).factors, [(3, 1), (7, 1)]);
        assert!(factorize(1).factors.is_empty());
        assert_eq!(factorize(2520).factors, [(2, 3), (3, 2), (5, 1), (7, 1)]);
        assert_eq!(factorize(9_999_991).factors, [(9_999_991, 1)]);
    }

    #[test]
    fn factorization_reassembles() {
        for n in 1..5000u64 {
            let f = factorize(n);
            let prod: u64 = f.factors.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors.iter().all(|&(p, _)| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)));
        }
    }

    #[test]
    fn divisors_of_twelve() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
    }

    #[test]
    fn mod20_of_21() {
        let c = classify(Scheme::Mod20, &factorize(21));
        assert_eq!(c.t, 2);
        assert_eq!(c.exponent_of(2), 0);
        assert!(c.primes.iter().all(|lp| lp.label == PrimeLabel::Split));
    }

    #[test]
    fn mod15_of_4() {
        let c = classify(Scheme::Mod15, &factorize(4));
        assert_eq!(c.exponent_of(2), 2);
        assert_eq!(c.t, 0);
        assert!(c.primes.iter().all(|lp| lp.prime == 2));
    }

    #[test]
    fn cubic27_of_31() {
        let c = classify(Scheme::Cubic27, &factorize(31));
        assert_eq!(c.primes, [LabeledPrime { prime: 31, exponent: 1, label: PrimeLabel::CubicResidue }]);
        let c = classify(Scheme::Cubic27, &factorize(7 * 7 * 11));
        assert_eq!(c.count_factor(PrimeLabel::CubicNonResidue), 3);
        assert_eq!(c.parity_factor(PrimeLabel::Inert), 0);
    }

    #[test]
    fn every_prime_gets_one_label() {
        for scheme in [Scheme::Mod4, Scheme::Mod20, Scheme::Mod24, Scheme::Mod15, Scheme::Cubic27, Scheme::Quint, Scheme::Octic81] {
            for n in 1..2000u64 {
                let f = factorize(n);
                let c = classify(scheme, &f);
                assert_eq!(c.primes.len(), f.factors.len());
            }
        }
    }
}
