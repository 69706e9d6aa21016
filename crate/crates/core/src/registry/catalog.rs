use super::helpers::*;
use super::{Builder, Expectation, IdentityEntry};
use crate::arith::{divisor_series, divisors, factorize, hecke_u2_to, kronecker, Kernel};
use crate::closedform;
use crate::lambert::{onepsione_pair, Character, LambertSpec};
use crate::qfunctions::{addition_split, quintuple_sides, theta_product_rule};
use crate::repcount::{bqf_theta, BinaryForm};
use crate::series::{LaurentSeries, DEFAULT_ORDER};

fn must(id: &'static str, paper_ref: &'static str, lhs: Builder, rhs: Builder) -> IdentityEntry {
    IdentityEntry {
        id,
        paper_ref,
        expectation: Expectation::MustPass,
        default_order: DEFAULT_ORDER,
        integral: true,
        lhs,
        rhs,
    }
}

impl IdentityEntry {
    fn exploratory(mut self) -> Self {
        self.expectation = Expectation::Exploratory;
        self
    }

    fn non_integral(mut self) -> Self {
        self.integral = false;
        self
    }
}

const B3: Character = Character::Bottom(3);
const B5: Character = Character::Bottom(5);

fn bl(a: i64, b: i64, c: i64, d: i64, s: i8) -> LambertSpec {
    LambertSpec::bilateral(a, b, c, d, s)
}

fn ul(a: i64, b: i64, c: i64, d: i64, s: i8) -> LambertSpec {
    LambertSpec::unilateral(a, b, c, d, s)
}

fn bqf(a: i64, b: i64, c: i64, n: i64) -> LaurentSeries {
    bqf_theta(BinaryForm::new(a, b, c).expect("catalog forms are definite"), n)
}

/// `Σ_{n≥1} χ(n) qⁿ/(1 - qⁿ)`.
fn char_lambert(chi: Character, n: i64) -> R {
    lam(ul(1, 0, 1, 0, -1).with_character(chi), n)
}

// Parts shared by several sections.

fn sec3_s1(n: i64) -> R {
    Ok(lam(bl(1, 0, 10, 0, 1), n)? - lam(bl(5, 2, 10, 4, 1), n)?)
}

fn sec3_l20(n: i64) -> R {
    char_lambert(Character::Top(-20), n)
}

fn sec3_l5(n: i64) -> R {
    lam(ul(1, 0, 2, 0, 1).with_character(B5), n)
}

fn p4(n: i64) -> R {
    eta(0, &[(2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)], n)
}

fn q4(n: i64) -> R {
    eta(1, &[(1, 1), (4, 1), (6, 1), (24, 1), (3, -1), (8, -1)], n)
}

fn p4_bilateral(n: i64) -> R {
    Ok(lam(bl(1, 0, 12, 0, 1), n)? + lam(bl(5, 0, 12, 0, 1), n)?)
}

fn p4_unilateral(n: i64) -> R {
    Ok(one(n) + char_lambert(Character::Top(-6), n)?)
}

fn q4_bilateral(n: i64) -> R {
    Ok(lam(bl(3, 1, 12, 4, 1), n)? - lam(bl(9, 3, 12, 4, 1), n)?)
}

fn q4_unilateral(n: i64) -> R {
    Ok(lam(ul(1, 0, 4, 0, 1).with_character(B3), n)? - lam(ul(3, 0, 4, 0, 1).with_character(B3), n)?)
}

fn p5(n: i64) -> R {
    eta(0, &[(1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1)], n)
}

fn q5(n: i64) -> R {
    eta(1, &[(2, 1), (3, 1), (5, 1), (30, 1), (6, -1), (10, -1)], n)
}

/// `Σ (-15/n) qⁿ/(1 + qⁿ)`.
fn l15(n: i64) -> R {
    lam(ul(1, 0, 1, 0, 1).with_character(Character::Top(-15)), n)
}

/// `Σ (5/n) qⁿ(1 + qⁿ)/(1 + q³ⁿ)`.
fn q5_lambert(n: i64) -> R {
    let t5 = Character::Top(5);
    Ok(lam(ul(1, 0, 3, 0, 1).with_character(t5), n)? + lam(ul(2, 0, 3, 0, 1).with_character(t5), n)?)
}

fn phi_phi(a: u32, b: u32, n: i64) -> LaurentSeries {
    phi(a, n) * phi(b, n)
}

/// `E⁵(q)/E(q⁵)`
fn a5(n: i64) -> R {
    eta(0, &[(1, 5), (5, -1)], n)
}

/// `q E⁵(q⁵)/E(q)`
fn b5(n: i64) -> R {
    eta(1, &[(5, 5), (1, -1)], n)
}

/// `E⁵(q²)/E(q¹⁰)`
fn c5(n: i64) -> R {
    eta(0, &[(2, 5), (10, -1)], n)
}

/// `q² E⁵(q¹⁰)/E(q²)`
fn d5(n: i64) -> R {
    eta(2, &[(10, 5), (2, -1)], n)
}

fn fifth(s: LaurentSeries) -> LaurentSeries {
    s.scale(&frac(1, 5))
}

/// `(E⁵(-q)/E(-q⁵) + 4E⁵(q²)/E(q¹⁰))/5`
fn blk_x(n: i64) -> R {
    Ok(fifth(a5(n)?.negate_variable() + c5(n)? * 4))
}

/// `q E⁵(-q⁵)/E(-q) + 4q² E⁵(q¹⁰)/E(q²)`
fn blk_y(n: i64) -> R {
    Ok(-b5(n)?.negate_variable() + d5(n)? * 4)
}

/// `-(E⁵(q)/E(q⁵) - E⁵(q²)/E(q¹⁰))/5`
fn blk_z(n: i64) -> R {
    Ok(-fifth(a5(n)? - c5(n)?))
}

/// `q E⁵(q⁵)/E(q) + q² E⁵(q¹⁰)/E(q²)`
fn blk_w(n: i64) -> R {
    Ok(b5(n)? + d5(n)?)
}

/// `Σ (n/5) n qⁿ/(1 - (-q)ⁿ)`
fn lam_x(n: i64) -> R {
    Ok(lam(ul(1, 0, 1, 0, -1).with_character(B5).weighted().alternating(), n)?.negate_variable())
}

/// `Σ (n/5) (-q)ⁿ/(1 + (-q)ⁿ)²`
fn lam_u(n: i64) -> R {
    Ok(lam(ul(1, 0, 1, 0, 1).with_character(B5).squared(), n)?.negate_variable())
}

/// `Σ (n/5) n qⁿ/(1 - q²ⁿ)`
fn lam_r(n: i64) -> R {
    lam(ul(1, 0, 2, 0, -1).with_character(B5).weighted(), n)
}

/// `Σ_{n odd} (n/5) qⁿ/(1 - qⁿ)²`
fn lam_s(n: i64) -> R {
    lam(ul(1, 0, 1, 0, -1).with_character(B5).squared().odd_only(), n)
}

fn psi3psi5(n: i64) -> LaurentSeries {
    psi(1, n).pow(3) * psi(5, n)
}

fn psipsi35(n: i64) -> LaurentSeries {
    psi(1, n) * psi(5, n).pow(3)
}

fn phi3phi5(n: i64) -> LaurentSeries {
    phi(1, n).pow(3) * phi(5, n)
}

fn phiphi35(n: i64) -> LaurentSeries {
    phi(1, n) * phi(5, n).pow(3)
}

/// `q E(q⁶) E(q¹⁸)`
fn d618(n: i64) -> R {
    eta(1, &[(6, 1), (18, 1)], n)
}

/// Coefficients `d(n)` of `q E(q⁶)E(q¹⁸)` rebuilt from `d(p)` alone through
/// `d(p^{s+2}) = d(p) d(p^{s+1}) - (-108/p) d(p^s)` and multiplicativity.
fn d618_from_primes(n: i64) -> R {
    let s = d618(n)?;
    let d = |k: i64| s.coeff_i128(k).expect("tracked") as i64;
    Ok(coeff_series(n, 0, |m| {
        factorize(m)
            .factors
            .iter()
            .map(|&(p, a)| {
                let chi = kronecker(-108, p) as i64;
                let (mut prev, mut cur) = (1, d(p as i64));
                for _ in 1..a {
                    (prev, cur) = (cur, d(p as i64) * cur - chi * prev);
                }
                cur
            })
            .product()
    }))
}

fn q_tilde_pair(n: i64) -> (LaurentSeries, LaurentSeries) {
    let num = bqf(2, 0, 7, n) + bqf(3, 2, 5, n);
    let den = bqf(1, 0, 14, n) - bqf(3, 2, 5, n);
    (num, den)
}

pub fn catalog() -> Vec<IdentityEntry> {
    let mut c = vec![
        // Sums of two squares.
        must(
            "sum2sq.lambert",
            "φ²(q) = 1 + 4 Σ_{n≥1} qⁿ/(1 + q²ⁿ)",
            |n| Ok(phi(1, n).pow(2)),
            |n| Ok(one(n) + lam(ul(1, 0, 2, 0, 1), n)? * 4),
        ),
        must(
            "sum2sq.count",
            "r₂(n) closed form against lattice enumeration of x² + y²",
            |n| Ok(coeff_series(n, 1, closedform::r2)),
            |n| Ok(bqf(1, 0, 1, n)),
        ),
        // Theta functions and their product forms.
        must(
            "jtp.phi",
            "φ(q) = Σ q^{n²} = (-q; q²)²_∞ (q²; q²)_∞ = E⁵(q²)/(E²(q⁴)E²(q))",
            |n| {
                let m = part(n, 3);
                Ok(weave(&[phi(1, m), phi(1, m), phi(1, m)]))
            },
            |n| {
                let m = part(n, 3);
                let jtp = crate::qfunctions::pochhammer_inf(mq(1), pq(2), m)?.pow(2)
                    * crate::qfunctions::pochhammer_inf(pq(2), pq(2), m)?;
                Ok(weave(&[f(pq(1), pq(1), m)?, jtp, eta(0, &[(2, 5), (4, -2), (1, -2)], m)?]))
            },
        ),
        must(
            "jtp.psi",
            "ψ(q) = f(q, q³) = Σ q^{2n²-n} = (-q; q⁴)_∞ (-q³; q⁴)_∞ (q⁴; q⁴)_∞ = E²(q²)/E(q)",
            |n| {
                let m = part(n, 4);
                Ok(weave(&[psi(1, m), psi(1, m), psi(1, m), psi(1, m)]))
            },
            |n| {
                use crate::qfunctions::pochhammer_inf as poch;
                let m = part(n, 4);
                let bilateral = LaurentSeries::from_i128(0, m, {
                    let mut v = vec![0i128; m as usize + 1];
                    for k in -m..=m {
                        let e = 2 * k * k - k;
                        if (0..=m).contains(&e) {
                            v[e as usize] += 1;
                        }
                    }
                    v
                });
                let jtp = poch(mq(1), pq(4), m)? * poch(mq(3), pq(4), m)? * poch(pq(4), pq(4), m)?;
                Ok(weave(&[f(pq(1), pq(3), m)?, bilateral, jtp, eta(0, &[(2, 2), (1, -1)], m)?]))
            },
        ),
        must(
            "add.split2",
            "two-term addition formula: E(q) = f(-q, -q²) = f(q⁵, q⁷) - q f(q, q¹¹)",
            |n| {
                let m = part(n, 2);
                Ok(weave(&[e(1, m), f(mq(1), mq(2), m)?]))
            },
            |n| {
                let m = part(n, 2);
                let split: LaurentSeries =
                    addition_split(mq(1), mq(2), 2, m)?.into_iter().reduce(|a, b| a + b).expect("two parts");
                Ok(weave(&[f(pq(5), pq(7), m)? - f(pq(1), pq(11), m)?.shift(1), split]))
            },
        ),
        must(
            "add.phi4",
            "φ(q) = φ(q⁴) + 2q ψ(q⁸)",
            |n| {
                let m = part(n, 2);
                Ok(weave(&[phi(1, m), phi(1, m)]))
            },
            |n| {
                let m = part(n, 2);
                let split = addition_split(pq(1), pq(1), 2, m)?.into_iter().reduce(|a, b| a + b).expect("two parts");
                Ok(weave(&[phi(4, m) + psi(8, m).shift(1) * 2, split]))
            },
        ),
        must(
            "add.phi9",
            "φ(q) = φ(q⁹) + 2q f(q³, q¹⁵)",
            |n| {
                let m = part(n, 2);
                Ok(weave(&[phi(1, m), phi(1, m)]))
            },
            |n| {
                let m = part(n, 2);
                let split = addition_split(pq(1), pq(1), 3, m)?.into_iter().reduce(|a, b| a + b).expect("three parts");
                Ok(weave(&[phi(9, m) + f(pq(3), pq(15), m)?.shift(1) * 2, split]))
            },
        ),
        must(
            "psi1.inst36",
            "Σ_{n∈ℤ} qⁿ/(1 + q¹⁰ⁿ) = E³(q¹⁰) f(q, q⁹)/(f(-q, -q⁹) f(1, q¹⁰))",
            |n| Ok(onepsione_pair(10, pq(1), mq(0), n)?.1),
            |n| Ok(onepsione_pair(10, pq(1), mq(0), n)?.0),
        )
        .non_integral(),
        must(
            "psi1.inst37",
            "Σ_{n∈ℤ} q^{5n+2}/(1 + q^{10n+4}) = q² E³(q¹⁰) f(q, q⁹)/(f(-q⁵, -q⁵) f(q⁴, q⁶))",
            |n| lam(bl(5, 2, 10, 4, 1), n),
            |n| Ok(onepsione_pair(10, pq(5), mq(4), n)?.0.shift(2)),
        ),
        must(
            "psi1.inst320",
            "Σ_{n∈ℤ} q³ⁿ/(1 - q^{20n+5}) = E³(q²⁰) f(-q⁸, -q¹²)/(f(-q³, -q¹⁷) f(-q⁵, -q¹⁵))",
            |n| Ok(onepsione_pair(20, pq(3), pq(5), n)?.1),
            |n| Ok(onepsione_pair(20, pq(3), pq(5), n)?.0),
        ),
        must(
            "psi1.inst4x",
            "bilateral summation with base q¹² at (a, b) = (q, -1), (q⁵, -1), (q³, -q⁴), (q⁹, -q⁴)",
            |n| {
                let m = part(n, 4);
                let parts: Result<Vec<_>, _> =
                    [(1, 0), (5, 0), (3, 4), (9, 4)].iter().map(|&(a, b)| onepsione_pair(12, pq(a), mq(b), m).map(|p| p.1)).collect();
                Ok(weave(&parts?))
            },
            |n| {
                let m = part(n, 4);
                let parts: Result<Vec<_>, _> =
                    [(1, 0), (5, 0), (3, 4), (9, 4)].iter().map(|&(a, b)| onepsione_pair(12, pq(a), mq(b), m).map(|p| p.0)).collect();
                Ok(weave(&parts?))
            },
        )
        .non_integral(),
        must(
            "prod.311",
            "f(-q², q³)² = f(-q⁵, -q⁵) f(q⁴, q⁶) - q² f(1, q¹⁰) f(-q, -q⁹)",
            |n| {
                let m = part(n, 2);
                let sq = f(mq(2), pq(3), m)?.pow(2);
                Ok(weave(&[sq.clone(), sq]))
            },
            |n| {
                let m = part(n, 2);
                let shown = f(mq(5), mq(5), m)? * f(pq(4), pq(6), m)? - (f(pq(0), pq(10), m)? * f(mq(1), mq(9), m)?).shift(2);
                Ok(weave(&[shown, theta_product_rule(mq(2), pq(3), mq(2), pq(3), m)?.1]))
            },
        ),
        must(
            "prod.414",
            "f(q, q¹¹) f(-q⁵, -q⁷) = f(-q⁶, -q¹⁸) f(-q⁸, -q¹⁶) + q f(-q⁴, -q²⁰) f(-q⁶, -q¹⁸) = ψ(-q⁶)(E(q⁸) + q f(-q⁴, -q²⁰))",
            |n| {
                let m = part(n, 3);
                let lhs = f(pq(1), pq(11), m)? * f(mq(5), mq(7), m)?;
                Ok(weave(&[lhs.clone(), lhs.clone(), lhs]))
            },
            |n| {
                let m = part(n, 3);
                let a = f(mq(6), mq(18), m)? * f(mq(8), mq(16), m)? + (f(mq(4), mq(20), m)? * f(mq(6), mq(18), m)?).shift(1);
                let b = psin(6, m) * (e(8, m) + f(mq(4), mq(20), m)?.shift(1));
                Ok(weave(&[a, b, theta_product_rule(pq(1), pq(11), mq(5), mq(7), m)?.1]))
            },
        ),
        // Two-square-type forms of discriminant -20.
        must(
            "thm3_1.l1",
            "φ(q)φ(q⁵) = 2{Σ_{n∈ℤ} qⁿ/(1 + q¹⁰ⁿ) - Σ_{n∈ℤ} q^{5n+2}/(1 + q^{10n+4})}",
            |n| Ok(phi_phi(1, 5, n)),
            |n| Ok(sec3_s1(n)? * 2),
        ),
        must(
            "thm3_1.l2",
            "φ(q)φ(q⁵) = 2{Σ_{n∈ℤ} q³ⁿ/(1 + q¹⁰ⁿ) + Σ_{n∈ℤ} q^{5n+1}/(1 + q^{10n+2})}",
            |n| Ok(phi_phi(1, 5, n)),
            |n| Ok((lam(bl(3, 0, 10, 0, 1), n)? + lam(bl(5, 1, 10, 2, 1), n)?) * 2),
        ),
        must(
            "thm3_1.l3",
            "φ(q)φ(q⁵) = 1 + Σ (-20/n) qⁿ/(1 - qⁿ) + Σ (n/5) qⁿ/(1 + q²ⁿ)",
            |n| Ok(phi_phi(1, 5, n)),
            |n| Ok(one(n) + sec3_l20(n)? + sec3_l5(n)?),
        ),
        must(
            "eta.34",
            "1 + Σ (-20/n) qⁿ/(1 - qⁿ) = E(q²)E(q⁴)E(q⁵)E(q¹⁰)/(E(q)E(q²⁰))",
            |n| Ok(one(n) + sec3_l20(n)?),
            |n| eta(0, &[(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)], n),
        ),
        must(
            "eta.35",
            "Σ (n/5) qⁿ/(1 + q²ⁿ) = q E(q)E(q²)E(q¹⁰)E(q²⁰)/(E(q⁴)E(q⁵))",
            sec3_l5,
            |n| eta(1, &[(1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1)], n),
        ),
        must(
            "chan.remark",
            "φ(-q)φ(-q⁵) = 2Σ q^{k(5k+3)/2}/(1 + q⁵ᵏ) - 2qΣ q^{k(5k+7)/2}/(1 + q^{5k+2}), and the alternating form of the same sums",
            |n| {
                let m = part(n, 2);
                let alt = lam(bl(1, 0, 10, 0, 1).alternating(), m)? - lam(bl(5, 2, 10, 4, 1).alternating(), m)?;
                Ok(weave(&[phin(1, m) * phin(5, m), alt]))
            },
            |n| {
                let m = part(n, 2);
                let t = lam(bl(-1, 0, 5, 0, 1).with_triangular(5), m)? - lam(bl(1, 1, 5, 2, 1).with_triangular(5), m)?;
                Ok(weave(&[&t * 2, t]))
            },
        )
        .non_integral(),
        must(
            "cor3.dirichlet",
            "Σ q^{n²+5m²} + Σ q^{2n²+2nm+3m²} = 2 + 2Σ (-20/n) qⁿ/(1 - qⁿ)",
            |n| Ok(bqf(1, 0, 5, n) + bqf(2, 2, 3, n)),
            |n| Ok(konst(2, n) + sec3_l20(n)? * 2),
        ),
        must(
            "cor3.form223",
            "Σ q^{2n²+2nm+3m²} = 1 + Σ (-20/n) qⁿ/(1 - qⁿ) - Σ (n/5) qⁿ/(1 + q²ⁿ)",
            |n| Ok(bqf(2, 2, 3, n)),
            |n| Ok(one(n) + sec3_l20(n)? - sec3_l5(n)?),
        ),
        must(
            "cor3.disjoint",
            "no n ≥ 1 is represented by both x² + 5y² and 2x² + 2xy + 3y²",
            |n| Ok(bqf(1, 0, 5, n).hadamard(&bqf(2, 2, 3, n)) - one(n)),
            |n| Ok(LaurentSeries::zero(n)),
        ),
        must(
            "thm3_5.r1",
            "ψ(q)ψ(q⁵) = Σ_{n∈ℤ} (q³ⁿ + q^{7n+1})/(1 - q^{20n+5})",
            |n| Ok(psi(1, n) * psi(5, n)),
            |n| Ok(lam(bl(3, 0, 20, 5, -1), n)? + lam(bl(7, 1, 20, 5, -1), n)?),
        ),
        must(
            "thm3_5.r2",
            "ψ(q)ψ(q⁵) = Σ_{n∈ℤ} (qⁿ + q^{9n+6})/(1 - q^{20n+15})",
            |n| Ok(psi(1, n) * psi(5, n)),
            |n| Ok(lam(bl(1, 0, 20, 15, -1), n)? + lam(bl(9, 6, 20, 15, -1), n)?),
        ),
        // Discriminant -24.
        must(
            "thm4_1.P",
            "P(q) = E(q²)E(q³)E(q⁸)E(q¹²)/(E(q)E(q²⁴)) = Σ_{n∈ℤ} (qⁿ + q⁵ⁿ)/(1 + q¹²ⁿ) = 1 + Σ (-6/n) qⁿ/(1 - qⁿ)",
            |n| {
                let m = part(n, 2);
                let p = p4(m)?;
                Ok(weave(&[p.clone(), p]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[p4_bilateral(m)?, p4_unilateral(m)?]))
            },
        ),
        must(
            "thm4_1.Q",
            "Q(q) = q E(q)E(q⁴)E(q⁶)E(q²⁴)/(E(q³)E(q⁸)) = Σ_{n∈ℤ} (q^{3n+1} - q^{9n+3})/(1 + q^{12n+4}) = Σ (n/3) qⁿ(1 - q²ⁿ)/(1 + q⁴ⁿ)",
            |n| {
                let m = part(n, 2);
                let q = q4(m)?;
                Ok(weave(&[q.clone(), q]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[q4_bilateral(m)?, q4_unilateral(m)?]))
            },
        ),
        must(
            "thm4_1.sum",
            "φ(q)φ(q⁶) = P(q) + Q(q), with P and Q as bilateral sums",
            |n| {
                let m = part(n, 2);
                let s = phi_phi(1, 6, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[p4(m)? + q4(m)?, p4_bilateral(m)? + q4_bilateral(m)?]))
            },
        ),
        must(
            "thm4_1.l6",
            "φ(q)φ(q⁶) = 2{Σ qⁿ/(1 + q¹²ⁿ) - Σ q^{9n+3}/(1 + q^{12n+4})}",
            |n| Ok(phi_phi(1, 6, n)),
            |n| Ok((lam(bl(1, 0, 12, 0, 1), n)? - lam(bl(9, 3, 12, 4, 1), n)?) * 2),
        ),
        must(
            "thm4_1.l7",
            "φ(q)φ(q⁶) = 2{Σ q⁵ⁿ/(1 + q¹²ⁿ) + Σ q^{3n+1}/(1 + q^{12n+4})}",
            |n| Ok(phi_phi(1, 6, n)),
            |n| Ok((lam(bl(5, 0, 12, 0, 1), n)? + lam(bl(3, 1, 12, 4, 1), n)?) * 2),
        ),
        must(
            "thm4_1.l8",
            "φ(q)φ(q⁶) = 1 + Σ (-6/n) qⁿ/(1 - qⁿ) + Σ (n/3) qⁿ(1 - q²ⁿ)/(1 + q⁴ⁿ)",
            |n| Ok(phi_phi(1, 6, n)),
            |n| Ok(p4_unilateral(n)? + q4_unilateral(n)?),
        ),
        must(
            "thm4_1.diff",
            "φ(q²)φ(q³) = P(q) - Q(q), with P and Q as bilateral sums",
            |n| {
                let m = part(n, 2);
                let s = phi_phi(2, 3, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[p4(m)? - q4(m)?, p4_bilateral(m)? - q4_bilateral(m)?]))
            },
        ),
        must(
            "thm4_1.l11",
            "φ(q²)φ(q³) = 2{Σ qⁿ/(1 + q¹²ⁿ) - Σ q^{3n+1}/(1 + q^{12n+4})}",
            |n| Ok(phi_phi(2, 3, n)),
            |n| Ok((lam(bl(1, 0, 12, 0, 1), n)? - lam(bl(3, 1, 12, 4, 1), n)?) * 2),
        ),
        must(
            "thm4_1.l12",
            "φ(q²)φ(q³) = 2{Σ q⁵ⁿ/(1 + q¹²ⁿ) + Σ q^{9n+3}/(1 + q^{12n+4})}",
            |n| Ok(phi_phi(2, 3, n)),
            |n| Ok((lam(bl(5, 0, 12, 0, 1), n)? + lam(bl(9, 3, 12, 4, 1), n)?) * 2),
        ),
        must(
            "thm4_1.l13",
            "φ(q²)φ(q³) = 1 + Σ (-6/n) qⁿ/(1 - qⁿ) - Σ (n/3) qⁿ(1 - q²ⁿ)/(1 + q⁴ⁿ)",
            |n| Ok(phi_phi(2, 3, n)),
            |n| Ok(p4_unilateral(n)? - q4_unilateral(n)?),
        ),
        must(
            "help.420",
            "2ψ³(q)/ψ(q³) = φ³(q)/φ(q³) + φ³(-q²)/φ(-q⁶)",
            |n| Ok(psi(1, n).pow(3).div(&psi(3, n))? * 2),
            |n| Ok(phi(1, n).pow(3).div(&phi(3, n))? + phin(2, n).pow(3).div(&phin(6, n))?),
        ),
        must(
            "help.421",
            "4q ψ(q²)ψ(q⁶) = φ(q)φ(q³) - φ(-q)φ(-q³)",
            |n| Ok((psi(2, n) * psi(6, n)).shift(1) * 4),
            |n| Ok(phi_phi(1, 3, n) - phin(1, n) * phin(3, n)),
        ),
        must(
            "help.423",
            "ψ(q)ψ(q³) = ψ(q⁴)φ(q⁶) + q φ(q²)ψ(q¹²)",
            |n| Ok(psi(1, n) * psi(3, n)),
            |n| Ok(psi(4, n) * phi(6, n) + (phi(2, n) * psi(12, n)).shift(1)),
        ),
        must(
            "help.424",
            "φ(q)φ(-q³) - φ(-q)φ(q³) = 4q ψ(-q²)ψ(-q⁶)",
            |n| Ok(phi(1, n) * phin(3, n) - phin(1, n) * phi(3, n)),
            |n| Ok((psin(2, n) * psin(6, n)).shift(1) * 4),
        ),
        must(
            "triv.427",
            "φ(q)φ(-q) = φ²(-q²) and ψ²(q) = ψ(q²)φ(q)",
            |n| {
                let m = part(n, 2);
                Ok(weave(&[phi(1, m) * phin(1, m), psi(1, m).pow(2)]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[phin(2, m).pow(2), psi(2, m) * phi(1, m)]))
            },
        ),
        must(
            "ratio.435",
            "(φ(q)φ(q⁶) - φ(q²)φ(q³))/(φ(q)φ(q⁶) + φ(q²)φ(q³)) = q φ(-q)ψ(q¹²)/(φ(-q³)ψ(q⁴))",
            |n| {
                let (a, b) = (phi_phi(1, 6, n), phi_phi(2, 3, n));
                (&a - &b).div(&(&a + &b))
            },
            |n| Ok((phin(1, n) * psi(12, n)).div(&(phin(3, n) * psi(4, n)))?.shift(1)),
        ),
        must(
            "help.436",
            "Σ_{n∈ℤ} (qⁿ - q⁵ⁿ)/(1 + q¹²ⁿ) = Σ_{n∈ℤ} (q^{3n+1} + q^{9n+3})/(1 + q^{12n+4}) = q E(q²)E(q³)E(q⁴)E(q²⁴)/(E(q)E(q⁸))",
            |n| {
                let m = part(n, 2);
                let s = lam(bl(1, 0, 12, 0, 1), m)? - lam(bl(5, 0, 12, 0, 1), m)?;
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let s = lam(bl(3, 1, 12, 4, 1), m)? + lam(bl(9, 3, 12, 4, 1), m)?;
                Ok(weave(&[s, eta(1, &[(2, 1), (3, 1), (4, 1), (24, 1), (1, -1), (8, -1)], m)?]))
            },
        ),
        must(
            "sq.diff_eta",
            "φ²(q)φ²(q⁶) - φ²(q²)φ²(q³) = 4q E(q²)E(q⁴)E(q⁶)E(q¹²)",
            |n| Ok(phi_phi(1, 6, n).pow(2) - phi_phi(2, 3, n).pow(2)),
            |n| Ok(eta(1, &[(2, 1), (4, 1), (6, 1), (12, 1)], n)? * 4),
        ),
        must(
            "thm4_1.psi_product_form",
            "φ²(q)φ²(q⁶) - φ²(q²)φ²(q³) against the stated ψ-product 4q ψ(q)ψ(-q)ψ(-q³)ψ(-q⁶)",
            |n| Ok(phi_phi(1, 6, n).pow(2) - phi_phi(2, 3, n).pow(2)),
            |n| Ok((psi(1, n) * psin(1, n) * psin(3, n) * psin(6, n)).shift(1) * 4),
        )
        .exploratory(),
        // Discriminant -60.
        must(
            "thm5_1.P",
            "P(q) = E(q)E(q⁶)E(q¹⁰)E(q¹⁵)/(E(q²)E(q³⁰)) = 1 - Σ (-15/n) qⁿ/(1 + qⁿ)",
            p5,
            |n| Ok(one(n) - l15(n)?),
        ),
        must(
            "thm5_1.Q",
            "Q(q) = q E(q²)E(q³)E(q⁵)E(q³⁰)/(E(q⁶)E(q¹⁰)) = Σ (5/n) qⁿ(1 + qⁿ)/(1 + q³ⁿ)",
            q5,
            q5_lambert,
        ),
        must(
            "thm5_1.diff",
            "φ(-q)φ(-q¹⁵) = P(q) - Q(q) = 1 - Σ (-15/n) qⁿ/(1 + qⁿ) - Σ (5/n) qⁿ(1 + qⁿ)/(1 + q³ⁿ)",
            |n| {
                let m = part(n, 2);
                let s = phin(1, m) * phin(15, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[p5(m)? - q5(m)?, one(m) - l15(m)? - q5_lambert(m)?]))
            },
        ),
        must(
            "thm5_1.sum",
            "φ(-q³)φ(-q⁵) = P(q) + Q(q) = 1 - Σ (-15/n) qⁿ/(1 + qⁿ) + Σ (5/n) qⁿ(1 + qⁿ)/(1 + q³ⁿ)",
            |n| {
                let m = part(n, 2);
                let s = phin(3, m) * phin(5, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[p5(m)? + q5(m)?, one(m) - l15(m)? + q5_lambert(m)?]))
            },
        ),
        must(
            "forty.513",
            "G(q)G(q⁴) - q H(q)H(q⁴) = φ(q⁵)/E(q²)",
            |n| Ok(g(1, n) * g(4, n) - (h(1, n) * h(4, n)).shift(1)),
            |n| phi(5, n).div(&e(2, n)),
        ),
        must(
            "forty.513neg",
            "G(-q)G(q⁴) + q H(-q)H(q⁴) = φ(-q⁵)/E(q²)",
            |n| Ok(g(1, n).negate_variable() * g(4, n) + (h(1, n).negate_variable() * h(4, n)).shift(1)),
            |n| phin(5, n).div(&e(2, n)),
        ),
        must(
            "quint.514",
            "f(-q¹³, -q¹⁷) + q f(-q⁷, -q²³) = E(q¹⁰) f(-q², -q⁸)/f(-q, -q⁹) = E(q²)G(q)",
            |n| {
                let m = part(n, 3);
                let s = f(mq(13), mq(17), m)? + f(mq(7), mq(23), m)?.shift(1);
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let (quot, sum) = quintuple_sides(pq(1), 10, m)?;
                Ok(weave(&[sum, quot, e(2, m) * g(1, m)]))
            },
        ),
        must(
            "quint.515",
            "E(q²)H(q) = f(-q¹¹, -q¹⁹) + q³ f(-q, -q²⁹)",
            |n| {
                let m = part(n, 3);
                let s = f(mq(11), mq(19), m)? + f(mq(1), mq(29), m)?.shift(3);
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let (quot, sum) = quintuple_sides(pq(3), 10, m)?;
                Ok(weave(&[sum, quot, e(2, m) * h(1, m)]))
            },
        ),
        must(
            "quint.516",
            "E(q)G(q²) = f(q⁷, q⁸) - q f(q², q¹³)",
            |n| {
                let m = part(n, 3);
                let s = f(pq(7), pq(8), m)? - f(pq(2), pq(13), m)?.shift(1);
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let (quot, sum) = quintuple_sides(mq(1), 5, m)?;
                Ok(weave(&[sum, quot, e(1, m) * g(2, m)]))
            },
        ),
        must(
            "quint.517",
            "E(q)H(q²) = f(q⁴, q¹¹) - q f(q, q¹⁴)",
            |n| {
                let m = part(n, 3);
                let s = f(pq(4), pq(11), m)? - f(pq(1), pq(14), m)?.shift(1);
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let (quot, sum) = quintuple_sides(mq(2), 5, m)?;
                Ok(weave(&[sum, quot, e(1, m) * h(2, m)]))
            },
        ),
        must(
            "eta.522",
            "P(-q) = E(-q)E(q⁶)E(q¹⁰)E(-q¹⁵)/(E(q²)E(q³⁰)) = E²(q²)E(q⁶)E(q¹⁰)E²(q³⁰)/(E(q)E(q⁴)E(q¹⁵)E(q⁶⁰)) = 1 + Σ_n Σ_{d|n} (-1)^{n+d}(-15/(n/d)) qⁿ",
            |n| {
                let m = part(n, 3);
                let s = p5(m)?.negate_variable();
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let direct = (en(1, m) * e(6, m) * e(10, m) * en(15, m)).div(&(e(2, m) * e(30, m)))?;
                let quotient = eta(0, &[(2, 2), (6, 1), (10, 1), (30, 2), (1, -1), (4, -1), (15, -1), (60, -1)], m)?;
                Ok(weave(&[direct, quotient, one(m) + divisor_series(Kernel::K5, m)]))
            },
        ),
        must(
            "eta.523",
            "-Q(-q) = q E(q²)E(-q³)E(-q⁵)E(q³⁰)/(E(q⁶)E(q¹⁰)) = q E(q²)E²(q⁶)E²(q¹⁰)E(q³⁰)/(E(q³)E(q⁵)E(q¹²)E(q²⁰)) = Σ_n Σ_{d|n} (-1)^{n+d}(-3/d)(5/(n/d)) qⁿ",
            |n| {
                let m = part(n, 3);
                let s = -q5(m)?.negate_variable();
                Ok(weave(&[s.clone(), s.clone(), s]))
            },
            |n| {
                let m = part(n, 3);
                let direct = (e(2, m) * en(3, m) * en(5, m) * e(30, m)).div(&(e(6, m) * e(10, m)))?.shift(1);
                let quotient = eta(1, &[(2, 1), (6, 2), (10, 2), (30, 1), (3, -1), (5, -1), (12, -1), (20, -1)], m)?;
                Ok(weave(&[direct, quotient, divisor_series(Kernel::K6, m)]))
            },
        ),
        must(
            "eta.524",
            "Q(q) = q E(q²)E(q³)E(q⁵)E(q³⁰)/(E(q⁶)E(q¹⁰)) = -Σ_n Σ_{d|n} (-1)^{n+d}(-3/d)(5/(n/d)) (-q)ⁿ",
            q5,
            |n| Ok(-divisor_series(Kernel::K6, n).negate_variable()),
        ),
        must(
            "williams.sum",
            "φ(q)φ(q¹⁵) + φ(q³)φ(q⁵) = 2 + Σ ã(n) qⁿ/(1 - qⁿ)",
            |n| {
                let m = part(n, 2);
                let s = phi_phi(1, 15, m) + phi_phi(3, 5, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let doubled = (one(m) - l15(m)?.negate_variable()) * 2;
                let lambert = coeff_series(m, 2, |k| divisors(k).into_iter().map(closedform::williams_atilde).sum());
                Ok(weave(&[doubled, lambert]))
            },
        ),
        // Discriminant -108.
        must(
            "thm6_1.main",
            "φ(q)φ(q²⁷) = (φ(q)φ(q³) - φ(q³)φ(q⁹))/3 + φ(q⁹)φ(q²⁷) + (4/3) q E(q⁶)E(q¹⁸)",
            |n| {
                let m = part(n, 2);
                let s = phi_phi(1, 27, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let d = d618(m)?;
                let third = (phi_phi(1, 3, m) - phi_phi(3, 9, m)).scale(&frac(1, 3)) + phi_phi(9, 27, m) + d.scale(&frac(4, 3));
                let halves = (phi_phi(9, 27, m) * 3 + phi_phi(1, 3, m) - phi_phi(1, 27, m) - phi_phi(3, 9, m)).scale(&frac(1, 2)) + &d * 2;
                Ok(weave(&[third, halves]))
            },
        ),
        must(
            "lattice.67",
            "Σ q^{4u²+2uv+7v²} = f(q⁴, q⁴)f(q¹⁰⁸, q¹⁰⁸) + 2q⁷ f(q², q⁶)f(q⁵⁴, q¹⁶²) + q²⁸ f(1, q⁸)f(1, q²¹⁶) = (φ(q)φ(q²⁷) + φ(-q)φ(-q²⁷))/2 + 2q⁷ ψ(q²)ψ(q⁵⁴)",
            |n| {
                let m = part(n, 2);
                let s = bqf(4, 2, 7, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let split = f(pq(4), pq(4), m)? * f(pq(108), pq(108), m)?
                    + (f(pq(2), pq(6), m)? * f(pq(54), pq(162), m)?).shift(7) * 2
                    + (f(pq(0), pq(8), m)? * f(pq(0), pq(216), m)?).shift(28);
                let theta = (phi_phi(1, 27, m) + phin(1, m) * phin(27, m)).scale(&frac(1, 2)) + (psi(2, m) * psi(54, m)).shift(7) * 2;
                Ok(weave(&[split, theta]))
            },
        ),
        must(
            "lattice.68",
            "Σ q^{4u²+2uv+7v²} = f(q⁹, q⁹)f(q²⁷, q²⁷) + 2q⁴ f(q³, q¹⁵)f(q⁹, q⁴⁵) = (3φ(q⁹)φ(q²⁷) + φ(q)φ(q³) - φ(q)φ(q²⁷) - φ(q³)φ(q⁹))/2",
            |n| {
                let m = part(n, 2);
                let s = bqf(4, 2, 7, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let split = f(pq(9), pq(9), m)? * f(pq(27), pq(27), m)? + (f(pq(3), pq(15), m)? * f(pq(9), pq(45), m)?).shift(4) * 2;
                let theta =
                    (phi_phi(9, 27, m) * 3 + phi_phi(1, 3, m) - phi_phi(1, 27, m) - phi_phi(3, 9, m)).scale(&frac(1, 2));
                Ok(weave(&[split, theta]))
            },
        ),
        must(
            "rama.69",
            "(φ(q)φ(q²⁷) - φ(-q)φ(-q²⁷))/2 - 2q⁷ ψ(q²)ψ(q⁵⁴) = 2q E(q⁶)E(q¹⁸)",
            |n| Ok((phi_phi(1, 27, n) - phin(1, n) * phin(27, n)).scale(&frac(1, 2)) - (psi(2, n) * psi(54, n)).shift(7) * 2),
            |n| Ok(d618(n)? * 2),
        ),
        must(
            "lambert.613",
            "φ(q)φ(q³) = 1 + 2Σ (n/3) qⁿ/(1 - qⁿ) + 4Σ (n/3) q⁴ⁿ/(1 - q⁴ⁿ)",
            |n| {
                let m = part(n, 2);
                let s = phi_phi(1, 3, m);
                Ok(weave(&[s.clone(), s]))
            },
            |n| {
                let m = part(n, 2);
                let lambert = one(m) + char_lambert(B3, m)? * 2 + lam(ul(4, 0, 4, 0, -1).with_character(B3), m)? * 4;
                Ok(weave(&[lambert, one(m) + divisor_series(Kernel::K13, m)]))
            },
        ),
        must(
            "rec.617",
            "coefficients of q E(q⁶)E(q¹⁸) are multiplicative and obey d(p^{s+2}) = d(p)d(p^{s+1}) - (-108/p)d(p^s)",
            d618,
            d618_from_primes,
        ),
        must(
            "count.6",
            "closed forms for the counts of x² + 27y² and 4x² + 2xy + 7y² against lattice enumeration",
            |n| {
                let m = part(n, 2);
                Ok(weave(&[coeff_series(m, 1, closedform::rep_1_0_27), coeff_series(m, 1, closedform::rep_4_2_7)]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[bqf(1, 0, 27, m), bqf(4, 2, 7, m)]))
            },
        ),
        // Quaternary forms x² + y² + z² + 5w² and relatives.
        must(
            "thm7_1.e1",
            "φ(-q)φ³(-q⁵) = (E⁵(q)/E(q⁵) + 4E⁵(q²)/E(q¹⁰))/5 - (q E⁵(q⁵)/E(q) - 4q² E⁵(q¹⁰)/E(q²))",
            |n| Ok(phin(1, n) * phin(5, n).pow(3)),
            |n| Ok(fifth(a5(n)? + c5(n)? * 4) - (b5(n)? - d5(n)? * 4)),
        ),
        must(
            "thm7_1.e2",
            "φ³(-q)φ(-q⁵) = (E⁵(q)/E(q⁵) + 4E⁵(q²)/E(q¹⁰))/5 - 5(q E⁵(q⁵)/E(q) - 4q² E⁵(q¹⁰)/E(q²))",
            |n| Ok(phin(1, n).pow(3) * phin(5, n)),
            |n| Ok(fifth(a5(n)? + c5(n)? * 4) - (b5(n)? - d5(n)? * 4) * 5),
        ),
        must(
            "thm7_1.e3",
            "4q ψ³(q)ψ(q⁵) = (E⁵(q)/E(q⁵) - E⁵(q²)/E(q¹⁰))/5 + 5(q E⁵(q⁵)/E(q) + q² E⁵(q¹⁰)/E(q²))",
            |n| Ok(psi3psi5(n).shift(1) * 4),
            |n| Ok(fifth(a5(n)? - c5(n)?) + blk_w(n)? * 5),
        ),
        must(
            "thm7_1.e4",
            "4q² ψ(q)ψ³(q⁵) = (E⁵(q)/E(q⁵) - E⁵(q²)/E(q¹⁰))/5 + (q E⁵(q⁵)/E(q) + q² E⁵(q¹⁰)/E(q²))",
            |n| Ok(psipsi35(n).shift(2) * 4),
            |n| Ok(fifth(a5(n)? - c5(n)?) + blk_w(n)?),
        ),
        must(
            "lam.79",
            "E⁵(q)/E(q⁵) = 1 - 5Σ (n/5) n qⁿ/(1 - qⁿ)",
            a5,
            |n| Ok(one(n) - lam(ul(1, 0, 1, 0, -1).with_character(B5).weighted(), n)? * 5),
        ),
        must(
            "lam.710",
            "q E⁵(q⁵)/E(q) = Σ (n/5) qⁿ/(1 - qⁿ)²",
            b5,
            |n| lam(ul(1, 0, 1, 0, -1).with_character(B5).squared(), n),
        ),
        must(
            "theta.711",
            "φ²(q) - φ²(q⁵) = 4q f(q, q⁹) f(q³, q⁷)",
            |n| Ok(phi(1, n).pow(2) - phi(5, n).pow(2)),
            |n| Ok((f(pq(1), pq(9), n)? * f(pq(3), pq(7), n)?).shift(1) * 4),
        ),
        must(
            "theta.712",
            "ψ²(q) - q ψ²(q⁵) = f(q², q³) f(q, q⁴)",
            |n| Ok(psi(1, n).pow(2) - psi(5, n).pow(2).shift(1)),
            |n| Ok(f(pq(2), pq(3), n)? * f(pq(1), pq(4), n)?),
        ),
        must(
            "chain.713",
            "φ(q)φ³(q⁵) - φ⁵(q⁵)/φ(q) = 4q E⁵(-q⁵)/E(-q)",
            |n| Ok(phiphi35(n) - phi(5, n).pow(5).div(&phi(1, n))?),
            |n| Ok((en(5, n).pow(5).div(&en(1, n))?).shift(1) * 4),
        ),
        must(
            "chain.714",
            "16q² E⁵(q¹⁰)/E(q²) = φ³(q)φ(q⁵) - 2φ(q)φ³(q⁵) + φ⁵(q⁵)/φ(q)",
            |n| Ok(d5(n)? * 16),
            |n| Ok(phi3phi5(n) - phiphi35(n) * 2 + phi(5, n).pow(5).div(&phi(1, n))?),
        ),
        must(
            "chain.715",
            "5φ³(q)φ(q⁵) - φ⁵(q)/φ(q⁵) = 4E⁵(-q)/E(-q⁵)",
            |n| Ok(phi3phi5(n) * 5 - phi(1, n).pow(5).div(&phi(5, n))?),
            |n| Ok(a5(n)?.negate_variable() * 4),
        ),
        must(
            "chain.716",
            "25φ(q)φ³(q⁵) - 10φ³(q)φ(q⁵) + φ⁵(q)/φ(q⁵) = 16E⁵(q²)/E(q¹⁰)",
            |n| Ok(phiphi35(n) * 25 - phi3phi5(n) * 10 + phi(1, n).pow(5).div(&phi(5, n))?),
            |n| Ok(c5(n)? * 16),
        ),
        must(
            "chain.717",
            "ψ(q)ψ³(q⁵) - q ψ⁵(q⁵)/ψ(q) = E⁵(q¹⁰)/E(q²)",
            |n| Ok(psipsi35(n) - psi(5, n).pow(5).div(&psi(1, n))?.shift(1)),
            |n| eta(0, &[(10, 5), (2, -1)], n),
        ),
        must(
            "chain.718",
            "E⁵(q⁵)/E(q) = ψ³(q)ψ(q⁵) - 2q ψ(q)ψ³(q⁵) + q² ψ⁵(q⁵)/ψ(q)",
            |n| eta(0, &[(5, 5), (1, -1)], n),
            |n| Ok(psi3psi5(n) - psipsi35(n).shift(1) * 2 + psi(5, n).pow(5).div(&psi(1, n))?.shift(2)),
        ),
        must(
            "chain.719",
            "-5q ψ³(q)ψ(q⁵) + ψ⁵(q)/ψ(q⁵) = E⁵(q²)/E(q¹⁰)",
            |n| Ok(psi(1, n).pow(5).div(&psi(5, n))? - psi3psi5(n).shift(1) * 5),
            c5,
        ),
        must(
            "chain.720",
            "25q² ψ(q)ψ³(q⁵) - 10q ψ³(q)ψ(q⁵) + ψ⁵(q)/ψ(q⁵) = E⁵(q)/E(q⁵)",
            |n| Ok(psipsi35(n).shift(2) * 25 - psi3psi5(n).shift(1) * 10 + psi(1, n).pow(5).div(&psi(5, n))?),
            a5,
        ),
        must(
            "blk.72528",
            "X = (E⁵(-q)/E(-q⁵) + 4E⁵(q²)/E(q¹⁰))/5 in its theta, mixed and pure eta-quotient forms",
            |n| {
                let m = part(n, 4);
                let x = blk_x(m)?;
                Ok(weave(&[x.clone(), x.clone(), x.clone(), x]))
            },
            |n| {
                let m = part(n, 4);
                let ratio = phi(5, m).pow(2).div(&phi(1, m).pow(2))?;
                let theta = (&ratio * (phi3phi5(m) * 5 - phi(1, m).pow(5).div(&phi(5, m))?)).scale(&frac(1, 4));
                let mixed = &ratio * a5(m)?.negate_variable();
                let quotient = eta(0, &[(2, 5), (10, 7), (1, -1), (4, -1), (5, -3), (20, -3)], m)?;
                Ok(weave(&[(phiphi35(m) * 5 - phi3phi5(m)).scale(&frac(1, 4)), theta, mixed, quotient]))
            },
        ),
        must(
            "blk.72930",
            "X = 1 + Σ (n/5) n qⁿ/(1 - (-q)ⁿ) = 1 + Σ_n Σ_{d|n} (-1)^{n+d} d (d/5) qⁿ",
            |n| {
                let m = part(n, 2);
                let x = blk_x(m)?;
                Ok(weave(&[x.clone(), x]))
            },
            |n| {
                let m = part(n, 2);
                Ok(weave(&[one(m) + lam_x(m)?, one(m) + divisor_series(Kernel::K9, m)]))
            },
        ),
        must(
            "blk.73134",
            "Y = q E⁵(-q⁵)/E(-q) + 4q² E⁵(q¹⁰)/E(q²) = q φ²(q)E⁵(-q⁵)/(φ²(q⁵)E(-q)) = q E⁷(q²)E⁵(q¹⁰)/(E³(q)E³(q⁴)E(q⁵)E(q²⁰)) = -Σ (n/5)(-q)ⁿ/(1 + (-q)ⁿ)² = Σ_n Σ_{d|n} (-1)^{n+d} d ((n/d)/5) qⁿ",
            |n| {
                let m = part(n, 4);
                let y = blk_y(m)?;
                Ok(weave(&[y.clone(), y.clone(), y.clone(), y]))
            },
            |n| {
                let m = part(n, 4);
                let mixed = (phi(1, m).pow(2) * en(5, m).pow(5)).div(&(phi(5, m).pow(2) * en(1, m)))?.shift(1);
                let quotient = eta(1, &[(2, 7), (10, 5), (1, -3), (4, -3), (5, -1), (20, -1)], m)?;
                Ok(weave(&[mixed, quotient, -lam_u(m)?, divisor_series(Kernel::K10, m)]))
            },
        ),
        must(
            "blk.73538",
            "Z = -(E⁵(q)/E(q⁵) - E⁵(q²)/E(q¹⁰))/5 = q ψ²(q⁵)E⁵(q²)/(ψ²(q)E(q¹⁰)) = q E²(q)E(q²)E³(q¹⁰)/E²(q⁵) = Σ (n/5) n qⁿ/(1 - q²ⁿ) = Σ_n Σ_{d|n} d (d/5) γ(n/d) qⁿ",
            |n| {
                let m = part(n, 4);
                let z = blk_z(m)?;
                Ok(weave(&[z.clone(), z.clone(), z.clone(), z]))
            },
            |n| {
                let m = part(n, 4);
                let mixed = (psi(5, m).pow(2) * c5(m)?).div(&psi(1, m).pow(2))?.shift(1);
                let quotient = eta(1, &[(1, 2), (2, 1), (10, 3), (5, -2)], m)?;
                Ok(weave(&[mixed, quotient, lam_r(m)?, divisor_series(Kernel::K11, m)]))
            },
        ),
        must(
            "blk.73942",
            "W = q E⁵(q⁵)/E(q) + q² E⁵(q¹⁰)/E(q²) = q ψ²(q)E⁵(q¹⁰)/(ψ²(q⁵)E(q²)) = q E³(q²)E²(q⁵)E(q¹⁰)/E²(q) = Σ_{n odd} (n/5) qⁿ/(1 - qⁿ)² = Σ_n Σ_{d|n} γ(d) (d/5) (n/d) qⁿ",
            |n| {
                let m = part(n, 4);
                let w = blk_w(m)?;
                Ok(weave(&[w.clone(), w.clone(), w.clone(), w]))
            },
            |n| {
                let m = part(n, 4);
                let mixed = (psi(1, m).pow(2) * eta(0, &[(10, 5), (2, -1)], m)?).div(&psi(5, m).pow(2))?.shift(1);
                let quotient = eta(1, &[(2, 3), (5, 2), (10, 1), (1, -2)], m)?;
                Ok(weave(&[mixed, quotient, lam_s(m)?, divisor_series(Kernel::K12, m)]))
            },
        ),
        must(
            "cor7_3.e1",
            "φ(q)φ³(q⁵) = 1 + Σ (n/5) n qⁿ/(1 - (-q)ⁿ) - Σ (n/5)(-q)ⁿ/(1 + (-q)ⁿ)²",
            |n| Ok(phiphi35(n)),
            |n| Ok(one(n) + lam_x(n)? - lam_u(n)?),
        ),
        must(
            "cor7_3.e2",
            "φ³(q)φ(q⁵) = 1 + Σ (n/5) n qⁿ/(1 - (-q)ⁿ) - 5Σ (n/5)(-q)ⁿ/(1 + (-q)ⁿ)²",
            |n| Ok(phi3phi5(n)),
            |n| Ok(one(n) + lam_x(n)? - lam_u(n)? * 5),
        ),
        must(
            "cor7_3.e3",
            "4q ψ³(q)ψ(q⁵) = -Σ (n/5) n qⁿ/(1 - q²ⁿ) + 5Σ_{n odd} (n/5) qⁿ/(1 - qⁿ)²",
            |n| Ok(psi3psi5(n).shift(1) * 4),
            |n| Ok(lam_s(n)? * 5 - lam_r(n)?),
        ),
        must(
            "cor7_3.e4",
            "4q² ψ(q)ψ³(q⁵) = -Σ (n/5) n qⁿ/(1 - q²ⁿ) + Σ_{n odd} (n/5) qⁿ/(1 - qⁿ)²",
            |n| Ok(psipsi35(n).shift(2) * 4),
            |n| Ok(lam_s(n)? - lam_r(n)?),
        ),
        must(
            "cor7_2.signs",
            "sign patterns: φ³(q)φ(q⁵) > 0 and ψ³(q)ψ(q⁵) > 0 always; φ(q)φ³(q⁵) vanishes iff n ≡ 2, 3 (mod 5); ψ(q)ψ³(q⁵) vanishes iff n ≡ 2, 4 (mod 5)",
            |n| {
                let m = part(n, 4);
                let pos = |s: LaurentSeries| indicator(&s, m, |_, c| *c > num_traits::Zero::zero());
                let zero = |s: LaurentSeries| indicator(&s, m, |_, c| num_traits::Zero::is_zero(c));
                Ok(weave(&[pos(phi3phi5(m)), pos(psi3psi5(m)), zero(phiphi35(m)), zero(psipsi35(m))]))
            },
            |n| {
                let m = part(n, 4);
                let all = pattern(m, |_| true);
                Ok(weave(&[all.clone(), all, pattern(m, |k| matches!(k % 5, 2 | 3)), pattern(m, |k| matches!(k % 5, 2 | 4))]))
            },
        ),
        // Outlook.
        must(
            "sec8.sextenary",
            "7φ³(-q)φ³(-q⁷) = -49(q² E⁷(q⁷)/E(q) + q E³(q)E³(q⁷)) + 56(7q⁴ E⁷(q¹⁴)/E(q²) + q² E³(q²)E³(q¹⁴)) - E⁷(q)/E(q⁷) + 8E⁷(q²)/E(q¹⁴)",
            |n| Ok((phin(1, n) * phin(7, n)).pow(3) * 7),
            |n| {
                let a = eta(2, &[(7, 7), (1, -1)], n)? + eta(1, &[(1, 3), (7, 3)], n)?;
                let b = eta(4, &[(14, 7), (2, -1)], n)? * 7 + eta(2, &[(2, 3), (14, 3)], n)?;
                Ok(a * -49 + b * 56 - eta(0, &[(1, 7), (7, -1)], n)? + eta(0, &[(2, 7), (14, -1)], n)? * 8)
            },
        ),
        must(
            "sec8.ineq.psi",
            "[qⁿ](ψ³(q)ψ³(q⁷) - q E⁷(q¹⁴)/E(q²)) ≥ 0",
            |n| {
                let s = (psi(1, n) * psi(7, n)).pow(3) - eta(1, &[(14, 7), (2, -1)], n)?;
                Ok(indicator(&s, n, |_, c| *c >= num_traits::Zero::zero()))
            },
            |n| Ok(pattern(n, |_| true)),
        ),
        must(
            "sec8.ineq.phi",
            "[qⁿ](φ³(q)φ³(q⁷) + q⁷ - q² E⁷(q⁷)/E(q)) ≥ 0",
            |n| {
                let s = (phi(1, n) * phi(7, n)).pow(3) + LaurentSeries::monomial(1, 7, n) - eta(2, &[(7, 7), (1, -1)], n)?;
                Ok(indicator(&s, n, |_, c| *c >= num_traits::Zero::zero()))
            },
            |n| Ok(pattern(n, |_| true)),
        ),
        must(
            "sec8.phi5phi3",
            "φ⁵(q)φ(q³) = 1 + Σ_n Σ_{d|n} (-1)^{n+d} d² (d/3) qⁿ + 9Σ_n Σ_{d|n} (-1)^{n+d} d² ((n/d)/3) qⁿ",
            |n| Ok(phi(1, n).pow(5) * phi(3, n)),
            |n| Ok(one(n) + divisor_series(Kernel::K14, n) + divisor_series(Kernel::K15, n) * 9),
        ),
        must(
            "sec8.phiphi5_3",
            "φ(q)φ⁵(q³) = 1 + Σ_n Σ_{d|n} (-1)^{n+d} d² (d/3) qⁿ + Σ_n Σ_{d|n} (-1)^{n+d} d² ((n/d)/3) qⁿ",
            |n| Ok(phi(1, n) * phi(3, n).pow(5)),
            |n| Ok(one(n) + divisor_series(Kernel::K14, n) + divisor_series(Kernel::K15, n)),
        ),
        must(
            "thm81.coeffs",
            "closed form for the coefficients of q E⁴(q¹⁶)/(E(q³²)E(q⁸))",
            |n| Ok(coeff_series(n, 0, closedform::thm81_coeff)),
            |n| eta(1, &[(16, 4), (32, -1), (8, -1)], n),
        ),
        must(
            "sec8.hecke_t2",
            "U₂ applied to -Q(-q) against E²(q⁶)E²(q¹⁰)/(E(q²)E(q³⁰))",
            |n| hecke_u2_to(&-q5(2 * n)?.negate_variable(), n),
            |n| eta(0, &[(6, 2), (10, 2), (2, -1), (30, -1)], n),
        )
        .exploratory(),
        must(
            "sec8.remarkable",
            "q(Q̃(2,0,7) + Q̃(3,2,5)) E²(q²)E²(q²⁸) = (Q̃(1,0,14) - Q̃(3,2,5)) E²(q⁴)E²(q¹⁴), Q̃ the theta series of a binary form",
            |n| {
                let (num, _) = q_tilde_pair(n);
                Ok((num * eta(0, &[(2, 2), (28, 2)], n)?).shift(1))
            },
            |n| {
                let (_, den) = q_tilde_pair(n);
                Ok(den * eta(0, &[(4, 2), (14, 2)], n)?)
            },
        ),
    ];
    c.sort_by_key(|e| e.id);
    c
}
