//! Builders for the named q-functions: Euler products, Ramanujan's theta
//! functions, eta-quotients, the Rogers–Ramanujan products, and the
//! classical theta-function rearrangements (addition formula, product rule,
//! quintuple product).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentSeries;

/// `sign * q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub sign: i8,
    pub exponent: i64,
}

impl Monomial {
    pub fn new(sign: i8, exponent: i64) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidMonomial(format!("sign must be ±1, got {sign}")));
        }
        Ok(Monomial { sign, exponent })
    }

    /// `+q^e`
    pub const fn q(exponent: i64) -> Self {
        Monomial { sign: 1, exponent }
    }

    /// `-q^e`
    pub const fn neg_q(exponent: i64) -> Self {
        Monomial { sign: -1, exponent }
    }

    pub const ONE: Monomial = Monomial::q(0);

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial { sign: self.sign * other.sign, exponent: self.exponent + other.exponent }
    }

    pub fn over(self, other: Monomial) -> Monomial {
        Monomial { sign: self.sign * other.sign, exponent: self.exponent - other.exponent }
    }

    pub fn negate(self) -> Monomial {
        Monomial { sign: -self.sign, exponent: self.exponent }
    }

    pub fn pow(self, k: i64) -> Monomial {
        let sign = if self.sign == -1 && k.rem_euclid(2) == 1 { -1 } else { 1 };
        Monomial { sign, exponent: self.exponent * k }
    }

    pub fn to_series(self, order: i64) -> LaurentSeries {
        LaurentSeries::monomial(self.sign as i128, self.exponent, order)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        match self.exponent {
            0 => write!(f, "{s}1"),
            1 => write!(f, "{s}q"),
            e => write!(f, "{s}q^{e}"),
        }
    }
}

/// `∏ E(q^k)^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaQuotientSpec {
    factors: Vec<(u32, i32)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: &[(u32, i32)]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Precondition("eta-quotient needs at least one factor".into()));
        }
        let mut seen = BTreeMap::new();
        for &(k, e) in factors {
            if k == 0 {
                return Err(Error::Precondition("eta-quotient multiplier must be positive".into()));
            }
            if seen.insert(k, e).is_some() {
                return Err(Error::Precondition(format!("repeated eta-quotient multiplier {k}")));
            }
        }
        Ok(EtaQuotientSpec { factors: factors.to_vec() })
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// Weight `Σ e / 2` times two.
    pub fn twice_weight(&self) -> i32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }
}

/// Build a series from sparse `(exponent, coefficient)` terms, summing repeats.
/// Terms above `order` are dropped.
pub(crate) fn sparse(min_exp: i64, order: i64, terms: impl IntoIterator<Item = (i64, i128)>) -> LaurentSeries {
    let len = (order - min_exp + 1).max(0) as usize;
    let mut v = vec![0i128; len];
    for (e, c) in terms {
        if e <= order {
            assert!(e >= min_exp, "term q^{e} below min_exp {min_exp}");
            v[(e - min_exp) as usize] += c;
        }
    }
    LaurentSeries::from_i128(min_exp, order, v)
}

/// `E(q^k) = ∏_{n≥1} (1 - q^{kn})` via the pentagonal number theorem.
pub fn euler_e(k: u32, order: i64) -> LaurentSeries {
    assert!(k >= 1);
    let k = k as i64;
    let mut terms = vec![(0, 1)];
    let mut m = 1i64;
    loop {
        let lo = k * m * (3 * m - 1) / 2;
        if lo > order {
            break;
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        terms.push((lo, sign));
        terms.push((k * m * (3 * m + 1) / 2, sign));
        m += 1;
    }
    sparse(0, order, terms)
}

/// `φ(q^k) = Σ_{n∈ℤ} q^{k n²}`.
pub fn phi(k: u32, order: i64) -> LaurentSeries {
    assert!(k >= 1);
    let k = k as i64;
    let terms = std::iter::once((0, 1)).chain((1..).map(|n| (k * n * n, 2)).take_while(|&(e, _)| e <= order));
    sparse(0, order, terms)
}

/// `ψ(q^k) = Σ_{n≥0} q^{k n(n+1)/2}`.
pub fn psi(k: u32, order: i64) -> LaurentSeries {
    assert!(k >= 1);
    let k = k as i64;
    let terms = (0..).map(|n| (k * n * (n + 1) / 2, 1)).take_while(|&(e, _)| e <= order);
    sparse(0, order, terms)
}

/// Exponent of the `n`-th term of `f(a, b)`: `ea n(n+1)/2 + eb n(n-1)/2`.
fn theta_exponent(a: Monomial, b: Monomial, n: i64) -> i64 {
    a.exponent * (n * (n + 1) / 2) + b.exponent * (n * (n - 1) / 2)
}

fn theta_sign(a: Monomial, b: Monomial, n: i64) -> i128 {
    let s = a.pow(n * (n + 1) / 2).sign * b.pow(n * (n - 1) / 2).sign;
    s as i128
}

/// Ramanujan's theta function `f(a, b) = Σ_{n∈ℤ} a^{n(n+1)/2} b^{n(n-1)/2}`
/// for monomials with `exponent(a) + exponent(b) > 0`.
pub fn theta_f(a: Monomial, b: Monomial, order: i64) -> Result<LaurentSeries> {
    let s = a.exponent + b.exponent;
    if s <= 0 {
        return Err(Error::DivergentTheta(s));
    }
    let mut terms = Vec::new();
    // The exponent is a convex quadratic in n; walk outward from 0 in both
    // directions until it exceeds the order and keeps increasing.
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        loop {
            let e = theta_exponent(a, b, n);
            if e <= order {
                terms.push((e, theta_sign(a, b, n)));
            } else if theta_exponent(a, b, n + dir) > e {
                break;
            }
            n += dir;
        }
    }
    let min = terms.iter().map(|&(e, _)| e).min().unwrap_or(0).min(0);
    Ok(sparse(min, order, terms))
}

/// `(a; x)_∞ = ∏_{j≥0} (1 - a x^j)` for monomials with `exponent(x) > 0`.
pub fn pochhammer_inf(a: Monomial, x: Monomial, order: i64) -> Result<LaurentSeries> {
    if x.exponent <= 0 {
        return Err(Error::Precondition(format!("(a; x)_∞ needs exponent(x) > 0, got {}", x.exponent)));
    }
    // A factor 1 - s q^e with e < 0 equals -s q^e (1 - s q^{-e}); collect the
    // monomial parts first so the remaining product is an ordinary power series.
    let mut shift = 0i64;
    let mut scalar = 1i64;
    let mut binomials = Vec::new();
    let mut j = 0i64;
    loop {
        let t = a.times(x.pow(j));
        if t.exponent < 0 {
            shift += t.exponent;
            scalar *= -(t.sign as i64);
            binomials.push((-t.exponent, t.sign as i128));
        } else if t.exponent == 0 {
            scalar *= 1 - t.sign as i64;
        } else {
            break;
        }
        j += 1;
    }
    let work = order - shift;
    loop {
        let t = a.times(x.pow(j));
        if t.exponent > work {
            break;
        }
        binomials.push((t.exponent, t.sign as i128));
        j += 1;
    }
    let len = work.max(-1) as usize + 1;
    let product = binomial_product_i128(len, &binomials)
        .map(|v| LaurentSeries::from_i128(0, work, v))
        .unwrap_or_else(|| LaurentSeries::from_bigints(0, work, binomial_product_big(len, &binomials)));
    Ok(product.shift(shift) * scalar)
}

/// `∏ (1 - s q^e)` over `(e, s)` with `e > 0`, first `len` coefficients.
fn binomial_product_i128(len: usize, binomials: &[(i64, i128)]) -> Option<Vec<i128>> {
    let mut v = vec![0i128; len];
    if len > 0 {
        v[0] = 1;
    }
    for &(e, s) in binomials {
        let e = e as usize;
        for i in (e..len).rev() {
            v[i] = v[i].checked_sub(s * v[i - e])?;
        }
    }
    Some(v)
}

fn binomial_product_big(len: usize, binomials: &[(i64, i128)]) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); len];
    if len > 0 {
        v[0] = BigInt::from(1);
    }
    for &(e, s) in binomials {
        let e = e as usize;
        for i in (e..len).rev() {
            let t = &v[i - e] * s;
            v[i] -= t;
        }
    }
    v
}

/// `∏ E(q^k)^e`. Numerator factors are multiplied in first, then each
/// denominator factor is removed by long division.
pub fn eta_quotient(spec: &EtaQuotientSpec, order: i64) -> Result<LaurentSeries> {
    let mut out = LaurentSeries::one(order);
    for &(k, e) in spec.factors().iter().filter(|f| f.1 > 0) {
        let ek = euler_e(k, order);
        for _ in 0..e {
            out = &out * &ek;
        }
    }
    for &(k, e) in spec.factors().iter().filter(|f| f.1 < 0) {
        let ek = euler_e(k, order);
        for _ in 0..(-e) {
            out = out.div(&ek)?;
        }
    }
    Ok(out)
}

/// Shorthand for `q^shift ∏ E(q^k)^e` from a factor list.
pub fn eta(shift: i64, factors: &[(u32, i32)], order: i64) -> Result<LaurentSeries> {
    let spec = EtaQuotientSpec::new(factors)?;
    Ok(eta_quotient(&spec, order - shift)?.shift(shift))
}

/// `G(q) = 1 / ((q; q⁵)_∞ (q⁴; q⁵)_∞)`.
pub fn rr_g(order: i64) -> LaurentSeries {
    rr_product(1, order)
}

/// `H(q) = 1 / ((q²; q⁵)_∞ (q³; q⁵)_∞)`.
pub fn rr_h(order: i64) -> LaurentSeries {
    rr_product(2, order)
}

fn rr_product(r: i64, order: i64) -> LaurentSeries {
    let x = Monomial::q(5);
    let den = pochhammer_inf(Monomial::q(r), x, order).expect("positive base")
        * pochhammer_inf(Monomial::q(5 - r), x, order).expect("positive base");
    LaurentSeries::one(order).div(&den).expect("unit constant term")
}

/// The `n` summands `U_r f(U_{n+r}/U_r, V_{n-r}/U_r)`, `0 <= r < n`, of the
/// addition formula, where `U_k = a^{k(k+1)/2} b^{k(k-1)/2}` and
/// `V_k = a^{k(k-1)/2} b^{k(k+1)/2}`. They sum to `f(a, b)`.
pub fn addition_split(a: Monomial, b: Monomial, n: u32, order: i64) -> Result<Vec<LaurentSeries>> {
    if a.exponent + b.exponent <= 0 {
        return Err(Error::DivergentTheta(a.exponent + b.exponent));
    }
    if n == 0 {
        return Err(Error::Precondition("addition formula needs n >= 1".into()));
    }
    let u = |k: i64| a.pow(k * (k + 1) / 2).times(b.pow(k * (k - 1) / 2));
    let v = |k: i64| a.pow(k * (k - 1) / 2).times(b.pow(k * (k + 1) / 2));
    let n = n as i64;
    (0..n)
        .map(|r| {
            let ur = u(r);
            let th = theta_f(u(n + r).over(ur), v(n - r).over(ur), order - ur.exponent)?;
            Ok(th.shift(ur.exponent) * ur.sign as i64)
        })
        .collect()
}

/// Both sides of the product rule for `ab = cd`:
/// `f(a,b) f(c,d)` and `f(ac,bd) f(ad,bc) + a f(b/c, (c/b)abcd) f(b/d, (d/b)abcd)`.
pub fn theta_product_rule(
    a: Monomial,
    b: Monomial,
    c: Monomial,
    d: Monomial,
    order: i64,
) -> Result<(LaurentSeries, LaurentSeries)> {
    if a.times(b) != c.times(d) {
        return Err(Error::Precondition(format!("product rule needs ab = cd, got {a}·{b} vs {c}·{d}")));
    }
    let abcd = a.times(b).times(c).times(d);
    let lhs = theta_f(a, b, order)? * theta_f(c, d, order)?;
    let first = theta_f(a.times(c), b.times(d), order)? * theta_f(a.times(d), b.times(c), order)?;
    let inner = order - a.exponent;
    let second = theta_f(b.over(c), c.over(b).times(abcd), inner)? * theta_f(b.over(d), d.over(b).times(abcd), inner)?;
    let rhs = first + second.shift(a.exponent) * a.sign as i64;
    Ok((lhs, rhs))
}

/// Both sides of the quintuple product identity with base `q^k`:
/// `E(q^k) f(-a², -a⁻² q^k) / f(-a, -a⁻¹ q^k)` and
/// `f(-a³ q^k, -a⁻³ q^{2k}) + a f(-a⁻³ q^k, -a³ q^{2k})`.
pub fn quintuple_sides(a: Monomial, k: u32, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let base = Monomial::q(k as i64);
    let base2 = Monomial::q(2 * k as i64);
    let inv = |m: Monomial| Monomial::ONE.over(m);
    let num = theta_f(a.pow(2).negate(), inv(a.pow(2)).times(base).negate(), order)?;
    let den = theta_f(a.negate(), inv(a).times(base).negate(), order)?;
    let lhs = (euler_e(k, order) * num).div(&den)?;
    let first = theta_f(a.pow(3).times(base).negate(), inv(a.pow(3)).times(base2).negate(), order)?;
    let second = theta_f(inv(a.pow(3)).times(base).negate(), a.pow(3).times(base2).negate(), order - a.exponent)?;
    let rhs = first + second.shift(a.exponent) * a.sign as i64;
    Ok((lhs, rhs))
}
