//! Generalized Lambert series.
//!
//! A [`LambertSpec`] describes `Σ_n c(n) q^{T(n)} / (1 + s q^{E(n)})^p` with
//! `T(n) = t·n(n+1)/2 + A n + B`, `E(n) = C n + D`, and
//! `c(n) = (-1)^{n·alt} χ(n) n^w`, summed over `n ≥ 1` or over all integers.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::kronecker;
use crate::error::{Error, Result};
use crate::qfunctions::{euler_e, theta_f, Monomial};
use crate::series::{LaurentSeries, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Range {
    /// `n ∈ ℤ`
    Bilateral,
    /// `n ≥ 1`
    Unilateral,
}

/// Kronecker character applied to the summation index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Character {
    /// `(D/n)`, defined for `n ≥ 1` only.
    Top(i64),
    /// `(n/m)`.
    Bottom(u64),
}

impl Character {
    fn eval(self, n: i64) -> i64 {
        match self {
            Character::Top(d) => kronecker(d, n as u64) as i64,
            Character::Bottom(m) => kronecker(n, m) as i64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambertSpec {
    pub range: Range,
    /// Coefficient of `n(n+1)/2` in the numerator exponent.
    pub num_tri: i64,
    pub num_a: i64,
    pub num_b: i64,
    pub num_sign_alt: bool,
    pub character: Option<Character>,
    pub weight: u8,
    pub odd_only: bool,
    pub den_c: i64,
    pub den_d: i64,
    pub den_sign: i8,
    pub den_power: u8,
}

impl LambertSpec {
    /// `Σ_{n≥1} q^{An+B} / (1 + s q^{Cn+D})`.
    pub fn unilateral(a: i64, b: i64, c: i64, d: i64, den_sign: i8) -> Self {
        Self::plain(Range::Unilateral, a, b, c, d, den_sign)
    }

    /// `Σ_{n∈ℤ} q^{An+B} / (1 + s q^{Cn+D})`.
    pub fn bilateral(a: i64, b: i64, c: i64, d: i64, den_sign: i8) -> Self {
        Self::plain(Range::Bilateral, a, b, c, d, den_sign)
    }

    fn plain(range: Range, a: i64, b: i64, c: i64, d: i64, den_sign: i8) -> Self {
        LambertSpec {
            range,
            num_tri: 0,
            num_a: a,
            num_b: b,
            num_sign_alt: false,
            character: None,
            weight: 0,
            odd_only: false,
            den_c: c,
            den_d: d,
            den_sign,
            den_power: 1,
        }
    }

    pub fn with_character(mut self, chi: Character) -> Self {
        self.character = Some(chi);
        self
    }

    pub fn alternating(mut self) -> Self {
        self.num_sign_alt = !self.num_sign_alt;
        self
    }

    pub fn weighted(mut self) -> Self {
        self.weight = 1;
        self
    }

    pub fn odd_only(mut self) -> Self {
        self.odd_only = true;
        self
    }

    pub fn squared(mut self) -> Self {
        self.den_power = 2;
        self
    }

    pub fn with_triangular(mut self, t: i64) -> Self {
        self.num_tri = t;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::DivergentSpec(why.to_string()));
        if self.den_sign != 1 && self.den_sign != -1 {
            return bad("den_sign must be ±1");
        }
        if !(1..=2).contains(&self.den_power) {
            return bad("den_power must be 1 or 2");
        }
        if self.weight > 1 {
            return bad("weight must be 0 or 1");
        }
        if self.den_c <= 0 {
            return bad("den_C must be positive");
        }
        if self.num_tri < 0 {
            return bad("triangular coefficient must be nonnegative");
        }
        let p = self.den_power as i64;
        match self.range {
            Range::Unilateral => {
                if self.num_tri == 0 && self.num_a <= 0 {
                    return bad("unilateral sum needs num_A >= 1");
                }
            }
            Range::Bilateral => {
                if matches!(self.character, Some(Character::Top(_))) {
                    return bad("(D/n) is undefined for n <= 0");
                }
                if self.num_tri == 0 && !(0 < self.num_a && self.num_a < p * self.den_c) {
                    return bad("bilateral sum needs 0 < num_A < den_power·den_C");
                }
            }
        }
        Ok(())
    }

    fn numerator_exponent(&self, n: i64) -> i64 {
        self.num_tri * (n * (n + 1) / 2) + self.num_a * n + self.num_b
    }

    fn denominator_exponent(&self, n: i64) -> i64 {
        self.den_c * n + self.den_d
    }

    /// Smallest exponent contributed by the `n`-th term.
    fn lowest_exponent(&self, n: i64) -> i64 {
        self.numerator_exponent(n) + self.den_power as i64 * (-self.denominator_exponent(n)).max(0)
    }

    fn term_coefficient(&self, n: i64) -> i128 {
        if self.odd_only && n % 2 == 0 {
            return 0;
        }
        let mut c: i128 = if self.num_sign_alt && n % 2 != 0 { -1 } else { 1 };
        if let Some(chi) = self.character {
            c *= chi.eval(n) as i128;
        }
        if self.weight == 1 {
            c *= n as i128;
        }
        c
    }
}

/// Indices whose term reaches an exponent `<= order`.
fn active_indices(spec: &LambertSpec, order: i64) -> Result<Vec<i64>> {
    const CAP: i64 = 50_000_000;
    let mut out = Vec::new();
    let directions: &[(i64, i64)] = match spec.range {
        Range::Unilateral => &[(1, 1)],
        Range::Bilateral => &[(0, 1), (-1, -1)],
    };
    for &(start, dir) in directions {
        let mut n = start;
        loop {
            let g = spec.lowest_exponent(n);
            if g <= order {
                out.push(n);
            } else if spec.lowest_exponent(n + dir) > g {
                // lowest_exponent is convex in n, so it only grows from here.
                break;
            }
            n += dir;
            if (n - start).abs() > CAP {
                return Err(Error::DivergentSpec(format!("no termination after {CAP} terms")));
            }
        }
    }
    Ok(out)
}

/// Exact expansion of one Lambert sum to `order`.
pub fn expand(spec: &LambertSpec, order: i64) -> Result<LaurentSeries> {
    spec.validate()?;
    let p = spec.den_power as u32;
    let s = spec.den_sign as i128;
    let unit: i128 = 1 << p;
    let indices = active_indices(spec, order)?;
    let mut terms: Vec<(i64, i128, i64, i64)> = Vec::with_capacity(indices.len());
    for n in indices {
        let c = spec.term_coefficient(n);
        if c == 0 {
            continue;
        }
        let e = spec.denominator_exponent(n);
        if e == 0 && s == -1 {
            return Err(Error::PoleAt(n));
        }
        terms.push((n, c, spec.numerator_exponent(n), e));
    }
    let min = terms
        .iter()
        .map(|&(_, _, t, e)| t + p as i64 * (-e).max(0))
        .min()
        .unwrap_or(0)
        .min(0);
    if order < min {
        return Ok(LaurentSeries::from_i128(min, order, Vec::new()));
    }
    let mut acc = vec![0i128; (order - min + 1) as usize];
    let mut put = |exp: i64, v: i128| acc[(exp - min) as usize] += v;
    for (_, c, t, e) in terms {
        let mult = |m: i64| if p == 2 { (m + 1) as i128 } else { 1 };
        let alt = |m: i64| if s == 1 && m % 2 == 1 { -1 } else { 1 };
        match e.signum() {
            0 => {
                // 1 + q^0 = 2
                if t <= order {
                    put(t, c);
                }
            }
            1 => {
                let mut m = 0;
                while t + m * e <= order {
                    put(t + m * e, c * unit * mult(m) * alt(m));
                    m += 1;
                }
            }
            _ => {
                let step = -e;
                let sp = if p == 1 { s } else { 1 };
                let mut m = 0;
                while t + (p as i64 + m) * step <= order {
                    put(t + (p as i64 + m) * step, c * unit * sp * mult(m) * alt(m));
                    m += 1;
                }
            }
        }
    }
    Ok(LaurentSeries::from_i128_over(min, order, acc, unit))
}

/// `constant + Σ scalar·expand(spec)`.
pub fn expand_sum(terms: &[(Rational, LambertSpec)], constant: &Rational, order: i64) -> Result<LaurentSeries> {
    let mut out = LaurentSeries::constant(constant.clone(), order);
    for (scalar, spec) in terms {
        if scalar.is_zero() {
            continue;
        }
        out = &out + &expand(spec, order)?.scale(scalar);
    }
    Ok(out)
}

/// Both sides of the bilateral summation with base `q^k`:
/// `E³(q^k) f(-ab, -q^k/(ab)) / (f(-a, -q^k/a) f(-b, -q^k/b))` and
/// `Σ_{n∈ℤ} aⁿ / (1 - b q^{kn})`.
pub fn onepsione_pair(k: u32, a: Monomial, b: Monomial, order: i64) -> Result<(LaurentSeries, LaurentSeries)> {
    let kk = k as i64;
    if !(0 < a.exponent && a.exponent < kk) {
        return Err(Error::Precondition(format!("need 0 < exponent(a) < {kk}, got {}", a.exponent)));
    }
    if !(0 <= b.exponent && b.exponent < kk) {
        return Err(Error::Precondition(format!("need 0 <= exponent(b) < {kk}, got {}", b.exponent)));
    }
    if b == Monomial::ONE {
        return Err(Error::PoleAt(0));
    }
    let base = Monomial::q(kk);
    let ab = a.times(b);
    let theta = |x: Monomial| theta_f(x.negate(), base.over(x).negate(), order);
    let num = euler_e(k, order).pow(3) * theta(ab)?;
    let lhs = num.div(&(theta(a)? * theta(b)?))?;
    let mut spec = LambertSpec::bilateral(a.exponent, 0, kk, b.exponent, -b.sign);
    if a.sign < 0 {
        spec = spec.alternating();
    }
    let rhs = expand(&spec, order)?;
    Ok((lhs, rhs))
}
