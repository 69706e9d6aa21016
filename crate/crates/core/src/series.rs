//! Exact truncated Laurent series in `q`.
//!
//! A [`LaurentSeries`] tracks the coefficients of `q^min_exp ..= q^order`.
//! Everything below `min_exp` is known to be zero; nothing above `order` is
//! known. Arithmetic never reports a coefficient it cannot fully determine
//! from the tracked inputs.
//!
//! Coefficients are exact rationals. Internally a series stores integer
//! numerators over one common denominator, in `i128` while the values fit
//! and in arbitrary precision otherwise. Products check an a-priori bound
//! before taking the machine-word path, so overflow never happens silently.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Default truncation order used when none is given.
pub const DEFAULT_ORDER: i64 = 512;

#[derive(Clone, Debug)]
enum Coeffs {
    Small { den: i128, nums: Vec<i128> },
    Big { den: BigInt, nums: Vec<BigInt> },
}

impl Coeffs {
    fn len(&self) -> usize {
        match self {
            Coeffs::Small { nums, .. } => nums.len(),
            Coeffs::Big { nums, .. } => nums.len(),
        }
    }

    fn to_big(&self) -> (BigInt, Vec<BigInt>) {
        match self {
            Coeffs::Small { den, nums } => {
                (BigInt::from(*den), nums.iter().map(|&v| BigInt::from(v)).collect())
            }
            Coeffs::Big { den, nums } => (den.clone(), nums.clone()),
        }
    }

    /// Reduce the common denominator and demote to `i128` when possible.
    fn normalize(self) -> Coeffs {
        match self {
            Coeffs::Small { den, mut nums } => {
                let mut g = den;
                if g != 1 {
                    for v in &nums {
                        g = g.gcd(v);
                        if g == 1 {
                            break;
                        }
                    }
                }
                if g > 1 {
                    for v in nums.iter_mut() {
                        *v /= g;
                    }
                    Coeffs::Small { den: den / g, nums }
                } else {
                    Coeffs::Small { den, nums }
                }
            }
            Coeffs::Big { den, mut nums } => {
                let mut den = den;
                if !den.is_one() {
                    let mut g = den.clone();
                    for v in &nums {
                        g = g.gcd(v);
                        if g.is_one() {
                            break;
                        }
                    }
                    if g > BigInt::one() {
                        for v in nums.iter_mut() {
                            *v = &*v / &g;
                        }
                        den = &den / &g;
                    }
                }
                let small_den = den.to_i128();
                let small: Option<Vec<i128>> = nums.iter().map(|v| v.to_i128()).collect();
                match (small_den, small) {
                    (Some(d), Some(ns)) => Coeffs::Small { den: d, nums: ns },
                    _ => Coeffs::Big { den, nums },
                }
            }
        }
    }
}

/// Truncated formal Laurent series with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct LaurentSeries {
    min_exp: i64,
    order: i64,
    coeffs: Coeffs,
}

fn tracked_len(min_exp: i64, order: i64) -> usize {
    if order < min_exp {
        0
    } else {
        (order - min_exp + 1) as usize
    }
}

fn max_abs_i128(v: &[i128]) -> u128 {
    v.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
}

impl LaurentSeries {
    fn from_coeffs(min_exp: i64, order: i64, coeffs: Coeffs) -> Self {
        debug_assert_eq!(coeffs.len(), tracked_len(min_exp, order));
        LaurentSeries { min_exp, order, coeffs: coeffs.normalize() }
    }

    /// Series from machine-word integer coefficients starting at `min_exp`.
    /// Missing trailing coefficients up to `order` are zero; extra ones are dropped.
    pub fn from_i128(min_exp: i64, order: i64, mut values: Vec<i128>) -> Self {
        values.resize(tracked_len(min_exp, order), 0);
        Self::from_coeffs(min_exp, order, Coeffs::Small { den: 1, nums: values })
    }

    pub fn from_bigints(min_exp: i64, order: i64, mut values: Vec<BigInt>) -> Self {
        values.resize(tracked_len(min_exp, order), BigInt::zero());
        Self::from_coeffs(min_exp, order, Coeffs::Big { den: BigInt::one(), nums: values })
    }

    pub fn from_rationals(min_exp: i64, order: i64, mut values: Vec<Rational>) -> Self {
        values.resize(tracked_len(min_exp, order), Rational::zero());
        let den = values.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let nums = values.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        Self::from_coeffs(min_exp, order, Coeffs::Big { den, nums })
    }

    /// Integer series over the common denominator `den` (must be positive).
    pub(crate) fn from_i128_over(min_exp: i64, order: i64, mut values: Vec<i128>, den: i128) -> Self {
        assert!(den > 0, "denominator must be positive");
        values.resize(tracked_len(min_exp, order), 0);
        Self::from_coeffs(min_exp, order, Coeffs::Small { den, nums: values })
    }

    pub fn zero(order: i64) -> Self {
        Self::from_i128(0, order, Vec::new())
    }

    pub fn one(order: i64) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: i64) -> Self {
        Self::from_rationals(0, order, vec![c])
    }

    /// `c * q^exp` tracked to `order`.
    pub fn monomial(c: i128, exp: i64, order: i64) -> Self {
        Self::from_i128(exp, order, vec![c])
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Common denominator of all tracked coefficients.
    pub fn denominator(&self) -> BigInt {
        match &self.coeffs {
            Coeffs::Small { den, .. } => BigInt::from(*den),
            Coeffs::Big { den, .. } => den.clone(),
        }
    }

    /// True when every tracked coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.denominator().is_one()
    }

    fn raw_zero(&self, e: i64) -> bool {
        if e < self.min_exp || e > self.order {
            return true;
        }
        let i = (e - self.min_exp) as usize;
        match &self.coeffs {
            Coeffs::Small { nums, .. } => nums[i] == 0,
            Coeffs::Big { nums, .. } => nums[i].is_zero(),
        }
    }

    /// Exact coefficient of `q^n`.
    pub fn coeff(&self, n: i64) -> Result<Rational> {
        if n < self.min_exp || n > self.order {
            return Err(Error::OutOfRange { n, min: self.min_exp, order: self.order });
        }
        Ok(self.coeff_unchecked(n))
    }

    /// Coefficient of `q^n`, taking zero below `min_exp`.
    pub fn coeff_or_zero(&self, n: i64) -> Result<Rational> {
        if n < self.min_exp {
            if n > self.order {
                return Err(Error::OutOfRange { n, min: self.min_exp, order: self.order });
            }
            return Ok(Rational::zero());
        }
        self.coeff(n)
    }

    fn coeff_unchecked(&self, n: i64) -> Rational {
        let i = (n - self.min_exp) as usize;
        match &self.coeffs {
            Coeffs::Small { den, nums } => {
                Rational::new(BigInt::from(nums[i]), BigInt::from(*den))
            }
            Coeffs::Big { den, nums } => Rational::new(nums[i].clone(), den.clone()),
        }
    }

    /// Integer coefficient of `q^n`; `None` when out of range or not integral.
    pub fn coeff_i128(&self, n: i64) -> Option<i128> {
        if n > self.order {
            return None;
        }
        if n < self.min_exp {
            return Some(0);
        }
        let i = (n - self.min_exp) as usize;
        match &self.coeffs {
            Coeffs::Small { den: 1, nums } => Some(nums[i]),
            Coeffs::Small { .. } => None,
            Coeffs::Big { den, nums } if den.is_one() => nums[i].to_i128(),
            Coeffs::Big { .. } => None,
        }
    }

    /// All tracked coefficients, lowest exponent first.
    pub fn coefficients(&self) -> Vec<Rational> {
        (self.min_exp..=self.order).map(|e| self.coeff_unchecked(e)).collect()
    }

    /// Exponent of the first nonzero tracked coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (self.min_exp..=self.order).find(|&e| !self.raw_zero(e))
    }

    fn valuation_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1).max(self.min_exp)
    }

    /// Start the tracked range at the first nonzero coefficient. Fails when
    /// every tracked coefficient is zero.
    fn trim_leading(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::ZeroLeadingCoefficient)?;
        if v == self.min_exp {
            return Ok(self.clone());
        }
        let skip = (v - self.min_exp) as usize;
        let coeffs = match &self.coeffs {
            Coeffs::Small { den, nums } => Coeffs::Small { den: *den, nums: nums[skip..].to_vec() },
            Coeffs::Big { den, nums } => Coeffs::Big { den: den.clone(), nums: nums[skip..].to_vec() },
        };
        Ok(Self::from_coeffs(v, self.order, coeffs))
    }

    /// Drop tracking above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let len = tracked_len(self.min_exp, order);
        let coeffs = match &self.coeffs {
            Coeffs::Small { den, nums } => Coeffs::Small { den: *den, nums: nums[..len].to_vec() },
            Coeffs::Big { den, nums } => Coeffs::Big { den: den.clone(), nums: nums[..len].to_vec() },
        };
        Self::from_coeffs(self.min_exp, order, coeffs)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { min_exp: self.min_exp + k, order: self.order + k, coeffs: self.coeffs.clone() }
    }

    /// Multiply every coefficient by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if let (Some(n), Some(d)) = (c.numer().to_i128(), c.denom().to_i128()) {
            if let Coeffs::Small { den, nums } = &self.coeffs {
                let bound = max_abs_i128(nums).checked_mul(n.unsigned_abs());
                if let (Some(b), Some(nd)) = (bound, den.checked_mul(d)) {
                    if b <= i128::MAX as u128 {
                        let nums = nums.iter().map(|v| v * n).collect();
                        return Self::from_coeffs(self.min_exp, self.order, Coeffs::Small { den: nd, nums });
                    }
                }
            }
        }
        let (den, nums) = self.coeffs.to_big();
        let nums = nums.iter().map(|v| v * c.numer()).collect();
        Self::from_coeffs(self.min_exp, self.order, Coeffs::Big { den: den * c.denom(), nums })
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    /// Coefficientwise sum on the intersection of tracked ranges.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let min = self.min_exp.min(other.min_exp);
        let order = self.order.min(other.order);
        let len = tracked_len(min, order);
        if let (Coeffs::Small { den: da, nums: na }, Coeffs::Small { den: db, nums: nb }) =
            (&self.coeffs, &other.coeffs)
        {
            if let Some(c) = small_combine(self.min_exp, *da, na, other.min_exp, *db, nb, min, len, negate_other) {
                return Self::from_coeffs(min, order, c);
            }
        }
        let (da, na) = self.coeffs.to_big();
        let (db, nb) = other.coeffs.to_big();
        let den = da.lcm(&db);
        let fa = &den / &da;
        let fb = &den / &db;
        let get = |nums: &[BigInt], lo: i64, e: i64| -> BigInt {
            let i = e - lo;
            if i < 0 || i as usize >= nums.len() {
                BigInt::zero()
            } else {
                nums[i as usize].clone()
            }
        };
        let nums = (0..len)
            .map(|i| {
                let e = min + i as i64;
                let a = get(&na, self.min_exp, e) * &fa;
                let b = get(&nb, other.min_exp, e) * &fb;
                if negate_other {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::from_coeffs(min, order, Coeffs::Big { den, nums })
    }

    /// Cauchy product. The result order is the largest exponent whose
    /// coefficient is fully determined by the tracked inputs.
    pub fn mul(&self, other: &Self) -> Self {
        let min = self.min_exp + other.min_exp;
        let order = (self.order + other.valuation_bound()).min(other.order + self.valuation_bound());
        let len = tracked_len(min, order);
        if len == 0 {
            return Self::from_i128(min, order, Vec::new());
        }
        if let (Coeffs::Small { den: da, nums: na }, Coeffs::Small { den: db, nums: nb }) =
            (&self.coeffs, &other.coeffs)
        {
            if let Some(c) = small_mul(*da, na, *db, nb, len) {
                return Self::from_coeffs(min, order, c);
            }
        }
        let (da, na) = self.coeffs.to_big();
        let (db, nb) = other.coeffs.to_big();
        let nums = big_convolve(&na, &nb, len);
        Self::from_coeffs(min, order, Coeffs::Big { den: da * db, nums })
    }

    /// `self^k` by repeated squaring; `k = 0` gives the constant 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = LaurentSeries::one(self.order.max(0));
        let mut base = self.clone();
        let mut k = k;
        let mut first = true;
        while k > 0 {
            if k & 1 == 1 {
                result = if first { base.clone() } else { &result * &base };
                first = false;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse. Requires the lowest tracked coefficient to be nonzero.
    pub fn invert(&self) -> Result<Self> {
        let trimmed = self.trim_leading()?;
        if trimmed.min_exp != self.min_exp {
            return trimmed.invert();
        }
        let min = -self.min_exp;
        let order = self.order - 2 * self.min_exp;
        let len = tracked_len(min, order);
        // Factor out the content so units with content g invert over the integers.
        let (den, nums) = self.coeffs.to_big();
        let content = nums.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let lead = &nums[0] / &content;
        if lead.abs().is_one() {
            let unit: Vec<BigInt> = nums.iter().map(|v| v / &content).collect();
            let sign = lead.to_i128().unwrap_or(1);
            let inv = integer_unit_inverse(&unit, sign, len);
            // 1/s = den / content * inv
            let series = match inv {
                Coeffs::Small { nums, .. } => LaurentSeries::from_i128(min, order, nums),
                Coeffs::Big { nums, .. } => LaurentSeries::from_bigints(min, order, nums),
            };
            return Ok(series.scale(&Rational::new(den, content)));
        }
        let coeffs: Vec<Rational> = nums.iter().map(|v| Rational::new(v.clone(), den.clone())).collect();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        let inv_lead = coeffs[0].recip();
        for n in 0..len {
            if n == 0 {
                out.push(inv_lead.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for k in 1..=n.min(coeffs.len() - 1) {
                if !coeffs[k].is_zero() {
                    acc += &coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &inv_lead);
        }
        Ok(LaurentSeries::from_rationals(min, order, out))
    }

    /// `self / other`. Same tracked range as `self * other.invert()`, but
    /// computed by long division so intermediate values stay at the scale
    /// of the quotient.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let trimmed = other.trim_leading()?;
        if trimmed.min_exp != other.min_exp {
            return self.div(&trimmed);
        }
        let m = other.min_exp;
        let min = self.min_exp - m;
        let order = (self.order - m).min(other.order - 2 * m + self.valuation_bound());
        let len = tracked_len(min, order);
        let (da, na) = self.coeffs.to_big();
        let (dd, nd) = other.coeffs.to_big();
        let content = nd.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
        let lead = &nd[0] / &content;
        if !lead.abs().is_one() {
            return Ok(self.mul(&other.invert()?));
        }
        // self / other = (na / unit) * dd / (da * content), with unit[0] = ±1.
        let unit: Vec<BigInt> = nd.iter().map(|v| v / &content).collect();
        let sign = lead.to_i128().expect("±1");
        let scale = Rational::new(dd, da * content);
        let small_na: Option<Vec<i128>> = na[..len].iter().map(|v| v.to_i128()).collect();
        let small_unit: Option<Vec<i128>> = unit.iter().map(|v| v.to_i128()).collect();
        if let (Some(a), Some(u)) = (small_na, small_unit) {
            if let Some(q) = small_long_division(&a, &u, sign) {
                return Ok(LaurentSeries::from_i128(min, order, q).scale(&scale));
            }
        }
        let positions = nonzero_positions(&unit, |x| x.is_zero());
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = na[n].clone();
            for &k in positions.iter().skip_while(|&&k| k == 0) {
                if k > n {
                    break;
                }
                acc -= &unit[k] * &out[n - k];
            }
            out.push(acc * sign);
        }
        Ok(LaurentSeries::from_bigints(min, order, out).scale(&scale))
    }

    /// Substitute `q -> q^k`. Coefficients are claimed up to `k * order`.
    pub fn compose_power(&self, k: u32) -> Self {
        assert!(k >= 1, "compose_power needs a positive power");
        let k = k as i64;
        let min = self.min_exp * k;
        let order = self.order * k;
        let len = tracked_len(min, order);
        let coeffs = match &self.coeffs {
            Coeffs::Small { den, nums } => {
                let mut out = vec![0i128; len];
                for (i, v) in nums.iter().enumerate() {
                    out[i * k as usize] = *v;
                }
                Coeffs::Small { den: *den, nums: out }
            }
            Coeffs::Big { den, nums } => {
                let mut out = vec![BigInt::zero(); len];
                for (i, v) in nums.iter().enumerate() {
                    out[i * k as usize] = v.clone();
                }
                Coeffs::Big { den: den.clone(), nums: out }
            }
        };
        Self::from_coeffs(min, order, coeffs)
    }

    /// Substitute `q -> -q`.
    pub fn negate_variable(&self) -> Self {
        let mut out = self.clone();
        let odd = |e: i64| e.rem_euclid(2) == 1;
        match &mut out.coeffs {
            Coeffs::Small { nums, .. } => {
                for (i, v) in nums.iter_mut().enumerate() {
                    if odd(self.min_exp + i as i64) {
                        *v = -*v;
                    }
                }
            }
            Coeffs::Big { nums, .. } => {
                for (i, v) in nums.iter_mut().enumerate() {
                    if odd(self.min_exp + i as i64) {
                        *v = -v.clone();
                    }
                }
            }
        }
        out
    }

    /// Coefficientwise (Hadamard) product on the common tracked range.
    pub fn hadamard(&self, other: &Self) -> Self {
        let min = self.min_exp.max(other.min_exp);
        let order = self.order.min(other.order);
        let values = (min..=order)
            .map(|e| self.coeff_unchecked(e) * other.coeff_unchecked(e))
            .collect();
        Self::from_rationals(min, order, values)
    }

    /// Map each coefficient through `f`, keeping the tracked range.
    pub fn map_coeffs(&self, f: impl Fn(i64, Rational) -> Rational) -> Self {
        let values = (self.min_exp..=self.order).map(|e| f(e, self.coeff_unchecked(e))).collect();
        Self::from_rationals(self.min_exp, self.order, values)
    }

    /// Compare coefficients for all exponents up to `n`. Returns the smallest
    /// disagreeing exponent, if any.
    pub fn equal_upto(&self, other: &Self, n: i64) -> Result<(bool, Option<i64>)> {
        for s in [self, other] {
            if s.order < n {
                return Err(Error::InsufficientOrder { needed: n, have: s.order });
            }
        }
        Ok(match self.first_mismatch(other, n) {
            None => (true, None),
            Some(e) => (false, Some(e)),
        })
    }

    fn first_mismatch(&self, other: &Self, n: i64) -> Option<i64> {
        let lo = self.min_exp.min(other.min_exp);
        if let (Coeffs::Small { den: da, nums: na }, Coeffs::Small { den: db, nums: nb }) =
            (&self.coeffs, &other.coeffs)
        {
            if da == db {
                let get = |nums: &[i128], m: i64, e: i64| if e < m { 0 } else { nums[(e - m) as usize] };
                return (lo..=n).find(|&e| get(na, self.min_exp, e) != get(nb, other.min_exp, e));
            }
        }
        let zero = Rational::zero();
        (lo..=n).find(|&e| {
            let a = if e < self.min_exp { zero.clone() } else { self.coeff_unchecked(e) };
            let b = if e < other.min_exp { zero.clone() } else { other.coeff_unchecked(e) };
            a != b
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn small_combine(
    ma: i64,
    da: i128,
    na: &[i128],
    mb: i64,
    db: i128,
    nb: &[i128],
    min: i64,
    len: usize,
    negate_b: bool,
) -> Option<Coeffs> {
    let g = da.gcd(&db);
    let den = (da / g).checked_mul(db)?;
    let fa = den / da;
    let fb = den / db;
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let e = min + i as i64;
        let a = if e >= ma && ((e - ma) as usize) < na.len() { na[(e - ma) as usize] } else { 0 };
        let b = if e >= mb && ((e - mb) as usize) < nb.len() { nb[(e - mb) as usize] } else { 0 };
        let a = a.checked_mul(fa)?;
        let b = b.checked_mul(fb)?;
        out.push(if negate_b { a.checked_sub(b)? } else { a.checked_add(b)? });
    }
    Some(Coeffs::Small { den, nums: out })
}

fn nonzero_positions<T>(v: &[T], is_zero: impl Fn(&T) -> bool) -> Vec<usize> {
    v.iter().enumerate().filter(|(_, x)| !is_zero(x)).map(|(i, _)| i).collect()
}

fn small_mul(da: i128, na: &[i128], db: i128, nb: &[i128], len: usize) -> Option<Coeffs> {
    let den = da.checked_mul(db)?;
    let pa = nonzero_positions(&na[..na.len().min(len)], |x| *x == 0);
    let pb = nonzero_positions(&nb[..nb.len().min(len)], |x| *x == 0);
    let terms = pa.len().min(pb.len()) as u128;
    let bound = max_abs_i128(na).checked_mul(max_abs_i128(nb))?.checked_mul(terms.max(1))?;
    if bound > i128::MAX as u128 {
        return None;
    }
    let mut out = vec![0i128; len];
    // The sparser operand drives the outer loop.
    let (outer_pos, outer, inner) = if pa.len() <= pb.len() { (&pa, na, nb) } else { (&pb, nb, na) };
    for &i in outer_pos {
        let a = outer[i];
        let upto = inner.len().min(len - i);
        let dst = &mut out[i..i + upto];
        for (d, b) in dst.iter_mut().zip(&inner[..upto]) {
            *d += a * b;
        }
    }
    Some(Coeffs::Small { den, nums: out })
}

fn big_convolve(na: &[BigInt], nb: &[BigInt], len: usize) -> Vec<BigInt> {
    let pa = nonzero_positions(&na[..na.len().min(len)], |x| x.is_zero());
    let pb = nonzero_positions(&nb[..nb.len().min(len)], |x| x.is_zero());
    let (outer_pos, outer, inner, inner_pos) =
        if pa.len() <= pb.len() { (&pa, na, nb, &pb) } else { (&pb, nb, na, &pa) };
    let mut out = vec![BigInt::zero(); len];
    for &i in outer_pos {
        let a = &outer[i];
        for &j in inner_pos {
            if i + j >= len {
                break;
            }
            out[i + j] += a * &inner[j];
        }
    }
    out
}

/// Inverse of an integer series whose leading coefficient is `sign = ±1`.
fn integer_unit_inverse(unit: &[BigInt], sign: i128, len: usize) -> Coeffs {
    let small: Option<Vec<i128>> = unit.iter().map(|v| v.to_i128()).collect();
    if let Some(p) = small {
        if let Some(out) = small_unit_inverse(&p, sign, len) {
            return Coeffs::Small { den: 1, nums: out };
        }
    }
    let positions = nonzero_positions(unit, |x| x.is_zero());
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(BigInt::from(sign));
            continue;
        }
        let mut acc = BigInt::zero();
        for &k in positions.iter().skip_while(|&&k| k == 0) {
            if k > n {
                break;
            }
            acc += &unit[k] * &out[n - k];
        }
        out.push(-acc * sign);
    }
    Coeffs::Big { den: BigInt::one(), nums: out }
}

fn small_unit_inverse(p: &[i128], sign: i128, len: usize) -> Option<Vec<i128>> {
    let positions = nonzero_positions(p, |x| *x == 0);
    let mut out: Vec<i128> = Vec::with_capacity(len);
    for n in 0..len {
        if n == 0 {
            out.push(sign);
            continue;
        }
        let mut acc: i128 = 0;
        for &k in positions.iter().skip_while(|&&k| k == 0) {
            if k > n {
                break;
            }
            acc = acc.checked_add(p[k].checked_mul(out[n - k])?)?;
        }
        out.push(acc.checked_neg()?.checked_mul(sign)?);
    }
    Some(out)
}

fn small_long_division(a: &[i128], unit: &[i128], sign: i128) -> Option<Vec<i128>> {
    let positions = nonzero_positions(unit, |x| *x == 0);
    let mut out: Vec<i128> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut acc = a[n];
        for &k in positions.iter().skip_while(|&&k| k == 0) {
            if k > n {
                break;
            }
            acc = acc.checked_sub(unit[k].checked_mul(out[n - k])?)?;
        }
        out.push(acc.checked_mul(sign)?);
    }
    Some(out)
}

impl PartialEq for LaurentSeries {
    /// Equal tracked ranges and equal coefficients.
    fn eq(&self, other: &Self) -> bool {
        self.min_exp == other.min_exp
            && self.order == other.order
            && self.first_mismatch(other, self.order).is_none()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inherent:ident) => {
        impl $tr<&LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$inherent(self, rhs)
            }
        }
        impl $tr<LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$inherent(&self, &rhs)
            }
        }
        impl $tr<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: &LaurentSeries) -> LaurentSeries {
                LaurentSeries::$inherent(&self, rhs)
            }
        }
        impl $tr<LaurentSeries> for &LaurentSeries {
            type Output = LaurentSeries;
            fn $method(self, rhs: LaurentSeries) -> LaurentSeries {
                LaurentSeries::$inherent(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale_int(-1)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.scale_int(-1)
    }
}

impl Mul<i64> for LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: i64) -> LaurentSeries {
        self.scale_int(rhs)
    }
}

impl Mul<i64> for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: i64) -> LaurentSeries {
        self.scale_int(rhs)
    }
}

/// Format a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.min_exp..=self.order {
            let c = self.coeff_unchecked(e);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = !mag.is_one() || e == 0;
            if show_mag {
                write!(f, "{}", format_rational(&mag))?;
            }
            if e != 0 {
                if show_mag {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}
