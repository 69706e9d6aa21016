//! Representation counts by direct lattice enumeration. These share no code
//! with the product builders or the closed formulas and serve as their oracle.

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::LaurentSeries;

/// `a x² + b x y + c y²`, positive definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a <= 0 || b * b - 4 * a * c >= 0 {
            return Err(Error::IndefiniteForm(a, b, c));
        }
        Ok(BinaryForm { a, b, c })
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// `4ac - b²`, positive.
    pub fn neg_discriminant(&self) -> i64 {
        4 * self.a * self.c - self.b * self.b
    }
}

/// `Σ d_i x_i²` with all `d_i > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagQuaternaryForm(pub [i64; 4]);

impl DiagQuaternaryForm {
    pub fn new(d: [i64; 4]) -> Result<Self> {
        if d.iter().any(|&v| v <= 0) {
            return Err(Error::Precondition(format!("diagonal coefficients must be positive, got {d:?}")));
        }
        Ok(DiagQuaternaryForm(d))
    }
}

/// `Σ_{x,y∈ℤ} q^{Q(x,y)}` to `order`, counting every lattice point.
pub fn bqf_theta(form: BinaryForm, order: i64) -> LaurentSeries {
    let BinaryForm { a, b, c } = form;
    let n = order.max(0);
    let mut counts = vec![0i128; n as usize + 1];
    // 4a·Q = (2ax + by)² + (4ac - b²) y², so |y| <= sqrt(4aN / (4ac - b²)).
    let ymax = (4 * a * n / form.neg_discriminant()).sqrt();
    for y in -ymax..=ymax {
        let rest = 4 * a * n - form.neg_discriminant() * y * y;
        if rest < 0 {
            continue;
        }
        // |2ax + by| <= sqrt(rest)
        let r = rest.sqrt();
        let lo = (-b * y - r).div_euclid(2 * a);
        let hi = (-b * y + r).div_euclid(2 * a) + 1;
        for x in lo..=hi {
            let v = a * x * x + b * x * y + c * y * y;
            if (0..=n).contains(&v) {
                counts[v as usize] += 1;
            }
        }
    }
    LaurentSeries::from_i128(0, order, counts)
}

/// `Σ q^{d₁x₁² + d₂x₂² + d₃x₃² + d₄x₄²}` to `order`.
pub fn diag4_theta(form: DiagQuaternaryForm, order: i64) -> LaurentSeries {
    let n = order.max(0);
    let mut counts = vec![0i128; n as usize + 1];
    let [d1, d2, d3, d4] = form.0;
    let bound = |d: i64, room: i64| (room / d).sqrt();
    let b1 = bound(d1, n);
    for x1 in -b1..=b1 {
        let s1 = d1 * x1 * x1;
        let b2 = bound(d2, n - s1);
        for x2 in -b2..=b2 {
            let s2 = s1 + d2 * x2 * x2;
            let b3 = bound(d3, n - s2);
            for x3 in -b3..=b3 {
                let s3 = s2 + d3 * x3 * x3;
                let b4 = bound(d4, n - s3);
                for x4 in -b4..=b4 {
                    counts[(s3 + d4 * x4 * x4) as usize] += 1;
                }
            }
        }
    }
    LaurentSeries::from_i128(0, order, counts)
}

/// Number of tuples `(T₁, …, T_k)` of triangular numbers with
/// `Σ w_i T_i = n`, as a series to `order`.
pub fn tri_theta(weights: &[i64], order: i64) -> Result<LaurentSeries> {
    if weights.iter().any(|&w| w <= 0) {
        return Err(Error::Precondition(format!("weights must be positive, got {weights:?}")));
    }
    let n = order.max(0);
    let mut counts = vec![0i128; n as usize + 1];
    fn walk(weights: &[i64], sum: i64, n: i64, counts: &mut [i128]) {
        let Some((&w, rest)) = weights.split_first() else {
            counts[sum as usize] += 1;
            return;
        };
        let mut k = 0i64;
        loop {
            let s = sum + w * (k * (k + 1) / 2);
            if s > n {
                break;
            }
            walk(rest, s, n, counts);
            k += 1;
        }
    }
    walk(weights, 0, n, &mut counts);
    Ok(LaurentSeries::from_i128(0, order, counts))
}
