//! Builders checked against naive, independently written computations.

use qforms::arith::{divisors, factorize, kronecker, pow_mod};
use qforms::lambert::{expand, Character, LambertSpec};
use qforms::qfunctions::{euler_e, eta, phi, pochhammer_inf, psi, rr_g, rr_h, theta_f, Monomial};
use qforms::repcount::{bqf_theta, BinaryForm};
use qforms::LaurentSeries;

const N: usize = 150;

fn ints(s: &LaurentSeries, n: usize) -> Vec<i128> {
    (0..=n as i64).map(|e| s.coeff_i128(e).expect("integer coefficient")).collect()
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Power series inverse by the recurrence on `a·b = 1`, with `a[0] = ±1`.
fn poly_inv(a: &[i128]) -> Vec<i128> {
    let mut b = vec![0; a.len()];
    b[0] = a[0];
    for n in 1..a.len() {
        let acc: i128 = (1..=n).map(|k| a[k] * b[n - k]).sum();
        b[n] = -acc * a[0];
    }
    b
}

/// `∏_{j≥1} (1 - q^{kj})` by repeated binomial multiplication.
fn naive_e(k: usize, n: usize) -> Vec<i128> {
    let mut acc = vec![0; n + 1];
    acc[0] = 1;
    for j in (k..=n).step_by(k) {
        let mut f = vec![0; n + 1];
        f[0] = 1;
        f[j] = -1;
        acc = poly_mul(&acc, &f);
    }
    acc
}

fn partitions(n: usize) -> Vec<i128> {
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

#[test]
fn euler_product_against_expanded_product() {
    for k in [1, 2, 5] {
        assert_eq!(ints(&euler_e(k as u32, N as i64), N), naive_e(k, N), "k = {k}");
    }
}

#[test]
fn reciprocal_euler_product_counts_partitions() {
    let inv = euler_e(1, N as i64).invert().unwrap();
    assert_eq!(ints(&inv, N), partitions(N));
}

#[test]
fn phi_and_psi_count_squares_and_triangular_numbers() {
    let mut squares = vec![0i128; N + 1];
    let mut triangular = vec![0i128; N + 1];
    for x in -20i64..=20 {
        if (x * x) as usize <= N {
            squares[(x * x) as usize] += 1;
        }
        if x >= 0 && (x * (x + 1) / 2) as usize <= N {
            triangular[(x * (x + 1) / 2) as usize] += 1;
        }
    }
    assert_eq!(ints(&phi(1, N as i64), N), squares);
    assert_eq!(ints(&psi(1, N as i64), N), triangular);
}

#[test]
fn theta_f_against_bilateral_sum_and_triple_product() {
    for (a, b) in [(Monomial::q(1), Monomial::q(2)), (Monomial::neg_q(2), Monomial::q(3)), (Monomial::neg_q(1), Monomial::neg_q(5))] {
        let mut direct = vec![0i128; N + 1];
        for k in -30i64..=30 {
            let e = a.exponent * k * (k + 1) / 2 + b.exponent * k * (k - 1) / 2;
            if (0..=N as i64).contains(&e) {
                let sa = (a.sign as i128).pow((k * (k + 1) / 2).rem_euclid(2) as u32);
                let sb = (b.sign as i128).pow((k * (k - 1) / 2).rem_euclid(2) as u32);
                direct[e as usize] += sa * sb;
            }
        }
        let f = theta_f(a, b, N as i64).unwrap();
        assert_eq!(ints(&f, N), direct, "f({a}, {b})");
        let ab = a.times(b);
        let jtp = pochhammer_inf(a.negate(), ab, N as i64).unwrap()
            * pochhammer_inf(b.negate(), ab, N as i64).unwrap()
            * pochhammer_inf(ab, ab, N as i64).unwrap();
        assert_eq!(ints(&jtp, N), direct, "triple product f({a}, {b})");
    }
}

#[test]
fn eta_quotient_against_naive_products() {
    let num = poly_mul(&poly_mul(&naive_e(2, N), &naive_e(3, N)), &poly_mul(&naive_e(8, N), &naive_e(12, N)));
    let den = poly_mul(&naive_e(1, N), &naive_e(24, N));
    let expected = poly_mul(&num, &poly_inv(&den));
    let s = eta(0, &[(2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)], N as i64).unwrap();
    assert_eq!(ints(&s, N), expected);
}

#[test]
fn rogers_ramanujan_products_count_restricted_partitions() {
    // G: parts ≡ ±1 (mod 5); H: parts ≡ ±2 (mod 5).
    for (series, residues) in [(rr_g(N as i64), [1, 4]), (rr_h(N as i64), [2, 3])] {
        let mut p = vec![0i128; N + 1];
        p[0] = 1;
        for part in (1..=N).filter(|m| residues.contains(&(m % 5))) {
            for m in part..=N {
                p[m] += p[m - part];
            }
        }
        assert_eq!(ints(&series, N), p);
    }
}

#[test]
fn lambert_expansions_against_divisor_sums() {
    let chi = |d: u64| kronecker(-20, d) as i128;
    let first = expand(&LambertSpec::unilateral(1, 0, 1, 0, -1).with_character(Character::Top(-20)), N as i64).unwrap();
    let squared = expand(&LambertSpec::unilateral(1, 0, 1, 0, -1).with_character(Character::Top(-20)).squared(), N as i64).unwrap();
    for n in 1..=N as u64 {
        let ds = divisors(n);
        assert_eq!(first.coeff_i128(n as i64), Some(ds.iter().map(|&d| chi(d)).sum()), "n = {n}");
        assert_eq!(squared.coeff_i128(n as i64), Some(ds.iter().map(|&d| chi(d) * (n / d) as i128).sum()), "n = {n}");
    }
}

#[test]
fn sum_of_two_squares_three_ways() {
    let lambert = expand(&LambertSpec::unilateral(1, 0, 2, 0, 1), N as i64).unwrap();
    let lattice = bqf_theta(BinaryForm::new(1, 0, 1).unwrap(), N as i64);
    for n in 1..=N as u64 {
        let kernel: i128 = divisors(n).iter().map(|&d| kronecker(-4, d) as i128).sum();
        assert_eq!(lattice.coeff_i128(n as i64), Some(4 * kernel));
        assert_eq!(lambert.coeff_i128(n as i64), Some(kernel));
    }
}

#[test]
fn kronecker_agrees_with_euler_criterion_at_odd_primes() {
    for p in (3u64..400).filter(|&p| factorize(p).factors == [(p, 1)]) {
        for a in -60i64..60 {
            let r = a.rem_euclid(p as i64) as u64;
            let euler = match pow_mod(r, (p - 1) / 2, p) {
                0 => 0,
                1 => 1,
                _ => -1,
            };
            assert_eq!(kronecker(a, p), euler, "({a}/{p})");
        }
    }
}

#[test]
fn factorization_reassembles_and_divisors_divide() {
    for n in 1u64..3000 {
        let f = factorize(n);
        assert_eq!(f.factors.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(divisors(n), brute);
    }
}
