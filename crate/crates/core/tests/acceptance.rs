//! Acceptance criteria. Every comparison is exact; one test per criterion.

use std::time::{Duration, Instant};

use qforms::arith::{check_multiplicative, cubic_residue_2, divisor_sum, hecke_u2_to, is_prime, kronecker, Kernel};
use qforms::closedform::{self, coeff_prime_power, rep_quat, thm81_coeff, Family, Quat};
use qforms::qfunctions::{eta, phi, psi};
use qforms::registry::{self, Status};
use qforms::repcount::{bqf_theta, diag4_theta, tri_theta, BinaryForm, DiagQuaternaryForm};
use qforms::{LaurentSeries, Rational};

fn int(s: &LaurentSeries, n: i64) -> i64 {
    s.coeff_i128(n).unwrap_or_else(|| panic!("coefficient of q^{n} is not a tracked integer")) as i64
}

fn primes_upto(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&p| is_prime(p))
}

/// `φ(q^k)` from its product form `E⁵(q^{2k}) / (E²(q^{4k}) E²(q^k))`.
fn phi_eta(k: u32, n: i64) -> LaurentSeries {
    eta(0, &[(2 * k, 5), (4 * k, -2), (k, -2)], n).unwrap()
}

/// `φ(-q^k) = E²(q^k) / E(q^{2k})`.
fn phi_neg_eta(k: u32, n: i64) -> LaurentSeries {
    eta(0, &[(k, 2), (2 * k, -1)], n).unwrap()
}

/// `ψ(q^k) = E²(q^{2k}) / E(q^k)`.
fn psi_eta(k: u32, n: i64) -> LaurentSeries {
    eta(0, &[(2 * k, 2), (k, -1)], n).unwrap()
}

#[test]
fn criterion_01_identity_suite_at_order_512() {
    let start = Instant::now();
    let report = registry::verify_all(Some(512), true).unwrap();
    let elapsed = start.elapsed();
    let failed: Vec<_> = report.results.iter().filter(|r| !r.acceptable()).map(|r| r.id.as_str()).collect();
    assert!(failed.is_empty(), "must-pass failures: {failed:?}");
    assert!(report.results.len() >= 45);
    for anchor in [
        "sum2sq.lambert",
        "jtp.phi",
        "jtp.psi",
        "thm3_1.l1",
        "thm3_1.l2",
        "thm3_1.l3",
        "eta.34",
        "eta.35",
        "thm3_5.r1",
        "thm3_5.r2",
        "thm4_1.P",
        "thm4_1.Q",
        "help.436",
        "thm5_1.P",
        "thm5_1.Q",
        "forty.513",
        "thm6_1.main",
        "rama.69",
        "lambert.613",
        "thm7_1.e1",
        "thm7_1.e4",
        "blk.72528",
        "blk.73942",
        "cor7_3.e1",
        "cor7_3.e4",
        "sec8.sextenary",
        "sec8.remarkable",
    ] {
        let r = report.results.iter().find(|r| r.id == anchor).unwrap_or_else(|| panic!("missing {anchor}"));
        assert_eq!(r.status, Status::Pass, "{anchor}");
    }
    assert!(elapsed < Duration::from_secs(120), "suite took {elapsed:?}");
}

#[test]
fn criterion_02_binary_forms_three_ways_to_20000() {
    const N: i64 = 20_000;
    type Formula = fn(u64) -> i64;
    type Product = fn(i64) -> LaurentSeries;
    let forms: [((i64, i64, i64), Formula, Product); 9] = [
        ((1, 0, 1), closedform::r2, |n| phi_eta(1, n).pow(2)),
        ((1, 0, 5), closedform::rep_1_0_5, |n| phi_eta(1, n) * phi_eta(5, n)),
        // Difference of two eta-quotients whose Lambert forms split the count.
        ((2, 2, 3), closedform::rep_2_2_3, |n| {
            eta(0, &[(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)], n).unwrap()
                - eta(1, &[(1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1)], n).unwrap()
        }),
        ((1, 0, 6), closedform::rep_1_0_6, |n| phi_eta(1, n) * phi_eta(6, n)),
        ((2, 0, 3), closedform::rep_2_0_3, |n| phi_eta(2, n) * phi_eta(3, n)),
        ((1, 0, 15), closedform::rep_1_0_15, |n| phi_eta(1, n) * phi_eta(15, n)),
        ((3, 0, 5), closedform::rep_3_0_5, |n| phi_eta(3, n) * phi_eta(5, n)),
        ((1, 0, 27), closedform::rep_1_0_27, |n| phi_eta(1, n) * phi_eta(27, n)),
        // Parity split of the lattice: even part of φ(q)φ(q²⁷) plus the odd-odd coset.
        ((4, 2, 7), closedform::rep_4_2_7, |n| {
            let even = phi_eta(1, n) * phi_eta(27, n) + phi_neg_eta(1, n) * phi_neg_eta(27, n);
            let coset = (psi_eta(2, n) * psi_eta(54, n)).shift(7) * 2;
            even.scale(&Rational::new(1.into(), 2.into())) + coset
        }),
    ];
    for ((a, b, c), formula, product) in forms {
        let start = Instant::now();
        let lattice = bqf_theta(BinaryForm::new(a, b, c).unwrap(), N);
        let prod = product(N);
        assert!(prod.order() >= N);
        for n in 1..=N {
            let f = formula(n as u64);
            let l = int(&lattice, n);
            let p = int(&prod, n);
            assert!(f == l && l == p, "({a},{b},{c}) at n = {n}: formula {f}, lattice {l}, product {p}");
        }
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(60), "({a},{b},{c}) took {elapsed:?}");
    }
}

#[test]
fn criterion_03_quaternary_counts_to_2000() {
    const N: i64 = 2000;
    let diag = |d: [i64; 4]| diag4_theta(DiagQuaternaryForm::new(d).unwrap(), N);
    let tri = |w: &[i64]| tri_theta(w, N).unwrap();
    let a = diag([1, 5, 5, 5]);
    let b = diag([5, 1, 1, 1]);
    let c = tri(&[1, 1, 1, 5]).shift(1) * 4;
    let d = tri(&[1, 5, 5, 5]).shift(2) * 4;
    for n in 1..=N {
        let k = n as u64;
        assert_eq!(rep_quat(Quat::A, k), int(&a, n), "A at {n}");
        assert_eq!(rep_quat(Quat::B, k), int(&b, n), "B at {n}");
        assert_eq!(rep_quat(Quat::C, k), int(&c, n), "C at {n}");
        assert_eq!(rep_quat(Quat::D, k), int(&d, n), "D at {n}");
    }
}

#[test]
fn criterion_04_quaternary_sign_patterns_to_2000() {
    const N: i64 = 2000;
    let phi3phi5 = phi(1, N).pow(3) * phi(5, N);
    let psi3psi5 = psi(1, N).pow(3) * psi(5, N);
    let phiphi35 = phi(1, N) * phi(5, N).pow(3);
    let psipsi35 = psi(1, N) * psi(5, N).pow(3);
    let mut literal_psi_reading_holds = true;
    for n in 0..=N {
        assert!(int(&phi3phi5, n) > 0, "φ³φ(q⁵) at {n}");
        assert!(int(&psi3psi5, n) > 0, "ψ³ψ(q⁵) at {n}");
        assert_eq!(int(&phiphi35, n) == 0, matches!(n % 5, 2 | 3), "φφ³(q⁵) at {n}");
        // The vanishing classes of ψ(q)ψ³(q⁵) are n ≡ 2, 4 (mod 5), since
        // T + 5(T' + T'' + T''') only reaches residues of triangular numbers.
        let c = int(&psipsi35, n);
        assert!(c >= 0);
        assert_eq!(c == 0, matches!(n % 5, 2 | 4), "ψψ³(q⁵) at {n}");
        literal_psi_reading_holds &= (c > 0) == matches!(n % 5, 2 | 3);
    }
    println!("note: reading the ψψ³(q⁵) pattern as 'positive iff n ≡ 2, 3 (mod 5)' holds: {literal_psi_reading_holds}");
}

#[test]
fn criterion_05_sextenary_inequalities_to_1000() {
    const N: i64 = 1000;
    let psi_side = (psi(1, N) * psi(7, N)).pow(3) - eta(1, &[(14, 7), (2, -1)], N).unwrap();
    let phi_side = (phi(1, N) * phi(7, N)).pow(3) + LaurentSeries::monomial(1, 7, N)
        - eta(2, &[(7, 7), (1, -1)], N).unwrap();
    for n in 0..=N {
        assert!(int(&psi_side, n) >= 0, "ψ inequality at {n}");
        assert!(int(&phi_side, n) >= 0, "φ inequality at {n}");
    }
}

#[test]
fn criterion_06_octic_closed_form_to_4096() {
    const N: i64 = 4096;
    let s = eta(1, &[(16, 4), (32, -1), (8, -1)], N).unwrap();
    for n in 1..=N {
        assert_eq!(thm81_coeff(n as u64), int(&s, n), "n = {n}");
    }
}

#[test]
fn criterion_07_multiplicative_eta_quotients_to_2000() {
    const N: i64 = 2000;
    type Quotient = (&'static str, i64, &'static [(u32, i32)]);
    let quotients: [Quotient; 12] = [
        ("E2E4E5E10/(E1E20)", 0, &[(2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)]),
        ("qE1E2E10E20/(E4E5)", 1, &[(1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1)]),
        ("E2E3E8E12/(E1E24)", 0, &[(2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)]),
        ("qE1E4E6E24/(E3E8)", 1, &[(1, 1), (4, 1), (6, 1), (24, 1), (3, -1), (8, -1)]),
        ("E2²E6E10E30²/(E1E4E15E60)", 0, &[(2, 2), (6, 1), (10, 1), (30, 2), (1, -1), (4, -1), (15, -1), (60, -1)]),
        ("qE2E6²E10²E30/(E3E5E12E20)", 1, &[(2, 1), (6, 2), (10, 2), (30, 1), (3, -1), (5, -1), (12, -1), (20, -1)]),
        ("qE2E3E5E30/(E6E10)", 1, &[(2, 1), (3, 1), (5, 1), (30, 1), (6, -1), (10, -1)]),
        ("E2⁵E10⁷/(E1E4E5³E20³)", 0, &[(2, 5), (10, 7), (1, -1), (4, -1), (5, -3), (20, -3)]),
        ("qE2⁷E10⁵/(E1³E4³E5E20)", 1, &[(2, 7), (10, 5), (1, -3), (4, -3), (5, -1), (20, -1)]),
        ("qE1²E2E10³/E5²", 1, &[(1, 2), (2, 1), (10, 3), (5, -2)]),
        ("qE2³E5²E10/E1²", 1, &[(2, 3), (5, 2), (10, 1), (1, -2)]),
        ("qE6E18", 1, &[(6, 1), (18, 1)]),
    ];
    for (name, shift, factors) in quotients {
        let s = eta(shift, factors, N).unwrap();
        let bad = check_multiplicative(&s, N).unwrap();
        assert!(bad.is_empty(), "{name}: {} violations, first {:?}", bad.len(), bad.first());
    }
}

/// `d(n)`, the coefficient of `q E(q⁶) E(q¹⁸)`, computed pointwise from the
/// lattice: `2d(n) = [n odd] #{x² + 27y² = n} - 2#{x, y ≥ 0 : x(x+1) + 27y(y+1) = n - 7}`.
fn d_lattice(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        return 0;
    }
    let n = n as i64;
    let mut r = 0;
    let mut y = 0;
    while 27 * y * y <= n {
        let rest = n - 27 * y * y;
        let x = num_integer::Roots::sqrt(&rest);
        if x * x == rest {
            r += if x == 0 { 1 } else { 2 } * if y == 0 { 1 } else { 2 };
        }
        y += 1;
    }
    let mut t = 0;
    let m = n - 7;
    let mut y = 0;
    while m >= 0 && 27 * y * (y + 1) <= m {
        let rest = m - 27 * y * (y + 1);
        // x(x+1) = rest  ⇔  (2x+1)² = 4 rest + 1
        let s = num_integer::Roots::sqrt(&(4 * rest + 1));
        if s * s == 4 * rest + 1 {
            t += 1;
        }
        y += 1;
    }
    assert_eq!(r % 2, 0);
    r / 2 - t
}

#[test]
fn criterion_08_cubic_hecke_recursion() {
    const N: i64 = 2048;
    let s = eta(1, &[(6, 1), (18, 1)], N).unwrap();
    let d = |k: u64| int(&s, k as i64);
    for k in 1..=N as u64 {
        assert_eq!(d_lattice(k), d(k), "lattice oracle at {k}");
    }
    for p in primes_upto(N as u64) {
        let chi = kronecker(-108, p) as i64;
        let mut s_exp = 0;
        while p.pow(s_exp + 2) <= N as u64 {
            let lhs = d(p.pow(s_exp + 2));
            let rhs = d(p) * d(p.pow(s_exp + 1)) - chi * d(p.pow(s_exp));
            assert_eq!(lhs, rhs, "p = {p}, s = {s_exp}");
            s_exp += 1;
        }
    }
    for p in primes_upto(200) {
        let expected = if p % 3 != 1 {
            0
        } else if cubic_residue_2(p).unwrap() {
            2
        } else {
            -1
        };
        assert_eq!(d(p), expected, "d({p})");
    }
}

#[test]
fn criterion_09_prime_power_tables() {
    let kernels = [
        (Family::B315, Kernel::K1),
        (Family::C316, Kernel::K2),
        (Family::C440, Kernel::K3),
        (Family::D441, Kernel::K4),
        (Family::C525, Kernel::K5),
        (Family::D526, Kernel::K6),
    ];
    let series = eta(1, &[(6, 1), (18, 1)], 2048).unwrap();
    for p in primes_upto(100) {
        for alpha in 0..=4u32 {
            let n = p.pow(alpha);
            for (family, kernel) in kernels {
                assert_eq!(coeff_prime_power(family, p, alpha).unwrap(), divisor_sum(n, kernel), "{family:?} {p}^{alpha}");
            }
            let table = coeff_prime_power(Family::D618, p, alpha).unwrap();
            let value = if n <= 2048 { int(&series, n as i64) } else { d_lattice(n) };
            assert_eq!(table, value, "D618 {p}^{alpha}");
        }
    }
}

#[test]
fn criterion_10_exploratory_entries_report() {
    for id in ["sec8.hecke_t2", "thm4_1.psi_product_form"] {
        let r = registry::verify(id, Some(512)).unwrap();
        assert!(matches!(r.status, Status::ExploratoryPass | Status::ExploratoryFail), "{id}: {:?}", r.status);
        assert!(r.acceptable());
        println!("{id}: {} first mismatch {:?}", r.status.as_str(), r.first_mismatch);
    }
    let r = registry::verify("sec8.hecke_t2", Some(512)).unwrap();
    assert_eq!(r.first_mismatch, Some(0));
    assert_eq!((r.lhs_coeff.as_deref(), r.rhs_coeff.as_deref()), (Some("0"), Some("1")));

    // U₂ of -Q(-q), read through its divisor-sum form, against the target eta-quotient.
    const N: i64 = 512;
    let minus_q_of_minus_q = LaurentSeries::from_i128(
        0,
        2 * N,
        (0..=2 * N).map(|k| if k == 0 { 0 } else { divisor_sum(k as u64, Kernel::K6) as i128 }).collect(),
    );
    let u2 = hecke_u2_to(&minus_q_of_minus_q, N).unwrap();
    let target = eta(0, &[(6, 2), (10, 2), (2, -1), (30, -1)], N).unwrap();
    assert_eq!((int(&u2, 0), int(&target, 0)), (0, 1));

    // The same target is exactly U₂ of P(q) = E(q)E(q⁶)E(q¹⁰)E(q¹⁵)/(E(q²)E(q³⁰)).
    let p = eta(0, &[(1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1)], 2 * N).unwrap();
    let u2_p = hecke_u2_to(&p, N).unwrap();
    let p_matches = (0..=N).all(|n| int(&u2_p, n) == int(&target, n));
    println!("note: U₂ of E(q)E(q⁶)E(q¹⁰)E(q¹⁵)/(E(q²)E(q³⁰)) equals the target through q^{N}: {p_matches}");

    let mismatches: Vec<(i64, i64, i64)> =
        (1..=N).filter(|&n| int(&u2, n) != int(&target, n)).map(|n| (n, int(&u2, n), int(&target, n))).collect();
    assert!(
        mismatches.is_empty(),
        "U₂(-Q(-q)) differs from the target at {} coefficients with 1 <= n <= {N}; first (n, U₂, target): {:?}",
        mismatches.len(),
        &mismatches[..mismatches.len().min(5)]
    );
}
