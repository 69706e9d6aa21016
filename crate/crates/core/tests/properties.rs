use proptest::prelude::*;

use qforms::expr::{eval_expr, parse_expr, AddOp, Arg, Expr, Name};
use qforms::lambert::{expand, LambertSpec};
use qforms::qfunctions::{phi, psi, theta_f, Monomial};
use qforms::registry::{self, Status};
use qforms::repcount::{bqf_theta, diag4_theta, tri_theta, BinaryForm, DiagQuaternaryForm};
use qforms::{LaurentSeries, Rational};

fn same(a: &LaurentSeries, b: &LaurentSeries) -> bool {
    let n = a.order().min(b.order());
    a.equal_upto(b, n).unwrap().0
}

fn series() -> impl Strategy<Value = LaurentSeries> {
    (-2i64..3, 8i64..24).prop_flat_map(|(min, order)| {
        prop::collection::vec(-6i128..7, (order - min + 1) as usize)
            .prop_map(move |v| LaurentSeries::from_i128(min, order, v))
    })
}

fn unit_series() -> impl Strategy<Value = LaurentSeries> {
    (prop::bool::ANY, prop::collection::vec(-4i128..5, 20)).prop_map(|(neg, mut v)| {
        v[0] = if neg { -1 } else { 1 };
        LaurentSeries::from_i128(0, 19, v)
    })
}

proptest! {
    #[test]
    fn mul_is_commutative(a in series(), b in series()) {
        prop_assert!(same(&(&a * &b), &(&b * &a)));
    }

    #[test]
    fn mul_is_associative(a in series(), b in series(), c in series()) {
        prop_assert!(same(&(&(&a * &b) * &c), &(&a * &(&b * &c))));
    }

    #[test]
    fn mul_distributes_over_add(a in series(), b in series(), c in series()) {
        prop_assert!(same(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn inverse_of_a_unit(s in unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert!(same(&(&s * &inv), &LaurentSeries::one(19)));
        prop_assert!(same(&LaurentSeries::one(19).div(&s).unwrap(), &inv));
    }

    #[test]
    fn compose_power_composes(s in series(), a in 1u32..4, b in 1u32..4) {
        prop_assert!(same(&s.compose_power(a).compose_power(b), &s.compose_power(a * b)));
    }

    #[test]
    fn negate_variable_is_multiplicative(a in series(), b in series()) {
        let lhs = (&a * &b).negate_variable();
        let rhs = &a.negate_variable() * &b.negate_variable();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn theta_f_is_symmetric(ea in 0i64..5, eb in 1i64..7, sa in prop::bool::ANY, sb in prop::bool::ANY) {
        let m = |s: bool, e: i64| if s { Monomial::neg_q(e) } else { Monomial::q(e) };
        let x = theta_f(m(sa, ea), m(sb, eb), 60).unwrap();
        let y = theta_f(m(sb, eb), m(sa, ea), 60).unwrap();
        prop_assert!(same(&x, &y));
        prop_assert!(x.is_integral());
    }

    #[test]
    fn bqf_theta_is_unimodular_invariant(a in 1i64..6, b in -6i64..7, extra in 1i64..6) {
        // choose c so that b² - 4ac < 0
        let c = (b * b) / (4 * a) + extra;
        let f = bqf_theta(BinaryForm::new(a, b, c).unwrap(), 120);
        let g = bqf_theta(BinaryForm::new(a, b + 2 * a, a + b + c).unwrap(), 120);
        prop_assert_eq!(f, g);
    }

    #[test]
    fn tri_theta_is_a_psi_product(w in prop::collection::vec(1i64..8, 1..4)) {
        let product = w.iter().fold(LaurentSeries::one(80), |acc, &k| acc * psi(k as u32, 80));
        prop_assert!(same(&tri_theta(&w, 80).unwrap(), &product));
    }

    #[test]
    fn diag4_theta_is_a_phi_product(d in prop::array::uniform4(1i64..8)) {
        let product = d.iter().fold(LaurentSeries::one(80), |acc, &k| acc * phi(k as u32, 80));
        prop_assert!(same(&diag4_theta(DiagQuaternaryForm::new(d).unwrap(), 80), &product));
    }

    #[test]
    fn bilateral_reflection(c in 2i64..7, a_frac in 1i64..6, b in 0i64..4, d in 1i64..6) {
        // n -> -n turns Σ q^{An+B}/(1 + q^{Cn+D}) into Σ q^{(C-A)n+B-D}/(1 + q^{Cn-D}).
        let a = 1 + a_frac % (c - 1);
        let lhs = expand(&LambertSpec::bilateral(a, b, c, d, 1), 60).unwrap();
        let rhs = expand(&LambertSpec::bilateral(c - a, b - d, c, -d, 1), 60).unwrap();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn bilateral_shift(c in 2i64..7, a_frac in 1i64..6, b in 0i64..4, d in 1i64..6, k in -3i64..4) {
        let a = 1 + a_frac % (c - 1);
        let lhs = expand(&LambertSpec::bilateral(a, b, c, d, 1), 60).unwrap();
        let rhs = expand(&LambertSpec::bilateral(a, b + a * k, c, d + c * k, 1), 60).unwrap();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn minus_q_toggles_alternation(half_a in 0i64..3, b in 0i64..3, half_c in 1i64..4, half_d in 0i64..3, s in prop::bool::ANY) {
        // With an even denominator exponent and odd A, q -> -q only flips the numerator sign by (-1)^{n+B}.
        let (a, c, d) = (2 * half_a + 1, 2 * half_c, 2 * half_d);
        let sign = if s { 1 } else { -1 };
        let spec = LambertSpec::unilateral(a, b, c, d, sign);
        let lhs = expand(&spec, 50).unwrap().negate_variable();
        let rhs = expand(&spec.alternating(), 50).unwrap();
        let rhs = if b % 2 == 1 { -rhs } else { rhs };
        prop_assert!(same(&lhs, &rhs));
    }
}

fn mono() -> impl Strategy<Value = Monomial> {
    (prop::bool::ANY, 0i64..7).prop_map(|(neg, e)| Monomial { sign: if neg { -1 } else { 1 }, exponent: e })
}

fn positive_mono() -> impl Strategy<Value = Monomial> {
    (prop::bool::ANY, 1i64..7).prop_map(|(neg, e)| Monomial { sign: if neg { -1 } else { 1 }, exponent: e })
}

fn leaf() -> impl Strategy<Value = Expr> {
    let unary = prop_oneof![Just(Name::E), Just(Name::Phi), Just(Name::Psi), Just(Name::G), Just(Name::H)];
    prop_oneof![
        (0u32..40).prop_map(|k| Expr::Scalar(Rational::from_integer(k.into()))),
        mono().prop_map(Expr::Monomial),
        (unary, positive_mono()).prop_map(|(n, m)| Expr::Call(n, vec![Arg::Monomial(m)])),
        (mono(), mono()).prop_map(|(a, b)| Expr::Call(Name::F, vec![Arg::Monomial(a), Arg::Monomial(b)])),
        (1i64..4, -3i64..4, 1i64..4).prop_map(|(a, b, c)| Expr::Call(Name::QF, vec![Arg::Int(a), Arg::Int(b), Arg::Int(c)])),
    ]
}

fn ast() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), prop::bool::ANY, inner.clone()).prop_map(|(a, plus, b)| {
                Expr::Sum(Box::new(a), if plus { AddOp::Plus } else { AddOp::Minus }, Box::new(b))
            }),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Product(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Quotient(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, k)| Expr::Power(Box::new(a), k)),
        ]
    })
}

/// Expressions that always evaluate: no quotients, no `f`, definite forms only.
fn evaluable() -> impl Strategy<Value = Expr> {
    let unary = prop_oneof![Just(Name::E), Just(Name::Phi), Just(Name::Psi), Just(Name::G), Just(Name::H)];
    let leaf = prop_oneof![
        (0u32..9).prop_map(|k| Expr::Scalar(Rational::from_integer(k.into()))),
        mono().prop_map(Expr::Monomial),
        (unary, positive_mono()).prop_map(|(n, m)| Expr::Call(n, vec![Arg::Monomial(m)])),
        (1i64..6).prop_map(|c| Expr::Call(Name::QF, vec![Arg::Int(1), Arg::Int(0), Arg::Int(c)])),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), prop::bool::ANY, inner.clone()).prop_map(|(a, plus, b)| {
                Expr::Sum(Box::new(a), if plus { AddOp::Plus } else { AddOp::Minus }, Box::new(b))
            }),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Product(Box::new(a), Box::new(b))),
            (inner, 0u32..3).prop_map(|(a, k)| Expr::Power(Box::new(a), k)),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_round_trips(e in ast()) {
        let text = e.to_string();
        prop_assert_eq!(parse_expr(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn evaluation_is_compositional(a in evaluable(), b in evaluable()) {
        const N: i64 = 24;
        let (ea, eb) = (eval_expr(&a, N).unwrap(), eval_expr(&b, N).unwrap());
        let product = eval_expr(&Expr::Product(Box::new(a.clone()), Box::new(b.clone())), N).unwrap();
        prop_assert!(same(&product, &(&ea * &eb)));
        let difference = eval_expr(&Expr::Sum(Box::new(a), AddOp::Minus, Box::new(b)), N).unwrap();
        prop_assert!(same(&difference, &(&ea - &eb)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn passing_entries_pass_at_lower_orders(index in 0usize..1000, order in 0i64..48) {
        let catalog = registry::catalog();
        let entry = catalog[index % catalog.len()];
        if registry::verify_entry(&entry, 48).unwrap().status == Status::Pass {
            prop_assert_eq!(registry::verify_entry(&entry, order).unwrap().status, Status::Pass, "{}", entry.id);
        }
    }
}

#[test]
fn must_pass_integral_sides_have_integer_coefficients() {
    for e in registry::catalog().iter().filter(|e| e.integral && e.expectation == registry::Expectation::MustPass) {
        for side in [e.lhs, e.rhs] {
            let s = side(96).unwrap();
            assert!(s.is_integral(), "{} has a non-integral side", e.id);
        }
    }
}

#[test]
fn reports_are_deterministic_across_execution_modes() {
    let strip = |mut r: registry::Report| {
        for x in &mut r.results {
            x.elapsed_ms = 0;
        }
        r
    };
    let serial = strip(registry::verify_all(Some(96), false).unwrap());
    let parallel = strip(registry::verify_all(Some(96), true).unwrap());
    let again = strip(registry::verify_all(Some(96), true).unwrap());
    assert_eq!(serial, parallel);
    assert_eq!(parallel, again);
    assert_eq!(serial.order, Some(96));
}

#[test]
fn default_orders_are_honored() {
    let r = registry::verify_all(None, true).unwrap();
    for (x, e) in r.results.iter().zip(registry::catalog()) {
        assert_eq!(x.id, e.id);
        assert_eq!(x.order, e.default_order);
    }
}
