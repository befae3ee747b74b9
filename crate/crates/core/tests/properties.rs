use proptest::prelude::*;

use spinrefl::phi;
use spinrefl::report::{self, Scalar};
use spinrefl::scalars::{format_rational, parse_rational, Cyclo, CycloReal, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Random Σ q_j ζ_m^j for m in the tested conductors.
fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::sample::select(vec![8u32, 20, 40, 56]).prop_flat_map(|m| {
        prop::collection::vec((0..m as i64, small_rational()), 1..5)
            .prop_map(move |terms| terms.iter().map(|(j, q)| Cyclo::zeta(m, *j).scale(q)).sum())
    })
}

fn real() -> impl Strategy<Value = CycloReal> {
    cyclo().prop_map(|x| CycloReal::new(&x + &x.conj()).expect("x + conj(x) is real"))
}

fn close(a: &Cyclo, b: &Cyclo) -> bool {
    let (ar, ai) = a.to_complex();
    let (br, bi) = b.to_complex();
    (ar - br).abs() < 1e-10 && (ai - bi).abs() < 1e-10
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Cyclo::one());
            prop_assert_eq!(&(&b * &a) / &a, b.clone());
        }
    }

    #[test]
    fn realness_is_closed(a in real(), b in real()) {
        for x in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(x.as_cyclo().is_real());
        }
        if !b.is_zero() {
            prop_assert!(a.try_div(&b).unwrap().as_cyclo().is_real());
        }
        if (a.to_f64() - b.to_f64()).abs() > 1e-9 {
            prop_assert_eq!(a < b, a.to_f64() < b.to_f64());
        }
    }

    #[test]
    fn text_round_trip(a in cyclo(), q in small_rational()) {
        prop_assert_eq!(a.to_string().parse::<Cyclo>().unwrap(), a.clone());
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn scalar_json_round_trip(a in cyclo()) {
        let s = Scalar::from(&a);
        let back: Scalar = serde_json::from_str(&report::to_json(&s)).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.exact().unwrap(), a);
    }

    #[test]
    fn trigonometric_sums(a in 1u32..=20, q in -40i64..=40, n in 1u32..=24) {
        let degenerate = q.rem_euclid(2 * n as i64) == 0;
        match (phi::cos_sum_closed(a, q, n), phi::weighted_cos_sum_closed(a, q, n)) {
            (Ok(plain), Ok(weighted)) => {
                prop_assert!(!degenerate);
                prop_assert_eq!(plain, phi::cos_sum_direct(a, q, n));
                prop_assert_eq!(weighted, phi::weighted_cos_sum_direct(a, q, n));
            }
            _ => prop_assert!(degenerate),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_agrees_with_numerics(a in cyclo(), b in cyclo()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a == b, close(&a, &b));
        // the same value reached through a detour must compare equal
        let detour = &(&(&a * &b) + &a) - &(&a * &b);
        prop_assert_eq!(&detour, &a);
    }
}

#[test]
fn cosine_addition_law() {
    for n in 1..=12u32 {
        for a in 0..2 * n as i64 {
            for b in 0..2 * n as i64 {
                let lhs = CycloReal::make_cos(a + b, n);
                let rhs = CycloReal::make_cos(a, n) * CycloReal::make_cos(b, n)
                    - CycloReal::make_sin(a, n) * CycloReal::make_sin(b, n);
                assert_eq!(lhs, rhs, "n={n} a={a} b={b}");
            }
        }
    }
}
