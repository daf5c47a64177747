use num_rational::BigRational;
use proptest::prelude::*;

use intdiff::operator::normalize_word;
use intdiff::oracle::check_product;
use intdiff::{CanonicalOperator, Generator, HPoly, Word, XPoly};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Generator::X),
        Just(Generator::Del),
        Just(Generator::Int),
        Just(Generator::H),
        (0usize..4, 0usize..4).prop_map(|(i, j)| Generator::E(i, j)),
    ]
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(generator(), 0..6)), 1..3)
        .prop_map(|terms| Word::new(terms.into_iter().map(|(c, l)| (q(c), l)).collect()))
}

fn operator() -> impl Strategy<Value = CanonicalOperator> {
    word().prop_map(|w| normalize_word(&w))
}

fn poly() -> impl Strategy<Value = XPoly> {
    prop::collection::vec(-4i64..=4, 0..8).prop_map(|c| XPoly::from_coeffs(c.into_iter().map(q).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn unit_and_zero(a in operator()) {
        let one = CanonicalOperator::one();
        prop_assert_eq!(&one * &a, a.clone());
        prop_assert_eq!(&a * &one, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn grading_is_multiplicative(a in operator(), b in operator(), i in -4i64..=4, j in -4i64..=4) {
        let p = &a.grade_component(i) * &b.grade_component(j);
        prop_assert_eq!(p.grade_component(i + j), p);
    }

    #[test]
    fn f_is_an_ideal(a in operator(), i in 0usize..5, j in 0usize..5) {
        let e = CanonicalOperator::eij(i, j);
        prop_assert!((&a * &e).is_in_f());
        prop_assert!((&e * &a).is_in_f());
    }

    #[test]
    fn projection_to_b1_is_multiplicative(a in operator(), b in operator()) {
        prop_assert_eq!((&a * &b).project_to_b1(), &a.project_to_b1() * &b.project_to_b1());
    }

    #[test]
    fn canonical_form_acts_like_the_word(w in word(), p in poly()) {
        prop_assert_eq!(normalize_word(&w).apply(&p), w.act(&p));
    }

    #[test]
    fn products_pass_the_oracle(a in operator(), b in operator()) {
        prop_assert!(check_product(&a, &b, 30));
    }

    #[test]
    fn h_polynomials_commute_with_grade_zero(c in prop::collection::vec(-3i64..=3, 0..4), d in prop::collection::vec(-3i64..=3, 0..4)) {
        let f = CanonicalOperator::diag_term(0, HPoly::from_coeffs(c.into_iter().map(q).collect()));
        let g = CanonicalOperator::diag_term(0, HPoly::from_coeffs(d.into_iter().map(q).collect()));
        prop_assert_eq!(&f * &g, &g * &f);
    }
}
