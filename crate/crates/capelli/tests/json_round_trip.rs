use capelli::json::{group_element_from_json, rational_from_json, rational_function_from_json, render, ugl_from_json, weyl_from_json, ToJson};
use capelli_core::ring::frac;
use capelli_core::weyl::WeylMonomial;
use capelli_core::{GroupAlgebraElement, Permutation, RationalFunction, UglElement, UniPoly, Var, WeylElement};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = capelli_core::Rational> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #[test]
    fn rationals(r in rational()) {
        prop_assert_eq!(rational_from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn group_elements(terms in prop::collection::vec((Just((1..=4).collect::<Vec<usize>>()).prop_shuffle(), rational()), 0..6)) {
        let x = GroupAlgebraElement::from_terms(4, terms.into_iter().map(|(i, c)| (Permutation::from_images(&i).unwrap(), c))).unwrap();
        let back = group_element_from_json(&x.to_json(), Some(4), rational_from_json).unwrap();
        prop_assert_eq!(render(&back.to_json()), render(&x.to_json()));
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rational_functions(num in prop::collection::vec(rational(), 0..4), den in prop::collection::vec(rational(), 1..4)) {
        let den = UniPoly::from_coeffs(Var::Z, den);
        prop_assume!(!den.is_zero());
        let f = RationalFunction::new(UniPoly::from_coeffs(Var::Z, num), den).unwrap();
        prop_assert_eq!(rational_function_from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn enveloping_elements(terms in prop::collection::vec((prop::collection::vec((1usize..=3, 1usize..=3), 0..4), rational()), 0..5)) {
        let x = UglElement::from_words(3, terms).unwrap();
        prop_assert_eq!(ugl_from_json(&x.to_json(), 3).unwrap(), x);
    }

    #[test]
    fn weyl_elements(terms in prop::collection::vec((prop::collection::vec(0u32..3, 6), prop::collection::vec(0u32..3, 6), rational()), 0..5)) {
        let x = WeylElement::from_terms(2, 3, terms.into_iter().map(|(x, d, c)| (WeylMonomial { x, d }, c))).unwrap();
        prop_assert_eq!(weyl_from_json(&x.to_json(), 2, 3).unwrap(), x);
    }
}
