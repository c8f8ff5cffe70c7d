use capelli_core::fusion::{fusion_limit, phi_lambda_mu, pole_order, pole_order_phi};
use capelli_core::ring::{factorial, rat};
use capelli_core::tensormat::{e_lambda_poly, f_lambda, perm_to_matrix, r_lambda_mu_pole_order};
use capelli_core::weyl::ugl_to_weyl;
use capelli_core::{GroupAlgebraElement, Permutation, Rational, UglElement, YoungDiagram};
use proptest::prelude::*;

fn shape(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

#[test]
fn projector_is_image_of_the_fusion_limit() {
    for n in 1..=3 {
        for l in YoungDiagram::all_of_size(n) {
            let scale = Rational::from_integer(l.dimension()) / factorial(n);
            let limit = fusion_limit(&l).unwrap().scale(&scale);
            assert_eq!(perm_to_matrix(&limit, 2), f_lambda(&l, 2), "{l}");
        }
    }
}

#[test]
fn matrix_pole_never_exceeds_group_algebra_pole() {
    for (a, b) in [("1", "1"), ("2", "1"), ("1,1", "1"), ("2", "1,1"), ("1,1", "2"), ("2", "2"), ("1,1", "1,1")] {
        let (l, m) = (shape(a), shape(b));
        let phi = pole_order(&phi_lambda_mu(&l, &m), &rat(0));
        assert_eq!(phi, pole_order_phi(&l, &m));
        for big_n in 1..=2 {
            if l.num_rows() <= big_n && m.num_rows() <= big_n {
                assert!(r_lambda_mu_pole_order(&l, &m, big_n) <= phi, "{l} {m} {big_n}");
            }
        }
    }
}

/// `χ(σ) = (n!/|class(σ)|) Σ_{ρ ∈ class(σ)} y_ρ` for the idempotent `y`.
fn character_from_idempotent(l: &YoungDiagram, sigma: &Permutation) -> Rational {
    let y: GroupAlgebraElement<Rational> = l.y_coefficients();
    let class: Vec<Permutation> = Permutation::all(l.size()).into_iter().filter(|p| p.cycle_type() == sigma.cycle_type()).collect();
    let sum: Rational = class.iter().map(|p| y.coeff(p)).sum();
    sum * factorial(l.size()) / Rational::from_integer((class.len() as i64).into())
}

#[test]
fn characters_agree_with_idempotents() {
    for n in 1..=3 {
        for l in YoungDiagram::all_of_size(n) {
            for sigma in Permutation::all(n) {
                assert_eq!(l.character(&sigma).unwrap(), character_from_idempotent(&l, &sigma), "{l} {sigma}");
            }
        }
    }
}

#[test]
fn leading_coefficient_is_trace() {
    for l in YoungDiagram::all_of_size(2) {
        for big_n in 1..=3 {
            let poly = e_lambda_poly(&l, big_n);
            let top = poly.coeff(l.size());
            assert_eq!(top, UglElement::scalar(f_lambda(&l, big_n).trace()));
            assert!(poly.degree().is_none_or(|d| d <= l.size()));
        }
    }
}

fn ugl_strategy(n: usize) -> impl Strategy<Value = UglElement> {
    let word = prop::collection::vec((1..=n, 1..=n), 0..3);
    prop::collection::vec((word, -3i64..4), 1..4)
        .prop_map(move |terms| UglElement::from_words(n, terms.into_iter().map(|(w, c)| (w, rat(c)))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn weyl_image_is_multiplicative(a in ugl_strategy(2), b in ugl_strategy(2), m in 1usize..=2) {
        let lhs = ugl_to_weyl(&a.try_mul(&b).unwrap(), 2, m).unwrap();
        let rhs = ugl_to_weyl(&a, 2, m).unwrap().try_mul(&ugl_to_weyl(&b, 2, m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
