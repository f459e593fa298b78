use proptest::prelude::*;
use tauto_core::ideal::is_groebner_basis;
use tauto_core::rational::rat;
use tauto_core::weyl::is_left_groebner_basis;
use tauto_core::{
    groebner, weyl_left_groebner, Monomial, Poly, PolyIdeal, TermOrder, WeylElement, WeylIdeal,
};

const N: usize = 3;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u32..3, N), -3i64..4), 1..4).prop_map(|ts| {
        ts.into_iter().fold(Poly::zero(N), |p, (e, c)| {
            p.add(&Poly::monomial(Monomial(e), rat(c)))
        })
    })
}

fn weyl() -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(
        (prop::collection::vec(0u32..2, 2), prop::collection::vec(0u32..2, 2), -2i64..3),
        1..3,
    )
    .prop_map(|ts| {
        ts.into_iter().fold(WeylElement::zero(2), |p, (a, b, c)| {
            p.add(&WeylElement::from_xd(2, &a, &b, rat(c)))
        })
    })
}

fn orders() -> Vec<TermOrder> {
    vec![TermOrder::DegRevLex, TermOrder::Lex, TermOrder::Weighted(vec![1, 2, 3])]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(poly(), 1..3)) {
        for order in orders() {
            let ideal = PolyIdeal::with_order(N, gens.clone(), order.clone()).unwrap();
            let gb = groebner(&ideal, &order).unwrap();
            prop_assert!(is_groebner_basis(&gb, &order));
            for g in &gens {
                prop_assert!(ideal.normal_form(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent(gens in prop::collection::vec(poly(), 1..3), f in poly()) {
        let ideal = PolyIdeal::new(N, gens).unwrap();
        let once = ideal.normal_form(&f).unwrap();
        prop_assert_eq!(ideal.normal_form(&once).unwrap(), once.clone());
        // f − NF(f) lies in the ideal
        prop_assert!(ideal.contains(&f.sub(&once)).unwrap());
    }

    #[test]
    fn basis_ignores_generator_order(gens in prop::collection::vec(poly(), 1..4)) {
        let mut rev = gens.clone();
        rev.reverse();
        let a = groebner(&PolyIdeal::new(N, gens).unwrap(), &TermOrder::DegRevLex).unwrap();
        let b = groebner(&PolyIdeal::new(N, rev).unwrap(), &TermOrder::DegRevLex).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn weyl_product_is_associative(a in weyl(), b in weyl(), c in weyl()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn weyl_left_basis_contains_generators(gens in prop::collection::vec(weyl(), 1..3)) {
        let order = TermOrder::DegRevLex;
        let ideal = WeylIdeal::with_order(2, gens.clone(), order.clone()).unwrap();
        let gb = weyl_left_groebner(&ideal, &order).unwrap();
        prop_assert!(is_left_groebner_basis(&gb, &order));
        for g in &gens {
            prop_assert!(ideal.normal_form(g).unwrap().is_zero());
        }
    }
}

#[test]
fn canonical_commutator() {
    let x = WeylElement::x(1, 0);
    let d = WeylElement::d(1, 0);
    assert_eq!(d.commutator(&x), WeylElement::one(1));
}

#[test]
fn lex_is_rejected_for_weyl() {
    let ideal = WeylIdeal::new(1, vec![WeylElement::d(1, 0)]).unwrap();
    assert!(weyl_left_groebner(&ideal, &TermOrder::Lex).is_err());
}
