use tauto_core::bfunction::{minimal_polynomial_of_theta, BFunctionOutcome, UniPoly};
use tauto_core::catalog::{quadric_cone, segre_cone};
use tauto_core::rational::{rat, ratio, Rational};
use tauto_core::repdata::Character;
use tauto_core::tautsys::{build_taut, e_less_bfunction, is_nonzero, is_nonzero_checked};
use tauto_core::weyl::{weyl_normal_form, WeylElement};

fn found(outcome: BFunctionOutcome) -> tauto_core::bfunction::BFunction {
    match outcome {
        BFunctionOutcome::Found(b) => b,
        other => panic!("no b-function: {other:?}"),
    }
}

#[test]
fn quadric_cone_b_function() {
    let (rep, y) = quadric_cone().unwrap();
    let b = found(e_less_bfunction(&rep, &y, &Character::zero(rep.lie()), 16).unwrap());
    assert_eq!(b.poly, UniPoly::from_roots(&[rat(0), rat(1)]));
    assert!(b.certificate);
    assert!(b.is_minimal());
}

#[test]
fn segre_cone_b_function() {
    let (rep, y) = segre_cone().unwrap();
    let b = found(e_less_bfunction(&rep, &y, &Character::zero(rep.lie()), 16).unwrap());
    assert_eq!(b.poly, UniPoly::from_roots(&[rat(0), rat(2)]));
    assert!(b.is_minimal());
}

#[test]
fn theta_squared_reduces_to_span_of_one_and_theta() {
    // with b = s² − s, θ² ≡ θ modulo the e-less ideal
    let (rep, y) = quadric_cone().unwrap();
    let t0 = build_taut(&rep, &y, &Character::zero(rep.lie()), false).unwrap();
    let theta = t0.theta().unwrap();
    let lhs = weyl_normal_form(&theta.mul(&theta), &t0.weyl_ideal).unwrap();
    let rhs = weyl_normal_form(&theta, &t0.weyl_ideal).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn nonvanishing_matches_roots() {
    let (rep, y) = quadric_cone().unwrap();
    let b = found(e_less_bfunction(&rep, &y, &Character::zero(rep.lie()), 16).unwrap());
    let scan: Vec<Rational> = vec![
        rat(-2),
        rat(-1),
        ratio(-1, 2),
        rat(0),
        ratio(1, 2),
        rat(1),
        ratio(3, 2),
        rat(2),
    ];
    for v in scan {
        let beta = Character::scaling(rep.lie(), v.clone()).unwrap();
        let t = build_taut(&rep, &y, &beta, true).unwrap();
        let nz = is_nonzero_checked(&t, &b.poly).unwrap();
        assert_eq!(nz, v == rat(0) || v == rat(1), "β(e) = {v}");
    }
}

#[test]
fn minimal_polynomial_rejects_non_normalizing_operator() {
    let (rep, y) = quadric_cone().unwrap();
    let t0 = build_taut(&rep, &y, &Character::zero(rep.lie()), false).unwrap();
    let x1 = WeylElement::x(3, 0);
    assert!(minimal_polynomial_of_theta(&t0.weyl_ideal, &x1, 4).is_err());
    let t = build_taut(&rep, &y, &Character::scaling(rep.lie(), ratio(1, 2)).unwrap(), true)
        .unwrap();
    assert!(!is_nonzero(&t).unwrap());
}
