use proptest::prelude::*;
use tauto_core::bfunction::{BFunctionOutcome, UniPoly};
use tauto_core::catalog::{quadric_cone, segre_cone};
use tauto_core::dualpar::{
    b_symmetry_check, dual_parameter, duality_report, finite_exception_set, gkz_dual,
    gorenstein_gamma_ci, in_nonpositive_window, in_plus_window, lfd_window_check,
    simple_root_duality, GammaSource, LfdWindow, TheoremTag,
};
use tauto_core::rational::{rat, ratio, Rational};
use tauto_core::repdata::Character;
use tauto_core::tautsys::e_less_bfunction;

fn b_of(outcome: BFunctionOutcome) -> UniPoly {
    match outcome {
        BFunctionOutcome::Found(b) => b.poly,
        other => panic!("{other:?}"),
    }
}

#[test]
fn ci_gamma_for_cones() {
    let (rep, y) = quadric_cone().unwrap();
    assert_eq!(gorenstein_gamma_ci(&rep, &y).unwrap().values(), &[rat(1), rat(0), rat(0), rat(0)]);
    let (rep, y) = segre_cone().unwrap();
    let g = gorenstein_gamma_ci(&rep, &y).unwrap();
    assert_eq!(g.get(0), &rat(2));
    assert!(g.values()[1..].iter().all(|v| *v == rat(0)));
}

#[test]
fn quadric_dual_parameter() {
    let (rep, y) = quadric_cone().unwrap();
    let lie = rep.lie();
    let beta = Character::scaling(lie, rat(1)).unwrap();
    let gamma = gorenstein_gamma_ci(&rep, &y).unwrap();
    let tilde = dual_parameter(&beta, &gamma, lie).unwrap();
    assert!(tilde.is_zero());
    assert_eq!(dual_parameter(&tilde, &gamma, lie).unwrap(), beta);
}

#[test]
fn symmetry_from_computed_b_functions() {
    for (build, gamma_e, roots) in [
        (quadric_cone as fn() -> _, rat(1), [rat(0), rat(1)]),
        (segre_cone, rat(2), [rat(0), rat(2)]),
    ] {
        let (rep, y) = build().unwrap();
        let b = b_of(e_less_bfunction(&rep, &y, &Character::zero(rep.lie()), 12).unwrap());
        assert_eq!(b, UniPoly::from_roots(&roots));
        let gamma = gorenstein_gamma_ci(&rep, &y).unwrap();
        assert_eq!(gamma.get(0), &gamma_e);
        assert!(b_symmetry_check(&b, &b, &gamma_e));
    }
}

#[test]
fn simple_root_reports() {
    let (rep, y) = quadric_cone().unwrap();
    let lie = rep.lie();
    let b = UniPoly::from_roots(&[rat(0), rat(1)]);
    let r = simple_root_duality(&b, &rep, &y, &Character::scaling(lie, rat(1)).unwrap(), None).unwrap();
    assert!(r.has(TheoremTag::SimpleRoot));
    assert!(r.beta_tilde.unwrap().is_zero());
    let r = simple_root_duality(&b, &rep, &y, &Character::scaling(lie, rat(5)).unwrap(), None).unwrap();
    assert!(r.module_is_zero);
    assert!(r.theorems.is_empty());
    let double = UniPoly::from_roots(&[rat(0), rat(0)]);
    let r = simple_root_duality(&double, &rep, &y, &Character::zero(lie), None).unwrap();
    assert!(!r.has(TheoremTag::SimpleRoot));
}

/// `A·u` for the exponent vector of the monomial `x^u`.
fn a_degree(a: &[Vec<i64>], u: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(u).map(|(x, y)| x * y).sum()).collect()
}

#[test]
fn gkz_dual_parameters() {
    let a = vec![vec![1, 1, 1], vec![0, 1, 2]];
    // x1 x3 − x2² has A-degree A·(1,0,1) = A·(0,2,0); trace∘dρ is the row sums
    let w = a_degree(&a, &[1, 0, 1]);
    assert_eq!(w, a_degree(&a, &[0, 2, 0]));
    let trace: Vec<i64> = a.iter().map(|r| r.iter().sum()).collect();
    let gamma: Vec<Rational> = trace.iter().zip(&w).map(|(t, w)| rat(t - w)).collect();
    assert_eq!(gamma, vec![rat(1), rat(1)]);
    for beta in [vec![rat(0), rat(0)], vec![ratio(1, 2), rat(-3)]] {
        let r = gkz_dual(&a, &beta, None).unwrap();
        assert_eq!(r.gamma_source, GammaSource::GradedCi);
        assert!(r.trace_ad.is_zero());
        let expect: Vec<Rational> = gamma.iter().zip(&beta).map(|(g, b)| g - b).collect();
        assert_eq!(r.beta_tilde.as_ref().unwrap().values(), &expect[..]);
        assert!(r.has(TheoremTag::DimEqual) && r.has(TheoremTag::Gkz));
        assert_eq!(r.shift, 0);
    }

    let r = gkz_dual(&[vec![1, 0], vec![0, 1]], &[rat(0), ratio(1, 3)], None).unwrap();
    assert_eq!(r.beta_tilde.unwrap().values(), &[rat(1), ratio(2, 3)]);

    let r = gkz_dual(&[vec![1, 1]], &[rat(4)], None).unwrap();
    assert_eq!(r.beta_tilde.unwrap().values(), &[rat(-3)]);
}

#[test]
fn gkz_without_ci_needs_gamma() {
    // the rational normal curve of degree 3 is not a complete intersection
    let a = vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]];
    let r = gkz_dual(&a, &[rat(0), rat(0)], None).unwrap();
    assert_eq!(r.gamma_source, GammaSource::Unknown);
    assert!(r.beta_tilde.is_none());
    assert!(r.has(TheoremTag::CmOnly));
    let r = gkz_dual(&a, &[rat(0), rat(0)], Some(&[rat(2), rat(3)])).unwrap();
    assert_eq!(r.gamma_source, GammaSource::User);
    assert_eq!(r.beta_tilde.unwrap().values(), &[rat(2), rat(3)]);
}

#[test]
fn cone_report_tags() {
    let (rep, y) = quadric_cone().unwrap();
    let r = duality_report(&rep, &y, &Character::zero(rep.lie()), None).unwrap();
    assert_eq!(r.gamma_source, GammaSource::CiFormula);
    assert!(r.has(TheoremTag::GorensteinGeneral));
    assert!(!r.has(TheoremTag::DimEqual));
    assert_eq!(r.shift, -2);
    assert_eq!(r.to_json()["beta_tilde"][0], r.to_json()["gamma"]["value"][0]);
}

#[test]
fn lfd_examples() {
    let w = LfdWindow::new(3, vec![rat(-1)], rat(-2)).unwrap();
    let c = lfd_window_check(&w);
    assert!(c.dag_image && !c.plus_image && !c.simple_pure);
    // −2 ∈ ½Z and −2 ∉ {1, 2, …}
    assert!(c.duality_morphism);

    let c = lfd_window_check(&LfdWindow::new(3, vec![rat(-1)], ratio(1, 3)).unwrap());
    assert!(c.dag_image && c.plus_image && c.simple_pure && !c.duality_morphism);

    let c = lfd_window_check(&LfdWindow::new(3, vec![rat(-1)], ratio(1, 2)).unwrap());
    assert!(c.duality_morphism && c.simple_pure);

    assert!(LfdWindow::new(3, vec![], rat(0)).is_err());
    assert!(LfdWindow::new(0, vec![rat(-1)], rat(0)).is_err());
}

#[test]
fn exception_set_is_in_both_windows() {
    let roots = vec![rat(-1), ratio(-2, 3)];
    let e = finite_exception_set(&roots, 3);
    assert_eq!(e, vec![rat(1)]);
    let s = LfdWindow::new(3, roots, rat(0)).unwrap().shifted_roots();
    for v in &e {
        assert!(in_plus_window(v, &s) && in_nonpositive_window(v, &s));
    }
    for k in -20..20 {
        let v = ratio(k, 3);
        let both = in_plus_window(&v, &s) && in_nonpositive_window(&v, &s);
        assert_eq!(both, e.contains(&v), "{v}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn window_containment(p in -60i64..60, q in 1i64..13) {
        let w = LfdWindow::new(3, vec![rat(-1), ratio(-2, 3)], ratio(p, q)).unwrap();
        let c = lfd_window_check(&w);
        if c.simple_pure {
            prop_assert!(c.dag_image && c.plus_image);
        }
        if c.duality_morphism {
            prop_assert!(c.dag_image);
        }
    }

    #[test]
    fn dual_parameter_is_an_involution(b in -20i64..20, d in 1i64..7, g in -5i64..5) {
        let (rep, _) = quadric_cone().unwrap();
        let lie = rep.lie();
        let beta = Character::scaling(lie, ratio(b, d)).unwrap();
        let gamma = Character::scaling(lie, rat(g)).unwrap();
        let once = dual_parameter(&beta, &gamma, lie).unwrap();
        prop_assert_eq!(dual_parameter(&once, &gamma, lie).unwrap(), beta);
    }
}
