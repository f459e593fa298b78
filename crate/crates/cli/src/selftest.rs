use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;
use tauto_core::bfunction::{BFunctionOutcome, UniPoly};
use tauto_core::catalog::{gkz, quadric_cone, segre_cone, veronese_gl};
use tauto_core::cekoszul::{
    combinations, cycle_check, differential, h0_matches_taut, right_action,
    truncated_homology_profile, veronese_zeta, CEComplex, Cochain,
};
use tauto_core::dualpar::{
    b_symmetry_check, finite_exception_set, gkz_dual, gorenstein_gamma_ci, lfd_window_check,
    LfdWindow,
};
use tauto_core::rational::{format_rational, rat, ratio};
use tauto_core::repdata::{Character, RepData};
use tauto_core::tautsys::{build_taut, e_less_bfunction, is_nonzero, OrbitClosureData};
use tauto_core::{Result, WeylElement};

use crate::report::{Outcome, EXIT_CHECK_FAILED, EXIT_OK};

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<(bool, String)>,
}

fn b_of(rep: &RepData, y: &OrbitClosureData) -> Result<Option<UniPoly>> {
    Ok(match e_less_bfunction(rep, y, &Character::zero(rep.lie()), 12)? {
        BFunctionOutcome::Found(b) => Some(b.poly),
        _ => None,
    })
}

fn show(b: &Option<UniPoly>) -> String {
    b.as_ref().map_or("no b-function".into(), |b| format!("b(s) = {b}"))
}

fn quadric_b() -> Result<(bool, String)> {
    let (rep, y) = quadric_cone()?;
    let b = b_of(&rep, &y)?;
    let ok = b == Some(UniPoly::from_roots(&[rat(0), rat(1)]));
    Ok((ok, show(&b)))
}

fn segre_b() -> Result<(bool, String)> {
    let (rep, y) = segre_cone()?;
    let b = b_of(&rep, &y)?;
    let ok = b == Some(UniPoly::from_roots(&[rat(0), rat(2)]));
    Ok((ok, show(&b)))
}

fn symmetry() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = String::new();
    for (rep, y) in [quadric_cone()?, segre_cone()?] {
        let g = gorenstein_gamma_ci(&rep, &y)?;
        let e = rep.lie().scaling_element().unwrap_or(0);
        let b = b_of(&rep, &y)?.unwrap_or_else(UniPoly::zero);
        let holds = b_symmetry_check(&b, &b, g.get(e));
        detail.push_str(&format!("γ(e)={} {holds}; ", g.get(e)));
        ok &= holds;
    }
    Ok((ok, detail))
}

fn nonvanishing() -> Result<(bool, String)> {
    let (rep, y) = quadric_cone()?;
    let b = b_of(&rep, &y)?.unwrap_or_else(UniPoly::zero);
    let scan = [
        rat(-2),
        rat(-1),
        ratio(-1, 2),
        rat(0),
        ratio(1, 2),
        rat(1),
        ratio(3, 2),
        rat(2),
    ];
    let mut agree = 0;
    for v in &scan {
        let t = build_taut(&rep, &y, &Character::scaling(rep.lie(), v.clone())?, true)?;
        if is_nonzero(&t)? == b.is_root(v) {
            agree += 1;
        }
    }
    Ok((agree == scan.len(), format!("{agree}/{}", scan.len())))
}

fn zeta() -> Result<(bool, String)> {
    let (rep, y) = veronese_gl(2, 2)?;
    let cx = CEComplex::new(&rep, &y, &rep.trace_drho()?)?;
    let r = cycle_check(&veronese_zeta(2, 2, &y)?, &cx)?;
    Ok((r.is_cycle, format!("residual terms {}", r.residual.len())))
}

fn examples() -> Result<Vec<CEComplex>> {
    let mut out = Vec::new();
    for (rep, y) in [
        quadric_cone()?,
        segre_cone()?,
        gkz(&[vec![1, 1, 1], vec![0, 1, 2]])?,
    ] {
        out.push(CEComplex::for_beta(&rep, &y, &Character::zero(rep.lie()))?);
    }
    Ok(out)
}

fn h0() -> Result<(bool, String)> {
    for cx in examples()? {
        if !h0_matches_taut(&cx)? {
            return Ok((false, "mismatch".into()));
        }
    }
    Ok((true, "3 instances".into()))
}

/// Random element with Bernstein degree ≤ 3.
pub fn random_weyl(rng: &mut ChaCha8Rng, n: usize) -> WeylElement {
    let mut p = WeylElement::zero(n);
    for _ in 0..rng.gen_range(1..4) {
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n];
        for _ in 0..rng.gen_range(0..4) {
            let k = rng.gen_range(0..n);
            if rng.gen_bool(0.5) {
                a[k] += 1;
            } else {
                b[k] += 1;
            }
        }
        p = p.add(&WeylElement::from_xd(n, &a, &b, rat(rng.gen_range(-3..4))));
    }
    p
}

pub fn random_cochain(rng: &mut ChaCha8Rng, n: usize, m: usize, ell: usize) -> Cochain {
    let wedges = combinations(m, ell);
    let mut c = Cochain::zero(n, ell);
    for _ in 0..rng.gen_range(1..3) {
        let w = &wedges[rng.gen_range(0..wedges.len())];
        c.add_term(w, &random_weyl(rng, n));
    }
    c
}

fn delta_squared() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for cx in examples()? {
        let m = cx.m();
        for k in 0..200 {
            let ell = 2 + k % (m - 1);
            let c = random_cochain(&mut rng, cx.nvars(), m, ell);
            let dd = differential(&differential(&c, &cx)?, &cx)?;
            if !dd.is_zero() {
                return Ok((false, format!("δδ ≠ 0 on\n{c}")));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} cochains")))
}

fn right_module() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut pairs = 0;
    for cx in examples()? {
        let lie = cx.rep().lie().clone();
        let p = random_weyl(&mut rng, cx.nvars());
        for i in 0..cx.m() {
            for j in 0..cx.m() {
                let lhs = right_action(&right_action(&p, i, &cx)?, j, &cx)?
                    .sub(&right_action(&right_action(&p, j, &cx)?, i, &cx)?);
                let mut rhs = WeylElement::zero(cx.nvars());
                for (k, c) in lie.bracket(i, j).iter().enumerate() {
                    rhs = rhs.add(&right_action(&p, k, &cx)?.scale(c));
                }
                if !cx.reduce(&lhs.sub(&rhs))?.is_zero() {
                    return Ok((false, format!("pair ({i},{j})")));
                }
                pairs += 1;
            }
        }
    }
    Ok((true, format!("{pairs} pairs")))
}

fn gkz_parameters() -> Result<(bool, String)> {
    let r = gkz_dual(&[vec![1, 1, 1], vec![0, 1, 2]], &[rat(0), rat(0)], None)?;
    let ok = r.beta_tilde.as_ref().map(|b| b.values() == [rat(1), rat(1)]) == Some(true);
    let shown = r.beta_tilde.map_or("γ unknown".into(), |b| format!("β̃ = {b}"));
    Ok((ok, shown))
}

fn lfd() -> Result<(bool, String)> {
    let roots = vec![rat(-1), ratio(-2, 3)];
    let e = finite_exception_set(&roots, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut ok = e == vec![rat(1)];
    for _ in 0..100 {
        let v = ratio(rng.gen_range(-60..60), rng.gen_range(1..13));
        let c = lfd_window_check(&LfdWindow::new(3, roots.clone(), v)?);
        ok &= !c.simple_pure || (c.dag_image && c.plus_image);
    }
    let shown: Vec<String> = e.iter().map(format_rational).collect();
    Ok((ok, format!("exception set {{{}}}", shown.join(", "))))
}

fn profile() -> Result<(bool, String)> {
    let (rep, y) = quadric_cone()?;
    let cx = CEComplex::for_beta(&rep, &y, &Character::zero(rep.lie()))?;
    let mut ok = true;
    for cap in [6, 8] {
        let p = truncated_homology_profile(&cx, 0, cap)?;
        ok &= p.truncated && p.rows_below_range().all(|r| r.apparent_homology == 0);
    }
    Ok((ok, "weight 0, caps 6 and 8 (TRUNCATED)".into()))
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { name: "quadric cone b-function", run: quadric_b },
        Check { name: "Segre cone b-function", run: segre_b },
        Check { name: "b-function symmetry", run: symmetry },
        Check { name: "nonvanishing dichotomy", run: nonvanishing },
        Check { name: "Veronese zeta cycle", run: zeta },
        Check { name: "H0 identity", run: h0 },
        Check { name: "differential squares to zero", run: delta_squared },
        Check { name: "right-module axiom", run: right_module },
        Check { name: "GKZ dual parameter", run: gkz_parameters },
        Check { name: "LFD windows", run: lfd },
        Check { name: "truncated homology", run: profile },
    ]
}

pub fn run_selftest(parallel: bool) -> Result<Outcome> {
    let checks = checks();
    let exec = |c: &Check| ((c.run)(), c.name);
    let results: Vec<_> = if parallel {
        checks.par_iter().map(exec).collect()
    } else {
        checks.iter().map(exec).collect()
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all = true;
    for (r, name) in results {
        let (pass, detail) = match r {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= pass;
        text.push_str(&format!(
            "{} {name}: {detail}\n",
            if pass { "PASS" } else { "FAIL" }
        ));
        rows.push(json!({ "name": name, "pass": pass, "detail": detail }));
    }
    Ok(Outcome {
        result: json!({ "checks": rows, "all_passed": all }),
        text,
        caveats: Vec::new(),
        truncated: true,
        exit_code: if all { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}
