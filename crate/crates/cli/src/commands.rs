use crate::report::{Outcome, EXIT_CHECK_FAILED, EXIT_OK, EXIT_RESOURCE};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::path::Path;
use tauto_core::bfunction::{minimal_polynomial_of_theta, BFunctionOutcome, UniPoly};
use tauto_core::catalog::veronese_gl;
use tauto_core::cekoszul::{
    cycle_check, truncated_homology_profile_with_limit, veronese_zeta, CEComplex, Cochain,
    HomologyProfile,
};
use tauto_core::dualpar::{
    b_symmetry_check, dual_parameter, duality_report, gkz_dual, lfd_window_check, resolve_gamma,
    simple_root_duality, LfdWindow,
};
use tauto_core::instance::Instance;
use tauto_core::rational::{format_rational, parse_rational, rational_to_json};
use tauto_core::repdata::{Character, RepData};
use tauto_core::tautsys::{build_taut, check_g_stability, OrbitClosureData, TautPresentation};
use tauto_core::weyl::WeylIdeal;
use tauto_core::{Error, Rational, Result, TermOrder};

pub fn read_file(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))
}

pub fn load_instance(path: &Path) -> Result<(Instance, Vec<u8>)> {
    let bytes = read_file(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Parse(format!("{} is not UTF-8", path.display())))?;
    let inst = Instance::parse(&text).map_err(|e| prefix(e, &path.display().to_string()))?;
    Ok((inst, bytes))
}

fn prefix(e: Error, what: &str) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{what}: {m}")),
        Error::Validation(m) => Error::Validation(format!("{what}: {m}")),
        other => other,
    }
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

/// How `β` is chosen on the command line.
#[derive(Clone, Debug, Default)]
pub struct BetaChoice {
    /// A character name from the instance, or a comma-separated value list.
    pub beta: Option<String>,
    /// Only `β(e)`, zero elsewhere.
    pub beta_e: Option<String>,
}

impl BetaChoice {
    pub fn resolve(&self, inst: &Instance, rep: &RepData) -> Result<Character> {
        let lie = rep.lie();
        if let Some(v) = &self.beta_e {
            return Character::scaling(lie, parse_rational(v)?);
        }
        match &self.beta {
            Some(b) => match inst.character(b) {
                Some(c) => Ok(c.clone()),
                None => {
                    let values = parse_rational_list(b).map_err(|_| {
                        Error::Validation(format!("{b:?} is neither a character name nor a value list"))
                    })?;
                    Character::new(lie, values)
                }
            },
            None => Ok(inst
                .character("beta")
                .cloned()
                .unwrap_or_else(|| Character::zero(lie))),
        }
    }
}

fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

fn with_order(t: &TautPresentation, order: Option<&TermOrder>) -> Result<WeylIdeal> {
    match order {
        None => Ok(t.weyl_ideal.clone()),
        Some(o) => WeylIdeal::with_order(
            t.weyl_ideal.nvars(),
            t.weyl_ideal.generators().to_vec(),
            o.clone(),
        ),
    }
}

pub fn cmd_build(inst: &Instance, beta: &BetaChoice, order: Option<&TermOrder>) -> Result<Outcome> {
    let (rep, y) = inst.system()?;
    let beta = beta.resolve(inst, rep)?;
    let stability = check_g_stability(rep, y)?;
    let t = build_taut(rep, y, &beta, true)?;
    let ideal = with_order(&t, order)?;
    let gb = ideal.left_groebner_basis()?;
    let nonzero = !ideal.is_unit()?;
    let gens: Vec<String> = t.generators().iter().map(|g| g.to_string()).collect();
    let mut text = format!("instance {}\nβ = {}\nβ′ = {}\n", inst.name, beta, t.beta_prime);
    for g in &gens {
        text.push_str(&format!("  {g}\n"));
    }
    text.push_str(&format!(
        "left Gröbner basis: {} elements\nnonzero: {nonzero}\n",
        gb.len()
    ));
    Ok(Outcome {
        result: json!({
            "instance": inst.name,
            "beta": beta.to_json(),
            "beta_prime": t.beta_prime.to_json(),
            "generators": gens,
            "groebner_basis_size": gb.len(),
            "nonzero": nonzero,
            "stability": { "pairs_checked": stability.pairs_checked, "passed": stability.passed() },
        }),
        text,
        ..Default::default()
    })
}

fn e_less_b(
    rep: &RepData,
    y: &OrbitClosureData,
    beta: &Character,
    cap: usize,
    order: Option<&TermOrder>,
) -> Result<BFunctionOutcome> {
    let t0 = build_taut(rep, y, beta, false)?;
    let ideal = with_order(&t0, order)?;
    minimal_polynomial_of_theta(&ideal, &t0.theta()?, cap)
}

fn poly_json(b: &UniPoly) -> Value {
    json!({
        "display": b.to_string(),
        "factored": b.factored(),
        "coefficients": rationals_json(b.coeffs()),
        "roots": b.rational_roots().map(|r| rationals_json(&r)),
    })
}

pub fn cmd_bfun(
    inst: &Instance,
    beta: &BetaChoice,
    cap: usize,
    order: Option<&TermOrder>,
) -> Result<Outcome> {
    let (rep, y) = inst.system()?;
    let beta = beta.resolve(inst, rep)?;
    let e = rep.lie().scaling_element().ok_or_else(|| {
        Error::Precondition("the b-function needs a distinguished scaling element".into())
    })?;
    match e_less_b(rep, y, &beta, cap, order)? {
        BFunctionOutcome::ZeroModule => Ok(Outcome {
            result: json!({ "instance": inst.name, "outcome": "zero-module" }),
            text: "the e-less module is zero; b is undefined\n".into(),
            ..Default::default()
        }),
        BFunctionOutcome::CapExhausted { cap, residues } => Ok(Outcome {
            result: json!({
                "instance": inst.name,
                "outcome": "cap-exhausted",
                "cap": cap,
                "residues": residues.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            }),
            text: format!("no b-function of degree ≤ {cap}\n"),
            exit_code: EXIT_RESOURCE,
            ..Default::default()
        }),
        BFunctionOutcome::Found(b) => {
            let mut caveats = Vec::new();
            let (gamma, source) = resolve_gamma(rep, y, None)?;
            let symmetry = match &gamma {
                Some(g) => {
                    let dual_beta = dual_parameter(&beta, g, rep.lie())?;
                    match e_less_b(rep, y, &dual_beta, cap, order)? {
                        BFunctionOutcome::Found(bd) => {
                            let ok = b_symmetry_check(&b.poly, &bd.poly, g.get(e));
                            json!({
                                "gamma_e": rational_to_json(g.get(e)),
                                "gamma_source": source.as_str(),
                                "b_dual": poly_json(&bd.poly),
                                "holds": ok,
                            })
                        }
                        _ => {
                            caveats.push("no b-function for the dual parameter below the cap".into());
                            Value::Null
                        }
                    }
                }
                None => {
                    caveats.push("γ unknown: symmetry not checked".into());
                    Value::Null
                }
            };
            let minimality: Vec<Value> = b
                .minimality
                .iter()
                .map(|(r, w)| json!({ "root": rational_to_json(r), "witness_nonzero": w }))
                .collect();
            let mut text = format!("b(s) = {}\n", b.poly);
            if let Some(f) = b.poly.factored() {
                text.push_str(&format!("     = {f}\n"));
            }
            text.push_str(&format!("certificate b(θ) ∈ J₀: {}\n", b.certificate));
            text.push_str(&format!("minimal: {}\n", b.is_minimal()));
            if let Some(h) = symmetry.get("holds") {
                text.push_str(&format!(
                    "symmetry b(s) = b_dual(γ(e) − s) with γ(e) = {}: {h}\n",
                    symmetry["gamma_e"].as_str().unwrap_or("?")
                ));
            }
            Ok(Outcome {
                result: json!({
                    "instance": inst.name,
                    "outcome": "found",
                    "beta": beta.to_json(),
                    "b": poly_json(&b.poly),
                    "degree": b.degree(),
                    "certificate": b.certificate,
                    "minimal": b.is_minimal(),
                    "minimality": minimality,
                    "symmetry": symmetry,
                }),
                text,
                caveats,
                ..Default::default()
            })
        }
    }
}

pub fn cmd_dual(
    inst: &Instance,
    beta: &BetaChoice,
    gamma: Option<&str>,
    cap: usize,
) -> Result<Outcome> {
    let (rep, y) = inst.system()?;
    let beta = beta.resolve(inst, rep)?;
    let user_gamma = gamma
        .map(|g| Character::new(rep.lie(), parse_rational_list(g)?))
        .transpose()?;
    let lie = rep.lie();
    let report = if let Some(a) = &inst.gkz {
        let g: Option<Vec<Rational>> = user_gamma
            .as_ref()
            .or(y.gamma.as_ref())
            .map(|c| c.values().to_vec());
        gkz_dual(a, beta.values(), g.as_deref())?
    } else if lie.dim() == y.dim_y + 1 && lie.scaling_element().is_some() {
        match e_less_b(rep, y, &beta, cap, None)? {
            BFunctionOutcome::Found(b) => {
                simple_root_duality(&b.poly, rep, y, &beta, user_gamma.as_ref())?
            }
            _ => duality_report(rep, y, &beta, user_gamma.as_ref())?,
        }
    } else {
        duality_report(rep, y, &beta, user_gamma.as_ref())?
    };
    let mut text = format!("β = {}\nβ′ = {}\n", report.beta, report.beta_prime);
    match &report.gamma {
        Some(g) => text.push_str(&format!("γ = {g} ({})\n", report.gamma_source.as_str())),
        None => text.push_str("γ unknown\n"),
    }
    text.push_str(&format!("trace∘ad = {}\n", report.trace_ad));
    if let Some(t) = &report.beta_tilde {
        text.push_str(&format!("β̃ = {t}\n"));
    }
    text.push_str(&format!("shift n − m = {}\n", report.shift));
    let tags: Vec<&str> = report.theorems.iter().map(|t| t.as_str()).collect();
    text.push_str(&format!("applies: {}\n", tags.join(", ")));
    Ok(Outcome {
        result: report.to_json(),
        text,
        caveats: report.caveats.clone(),
        ..Default::default()
    })
}

pub enum CycleInput<'a> {
    Veronese { n: usize, d: u32 },
    File { inst: &'a Instance, cochain: &'a str, beta: &'a BetaChoice },
}

pub fn cmd_cycle(input: CycleInput<'_>) -> Result<Outcome> {
    let (label, c, cx) = match input {
        CycleInput::Veronese { n, d } => {
            if d == 0 || n == 0 || n % d as usize != 0 {
                return Err(Error::Precondition(format!("d = {d} does not divide n = {n}")));
            }
            let (rep, y) = veronese_gl(n, d)?;
            let cx = CEComplex::new(&rep, &y, &rep.trace_drho()?)?;
            (format!("veronese n={n} d={d}"), veronese_zeta(n, d, &y)?, cx)
        }
        CycleInput::File { inst, cochain, beta } => {
            let (rep, y) = inst.system()?;
            let beta = beta.resolve(inst, rep)?;
            let cx = CEComplex::for_beta(rep, y, &beta)?;
            let c = Cochain::parse(cochain, rep.dim_v(), rep.lie().dim())?;
            (inst.name.clone(), c, cx)
        }
    };
    let r = cycle_check(&c, &cx)?;
    let mut text = format!(
        "{label}: cochain of degree {} with {} terms\ncycle: {}\n",
        c.ell(),
        c.len(),
        if r.is_cycle { "pass" } else { "FAIL" }
    );
    if !r.is_cycle {
        text.push_str("residual:\n");
        text.push_str(&r.residual.to_string());
    }
    Ok(Outcome {
        result: json!({
            "input": label,
            "degree": c.ell(),
            "terms": c.len(),
            "twist": cx.twist().to_json(),
            "is_cycle": r.is_cycle,
            "residual": r.residual.to_string(),
            "residual_terms": r.residual.len(),
        }),
        text,
        exit_code: if r.is_cycle { EXIT_OK } else { EXIT_CHECK_FAILED },
        ..Default::default()
    })
}

fn profile_json(p: &HomologyProfile) -> Value {
    json!({
        "cap": p.cap,
        "slice_dim": p.slice_dim,
        "TRUNCATED": p.truncated,
        "rows": p.rows.iter().map(|r| json!({
            "ell": r.ell,
            "degree": r.degree,
            "term_dim": r.term_dim,
            "rank": r.rank,
            "nullity": r.nullity,
            "boundaries": r.boundaries,
            "apparent_homology": r.apparent_homology,
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_profile(
    inst: &Instance,
    beta: &BetaChoice,
    weight: i64,
    caps: &[u32],
    slice_limit: usize,
    parallel: bool,
) -> Result<Outcome> {
    let (rep, y) = inst.system()?;
    let beta = beta.resolve(inst, rep)?;
    let cx = CEComplex::for_beta(rep, y, &beta)?;
    let mut caps = caps.to_vec();
    caps.sort();
    caps.dedup();
    if caps.is_empty() {
        return Err(Error::Validation("no Bernstein caps given".into()));
    }
    let run = |cap: &u32| truncated_homology_profile_with_limit(&cx, weight, *cap, slice_limit);
    let profiles: Vec<HomologyProfile> = if parallel {
        caps.par_iter().map(run).collect::<Result<_>>()?
    } else {
        caps.iter().map(run).collect::<Result<_>>()?
    };
    let below = profiles[0].vanishing_below;
    let mut text = format!(
        "instance {} weight {weight}; homology expected to vanish in degrees < {below}\n",
        inst.name
    );
    for p in &profiles {
        text.push_str(&format!("cap {} (slice {}):\n", p.cap, p.slice_dim));
        for r in &p.rows {
            text.push_str(&format!(
                "  degree {:>3}  dim {:>6}  rank {:>6}  H {:>4}\n",
                r.degree, r.term_dim, r.rank, r.apparent_homology
            ));
        }
    }
    let stabilization = if profiles.len() >= 2 {
        let a = &profiles[profiles.len() - 2];
        let b = &profiles[profiles.len() - 1];
        let stable: Vec<i64> = a
            .rows
            .iter()
            .zip(&b.rows)
            .filter(|(x, y)| x.apparent_homology == y.apparent_homology)
            .map(|(x, _)| x.degree)
            .collect();
        text.push_str(&format!(
            "apparent homology unchanged between caps {} and {} in degrees {:?}\n",
            a.cap, b.cap, stable
        ));
        json!({ "from_cap": a.cap, "to_cap": b.cap, "stable_degrees": stable })
    } else {
        Value::Null
    };
    let vanishing_below_range = profiles
        .iter()
        .all(|p| p.rows_below_range().all(|r| r.apparent_homology == 0));
    Ok(Outcome {
        result: json!({
            "instance": inst.name,
            "weight": weight,
            "vanishing_below": below,
            "profiles": profiles.iter().map(profile_json).collect::<Vec<_>>(),
            "stabilization": stabilization,
            "vanishing_below_range_observed": vanishing_below_range,
        }),
        text,
        caveats: vec!["diagnostic only: dimensions of a Bernstein-degree truncation, not of the homology".into()],
        truncated: true,
        exit_code: EXIT_OK,
    })
}

pub fn cmd_lfd(n: u32, roots: &[Rational], betas: &[Rational]) -> Result<Outcome> {
    if betas.is_empty() {
        return Err(Error::Validation("no β(e) values given".into()));
    }
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut caveats = Vec::new();
    for b in betas {
        let c = lfd_window_check(&LfdWindow::new(n, roots.to_vec(), b.clone())?);
        text.push_str(&format!(
            "β(e) = {:>6}: {}\n",
            format_rational(b),
            c.conclusions().join(", ")
        ));
        if caveats.is_empty() {
            caveats = c.caveats.clone();
            let ex: Vec<String> = c.exceptions.iter().map(format_rational).collect();
            text.insert_str(
                0,
                &format!(
                    "n·(1 + roots(b_D)) = {{{}}}\nfinite exception set = {{{}}}\n",
                    c.shifted_roots.iter().map(format_rational).collect::<Vec<_>>().join(", "),
                    ex.join(", ")
                ),
            );
        }
        rows.push(c.to_json());
    }
    Ok(Outcome {
        result: json!({ "classifications": rows }),
        text,
        caveats,
        ..Default::default()
    })
}
