//! Parameter bookkeeping for holonomic duality of `τ̂` and `T̂`: the dual
//! parameter `β̃ = trace∘ad + γ − β`, Gorenstein characters of complete
//! intersections, b-function symmetry, and the linear free divisor windows.

use crate::bfunction::UniPoly;
use crate::error::{Error, Result};
use crate::ideal::PolyIdeal;
use crate::poly::Poly;
use crate::rational::{format_rational, is_integer, is_positive, rational_to_json, Rational};
use crate::repdata::{character_arith, CharOp, Character, LieAlgebra, RepData};
use crate::tautsys::OrbitClosureData;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremTag {
    GorensteinGeneral,
    DimEqual,
    CmOnly,
    Lfd,
    Gkz,
    SimpleRoot,
}

impl TheoremTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremTag::GorensteinGeneral => "Gorenstein-general",
            TheoremTag::DimEqual => "dim-equal",
            TheoremTag::CmOnly => "CM-only",
            TheoremTag::Lfd => "LFD",
            TheoremTag::Gkz => "GKZ",
            TheoremTag::SimpleRoot => "simple-root",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSource {
    User,
    CiFormula,
    GradedCi,
    Unknown,
}

impl GammaSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            GammaSource::User => "user",
            GammaSource::CiFormula => "CI-formula",
            GammaSource::GradedCi => "CI-grading",
            GammaSource::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub beta: Character,
    pub beta_prime: Character,
    pub gamma: Option<Character>,
    pub gamma_source: GammaSource,
    pub trace_ad: Character,
    /// `trace∘ad + γ − β`; absent when `γ` is unknown.
    pub beta_tilde: Option<Character>,
    /// `dim Ȳ − dim 𝔤`.
    pub shift: i64,
    pub theorems: Vec<TheoremTag>,
    pub caveats: Vec<String>,
    /// Twist of `C•(ω_Ȳ, ·)` in the Cohen–Macaulay statement:
    /// `trace∘dρ − trace∘ad + β`.
    pub cm_twist: Character,
    /// Set when the parameter is known to give `τ̂ = 0`.
    pub module_is_zero: bool,
}

impl DualityReport {
    pub fn has(&self, tag: TheoremTag) -> bool {
        self.theorems.contains(&tag)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.beta.to_json(),
            "beta_prime": self.beta_prime.to_json(),
            "gamma": {
                "value": self.gamma.as_ref().map_or(Value::Null, Character::to_json),
                "source": self.gamma_source.as_str(),
            },
            "trace_ad": self.trace_ad.to_json(),
            "beta_tilde": self.beta_tilde.as_ref().map_or(Value::Null, Character::to_json),
            "shift": self.shift,
            "theorem": self.theorems.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
            "caveats": self.caveats,
            "cm_twist": self.cm_twist.to_json(),
            "module_is_zero": self.module_is_zero,
        })
    }
}

/// `γ(e) = N − Σ d_i`, zero on the complement of `e`.
pub fn gorenstein_gamma_ci(rep: &RepData, y: &OrbitClosureData) -> Result<Character> {
    let degrees = y.ci_degrees.as_ref().ok_or_else(|| {
        Error::Precondition("no complete-intersection degrees recorded for Ȳ".into())
    })?;
    let lie = rep.lie();
    if lie.scaling_element().is_none() {
        return Err(Error::Precondition(
            "the complete-intersection formula needs a scaling element".into(),
        ));
    }
    if !lie.complement_is_perfect() {
        return Err(Error::Precondition(
            "the complement of the scaling element is not perfect, so γ on it is not forced to vanish"
                .into(),
        ));
    }
    let total: i64 = degrees.iter().map(|&d| d as i64).sum();
    Character::scaling(lie, Rational::from_integer((rep.dim_v() as i64 - total).into()))
}

/// `β̃ = trace∘ad + γ − β`.
pub fn dual_parameter(beta: &Character, gamma: &Character, lie: &LieAlgebra) -> Result<Character> {
    let s = character_arith(&lie.trace_ad(), Some(gamma), CharOp::Add, lie)?;
    character_arith(&s, Some(beta), CharOp::Sub, lie)
}

/// `b₀(s) = b_dual(γ(e) − s)` after monic normalization.
pub fn b_symmetry_check(b0: &UniPoly, b_dual: &UniPoly, gamma_e: &Rational) -> bool {
    !b0.is_zero() && b0.monic() == b_dual.reflect(gamma_e).monic()
}

fn all_diagonal(rep: &RepData) -> bool {
    rep.matrices().iter().all(|m| {
        m.iter()
            .enumerate()
            .all(|(k, row)| row.iter().enumerate().all(|(l, x)| k == l || x.is_zero()))
    })
}

/// A generating set obtained greedily from the reduced Gröbner basis in
/// order of degree. Its size bounds the minimal number of generators.
pub fn greedy_generators(ideal: &PolyIdeal) -> Result<Vec<Poly>> {
    let mut gb = ideal.groebner_basis()?.to_vec();
    gb.sort_by_key(|g| g.degree().unwrap_or(0));
    let mut kept: Vec<Poly> = Vec::new();
    for g in gb {
        let sub = PolyIdeal::new(ideal.nvars(), kept.clone())?;
        if kept.is_empty() || !sub.contains(&g)? {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// For a diagonal action: the equivariant weight `Σ u_k dρ(ξ_j)_kk` of a
/// generator, which must be the same on all of its terms.
fn diagonal_weight(rep: &RepData, g: &Poly) -> Result<Vec<Rational>> {
    let m = rep.lie().dim();
    let mut weight: Option<Vec<Rational>> = None;
    for (mono, _) in g.terms() {
        let w: Vec<Rational> = (0..m)
            .map(|j| {
                let mat = rep.matrix(j);
                mono.0
                    .iter()
                    .enumerate()
                    .map(|(k, &u)| &mat[k][k] * Rational::from_integer(u.into()))
                    .sum()
            })
            .collect();
        match &weight {
            None => weight = Some(w),
            Some(prev) if *prev != w => {
                return Err(Error::Precondition(format!(
                    "generator {g} is not homogeneous for the torus grading"
                )))
            }
            _ => {}
        }
    }
    weight.ok_or_else(|| Error::Precondition("zero generator".into()))
}

/// For a diagonal (torus) action on a complete intersection:
/// `γ = trace∘dρ − Σ deg(f_i)` in the equivariant grading. `Ok(None)` when
/// the ideal is not recognised as a complete intersection.
pub fn graded_ci_gamma(rep: &RepData, y: &OrbitClosureData) -> Result<Option<Character>> {
    if !all_diagonal(rep) {
        return Err(Error::Precondition("the action is not diagonal".into()));
    }
    let gens = greedy_generators(&y.ideal)?;
    let codim = y.nvars() - y.dim_y;
    if gens.len() != codim {
        return Ok(None);
    }
    let mut values = rep.trace_drho()?.values().to_vec();
    for g in &gens {
        for (v, w) in values.iter_mut().zip(diagonal_weight(rep, g)?) {
            *v -= w;
        }
    }
    Ok(Some(Character::new(rep.lie(), values)?))
}

/// Resolves `γ`: a user value, then the one stored with `Ȳ`, then the
/// complete-intersection formula, then the torus grading.
pub fn resolve_gamma(
    rep: &RepData,
    y: &OrbitClosureData,
    user: Option<&Character>,
) -> Result<(Option<Character>, GammaSource)> {
    if let Some(g) = user.or(y.gamma.as_ref()) {
        g.check(rep.lie())?;
        if g.len() != rep.lie().dim() {
            return Err(Error::Dimension("γ has the wrong length".into()));
        }
        return Ok((Some(g.clone()), GammaSource::User));
    }
    if let Ok(g) = gorenstein_gamma_ci(rep, y) {
        return Ok((Some(g), GammaSource::CiFormula));
    }
    if all_diagonal(rep) {
        if let Some(g) = graded_ci_gamma(rep, y)? {
            return Ok((Some(g), GammaSource::GradedCi));
        }
    }
    Ok((None, GammaSource::Unknown))
}

/// The duality statement that applies to `(ρ, Ȳ, β)` with the best
/// available `γ`.
pub fn duality_report(
    rep: &RepData,
    y: &OrbitClosureData,
    beta: &Character,
    user_gamma: Option<&Character>,
) -> Result<DualityReport> {
    let lie = rep.lie();
    beta.check(lie)?;
    let (gamma, source) = resolve_gamma(rep, y, user_gamma)?;
    let m = lie.dim() as i64;
    let n = y.dim_y as i64;
    let trace_ad = lie.trace_ad();
    let cm_twist = character_arith(
        &character_arith(&rep.trace_drho()?, Some(&trace_ad), CharOp::Sub, lie)?,
        Some(beta),
        CharOp::Add,
        lie,
    )?;
    let mut theorems = Vec::new();
    let mut caveats = Vec::new();
    let beta_tilde = match &gamma {
        Some(g) => {
            theorems.push(TheoremTag::GorensteinGeneral);
            caveats.push(match source {
                GammaSource::User => "Ȳ assumed Gorenstein with ω_Ȳ ≅ O_Ȳ{−γ} (γ supplied by the user)".to_string(),
                GammaSource::CiFormula => "Ȳ is a complete intersection, hence Gorenstein; γ vanishes on the perfect complement of e".to_string(),
                _ => "Ȳ is a complete intersection for the torus grading, hence Gorenstein".to_string(),
            });
            caveats.push(format!(
                "D τ̂(β) = H^{{{}}} T̂(β̃) assumes finitely many G-orbits in Ȳ (not checked)",
                n - m
            ));
            if n == m {
                theorems.push(TheoremTag::DimEqual);
                caveats.push("D τ̂(β) = τ̂(β̃) assumes finitely many G-orbits in Ȳ (not checked)".into());
            }
            if n + 1 == m && lie.scaling_element().is_some() {
                caveats.push(
                    "dim 𝔤 = dim Ȳ + 1: if β(e) is a simple root of b, D τ̂(β) = τ̂(β̃) (see the b-function report)"
                        .into(),
                );
            }
            Some(dual_parameter(beta, g, lie)?)
        }
        None => {
            theorems.push(TheoremTag::CmOnly);
            caveats.push(format!(
                "γ unknown: only D T̂(β) = C•(ω_Ȳ, {cm_twist})[{}] is available, assuming Ȳ Cohen–Macaulay; ω_Ȳ is not computed",
                n - m
            ));
            None
        }
    };
    Ok(DualityReport {
        beta: beta.clone(),
        beta_prime: rep.beta_prime(beta)?,
        gamma,
        gamma_source: source,
        trace_ad,
        beta_tilde,
        shift: n - m,
        theorems,
        caveats,
        cm_twist,
        module_is_zero: false,
    })
}

/// Whether `v` is a root of `b` of multiplicity one, tested through
/// `gcd(b, b′)`.
pub fn is_simple_root(b: &UniPoly, v: &Rational) -> bool {
    b.is_root(v) && !b.gcd(&b.derivative()).is_root(v)
}

/// Duality through a simple root of the e-less b-function.
pub fn simple_root_duality(
    b: &UniPoly,
    rep: &RepData,
    y: &OrbitClosureData,
    beta: &Character,
    user_gamma: Option<&Character>,
) -> Result<DualityReport> {
    let e = rep.lie().scaling_element().ok_or_else(|| {
        Error::Precondition("the simple-root criterion needs a scaling element".into())
    })?;
    let mut report = duality_report(rep, y, beta, user_gamma)?;
    let v = beta.get(e);
    if !b.is_root(v) {
        report.module_is_zero = true;
        report.theorems.clear();
        report.caveats.push(format!(
            "β(e) = {} is not a root of b: τ̂ = 0",
            format_rational(v)
        ));
        return Ok(report);
    }
    if report.gamma.is_none() {
        return Ok(report);
    }
    if rep.lie().dim() != y.dim_y + 1 {
        report.caveats.push(format!(
            "simple-root duality is stated for dim 𝔤 = dim Ȳ + 1; here dim 𝔤 = {} and dim Ȳ = {}",
            rep.lie().dim(),
            y.dim_y
        ));
    }
    if is_simple_root(b, v) {
        report.theorems.push(TheoremTag::SimpleRoot);
    } else {
        report.caveats.push(format!(
            "β(e) = {} is a multiple root of b: no duality statement",
            format_rational(v)
        ));
    }
    Ok(report)
}

/// Parameters of a linear free divisor: `n = deg f` and the roots of its
/// Bernstein–Sato polynomial, with the value `β(e)` being classified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfdWindow {
    pub n: u32,
    pub roots_bd: Vec<Rational>,
    pub beta_e: Rational,
}

impl LfdWindow {
    pub fn new(n: u32, roots_bd: Vec<Rational>, beta_e: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("n must be positive".into()));
        }
        if roots_bd.is_empty() {
            return Err(Error::Validation("the root list of b_D is empty".into()));
        }
        Ok(LfdWindow { n, roots_bd, beta_e })
    }

    /// `n·(1 + roots(b_D))`, sorted and deduplicated.
    pub fn shifted_roots(&self) -> Vec<Rational> {
        shifted_roots(&self.roots_bd, self.n)
    }
}

fn shifted_roots(roots: &[Rational], n: u32) -> Vec<Rational> {
    let n = Rational::from_integer(n.into());
    let set: BTreeSet<Rational> = roots.iter().map(|r| &n * (Rational::one() + r)).collect();
    set.into_iter().collect()
}

/// `v ∈ S + Z_{>0}`.
pub fn in_plus_window(v: &Rational, s: &[Rational]) -> bool {
    s.iter().any(|x| {
        let d = v - x;
        is_integer(&d) && is_positive(&d)
    })
}

/// `v ∈ S + Z_{≤0}`.
pub fn in_nonpositive_window(v: &Rational, s: &[Rational]) -> bool {
    s.iter().any(|x| {
        let d = v - x;
        is_integer(&d) && !is_positive(&d)
    })
}

/// `v ∈ S + Z`.
pub fn in_integer_window(v: &Rational, s: &[Rational]) -> bool {
    s.iter().any(|x| is_integer(&(v - x)))
}

pub fn in_half_integers(v: &Rational) -> bool {
    let two = num_bigint::BigInt::from(2);
    two.is_multiple_of(v.denom())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfdClassification {
    pub window: LfdWindow,
    pub shifted_roots: Vec<Rational>,
    /// `β(e) ∉ S + Z_{>0}`: τ̂ is the `+`-direct image.
    pub dag_image: bool,
    /// `β(e) ∉ S + Z_{≤0}`: τ̂ is the `†`-direct image.
    pub plus_image: bool,
    /// `β(e) ∈ ½Z ∖ (S + Z_{>0})`: the duality morphism `τ̂(1 − β) → τ̂(β)`.
    pub duality_morphism: bool,
    /// `β(e) ∉ S + Z`: simple pure, irreducible monodromy.
    pub simple_pure: bool,
    pub exceptions: Vec<Rational>,
    pub caveats: Vec<String>,
}

impl LfdClassification {
    pub fn conclusions(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.dag_image {
            out.push("dag-image");
        }
        if self.plus_image {
            out.push("plus-image");
        }
        if self.duality_morphism {
            out.push("duality-morphism");
        }
        if self.simple_pure {
            out.push("simple-pure");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.window.n,
            "roots_bD": self.window.roots_bd.iter().map(rational_to_json).collect::<Vec<_>>(),
            "beta_e": rational_to_json(&self.window.beta_e),
            "shifted_roots": self.shifted_roots.iter().map(rational_to_json).collect::<Vec<_>>(),
            "conclusions": self.conclusions(),
            "finite_exception_set": self.exceptions.iter().map(rational_to_json).collect::<Vec<_>>(),
            "theorem": [TheoremTag::Lfd.as_str()],
            "caveats": self.caveats,
        })
    }
}

pub fn lfd_window_check(w: &LfdWindow) -> LfdClassification {
    let s = w.shifted_roots();
    let v = &w.beta_e;
    let dag_image = !in_plus_window(v, &s);
    let plus_image = !in_nonpositive_window(v, &s);
    let duality_morphism = in_half_integers(v) && dag_image;
    let simple_pure = !in_integer_window(v, &s);
    let mut caveats = vec![
        "Hodge-module conclusions are quoted, not computed; only the arithmetic hypotheses are checked".to_string(),
        "assumes an SK linear free divisor with semisimple G₀".to_string(),
    ];
    if dag_image || plus_image {
        caveats.push(
            "τ̂ underlies a mixed Hodge module for all β(e) outside the finite exception set".into(),
        );
    }
    LfdClassification {
        window: w.clone(),
        shifted_roots: s.clone(),
        dag_image,
        plus_image,
        duality_morphism,
        simple_pure,
        exceptions: finite_exception_set(&w.roots_bd, w.n),
        caveats,
    }
}

/// `(S + Z_{>0}) ∩ (S + Z_{≤0})` for `S = n·(1 + roots)`: for each pair
/// `s < s′` with `s′ − s` a positive integer, the values `s + 1, …, s′`.
pub fn finite_exception_set(roots_bd: &[Rational], n: u32) -> Vec<Rational> {
    let s = shifted_roots(roots_bd, n);
    let mut out = BTreeSet::new();
    for a in &s {
        for b in &s {
            let d = b - a;
            if !is_integer(&d) || !d.is_positive() {
                continue;
            }
            let k = d.to_integer();
            let mut p = num_bigint::BigInt::one();
            while p <= k {
                out.insert(a + Rational::from_integer(p.clone()));
                p += 1;
            }
        }
    }
    out.into_iter().collect()
}

/// The abelian GKZ instance for `A` with its duality report.
pub fn gkz_dual(
    a: &[Vec<i64>],
    beta: &[Rational],
    user_gamma: Option<&[Rational]>,
) -> Result<DualityReport> {
    let (rep, y) = crate::catalog::gkz(a)?;
    let lie = rep.lie();
    let beta = Character::new(lie, beta.to_vec())?;
    let gamma = user_gamma
        .map(|g| Character::new(lie, g.to_vec()))
        .transpose()?;
    let mut report = duality_report(&rep, &y, &beta, gamma.as_ref())?;
    if !report.trace_ad.is_zero() {
        return Err(Error::Defect("trace∘ad of an abelian Lie algebra is nonzero".into()));
    }
    report.theorems.push(TheoremTag::Gkz);
    if report.gamma.is_none() {
        report.caveats.push(
            "toric ideal not recognised as a complete intersection; supply γ to apply the Gorenstein statements"
                .into(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn half_integers() {
        assert!(in_half_integers(&ratio(-3, 2)));
        assert!(in_half_integers(&rat(4)));
        assert!(!in_half_integers(&ratio(1, 3)));
    }

    #[test]
    fn windows() {
        let s = vec![rat(0)];
        assert!(in_plus_window(&rat(2), &s));
        assert!(!in_plus_window(&rat(0), &s));
        assert!(in_nonpositive_window(&rat(0), &s));
        assert!(!in_integer_window(&ratio(1, 3), &s));
    }

    #[test]
    fn exception_set() {
        assert!(finite_exception_set(&[rat(-1)], 3).is_empty());
        assert_eq!(finite_exception_set(&[rat(-1), ratio(-2, 3)], 3), vec![rat(1)]);
        assert_eq!(
            finite_exception_set(&[rat(-1), ratio(-1, 3)], 3),
            vec![rat(1), rat(2)]
        );
        assert!(finite_exception_set(&[rat(-1), ratio(-5, 6)], 3).is_empty());
    }

    #[test]
    fn symmetry_rejects_wrong_gamma() {
        let b = UniPoly::from_roots(&[rat(0), rat(1)]);
        assert!(b_symmetry_check(&b, &b, &rat(1)));
        assert!(!b_symmetry_check(&b, &b, &rat(3)));
    }

    #[test]
    fn simple_roots() {
        let b = UniPoly::from_roots(&[rat(0), rat(0), rat(1)]);
        assert!(!is_simple_root(&b, &rat(0)));
        assert!(is_simple_root(&b, &rat(1)));
        assert!(!is_simple_root(&b, &rat(2)));
    }
}
