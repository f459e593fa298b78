//! Cyclic presentations `D_V / (D_V I + D_V (Z_V(ξ) − β′(ξ)))`.

use crate::bfunction::{minimal_polynomial_of_theta, BFunctionOutcome, UniPoly};
use crate::error::{Error, Result};
use crate::ideal::PolyIdeal;
use crate::poly::Poly;
use crate::rational::rat;
use crate::repdata::{Character, RepData};
use crate::weyl::{WeylElement, WeylIdeal};
use serde_json::Value;

/// An orbit closure `Ȳ ⊆ V` given by its ideal.
#[derive(Clone, Debug)]
pub struct OrbitClosureData {
    pub ideal: PolyIdeal,
    pub dim_y: usize,
    pub gamma: Option<Character>,
    pub ci_degrees: Option<Vec<u32>>,
}

impl OrbitClosureData {
    pub fn new(ideal: PolyIdeal, dim_y: usize) -> Result<Self> {
        if dim_y > ideal.nvars() {
            return Err(Error::Validation(format!(
                "dim_Y = {dim_y} exceeds the ambient dimension {}",
                ideal.nvars()
            )));
        }
        Ok(OrbitClosureData {
            ideal,
            dim_y,
            gamma: None,
            ci_degrees: None,
        })
    }

    /// Records complete-intersection degrees; each generator must be
    /// homogeneous of the stated degree.
    pub fn with_ci_degrees(mut self, degrees: Vec<u32>) -> Result<Self> {
        let gens: Vec<&Poly> = self
            .ideal
            .generators()
            .iter()
            .filter(|g| !g.is_zero())
            .collect();
        if gens.len() != degrees.len() {
            return Err(Error::Validation(format!(
                "{} complete-intersection degrees for {} generators",
                degrees.len(),
                gens.len()
            )));
        }
        for (g, d) in gens.iter().zip(&degrees) {
            if !g.is_homogeneous_of(*d) {
                return Err(Error::Validation(format!(
                    "generator {g} is not homogeneous of degree {d}"
                )));
            }
        }
        self.ci_degrees = Some(degrees);
        Ok(self)
    }

    pub fn with_gamma(mut self, gamma: Character) -> Self {
        self.gamma = Some(gamma);
        self
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// Parses `{"ideal": [...], "dim_Y": n, "gamma": [...]?, "ci_degrees": [...]?}`
    /// against an already loaded representation.
    pub fn from_json(v: &Value, rep: &RepData) -> Result<Self> {
        let n = rep.dim_v();
        let gens = v
            .get("ideal")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("\"ideal\" must be an array of polynomial strings".into()))?
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let s = g
                    .as_str()
                    .ok_or_else(|| Error::Parse(format!("ideal[{k}] must be a string")))?;
                Poly::parse(n, s).map_err(|e| Error::Parse(format!("ideal[{k}]: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let dim_y = v
            .get("dim_Y")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("\"dim_Y\" must be a non-negative integer".into()))?
            as usize;
        let mut y = OrbitClosureData::new(PolyIdeal::new(n, gens)?, dim_y)?;
        if let Some(g) = v.get("gamma").filter(|g| !g.is_null()) {
            y.gamma = Some(
                Character::from_json(rep.lie(), g)
                    .map_err(|e| Error::Validation(format!("gamma: {e}")))?,
            );
        }
        if let Some(d) = v.get("ci_degrees").filter(|d| !d.is_null()) {
            let degrees = d
                .as_array()
                .ok_or_else(|| Error::Parse("\"ci_degrees\" must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|x| x as u32)
                        .ok_or_else(|| Error::Parse("ci_degrees entries must be integers".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            y = y.with_ci_degrees(degrees)?;
        }
        Ok(y)
    }
}

/// Outcome of applying every `Z_V(ξ_j)` to every generator of `I`.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    /// `(basis index, generator index, normal form of Z_V(ξ_j)(f))`.
    pub failures: Vec<(usize, usize, Poly)>,
    pub pairs_checked: usize,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_g_stability(rep: &RepData, y: &OrbitClosureData) -> Result<StabilityReport> {
    if rep.dim_v() != y.nvars() {
        return Err(Error::Dimension(format!(
            "representation on {} coordinates, ideal in {} variables",
            rep.dim_v(),
            y.nvars()
        )));
    }
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for j in 0..rep.lie().dim() {
        let z = rep.vector_field(j);
        for (k, f) in y.ideal.generators().iter().enumerate() {
            pairs_checked += 1;
            let r = y.ideal.normal_form(&z.apply(f))?;
            if !r.is_zero() {
                failures.push((j, k, r));
            }
        }
    }
    Ok(StabilityReport {
        failures,
        pairs_checked,
    })
}

/// The left ideal presenting `τ̂(ρ, Ȳ, β)` (or the e-less system).
#[derive(Clone, Debug)]
pub struct TautPresentation {
    pub weyl_ideal: WeylIdeal,
    pub rep: RepData,
    pub beta: Character,
    pub beta_prime: Character,
    pub includes_scaling: bool,
    /// Basis indices contributing an operator generator, in order.
    pub operator_indices: Vec<usize>,
    pub polynomial_generators: Vec<Poly>,
}

impl TautPresentation {
    pub fn generators(&self) -> &[WeylElement] {
        self.weyl_ideal.generators()
    }

    /// `θ = dim V − Z_V(e)`.
    pub fn theta(&self) -> Result<WeylElement> {
        theta(&self.rep)
    }
}

pub fn theta(rep: &RepData) -> Result<WeylElement> {
    let e = rep.lie().scaling_element().ok_or_else(|| {
        Error::Precondition("the Lie algebra has no distinguished scaling element".into())
    })?;
    let n = rep.dim_v();
    Ok(WeylElement::constant(n, rat(n as i64)).sub(&rep.vector_field(e)))
}

pub fn build_taut(
    rep: &RepData,
    y: &OrbitClosureData,
    beta: &Character,
    includes_scaling: bool,
) -> Result<TautPresentation> {
    let report = check_g_stability(rep, y)?;
    if let Some((j, k, r)) = report.failures.first() {
        return Err(Error::Precondition(format!(
            "ideal is not stable: Z_V(ξ_{j}) applied to generator {k} ({}) leaves remainder {r}",
            y.ideal.generators()[*k]
        )));
    }
    let scaling = rep.lie().scaling_element();
    if !includes_scaling && scaling.is_none() {
        return Err(Error::Precondition(
            "dropping the scaling generator needs a distinguished scaling element".into(),
        ));
    }
    beta.check(rep.lie())?;
    let beta_prime = rep.beta_prime(beta)?;
    let n = rep.dim_v();
    let polys: Vec<Poly> = y
        .ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    let mut gens: Vec<WeylElement> = polys.iter().map(WeylElement::from_poly).collect();
    let mut operator_indices = Vec::new();
    for j in 0..rep.lie().dim() {
        if !includes_scaling && Some(j) == scaling {
            continue;
        }
        operator_indices.push(j);
        gens.push(
            rep.vector_field(j)
                .sub(&WeylElement::constant(n, beta_prime.get(j).clone())),
        );
    }
    Ok(TautPresentation {
        weyl_ideal: WeylIdeal::new(n, gens)?,
        rep: rep.clone(),
        beta: beta.clone(),
        beta_prime,
        includes_scaling,
        operator_indices,
        polynomial_generators: polys,
    })
}

/// `τ̂ ≠ 0`, i.e. `1 ∉` the presenting ideal.
pub fn is_nonzero(t: &TautPresentation) -> Result<bool> {
    Ok(!t.weyl_ideal.is_unit()?)
}

/// `is_nonzero` cross-checked against the roots of the e-less b-function.
/// A disagreement is a defect.
pub fn is_nonzero_checked(t: &TautPresentation, b: &UniPoly) -> Result<bool> {
    let nonzero = is_nonzero(t)?;
    let e = t.rep.lie().scaling_element().ok_or_else(|| {
        Error::Precondition("b-function cross-check needs a scaling element".into())
    })?;
    let root = b.is_root(t.beta.get(e));
    if root != nonzero {
        return Err(Error::Defect(format!(
            "Gröbner basis says nonzero = {nonzero} but β(e) root of b = {root}"
        )));
    }
    Ok(nonzero)
}

/// The b-function of the e-less system attached to `β`.
pub fn e_less_bfunction(
    rep: &RepData,
    y: &OrbitClosureData,
    beta: &Character,
    cap: usize,
) -> Result<BFunctionOutcome> {
    let t0 = build_taut(rep, y, beta, false)?;
    minimal_polynomial_of_theta(&t0.weyl_ideal, &t0.theta()?, cap)
}
