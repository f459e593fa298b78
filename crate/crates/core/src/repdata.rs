//! Lie algebras by structure constants, their representations by matrices,
//! the induced vector fields `Z_V(ξ)` and characters.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, SparseVec};
use crate::rational::{format_rational, rational_from_json, rational_to_json, Rational};
use crate::weyl::WeylElement;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt;

pub type Matrix = Vec<Vec<Rational>>;

#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `c[i][j][k]` with `[ξ_i, ξ_j] = Σ_k c[i][j][k] ξ_k`.
    c: Vec<Vec<Vec<Rational>>>,
    scaling: Option<usize>,
}

impl LieAlgebra {
    /// Builds the algebra from a list of brackets `[ξ_i, ξ_j] = Σ c_k ξ_k`
    /// (0-based). Unlisted pairs bracket to zero; `(j, i)` is filled in by
    /// antisymmetry and must agree if listed as well.
    pub fn new(
        dim: usize,
        brackets: &[(usize, usize, Vec<Rational>)],
        scaling: Option<usize>,
    ) -> Result<Self> {
        let zero = vec![Rational::zero(); dim];
        let mut c = vec![vec![zero.clone(); dim]; dim];
        let mut set = vec![vec![false; dim]; dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::Validation(format!(
                    "bracket entry ({i},{j}): index out of range for dimension {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::Validation(format!(
                    "bracket entry ({i},{j}): expected {dim} coefficients, got {}",
                    v.len()
                )));
            }
            if i == j && v.iter().any(|x| !x.is_zero()) {
                return Err(Error::Validation(format!(
                    "bracket entry ({i},{i}): [x, x] must vanish"
                )));
            }
            let neg: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
            if (set[i][j] && &c[i][j] != v) || (set[j][i] && c[j][i] != neg) {
                return Err(Error::Validation(format!(
                    "bracket entry ({i},{j}): inconsistent with an earlier entry (antisymmetry)"
                )));
            }
            c[i][j] = v.clone();
            c[j][i] = neg;
            set[i][j] = true;
            set[j][i] = true;
        }
        if let Some(e) = scaling {
            if e >= dim {
                return Err(Error::Validation(format!(
                    "scaling element {e} out of range for dimension {dim}"
                )));
            }
        }
        let lie = LieAlgebra {
            dim,
            labels: (0..dim).map(|i| format!("xi{i}")).collect(),
            c,
            scaling,
        };
        lie.check_jacobi()?;
        Ok(lie)
    }

    /// The abelian Lie algebra of dimension `dim`.
    pub fn abelian(dim: usize, scaling: Option<usize>) -> Result<Self> {
        LieAlgebra::new(dim, &[], scaling)
    }

    /// Structure constants of the span of linearly independent matrices,
    /// which must be closed under the commutator.
    pub fn from_matrices(mats: &[Matrix], scaling: Option<usize>) -> Result<Self> {
        let dim = mats.len();
        let flat = |m: &Matrix| -> SparseVec {
            m.iter()
                .flatten()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.clone()))
                .collect()
        };
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let comm = commutator(&mats[i], &mats[j])?;
                let coeffs = express_in_span(mats, &comm).ok_or_else(|| {
                    Error::Validation(format!(
                        "matrices {i} and {j}: commutator leaves the span"
                    ))
                })?;
                if coeffs.iter().any(|x| !x.is_zero()) {
                    brackets.push((i, j, coeffs));
                }
            }
        }
        let mut e = Echelon::new();
        for m in mats {
            if e.insert(flat(m)) != Insert::Independent {
                return Err(Error::Validation(
                    "basis matrices are linearly dependent".into(),
                ));
            }
        }
        LieAlgebra::new(dim, &brackets, scaling)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Validation(format!(
                "{} labels for a Lie algebra of dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    for r in 0..d {
                        let mut s = Rational::zero();
                        for l in 0..d {
                            s += &self.c[i][j][l] * &self.c[l][k][r]
                                + &self.c[j][k][l] * &self.c[l][i][r]
                                + &self.c[k][i][l] * &self.c[l][j][r];
                        }
                        if !s.is_zero() {
                            return Err(Error::Validation(format!(
                                "Jacobi identity fails for ({i},{j},{k}) in component {r}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn scaling_element(&self) -> Option<usize> {
        self.scaling
    }

    /// Coefficients of `[ξ_i, ξ_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// All nonzero brackets with `i < j`.
    pub fn bracket_table(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if self.c[i][j].iter().any(|x| !x.is_zero()) {
                    out.push((i, j, self.c[i][j].clone()));
                }
            }
        }
        out
    }

    /// Dimension of `[S, S]` where `S` is spanned by the given basis elements.
    fn derived_rank(&self, basis: &[usize]) -> usize {
        let mut e = Echelon::new();
        for &i in basis {
            for &j in basis {
                if i < j {
                    e.insert(to_sparse(&self.c[i][j]));
                }
            }
        }
        e.rank()
    }

    /// `𝔤 = [𝔤, 𝔤]`.
    pub fn is_perfect(&self) -> bool {
        let all: Vec<usize> = (0..self.dim).collect();
        self.derived_rank(&all) == self.dim
    }

    /// The complement of the scaling element spans a perfect ideal
    /// `𝔤₀ = [𝔤₀, 𝔤₀]`. Without a scaling element this is `is_perfect`.
    pub fn complement_is_perfect(&self) -> bool {
        let rest: Vec<usize> = (0..self.dim).filter(|&i| Some(i) != self.scaling).collect();
        if self.derived_rank(&rest) != rest.len() {
            return false;
        }
        // [𝔤₀, 𝔤₀] must not leave 𝔤₀
        match self.scaling {
            None => true,
            Some(e) => rest
                .iter()
                .all(|&i| rest.iter().all(|&j| self.c[i][j][e].is_zero())),
        }
    }

    /// `ξ_i ↦ trace(ad ξ_i) = Σ_j c_{ij}^j`.
    pub fn trace_ad(&self) -> Character {
        let values = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.c[i][j][j].clone()).sum())
            .collect();
        Character { values }
    }
}

fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

fn express_in_span(mats: &[Matrix], target: &Matrix) -> Option<Vec<Rational>> {
    let flat = |m: &Matrix| -> SparseVec {
        m.iter()
            .flatten()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k, x.clone()))
            .collect()
    };
    let mut e = Echelon::tracking();
    for m in mats {
        e.insert(flat(m));
    }
    match e.insert(flat(target)) {
        Insert::Dependent(combo) => {
            // combo: Σ c_i M_i + 1·target = 0
            let mut out = vec![Rational::zero(); mats.len()];
            for (i, c) in combo {
                if i < mats.len() {
                    out[i] = -c;
                }
            }
            Some(out)
        }
        Insert::Independent => None,
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = a.len();
    if b.len() != n || a.iter().chain(b).any(|r| r.len() != n) {
        return Err(Error::Dimension("commutator of non-square or mismatched matrices".into()));
    }
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    Ok(ab
        .iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect())
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// A linear functional on `𝔤`, given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    values: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharOp {
    Add,
    Sub,
    Negate,
}

impl Character {
    /// Validated: the functional must vanish on all brackets.
    pub fn new(lie: &LieAlgebra, values: Vec<Rational>) -> Result<Self> {
        if values.len() != lie.dim {
            return Err(Error::Dimension(format!(
                "character with {} values on a Lie algebra of dimension {}",
                values.len(),
                lie.dim
            )));
        }
        let ch = Character { values };
        ch.check(lie)?;
        Ok(ch)
    }

    pub fn zero(lie: &LieAlgebra) -> Self {
        Character {
            values: vec![Rational::zero(); lie.dim],
        }
    }

    /// Zero on every basis element except the scaling element.
    pub fn scaling(lie: &LieAlgebra, value: Rational) -> Result<Self> {
        let e = lie.scaling.ok_or_else(|| {
            Error::Precondition("the Lie algebra has no distinguished scaling element".into())
        })?;
        let mut values = vec![Rational::zero(); lie.dim];
        values[e] = value;
        Character::new(lie, values)
    }

    pub fn check(&self, lie: &LieAlgebra) -> Result<()> {
        for (i, j, c) in lie.bracket_table() {
            let s: Rational = c.iter().zip(&self.values).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                return Err(Error::Validation(format!(
                    "character does not vanish on the bracket [{i},{j}] (value {})",
                    format_rational(&s)
                )));
            }
        }
        Ok(())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(rational_to_json).collect())
    }

    pub fn from_json(lie: &LieAlgebra, v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("character must be an array of rationals".into()))?;
        let values = arr
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()?;
        Character::new(lie, values)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Componentwise `a + b`, `a − b` or `−a`; the result is re-validated.
pub fn character_arith(
    a: &Character,
    b: Option<&Character>,
    op: CharOp,
    lie: &LieAlgebra,
) -> Result<Character> {
    let values: Vec<Rational> = match (op, b) {
        (CharOp::Negate, _) => a.values.iter().map(|x| -x.clone()).collect(),
        (_, None) => {
            return Err(Error::Precondition(format!("{op:?} needs two characters")));
        }
        (_, Some(b)) => {
            if a.values.len() != b.values.len() {
                return Err(Error::Dimension(format!(
                    "characters of length {} and {}",
                    a.values.len(),
                    b.values.len()
                )));
            }
            a.values
                .iter()
                .zip(&b.values)
                .map(|(x, y)| if op == CharOp::Add { x + y } else { x - y })
                .collect()
        }
    };
    Character::new(lie, values)
}

/// A representation `dρ: 𝔤 → gl(N)` given on the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RepData {
    lie: LieAlgebra,
    n: usize,
    matrices: Vec<Matrix>,
}

impl RepData {
    pub fn new(lie: LieAlgebra, n: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != lie.dim {
            return Err(Error::Validation(format!(
                "{} representation matrices for a Lie algebra of dimension {}",
                matrices.len(),
                lie.dim
            )));
        }
        for (j, m) in matrices.iter().enumerate() {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Validation(format!("matrix {j} is not {n}×{n}")));
            }
        }
        for i in 0..lie.dim {
            for j in i + 1..lie.dim {
                let lhs = commutator(&matrices[i], &matrices[j])?;
                let mut rhs = vec![vec![Rational::zero(); n]; n];
                for (k, ck) in lie.c[i][j].iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    for r in 0..n {
                        for s in 0..n {
                            rhs[r][s] += ck * &matrices[k][r][s];
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "representation is not a homomorphism on the pair ({i},{j})"
                    )));
                }
            }
        }
        if let Some(e) = lie.scaling {
            if matrices[e] != identity(n) {
                return Err(Error::Validation(format!(
                    "scaling element {e} must act as the identity"
                )));
            }
        }
        Ok(RepData { lie, n, matrices })
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    /// `N = dim V`.
    pub fn dim_v(&self) -> usize {
        self.n
    }

    pub fn matrix(&self, j: usize) -> &Matrix {
        &self.matrices[j]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `Z_V(ξ_j) = −Σ_{k,l} dρ(ξ_j)_{kl} x_l ∂_k`.
    pub fn vector_field(&self, j: usize) -> WeylElement {
        let n = self.n;
        let mut z = WeylElement::zero(n);
        for (k, row) in self.matrices[j].iter().enumerate() {
            for (l, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut a = vec![0; n];
                let mut b = vec![0; n];
                a[l] = 1;
                b[k] = 1;
                z = z.add(&WeylElement::from_xd(n, &a, &b, -c.clone()));
            }
        }
        z
    }

    /// `ξ ↦ trace dρ(ξ)`.
    pub fn trace_drho(&self) -> Result<Character> {
        let values = self
            .matrices
            .iter()
            .map(|m| (0..self.n).map(|i| m[i][i].clone()).sum())
            .collect();
        Character::new(&self.lie, values).map_err(|e| match e {
            Error::Validation(msg) => {
                Error::Validation(format!("trace of dρ is not a character: {msg}"))
            }
            other => other,
        })
    }

    pub fn trace_ad(&self) -> Character {
        self.lie.trace_ad()
    }

    /// `β′ = trace∘dρ − β`.
    pub fn beta_prime(&self, beta: &Character) -> Result<Character> {
        character_arith(&self.trace_drho()?, Some(beta), CharOp::Sub, &self.lie)
    }

    /// Parses `{"lie": {...}, "rep": {...}}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let lie_v = v
            .get("lie")
            .ok_or_else(|| Error::Parse("missing \"lie\" section".into()))?;
        let rep_v = v
            .get("rep")
            .ok_or_else(|| Error::Parse("missing \"rep\" section".into()))?;
        let dim = get_usize(lie_v, "dim", "lie")?;
        let mut brackets = Vec::new();
        if let Some(bs) = lie_v.get("brackets") {
            let bs = bs
                .as_array()
                .ok_or_else(|| Error::Parse("lie.brackets must be an array".into()))?;
            for (pos, entry) in bs.iter().enumerate() {
                let bad = || {
                    Error::Validation(format!(
                        "lie.brackets[{pos}]: expected [i, j, [c_0, ..., c_{}]]",
                        dim.saturating_sub(1)
                    ))
                };
                let arr = entry.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
                let i = arr[0].as_u64().ok_or_else(bad)? as usize;
                let j = arr[1].as_u64().ok_or_else(bad)? as usize;
                let cs = arr[2]
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(rational_from_json)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::Validation(format!("lie.brackets[{pos}] ({i},{j}): {e}")))?;
                brackets.push((i, j, cs));
            }
        }
        let scaling = match lie_v.get("scaling_element") {
            None | Some(Value::Null) => None,
            Some(s) => Some(s.as_u64().ok_or_else(|| {
                Error::Parse("lie.scaling_element must be a non-negative integer".into())
            })? as usize),
        };
        let mut lie = LieAlgebra::new(dim, &brackets, scaling)?;
        if let Some(labels) = lie_v.get("labels") {
            let labels = labels
                .as_array()
                .ok_or_else(|| Error::Parse("lie.labels must be an array of strings".into()))?
                .iter()
                .map(|l| {
                    l.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("lie.labels must be strings".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            lie = lie.with_labels(labels)?;
        }
        let n = get_usize(rep_v, "N", "rep")?;
        let mats_v = rep_v
            .get("matrices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("rep.matrices must be an array".into()))?;
        let mut matrices = Vec::new();
        for (j, m) in mats_v.iter().enumerate() {
            let rows = m
                .as_array()
                .ok_or_else(|| Error::Parse(format!("rep.matrices[{j}] must be an array")))?;
            let mut mat = Vec::new();
            for (r, row) in rows.iter().enumerate() {
                let row = row.as_array().ok_or_else(|| {
                    Error::Parse(format!("rep.matrices[{j}][{r}] must be an array"))
                })?;
                mat.push(
                    row.iter()
                        .map(rational_from_json)
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| Error::Parse(format!("rep.matrices[{j}][{r}]: {e}")))?,
                );
            }
            matrices.push(mat);
        }
        RepData::new(lie, n, matrices)
    }

    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .lie
            .bracket_table()
            .into_iter()
            .map(|(i, j, c)| json!([i, j, c.iter().map(rational_to_json).collect::<Vec<_>>()]))
            .collect();
        let mats: Vec<Value> = self
            .matrices
            .iter()
            .map(|m| {
                Value::Array(
                    m.iter()
                        .map(|r| Value::Array(r.iter().map(rational_to_json).collect()))
                        .collect(),
                )
            })
            .collect();
        let mut lie = json!({
            "dim": self.lie.dim,
            "labels": self.lie.labels,
            "brackets": brackets,
        });
        if let Some(e) = self.lie.scaling {
            lie["scaling_element"] = json!(e);
        }
        json!({ "lie": lie, "rep": { "N": self.n, "matrices": mats } })
    }
}

fn get_usize(v: &Value, key: &str, section: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{section}.{key} must be a non-negative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn sl2() -> RepData {
        let h = m(&[&[1, 0], &[0, -1]]);
        let e = m(&[&[0, 1], &[0, 0]]);
        let f = m(&[&[0, 0], &[1, 0]]);
        let mats = vec![h, e, f];
        let lie = LieAlgebra::from_matrices(&mats, None).unwrap();
        RepData::new(lie, 2, mats).unwrap()
    }

    #[test]
    fn sl2_structure_and_fields() {
        let r = sl2();
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h
        assert_eq!(r.lie().bracket(0, 1), &[rat(0), rat(2), rat(0)]);
        assert_eq!(r.lie().bracket(0, 2), &[rat(0), rat(0), rat(-2)]);
        assert_eq!(r.lie().bracket(1, 2), &[rat(1), rat(0), rat(0)]);
        assert!(r.lie().is_perfect());
        assert!(r.trace_ad().is_zero());
        assert!(r.trace_drho().unwrap().is_zero());
        assert_eq!(r.vector_field(0), WeylElement::parse(2, "-x1 d1 + x2 d2").unwrap());
        assert_eq!(r.vector_field(1), WeylElement::parse(2, "-x2 d1").unwrap());
    }

    #[test]
    fn vector_fields_respect_brackets() {
        let r = sl2();
        for i in 0..3 {
            for j in 0..3 {
                let lhs = r.vector_field(i).commutator(&r.vector_field(j));
                let mut rhs = WeylElement::zero(2);
                for (k, c) in r.lie().bracket(i, j).iter().enumerate() {
                    rhs = rhs.add(&r.vector_field(k).scale(c));
                }
                assert_eq!(lhs, rhs, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn borel_trace_ad() {
        let lie = LieAlgebra::new(2, &[(0, 1, vec![rat(0), rat(2)])], None).unwrap();
        assert_eq!(lie.trace_ad().values(), &[rat(2), rat(0)]);
        assert!(!lie.is_perfect());
    }

    #[test]
    fn validation_failures() {
        assert!(matches!(
            LieAlgebra::new(2, &[(0, 1, vec![rat(1), rat(0)]), (1, 0, vec![rat(1), rat(0)])], None),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            LieAlgebra::new(2, &[(0, 2, vec![rat(1), rat(0)])], None),
            Err(Error::Validation(_))
        ));
        // the cyclic Jacobi sum for (0, 1, 2) is ξ0
        let bad = LieAlgebra::new(
            3,
            &[
                (0, 1, vec![rat(0), rat(0), rat(1)]),
                (1, 2, vec![rat(1), rat(0), rat(0)]),
                (0, 2, vec![rat(0), rat(0), rat(1)]),
            ],
            None,
        );
        assert!(matches!(bad, Err(Error::Validation(_))));
        let lie = LieAlgebra::new(2, &[(0, 1, vec![rat(0), rat(1)])], None).unwrap();
        assert!(Character::new(&lie, vec![rat(0), rat(1)]).is_err());
        assert!(Character::new(&lie, vec![rat(5), rat(0)]).is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let r = sl2();
        let back = RepData::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
