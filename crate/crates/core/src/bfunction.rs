//! Univariate polynomials over ℚ and the minimal polynomial of an operator
//! acting on a cyclic Weyl-algebra module by right multiplication.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Insert, SparseVec};
use crate::monomial::Monomial;
use crate::rational::{format_rational, Rational};
use crate::weyl::{WeylElement, WeylIdeal};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// `c0 + c1 s + ... + cd s^d`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `s − r`.
    pub fn linear(r: &Rational) -> Self {
        UniPoly::new(vec![-r.clone(), Rational::one()])
    }

    /// Monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(UniPoly::constant(Rational::one()), |acc, r| acc.mul(&UniPoly::linear(r)))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = Rational::one() / lc;
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * v + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(c − s)`.
    pub fn reflect(&self, c: &Rational) -> UniPoly {
        let arg = UniPoly::new(vec![c.clone(), -Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, k| acc.mul(&arg).add(&UniPoly::constant(k.clone())))
    }

    pub fn is_root(&self, v: &Rational) -> bool {
        self.eval(v).is_zero()
    }

    /// Multiplicity of `v` as a root (0 if not a root).
    pub fn multiplicity(&self, v: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = UniPoly::linear(v);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            k += 1;
            p = q;
        }
    }

    /// Distinct rational roots, ascending, by the rational root theorem on
    /// the primitive integer multiple. `None` if the constant or leading
    /// coefficient has too many divisors to enumerate.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        if p.coeffs[0].is_zero() {
            roots.push(Rational::zero());
            while p.coeffs.first().is_some_and(|c| c.is_zero()) {
                p.coeffs.remove(0);
            }
        }
        if p.degree() == Some(0) {
            return Some(roots);
        }
        let denom_lcm = p
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let ps = divisors(&ints[0].abs())?;
        let qs = divisors(&ints.last().unwrap().abs())?;
        let mut cands: Vec<Rational> = Vec::new();
        for a in &ps {
            for b in &qs {
                let r = Rational::new(a.clone(), b.clone());
                cands.push(r.clone());
                cands.push(-r);
            }
        }
        cands.sort();
        cands.dedup();
        roots.extend(cands.into_iter().filter(|r| p.is_root(r)));
        roots.sort();
        Some(roots)
    }

    /// `s (s - 1)` style factorisation when the polynomial splits over ℚ.
    pub fn factored(&self) -> Option<String> {
        let roots = self.rational_roots()?;
        let total: usize = roots.iter().map(|r| self.multiplicity(r)).sum();
        if Some(total) != self.degree() || self.leading() != Some(&Rational::one()) {
            return None;
        }
        if roots.is_empty() {
            return Some("1".into());
        }
        let mut parts = Vec::new();
        for r in &roots {
            let base = if r.is_zero() {
                "s".to_string()
            } else if r.is_negative() {
                format!("(s + {})", format_rational(&-r.clone()))
            } else {
                format!("(s - {})", format_rational(r))
            };
            match self.multiplicity(r) {
                1 => parts.push(base),
                m => parts.push(format!("{base}^{m}")),
            }
        }
        Some(parts.join(" "))
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const LIMIT: u64 = 1_000_000;
    if n.is_zero() {
        return Some(vec![BigInt::one()]);
    }
    let small: u64 = n.try_into().ok().filter(|&v: &u64| v <= LIMIT * LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
        if d > LIMIT {
            return None;
        }
    }
    Some(out)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "s".into(),
                _ => format!("s^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{} {mono}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// A b-function together with the operator it annihilates and the checks run
/// on it.
#[derive(Clone, Debug)]
pub struct BFunction {
    pub poly: UniPoly,
    pub theta: WeylElement,
    /// `b(θ)` reduces to zero modulo the ideal.
    pub certificate: bool,
    /// For each rational root `r`: whether `(b / (s − r))(θ)` is nonzero
    /// modulo the ideal.
    pub minimality: Vec<(Rational, bool)>,
}

impl BFunction {
    pub fn is_root(&self, v: &Rational) -> bool {
        self.poly.is_root(v)
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn is_minimal(&self) -> bool {
        self.minimality.iter().all(|(_, nonzero)| *nonzero)
    }
}

#[derive(Clone, Debug)]
pub enum BFunctionOutcome {
    Found(BFunction),
    /// The ideal is the unit ideal; the module is zero and `b` is undefined.
    ZeroModule,
    /// No relation among `θ^0..θ^cap`; carries the residues computed.
    CapExhausted { cap: usize, residues: Vec<WeylElement> },
}

/// `b(s) ≠ 0` exactly at the roots.
pub fn is_root(b: &UniPoly, v: &Rational) -> bool {
    b.is_root(v)
}

/// `p(θ)` by Horner's rule.
pub fn eval_operator(p: &UniPoly, theta: &WeylElement) -> WeylElement {
    let n = theta.nvars();
    p.coeffs()
        .iter()
        .rev()
        .fold(WeylElement::zero(n), |acc, c| {
            acc.mul(theta).add(&WeylElement::constant(n, c.clone()))
        })
}

/// The monic polynomial `b` of least degree with `b(θ) ∈ J₀`, found by a
/// linear dependency search among the normal forms of `1, θ, θ², …`.
///
/// Requires `J₀·θ ⊆ J₀`, which is checked on the Gröbner basis; then
/// `NF(θ^k) = NF(NF(θ^{k-1})·θ)`.
pub fn minimal_polynomial_of_theta(
    j0: &WeylIdeal,
    theta: &WeylElement,
    cap: usize,
) -> Result<BFunctionOutcome> {
    if cap == 0 {
        return Err(Error::Precondition("degree cap must be at least 1".into()));
    }
    if theta.nvars() != j0.nvars() {
        return Err(Error::Dimension(format!(
            "operator in D_{} against an ideal of D_{}",
            theta.nvars(),
            j0.nvars()
        )));
    }
    let reducer = j0.reducer()?;
    if reducer.is_unit() {
        return Ok(BFunctionOutcome::ZeroModule);
    }
    for g in reducer.basis() {
        if !reducer.reduce(&g.mul(theta)).is_zero() {
            return Err(Error::Precondition(format!(
                "right multiplication by {theta} does not preserve the ideal (basis element {g})"
            )));
        }
    }

    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut to_vec = |w: &WeylElement| -> SparseVec {
        w.terms()
            .map(|(m, c)| {
                let next = columns.len();
                (*columns.entry(m.clone()).or_insert(next), c.clone())
            })
            .collect()
    };

    let mut echelon = Echelon::tracking();
    let mut residues = Vec::new();
    let mut r = reducer.reduce(&WeylElement::one(j0.nvars()));
    for _k in 0..=cap {
        let v = to_vec(&r);
        residues.push(r.clone());
        if let Insert::Dependent(combo) = echelon.insert(v) {
            let mut coeffs = vec![Rational::zero(); residues.len()];
            for (i, c) in combo {
                coeffs[i] = c;
            }
            let poly = UniPoly::new(coeffs);
            return Ok(BFunctionOutcome::Found(certify(j0, theta, poly)?));
        }
        r = reducer.reduce(&r.mul(theta));
    }
    Ok(BFunctionOutcome::CapExhausted { cap, residues })
}

fn certify(j0: &WeylIdeal, theta: &WeylElement, poly: UniPoly) -> Result<BFunction> {
    let reducer = j0.reducer()?;
    let certificate = reducer.reduce(&eval_operator(&poly, theta)).is_zero();
    if !certificate {
        return Err(Error::Defect(format!(
            "b(s) = {poly} found by dependency search but b(θ) is not in the ideal"
        )));
    }
    let mut minimality = Vec::new();
    for r in poly.rational_roots().unwrap_or_default() {
        let (q, _) = poly.div_rem(&UniPoly::linear(&r));
        let nonzero = !reducer.reduce(&eval_operator(&q, theta)).is_zero();
        minimality.push((r, nonzero));
    }
    Ok(BFunction {
        poly,
        theta: theta.clone(),
        certificate,
        minimality,
    })
}
