//! Multivariate polynomials over ℚ in `x1..xN`.

use crate::error::{Error, Result};
use crate::groebner::{MonomialRing, Terms};
use crate::monomial::{Monomial, TermOrder};
use crate::rational::{rat, Rational};
use crate::text::{format_factors, format_terms, parse_terms, VarKind};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// The commutative ring ℚ[x1..xN] seen by the Gröbner engine.
pub(crate) struct CommRing {
    pub nvars: usize,
}

impl MonomialRing for CommRing {
    fn width(&self) -> usize {
        self.nvars
    }

    fn mul_monomial(&self, m: &Monomial, p: &Terms) -> Terms {
        p.iter().map(|(t, c)| (m.mul(t), c.clone())).collect()
    }

    fn product_criterion(&self) -> bool {
        true
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The variable `x_{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.width();
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub(crate) fn from_map(nvars: usize, terms: Terms) -> Self {
        let mut p = Poly { nvars, terms };
        p.terms.retain(|_, c| !c.is_zero());
        p
    }

    pub(crate) fn as_map(&self) -> &Terms {
        &self.terms
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Homogeneous of degree `d` (the zero polynomial counts as homogeneous).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by_key(|(m, _)| order.key(m))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    /// Exact `add`, `sub` or `mul`.
    pub fn arith(&self, other: &Poly, op: PolyOp) -> Result<Poly> {
        self.check(other)?;
        Ok(match op {
            PolyOp::Add => self.add(other),
            PolyOp::Sub => self.sub(other),
            PolyOp::Mul => self.mul(other),
        })
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: Terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(a.mul(b)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Poly::from_map(self.nvars, acc)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// ∂p/∂x_{i+1}.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm.0[i] -= 1;
            out.add_term(nm, c * rat(e as i64));
        }
        out
    }

    /// Substitutes polynomials (all in a common ring) for the variables.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "substitution needs {} images, got {}",
                self.nvars,
                images.len()
            )));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Parses e.g. `x1*x3 - x2^2` or `-3/2 x1^2 x3 + 1`.
    pub fn parse(nvars: usize, s: &str) -> Result<Poly> {
        let raw = parse_terms(s, nvars, false)?;
        let mut p = Poly::zero(nvars);
        for t in raw {
            let mut e = vec![0u32; nvars];
            for (kind, i, k) in t.factors {
                debug_assert_eq!(kind, VarKind::X);
                e[i] += k;
            }
            p.add_term(Monomial(e), t.coeff);
        }
        Ok(p)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by_key(|(m, _)| std::cmp::Reverse(order.key(m)));
        v
    }
}

impl fmt::Display for Poly {
    /// Descending degrevlex; the output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<(Rational, String)> = self
            .sorted_terms(&TermOrder::DegRevLex)
            .into_iter()
            .map(|(m, c)| {
                let mut parts = Vec::new();
                format_factors(&m.0, 'x', &mut parts);
                (c, parts.join(" "))
            })
            .collect();
        write!(f, "{}", format_terms(&items))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(s: &str) -> Poly {
        Poly::parse(3, s).unwrap()
    }

    #[test]
    fn cancellation_and_identity() {
        let a = p("x1 + x2");
        let b = p("-x2");
        assert_eq!(a.arith(&b, PolyOp::Add).unwrap(), p("x1"));
        let q = p("x1 x3 - x2^2");
        assert_eq!(q.arith(&Poly::one(3), PolyOp::Mul).unwrap(), q);
    }

    #[test]
    fn difference_of_squares() {
        // (x1+x2)(x1-x2) by hand: x1^2 - x1x2 + x2x1 - x2^2
        let prod = p("x1 + x2").mul(&p("x1 - x2"));
        let expected = Poly::from_terms(
            3,
            vec![(vec![2, 0, 0], rat(1)), (vec![0, 2, 0], rat(-1))],
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn mismatched_dimension() {
        let a = Poly::one(2);
        let b = Poly::one(3);
        assert!(matches!(a.arith(&b, PolyOp::Add), Err(Error::Dimension(_))));
    }

    #[test]
    fn print_parse_roundtrip() {
        let q = Poly::from_terms(
            3,
            vec![
                (vec![2, 0, 1], ratio(-3, 2)),
                (vec![0, 1, 0], rat(1)),
                (vec![0, 0, 0], ratio(7, 3)),
            ],
        );
        let s = q.to_string();
        assert_eq!(s, "-3/2 x1^2 x3 + x2 + 7/3");
        assert_eq!(Poly::parse(3, &s).unwrap(), q);
        assert_eq!(Poly::zero(3).to_string(), "0");
        assert_eq!(Poly::parse(3, "0").unwrap(), Poly::zero(3));
    }

    #[test]
    fn parse_errors() {
        assert!(Poly::parse(2, "x3").is_err());
        assert!(Poly::parse(2, "x1 +").is_err());
        assert!(Poly::parse(2, "d1").is_err());
        assert!(Poly::parse(2, "x1 x2 y").is_err());
        assert!(Poly::parse(2, "").is_err());
    }

    #[test]
    fn derivative_and_substitution() {
        let q = p("x1 x3 - x2^2");
        assert_eq!(q.derivative(1), p("-2 x2"));
        // x_i -> y-monomials of the Veronese embedding
        let y = |s: &str| Poly::parse(2, s).unwrap();
        let img = q
            .substitute(&[y("x1^2"), y("x1 x2"), y("x2^2")])
            .unwrap();
        assert!(img.is_zero());
    }
}
