//! The Weyl algebra `D = ℚ⟨x1..xN, ∂1..∂N⟩` with `∂_i x_j = x_j ∂_i + δ_ij`.
//!
//! Elements are stored normally ordered: a term `c·x^a ∂^b` is keyed by the
//! exponent vector `a ++ b` of length `2N`.

use crate::error::{Error, Result};
use crate::groebner::{Engine, GbBudget, MonomialRing, Reducer, Terms};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Poly;
use crate::rational::{rat, Rational};
use crate::text::{format_factors, format_terms, parse_terms, VarKind};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

pub(crate) struct WeylRing {
    pub n: usize,
}

/// `x^a ∂^b · x^c ∂^d` expanded by Leibniz:
/// `∂_i^b x_i^c = Σ_k C(b,k) c!/(c-k)! x_i^{c-k} ∂_i^{b-k}`.
fn monomial_product(n: usize, left: &Monomial, right: &Monomial) -> Vec<(Monomial, BigInt)> {
    let mut acc: Vec<(Vec<u32>, BigInt)> = vec![(vec![0; 2 * n], BigInt::one())];
    for i in 0..n {
        let (a, b) = (left.0[i], left.0[n + i]);
        let (c, d) = (right.0[i], right.0[n + i]);
        let kmax = b.min(c);
        let mut options: Vec<(u32, BigInt)> = Vec::with_capacity(kmax as usize + 1);
        let mut binom = BigInt::one(); // C(b, k)
        let mut falling = BigInt::one(); // c!/(c-k)!
        for k in 0..=kmax {
            if k > 0 {
                binom = binom * BigInt::from(b - k + 1) / BigInt::from(k);
                falling *= BigInt::from(c - k + 1);
            }
            options.push((k, &binom * &falling));
        }
        if options.len() == 1 {
            for (e, _) in acc.iter_mut() {
                e[i] = a + c;
                e[n + i] = b + d;
            }
            continue;
        }
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for (e, coef) in &acc {
            for (k, w) in &options {
                let mut e2 = e.clone();
                e2[i] = a + c - k;
                e2[n + i] = b + d - k;
                next.push((e2, coef * w));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(e, c)| (Monomial(e), c)).collect()
}

impl MonomialRing for WeylRing {
    fn width(&self) -> usize {
        2 * self.n
    }

    fn mul_monomial(&self, m: &Monomial, p: &Terms) -> Terms {
        let mut out = Terms::new();
        for (t, c) in p {
            for (pm, w) in monomial_product(self.n, m, t) {
                let v = out.entry(pm).or_insert_with(Rational::zero);
                *v += c * Rational::from_integer(w);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn product_criterion(&self) -> bool {
        false
    }
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut w = WeylElement::zero(n);
        if !c.is_zero() {
            w.terms.insert(Monomial::one(2 * n), c);
        }
        w
    }

    pub fn one(n: usize) -> Self {
        WeylElement::constant(n, Rational::one())
    }

    /// `x_{i+1}`.
    pub fn x(n: usize, i: usize) -> Self {
        WeylElement::term(n, Monomial::var(2 * n, i), Rational::one())
    }

    /// `∂_{i+1}`.
    pub fn d(n: usize, i: usize) -> Self {
        WeylElement::term(n, Monomial::var(2 * n, n + i), Rational::one())
    }

    /// `c · x^a ∂^b`.
    pub fn term(n: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.width(), 2 * n);
        let mut w = WeylElement::zero(n);
        if !c.is_zero() {
            w.terms.insert(m, c);
        }
        w
    }

    pub fn from_xd(n: usize, a: &[u32], b: &[u32], c: Rational) -> Self {
        let mut e = a.to_vec();
        e.extend_from_slice(b);
        WeylElement::term(n, Monomial(e), c)
    }

    pub fn from_poly(p: &Poly) -> Self {
        let n = p.nvars();
        let mut w = WeylElement::zero(n);
        for (m, c) in p.terms() {
            let mut e = m.0.clone();
            e.extend(std::iter::repeat(0).take(n));
            w.terms.insert(Monomial(e), c.clone());
        }
        w
    }

    pub(crate) fn from_map(n: usize, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        WeylElement { n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.n
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

    /// The polynomial if no ∂ occurs.
    pub fn to_poly(&self) -> Option<Poly> {
        let n = self.n;
        if self.terms.keys().any(|m| m.0[n..].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Poly::from_terms(
            n,
            self.terms.iter().map(|(m, c)| (m.0[..n].to_vec(), c.clone())),
        ))
    }

    /// Largest `|a|+|b|` over the terms; `None` for zero.
    pub fn bernstein_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `|a| - |b|` of each term.
    pub fn term_weight(m: &Monomial, n: usize) -> i64 {
        m.0[..n].iter().map(|&e| e as i64).sum::<i64>() - m.0[n..].iter().map(|&e| e as i64).sum::<i64>()
    }

    /// The common ℂ*-weight if the element is weight-homogeneous.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(|m| Self::term_weight(m, self.n));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.n, other.n, "Weyl algebras of different rank");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.n, other.n, "Weyl algebras of different rank");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero(self.n);
        }
        WeylElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> WeylElement {
        self.scale(&-Rational::one())
    }

    /// Normally ordered product `self · other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.n, other.n, "Weyl algebras of different rank");
        let ring = WeylRing { n: self.n };
        let mut acc = Terms::new();
        for (m, c) in &self.terms {
            for (pm, pc) in ring.mul_monomial(m, &other.terms) {
                *acc.entry(pm).or_insert_with(Rational::zero) += c * pc;
            }
        }
        WeylElement::from_map(self.n, acc)
    }

    pub fn pow(&self, k: u32) -> WeylElement {
        let mut out = WeylElement::one(self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &WeylElement) -> WeylElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Applies the operator to a polynomial: `x^a ∂^b (f)`.
    pub fn apply(&self, f: &Poly) -> Poly {
        assert_eq!(self.n, f.nvars());
        let n = self.n;
        let mut out = Poly::zero(n);
        for (m, c) in &self.terms {
            let mut g = f.clone();
            for i in 0..n {
                for _ in 0..m.0[n + i] {
                    g = g.derivative(i);
                }
            }
            let xm = Poly::monomial(Monomial(m.0[..n].to_vec()), c.clone());
            out = out.add(&xm.mul(&g));
        }
        out
    }

    /// Parses e.g. `x1 d1 + 2` or `-x2 d1`. Factors within a term are
    /// multiplied left to right, so `d1 x1` means `x1 d1 + 1`.
    pub fn parse(n: usize, s: &str) -> Result<WeylElement> {
        let raw = parse_terms(s, n, true)?;
        let mut out = WeylElement::zero(n);
        for t in raw {
            let mut term = WeylElement::constant(n, t.coeff);
            for (kind, i, e) in t.factors {
                let f = match kind {
                    VarKind::X => WeylElement::x(n, i),
                    VarKind::D => WeylElement::d(n, i),
                };
                term = term.mul(&f.pow(e));
            }
            out = out.add(&term);
        }
        Ok(out)
    }

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

impl fmt::Display for WeylElement {
    /// Normally ordered, descending degrevlex on `(x, ∂)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let items: Vec<(Rational, String)> = self
            .sorted_terms(&TermOrder::DegRevLex)
            .into_iter()
            .map(|(m, c)| {
                let mut parts = Vec::new();
                format_factors(&m.0[..n], 'x', &mut parts);
                format_factors(&m.0[n..], 'd', &mut parts);
                (c, parts.join(" "))
            })
            .collect();
        write!(f, "{}", format_terms(&items))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weyl({self})")
    }
}

/// `a · b` in the Weyl algebra.
pub fn weyl_mul(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    if a.n != b.n {
        return Err(Error::Dimension(format!(
            "Weyl elements in {} and {} variables",
            a.n, b.n
        )));
    }
    Ok(a.mul(b))
}

/// A left ideal `D·(g1, ..., gk)` with a lazily computed left Gröbner basis.
#[derive(Clone, Debug)]
pub struct WeylIdeal {
    n: usize,
    generators: Vec<WeylElement>,
    order: TermOrder,
    gb: OnceLock<Vec<WeylElement>>,
    reducer: OnceLock<WeylReducer>,
}

impl WeylIdeal {
    pub fn new(n: usize, generators: Vec<WeylElement>) -> Result<Self> {
        WeylIdeal::with_order(n, generators, TermOrder::DegRevLex)
    }

    pub fn with_order(n: usize, generators: Vec<WeylElement>, order: TermOrder) -> Result<Self> {
        for g in &generators {
            if g.n != n {
                return Err(Error::Dimension(format!(
                    "generator {g} lives in D_{}, ideal in D_{n}",
                    g.n
                )));
            }
        }
        check_weyl_order(&order, n)?;
        Ok(WeylIdeal {
            n,
            generators,
            order,
            gb: OnceLock::new(),
            reducer: OnceLock::new(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn left_groebner_basis(&self) -> Result<&[WeylElement]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = weyl_left_groebner(self, &self.order)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn normal_form(&self, p: &WeylElement) -> Result<WeylElement> {
        weyl_normal_form(p, self)
    }

    pub fn contains(&self, p: &WeylElement) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.left_groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].bernstein_degree() == Some(0))
    }

    /// Equality of left ideals by mutual membership of generators.
    pub fn same_ideal(&self, other: &WeylIdeal) -> Result<bool> {
        Ok(self.generators.iter().try_fold(true, |ok, g| Ok::<_, Error>(ok && other.contains(g)?))?
            && other.generators.iter().try_fold(true, |ok, g| Ok::<_, Error>(ok && self.contains(g)?))?)
    }

    /// The cached reducer against the left Gröbner basis.
    pub fn reducer(&self) -> Result<&WeylReducer> {
        if let Some(r) = self.reducer.get() {
            return Ok(r);
        }
        let gb = self.left_groebner_basis()?.to_vec();
        let _ = self
            .reducer
            .set(WeylReducer::new(self.n, self.order.clone(), gb));
        Ok(self.reducer.get().expect("just set"))
    }
}

fn check_weyl_order(order: &TermOrder, n: usize) -> Result<()> {
    order.validate(2 * n)?;
    if !order.is_degree_compatible() {
        return Err(Error::Config(format!(
            "term order {order} does not refine a positive weight filtration on (x, d)"
        )));
    }
    Ok(())
}

/// Left Gröbner basis (reduced, monic).
pub fn weyl_left_groebner(ideal: &WeylIdeal, order: &TermOrder) -> Result<Vec<WeylElement>> {
    weyl_left_groebner_with_budget(ideal, order, &GbBudget::default())
}

pub fn weyl_left_groebner_with_budget(
    ideal: &WeylIdeal,
    order: &TermOrder,
    budget: &GbBudget,
) -> Result<Vec<WeylElement>> {
    check_weyl_order(order, ideal.n)?;
    let ring = WeylRing { n: ideal.n };
    let engine = Engine::new(&ring, order);
    let gens: Vec<Terms> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.terms.clone())
        .collect();
    Ok(engine
        .groebner(&gens, budget)?
        .into_iter()
        .map(|t| WeylElement::from_map(ideal.n, t))
        .collect())
}

/// Fully reduced remainder of `p` modulo the left ideal.
pub fn weyl_normal_form(p: &WeylElement, ideal: &WeylIdeal) -> Result<WeylElement> {
    if p.n != ideal.n {
        return Err(Error::Dimension(format!(
            "element of D_{} reduced against ideal of D_{}",
            p.n, ideal.n
        )));
    }
    Ok(ideal.reducer()?.reduce(p))
}

pub fn is_left_groebner_basis(basis: &[WeylElement], order: &TermOrder) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let ring = WeylRing { n: first.n };
    let engine = Engine::new(&ring, order);
    let maps: Vec<Terms> = basis.iter().map(|g| g.terms.clone()).collect();
    engine.is_groebner(&maps)
}

/// Reducer against a fixed left Gröbner basis.
#[derive(Clone, Debug)]
pub struct WeylReducer {
    n: usize,
    order: TermOrder,
    gb: Vec<WeylElement>,
    prepared: Reducer,
}

impl WeylReducer {
    pub fn new(n: usize, order: TermOrder, gb: Vec<WeylElement>) -> Self {
        let maps: Vec<Terms> = gb.iter().map(|g| g.terms.clone()).collect();
        let prepared = Reducer::new(&WeylRing { n }, &order, &maps);
        WeylReducer {
            n,
            order,
            gb,
            prepared,
        }
    }

    pub fn reduce(&self, p: &WeylElement) -> WeylElement {
        assert_eq!(p.n, self.n);
        if self.prepared.is_empty() {
            return p.clone();
        }
        let r = self
            .prepared
            .reduce(&WeylRing { n: self.n }, &self.order, &p.terms);
        WeylElement::from_map(self.n, r)
    }

    /// Leading monomials of the basis (exponents of length `2N`).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.prepared.leading_monomials()
    }

    pub fn basis(&self) -> &[WeylElement] {
        &self.gb
    }

    pub fn is_unit(&self) -> bool {
        self.gb.len() == 1 && self.gb[0].bernstein_degree() == Some(0)
    }
}

/// Convenience: the Euler operator `Σ x_i ∂_i`.
pub fn euler(n: usize) -> WeylElement {
    let mut e = WeylElement::zero(n);
    for i in 0..n {
        let mut a = vec![0; n];
        let mut b = vec![0; n];
        a[i] = 1;
        b[i] = 1;
        e = e.add(&WeylElement::from_xd(n, &a, &b, rat(1)));
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> WeylElement {
        WeylElement::parse(n, s).unwrap()
    }

    #[test]
    fn commutation_relations() {
        assert_eq!(w(1, "d1").mul(&w(1, "x1")), w(1, "x1 d1 + 1"));
        assert_eq!(w(1, "x1").mul(&w(1, "d1")), w(1, "x1 d1"));
        // ∂² x = x∂² + 2∂ by two Leibniz steps
        assert_eq!(w(1, "d1^2").mul(&w(1, "x1")), w(1, "x1 d1^2 + 2 d1"));
        assert_eq!(w(2, "d1").mul(&w(2, "x2")), w(2, "x2 d1"));
    }

    #[test]
    fn parse_orders_factors() {
        assert_eq!(w(1, "d1 x1"), w(1, "x1 d1 + 1"));
        let e = w(3, "-3/2 x1^2 x3 d2 + x2 d1 d3 - 7");
        assert_eq!(WeylElement::parse(3, &e.to_string()).unwrap(), e);
    }

    #[test]
    fn apply_operator() {
        let f = Poly::parse(2, "x1^2 x2").unwrap();
        assert_eq!(w(2, "x1 d1").apply(&f), Poly::parse(2, "2 x1^2 x2").unwrap());
        assert_eq!(w(2, "d1 d2").apply(&f), Poly::parse(2, "2 x1").unwrap());
    }

    #[test]
    fn trivial_ideals() {
        let j = WeylIdeal::new(1, vec![w(1, "d1")]).unwrap();
        assert_eq!(j.left_groebner_basis().unwrap(), &[w(1, "d1")]);
        let unit = WeylIdeal::new(2, vec![w(2, "x1 d2 + 1"), w(2, "1")]).unwrap();
        assert_eq!(unit.left_groebner_basis().unwrap(), &[WeylElement::one(2)]);
        assert!(unit.is_unit().unwrap());
    }

    #[test]
    fn left_ideal_is_not_two_sided() {
        // ∂1·x1 = x1∂1 + 1 lies in D·x1, x1∂1 does not
        let j = WeylIdeal::new(1, vec![w(1, "x1")]).unwrap();
        assert!(!j.is_unit().unwrap());
        assert!(j.contains(&w(1, "x1 d1 + 1")).unwrap());
        assert!(!j.contains(&w(1, "x1 d1")).unwrap());
    }

    #[test]
    fn euler_and_second_derivative() {
        // ∂·(x∂ − c) = x∂² + (1 − c)∂, so for c ≠ 1 the ideal contains ∂, then c.
        let c1 = WeylIdeal::new(1, vec![w(1, "x1 d1 - 1"), w(1, "d1^2")]).unwrap();
        assert!(!c1.is_unit().unwrap());
        assert!(is_left_groebner_basis(c1.left_groebner_basis().unwrap(), &TermOrder::DegRevLex));
        let c2 = WeylIdeal::new(1, vec![w(1, "x1 d1 - 2"), w(1, "d1^2")]).unwrap();
        assert!(c2.is_unit().unwrap());
    }

    #[test]
    fn rejects_lex() {
        assert!(matches!(
            WeylIdeal::with_order(1, vec![], TermOrder::Lex),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn weights_and_degrees() {
        let z = w(2, "-x1 d1 + x2 d2");
        assert_eq!(z.weight(), Some(0));
        assert_eq!(z.bernstein_degree(), Some(2));
        assert_eq!(w(2, "x1^2 d2 + x2").weight(), Some(1));
        assert_eq!(w(2, "x1 + d2").weight(), None);
    }
}
