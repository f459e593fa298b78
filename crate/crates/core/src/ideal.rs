//! Commutative ideals: Gröbner bases, normal forms, toric ideals.

use crate::error::{Error, Result};
use crate::groebner::{Engine, GbBudget, Reducer, Terms};
use crate::lattice::integer_kernel;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{CommRing, Poly};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::sync::OnceLock;

/// An ideal of ℚ[x1..xN] given by generators, with a lazily computed
/// reduced Gröbner basis for `order`.
#[derive(Clone, Debug)]
pub struct PolyIdeal {
    nvars: usize,
    generators: Vec<Poly>,
    order: TermOrder,
    gb: OnceLock<Vec<Poly>>,
    reducer: OnceLock<Reducer>,
}

impl PolyIdeal {
    pub fn new(nvars: usize, generators: Vec<Poly>) -> Result<Self> {
        PolyIdeal::with_order(nvars, generators, TermOrder::DegRevLex)
    }

    pub fn with_order(nvars: usize, generators: Vec<Poly>, order: TermOrder) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::Dimension(format!(
                    "generator {g} lives in {} variables, ideal in {nvars}",
                    g.nvars()
                )));
            }
        }
        order.validate(nvars)?;
        Ok(PolyIdeal {
            nvars,
            generators,
            order,
            gb: OnceLock::new(),
            reducer: OnceLock::new(),
        })
    }

    pub fn zero(nvars: usize) -> Self {
        PolyIdeal::new(nvars, Vec::new()).expect("empty generator list")
    }

    pub fn parse(nvars: usize, gens: &[&str]) -> Result<Self> {
        let g = gens
            .iter()
            .map(|s| Poly::parse(nvars, s))
            .collect::<Result<Vec<_>>>()?;
        PolyIdeal::new(nvars, g)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Cached reduced Gröbner basis for the ideal's own order.
    pub fn groebner_basis(&self) -> Result<&[Poly]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = groebner(self, &self.order)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        normal_form(p, self)
    }

    fn prepared(&self) -> Result<&Reducer> {
        if let Some(r) = self.reducer.get() {
            return Ok(r);
        }
        let maps: Vec<Terms> = self
            .groebner_basis()?
            .iter()
            .map(|g| g.as_map().clone())
            .collect();
        let ring = CommRing { nvars: self.nvars };
        let _ = self.reducer.set(Reducer::new(&ring, &self.order, &maps));
        Ok(self.reducer.get().expect("just set"))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].degree() == Some(0))
    }

    /// Same ideal, checked by mutual membership of generators.
    pub fn same_ideal(&self, other: &PolyIdeal) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Leading monomials of the cached basis.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| g.leading_term(&self.order).unwrap().0)
            .collect())
    }
}

/// Reduced Gröbner basis of `ideal` under `order`. Zero generators are skipped;
/// the output does not depend on the order in which generators are listed.
pub fn groebner(ideal: &PolyIdeal, order: &TermOrder) -> Result<Vec<Poly>> {
    groebner_with_budget(ideal, order, &GbBudget::default())
}

pub fn groebner_with_budget(
    ideal: &PolyIdeal,
    order: &TermOrder,
    budget: &GbBudget,
) -> Result<Vec<Poly>> {
    order.validate(ideal.nvars)?;
    let ring = CommRing {
        nvars: ideal.nvars,
    };
    let engine = Engine::new(&ring, order);
    let gens: Vec<Terms> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.as_map().clone())
        .collect();
    let gb = engine.groebner(&gens, budget)?;
    Ok(gb
        .into_iter()
        .map(|t| Poly::from_map(ideal.nvars, t))
        .collect())
}

/// Remainder of `p` under full reduction by the ideal's Gröbner basis;
/// zero exactly when `p` lies in the ideal.
pub fn normal_form(p: &Poly, ideal: &PolyIdeal) -> Result<Poly> {
    if p.nvars() != ideal.nvars {
        return Err(Error::Dimension(format!(
            "polynomial in {} variables reduced against ideal in {}",
            p.nvars(),
            ideal.nvars
        )));
    }
    let reducer = ideal.prepared()?;
    let ring = CommRing {
        nvars: ideal.nvars,
    };
    Ok(Poly::from_map(
        ideal.nvars,
        reducer.reduce(&ring, &ideal.order, p.as_map()),
    ))
}

/// Checks Buchberger's criterion on a candidate basis.
pub fn is_groebner_basis(basis: &[Poly], order: &TermOrder) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let ring = CommRing {
        nvars: first.nvars(),
    };
    let engine = Engine::new(&ring, order);
    let maps: Vec<Terms> = basis.iter().map(|g| g.as_map().clone()).collect();
    engine.is_groebner(&maps)
}

/// The binomial `x^{u+} - x^{u-}` of an integer vector.
pub fn lattice_binomial(u: &[BigInt]) -> Poly {
    let n = u.len();
    let mut pos = vec![0u32; n];
    let mut neg = vec![0u32; n];
    for (i, x) in u.iter().enumerate() {
        let e: u32 = x.abs().try_into().expect("exponent fits in u32");
        if x.is_positive() {
            pos[i] = e;
        } else {
            neg[i] = e;
        }
    }
    Poly::monomial(Monomial(pos), Rational::one()).sub(&Poly::monomial(Monomial(neg), Rational::one()))
}

/// The toric ideal `I_A = (x^u - x^v : Au = Av)`.
///
/// A lattice basis of `ker_ℤ A` gives a lattice-basis ideal, which is then
/// saturated by `x1⋯xN` through an extra variable `t` with the relation
/// `t·x1⋯xN − 1` and elimination of `t`.
pub fn toric_ideal(a: &[Vec<i64>]) -> Result<PolyIdeal> {
    toric_ideal_with_budget(a, &GbBudget::default())
}

pub fn toric_ideal_with_budget(a: &[Vec<i64>], budget: &GbBudget) -> Result<PolyIdeal> {
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    if n == 0 {
        return Err(Error::Precondition("toric matrix has no columns".into()));
    }
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("ragged toric matrix".into()));
    }
    for j in 0..n {
        if a.iter().all(|r| r[j] == 0) {
            return Err(Error::Precondition(format!("column {j} of A is zero")));
        }
    }
    let kernel = integer_kernel(a, n);
    if kernel.is_empty() {
        return PolyIdeal::new(n, Vec::new());
    }
    let basis_ideal: Vec<Poly> = kernel.iter().map(|u| lattice_binomial(u)).collect();

    // extended ring: x1..xN, t
    let ext = n + 1;
    let lift = |p: &Poly| {
        Poly::from_terms(
            ext,
            p.terms().map(|(m, c)| {
                let mut e = m.0.clone();
                e.push(0);
                (e, c.clone())
            }),
        )
    };
    let mut gens: Vec<Poly> = basis_ideal.iter().map(lift).collect();
    let mut all = vec![1u32; ext];
    all[n] = 1;
    gens.push(Poly::monomial(Monomial(all), Rational::one()).sub(&Poly::one(ext)));

    let mut w = vec![0i64; ext];
    w[n] = 1;
    let elim = TermOrder::Weighted(w);
    let ext_ideal = PolyIdeal::with_order(ext, gens, elim.clone())?;
    let gb = groebner_with_budget(&ext_ideal, &elim, budget).map_err(|e| match e {
        Error::Resource { what, size } => Error::Resource {
            what: format!(
                "{what}; partial data: lattice basis ideal ({})",
                basis_ideal
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            size,
        },
        other => other,
    })?;
    let eliminated: Vec<Poly> = gb
        .into_iter()
        .filter(|g| g.terms().all(|(m, _)| m.0[n] == 0))
        .map(|g| Poly::from_terms(n, g.terms().map(|(m, c)| (m.0[..n].to_vec(), c.clone()))))
        .collect();
    let ideal = PolyIdeal::new(n, eliminated)?;
    let reduced = ideal.groebner_basis()?.to_vec();
    PolyIdeal::new(n, reduced)
}

/// Whether the generators are all zero (the zero ideal).
pub fn is_zero_ideal(ideal: &PolyIdeal) -> bool {
    ideal.generators.iter().all(|g| g.is_zero())
}
