//! Buchberger's algorithm with Gebauer–Möller pair management, shared by the
//! commutative polynomial ring and the Weyl algebra.
//!
//! The two rings differ only in how a monomial multiplies a polynomial from
//! the left, so the engine is generic over [`MonomialRing`]. In the Weyl
//! algebra the leading monomial of `m · p` is still `m · lm(p)` for every term
//! order (the correction terms of `∂x = x∂ + 1` divide the main term), which
//! is all Buchberger needs. The product criterion does not survive the
//! passage to the Weyl algebra and is switched off there.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub(crate) type Terms = BTreeMap<Monomial, Rational>;

pub(crate) trait MonomialRing {
    fn width(&self) -> usize;
    /// `m · p` (left multiplication).
    fn mul_monomial(&self, m: &Monomial, p: &Terms) -> Terms;
    /// Whether coprime leading monomials imply the S-polynomial reduces to 0.
    fn product_criterion(&self) -> bool;
}

/// Limits for a single Gröbner basis computation.
#[derive(Clone, Debug)]
pub struct GbBudget {
    /// Maximum number of S-polynomials reduced.
    pub max_pairs: usize,
    /// Maximum number of basis elements.
    pub max_basis: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_pairs: 200_000,
            max_basis: 20_000,
        }
    }
}

#[derive(Clone, Debug)]
struct Elem {
    poly: Terms,
    lm: Monomial,
    lc: Rational,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Vec<i64>,
}

pub(crate) struct Engine<'a, R: MonomialRing> {
    ring: &'a R,
    order: &'a TermOrder,
}

impl<'a, R: MonomialRing> Engine<'a, R> {
    pub fn new(ring: &'a R, order: &'a TermOrder) -> Self {
        Engine { ring, order }
    }

    pub fn leading(&self, p: &Terms) -> Option<(Monomial, Rational)> {
        p.iter()
            .max_by_key(|(m, _)| self.order.key(m))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    fn monic(&self, p: Terms) -> Terms {
        match self.leading(&p) {
            None => p,
            Some((_, lc)) => {
                let inv = Rational::one() / lc;
                p.into_iter().map(|(m, c)| (m, c * &inv)).collect()
            }
        }
    }

    fn elem(&self, poly: Terms) -> Elem {
        let (lm, lc) = self.leading(&poly).expect("nonzero polynomial");
        Elem { poly, lm, lc }
    }

    /// Full reduction of `p` modulo `basis`: no term of the result is
    /// divisible by a leading monomial of the basis.
    fn reduce(&self, p: &Terms, basis: &[&Elem]) -> Terms {
        let width = self.ring.width();
        let mut work: BTreeMap<Vec<i64>, Rational> = p
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (self.order.key(m), c.clone()))
            .collect();
        let mut rem = Terms::new();
        while let Some((key, c)) = work.pop_last() {
            let m = Monomial(key[key.len() - width..].iter().map(|&e| e as u32).collect());
            match basis.iter().find(|g| g.lm.divides(&m)) {
                None => {
                    rem.insert(m, c);
                }
                Some(g) => {
                    let q = g.lm.quotient_of(&m);
                    let factor = -(c / &g.lc);
                    let prod = self.ring.mul_monomial(&q, &g.poly);
                    for (pm, pc) in prod {
                        if pm == m {
                            // cancels the popped leading term exactly
                            continue;
                        }
                        let delta = &factor * pc;
                        match work.entry(self.order.key(&pm)) {
                            Entry::Occupied(mut o) => {
                                *o.get_mut() += delta;
                                if o.get().is_zero() {
                                    o.remove();
                                }
                            }
                            Entry::Vacant(v) => {
                                v.insert(delta);
                            }
                        }
                    }
                }
            }
        }
        rem
    }

    fn spoly(&self, f: &Elem, g: &Elem, lcm: &Monomial) -> Terms {
        let a = self.ring.mul_monomial(&f.lm.quotient_of(lcm), &f.poly);
        let b = self.ring.mul_monomial(&g.lm.quotient_of(lcm), &g.poly);
        let ca = Rational::one() / &f.lc;
        let cb = Rational::one() / &g.lc;
        let mut out = Terms::new();
        for (m, c) in a {
            *out.entry(m).or_insert_with(Rational::zero) += c * &ca;
        }
        for (m, c) in b {
            *out.entry(m).or_insert_with(Rational::zero) -= c * &cb;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Reduced Gröbner basis (monic, sorted by leading monomial, descending).
    pub fn groebner(&self, gens: &[Terms], budget: &GbBudget) -> Result<Vec<Terms>> {
        let width = self.ring.width();
        let mut elems: Vec<Elem> = Vec::new();
        let mut live: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let unit = || {
            let mut t = Terms::new();
            t.insert(Monomial::one(width), Rational::one());
            vec![t]
        };

        for g in gens {
            let basis: Vec<&Elem> = elems.iter().collect();
            let h = self.reduce(g, &basis);
            if h.is_empty() {
                continue;
            }
            let h = self.monic(h);
            if h.len() == 1 && h.keys().next().unwrap().is_one() {
                return Ok(unit());
            }
            self.update(&mut elems, &mut live, &mut pairs, self.elem(h));
        }

        let mut reduced_pairs = 0usize;
        while !pairs.is_empty() {
            // normal strategy: smallest lcm first, ties by index for determinism
            let (idx, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| a.key.cmp(&b.key).then((a.i, a.j).cmp(&(b.i, b.j))))
                .unwrap();
            let pair = pairs.swap_remove(idx);
            reduced_pairs += 1;
            if reduced_pairs > budget.max_pairs {
                return Err(Error::Resource {
                    what: format!(
                        "Gröbner pair budget exhausted with {} basis elements and {} pending pairs",
                        elems.len(),
                        pairs.len()
                    ),
                    size: reduced_pairs,
                });
            }
            let s = self.spoly(&elems[pair.i], &elems[pair.j], &pair.lcm);
            let basis: Vec<&Elem> = elems.iter().collect();
            let h = self.reduce(&s, &basis);
            if h.is_empty() {
                continue;
            }
            let h = self.monic(h);
            if h.len() == 1 && h.keys().next().unwrap().is_one() {
                return Ok(unit());
            }
            if elems.len() >= budget.max_basis {
                return Err(Error::Resource {
                    what: "Gröbner basis size budget exhausted".into(),
                    size: elems.len(),
                });
            }
            self.update(&mut elems, &mut live, &mut pairs, self.elem(h));
        }

        let minimal: Vec<Elem> = elems
            .iter()
            .zip(&live)
            .filter(|(_, l)| **l)
            .map(|(e, _)| e.clone())
            .collect();
        let mut out = Vec::with_capacity(minimal.len());
        for (i, g) in minimal.iter().enumerate() {
            let others: Vec<&Elem> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| e)
                .collect();
            let mut tail = g.poly.clone();
            tail.remove(&g.lm);
            let mut r = self.reduce(&tail, &others);
            r.insert(g.lm.clone(), g.lc.clone());
            out.push(self.monic(r));
        }
        out.sort_by(|a, b| {
            let la = self.leading(a).unwrap().0;
            let lb = self.leading(b).unwrap().0;
            self.order.key(&lb).cmp(&self.order.key(&la))
        });
        Ok(out)
    }

    fn update(&self, elems: &mut Vec<Elem>, live: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: Elem) {
        let prodcrit = self.ring.product_criterion();
        let hi = elems.len();
        let lh = h.lm.clone();

        let cand: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| live[g])
            .map(|g| (g, elems[g].lm.lcm(&lh)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (pos, (g, l)) in cand.iter().enumerate() {
            let coprime = prodcrit && elems[*g].lm.coprime(&lh);
            let dominated = cand[pos + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !(prodcrit && elems[*g].lm.coprime(&lh)))
            .map(|(g, l)| Pair {
                i: g,
                j: hi,
                key: self.order.key(&l),
                lcm: l,
            })
            .collect();

        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && elems[p.i].lm.lcm(&lh) != p.lcm
                && elems[p.j].lm.lcm(&lh) != p.lcm)
        });
        pairs.extend(fresh);

        for g in 0..hi {
            if live[g] && lh.divides(&elems[g].lm) {
                live[g] = false;
            }
        }
        elems.push(h);
        live.push(true);
    }

    /// Every S-polynomial of `gb` reduces to zero.
    pub fn is_groebner(&self, gb: &[Terms]) -> bool {
        let elems: Vec<Elem> = gb.iter().map(|g| self.elem(g.clone())).collect();
        let refs: Vec<&Elem> = elems.iter().collect();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let l = elems[i].lm.lcm(&elems[j].lm);
                let s = self.spoly(&elems[i], &elems[j], &l);
                if !self.reduce(&s, &refs).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// A prepared basis for repeated normal-form computations.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    elems: Vec<Elem>,
}

impl Reducer {
    pub fn new<R: MonomialRing>(ring: &R, order: &TermOrder, gb: &[Terms]) -> Self {
        let engine = Engine::new(ring, order);
        let elems = gb.iter().map(|g| engine.elem(g.clone())).collect();
        Reducer { elems }
    }

    pub fn reduce<R: MonomialRing>(&self, ring: &R, order: &TermOrder, p: &Terms) -> Terms {
        let refs: Vec<&Elem> = self.elems.iter().collect();
        Engine::new(ring, order).reduce(p, &refs)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm.clone()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}
