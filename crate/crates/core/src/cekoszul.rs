//! The complex `C•(O_Ȳ, β′)` with terms `D_V/D_V·I_Ȳ ⊗ ∧^ℓ 𝔤` and the
//! Chevalley–Eilenberg differential for the right module structure
//! `P·ξ = P·Z_V(ξ) − β′(ξ)·P`.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::repdata::{Character, RepData};
use crate::tautsys::{build_taut, check_g_stability, OrbitClosureData};
use crate::weyl::{WeylElement, WeylIdeal};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Debug)]
pub struct CEComplex {
    rep: RepData,
    y: OrbitClosureData,
    twist: Character,
    coeff_ideal: WeylIdeal,
    fields: Vec<WeylElement>,
}

impl CEComplex {
    /// `twist` is the β′ of the module `O_Ȳ{β′}`.
    pub fn new(rep: &RepData, y: &OrbitClosureData, twist: &Character) -> Result<Self> {
        let report = check_g_stability(rep, y)?;
        if let Some((j, k, r)) = report.failures.first() {
            return Err(Error::Precondition(format!(
                "ideal is not stable under ξ_{j}: generator {k} maps to {r}"
            )));
        }
        twist.check(rep.lie())?;
        if twist.len() != rep.lie().dim() {
            return Err(Error::Dimension("twist has the wrong length".into()));
        }
        let n = rep.dim_v();
        // a commutative Gröbner basis of I is a left Gröbner basis of D·I
        let gens = y
            .ideal
            .groebner_basis()?
            .iter()
            .map(WeylElement::from_poly)
            .collect();
        let coeff_ideal = WeylIdeal::new(n, gens)?;
        let fields = (0..rep.lie().dim()).map(|j| rep.vector_field(j)).collect();
        Ok(CEComplex {
            rep: rep.clone(),
            y: y.clone(),
            twist: twist.clone(),
            coeff_ideal,
            fields,
        })
    }

    /// The complex `T̂(ρ, Ȳ, β) = C•(O_Ȳ, β′)`.
    pub fn for_beta(rep: &RepData, y: &OrbitClosureData, beta: &Character) -> Result<Self> {
        CEComplex::new(rep, y, &rep.beta_prime(beta)?)
    }

    pub fn rep(&self) -> &RepData {
        &self.rep
    }

    pub fn orbit_closure(&self) -> &OrbitClosureData {
        &self.y
    }

    pub fn twist(&self) -> &Character {
        &self.twist
    }

    /// `m = dim 𝔤`.
    pub fn m(&self) -> usize {
        self.rep.lie().dim()
    }

    pub fn nvars(&self) -> usize {
        self.rep.dim_v()
    }

    /// Canonical representative modulo `D_V·I_Ȳ`.
    pub fn reduce(&self, p: &WeylElement) -> Result<WeylElement> {
        Ok(self.coeff_ideal.reducer()?.reduce(p))
    }

    pub fn coefficient_ideal(&self) -> &WeylIdeal {
        &self.coeff_ideal
    }
}

/// `P·ξ_j = P·Z_V(ξ_j) − β′(ξ_j)·P`, reduced.
pub fn right_action(p: &WeylElement, j: usize, c: &CEComplex) -> Result<WeylElement> {
    if j >= c.m() {
        return Err(Error::Dimension(format!(
            "basis index {j} out of range for dimension {}",
            c.m()
        )));
    }
    let raw = p.mul(&c.fields[j]).sub(&p.scale(c.twist.get(j)));
    c.reduce(&raw)
}

/// An element of `N ⊗ ∧^ℓ 𝔤`, keyed by strictly increasing index lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    nvars: usize,
    ell: usize,
    terms: BTreeMap<Vec<usize>, WeylElement>,
}

/// Sorts `wedge`; returns the sign of the permutation, or `None` if an index
/// repeats.
pub fn canonical_wedge(wedge: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut w = wedge.to_vec();
    let mut sign = 1;
    for i in 1..w.len() {
        let mut k = i;
        while k > 0 && w[k - 1] > w[k] {
            w.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, sign))
}

impl Cochain {
    pub fn zero(nvars: usize, ell: usize) -> Self {
        Cochain {
            nvars,
            ell,
            terms: BTreeMap::new(),
        }
    }

    /// Degree `−ℓ` in cohomological grading; this returns `ℓ`.
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &WeylElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, wedge: &[usize]) -> Option<&WeylElement> {
        self.terms.get(wedge)
    }

    /// Adds `coeff ⊗ ξ_{w1} ∧ ... ∧ ξ_{wℓ}` for an arbitrary index order.
    pub fn add_term(&mut self, wedge: &[usize], coeff: &WeylElement) {
        assert_eq!(wedge.len(), self.ell, "wedge length");
        assert_eq!(coeff.nvars(), self.nvars, "coefficient ring");
        let Some((w, sign)) = canonical_wedge(wedge) else {
            return;
        };
        let c = if sign < 0 { coeff.neg() } else { coeff.clone() };
        let sum = match self.terms.remove(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!((self.nvars, self.ell), (other.nvars, other.ell));
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = Cochain::zero(self.nvars, self.ell);
        for (w, p) in &self.terms {
            out.add_term(w, &p.scale(c));
        }
        out
    }

    /// Applies `reduce` to every coefficient.
    pub fn reduced(&self, c: &CEComplex) -> Result<Cochain> {
        let mut out = Cochain::zero(self.nvars, self.ell);
        for (w, p) in &self.terms {
            out.add_term(w, &c.reduce(p)?);
        }
        Ok(out)
    }

    /// Parses lines `[i1^i2^...] <Weyl element>` (0-based basis indices;
    /// `[]` in degree 0). Blank lines and `#` comments are ignored.
    pub fn parse(text: &str, nvars: usize, m: usize) -> Result<Cochain> {
        let mut out: Option<Cochain> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let rest = line
                .strip_prefix('[')
                .ok_or_else(|| err("expected '[' to open the wedge".into()))?;
            let close = rest
                .find(']')
                .ok_or_else(|| err("missing ']' after the wedge".into()))?;
            let inner = rest[..close].trim();
            let wedge: Vec<usize> = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split('^')
                    .map(|t| {
                        let i: usize = t
                            .trim()
                            .parse()
                            .map_err(|_| err(format!("bad wedge index {t:?}")))?;
                        if i >= m {
                            return Err(err(format!("wedge index {i} out of range 0..{m}")));
                        }
                        Ok(i)
                    })
                    .collect::<Result<_>>()?
            };
            let coeff = WeylElement::parse(nvars, rest[close + 1..].trim())
                .map_err(|e| err(e.to_string()))?;
            let c = out.get_or_insert_with(|| Cochain::zero(nvars, wedge.len()));
            if wedge.len() != c.ell {
                return Err(err(format!(
                    "wedge of length {} in a cochain of degree {}",
                    wedge.len(),
                    c.ell
                )));
            }
            if canonical_wedge(&wedge).is_none() {
                return Err(err("repeated wedge index".into()));
            }
            c.add_term(&wedge, &coeff);
        }
        out.ok_or_else(|| Error::Parse("empty cochain".into()))
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, p) in &self.terms {
            let idx: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            writeln!(f, "[{}] {}", idx.join("^"), p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(ℓ={}; {} terms)\n{self}", self.ell, self.terms.len())
    }
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `δ(n ⊗ ξ_{i1}∧…∧ξ_{iℓ}) = Σ_p (−1)^{p+1} (n·ξ_{ip}) ⊗ …ξ̂_{ip}…
/// + Σ_{p<q} (−1)^{p+q} n ⊗ [ξ_{ip}, ξ_{iq}] ∧ …ξ̂_{ip}…ξ̂_{iq}…`
/// with `p, q` counted from 1.
pub fn differential(c: &Cochain, cx: &CEComplex) -> Result<Cochain> {
    if c.ell == 0 {
        return Err(Error::Precondition("the differential is zero on degree 0".into()));
    }
    if c.nvars != cx.nvars() {
        return Err(Error::Dimension("cochain over a different Weyl algebra".into()));
    }
    let lie = cx.rep.lie();
    let mut out = Cochain::zero(c.nvars, c.ell - 1);
    for (w, n) in &c.terms {
        if w.iter().any(|&i| i >= cx.m()) {
            return Err(Error::Dimension(format!("wedge {w:?} out of range")));
        }
        let l = w.len();
        for p in 0..l {
            let rest: Vec<usize> = w.iter().enumerate().filter(|(k, _)| *k != p).map(|(_, &i)| i).collect();
            let acted = right_action(n, w[p], cx)?;
            out.add_term(&rest, &acted.scale(&sign(p)));
        }
        for p in 0..l {
            for q in p + 1..l {
                let rest: Vec<usize> = w
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != p && *k != q)
                    .map(|(_, &i)| i)
                    .collect();
                // (−1)^{(p+1)+(q+1)} = (−1)^{p+q}
                let s = sign(p + q);
                for (k, ck) in lie.bracket(w[p], w[q]).iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    let mut wedge = vec![k];
                    wedge.extend(&rest);
                    out.add_term(&wedge, &n.scale(&(&s * ck)));
                }
            }
        }
    }
    out.reduced(cx)
}

/// The left ideal generated by `I_Ȳ` and `δ(1 ⊗ ξ_j)`.
pub fn h0_presentation(cx: &CEComplex) -> Result<WeylIdeal> {
    let n = cx.nvars();
    let mut gens: Vec<WeylElement> = cx
        .y
        .ideal
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .map(WeylElement::from_poly)
        .collect();
    for j in 0..cx.m() {
        let mut c = Cochain::zero(n, 1);
        c.add_term(&[j], &WeylElement::one(n));
        let d = differential(&c, cx)?;
        gens.push(
            d.coefficient(&[])
                .cloned()
                .unwrap_or_else(|| WeylElement::zero(n)),
        );
    }
    WeylIdeal::new(n, gens)
}

/// `h0_presentation` compared with the presentation of `τ̂` for the `β`
/// whose `β′` is the twist. A mismatch is a defect.
pub fn h0_matches_taut(cx: &CEComplex) -> Result<bool> {
    let beta = cx.rep.beta_prime(&cx.twist)?; // β = trace∘dρ − β′
    let taut = build_taut(&cx.rep, &cx.y, &beta, true)?;
    let h0 = h0_presentation(cx)?;
    let same = h0.same_ideal(&taut.weyl_ideal)?;
    if !same {
        return Err(Error::Defect(
            "H⁰ of the complex and the τ̂ presentation define different ideals".into(),
        ));
    }
    Ok(same)
}

/// `ζ = Σ_{a ∈ {1..n}^n} (−1)^{Σ a_i} x_{a1}⋯x_{an} Ê_{1a1} ∧ ⋯ ∧ Ê_{n an}`
/// for `𝔤𝔩(n)` acting on `Sym^d ℂ^n`: the wedge is the full ordered wedge of
/// `E_11, E_12, …, E_nn` with the `n` factors `E_{i a_i}` removed, and the
/// degree-`n` monomial in `ℂ^n` is rewritten in the coordinates of
/// `Sym^d ℂ^n` modulo the Veronese ideal.
pub fn veronese_zeta(n: usize, d: u32, y: &OrbitClosureData) -> Result<Cochain> {
    if d == 0 || n % d as usize != 0 {
        return Err(Error::Precondition(format!("d = {d} does not divide n = {n}")));
    }
    let basis = crate::catalog::sym_basis(n, d);
    let big = basis.len();
    if y.nvars() != big {
        return Err(Error::Dimension(format!(
            "Veronese cochain lives over {big} coordinates, ideal over {}",
            y.nvars()
        )));
    }
    let m = n * n;
    let mut zeta = Cochain::zero(big, m - n);
    let mut a = vec![0usize; n];
    loop {
        let removed: Vec<usize> = (0..n).map(|i| i * n + a[i]).collect();
        let wedge: Vec<usize> = (0..m).filter(|k| !removed.contains(k)).collect();
        let mut sorted = a.clone();
        sorted.sort();
        let mut exps = vec![0u32; big];
        for chunk in sorted.chunks(d as usize) {
            let mut alpha = vec![0u32; n];
            for &v in chunk {
                alpha[v] += 1;
            }
            let idx = basis.iter().position(|b| *b == alpha).expect("degree-d monomial");
            exps[idx] += 1;
        }
        // a is 0-based here; Σ (a_i + 1) has the parity of Σ a_i + n
        let parity = a.iter().sum::<usize>() + n;
        let poly = Poly::monomial(Monomial(exps), sign(parity));
        let reduced = y.ideal.normal_form(&poly)?;
        zeta.add_term(&wedge, &WeylElement::from_poly(&reduced));
        // next a in {0..n-1}^n, first index fastest
        let mut k = 0;
        while k < n {
            a[k] += 1;
            if a[k] < n {
                break;
            }
            a[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    Ok(zeta)
}

#[derive(Clone, Debug)]
pub struct CycleResult {
    pub is_cycle: bool,
    pub residual: Cochain,
}

pub fn cycle_check(c: &Cochain, cx: &CEComplex) -> Result<CycleResult> {
    let residual = differential(c, cx)?;
    Ok(CycleResult {
        is_cycle: residual.is_zero(),
        residual,
    })
}

/// One row of a truncated homology table, for `N ⊗ ∧^ℓ 𝔤`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRow {
    pub ell: usize,
    /// `−ℓ`.
    pub degree: i64,
    pub term_dim: usize,
    /// Rank of `δ_ℓ` on the truncated term.
    pub rank: usize,
    pub nullity: usize,
    /// Dimension of `δ_{ℓ+1}(T_{ℓ+1}) ∩ T_ℓ`.
    pub boundaries: usize,
    pub apparent_homology: usize,
}

#[derive(Clone, Debug)]
pub struct HomologyProfile {
    pub weight: i64,
    pub cap: u32,
    pub slice_dim: usize,
    pub rows: Vec<HomologyRow>,
    /// Always true: the Bernstein cap makes these dimensions approximate.
    pub truncated: bool,
    /// `dim Ȳ − dim 𝔤`: below this degree the homology is expected to vanish.
    pub vanishing_below: i64,
}

impl HomologyProfile {
    /// Rows with cohomological degree below `dim Ȳ − dim 𝔤`.
    pub fn rows_below_range(&self) -> impl Iterator<Item = &HomologyRow> {
        self.rows.iter().filter(move |r| r.degree < self.vanishing_below)
    }
}

pub const DEFAULT_SLICE_LIMIT: usize = 20_000;

fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    crate::catalog::sym_basis(nvars, deg)
}

/// Standard monomials `x^a ∂^b` of `D/D·I` with `|a| − |b| = weight` and
/// `|a| + |b| ≤ cap`.
pub fn slice_basis(cx: &CEComplex, weight: i64, cap: u32, limit: usize) -> Result<Vec<Monomial>> {
    let n = cx.nvars();
    let lms: Vec<Monomial> = cx
        .coefficient_ideal()
        .reducer()?
        .leading_monomials()
        .into_iter()
        .map(|m| Monomial(m.0[..n].to_vec()))
        .collect();
    let mut out = Vec::new();
    for p in 0..=cap {
        let q = p as i64 - weight;
        if q < 0 || p as i64 + q > cap as i64 {
            continue;
        }
        let xs: Vec<Vec<u32>> = monomials_of_degree(n, p)
            .into_iter()
            .filter(|a| {
                let m = Monomial(a.clone());
                !lms.iter().any(|l| l.divides(&m))
            })
            .collect();
        let ds = monomials_of_degree(n, q as u32);
        if out.len() + xs.len() * ds.len() > limit {
            return Err(Error::Resource {
                what: format!("slice of weight {weight} up to Bernstein degree {cap} exceeds the limit {limit}"),
                size: out.len() + xs.len() * ds.len(),
            });
        }
        for a in &xs {
            for b in &ds {
                let mut e = a.clone();
                e.extend(b);
                out.push(Monomial(e));
            }
        }
    }
    Ok(out)
}

/// All strictly increasing index lists of length `k` from `0..m`.
pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Dimensions of the weight-`weight` part of the complex restricted to
/// Bernstein degree `≤ cap`. The differential raises Bernstein degree by at
/// most 2, so `δ_ℓ` is assembled as a map into the term truncated at `cap + 2`;
/// the apparent homology at `ℓ` is `dim ker δ_ℓ − dim(δ_{ℓ+1}(T_{ℓ+1}) ∩ T_ℓ)`.
pub fn truncated_homology_profile(
    cx: &CEComplex,
    weight: i64,
    cap: u32,
) -> Result<HomologyProfile> {
    truncated_homology_profile_with_limit(cx, weight, cap, DEFAULT_SLICE_LIMIT)
}

pub fn truncated_homology_profile_with_limit(
    cx: &CEComplex,
    weight: i64,
    cap: u32,
    limit: usize,
) -> Result<HomologyProfile> {
    let n = cx.nvars();
    for g in cx.y.ideal.groebner_basis()? {
        let d = g.degree().unwrap_or(0);
        if !g.is_homogeneous_of(d) {
            return Err(Error::Precondition(
                "weight slices need a homogeneous ideal".into(),
            ));
        }
    }
    let slice = slice_basis(cx, weight, cap, limit)?;
    let m = cx.m();
    // images δ_ℓ(T_ℓ) for ℓ = 1..=m: (rank, rank of the part above the cap)
    let mut image_ranks = vec![(0usize, 0usize); m + 2];
    let mut term_dims = vec![0usize; m + 1];
    for ell in 0..=m {
        let wedges = combinations(m, ell);
        term_dims[ell] = wedges.len() * slice.len();
        if ell == 0 {
            continue;
        }
        let mut columns: HashMap<(Vec<usize>, Monomial), usize> = HashMap::new();
        let mut high: Vec<bool> = Vec::new();
        let mut full = Echelon::new();
        let mut top = Echelon::new();
        for w in &wedges {
            for mono in &slice {
                let mut c = Cochain::zero(n, ell);
                c.add_term(w, &WeylElement::term(n, mono.clone(), Rational::one()));
                let d = differential(&c, cx)?;
                let mut v = SparseVec::new();
                let mut v_high = SparseVec::new();
                for (dw, coeff) in d.terms() {
                    for (dm, x) in coeff.terms() {
                        if WeylElement::term_weight(dm, n) != weight {
                            return Err(Error::Defect(format!(
                                "differential left the weight-{weight} slice"
                            )));
                        }
                        let key = (dw.clone(), dm.clone());
                        let next = columns.len();
                        let col = *columns.entry(key).or_insert_with(|| {
                            high.push(dm.degree() > cap);
                            next
                        });
                        v.insert(col, x.clone());
                        if high[col] {
                            v_high.insert(col, x.clone());
                        }
                    }
                }
                full.insert(v);
                top.insert(v_high);
            }
        }
        image_ranks[ell] = (full.rank(), top.rank());
    }
    let mut rows = Vec::new();
    for ell in 0..=m {
        let rank = image_ranks[ell].0;
        let nullity = term_dims[ell] - rank;
        let boundaries = if ell < m {
            image_ranks[ell + 1].0 - image_ranks[ell + 1].1
        } else {
            0
        };
        rows.push(HomologyRow {
            ell,
            degree: -(ell as i64),
            term_dim: term_dims[ell],
            rank,
            nullity,
            boundaries,
            apparent_homology: nullity - boundaries,
        });
    }
    Ok(HomologyProfile {
        weight,
        cap,
        slice_dim: slice.len(),
        rows,
        truncated: true,
        vanishing_below: cx.y.dim_y as i64 - m as i64,
    })
}
