//! Builders for the standard example instances: Veronese and Segre cones,
//! toric (GKZ) data.

use crate::error::{Error, Result};
use crate::ideal::{toric_ideal, PolyIdeal};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rational::{rat, ratio, Rational};
use crate::repdata::{identity, LieAlgebra, Matrix, RepData};
use crate::tautsys::OrbitClosureData;
use num_traits::{One, Zero};

/// Exponent vectors of degree `d` in `n` variables, lexicographically
/// descending: `(d,0,..), (d-1,1,..), ...`. These index the coordinates of
/// `Sym^d ℂ^n`.
pub fn sym_basis(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// `E_ij` as an `n×n` matrix (0-based).
pub fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i][j] = Rational::one();
    m
}

/// `dρ(E_ij)` on `Sym^d ℂ^n` in the coordinates `x_α` for which the cone over
/// the Veronese variety is cut out by binomials without coefficients:
/// row `α` has entry `α_i` in column `α − e_i + e_j`.
pub fn sym_power_matrix(n: usize, d: u32, i: usize, j: usize) -> Matrix {
    let basis = sym_basis(n, d);
    let index = |a: &Vec<u32>| basis.iter().position(|b| b == a).unwrap();
    let big = basis.len();
    let mut m = vec![vec![Rational::zero(); big]; big];
    for (r, alpha) in basis.iter().enumerate() {
        if alpha[i] == 0 {
            continue;
        }
        let mut gamma = alpha.clone();
        gamma[i] -= 1;
        gamma[j] += 1;
        m[r][index(&gamma)] += rat(alpha[i] as i64);
    }
    m
}

/// Quadratic binomials `x_α x_β − x_γ x_δ` (`α + β = γ + δ`) generating the
/// ideal of the cone over the degree-`d` Veronese embedding of `ℙ^{n-1}`.
pub fn veronese_ideal(n: usize, d: u32) -> Result<PolyIdeal> {
    let basis = sym_basis(n, d);
    let big = basis.len();
    let mut gens = Vec::new();
    let quad = |a: usize, b: usize| {
        let mut e = vec![0u32; big];
        e[a] += 1;
        e[b] += 1;
        Monomial(e)
    };
    let mut pairs = Vec::new();
    for a in 0..big {
        for b in a..big {
            pairs.push((a, b));
        }
    }
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for &(c, dd) in &pairs[p + 1..] {
            let s1: Vec<u32> = (0..n).map(|k| basis[a][k] + basis[b][k]).collect();
            let s2: Vec<u32> = (0..n).map(|k| basis[c][k] + basis[dd][k]).collect();
            if s1 == s2 {
                gens.push(
                    Poly::monomial(quad(a, b), Rational::one())
                        .sub(&Poly::monomial(quad(c, dd), Rational::one())),
                );
            }
        }
    }
    let ideal = PolyIdeal::new(big, gens)?;
    // minimal generating set from the reduced basis keeps instance files short
    let gb = ideal.groebner_basis()?.to_vec();
    PolyIdeal::new(big, gb)
}

/// `𝔤𝔩(n)` with basis `E_11, E_12, ..., E_nn` (row-major) acting on
/// `Sym^d ℂ^n`, and the Veronese cone. No scaling element is flagged.
pub fn veronese_gl(n: usize, d: u32) -> Result<(RepData, OrbitClosureData)> {
    if n == 0 || d == 0 {
        return Err(Error::Precondition("Veronese data needs n, d ≥ 1".into()));
    }
    let mut defining = Vec::new();
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            defining.push(elementary(n, i, j));
            mats.push(sym_power_matrix(n, d, i, j));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    let lie = LieAlgebra::from_matrices(&defining, None)?.with_labels(labels)?;
    let big = sym_basis(n, d).len();
    let rep = RepData::new(lie, big, mats)?;
    let y = OrbitClosureData::new(veronese_ideal(n, d)?, n)?;
    Ok((rep, y))
}

/// The quadric cone `x1 x3 − x2²` in `Sym² ℂ²` with basis
/// `e = ½·I, h, X = E12, Y = E21` of `𝔤𝔩(2)`; `e` acts as the identity.
pub fn quadric_cone() -> Result<(RepData, OrbitClosureData)> {
    let half = ratio(1, 2);
    let e2: Matrix = identity(2).iter().map(|r| r.iter().map(|x| x * &half).collect()).collect();
    let h2 = vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]];
    let defining = vec![e2, h2, elementary(2, 0, 1), elementary(2, 1, 0)];
    let s = |i, j| sym_power_matrix(2, 2, i, j);
    let sum = |a: &Matrix, b: &Matrix, cb: &Rational, ca: &Rational| -> Matrix {
        a.iter()
            .zip(b)
            .map(|(r, q)| r.iter().zip(q).map(|(x, y)| ca * x + cb * y).collect())
            .collect()
    };
    let e = sum(&s(0, 0), &s(1, 1), &half, &half);
    let h = sum(&s(0, 0), &s(1, 1), &rat(-1), &rat(1));
    let mats = vec![e, h, s(0, 1), s(1, 0)];
    let lie = LieAlgebra::from_matrices(&defining, Some(0))?
        .with_labels(vec!["e".into(), "h".into(), "X".into(), "Y".into()])?;
    let rep = RepData::new(lie, 3, mats)?;
    let y = OrbitClosureData::new(PolyIdeal::parse(3, &["x1 x3 - x2^2"])?, 2)?
        .with_ci_degrees(vec![2])?;
    Ok((rep, y))
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![Rational::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

/// The Segre cone `x1 x4 − x2 x3` in `ℂ² ⊗ ℂ²` (coordinates `x11, x12, x21,
/// x22`) under `ℂ* × SL(2) × SL(2)`; basis `e, H⊗1, E⊗1, F⊗1, 1⊗H, 1⊗E, 1⊗F`.
pub fn segre_cone() -> Result<(RepData, OrbitClosureData)> {
    let id = identity(2);
    let h = vec![vec![rat(1), rat(0)], vec![rat(0), rat(-1)]];
    let sl2 = [h, elementary(2, 0, 1), elementary(2, 1, 0)];
    let mut mats = vec![identity(4)];
    for x in &sl2 {
        mats.push(kron(x, &id));
    }
    for x in &sl2 {
        mats.push(kron(&id, x));
    }
    let labels = ["e", "H1", "E1", "F1", "H2", "E2", "F2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let lie = LieAlgebra::from_matrices(&mats, Some(0))?.with_labels(labels)?;
    let rep = RepData::new(lie, 4, mats)?;
    let y = OrbitClosureData::new(PolyIdeal::parse(4, &["x1 x4 - x2 x3"])?, 3)?
        .with_ci_degrees(vec![2])?;
    Ok((rep, y))
}

/// The torus of rank `d` acting on `ℂ^N` through the columns of `A`, with the
/// toric ideal `I_A`. A row of all ones is flagged as the scaling element.
pub fn gkz(a: &[Vec<i64>]) -> Result<(RepData, OrbitClosureData)> {
    let d = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if d == 0 || n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::Validation("matrix A must be a nonempty rectangle".into()));
    }
    let scaling = a.iter().position(|r| r.iter().all(|&x| x == 1));
    let lie = LieAlgebra::abelian(d, scaling)?
        .with_labels((1..=d).map(|i| format!("t{i}")).collect())?;
    let mats: Vec<Matrix> = a
        .iter()
        .map(|row| {
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|l| if k == l { rat(row[k]) } else { Rational::zero() })
                        .collect()
                })
                .collect()
        })
        .collect();
    let rep = RepData::new(lie, n, mats)?;
    let ideal = toric_ideal(a)?;
    let rank = crate::lattice::rank(a, n);
    let y = OrbitClosureData::new(ideal, rank)?;
    Ok((rep, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tautsys::check_g_stability;

    #[test]
    fn sym_coordinates() {
        assert_eq!(sym_basis(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(sym_basis(3, 3).len(), 10);
        let q = veronese_ideal(2, 2).unwrap();
        assert!(q.same_ideal(&PolyIdeal::parse(3, &["x1 x3 - x2^2"]).unwrap()).unwrap());
    }

    #[test]
    fn catalog_instances_are_stable() {
        for (rep, y) in [
            quadric_cone().unwrap(),
            segre_cone().unwrap(),
            veronese_gl(2, 2).unwrap(),
            veronese_gl(3, 3).unwrap(),
            gkz(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap(),
        ] {
            assert!(check_g_stability(&rep, &y).unwrap().passed());
        }
    }

    #[test]
    fn traces() {
        let (rep, _) = quadric_cone().unwrap();
        assert_eq!(rep.trace_drho().unwrap().values(), &[rat(3), rat(0), rat(0), rat(0)]);
        let (rep, _) = veronese_gl(2, 2).unwrap();
        assert_eq!(rep.trace_drho().unwrap().values(), &[rat(3), rat(0), rat(0), rat(3)]);
        let (rep, _) = gkz(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(rep.trace_drho().unwrap().values(), &[rat(3), rat(3)]);
        assert_eq!(rep.lie().scaling_element(), Some(0));
    }
}
