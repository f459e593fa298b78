//! Exponent vectors and term orders.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector. For commutative polynomials the length is the number of
/// variables `N`; Weyl-algebra terms use length `2N` (x-exponents, then
/// ∂-exponents).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(width: usize) -> Self {
        Monomial(vec![0; width])
    }

    pub fn var(width: usize, i: usize) -> Self {
        let mut e = vec![0; width];
        e[i] = 1;
        Monomial(e)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial orders. `Weighted` compares by the weight first and breaks ties
/// with degrevlex, so any non-negative weight vector gives a well-order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
    Weighted(Vec<i64>),
}

impl TermOrder {
    /// Sort key: comparing keys lexicographically compares monomials under
    /// this order. The exponents are appended so the key alone determines
    /// the monomial.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = &m.0;
        let mut k = Vec::with_capacity(2 * e.len() + 2);
        match self {
            TermOrder::Lex => {}
            TermOrder::DegRevLex => {
                k.push(m.degree() as i64);
                k.extend(e.iter().rev().map(|&x| -(x as i64)));
            }
            TermOrder::Weighted(w) => {
                k.push(w.iter().zip(e).map(|(w, &x)| w * x as i64).sum());
                k.push(m.degree() as i64);
                k.extend(e.iter().rev().map(|&x| -(x as i64)));
            }
        }
        k.extend(e.iter().map(|&x| x as i64));
        k
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Checks the order is a well-order on monomials of the given width.
    pub fn validate(&self, width: usize) -> Result<()> {
        if let TermOrder::Weighted(w) = self {
            if w.len() != width {
                return Err(Error::Dimension(format!(
                    "weight vector has length {}, expected {width}",
                    w.len()
                )));
            }
            if w.iter().any(|&x| x < 0) {
                return Err(Error::Config(
                    "weighted order needs non-negative weights".into(),
                ));
            }
        }
        Ok(())
    }

    /// Refines a strictly positive weight filtration, the condition the Weyl
    /// engine insists on.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            TermOrder::DegRevLex => true,
            TermOrder::Lex => false,
            TermOrder::Weighted(w) => w.iter().all(|&x| x > 0),
        }
    }

    /// Parses `degrevlex`, `lex`, or `weighted:w1,w2,...`.
    pub fn parse(s: &str) -> Result<TermOrder> {
        let s = s.trim();
        match s {
            "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
            "lex" => Ok(TermOrder::Lex),
            _ => {
                if let Some(rest) = s.strip_prefix("weighted:") {
                    let w = rest
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<i64>()
                                .map_err(|_| Error::Parse(format!("bad weight {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(TermOrder::Weighted(w))
                } else {
                    Err(Error::Parse(format!("unknown term order {s:?}")))
                }
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::Weighted(w) => {
                let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "weighted:{}", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degrevlex_prefers_smaller_last_exponent() {
        let o = TermOrder::DegRevLex;
        // x2^2 > x1 x3
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_weighted() {
        assert_eq!(
            TermOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        let w = TermOrder::Weighted(vec![0, 0, 1]);
        assert_eq!(w.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert!(TermOrder::Weighted(vec![1, -1]).validate(2).is_err());
        assert!(!TermOrder::Lex.is_degree_compatible());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["degrevlex", "lex", "weighted:1,2,0"] {
            assert_eq!(TermOrder::parse(s).unwrap().to_string(), s);
        }
    }
}
