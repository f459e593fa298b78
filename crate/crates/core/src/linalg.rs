//! Sparse exact row echelon over ℚ.

use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse vector: column index → nonzero entry.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Result of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq)]
pub enum Insert {
    Independent,
    /// Coefficients `c` with `Σ c_i v_i = 0` over the inserted vectors; the
    /// coefficient of the vector just inserted is 1. Empty unless tracking.
    Dependent(SparseVec),
}

#[derive(Clone, Debug)]
struct Row {
    v: SparseVec,
    combo: SparseVec,
}

/// Incrementally built echelon form. Pivots are the smallest column index of
/// each stored row.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
    inserted: usize,
    track: bool,
}

fn axpy(target: &mut SparseVec, a: &Rational, x: &SparseVec) {
    for (k, xv) in x {
        let delta = a * xv;
        match target.get_mut(k) {
            Some(t) => {
                *t += delta;
                if t.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(*k, delta);
            }
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    /// Records, for every dependent insertion, the linear relation found.
    pub fn tracking() -> Self {
        Echelon {
            track: true,
            ..Echelon::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn insert(&mut self, v: SparseVec) -> Insert {
        let index = self.inserted;
        self.inserted += 1;
        let mut v: SparseVec = v.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut combo = SparseVec::new();
        if self.track {
            combo.insert(index, Rational::one());
        }
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .map(|(k, _)| *k)
                .find(|k| self.rows.contains_key(k));
            let Some(col) = next else { break };
            let row = &self.rows[&col];
            let factor = -(&v[&col] / &row.v[&col]);
            axpy(&mut v, &factor, &row.v);
            if self.track {
                axpy(&mut combo, &factor, &row.combo);
            }
            cursor = col + 1;
        }
        match v.keys().next().copied() {
            None => Insert::Dependent(combo),
            Some(lead) => {
                self.rows.insert(lead, Row { v, combo });
                Insert::Independent
            }
        }
    }
}

/// Rank of the span of `vectors`.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, rat(c))).collect()
    }

    #[test]
    fn rank_and_relation() {
        let mut e = Echelon::tracking();
        assert_eq!(e.insert(sv(&[(0, 1), (1, 2)])), Insert::Independent);
        assert_eq!(e.insert(sv(&[(1, 1), (2, 1)])), Insert::Independent);
        // -2·(1,2,0) + 4·(0,1,1) + (2,0,-4) = 0
        match e.insert(sv(&[(0, 2), (2, -4)])) {
            Insert::Dependent(c) => {
                assert_eq!(c, sv(&[(0, -2), (1, 4), (2, 1)]));
            }
            other => panic!("expected dependency, got {other:?}"),
        }
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn zero_vector_is_dependent() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(SparseVec::new()), Insert::Dependent(SparseVec::new()));
        assert_eq!(rank(vec![sv(&[(3, 1)]), sv(&[(3, 5)]), sv(&[(1, 1)])]), 2);
    }
}
