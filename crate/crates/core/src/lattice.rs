//! Integer kernels of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A ℤ-basis of `{u ∈ ℤ^N : A u = 0}` for a `d × N` integer matrix.
///
/// Column-style Hermite reduction of `A` stacked over the identity: once the
/// `A` part of a column is zero, the identity part of that column is a kernel
/// vector, and the collection of such columns is a lattice basis because the
/// accumulated transformation is unimodular.
pub fn integer_kernel(a: &[Vec<i64>], ncols: usize) -> Vec<Vec<BigInt>> {
    let d = a.len();
    // columns of the stacked matrix, each of length d + ncols
    let mut cols: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut c: Vec<BigInt> = (0..d).map(|i| BigInt::from(a[i][j])).collect();
            c.extend((0..ncols).map(|k| BigInt::from((k == j) as i64)));
            c
        })
        .collect();

    let mut pivot = 0usize;
    for row in 0..d {
        if pivot >= ncols {
            break;
        }
        loop {
            // smallest nonzero |entry| in this row among remaining columns
            let best = (pivot..ncols)
                .filter(|&c| !cols[c][row].is_zero())
                .min_by(|&x, &y| cols[x][row].abs().cmp(&cols[y][row].abs()));
            let Some(b) = best else { break };
            cols.swap(pivot, b);
            let mut done = true;
            for c in pivot + 1..ncols {
                if cols[c][row].is_zero() {
                    continue;
                }
                let q = cols[c][row].div_floor(&cols[pivot][row]);
                let (head, tail) = cols.split_at_mut(c);
                let pc = &head[pivot];
                for (x, y) in tail[0].iter_mut().zip(pc.iter()) {
                    *x -= &q * y;
                }
                if !cols[c][row].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !cols[pivot][row].is_zero() {
            pivot += 1;
        }
    }
    cols[pivot..]
        .iter()
        .map(|c| c[d..].to_vec())
        .collect()
}

/// Rank of an integer matrix over ℚ.
pub fn rank(a: &[Vec<i64>], ncols: usize) -> usize {
    ncols - integer_kernel(a, ncols).len()
}
