//! Column-style Hermite normal form.
//!
//! For a lattice spanned by the columns of `A` the output `H` has the same
//! column span, no zero columns, and is in column echelon form: the pivot
//! (first nonzero entry) of column `k` sits in row `p_k` with
//! `p_0 < p_1 < ...`, is positive, and every entry to the left of a pivot
//! lies in `[0, pivot)`. That makes `H` a canonical basis of the lattice.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

pub fn hermite_form(a: &IntMatrix) -> IntMatrix {
    hermite_with_pivots(a).0
}

/// Hermite form together with the pivot row of every column.
pub fn hermite_with_pivots(a: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let mut h = a.clone();
    let (m, n) = (h.rows(), h.cols());
    let mut pivots = Vec::new();
    let mut c = 0;
    for i in 0..m {
        if c == n {
            break;
        }
        // Fold the gcd of row i (columns c..n) into column c.
        for j in c + 1..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            if h[(i, c)].is_zero() {
                h.swap_cols(c, j);
                continue;
            }
            let a_ = h[(i, c)].clone();
            let b_ = h[(i, j)].clone();
            let e = a_.extended_gcd(&b_);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let za = -(&b_ / &g);
            let wa = &a_ / &g;
            h.combine_cols(c, j, [&x, &y, &za, &wa]);
        }
        if h[(i, c)].is_zero() {
            continue;
        }
        if h[(i, c)].is_negative() {
            h.negate_col(c);
        }
        let p = h[(i, c)].clone();
        for j in 0..c {
            let q = h[(i, j)].div_floor(&p);
            if !q.is_zero() {
                h.add_col_multiple(j, c, &-q);
            }
        }
        pivots.push(i);
        c += 1;
    }
    (h.submatrix(0..m, 0..c), pivots)
}

/// Reduces `v` modulo the lattice with Hermite basis `h` (pivot rows
/// `pivots`), giving the unique representative whose entry at each pivot row
/// lies in `[0, pivot)`.
pub fn reduce_mod(h: &IntMatrix, pivots: &[usize], v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    for (k, &r) in pivots.iter().enumerate() {
        let p = &h[(r, k)];
        let q = v[r].div_floor(p);
        if q.is_zero() {
            continue;
        }
        for (i, vi) in v.iter_mut().enumerate().skip(r) {
            *vi -= &q * &h[(i, k)];
        }
    }
    v
}

/// Whether `v` lies in the lattice with Hermite basis `h`.
pub fn in_lattice(h: &IntMatrix, pivots: &[usize], v: &[BigInt]) -> bool {
    reduce_mod(h, pivots, v).iter().all(Zero::is_zero)
}

/// Product of the pivots when the lattice has full rank, i.e. the index of
/// the lattice in `Z^m`; `None` otherwise.
pub fn full_rank_index(h: &IntMatrix) -> Option<BigInt> {
    if h.cols() != h.rows() {
        return None;
    }
    Some((0..h.cols()).fold(BigInt::one(), |acc, k| acc * &h[(k, k)]))
}
