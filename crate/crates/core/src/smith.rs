//! Smith normal form and what falls out of it: ranks, kernels, images and
//! integral solutions of linear systems.
//!
//! Pivoting always picks the nonzero entry of least absolute value in the
//! active block, ties broken by (row, col). Every elementary operation is
//! mirrored on `U`/`V` and, inverted, on `U⁻¹`/`V⁻¹`, so the inverses come
//! for free.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries `d_1..d_k`, `k = min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let k = self.d.rows().min(self.d.cols());
        (0..k).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut u_inv = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut v_inv = IntMatrix::identity(n);

    // Row op E applied on the left: U <- E U, U⁻¹ <- U⁻¹ E⁻¹.
    // Column op E applied on the right: V <- V E, V⁻¹ <- E⁻¹ V⁻¹.
    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, t) else {
                return SmithDecomposition { u, d, v, u_inv, v_inv };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = d[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = &d[(i, t)] / &p;
                let nq = -&q;
                d.add_row_multiple(i, t, &nq);
                u.add_row_multiple(i, t, &nq);
                u_inv.add_col_multiple(t, i, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = &d[(t, j)] / &p;
                let nq = -&q;
                d.add_col_multiple(j, t, &nq);
                v.add_col_multiple(j, t, &nq);
                v_inv.add_row_multiple(t, j, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // Row and column t are clear; enforce divisibility on the rest.
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                    u_inv.add_col_multiple(i, t, &-one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    SmithDecomposition { u, d, v, u_inv, v_inv }
}

fn min_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Basis of the integer kernel `{x : A x = 0}` as columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    s.v.submatrix(0..a.cols(), r..a.cols())
}

/// Basis of the column span of `A` as columns.
pub fn image_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    let mut b = s.u_inv.submatrix(0..a.rows(), 0..r);
    for j in 0..r {
        for i in 0..a.rows() {
            let v = &b[(i, j)] * &s.d[(j, j)];
            b[(i, j)] = v;
        }
    }
    b
}

/// Integer solution of `A x = b`, if any.
pub fn solve_integral(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            context: "solve_integral",
            expected: a.rows(),
            found: b.len(),
        });
    }
    let s = smith_normal_form(a);
    Ok(solve_with(&s, b))
}

/// Solves `A x = b` against a precomputed decomposition of `A`.
pub fn solve_with(s: &SmithDecomposition, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ub = s.u.mul_vec(b).ok()?;
    let r = s.rank();
    if ub[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = alloc::vec![BigInt::zero(); s.v.rows()];
    for i in 0..r {
        let (q, rem) = ub[i].div_rem(&s.d[(i, i)]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    s.v.mul_vec(&y).ok()
}
