//! Oracles that never touch the Smith or Hermite code paths.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rimtori_core::{CanonicalForm, IntMatrix};

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all `k x k` minors (`D_k`), with `D_0 = 1`.
pub fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for rows in combinations(a.rows(), k) {
        for cols in combinations(a.cols(), k) {
            let mut m = IntMatrix::zeros(k, k);
            for (i, &r) in rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    m[(i, j)] = a[(r, c)].clone();
                }
            }
            g = g.gcd(&m.determinant().unwrap());
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

/// Canonical form of `Z^rows / cols(a)` from determinantal divisors.
pub fn dd_canonical(a: &IntMatrix) -> CanonicalForm {
    let mut prev = BigInt::one();
    let mut torsion = Vec::new();
    let mut rank = 0;
    for k in 1..=a.rows().min(a.cols()) {
        let d = minors_gcd(a, k);
        if d.is_zero() {
            break;
        }
        let f = &d / &prev;
        if !f.is_one() {
            torsion.push(f);
        }
        prev = d;
        rank = k;
    }
    CanonicalForm {
        free_rank: a.rows() - rank,
        torsion,
    }
}

/// `v ∈ span(cols a)`: the quotient does not shrink when `v` is added
/// (finitely generated abelian groups are Hopfian).
pub fn oracle_contains(a: &IntMatrix, v: &[BigInt]) -> bool {
    let with = a.hcat(&IntMatrix::column_vector(v)).unwrap();
    dd_canonical(a) == dd_canonical(&with)
}

/// Equal column spans, by mutual containment.
pub fn oracle_same_span(a: &IntMatrix, b: &IntMatrix) -> bool {
    (0..b.cols()).all(|j| oracle_contains(a, &b.column(j))) && (0..a.cols()).all(|j| oracle_contains(b, &a.column(j)))
}

pub fn matrix(rows: usize, cols: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(lo..=hi, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap())
}

pub fn any_matrix(max_r: usize, max_c: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_r, 0..=max_c).prop_flat_map(move |(r, c)| matrix(r, c, lo, hi))
}

/// Unimodular matrix as a product of elementary operations.
pub fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        if n == 0 {
            return m;
        }
        for (i, j, c, neg) in ops {
            let mut e = IntMatrix::identity(n);
            if i != j {
                e[(i, j)] = BigInt::from(c);
            } else if neg {
                e[(i, i)] = BigInt::from(-1);
            }
            m = e.mul(&m).unwrap();
        }
        m
    })
}

pub fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
