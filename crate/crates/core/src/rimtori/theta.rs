//! The deck transformation `Θ_η` attached to `η ∈ H_1(V)` and a chosen set
//! of coset representatives `{γ_j}` for `R_H / R′`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{describe_vector, FgAbGroup, Order};
use crate::matrix::IntMatrix;
use crate::smith::{smith_normal_form, solve_with};

use super::{phi_hom, ContactProfile, DivisorData};

/// `Θ_η` on the sheet `j`: it lands on sheet `target` and moves the fibre
/// by `translation ∈ H_1(V_s)` (well defined modulo `H_s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaImage {
    pub target: usize,
    pub translation: Vec<BigInt>,
}

/// For each representative `γ_j`, the unique `γ_j(η)` and a witness `η_j`
/// with `γ_j + η - γ_j(η) - Φ(η_j) ∈ H`.
pub fn theta_action(
    d: &DivisorData,
    p: &ContactProfile,
    reps: &[Vec<BigInt>],
    eta: &[BigInt],
) -> Result<Vec<ThetaImage>> {
    let phi = phi_hom(d, p)?;
    let n = d.h1().ambient_rank();
    if eta.len() != n {
        return Err(Error::DimensionMismatch {
            context: "theta_action (eta)",
            expected: n,
            found: eta.len(),
        });
    }
    // R_H / R′ = Z^n / [L | H | Φ]
    let l = d.h1().relations();
    let h = d.h_xv().generators();
    let big = IntMatrix::hcat_all(n, &[phi.matrix(), h, l])?;
    let cosets = FgAbGroup::new(l.hcat(h)?.hcat(phi.matrix())?);

    let index = match cosets.order() {
        Order::Finite(k) => k,
        Order::Infinite => return Err(Error::InfiniteQuotient),
    };
    if BigInt::from(reps.len()) != index {
        return Err(Error::NotATransversal(format!(
            "{} representatives for a quotient of order {index}",
            reps.len()
        )));
    }
    let mut by_key: BTreeMap<Vec<BigInt>, usize> = BTreeMap::new();
    for (j, g) in reps.iter().enumerate() {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                context: "theta_action (representative)",
                expected: n,
                found: g.len(),
            });
        }
        let key = cosets.reduce(g)?;
        if let Some(k) = by_key.insert(key, j) {
            return Err(Error::NotATransversal(format!(
                "representatives {k} and {j} share the coset of {}",
                describe_vector(g)
            )));
        }
    }

    let snf = smith_normal_form(&big);
    let src = phi.matrix().cols();
    let mut out = Vec::with_capacity(reps.len());
    for g in reps {
        let moved: Vec<BigInt> = g.iter().zip(eta).map(|(a, b)| a + b).collect();
        let target = by_key[&cosets.reduce(&moved)?];
        let rhs: Vec<BigInt> = moved.iter().zip(&reps[target]).map(|(a, b)| a - b).collect();
        let sol = solve_with(&snf, &rhs).ok_or(Error::Internal("no η_j for a valid transversal"))?;
        out.push(ThetaImage {
            target,
            translation: sol[..src].to_vec(),
        });
    }
    Ok(out)
}
