use alloc::vec::Vec;

use crate::error::Result;
use crate::group::{CanonicalForm, FgAbGroup, Homomorphism, Subgroup};
use crate::matrix::IntMatrix;

use super::{rim_tori_module, ContactProfile, DivisorData};

/// `Φ: ⊕_r H_1(V_r)^{ℓ_r} -> H_1(V)`, `(γ_{r;i}) ↦ Σ_r Σ_i s_{r;i} γ_{r;i}`.
///
/// The source lists the contact points component by component; its block
/// for contact `(r, i)` is a copy of `H_1(V_r)`.
pub fn phi_hom(d: &DivisorData, p: &ContactProfile) -> Result<Homomorphism> {
    p.check_against(d)?;
    let mut rels: Vec<&IntMatrix> = Vec::new();
    for (r, t) in p.tuples().iter().enumerate() {
        for _ in t {
            rels.push(d.components()[r].h1.relations());
        }
    }
    let source = FgAbGroup::new(IntMatrix::block_diag(&rels));
    let target = d.h1();
    let mut m = IntMatrix::zeros(target.ambient_rank(), source.ambient_rank());
    let mut col = 0;
    for (r, t) in p.tuples().iter().enumerate() {
        let b = d.block(r);
        for s in t {
            m.set_block(b.start, col, &IntMatrix::scalar(b.len(), s));
            col += b.len();
        }
    }
    Homomorphism::new(&source, target, m)
}

/// `H_s = Φ⁻¹(H_X^V) ⊂ H_1(V_s)`.
pub fn h_s_submodule(d: &DivisorData, p: &ContactProfile) -> Result<Subgroup> {
    phi_hom(d, p)?.preimage(d.h_xv())
}

/// `R′ = Im(q_H ∘ Φ) ⊂ R_H`.
pub fn r_prime(d: &DivisorData, p: &ContactProfile) -> Result<Subgroup> {
    let phi = phi_hom(d, p)?;
    let (r_h, q) = rim_tori_module(d);
    phi.then(&q)?.image().rebase(&r_h)
}

/// Deck group `(R_H / R′) × R′` of the rim tori cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeckGroupReport {
    pub r_h: FgAbGroup,
    pub r_prime: Subgroup,
    /// `R_H / R′`: the permutation part, indexing components of the cover.
    pub finite_part: CanonicalForm,
    /// `R′` as an abstract group.
    pub free_part: CanonicalForm,
    pub total: CanonicalForm,
}

pub fn deck_group(d: &DivisorData, p: &ContactProfile) -> Result<DeckGroupReport> {
    let rp = r_prime(d, p)?;
    let (r_h, _) = rim_tori_module(d);
    let finite_part = r_h.quotient(&rp)?.0.canonical_form();
    let free_part = rp.canonical_form();
    let total = finite_part.sum(&free_part);
    Ok(DeckGroupReport {
        r_h,
        r_prime: rp,
        finite_part,
        free_part,
        total,
    })
}
