use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::{Order, Subgroup};
use crate::matrix::{gcd_all, IntMatrix};

use super::{r_prime, rim_tori_module, ContactProfile, DivisorData};

/// `Σ_{ℓ_r ≠ 0} R_{H;r} ⊂ R_H` and whether it has finite index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WcSubmodule {
    pub submodule: Subgroup,
    pub finite_index: bool,
}

pub fn wc_submodule(d: &DivisorData, p: &ContactProfile) -> Result<WcSubmodule> {
    p.check_against(d)?;
    let (r_h, _) = rim_tori_module(d);
    let blocks: Vec<IntMatrix> = p
        .lengths()
        .iter()
        .enumerate()
        .filter(|(_, &l)| l != 0)
        .map(|(r, _)| d.embedding(r))
        .collect();
    let refs: Vec<&IntMatrix> = blocks.iter().collect();
    let gens = IntMatrix::hcat_all(r_h.ambient_rank(), &refs)?;
    let submodule = Subgroup::new(&r_h, gens)?;
    let finite_index = submodule.index().is_finite();
    Ok(WcSubmodule {
        submodule,
        finite_index,
    })
}

/// Whether `H_*(V̂_{H;s}; Q)` is finitely generated, given the caller's
/// per-component assertion about the abelian covers of the `V_r`.
pub fn homology_finitely_generated(d: &DivisorData, p: &ContactProfile) -> Result<bool> {
    let wc = wc_submodule(d, p)?;
    let flags = p
        .lengths()
        .iter()
        .zip(d.components())
        .filter(|(&l, _)| l != 0)
        .all(|(_, c)| c.cover_homology_fg);
    Ok(wc.finite_index && flags)
}

/// `r* = dim_V · ℓ - rk`, with `rk` the free rank of the span of the
/// components carrying contacts. Relative insertions of degree above `r*`
/// pair to zero.
pub fn vanishing_threshold(d: &DivisorData, p: &ContactProfile) -> Result<i64> {
    let l = p.total_length();
    if l == 0 {
        return Err(Error::NoContacts);
    }
    let wc = wc_submodule(d, p)?;
    let rk = wc.submodule.canonical_form().free_rank;
    Ok(i64::from(d.dim_v()) * l as i64 - rk as i64)
}

/// A named condition and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceVerdict {
    pub lift_independent: bool,
    pub equals_standard_gw: bool,
    pub reasons: Vec<Condition>,
}

impl InvarianceVerdict {
    pub fn reason(&self, name: &str) -> Option<bool> {
        self.reasons.iter().find(|c| c.name == name).map(|c| c.passed)
    }
}

/// Checks the invariance conditions for IP-counts.
///
/// Reasons, in order: `flux`, `relatively_prime`, `r_prime_full`,
/// `rank_at_most_one`, `torus_override`. The lift gate is `flux` together
/// with `relatively_prime` for connected divisors and `r_prime_full`
/// otherwise. The torus override asks for every component to be a torus
/// and the cover to be connected, which is again `R′ = R_H`.
pub fn invariance_verdict(d: &DivisorData, p: &ContactProfile) -> Result<InvarianceVerdict> {
    p.check_against(d)?;
    let (r_h, q) = rim_tori_module(d);
    let lengths = p.lengths();

    let mut flux_gens: Vec<IntMatrix> = Vec::new();
    for (r, c) in d.components().iter().enumerate() {
        if lengths[r] == 0 {
            continue;
        }
        let local = match (&c.flux, c.is_torus) {
            (Some(f), _) => f.generators().clone(),
            (None, true) => IntMatrix::identity(c.h1.ambient_rank()),
            (None, false) => return Err(Error::MissingFlux { component: r }),
        };
        flux_gens.push(d.embedding(r).mul(&local)?);
    }
    let refs: Vec<&IntMatrix> = flux_gens.iter().collect();
    let flux_span = Subgroup::new(
        &r_h,
        q.matrix().mul(&IntMatrix::hcat_all(d.h1().ambient_rank(), &refs)?)?,
    )?;
    let flux_ok = flux_span.is_whole();

    let rp = r_prime(d, p)?;
    let r_prime_full = rp.is_whole();
    let g = gcd_all(p.all_orders());
    let relatively_prime = match r_h.order() {
        Order::Infinite => g.is_one(),
        Order::Finite(n) => g.gcd(&n).is_one(),
    };
    let gate = if d.is_connected() {
        relatively_prime
    } else {
        r_prime_full
    };
    let rank_ok = r_h.canonical_form().free_rank <= 1;
    let all_tori = d.components().iter().all(|c| c.is_torus);
    let torus_override = all_tori && r_prime_full;

    let lift_independent = flux_ok && gate;
    let equals_standard_gw = lift_independent && (rank_ok || torus_override);
    let cond = |name: &str, passed| Condition {
        name: name.into(),
        passed,
    };
    Ok(InvarianceVerdict {
        lift_independent,
        equals_standard_gw,
        reasons: alloc::vec![
            cond("flux", flux_ok),
            cond("relatively_prime", relatively_prime),
            cond("r_prime_full", r_prime_full),
            cond("rank_at_most_one", rank_ok),
            cond("torus_override", torus_override),
        ],
    })
}

/// `gcd(s)` of a whole profile, `0` when it has no contacts.
pub fn profile_gcd(p: &ContactProfile) -> BigInt {
    gcd_all(p.all_orders())
}
