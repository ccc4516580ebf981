//! Rim tori modules and the covers built from contact profiles.
//!
//! A divisor `V = V_1 ⊔ ... ⊔ V_N` enters only through `H_1(V_r; Z)`, the
//! subgroup `H_X^V ⊂ H_1(V; Z)` and some optional side data. Everything
//! below is group arithmetic on that input.

mod criteria;
mod deck;
mod theta;
mod vanishing;

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{BigIntDisplay, Error, Result};
use crate::group::{FgAbGroup, Homomorphism, Subgroup};
use crate::matrix::{gcd_all, IntMatrix};

pub use criteria::{
    homology_finitely_generated, invariance_verdict, profile_gcd, vanishing_threshold, wc_submodule, Condition,
    InvarianceVerdict, WcSubmodule,
};
pub use deck::{deck_group, h_s_submodule, phi_hom, r_prime, DeckGroupReport};
pub use theta::{theta_action, ThetaImage};
pub use vanishing::{self_glue, vanishing_cycles_general, vanishing_cycles_injective};

/// One connected component `V_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub name: String,
    pub h1: FgAbGroup,
    /// `Flux(V_r) ⊂ H_1(V_r; Z)`, when known.
    pub flux: Option<Subgroup>,
    /// The component is a torus `T^{dim V}`; stated, never inferred.
    pub is_torus: bool,
    /// Caller's assertion that the rational homology of the abelian cover
    /// of this component is finitely generated.
    pub cover_homology_fg: bool,
}

impl Component {
    pub fn new(name: impl Into<String>, h1: FgAbGroup) -> Self {
        Component {
            name: name.into(),
            h1,
            flux: None,
            is_torus: false,
            cover_homology_fg: true,
        }
    }

    /// A torus component `T^k` with `H_1 = Z^k`.
    pub fn torus(name: impl Into<String>, k: usize) -> Self {
        Component {
            is_torus: true,
            ..Component::new(name, FgAbGroup::free(k))
        }
    }

    pub fn with_flux(mut self, flux: Subgroup) -> Self {
        self.flux = Some(flux);
        self
    }
}

/// Topological input for a divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorData {
    components: Vec<Component>,
    h1: FgAbGroup,
    h_xv: Subgroup,
    dim_v: u32,
    order_constraint: Option<Vec<BigInt>>,
}

impl DivisorData {
    /// `h_xv_gens` are columns in the coordinates of `⊕ H_1(V_r)`, components
    /// in order.
    pub fn new(components: Vec<Component>, h_xv_gens: IntMatrix, dim_v: u32) -> Result<Self> {
        if dim_v < 2 || !dim_v.is_multiple_of(2) {
            return Err(Error::InvalidDivisor(alloc::format!(
                "dim_V must be even and at least 2, got {dim_v}"
            )));
        }
        for (r, c) in components.iter().enumerate() {
            if let Some(f) = &c.flux {
                if *f.ambient() != c.h1 {
                    return Err(Error::InvalidDivisor(alloc::format!(
                        "flux of component {r} does not live in its H1"
                    )));
                }
            }
        }
        let groups: Vec<&FgAbGroup> = components.iter().map(|c| &c.h1).collect();
        let h1 = FgAbGroup::direct_sum_all(&groups);
        let h_xv = Subgroup::new(&h1, h_xv_gens)?;
        Ok(DivisorData {
            components,
            h1,
            h_xv,
            dim_v,
            order_constraint: None,
        })
    }

    /// Connected divisor with no flux data.
    pub fn connected(h1: FgAbGroup, h_xv_gens: IntMatrix, dim_v: u32) -> Result<Self> {
        Self::new(alloc::vec![Component::new("V", h1)], h_xv_gens, dim_v)
    }

    pub fn with_order_constraint(mut self, orders: Vec<BigInt>) -> Result<Self> {
        if orders.len() != self.components.len() {
            return Err(Error::ComponentCountMismatch {
                divisor: self.components.len(),
                profile: orders.len(),
            });
        }
        self.order_constraint = Some(orders);
        Ok(self)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// `H_1(V; Z) = ⊕ H_1(V_r; Z)`.
    pub fn h1(&self) -> &FgAbGroup {
        &self.h1
    }

    pub fn h_xv(&self) -> &Subgroup {
        &self.h_xv
    }

    pub fn dim_v(&self) -> u32 {
        self.dim_v
    }

    pub fn order_constraint(&self) -> Option<&[BigInt]> {
        self.order_constraint.as_deref()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Coordinate range of component `r` inside `H_1(V)`.
    pub fn block(&self, r: usize) -> Range<usize> {
        let start: usize = self.components[..r].iter().map(|c| c.h1.ambient_rank()).sum();
        start..start + self.components[r].h1.ambient_rank()
    }

    /// Embedding `H_1(V_r) -> H_1(V)`.
    pub fn embedding(&self, r: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.h1.ambient_rank(), self.components[r].h1.ambient_rank());
        let b = self.block(r);
        m.set_block(b.start, 0, &IntMatrix::identity(b.len()));
        m
    }

    /// Same data with `H_X^V` replaced.
    pub fn with_h_xv(&self, gens: IntMatrix) -> Result<Self> {
        let mut d = self.clone();
        d.h_xv = Subgroup::new(&self.h1, gens)?;
        Ok(d)
    }
}

/// Contact orders `s_r = (s_{r;1}, ..., s_{r;ℓ_r})` for each component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContactProfile {
    tuples: Vec<Vec<BigInt>>,
}

impl ContactProfile {
    pub fn new(tuples: Vec<Vec<BigInt>>) -> Result<Self> {
        for (r, t) in tuples.iter().enumerate() {
            if let Some(i) = t.iter().position(Zero::is_zero) {
                return Err(Error::ZeroContactOrder { component: r, index: i });
            }
        }
        Ok(ContactProfile { tuples })
    }

    pub fn from_i64<T: AsRef<[i64]>>(tuples: &[T]) -> Result<Self> {
        Self::new(
            tuples
                .iter()
                .map(|t| t.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Profile for a connected divisor.
    pub fn single(s: &[i64]) -> Result<Self> {
        Self::from_i64(&[s])
    }

    pub fn tuples(&self) -> &[Vec<BigInt>] {
        &self.tuples
    }

    /// `ℓ_r`.
    pub fn lengths(&self) -> Vec<usize> {
        self.tuples.iter().map(Vec::len).collect()
    }

    /// `ℓ = Σ ℓ_r`.
    pub fn total_length(&self) -> usize {
        self.tuples.iter().map(Vec::len).sum()
    }

    /// All contact orders flattened in component order.
    pub fn all_orders(&self) -> impl Iterator<Item = &BigInt> {
        self.tuples.iter().flatten()
    }

    /// Checks the profile against a divisor: component count and, when
    /// present, `Σ_i s_{r;i} = A·V_r`.
    pub fn check_against(&self, d: &DivisorData) -> Result<()> {
        if self.tuples.len() != d.component_count() {
            return Err(Error::ComponentCountMismatch {
                divisor: d.component_count(),
                profile: self.tuples.len(),
            });
        }
        if let Some(orders) = d.order_constraint() {
            for (r, (t, want)) in self.tuples.iter().zip(orders).enumerate() {
                let got: BigInt = t.iter().sum();
                if got != *want {
                    return Err(Error::OrderConstraint {
                        component: r,
                        expected: BigIntDisplay(alloc::format!("{want}")),
                        found: BigIntDisplay(alloc::format!("{got}")),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Gcd of the absolute values; `0` for the empty tuple.
pub fn gcd_tuple(s: &[BigInt]) -> Result<BigInt> {
    if let Some(i) = s.iter().position(Zero::is_zero) {
        return Err(Error::ZeroContactOrder { component: 0, index: i });
    }
    Ok(gcd_all(s))
}

/// `R_X^V ≅ H_1(V; Z)_X = H_1(V; Z) / H_X^V` with its projection.
pub fn rim_tori_module(d: &DivisorData) -> (FgAbGroup, Homomorphism) {
    d.h1()
        .quotient(d.h_xv())
        .expect("H_X^V lives in H_1(V) by construction")
}
