//! The explicit cover `C x T_s^{2(ℓ-1)} -> T^{2ℓ}` for a torus divisor
//! `V = T^2` with `H = 0`, in exact rational coordinates.
//!
//! `H_1(T^2; Z)` is identified with the Gaussian lattice `Z + iZ`; a point of
//! `T^2` is a complex number with rational parts taken modulo that lattice.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{FgAbGroup, Subgroup};

/// Lattice vector `(a, b) ↔ a + ib`.
pub type LatticeVec = [BigInt; 2];

/// Complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl CRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        CRat { re, im }
    }

    /// `a/b + i c/d`.
    ///
    /// # Panics
    /// On zero denominators.
    pub fn from_fracs(a: i64, b: i64, c: i64, d: i64) -> Self {
        CRat {
            re: BigRational::new(a.into(), b.into()),
            im: BigRational::new(c.into(), d.into()),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_lattice(v: &LatticeVec) -> Self {
        CRat {
            re: BigRational::from_integer(v[0].clone()),
            im: BigRational::from_integer(v[1].clone()),
        }
    }

    pub fn is_lattice(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Representative with both parts in `[0, 1)`.
    pub fn reduced(&self) -> CRat {
        CRat {
            re: frac(&self.re),
            im: frac(&self.im),
        }
    }

    /// Equal modulo `Z + iZ`.
    pub fn congruent(&self, other: &CRat) -> bool {
        (self - other).is_lattice()
    }

    pub fn scale(&self, c: &BigRational) -> CRat {
        CRat {
            re: &self.re * c,
            im: &self.im * c,
        }
    }
}

fn frac(x: &BigRational) -> BigRational {
    let (n, d) = (x.numer(), x.denom());
    BigRational::new(n.mod_floor(d), d.clone())
}

impl Add for &CRat {
    type Output = CRat;
    fn add(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &CRat {
    type Output = CRat;
    fn sub(self, o: &CRat) -> CRat {
        CRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul<&BigInt> for &CRat {
    type Output = CRat;
    fn mul(self, k: &BigInt) -> CRat {
        self.scale(&BigRational::from_integer(k.clone()))
    }
}

impl Div<&BigInt> for &CRat {
    type Output = CRat;
    fn div(self, k: &BigInt) -> CRat {
        self.scale(&BigRational::new(BigInt::one(), k.clone()))
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

/// A point of `T^{2ℓ}`, coordinates kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    coords: Vec<CRat>,
}

impl TorusPoint {
    pub fn new(coords: Vec<CRat>) -> Self {
        TorusPoint {
            coords: coords.iter().map(CRat::reduced).collect(),
        }
    }

    pub fn origin(l: usize) -> Self {
        TorusPoint {
            coords: alloc::vec![CRat::zero(); l],
        }
    }

    pub fn coords(&self) -> &[CRat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.re.is_zero() && c.im.is_zero())
    }
}

/// A point `(z, [z_i])` of `C x T_s^{2(ℓ-1)}`. The `C` factor is not reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverPoint {
    pub z: CRat,
    pub torus: TorusPoint,
}

/// Unreduced displacement `(Δz, [Δz_i])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Displacement {
    pub z: CRat,
    pub torus: Vec<CRat>,
}

impl Displacement {
    /// Same `C` shift and torus shifts congruent modulo the lattice.
    pub fn agrees_with(&self, other: &Displacement) -> bool {
        self.z == other.z
            && self.torus.len() == other.torus.len()
            && self.torus.iter().zip(&other.torus).all(|(a, b)| a.congruent(b))
    }
}

fn check_len(s: &[BigInt], n: usize, context: &'static str) -> Result<()> {
    if s.len() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: s.len(),
            found: n,
        });
    }
    Ok(())
}

fn check_orders(s: &[BigInt]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::NoContacts);
    }
    if let Some(i) = s.iter().position(Zero::is_zero) {
        return Err(Error::ZeroContactOrder { component: 0, index: i });
    }
    Ok(())
}

/// `Σ s_i z_i ∈ Z + iZ`.
pub fn t_s_member(s: &[BigInt], pt: &TorusPoint) -> Result<bool> {
    check_len(s, pt.len(), "t_s_member")?;
    let sum = s
        .iter()
        .zip(pt.coords())
        .fold(CRat::zero(), |acc, (si, zi)| &acc + &(zi * si));
    Ok(sum.is_lattice())
}

fn check_member(s: &[BigInt], cp: &CoverPoint) -> Result<()> {
    check_orders(s)?;
    if !t_s_member(s, &cp.torus)? {
        return Err(Error::Membership);
    }
    Ok(())
}

/// `(z, [z_i]) ↦ [z_i - z/s_i]`.
pub fn cover_project(s: &[BigInt], cp: &CoverPoint) -> Result<TorusPoint> {
    check_member(s, cp)?;
    Ok(TorusPoint::new(
        s.iter()
            .zip(cp.torus.coords())
            .map(|(si, zi)| zi - &(&cp.z / si))
            .collect(),
    ))
}

fn weighted_sum(s: &[BigInt], gammas: &[LatticeVec]) -> CRat {
    s.iter()
        .zip(gammas)
        .fold(CRat::zero(), |acc, (si, g)| &acc + &(&CRat::from_lattice(g) * si))
}

/// Displacement of the action of `(γ_i)`: `S/ℓ` on `C` and `S/(ℓ s_i)` on
/// the torus, where `S = Σ s_i γ_i`.
pub fn deck_displacement(s: &[BigInt], gammas: &[LatticeVec]) -> Result<Displacement> {
    check_orders(s)?;
    check_len(s, gammas.len(), "deck_displacement")?;
    let l = BigInt::from(s.len());
    let shift = &weighted_sum(s, gammas) / &l;
    Ok(Displacement {
        torus: s.iter().map(|si| &shift / si).collect(),
        z: shift,
    })
}

fn displace(cp: &CoverPoint, d: &Displacement) -> CoverPoint {
    CoverPoint {
        z: &cp.z + &d.z,
        torus: TorusPoint::new(cp.torus.coords().iter().zip(&d.torus).map(|(a, b)| a + b).collect()),
    }
}

/// `(γ_i) · (z, [z_i]) = (z + S/ℓ, [z_i + S/(ℓ s_i)])`.
pub fn deck_act(s: &[BigInt], gammas: &[LatticeVec], cp: &CoverPoint) -> Result<CoverPoint> {
    check_member(s, cp)?;
    let d = deck_displacement(s, gammas)?;
    Ok(displace(cp, &d))
}

/// Translation of `T^{2ℓ}` by lattice vectors (the identity on points, kept
/// for stating the covering identity literally).
pub fn translate(pt: &TorusPoint, gammas: &[LatticeVec]) -> Result<TorusPoint> {
    if gammas.len() != pt.len() {
        return Err(Error::DimensionMismatch {
            context: "translate",
            expected: pt.len(),
            found: gammas.len(),
        });
    }
    Ok(TorusPoint::new(
        pt.coords()
            .iter()
            .zip(gammas)
            .map(|(z, g)| z + &CRat::from_lattice(g))
            .collect(),
    ))
}

/// Endpoint displacement of the lift of the loops `t ↦ t γ_i`:
/// `(S/ℓ, [γ_i + S/(ℓ s_i)])`.
pub fn lift_linear_loop(s: &[BigInt], slopes: &[LatticeVec]) -> Result<Displacement> {
    let d = deck_displacement(s, slopes)?;
    Ok(Displacement {
        z: d.z,
        torus: d
            .torus
            .iter()
            .zip(slopes)
            .map(|(t, g)| t + &CRat::from_lattice(g))
            .collect(),
    })
}

/// `(γ/ℓ, [γ/(ℓ s_i)])`.
pub fn base_point(s: &[BigInt], gamma_j: &LatticeVec) -> Result<CoverPoint> {
    check_orders(s)?;
    let l = BigInt::from(s.len());
    let z = &CRat::from_lattice(gamma_j) / &l;
    Ok(CoverPoint {
        torus: TorusPoint::new(s.iter().map(|si| &z / si).collect()),
        z,
    })
}

/// `(r0, torus_dim)` for the cover attached to `H ⊂ Z^m`: `r0` is the free
/// rank of `Z^m / H` and the cover looks like `R^{r0} x (S^1)^{mℓ - r0}`.
pub fn rank_profile(m: usize, h: &Subgroup, s: &[BigInt]) -> Result<(usize, usize)> {
    check_orders(s)?;
    let zm = FgAbGroup::free(m);
    let h = h.rebase(&zm)?;
    let r0 = zm.quotient(&h)?.0.canonical_form().free_rank;
    Ok((r0, m * s.len() - r0))
}
