//! Finitely generated abelian groups as `Z^n / L`, their subgroups and the
//! homomorphisms between them.
//!
//! A subgroup is stored as ambient generators; the relation lattice `L` of
//! the ambient group is always implicitly part of its span. A homomorphism
//! is a matrix acting on ambient coordinates and is checked to respect the
//! relations when built.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hermite::{hermite_with_pivots, reduce_mod};
use crate::matrix::IntMatrix;
use crate::smith::{kernel_basis, smith_normal_form};

/// Free rank plus invariant factors `d_1 | d_2 | ...`, all `> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl CanonicalForm {
    pub fn free(rank: usize) -> Self {
        CanonicalForm {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.torsion.iter().product())
        }
    }

    /// Canonical form of the direct sum.
    pub fn sum(&self, other: &CanonicalForm) -> CanonicalForm {
        let a = FgAbGroup::from_canonical(self);
        let b = FgAbGroup::from_canonical(other);
        a.direct_sum(&b).canonical_form()
    }

    /// Parses the output of `Display` back.
    pub fn parse(s: &str) -> Option<CanonicalForm> {
        let s = s.trim();
        if s == "0" {
            return Some(CanonicalForm::free(0));
        }
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        let mut seen_free = false;
        for part in s.split('+').map(str::trim) {
            if seen_free {
                return None;
            }
            if let Some(d) = part.strip_prefix("Z/") {
                let d: BigInt = d.parse().ok()?;
                if d <= BigInt::one() || torsion.last().is_some_and(|p: &BigInt| !(&d % p).is_zero()) {
                    return None;
                }
                torsion.push(d);
            } else if part == "Z" {
                free_rank = 1;
                seen_free = true;
            } else {
                free_rank = part.strip_prefix("Z^")?.parse().ok()?;
                if free_rank < 2 {
                    return None;
                }
                seen_free = true;
            }
        }
        Some(CanonicalForm { free_rank, torsion })
    }
}

/// `Z/d1 + Z/d2 + Z^r`, torsion first in divisibility order; `0` when
/// trivial and `Z` for rank one.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                write!(f, " + ")?;
            }
            match self.free_rank {
                1 => write!(f, "Z")?,
                r => write!(f, "Z^{r}")?,
            }
        }
        Ok(())
    }
}

/// Cardinality of a group or index of a subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// `Z^n` modulo the column span of `relations`.
#[derive(Debug, Clone)]
pub struct FgAbGroup {
    relations: IntMatrix,
    // Hermite basis of the relation lattice and its pivot rows.
    hnf: IntMatrix,
    pivots: Vec<usize>,
}

impl PartialEq for FgAbGroup {
    /// Same ambient rank and same relation lattice.
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf
    }
}

impl Eq for FgAbGroup {}

impl FgAbGroup {
    pub fn new(relations: IntMatrix) -> Self {
        let (hnf, pivots) = hermite_with_pivots(&relations);
        FgAbGroup { relations, hnf, pivots }
    }

    /// Convenience: `n` rows, columns given as `i64` vectors.
    pub fn from_relation_columns<C: AsRef<[i64]>>(n: usize, cols: &[C]) -> Self {
        let mut m = IntMatrix::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            let c = c.as_ref();
            assert_eq!(c.len(), n, "relation column length");
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        Self::new(m)
    }

    pub fn free(n: usize) -> Self {
        Self::new(IntMatrix::zeros(n, 0))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(d: i64) -> Self {
        Self::new(IntMatrix::from_rows(&[[d]]))
    }

    /// The standard presentation `Z/d1 + ... + Z^r`.
    pub fn from_canonical(c: &CanonicalForm) -> Self {
        let k = c.torsion.len();
        let mut rel = IntMatrix::zeros(k + c.free_rank, k);
        for (i, d) in c.torsion.iter().enumerate() {
            rel[(i, i)] = d.clone();
        }
        Self::new(rel)
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Hermite basis of the relation lattice.
    pub fn relation_lattice(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let s = smith_normal_form(&self.hnf);
        let diag = s.diagonal();
        let rank = s.rank();
        CanonicalForm {
            free_rank: self.ambient_rank() - rank,
            torsion: diag.into_iter().take(rank).filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn order(&self) -> Order {
        self.canonical_form().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.hnf.cols() == self.ambient_rank() && (0..self.hnf.cols()).all(|k| self.hnf[(k, k)].is_one())
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::new(IntMatrix::block_diag(&[&self.relations, &other.relations]))
    }

    pub fn direct_sum_all(groups: &[&FgAbGroup]) -> FgAbGroup {
        let rels: Vec<&IntMatrix> = groups.iter().map(|g| &g.relations).collect();
        FgAbGroup::new(IntMatrix::block_diag(&rels))
    }

    /// Canonical representative of the class of `v`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_vector(v, "FgAbGroup::reduce")?;
        Ok(reduce_mod(&self.hnf, &self.pivots, v))
    }

    /// Whether `v` represents the zero element.
    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn elements_equal(&self, a: &[BigInt], b: &[BigInt]) -> Result<bool> {
        self.check_vector(a, "FgAbGroup::elements_equal")?;
        self.check_vector(b, "FgAbGroup::elements_equal")?;
        let d: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&d)
    }

    /// Whether every column of `m` is zero in this group.
    pub fn columns_vanish(&self, m: &IntMatrix) -> Result<bool> {
        if m.rows() != self.ambient_rank() {
            return Err(Error::DimensionMismatch {
                context: "FgAbGroup::columns_vanish",
                expected: self.ambient_rank(),
                found: m.rows(),
            });
        }
        for j in 0..m.cols() {
            if !self.is_zero_element(&m.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_vector(&self, v: &[BigInt], context: &'static str) -> Result<()> {
        if v.len() != self.ambient_rank() {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.ambient_rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn identity_hom(&self) -> Homomorphism {
        Homomorphism {
            source: self.clone(),
            target: self.clone(),
            matrix: IntMatrix::identity(self.ambient_rank()),
        }
    }

    /// Quotient by `s` with its projection; the projection matrix is the
    /// identity on ambient coordinates.
    pub fn quotient(&self, s: &Subgroup) -> Result<(FgAbGroup, Homomorphism)> {
        if s.ambient != *self {
            return Err(Error::AmbientMismatch("quotient"));
        }
        let q = FgAbGroup::new(self.relations.hcat(&s.generators)?);
        let proj = Homomorphism {
            source: self.clone(),
            target: q.clone(),
            matrix: IntMatrix::identity(self.ambient_rank()),
        };
        Ok((q, proj))
    }

    /// `[G : S]`.
    pub fn subgroup_index(&self, s: &Subgroup) -> Result<Order> {
        Ok(self.quotient(s)?.0.order())
    }

    /// One representative per coset of `s`, in lexicographic order of the
    /// canonical reduced vectors.
    pub fn coset_reps(&self, s: &Subgroup) -> Result<Vec<Vec<BigInt>>> {
        let (q, _) = self.quotient(s)?;
        q.element_reps()
    }

    /// All elements of a finite group as canonical representatives.
    pub fn element_reps(&self) -> Result<Vec<Vec<BigInt>>> {
        let n = self.ambient_rank();
        if self.hnf.cols() != n {
            return Err(Error::InfiniteQuotient);
        }
        // Full rank: lower triangular with positive diagonal; the box
        // prod [0, h_ii) is a transversal.
        let bounds: Vec<BigInt> = (0..n).map(|i| self.hnf[(i, i)].clone()).collect();
        let mut out = Vec::new();
        let mut cur = vec![BigInt::zero(); n];
        loop {
            out.push(cur.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = BigInt::zero();
            }
        }
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.canonical_form(), f)
    }
}

/// Subgroup of `ambient` spanned by the columns of `generators` (plus the
/// relations of `ambient`).
#[derive(Debug, Clone)]
pub struct Subgroup {
    ambient: FgAbGroup,
    generators: IntMatrix,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.lattice_hnf().0 == other.lattice_hnf().0
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn new(ambient: &FgAbGroup, generators: IntMatrix) -> Result<Self> {
        if generators.rows() != ambient.ambient_rank() {
            return Err(Error::DimensionMismatch {
                context: "Subgroup::new",
                expected: ambient.ambient_rank(),
                found: generators.rows(),
            });
        }
        Ok(Subgroup {
            ambient: ambient.clone(),
            generators,
        })
    }

    pub fn from_columns<C: AsRef<[i64]>>(ambient: &FgAbGroup, cols: &[C]) -> Result<Self> {
        let n = ambient.ambient_rank();
        let cols: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|c| c.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::new(ambient, IntMatrix::from_columns(n, &cols)?)
    }

    pub fn zero(ambient: &FgAbGroup) -> Self {
        Subgroup {
            ambient: ambient.clone(),
            generators: IntMatrix::zeros(ambient.ambient_rank(), 0),
        }
    }

    pub fn whole(ambient: &FgAbGroup) -> Self {
        Subgroup {
            ambient: ambient.clone(),
            generators: IntMatrix::identity(ambient.ambient_rank()),
        }
    }

    pub fn ambient(&self) -> &FgAbGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// `[generators | relations]`.
    fn full_generators(&self) -> IntMatrix {
        self.generators
            .hcat(self.ambient.relations())
            .expect("row counts agree by construction")
    }

    fn lattice_hnf(&self) -> (IntMatrix, Vec<usize>) {
        hermite_with_pivots(&self.full_generators())
    }

    /// Hermite basis of the preimage of this subgroup in `Z^n`.
    pub fn hermite_basis(&self) -> IntMatrix {
        self.lattice_hnf().0
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> Result<bool> {
        self.ambient.check_vector(v, "Subgroup::contains_vector")?;
        let (h, piv) = self.lattice_hnf();
        Ok(reduce_mod(&h, &piv, v).iter().all(Zero::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subgroup) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch("Subgroup::contains"));
        }
        let (h, piv) = self.lattice_hnf();
        Ok((0..other.generators.cols()).all(|j| {
            reduce_mod(&h, &piv, &other.generators.column(j))
                .iter()
                .all(Zero::is_zero)
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.ambient
            .columns_vanish(&self.generators)
            .expect("row counts agree by construction")
    }

    pub fn is_whole(&self) -> bool {
        let h = self.hermite_basis();
        let n = self.ambient.ambient_rank();
        h.cols() == n && (0..n).all(|k| h[(k, k)].is_one())
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch("Subgroup::sum"));
        }
        Ok(Subgroup {
            ambient: self.ambient.clone(),
            generators: self.generators.hcat(&other.generators)?,
        })
    }

    /// Exact intersection: if `A = [S | L]`, `B = [S' | L]` then
    /// `S ∩ S' = A·x` over the kernel `(x, y)` of `[A | -B]`.
    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch("Subgroup::intersection"));
        }
        let a = self.full_generators();
        let b = other.full_generators();
        let k = kernel_basis(&a.hcat(&b.neg())?);
        let x = k.submatrix(0..a.cols(), 0..k.cols());
        Ok(Subgroup {
            ambient: self.ambient.clone(),
            generators: a.mul(&x)?,
        })
    }

    /// Index in the ambient group.
    pub fn index(&self) -> Order {
        self.ambient
            .subgroup_index(self)
            .expect("ambient matches by construction")
    }

    /// The subgroup as an abstract group `Z^g / {c : gens·c ∈ L}`, where `g`
    /// is the number of generators.
    pub fn as_group(&self) -> FgAbGroup {
        let l = self.ambient.relations();
        let m = self
            .generators
            .hcat(&l.neg())
            .expect("row counts agree by construction");
        let k = kernel_basis(&m);
        FgAbGroup::new(k.submatrix(0..self.generators.cols(), 0..k.cols()))
    }

    /// Inclusion of [`Subgroup::as_group`] into the ambient group.
    pub fn inclusion(&self) -> Homomorphism {
        Homomorphism {
            source: self.as_group(),
            target: self.ambient.clone(),
            matrix: self.generators.clone(),
        }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.as_group().canonical_form()
    }

    /// Same subgroup viewed in a group with an equal relation lattice.
    pub fn rebase(&self, ambient: &FgAbGroup) -> Result<Subgroup> {
        if *ambient != self.ambient {
            return Err(Error::AmbientMismatch("Subgroup::rebase"));
        }
        Ok(Subgroup {
            ambient: ambient.clone(),
            generators: self.generators.clone(),
        })
    }
}

/// Group homomorphism given by a matrix on ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl Homomorphism {
    pub fn new(source: &FgAbGroup, target: &FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ambient_rank() {
            return Err(Error::DimensionMismatch {
                context: "Homomorphism::new (rows)",
                expected: target.ambient_rank(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != source.ambient_rank() {
            return Err(Error::DimensionMismatch {
                context: "Homomorphism::new (cols)",
                expected: source.ambient_rank(),
                found: matrix.cols(),
            });
        }
        let images = matrix.mul(source.relations())?;
        if !target.columns_vanish(&images)? {
            return Err(Error::IllDefinedHomomorphism);
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        Homomorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.ambient_rank(), source.ambient_rank()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.matrix.mul_vec(v)
    }

    /// `{x : M x ∈ L_target}`, read off the kernel of `[M | -L_target]`.
    pub fn kernel(&self) -> Subgroup {
        let rt = self.target.relations();
        let m = self.matrix.hcat(&rt.neg()).expect("shapes checked in new");
        let k = kernel_basis(&m);
        Subgroup {
            ambient: self.source.clone(),
            generators: k.submatrix(0..self.matrix.cols(), 0..k.cols()),
        }
    }

    pub fn image(&self) -> Subgroup {
        Subgroup {
            ambient: self.target.clone(),
            generators: self.matrix.clone(),
        }
    }

    pub fn cokernel(&self) -> FgAbGroup {
        FgAbGroup::new(
            self.target
                .relations()
                .hcat(&self.matrix)
                .expect("shapes checked in new"),
        )
    }

    /// `f⁻¹(S)`, read off the kernel of `[M | -S | -L_target]`.
    pub fn preimage(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.ambient != self.target {
            return Err(Error::AmbientMismatch("Homomorphism::preimage"));
        }
        let m = self.matrix.hcat(&s.full_generators().neg())?;
        let k = kernel_basis(&m);
        Ok(Subgroup {
            ambient: self.source.clone(),
            generators: k.submatrix(0..self.matrix.cols(), 0..k.cols()),
        })
    }

    /// `f(S)` for `S` a subgroup of the source.
    pub fn image_of(&self, s: &Subgroup) -> Result<Subgroup> {
        if s.ambient != self.source {
            return Err(Error::AmbientMismatch("Homomorphism::image_of"));
        }
        Ok(Subgroup {
            ambient: self.target.clone(),
            generators: self.matrix.mul(&s.generators)?,
        })
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Homomorphism) -> Result<Homomorphism> {
        if g.source != self.target {
            return Err(Error::AmbientMismatch("Homomorphism::then"));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: g.target.clone(),
            matrix: g.matrix.mul(&self.matrix)?,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Equality as maps: same groups and matrices agreeing modulo the
    /// target relations.
    pub fn equals_as_map(&self, other: &Homomorphism) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        self.target.columns_vanish(&self.matrix.sub(&other.matrix)?)
    }

    pub fn with_source_and_target(&self, source: &FgAbGroup, target: &FgAbGroup) -> Result<Homomorphism> {
        Homomorphism::new(source, target, self.matrix.clone())
    }
}

/// Short human description, used in diagnostics.
pub fn describe_vector(v: &[BigInt]) -> String {
    use core::fmt::Write;
    let mut s = String::from("(");
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s.push(')');
    s
}
