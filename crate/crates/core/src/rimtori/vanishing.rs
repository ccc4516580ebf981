use crate::error::{Error, Result};
use crate::group::{FgAbGroup, Homomorphism, Subgroup};
use crate::matrix::IntMatrix;

use super::{rim_tori_module, DivisorData};

/// Vanishing cycles of `X #_V Y` when `H_c(V) -> H_c` is injective on both
/// sides: the cokernel of `γ ↦ ([γ]_X, [ident(γ)]_Y)`.
///
/// `ident` maps `H_1(V)` as seen from `X` to `H_1(V)` as seen from `Y` and
/// has to be an isomorphism.
pub fn vanishing_cycles_injective(dx: &DivisorData, dy: &DivisorData, ident: &Homomorphism) -> Result<FgAbGroup> {
    if ident.source() != dx.h1() || ident.target() != dy.h1() {
        return Err(Error::AmbientMismatch("vanishing_cycles_injective"));
    }
    if !ident.is_isomorphism() {
        return Err(Error::NonInvertibleIdentification);
    }
    let (rx, _) = rim_tori_module(dx);
    let (ry, _) = rim_tori_module(dy);
    let n = dx.h1().ambient_rank();
    let m = IntMatrix::identity(n).vcat(ident.matrix())?;
    let f = Homomorphism::new(dx.h1(), &rx.direct_sum(&ry), m)?;
    Ok(f.cokernel())
}

/// Vanishing cycles from caller supplied generators of the image of
/// `H_c(SV)_{X,Y}` in `R_X ⊕ R_Y`.
pub fn vanishing_cycles_general(rx: &FgAbGroup, ry: &FgAbGroup, pair_gens: &IntMatrix) -> Result<FgAbGroup> {
    let sum = rx.direct_sum(ry);
    let s = Subgroup::new(&sum, pair_gens.clone())?;
    Ok(sum.quotient(&s)?.0)
}

/// `R_{X,X}^V`, the cokernel of the diagonal `H_1(V) -> H_1(V)_X ⊕ H_1(V)_X`.
pub fn self_glue(d: &DivisorData) -> FgAbGroup {
    let n = d.h1().ambient_rank();
    let h = d.h_xv().generators();
    let zero = IntMatrix::zeros(n, h.cols());
    let l = d.h1().relations();
    let lz = IntMatrix::zeros(n, l.cols());
    // relations: both copies of H_X^V and of L, plus the diagonal
    let diag = IntMatrix::identity(n)
        .vcat(&IntMatrix::identity(n))
        .expect("square blocks");
    let top = IntMatrix::hcat_all(n, &[h, &zero, l, &lz]).expect("row counts agree");
    let bottom = IntMatrix::hcat_all(n, &[&zero, h, &lz, l]).expect("row counts agree");
    let rel = top.vcat(&bottom).and_then(|r| r.hcat(&diag)).expect("row counts agree");
    FgAbGroup::new(rel)
}
