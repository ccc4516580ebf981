//! 3x3 grids of groups claimed to form a commutative square of short exact
//! sequences, and their verification.
//!
//! Node `(r, c)` sits in row `r`, column `c`. `row_maps[r][k]` goes from
//! `(r, k)` to `(r, k+1)`, `col_maps[c][k]` from `(k, c)` to `(k+1, c)`.
//! The zero groups around the border are implicit.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::{FgAbGroup, Homomorphism, Subgroup};
use crate::matrix::IntMatrix;
use crate::smith::solve_integral;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSquare {
    pub nodes: [[FgAbGroup; 3]; 3],
    pub row_maps: [[Homomorphism; 2]; 3],
    pub col_maps: [[Homomorphism; 2]; 3],
    pub labels: [[String; 3]; 3],
}

/// Verdicts for one sequence `0 -> A -> B -> C -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceReport {
    pub injective: bool,
    pub exact_middle: bool,
    pub surjective: bool,
}

impl SequenceReport {
    pub fn holds(&self) -> bool {
        self.injective && self.exact_middle && self.surjective
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub rows: [SequenceReport; 3],
    pub cols: [SequenceReport; 3],
    /// `cells[i][j]`: the square with top left corner at node `(i, j)`.
    pub cells: [[bool; 2]; 2],
    pub overall: bool,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.rows.iter().chain(&self.cols).all(SequenceReport::holds)
    }

    pub fn commutative(&self) -> bool {
        self.cells.iter().flatten().all(|&c| c)
    }

    /// Every failing position, e.g. `row 1 middle` or `cell (0,1)`.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (kind, seqs) in [("row", &self.rows), ("col", &self.cols)] {
            for (i, s) in seqs.iter().enumerate() {
                if !s.injective {
                    out.push(format!("{kind} {i} injective"));
                }
                if !s.exact_middle {
                    out.push(format!("{kind} {i} middle"));
                }
                if !s.surjective {
                    out.push(format!("{kind} {i} surjective"));
                }
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                if !self.cells[i][j] {
                    out.push(format!("cell ({i},{j})"));
                }
            }
        }
        out
    }
}

fn sequence_report(f: &Homomorphism, g: &Homomorphism) -> SequenceReport {
    SequenceReport {
        injective: f.is_injective(),
        exact_middle: f.image() == g.kernel(),
        surjective: g.is_surjective(),
    }
}

impl ExactSquare {
    /// Builds a square from matrices, checking shapes and well-definedness.
    pub fn from_matrices(
        nodes: [[FgAbGroup; 3]; 3],
        row_mats: [[IntMatrix; 2]; 3],
        col_mats: [[IntMatrix; 2]; 3],
        labels: [[String; 3]; 3],
    ) -> Result<Self> {
        let hom = |src: &FgAbGroup, tgt: &FgAbGroup, m: &IntMatrix, what: String| {
            Homomorphism::new(src, tgt, m.clone()).map_err(|e| match e {
                Error::DimensionMismatch { .. } => Error::IllTypedSquare(format!("{what}: {e}")),
                other => other,
            })
        };
        let row_maps = core::array::from_fn(|r| {
            core::array::from_fn(|k| {
                hom(
                    &nodes[r][k],
                    &nodes[r][k + 1],
                    &row_mats[r][k],
                    format!("row {r} map {k}"),
                )
            })
        });
        let col_maps = core::array::from_fn(|c| {
            core::array::from_fn(|k| {
                hom(
                    &nodes[k][c],
                    &nodes[k + 1][c],
                    &col_mats[c][k],
                    format!("col {c} map {k}"),
                )
            })
        });
        Ok(ExactSquare {
            row_maps: transpose_result(row_maps)?,
            col_maps: transpose_result(col_maps)?,
            nodes,
            labels,
        })
    }

    fn check_types(&self) -> Result<()> {
        for r in 0..3 {
            for k in 0..2 {
                let f = &self.row_maps[r][k];
                if *f.source() != self.nodes[r][k] || *f.target() != self.nodes[r][k + 1] {
                    return Err(Error::IllTypedSquare(format!(
                        "row {r} map {k} does not go from node ({r},{k}) to ({r},{})",
                        k + 1
                    )));
                }
                let g = &self.col_maps[r][k];
                if *g.source() != self.nodes[k][r] || *g.target() != self.nodes[k + 1][r] {
                    return Err(Error::IllTypedSquare(format!(
                        "col {r} map {k} does not go from node ({k},{r}) to ({},{r})",
                        k + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn verify(&self) -> Result<ExactnessReport> {
        self.check_types()?;
        let rows = core::array::from_fn(|r| sequence_report(&self.row_maps[r][0], &self.row_maps[r][1]));
        let cols = core::array::from_fn(|c| sequence_report(&self.col_maps[c][0], &self.col_maps[c][1]));
        let mut cells = [[false; 2]; 2];
        for (i, row) in cells.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let right_down = self.row_maps[i][j].then(&self.col_maps[j + 1][i])?;
                let down_right = self.col_maps[j][i].then(&self.row_maps[i + 1][j])?;
                *cell = right_down.equals_as_map(&down_right)?;
            }
        }
        let mut report = ExactnessReport {
            rows,
            cols,
            cells,
            overall: false,
        };
        report.overall = report.exact() && report.commutative();
        Ok(report)
    }
}

fn transpose_result<T, const N: usize, const M: usize>(a: [[Result<T>; M]; N]) -> Result<[[T; M]; N]> {
    let mut rows = Vec::with_capacity(N);
    for row in a {
        let mut items = Vec::with_capacity(M);
        for x in row {
            items.push(x?);
        }
        rows.push(<[T; M]>::try_from(items).map_err(|_| Error::Internal("array length"))?);
    }
    <[[T; M]; N]>::try_from(rows).map_err(|_| Error::Internal("array length"))
}

/// Map between two subgroups-as-groups induced by `m` on the ambients:
/// solves `gens_tgt · c ≡ m · gens_src_j` modulo the target relations.
fn induced_on_subgroups(src: &Subgroup, tgt: &Subgroup, m: &IntMatrix, what: &'static str) -> Result<Homomorphism> {
    let images = m.mul(src.generators())?;
    let lhs = tgt.generators().hcat(tgt.ambient().relations())?;
    let g = tgt.generators().cols();
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(images.cols());
    for j in 0..images.cols() {
        match solve_integral(&lhs, &images.column(j))? {
            Some(x) => cols.push(x[..g].to_vec()),
            None => return Err(Error::Containment(what)),
        }
    }
    Homomorphism::new(&src.as_group(), &tgt.as_group(), IntMatrix::from_columns(g, &cols)?)
}

/// The comparison square of rim tori for disjoint `U, V ⊂ X`:
///
/// ```text
/// H_{X-V}^U  -> H1(U)        -> R_{X-V}^U
/// H_X^{U∪V}  -> H1(U)+H1(V)  -> R_X^{U∪V}
/// H_X^V      -> H1(V)        -> R_X^V
/// ```
pub fn comparison_square(
    h1_u: &FgAbGroup,
    h1_v: &FgAbGroup,
    h_x_uv: &Subgroup,
    h_x_v: &Subgroup,
    h_xminusv_u: &Subgroup,
) -> Result<ExactSquare> {
    let h1_uv = h1_u.direct_sum(h1_v);
    if *h_x_uv.ambient() != h1_uv {
        return Err(Error::AmbientMismatch("comparison_square: H_X^{U∪V}"));
    }
    if h_x_v.ambient() != h1_v {
        return Err(Error::AmbientMismatch("comparison_square: H_X^V"));
    }
    if h_xminusv_u.ambient() != h1_u {
        return Err(Error::AmbientMismatch("comparison_square: H_{X-V}^U"));
    }
    let (u, v) = (h1_u.ambient_rank(), h1_v.ambient_rank());
    let incl = IntMatrix::identity(u).vcat(&IntMatrix::zeros(v, u))?;
    let proj = IntMatrix::zeros(v, u).hcat(&IntMatrix::identity(v))?;

    let (r_u, q_u) = h1_u.quotient(h_xminusv_u)?;
    let (r_uv, q_uv) = h1_uv.quotient(h_x_uv)?;
    let (r_v, q_v) = h1_v.quotient(h_x_v)?;

    let left_top = induced_on_subgroups(h_xminusv_u, h_x_uv, &incl, "H_{X-V}^U + 0 inside H_X^{U∪V}")?;
    let left_bottom = induced_on_subgroups(h_x_uv, h_x_v, &proj, "projection of H_X^{U∪V} inside H_X^V")?;
    let right_top = Homomorphism::new(&r_u, &r_uv, incl.clone())?;
    let right_bottom = Homomorphism::new(&r_uv, &r_v, proj.clone())?;

    let a = [h_xminusv_u, h_x_uv, h_x_v];
    let nodes = [
        [a[0].as_group(), h1_u.clone(), r_u],
        [a[1].as_group(), h1_uv.clone(), r_uv],
        [a[2].as_group(), h1_v.clone(), r_v],
    ];
    let row_maps = [
        [a[0].inclusion(), q_u],
        [a[1].inclusion(), q_uv],
        [a[2].inclusion(), q_v],
    ];
    let col_maps = [
        [left_top, left_bottom],
        [
            Homomorphism::new(h1_u, &h1_uv, incl)?,
            Homomorphism::new(&h1_uv, h1_v, proj)?,
        ],
        [right_top, right_bottom],
    ];
    let labels = [
        ["H_{X-V}^U", "H1(U)", "R_{X-V}^U"],
        ["H_X^{U+V}", "H1(U)+H1(V)", "R_X^{U+V}"],
        ["H_X^V", "H1(V)", "R_X^V"],
    ]
    .map(|r| r.map(ToString::to_string));
    Ok(ExactSquare {
        nodes,
        row_maps,
        col_maps,
        labels,
    })
}

/// The explicit square for gluing the rational elliptic surface to
/// `P^1 x T^2` along a fibre.
///
/// Coordinates: the middle node `0+Z^2+Z^2+Z^2` is stored as `Z^6` (the
/// leading zero summand dropped), `0+Z^2` as `Z^2`.
pub fn resp1t2_square() -> ExactSquare {
    let z = |n| FgAbGroup::free(n);
    let m = |rows: &[&[i64]]| IntMatrix::from_rows(rows);
    let i2 = IntMatrix::identity(2);
    let i4 = IntMatrix::identity(4);
    let nodes = [[z(0), z(2), z(2)], [z(4), z(6), z(2)], [z(4), z(4), z(0)]];
    let row_mats = [
        [IntMatrix::zeros(2, 0), i2.clone()],
        [
            // (γ1,γ2) -> (0,γ1,γ1+γ2,γ2)
            m(&[
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[1, 0, 1, 0],
                &[0, 1, 0, 1],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
            ]),
            // (0,γ1,γ2,γ3) -> γ1-γ2+γ3
            m(&[&[1, 0, -1, 0, 1, 0], &[0, 1, 0, -1, 0, 1]]),
        ],
        [i4.clone(), IntMatrix::zeros(0, 4)],
    ];
    let col_mats = [
        [
            IntMatrix::zeros(4, 0),
            m(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1]]),
        ],
        [
            // (0,γ) -> (0,0,0,γ)
            m(&[&[0, 0], &[0, 0], &[0, 0], &[0, 0], &[1, 0], &[0, 1]]),
            // (0,γ1,γ2,γ3) -> (γ1,γ2)
            m(&[
                &[1, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
            ]),
        ],
        [i2, IntMatrix::zeros(0, 2)],
    ];
    let labels = [
        ["0", "0+Z^2", "Z^2"],
        ["Z^2+Z^2", "0+Z^2+Z^2+Z^2", "Z^2"],
        ["Z^2+Z^2", "Z^2+Z^2", "0"],
    ]
    .map(|r| r.map(ToString::to_string));
    ExactSquare::from_matrices(nodes, row_mats, col_mats, labels).expect("built-in square is well typed")
}
