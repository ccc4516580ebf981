//! Scenario files: TOML in, fully validated records out.
//!
//! Generators (relations, `h_xv`, flux, `pair_gens`) are lists of columns.
//! Map matrices (`ident`, square maps) are lists of rows. Integers may be
//! written as TOML integers or as decimal strings; rationals as integers or
//! `"p/q"` strings.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rimtori_core::rimtori::{Component, ContactProfile, DivisorData};
use rimtori_core::squares::{comparison_square, resp1t2_square, ExactSquare};
use rimtori_core::torus::{CRat, CoverPoint, LatticeVec, TorusPoint};
use rimtori_core::{CanonicalForm, FgAbGroup, Homomorphism, IntMatrix, Subgroup};
use serde::Deserialize;
use toml::Spanned;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Text(String),
}

impl Int {
    fn value(&self) -> Result<BigInt, String> {
        match self {
            Int::Small(v) => Ok(BigInt::from(*v)),
            Int::Text(s) => BigInt::from_str(s.trim()).map_err(|_| format!("'{s}' is not an integer")),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Rat {
    Small(i64),
    Text(String),
}

impl Rat {
    fn value(&self) -> Result<BigRational, String> {
        match self {
            Rat::Small(v) => Ok(BigRational::from_integer(BigInt::from(*v))),
            Rat::Text(s) => BigRational::from_str(s.trim()).map_err(|_| format!("'{s}' is not a rational number")),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default)]
    divisor: Vec<RawDivisor>,
    #[serde(default)]
    profile: Vec<RawProfile>,
    #[serde(default)]
    gluing: Vec<RawGluing>,
    #[serde(default)]
    square: Vec<RawSquare>,
    #[serde(default)]
    cover_point: Vec<RawCoverPoint>,
    #[serde(default)]
    base_point: Vec<RawBasePoint>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDivisor {
    name: Spanned<String>,
    dim_v: u32,
    #[serde(default)]
    h_xv: Vec<Vec<Int>>,
    #[serde(default)]
    order_constraint: Option<Vec<Int>>,
    #[serde(default)]
    component: Vec<RawComponent>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    name: String,
    #[serde(default)]
    h1: Option<String>,
    #[serde(default)]
    rank: Option<usize>,
    #[serde(default)]
    relations: Vec<Vec<Int>>,
    #[serde(default)]
    torus: bool,
    #[serde(default)]
    flux: Option<Gens>,
    #[serde(default = "yes")]
    cover_homology_fg: bool,
}

fn yes() -> bool {
    true
}

/// Either a keyword or a list of vectors.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Gens {
    Word(String),
    Vectors(Vec<Vec<Int>>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProfile {
    name: Spanned<String>,
    divisor: String,
    contacts: Vec<Vec<Int>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGluing {
    name: Spanned<String>,
    x: String,
    #[serde(default)]
    y: Option<String>,
    #[serde(default)]
    ident: Option<Gens>,
    #[serde(default)]
    pair_gens: Option<Vec<Vec<Int>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GroupSpec {
    Canonical(String),
    Presented {
        rank: usize,
        #[serde(default)]
        relations: Vec<Vec<Int>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComparison {
    h1_u: GroupSpec,
    h1_v: GroupSpec,
    h_x_uv: Vec<Vec<Int>>,
    h_x_v: Vec<Vec<Int>>,
    h_xminusv_u: Vec<Vec<Int>>,
}

type Rows = Vec<Vec<Int>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSquare {
    name: Spanned<String>,
    #[serde(default)]
    builtin: Option<String>,
    #[serde(default)]
    comparison: Option<RawComparison>,
    #[serde(default)]
    nodes: Option<Vec<Vec<GroupSpec>>>,
    #[serde(default)]
    row_maps: Option<Vec<Vec<Rows>>>,
    #[serde(default)]
    col_maps: Option<Vec<Vec<Rows>>>,
    #[serde(default)]
    labels: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoverPoint {
    name: Spanned<String>,
    s: Vec<Int>,
    z: [Rat; 2],
    torus: Vec<[Rat; 2]>,
    #[serde(default)]
    deck: Option<Vec<[Int; 2]>>,
    #[serde(default)]
    lift: Option<Vec<[Int; 2]>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasePoint {
    name: Spanned<String>,
    s: Vec<Int>,
    gamma: [Int; 2],
}

/// A profile together with the index of the divisor it refers to.
#[derive(Debug, Clone)]
pub struct ProfileRecord {
    pub name: String,
    pub divisor: usize,
    pub profile: ContactProfile,
}

#[derive(Debug, Clone)]
pub enum GluingKind {
    SelfGlue {
        x: usize,
    },
    Injective {
        x: usize,
        y: usize,
        ident: Box<Homomorphism>,
    },
    General {
        x: usize,
        y: usize,
        pair_gens: IntMatrix,
    },
}

#[derive(Debug, Clone)]
pub struct GluingRecord {
    pub name: String,
    pub kind: GluingKind,
}

#[derive(Debug, Clone)]
pub struct CoverRecord {
    pub name: String,
    pub s: Vec<BigInt>,
    pub point: CoverPoint,
    pub deck: Option<Vec<LatticeVec>>,
    pub lift: Option<Vec<LatticeVec>>,
}

#[derive(Debug, Clone)]
pub struct BaseRecord {
    pub name: String,
    pub s: Vec<BigInt>,
    pub gamma: LatticeVec,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub divisors: Vec<(String, DivisorData)>,
    pub profiles: Vec<ProfileRecord>,
    pub gluings: Vec<GluingRecord>,
    pub squares: Vec<(String, ExactSquare)>,
    pub cover_points: Vec<CoverRecord>,
    pub base_points: Vec<BaseRecord>,
}

struct Ctx<'a> {
    src: &'a str,
}

impl Ctx<'_> {
    fn line(&self, name: &Spanned<String>) -> usize {
        let at = name.span().start.min(self.src.len());
        self.src[..at].matches('\n').count() + 1
    }

    fn fail(&self, kind: &str, name: &Spanned<String>, msg: impl Display) -> CliError {
        CliError::Validation(format!("{kind} '{}' (line {}): {msg}", name.get_ref(), self.line(name)))
    }
}

fn ints(v: &[Int]) -> Result<Vec<BigInt>, String> {
    v.iter().map(Int::value).collect()
}

fn lattice(v: &[Int; 2]) -> Result<LatticeVec, String> {
    Ok([v[0].value()?, v[1].value()?])
}

fn crat(v: &[Rat; 2]) -> Result<CRat, String> {
    Ok(CRat::new(v[0].value()?, v[1].value()?))
}

/// Columns of length `rows`.
fn columns(rows: usize, cols: &[Vec<Int>], what: &str) -> Result<IntMatrix, String> {
    let mut out = Vec::with_capacity(cols.len());
    for (j, c) in cols.iter().enumerate() {
        if c.len() != rows {
            return Err(format!("{what}: vector {j} has {} entries, expected {rows}", c.len()));
        }
        out.push(ints(c)?);
    }
    IntMatrix::from_columns(rows, &out).map_err(|e| e.to_string())
}

/// A `rows x cols` matrix given row by row; `[]` is accepted for empty shapes.
fn row_matrix(rows: usize, cols: usize, data: &[Vec<Int>], what: &str) -> Result<IntMatrix, String> {
    if data.is_empty() && rows * cols == 0 {
        return Ok(IntMatrix::zeros(rows, cols));
    }
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(format!("{what}: expected a {rows}x{cols} matrix"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for r in data {
        entries.extend(ints(r)?);
    }
    IntMatrix::new(rows, cols, entries).map_err(|e| e.to_string())
}

fn group(spec: &GroupSpec) -> Result<FgAbGroup, String> {
    match spec {
        GroupSpec::Canonical(s) => CanonicalForm::parse(s)
            .map(|c| FgAbGroup::from_canonical(&c))
            .ok_or_else(|| format!("'{s}' is not a group like \"Z/2 + Z^3\"")),
        GroupSpec::Presented { rank, relations } => Ok(FgAbGroup::new(columns(*rank, relations, "relations")?)),
    }
}

fn check_unique<'a>(kind: &str, names: impl Iterator<Item = &'a Spanned<String>>, ctx: &Ctx) -> CliResult<()> {
    let mut seen = BTreeSet::new();
    for n in names {
        if !seen.insert(n.get_ref().clone()) {
            return Err(ctx.fail(kind, n, "duplicate name"));
        }
    }
    Ok(())
}

fn nonzero_orders(s: &[BigInt]) -> Result<(), String> {
    if s.is_empty() {
        return Err("needs at least one contact order".into());
    }
    // reuse the core diagnostic so the wording stays in one place
    ContactProfile::new(vec![s.to_vec()])
        .map(|_| ())
        .map_err(|e| e.to_string())
}

impl Scenario {
    pub fn load(path: &Path) -> CliResult<Scenario> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Scenario::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<Scenario> {
        let raw: RawScenario = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let ctx = Ctx { src: text };
        check_unique("divisor", raw.divisor.iter().map(|d| &d.name), &ctx)?;
        check_unique("profile", raw.profile.iter().map(|d| &d.name), &ctx)?;
        check_unique("gluing", raw.gluing.iter().map(|d| &d.name), &ctx)?;
        check_unique("square", raw.square.iter().map(|d| &d.name), &ctx)?;
        check_unique("cover_point", raw.cover_point.iter().map(|d| &d.name), &ctx)?;
        check_unique("base_point", raw.base_point.iter().map(|d| &d.name), &ctx)?;

        let divisors = raw
            .divisor
            .iter()
            .map(|d| {
                Ok((
                    d.name.get_ref().clone(),
                    divisor(d).map_err(|e| ctx.fail("divisor", &d.name, e))?,
                ))
            })
            .collect::<CliResult<Vec<_>>>()?;
        let find = |name: &str| divisors.iter().position(|(n, _)| n == name);

        let mut profiles = Vec::new();
        for p in &raw.profile {
            let fail = |e: String| ctx.fail("profile", &p.name, e);
            let idx = find(&p.divisor).ok_or_else(|| fail(format!("unknown divisor '{}'", p.divisor)))?;
            let tuples = p
                .contacts
                .iter()
                .map(|t| ints(t))
                .collect::<Result<Vec<_>, _>>()
                .map_err(fail)?;
            let profile = ContactProfile::new(tuples).map_err(|e| fail(e.to_string()))?;
            profile
                .check_against(&divisors[idx].1)
                .map_err(|e| fail(e.to_string()))?;
            profiles.push(ProfileRecord {
                name: p.name.get_ref().clone(),
                divisor: idx,
                profile,
            });
        }

        let mut gluings = Vec::new();
        for g in &raw.gluing {
            let fail = |e: String| ctx.fail("gluing", &g.name, e);
            let x = find(&g.x).ok_or_else(|| fail(format!("unknown divisor '{}'", g.x)))?;
            let y = match &g.y {
                Some(y) => find(y).ok_or_else(|| fail(format!("unknown divisor '{y}'")))?,
                None => x,
            };
            let (dx, dy) = (&divisors[x].1, &divisors[y].1);
            let kind = match (&g.ident, &g.pair_gens) {
                (Some(Gens::Word(w)), None) if w == "self" => {
                    if x != y {
                        return Err(fail("ident = \"self\" glues a divisor to itself; drop y".into()));
                    }
                    GluingKind::SelfGlue { x }
                }
                (Some(Gens::Word(w)), None) if w == "identity" => {
                    let n = dx.h1().ambient_rank();
                    let ident =
                        Homomorphism::new(dx.h1(), dy.h1(), IntMatrix::identity(n)).map_err(|e| fail(e.to_string()))?;
                    GluingKind::Injective {
                        x,
                        y,
                        ident: Box::new(ident),
                    }
                }
                (Some(Gens::Word(w)), None) => {
                    return Err(fail(format!(
                        "ident must be \"self\", \"identity\" or a matrix, got '{w}'"
                    )))
                }
                (Some(Gens::Vectors(rows)), None) => {
                    let (m, n) = (dy.h1().ambient_rank(), dx.h1().ambient_rank());
                    let mat = row_matrix(m, n, rows, "ident").map_err(fail)?;
                    let ident = Homomorphism::new(dx.h1(), dy.h1(), mat).map_err(|e| fail(e.to_string()))?;
                    GluingKind::Injective {
                        x,
                        y,
                        ident: Box::new(ident),
                    }
                }
                (None, Some(cols)) => {
                    let n = dx.h1().ambient_rank() + dy.h1().ambient_rank();
                    let pair_gens = columns(n, cols, "pair_gens").map_err(fail)?;
                    GluingKind::General { x, y, pair_gens }
                }
                _ => return Err(fail("give exactly one of ident and pair_gens".into())),
            };
            gluings.push(GluingRecord {
                name: g.name.get_ref().clone(),
                kind,
            });
        }

        let squares = raw
            .square
            .iter()
            .map(|s| {
                Ok((
                    s.name.get_ref().clone(),
                    square(s).map_err(|e| ctx.fail("square", &s.name, e))?,
                ))
            })
            .collect::<CliResult<Vec<_>>>()?;

        let mut cover_points = Vec::new();
        for c in &raw.cover_point {
            let rec = cover_record(c).map_err(|e| ctx.fail("cover_point", &c.name, e))?;
            cover_points.push(rec);
        }
        let mut base_points = Vec::new();
        for b in &raw.base_point {
            let fail = |e: String| ctx.fail("base_point", &b.name, e);
            let s = ints(&b.s).map_err(fail)?;
            nonzero_orders(&s).map_err(fail)?;
            base_points.push(BaseRecord {
                name: b.name.get_ref().clone(),
                s,
                gamma: lattice(&b.gamma).map_err(fail)?,
            });
        }

        Ok(Scenario {
            divisors,
            profiles,
            gluings,
            squares,
            cover_points,
            base_points,
        })
    }
}

fn divisor(d: &RawDivisor) -> Result<DivisorData, String> {
    if d.component.is_empty() {
        return Err("needs at least one [[divisor.component]]".into());
    }
    let mut comps = Vec::new();
    for c in &d.component {
        let h1 = match (&c.h1, c.rank) {
            (Some(s), None) if c.relations.is_empty() => group(&GroupSpec::Canonical(s.clone())),
            (None, Some(rank)) => Ok(FgAbGroup::new(columns(rank, &c.relations, "relations")?)),
            _ => Err("give either h1 = \"...\" or rank (with optional relations)".to_string()),
        }
        .map_err(|e| format!("component '{}': {e}", c.name))?;
        let mut comp = Component::new(c.name.clone(), h1.clone());
        comp.is_torus = c.torus;
        comp.cover_homology_fg = c.cover_homology_fg;
        comp.flux = match &c.flux {
            None => None,
            Some(Gens::Word(w)) if w == "full" => Some(Subgroup::whole(&h1)),
            Some(Gens::Word(w)) => {
                return Err(format!(
                    "component '{}': flux must be \"full\" or vectors, got '{w}'",
                    c.name
                ))
            }
            Some(Gens::Vectors(v)) => {
                let m = columns(h1.ambient_rank(), v, "flux")?;
                Some(Subgroup::new(&h1, m).map_err(|e| e.to_string())?)
            }
        };
        comps.push(comp);
    }
    let n: usize = comps.iter().map(|c| c.h1.ambient_rank()).sum();
    let h = columns(n, &d.h_xv, "h_xv")?;
    let mut data = DivisorData::new(comps, h, d.dim_v).map_err(|e| e.to_string())?;
    if let Some(orders) = &d.order_constraint {
        data = data.with_order_constraint(ints(orders)?).map_err(|e| e.to_string())?;
    }
    Ok(data)
}

fn grid<T, const N: usize, const M: usize>(v: Vec<Vec<T>>, what: &str) -> Result<[[T; M]; N], String> {
    let rows = v
        .into_iter()
        .map(|r| <[T; M]>::try_from(r).map_err(|_| format!("{what}: every row needs {M} entries")))
        .collect::<Result<Vec<_>, _>>()?;
    <[[T; M]; N]>::try_from(rows).map_err(|_| format!("{what}: needs {N} rows"))
}

fn square(s: &RawSquare) -> Result<ExactSquare, String> {
    let explicit = s.nodes.is_some() || s.row_maps.is_some() || s.col_maps.is_some();
    match (&s.builtin, &s.comparison, explicit) {
        (Some(b), None, false) if b == "resp1t2" => Ok(resp1t2_square()),
        (Some(b), None, false) => Err(format!("unknown builtin square '{b}' (known: resp1t2)")),
        (None, Some(c), false) => {
            let u = group(&c.h1_u)?;
            let v = group(&c.h1_v)?;
            let uv = u.direct_sum(&v);
            let sub = |g: &FgAbGroup, cols: &[Vec<Int>], what: &str| {
                Subgroup::new(g, columns(g.ambient_rank(), cols, what)?).map_err(|e| e.to_string())
            };
            comparison_square(
                &u,
                &v,
                &sub(&uv, &c.h_x_uv, "h_x_uv")?,
                &sub(&v, &c.h_x_v, "h_x_v")?,
                &sub(&u, &c.h_xminusv_u, "h_xminusv_u")?,
            )
            .map_err(|e| e.to_string())
        }
        (None, None, true) => explicit_square(s),
        _ => Err("give exactly one of builtin, comparison or nodes/row_maps/col_maps".into()),
    }
}

fn explicit_square(s: &RawSquare) -> Result<ExactSquare, String> {
    let (Some(nodes), Some(rm), Some(cm)) = (&s.nodes, &s.row_maps, &s.col_maps) else {
        return Err("explicit squares need nodes, row_maps and col_maps".into());
    };
    if rm.len() != 3 || cm.len() != 3 || rm.iter().chain(cm).any(|m| m.len() != 2) {
        return Err("row_maps and col_maps need 3 lists of 2 matrices each".into());
    }
    let groups = nodes
        .iter()
        .map(|r| r.iter().map(group).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let nodes: [[FgAbGroup; 3]; 3] = grid(groups, "nodes")?;
    let rank = |r: usize, c: usize| nodes[r][c].ambient_rank();
    let mut rows = Vec::new();
    for (r, maps) in rm.iter().enumerate() {
        let mut out = Vec::new();
        for (k, m) in maps.iter().enumerate() {
            out.push(row_matrix(rank(r, k + 1), rank(r, k), m, &format!("row {r} map {k}"))?);
        }
        rows.push(out);
    }
    let mut cols = Vec::new();
    for (c, maps) in cm.iter().enumerate() {
        let mut out = Vec::new();
        for (k, m) in maps.iter().enumerate() {
            out.push(row_matrix(rank(k + 1, c), rank(k, c), m, &format!("col {c} map {k}"))?);
        }
        cols.push(out);
    }
    let labels = match &s.labels {
        Some(l) => grid(l.clone(), "labels")?,
        None => std::array::from_fn(|r| std::array::from_fn(|c| format!("({r},{c})"))),
    };
    ExactSquare::from_matrices(nodes, grid(rows, "row_maps")?, grid(cols, "col_maps")?, labels)
        .map_err(|e| e.to_string())
}

fn cover_record(c: &RawCoverPoint) -> Result<CoverRecord, String> {
    let s = ints(&c.s)?;
    nonzero_orders(&s)?;
    if c.torus.len() != s.len() {
        return Err(format!("torus has {} coordinates but s has {}", c.torus.len(), s.len()));
    }
    let coords = c.torus.iter().map(crat).collect::<Result<Vec<_>, _>>()?;
    let vectors = |v: &Option<Vec<[Int; 2]>>, what: &str| -> Result<Option<Vec<LatticeVec>>, String> {
        match v {
            None => Ok(None),
            Some(v) if v.len() == s.len() => v.iter().map(lattice).collect::<Result<_, _>>().map(Some),
            Some(v) => Err(format!("{what} has {} vectors but s has {}", v.len(), s.len())),
        }
    };
    Ok(CoverRecord {
        name: c.name.get_ref().clone(),
        point: CoverPoint {
            z: crat(&c.z)?,
            torus: TorusPoint::new(coords),
        },
        deck: vectors(&c.deck, "deck")?,
        lift: vectors(&c.lift, "lift")?,
        s,
    })
}
