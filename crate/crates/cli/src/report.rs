//! Reports: one record per scenario entry, rendered as stable text lines or
//! as a single JSON document.

use rimtori_core::torus::{CRat, TorusPoint};
use rimtori_core::{CanonicalForm, FgAbGroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOut {
    pub canonical: String,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub order: String,
}

impl GroupOut {
    pub fn from_form(c: &CanonicalForm) -> Self {
        GroupOut {
            canonical: c.to_string(),
            free_rank: c.free_rank,
            torsion: c.torsion.iter().map(ToString::to_string).collect(),
            order: c.order().to_string(),
        }
    }

    pub fn from_group(g: &FgAbGroup) -> Self {
        Self::from_form(&g.canonical_form())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReasonOut {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceOut {
    pub injective: bool,
    pub exact_middle: bool,
    pub surjective: bool,
}

/// A complex number as `[re, im]`, each a reduced `p/q` string.
pub type ComplexOut = [String; 2];

pub fn complex(c: &CRat) -> ComplexOut {
    [c.re.to_string(), c.im.to_string()]
}

pub fn torus(p: &TorusPoint) -> Vec<ComplexOut> {
    p.coords().iter().map(complex).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplacementOut {
    pub z: ComplexOut,
    pub torus: Vec<ComplexOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Group {
        group: GroupOut,
    },
    Deck {
        gcd: String,
        r_h: GroupOut,
        finite: GroupOut,
        free: GroupOut,
        total: GroupOut,
    },
    Threshold {
        dim_v: u32,
        contacts: usize,
        wc_free_rank: usize,
        threshold: i64,
    },
    Verdict {
        gcd: String,
        lift_independent: bool,
        equals_standard_gw: bool,
        reasons: Vec<ReasonOut>,
    },
    FiniteGeneration {
        wc_span: GroupOut,
        wc_index: String,
        finitely_generated: bool,
    },
    Square {
        exact: bool,
        commutative: bool,
        rows: Vec<SequenceOut>,
        cols: Vec<SequenceOut>,
        cells: Vec<Vec<bool>>,
        failures: Vec<String>,
    },
    Cover {
        member: bool,
        projection: Option<Vec<ComplexOut>>,
        deck_image: Option<DisplacementOut>,
        deck_displacement: Option<DisplacementOut>,
        deck_projection_fixed: Option<bool>,
        lift_endpoint: Option<DisplacementOut>,
        lift_matches_deck: Option<bool>,
    },
    BasePoint {
        z: ComplexOut,
        torus: Vec<ComplexOut>,
        member: bool,
        projects_to_origin: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub results: Vec<Record>,
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn point(c: &ComplexOut) -> String {
    format!("({}, {})", c[0], c[1])
}

fn points(v: &[ComplexOut]) -> String {
    let inner: Vec<String> = v.iter().map(point).collect();
    format!("[{}]", inner.join(", "))
}

fn displacement(d: &DisplacementOut) -> String {
    format!("z + {}, torus + {}", point(&d.z), points(&d.torus))
}

impl Body {
    pub fn text(&self) -> String {
        match self {
            Body::Group { group } => group.canonical.clone(),
            Body::Deck {
                gcd,
                finite,
                free,
                total,
                ..
            } => format!(
                "finite: {}; free: {}; total: {}; gcd(s) = {gcd}",
                finite.canonical, free.canonical, total.canonical
            ),
            Body::Threshold { threshold, .. } => format!("threshold r* = {threshold}"),
            Body::Verdict {
                gcd,
                lift_independent,
                equals_standard_gw,
                reasons,
            } => {
                let rs: Vec<String> = reasons
                    .iter()
                    .map(|r| format!("{}={}", r.name, if r.passed { "pass" } else { "fail" }))
                    .collect();
                format!(
                    "lift independent: {}; equals standard GW: {}; gcd(s) = {gcd}; {}",
                    yn(*lift_independent),
                    yn(*equals_standard_gw),
                    rs.join(", ")
                )
            }
            Body::FiniteGeneration {
                wc_span,
                wc_index,
                finitely_generated,
            } => format!(
                "wc span: {}; wc index: {wc_index}; finitely generated: {}",
                wc_span.canonical,
                yn(*finitely_generated)
            ),
            Body::Square {
                exact,
                commutative,
                failures,
                ..
            } => {
                let mut s = format!("exact: {}; commutative: {}", yn(*exact), yn(*commutative));
                if !failures.is_empty() {
                    s.push_str(&format!("; failures: {}", failures.join(", ")));
                }
                s
            }
            Body::Cover {
                member,
                projection,
                deck_image,
                deck_projection_fixed,
                lift_endpoint,
                lift_matches_deck,
                ..
            } => {
                let mut parts = vec![format!("member: {}", yn(*member))];
                if let Some(p) = projection {
                    parts.push(format!("projection: {}", points(p)));
                }
                if let Some(d) = deck_image {
                    parts.push(format!("deck image: z = {}, torus = {}", point(&d.z), points(&d.torus)));
                }
                if let Some(f) = deck_projection_fixed {
                    parts.push(format!("projection preserved: {}", yn(*f)));
                }
                if let Some(l) = lift_endpoint {
                    parts.push(format!("lift endpoint: {}", displacement(l)));
                }
                if let Some(m) = lift_matches_deck {
                    parts.push(format!("lift matches deck: {}", yn(*m)));
                }
                parts.join("; ")
            }
            Body::BasePoint {
                z,
                torus,
                member,
                projects_to_origin,
            } => format!(
                "z = {}; torus = {}; member: {}; projects to origin: {}",
                point(z),
                points(torus),
                yn(*member),
                yn(*projects_to_origin)
            ),
        }
    }

    /// Every canonical group string in the body, in document order.
    pub fn groups(&self) -> Vec<&GroupOut> {
        match self {
            Body::Group { group } => vec![group],
            Body::Deck {
                r_h,
                finite,
                free,
                total,
                ..
            } => vec![r_h, finite, free, total],
            Body::FiniteGeneration { wc_span, .. } => vec![wc_span],
            _ => Vec::new(),
        }
    }
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.name);
            out.push_str(": ");
            out.push_str(&r.body.text());
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}
