use clap::ValueEnum;
use rimtori_core::rimtori::{
    deck_group, homology_finitely_generated, invariance_verdict, profile_gcd, rim_tori_module, self_glue,
    vanishing_cycles_general, vanishing_cycles_injective, vanishing_threshold, wc_submodule,
};
use rimtori_core::torus::{
    base_point, cover_project, deck_act, deck_displacement, lift_linear_loop, t_s_member, translate, Displacement,
};
use rimtori_core::FgAbGroup;

use crate::error::{CliError, CliResult};
use crate::report::{complex, torus, Body, DisplacementOut, GroupOut, ReasonOut, Record, Report, SequenceOut};
use crate::scenario::{GluingKind, Scenario};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Compute,
    Deck,
    Glue,
    SelfGlue,
    Vanishing,
    Invariance,
    FiniteGeneration,
    VerifySquare,
    TorusCover,
    BasePoint,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Compute => "compute",
            Command::Deck => "deck",
            Command::Glue => "glue",
            Command::SelfGlue => "self-glue",
            Command::Vanishing => "vanishing",
            Command::Invariance => "invariance",
            Command::FiniteGeneration => "finite-generation",
            Command::VerifySquare => "verify-square",
            Command::TorusCover => "torus-cover",
            Command::BasePoint => "base-point",
        }
    }

    /// Which kind of record the command consumes.
    fn kind(self) -> &'static str {
        match self {
            Command::Compute | Command::SelfGlue => "divisor",
            Command::Deck | Command::Vanishing | Command::Invariance | Command::FiniteGeneration => "profile",
            Command::Glue => "gluing",
            Command::VerifySquare => "square",
            Command::TorusCover => "cover_point",
            Command::BasePoint => "base_point",
        }
    }
}

fn names(sc: &Scenario, kind: &str) -> Vec<String> {
    match kind {
        "divisor" => sc.divisors.iter().map(|d| d.0.clone()).collect(),
        "profile" => sc.profiles.iter().map(|p| p.name.clone()).collect(),
        "gluing" => sc.gluings.iter().map(|g| g.name.clone()).collect(),
        "square" => sc.squares.iter().map(|s| s.0.clone()).collect(),
        "cover_point" => sc.cover_points.iter().map(|c| c.name.clone()).collect(),
        _ => sc.base_points.iter().map(|b| b.name.clone()).collect(),
    }
}

/// Indices of the selected records, in scenario order.
fn select(sc: &Scenario, cmd: Command, wanted: &[String]) -> CliResult<Vec<usize>> {
    let all = names(sc, cmd.kind());
    if all.is_empty() {
        return Err(CliError::Validation(format!(
            "`{}` needs at least one [[{}]] record",
            cmd.as_str(),
            cmd.kind()
        )));
    }
    if wanted.is_empty() {
        return Ok((0..all.len()).collect());
    }
    for w in wanted {
        if !all.contains(w) {
            return Err(CliError::Validation(format!("no {} named '{w}'", cmd.kind())));
        }
    }
    Ok((0..all.len()).filter(|&i| wanted.contains(&all[i])).collect())
}

fn pre(name: &str, e: rimtori_core::Error) -> CliError {
    CliError::Precondition(format!("{name}: {e}"))
}

fn disp(d: &Displacement) -> DisplacementOut {
    DisplacementOut {
        z: complex(&d.z),
        torus: d.torus.iter().map(complex).collect(),
    }
}

fn group(g: &FgAbGroup) -> Body {
    Body::Group {
        group: GroupOut::from_group(g),
    }
}

pub fn run(cmd: Command, sc: &Scenario, wanted: &[String]) -> CliResult<Report> {
    let mut results = Vec::new();
    for i in select(sc, cmd, wanted)? {
        let (name, body) = match cmd {
            Command::Compute => {
                let (name, d) = &sc.divisors[i];
                (name, group(&rim_tori_module(d).0))
            }
            Command::SelfGlue => {
                let (name, d) = &sc.divisors[i];
                (name, group(&self_glue(d)))
            }
            Command::Glue => {
                let g = &sc.gluings[i];
                let d = |k: usize| &sc.divisors[k].1;
                let out = match &g.kind {
                    GluingKind::SelfGlue { x } => Ok(self_glue(d(*x))),
                    GluingKind::Injective { x, y, ident } => vanishing_cycles_injective(d(*x), d(*y), ident),
                    GluingKind::General { x, y, pair_gens } => {
                        vanishing_cycles_general(&rim_tori_module(d(*x)).0, &rim_tori_module(d(*y)).0, pair_gens)
                    }
                }
                .map_err(|e| pre(&g.name, e))?;
                (&g.name, group(&out))
            }
            Command::Deck => {
                let p = &sc.profiles[i];
                let d = &sc.divisors[p.divisor].1;
                let rep = deck_group(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let body = Body::Deck {
                    gcd: profile_gcd(&p.profile).to_string(),
                    r_h: GroupOut::from_group(&rep.r_h),
                    finite: GroupOut::from_form(&rep.finite_part),
                    free: GroupOut::from_form(&rep.free_part),
                    total: GroupOut::from_form(&rep.total),
                };
                (&p.name, body)
            }
            Command::Vanishing => {
                let p = &sc.profiles[i];
                let d = &sc.divisors[p.divisor].1;
                let threshold = vanishing_threshold(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let wc = wc_submodule(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let body = Body::Threshold {
                    dim_v: d.dim_v(),
                    contacts: p.profile.total_length(),
                    wc_free_rank: wc.submodule.canonical_form().free_rank,
                    threshold,
                };
                (&p.name, body)
            }
            Command::Invariance => {
                let p = &sc.profiles[i];
                let d = &sc.divisors[p.divisor].1;
                let v = invariance_verdict(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let body = Body::Verdict {
                    gcd: profile_gcd(&p.profile).to_string(),
                    lift_independent: v.lift_independent,
                    equals_standard_gw: v.equals_standard_gw,
                    reasons: v
                        .reasons
                        .iter()
                        .map(|c| ReasonOut {
                            name: c.name.clone(),
                            passed: c.passed,
                        })
                        .collect(),
                };
                (&p.name, body)
            }
            Command::FiniteGeneration => {
                let p = &sc.profiles[i];
                let d = &sc.divisors[p.divisor].1;
                let wc = wc_submodule(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let fg = homology_finitely_generated(d, &p.profile).map_err(|e| pre(&p.name, e))?;
                let body = Body::FiniteGeneration {
                    wc_span: GroupOut::from_form(&wc.submodule.canonical_form()),
                    wc_index: wc.submodule.index().to_string(),
                    finitely_generated: fg,
                };
                (&p.name, body)
            }
            Command::VerifySquare => {
                let (name, sq) = &sc.squares[i];
                let rep = sq.verify().map_err(|e| pre(name, e))?;
                let seq = |s: &rimtori_core::squares::SequenceReport| SequenceOut {
                    injective: s.injective,
                    exact_middle: s.exact_middle,
                    surjective: s.surjective,
                };
                let body = Body::Square {
                    exact: rep.exact(),
                    commutative: rep.commutative(),
                    rows: rep.rows.iter().map(seq).collect(),
                    cols: rep.cols.iter().map(seq).collect(),
                    cells: rep.cells.iter().map(|r| r.to_vec()).collect(),
                    failures: rep.failures(),
                };
                (name, body)
            }
            Command::TorusCover => {
                let c = &sc.cover_points[i];
                let fail = |e| pre(&c.name, e);
                let member = t_s_member(&c.s, &c.point.torus).map_err(fail)?;
                let (mut projection, mut deck_image, mut fixed) = (None, None, None);
                if member {
                    let base = cover_project(&c.s, &c.point).map_err(fail)?;
                    if let Some(g) = &c.deck {
                        let moved = deck_act(&c.s, g, &c.point).map_err(fail)?;
                        let after = cover_project(&c.s, &moved).map_err(fail)?;
                        fixed = Some(after == translate(&base, g).map_err(fail)?);
                        deck_image = Some(DisplacementOut {
                            z: complex(&moved.z),
                            torus: torus(&moved.torus),
                        });
                    }
                    projection = Some(torus(&base));
                }
                let shift = match &c.deck {
                    Some(g) => Some(disp(&deck_displacement(&c.s, g).map_err(fail)?)),
                    None => None,
                };
                let (mut lift_endpoint, mut lift_matches_deck) = (None, None);
                if let Some(g) = &c.lift {
                    let end = lift_linear_loop(&c.s, g).map_err(fail)?;
                    let deck = deck_displacement(&c.s, g).map_err(fail)?;
                    lift_matches_deck = Some(end.agrees_with(&deck));
                    lift_endpoint = Some(disp(&end));
                }
                let body = Body::Cover {
                    member,
                    projection,
                    deck_image,
                    deck_displacement: shift,
                    deck_projection_fixed: fixed,
                    lift_endpoint,
                    lift_matches_deck,
                };
                (&c.name, body)
            }
            Command::BasePoint => {
                let b = &sc.base_points[i];
                let fail = |e| pre(&b.name, e);
                let p = base_point(&b.s, &b.gamma).map_err(fail)?;
                let member = t_s_member(&b.s, &p.torus).map_err(fail)?;
                let origin = member && cover_project(&b.s, &p).map_err(fail)?.is_origin();
                let body = Body::BasePoint {
                    z: complex(&p.z),
                    torus: torus(&p.torus),
                    member,
                    projects_to_origin: origin,
                };
                (&b.name, body)
            }
        };
        results.push(Record {
            name: name.clone(),
            body,
        });
    }
    Ok(Report {
        command: cmd.as_str().to_string(),
        results,
    })
}
