//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. All arithmetic is exact, so every comparison below is an
//! equality; the only knobs are the seed and the sample sizes.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rimtori::{run, Body, Command, Scenario};
use rimtori_core::rimtori::{
    deck_group, h_s_submodule, invariance_verdict, phi_hom, profile_gcd, r_prime, rim_tori_module, self_glue,
    theta_action, vanishing_threshold, Component, ContactProfile, DivisorData,
};
use rimtori_core::smith::smith_normal_form;
use rimtori_core::squares::{resp1t2_square, ExactSquare};
use rimtori_core::torus::{
    base_point, cover_project, deck_act, deck_displacement, lift_linear_loop, t_s_member, translate, CRat, CoverPoint,
    LatticeVec, TorusPoint,
};
use rimtori_core::{CanonicalForm, FgAbGroup, IntMatrix, Subgroup};

const SEED: u64 = 0x005e_ed0f_7021;
const RANDOM_DIVISORS: usize = 200;
const RANDOM_MATRICES: usize = 1000;
const COVER_POINTS: usize = 1000;
const DECK_TUPLES_PER_GCD: usize = 12;
const THETA_BOX: i64 = 3;

type Check = fn() -> Result<String, String>;

fn main() {
    let criteria: [(u32, &str, Check); 9] = [
        (1, "elliptic surface rim tori module is Z^2", elliptic_surface),
        (2, "self gluing recovers H_1(V)_X", self_gluing),
        (3, "twisted identifications on P^1 x T^2", twisted_identifications),
        (4, "deck groups of torus covers and R' = gcd(s) R_H", deck_groups),
        (5, "built-in square and perturbation sweep", squares),
        (6, "vanishing threshold on T^(2n-2)", thresholds),
        (7, "invariance verdict table", verdicts),
        (8, "torus cover coherence", torus_covers),
        (9, "core algebra and the deck action", core_algebra),
    ];
    let mut failed = 0;
    for (n, what, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {n}: {what} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n}: {what}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn scenario(file: &str) -> Scenario {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(file);
    Scenario::load(&path).unwrap_or_else(|e| panic!("{file}: {e}"))
}

fn group_of(sc: &Scenario, cmd: Command, name: &str) -> CanonicalForm {
    let rep = run(cmd, sc, &[name.to_string()]).unwrap_or_else(|e| panic!("{name}: {e}"));
    match &rep.results[0].body {
        Body::Group { group } => CanonicalForm::parse(&group.canonical).unwrap(),
        other => panic!("unexpected body {other:?}"),
    }
}

fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data = (0..rows * cols)
        .map(|_| BigInt::from(r.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

/// A product of random elementary matrices.
fn random_unimodular(r: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if r.gen_bool(0.5) {
            m = m.neg();
        }
        return m;
    }
    for _ in 0..3 * n {
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(r.gen_range(-3i64..=3));
        m = e.mul(&m).unwrap();
    }
    m
}

// Determinantal divisors, computed without the Smith code path.

fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    // fraction free elimination
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// Canonical form of `Z^rows / span(cols a)`.
fn oracle(a: &IntMatrix) -> CanonicalForm {
    let mut prev = BigInt::one();
    let mut torsion = Vec::new();
    let mut rank = 0;
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        'outer: for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let m = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| a[(i, j)].clone()).collect())
                    .collect();
                g = g.gcd(&det(m));
                if g.is_one() {
                    break 'outer;
                }
            }
        }
        if g.is_zero() {
            break;
        }
        let f = &g / &prev;
        if !f.is_one() {
            torsion.push(f);
        }
        prev = g;
        rank = k;
    }
    CanonicalForm {
        free_rank: a.rows() - rank,
        torsion,
    }
}

fn elliptic_surface() -> Result<String, String> {
    let sc = scenario("elliptic_surface.toml");
    let got = group_of(&sc, Command::Compute, "fiber");
    ensure!(got == CanonicalForm::free(2), "compute gave {got}");
    let direct = rim_tori_module(&sc.divisors[0].1).0.canonical_form();
    ensure!(direct == got, "library gave {direct}");
    Ok(format!("{got}"))
}

fn random_divisor(r: &mut ChaCha8Rng) -> DivisorData {
    let count = r.gen_range(1..=3);
    let mut comps = Vec::new();
    let mut total = 0;
    for i in 0..count {
        let n = r.gen_range(1..=3);
        total += n;
        if r.gen_bool(0.3) {
            comps.push(Component::torus(format!("T{i}"), n));
        } else {
            let k = r.gen_range(0..=2);
            comps.push(Component::new(
                format!("V{i}"),
                FgAbGroup::new(random_matrix(r, n, k, 6)),
            ));
        }
    }
    let h = r.gen_range(0..=3);
    DivisorData::new(comps, random_matrix(r, total, h, 4), 2).unwrap()
}

fn self_gluing() -> Result<String, String> {
    let sc = scenario("elliptic_surface.toml");
    let got = group_of(&sc, Command::SelfGlue, "fiber");
    ensure!(got == CanonicalForm::free(2), "self-glue gave {got}");
    let mut r = rng(2);
    for i in 0..RANDOM_DIVISORS {
        let d = random_divisor(&mut r);
        let glued = self_glue(&d).canonical_form();
        let module = rim_tori_module(&d).0.canonical_form();
        let stacked = d.h1().relations().hcat(d.h_xv().generators()).unwrap();
        let want = oracle(&stacked);
        ensure!(
            glued == module && module == want,
            "divisor {i}: self_glue {glued}, module {module}, oracle {want}"
        );
    }
    Ok(format!("Z^2 and {RANDOM_DIVISORS} random divisors"))
}

fn twisted_identifications() -> Result<String, String> {
    let sc = scenario("twisted_p1t2.toml");
    let h = IntMatrix::from_rows(&[[1, 0], [0, 1], [1, 0], [0, 1]]);
    let cases: [(&str, [[i64; 2]; 2], CanonicalForm); 3] = [
        ("standard", [[1, 0], [0, 1]], CanonicalForm::free(2)),
        ("unipotent", [[1, 1], [0, 1]], CanonicalForm::free(1)),
        ("hyperbolic", [[2, 1], [1, 1]], CanonicalForm::free(0)),
    ];
    let mut seen = Vec::new();
    for (name, phi, want) in cases {
        let got = group_of(&sc, Command::Glue, name);
        ensure!(got == want, "{name}: got {got}, expected {want}");
        // Z^8 / ([I; block(I, phi)] + H + H)
        let ident = IntMatrix::block_diag(&[&IntMatrix::identity(2), &IntMatrix::from_rows(&phi)]);
        let stacked = IntMatrix::identity(4).vcat(&ident).unwrap();
        let full = stacked.hcat(&IntMatrix::block_diag(&[&h, &h])).unwrap();
        let o = oracle(&full);
        ensure!(o == got, "{name}: oracle {o}, tool {got}");
        seen.push(got.to_string());
    }
    Ok(seen.join(", "))
}

fn coprime_tuple(r: &mut ChaCha8Rng, g: i64) -> Vec<i64> {
    loop {
        let len = r.gen_range(1..=4);
        let k: Vec<i64> = (0..len)
            .map(|_| r.gen_range(1..=7) * if r.gen_bool(0.5) { 1 } else { -1 })
            .collect();
        if k.iter().fold(0i64, |a, &b| a.gcd(&b)) == 1 {
            return k.iter().map(|x| x * g).collect();
        }
    }
}

fn deck_groups() -> Result<String, String> {
    let mut r = rng(4);
    let t2 = DivisorData::new(vec![Component::torus("T", 2)], IntMatrix::zeros(2, 0), 2).unwrap();
    let mut tuples = 0;
    for g in [1i64, 2, 3, 6] {
        let want_finite = CanonicalForm {
            free_rank: 0,
            torsion: if g == 1 { vec![] } else { big(&[g, g]) },
        };
        for _ in 0..DECK_TUPLES_PER_GCD {
            let s = coprime_tuple(&mut r, g);
            let p = ContactProfile::single(&s).unwrap();
            let rep = deck_group(&t2, &p).map_err(|e| e.to_string())?;
            ensure!(rep.finite_part == want_finite, "s={s:?}: finite {}", rep.finite_part);
            ensure!(
                rep.free_part == CanonicalForm::free(2),
                "s={s:?}: free {}",
                rep.free_part
            );
            ensure!(
                rep.total == want_finite.sum(&CanonicalForm::free(2)),
                "s={s:?}: total {}",
                rep.total
            );
            tuples += 1;
        }
    }
    for i in 0..RANDOM_DIVISORS {
        let n = r.gen_range(1..=3);
        let (k, h) = (r.gen_range(0..=2), r.gen_range(0..=2));
        let d = DivisorData::connected(
            FgAbGroup::new(random_matrix(&mut r, n, k, 6)),
            random_matrix(&mut r, n, h, 4),
            2,
        )
        .unwrap();
        let g0 = r.gen_range(1..=4);
        let s = coprime_tuple(&mut r, g0);
        let p = ContactProfile::single(&s).unwrap();
        let (rh, _) = rim_tori_module(&d);
        let g = profile_gcd(&p);
        let expected = Subgroup::new(&rh, IntMatrix::scalar(n, &g)).unwrap();
        let got = r_prime(&d, &p).map_err(|e| e.to_string())?;
        ensure!(
            got == expected,
            "random connected divisor {i}, s={s:?}: R' differs from gcd(s) R_H"
        );
    }
    Ok(format!(
        "{tuples} tuples over g in 1,2,3,6; {RANDOM_DIVISORS} connected divisors"
    ))
}

/// Rebuild `sq` with one matrix entry moved by `delta`.
fn perturbed(sq: &ExactSquare, row: bool, a: usize, k: usize, entry: usize, delta: i64) -> ExactSquare {
    let mats = |maps: &[[rimtori_core::Homomorphism; 2]; 3]| -> [[IntMatrix; 2]; 3] {
        core::array::from_fn(|i| core::array::from_fn(|j| maps[i][j].matrix().clone()))
    };
    let (mut rm, mut cm) = (mats(&sq.row_maps), mats(&sq.col_maps));
    let m = if row { &mut rm[a][k] } else { &mut cm[a][k] };
    let mut data = m.entries().to_vec();
    data[entry] += delta;
    *m = IntMatrix::new(m.rows(), m.cols(), data).unwrap();
    ExactSquare::from_matrices(sq.nodes.clone(), rm, cm, sq.labels.clone()).unwrap()
}

fn squares() -> Result<String, String> {
    let sq = resp1t2_square();
    let rep = sq.verify().map_err(|e| e.to_string())?;
    for (kind, seqs) in [("row", &rep.rows), ("col", &rep.cols)] {
        for (i, s) in seqs.iter().enumerate() {
            ensure!(s.injective && s.exact_middle && s.surjective, "{kind} {i}: {s:?}");
        }
    }
    ensure!(rep.cells.iter().flatten().all(|&c| c), "cells {:?}", rep.cells);
    ensure!(rep.overall, "overall flag unset");

    let mut sweeps = 0;
    for row in [true, false] {
        for a in 0..3 {
            for k in 0..2 {
                let m = if row {
                    sq.row_maps[a][k].matrix()
                } else {
                    sq.col_maps[a][k].matrix()
                };
                // the only positions a change to this map may break
                let seq = format!("{} {a} ", if row { "row" } else { "col" });
                let cells: Vec<String> = if row {
                    [(a, k), (a.wrapping_sub(1), k)]
                        .iter()
                        .filter(|&&(i, _)| i < 2)
                        .map(|(i, j)| format!("cell ({i},{j})"))
                        .collect()
                } else {
                    [(k, a), (k, a.wrapping_sub(1))]
                        .iter()
                        .filter(|&&(_, j)| j < 2)
                        .map(|(i, j)| format!("cell ({i},{j})"))
                        .collect()
                };
                for e in 0..m.entries().len() {
                    for delta in [-1, 1] {
                        let p = perturbed(&sq, row, a, k, e, delta)
                            .verify()
                            .map_err(|e| e.to_string())?;
                        let f = p.failures();
                        let at = format!("{}[{a}][{k}] entry {e} by {delta}", if row { "row" } else { "col" });
                        ensure!(
                            p.overall == (p.exact() && p.commutative()),
                            "{at}: overall flag inconsistent"
                        );
                        ensure!(!p.overall && !f.is_empty(), "{at}: perturbation went unnoticed");
                        for x in &f {
                            ensure!(x.starts_with(&seq) || cells.contains(x), "{at}: failure at {x}");
                        }
                        sweeps += 1;
                    }
                }
            }
        }
    }
    let cli = run(Command::VerifySquare, &scenario("resp1t2.toml"), &["resp1t2".into()]).unwrap();
    ensure!(
        cli.text() == "resp1t2: exact: yes; commutative: yes\n",
        "cli: {}",
        cli.text()
    );
    Ok(format!("{sweeps} perturbations localized"))
}

fn thresholds() -> Result<String, String> {
    let mut r = rng(6);
    let mut cases = Vec::new();
    for n in [2u32, 3, 4] {
        let dim = 2 * n - 2;
        let d = DivisorData::new(
            vec![Component::torus("T", dim as usize)],
            IntMatrix::zeros(dim as usize, 0),
            dim,
        )
        .unwrap();
        for l in [1i64, 2, 3] {
            let s: Vec<i64> = (0..l).map(|_| r.gen_range(1..=5)).collect();
            let got = vanishing_threshold(&d, &ContactProfile::single(&s).unwrap()).map_err(|e| e.to_string())?;
            let want = i64::from(dim) * (l - 1);
            ensure!(got == want, "n={n}, l={l}: r* = {got}, expected {want}");
            cases.push(got.to_string());
        }
    }
    let cli = run(
        Command::Vanishing,
        &scenario("threshold_t4.toml"),
        &["three_contacts".into()],
    )
    .unwrap();
    ensure!(
        cli.text() == "three_contacts: threshold r* = 8\n",
        "cli: {}",
        cli.text()
    );
    Ok(format!("r* = {}", cases.join(", ")))
}

fn verdicts() -> Result<String, String> {
    let sc = scenario("invariance.toml");
    let rows = [
        ("coprime_rank_one", true, true),
        ("coprime_rank_two", true, false),
        ("even_rank_two", false, false),
    ];
    for (name, lift, equal) in rows {
        let p = sc.profiles.iter().find(|p| p.name == name).unwrap();
        let v = invariance_verdict(&sc.divisors[p.divisor].1, &p.profile).map_err(|e| e.to_string())?;
        ensure!(
            (v.lift_independent, v.equals_standard_gw) == (lift, equal),
            "{name}: got ({}, {}), expected ({lift}, {equal})",
            v.lift_independent,
            v.equals_standard_gw
        );
    }
    Ok("(true,true), (true,false), (false,false)".into())
}

fn random_crat(r: &mut ChaCha8Rng) -> CRat {
    CRat::from_fracs(
        r.gen_range(-20..=20),
        r.gen_range(1..=12),
        r.gen_range(-20..=20),
        r.gen_range(1..=12),
    )
}

fn random_lattice(r: &mut ChaCha8Rng) -> LatticeVec {
    [
        BigInt::from(r.gen_range(-5i64..=5)),
        BigInt::from(r.gen_range(-5i64..=5)),
    ]
}

fn torus_covers() -> Result<String, String> {
    let mut r = rng(8);
    let err = |e: rimtori_core::Error| e.to_string();
    for i in 0..COVER_POINTS {
        let l = r.gen_range(1..=3);
        let s: Vec<BigInt> = (0..l)
            .map(|_| BigInt::from(r.gen_range(1i64..=5) * if r.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        // solve the last coordinate from the constraint
        let mut zs: Vec<CRat> = (0..l - 1).map(|_| random_crat(&mut r)).collect();
        let partial = s.iter().zip(&zs).fold(CRat::zero(), |acc, (si, zi)| &acc + &(zi * si));
        zs.push(&(&CRat::from_lattice(&random_lattice(&mut r)) - &partial) / &s[l - 1]);
        let p = CoverPoint {
            z: random_crat(&mut r),
            torus: TorusPoint::new(zs),
        };
        ensure!(t_s_member(&s, &p.torus).map_err(err)?, "point {i} off the cover");
        let g: Vec<LatticeVec> = (0..l).map(|_| random_lattice(&mut r)).collect();
        let moved = deck_act(&s, &g, &p).map_err(err)?;
        ensure!(
            t_s_member(&s, &moved.torus).map_err(err)?,
            "point {i}: deck image left the cover"
        );
        let base = cover_project(&s, &p).map_err(err)?;
        let lhs = cover_project(&s, &moved).map_err(err)?;
        ensure!(
            lhs == translate(&base, &g).map_err(err)?,
            "point {i}: covering identity fails"
        );
        // Σ s_i γ_i = 0 moves nothing downstairs
        if l >= 2 {
            let k = random_lattice(&mut r);
            let mut h: Vec<LatticeVec> = vec![[BigInt::zero(), BigInt::zero()]; l];
            h[0] = [&s[1] * &k[0], &s[1] * &k[1]];
            h[1] = [-&s[0] * &k[0], -&s[0] * &k[1]];
            let fixed = cover_project(&s, &deck_act(&s, &h, &p).map_err(err)?).map_err(err)?;
            ensure!(fixed == base, "point {i}: kernel element moved the base");
        }
        let b = base_point(&s, &random_lattice(&mut r)).map_err(err)?;
        ensure!(
            cover_project(&s, &b).map_err(err)?.is_origin(),
            "point {i}: base point misses the origin"
        );
        let end = lift_linear_loop(&s, &g).map_err(err)?;
        ensure!(
            end.agrees_with(&deck_displacement(&s, &g).map_err(err)?),
            "point {i}: lift and deck displacement disagree"
        );
    }
    Ok(format!("{COVER_POINTS} points"))
}

fn snf_checks(r: &mut ChaCha8Rng) -> Result<(), String> {
    for i in 0..RANDOM_MATRICES {
        let (m, n) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let a = random_matrix(r, m, n, 20);
        let snf = smith_normal_form(&a);
        let uav = snf.u.mul(&a).unwrap().mul(&snf.v).unwrap();
        ensure!(uav == snf.d, "matrix {i}: U A V != D");
        ensure!(
            snf.u.mul(&snf.u_inv).unwrap() == IntMatrix::identity(m),
            "matrix {i}: U not inverted"
        );
        ensure!(
            snf.v.mul(&snf.v_inv).unwrap() == IntMatrix::identity(n),
            "matrix {i}: V not inverted"
        );
        for x in 0..m {
            for y in 0..n {
                ensure!(x == y || snf.d[(x, y)].is_zero(), "matrix {i}: D not diagonal");
            }
        }
        let diag = snf.diagonal();
        ensure!(
            diag.iter().all(|x| !x.is_negative()),
            "matrix {i}: negative invariant factor"
        );
        for w in diag.windows(2) {
            ensure!(
                (w[0].is_zero() && w[1].is_zero()) || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()),
                "matrix {i}: divisibility fails in {diag:?}"
            );
        }
        let c = FgAbGroup::new(a.clone()).canonical_form();
        let o = oracle(&a);
        ensure!(c == o, "matrix {i}: canonical {c}, oracle {o}");
        let p = random_unimodular(r, m);
        let q = random_unimodular(r, n);
        let b = p.mul(&a).unwrap().mul(&q).unwrap();
        let cb = FgAbGroup::new(b).canonical_form();
        ensure!(cb == c, "matrix {i}: presentation changed the group ({c} vs {cb})");
    }
    Ok(())
}

fn theta_checks() -> Result<usize, String> {
    let err = |e: rimtori_core::Error| e.to_string();
    let t2 = DivisorData::new(vec![Component::torus("T", 2)], IntMatrix::zeros(2, 0), 2).unwrap();
    let mut checked = 0;
    for s in [vec![2i64], vec![2, 4]] {
        let p = ContactProfile::single(&s).unwrap();
        let reps: Vec<Vec<BigInt>> = [[0, 0], [1, 0], [0, 1], [1, 1]].iter().map(|v| big(v)).collect();
        let hs = h_s_submodule(&t2, &p).map_err(err)?;
        let phi = phi_hom(&t2, &p).map_err(err)?;
        let range = -THETA_BOX..=THETA_BOX;
        let mut table = std::collections::BTreeMap::new();
        for a in -2 * THETA_BOX..=2 * THETA_BOX {
            for b in -2 * THETA_BOX..=2 * THETA_BOX {
                table.insert((a, b), theta_action(&t2, &p, &reps, &big(&[a, b])).map_err(err)?);
            }
        }
        for (j, t) in table[&(0, 0)].iter().enumerate() {
            ensure!(t.target == j, "s={s:?}: Θ_0 moves sheet {j}");
            ensure!(
                hs.contains_vector(&t.translation).map_err(err)?,
                "s={s:?}: Θ_0 translates sheet {j}"
            );
        }
        for a0 in range.clone() {
            for a1 in range.clone() {
                for b0 in range.clone() {
                    for b1 in range.clone() {
                        let (ta, tb, tab) = (&table[&(a0, a1)], &table[&(b0, b1)], &table[&(a0 + b0, a1 + b1)]);
                        for j in 0..reps.len() {
                            let k = ta[j].target;
                            ensure!(tab[j].target == tb[k].target, "s={s:?}: targets do not compose");
                            let diff: Vec<BigInt> = (0..tab[j].translation.len())
                                .map(|i| &tab[j].translation[i] - &ta[j].translation[i] - &tb[k].translation[i])
                                .collect();
                            ensure!(
                                hs.contains_vector(&diff).map_err(err)?,
                                "s={s:?}: translations not additive"
                            );
                            let img = phi.apply(&ta[j].translation).map_err(err)?;
                            let eta = big(&[a0, a1]);
                            let lhs: Vec<BigInt> =
                                (0..2).map(|i| &reps[j][i] + &eta[i] - &reps[k][i] - &img[i]).collect();
                            ensure!(lhs.iter().all(Zero::is_zero), "s={s:?}: witness equation fails");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn core_algebra() -> Result<String, String> {
    let mut r = rng(9);
    snf_checks(&mut r)?;
    let n = theta_checks()?;
    Ok(format!("{RANDOM_MATRICES} matrices, {n} deck action instances"))
}
