//! Acceptance suite: one PASS/FAIL line per criterion.

use std::sync::Arc;
use std::time::{Duration, Instant};

use eigenone::e1::{
    check_characters, check_triple, is_witness, solve_intertwiner, CharacterVerdict, GroupVerdict,
    Method, Mode, Options, Status,
};
use eigenone::exact::{has_algebraic_eigenvalue, Matrix, RadicalReal};
use eigenone::groups::find_isomorphism;
use eigenone::reps::{build_irreducible_rep, verify_rep, MatrixRep};
use eigenone::{Automorphism, CharacterTable, CycloElement, Perm, PermGroup, RealCyclo};
use eigenone_cli::bounds::g2_rows;
use eigenone_cli::presets::PRESET_NAMES;
use eigenone_cli::report::{CharFilter, E1Args};
use eigenone_cli::verify::pair_context;
use eigenone_cli::{parse_group_spec, run_e1};
use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BOUND: usize = 50_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e(x: impl std::fmt::Display) -> String {
    x.to_string()
}

fn group(spec: &str) -> Arc<PermGroup> {
    Arc::new(parse_group_spec(spec, BOUND).unwrap())
}

fn args(spec: &str) -> E1Args {
    E1Args {
        cache_dir: None,
        ..E1Args::new(spec)
    }
}

fn options(mode: Mode) -> Options {
    Options {
        mode,
        pairs_even_ok: true,
        aut_bound: 1024,
        ..Options::default()
    }
}

/// Smallest singular value test for `theta` being an eigenvalue of `m`.
fn float_eigenvalue(m: &DMatrix<f64>, theta: f64) -> bool {
    let d = m.nrows();
    (m - DMatrix::identity(d, d) * theta)
        .singular_values()
        .min()
        < 1e-9
}

fn to_float(m: &Matrix<RealCyclo>) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_f64())
}

/// A verdict produced while running criteria 1-4, kept for the float cross-check.
struct Recorded {
    table: CharacterTable,
    verdict: GroupVerdict,
}

#[derive(Default)]
struct Corpus {
    recorded: Vec<Recorded>,
    groups: Vec<Arc<PermGroup>>,
}

fn criterion1(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let mut a = args("ES32+");
    a.pairs_even_ok = true;
    a.chars = Some(CharFilter::Degree(4));
    let report = run_e1(&a).map_err(e)?;
    let elapsed = start.elapsed();
    ensure(
        report.overall == Status::Fails,
        "ES32+ degree 4 did not fail",
    )?;
    let g = group("ES32+");
    let table = CharacterTable::compute(g.clone()).map_err(e)?;
    let c = &report.characters[0];
    let ctx = pair_context(&table, c.index, 0).map_err(e)?;
    let mut violators = 0;
    for t in c.nu_classes.iter().filter(|t| t.status == Status::Fails) {
        let v = t.violator.as_ref().ok_or("failing task without violator")?;
        ensure(
            v.scanned == 32,
            format!("violator scanned {} elements", v.scanned),
        )?;
        let nu: Vec<&str> = t.nu.iter().map(|s| s.as_str()).collect();
        let it = ctx.intertwiner(&nu, 0).map_err(e)?;
        let target = it.target(t.sign).to_f64();
        for x in 0..g.order() {
            let m = ctx.rep.image(ctx.projection[x]).mul(&it.m).map_err(e)?;
            ensure(
                !float_eigenvalue(&to_float(&m), target),
                "rescan found an eigenvalue",
            )?;
            ensure(
                !is_witness(&ctx.rep, &it, t.sign, ctx.projection[x]).map_err(e)?,
                "exact rescan hit",
            )?;
        }
        violators += 1;
    }
    ensure(violators > 0, "no violating (nu, sign)")?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    corpus.recorded.push(Recorded {
        table,
        verdict: eigenone::e1::assemble(report.order, report.structural, report.characters),
    });
    Ok(format!("{violators} violating (nu, sign) pairs, each rescanned over all 32 elements, {elapsed:.1?}"))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let c2 = group("C2");
    let trivial = MatrixRep::from_generators(c2.clone(), vec![Matrix::identity(1)]).map_err(e)?;
    let table = CharacterTable::compute(c2.clone()).map_err(e)?;
    let it = solve_intertwiner(
        &trivial,
        &Automorphism::identity(&c2),
        table.character(0),
        0,
    )
    .map_err(e)?;
    ensure(
        check_triple(&trivial, &it, 1).map_err(e)?.holds(),
        "n = 1 should have a witness",
    )?;
    let minus = check_triple(&trivial, &it, -1).map_err(e)?;
    ensure(
        !minus.holds() && minus.scanned == 2,
        "n = -1 should violate",
    )?;
    for n in 1..=4 {
        let r = run_e1(&args(&format!("C2^{n}"))).map_err(e)?;
        ensure(r.overall == Status::Holds, format!("C2^{n} does not hold"))?;
    }
    let r = run_e1(&args("C3^3")).map_err(e)?;
    ensure(
        r.overall == Status::Holds && r.characters.is_empty(),
        "3^3 is not vacuous",
    )?;
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(10),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "trivial module violated by n = -1; C2^1..4 hold; 3^3 vacuous; {elapsed:.1?}"
    ))
}

fn criterion3(corpus: &mut Corpus) -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for spec in ["A5", "PSL2(7)"] {
        let g = group(spec);
        let table = CharacterTable::compute(g.clone()).map_err(e)?;
        let chars = table.odd_real_nontrivial().map_err(e)?;
        let v = check_characters(&table, &chars, &options(Mode::Validate), None).map_err(e)?;
        ensure(v.overall == Status::Holds, format!("{spec} does not hold"))?;
        for t in v.characters.iter().flat_map(|c| &c.nu_classes) {
            let val = t.validation.as_ref().ok_or("missing validation")?;
            ensure(
                val.direct == Status::Holds,
                format!("{spec}: direct scan did not hold"),
            )?;
            if spec == "A5" {
                ensure(
                    val.certificates.contains(&Method::Cor4),
                    "A5 task without Cor4",
                )?;
            }
        }
        let degrees: Vec<usize> = v.characters.iter().map(|c| c.degree).collect();
        if spec == "A5" {
            ensure(degrees == [3, 3, 5], format!("A5 degrees {degrees:?}"))?;
        }
        notes.push(format!("{spec} degrees {degrees:?}"));
        corpus.recorded.push(Recorded { table, verdict: v });
        corpus.groups.push(g);
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(600),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{}; Cor4 on every A5 task; {elapsed:.1?}",
        notes.join(", ")
    ))
}

fn signature(g: &PermGroup) -> (usize, usize, Vec<usize>) {
    let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    (g.order(), g.class_count(), orders)
}

/// Groups of order at most 48, one per isomorphism class.
fn small_groups() -> Vec<(String, Arc<PermGroup>)> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((1..=48).map(|n| format!("C{n}")));
    specs.extend((2..=24).map(|n| format!("D{}", 2 * n)));
    specs.extend(
        [
            "S3", "S4", "A4", "Q8", "ES32+", "ES32-", "SL2(3)", "PGL2(3)", "C2^2", "C2^3", "C2^4",
            "C3^2", "C2xC4", "C2xC6", "C2xS3", "C3xS3", "S3xS3", "C2xA4", "C2xS4", "C2xQ8",
            "C2xD8", "C4^2", "C3xQ8", "C3xA4", "C4xS3", "C2xC2xS3",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    let mut candidates: Vec<(String, Arc<PermGroup>)> =
        specs.iter().map(|s| (s.clone(), group(s))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..400 {
        let mut gens = Vec::new();
        for _ in 0..2 {
            let mut v: Vec<u32> = (0..6).collect();
            v.shuffle(&mut rng);
            gens.push(Perm::from_images(v).unwrap());
        }
        let name = gens
            .iter()
            .map(|p| p.to_cycle_string())
            .collect::<Vec<_>>()
            .join("; ");
        let g = PermGroup::generate(6, gens).unwrap();
        if g.order() <= 48 {
            candidates.push((name, Arc::new(g)));
        }
        // bias towards small subgroups: also try a power of a random element paired with another
        if rng.gen_bool(0.5) {
            let a = Perm::from_images({
                let mut v: Vec<u32> = (0..6).collect();
                v.shuffle(&mut rng);
                v
            })
            .unwrap();
            let b = a.pow(rng.gen_range(2..4));
            let c = Perm::from_images({
                let mut v: Vec<u32> = (0..6).collect();
                v[..4].shuffle(&mut rng);
                v
            })
            .unwrap();
            let name = format!("{}; {}", b.to_cycle_string(), c.to_cycle_string());
            let g = PermGroup::generate(6, vec![b, c]).unwrap();
            if g.order() <= 48 {
                candidates.push((name, Arc::new(g)));
            }
        }
    }
    let mut out: Vec<(String, Arc<PermGroup>)> = Vec::new();
    for (name, g) in candidates {
        let sig = signature(&g);
        let dup = out
            .iter()
            .any(|(_, h)| signature(h) == sig && find_isomorphism(&g, h).is_some());
        if !dup {
            out.push((name, g));
        }
    }
    out
}

/// Compare fast and validate verdicts task by task. A fast structural task
/// (sign 0) stands for every task of its character.
fn compare(fast: &CharacterVerdict, slow: &CharacterVerdict) -> Result<usize, String> {
    if fast.nu_classes.len() == 1 && fast.nu_classes[0].sign == 0 {
        let st = fast.nu_classes[0].status;
        for t in &slow.nu_classes {
            ensure(
                t.status == st,
                format!(
                    "chi#{}: structural {st:?} vs direct {:?}",
                    slow.index, t.status
                ),
            )?;
        }
        return Ok(slow.nu_classes.len());
    }
    ensure(
        fast.nu_classes.len() == slow.nu_classes.len(),
        "task count differs",
    )?;
    for (a, b) in fast.nu_classes.iter().zip(&slow.nu_classes) {
        ensure(a.nu == b.nu && a.sign == b.sign, "task keys differ")?;
        ensure(
            a.status == b.status,
            format!(
                "chi#{} nu {:?} sign {}: {:?} vs {:?}",
                slow.index, a.nu, a.sign, a.status, b.status
            ),
        )?;
    }
    Ok(slow.nu_classes.len())
}

fn criterion4_5(corpus: &mut Corpus) -> (Outcome, Outcome) {
    let start = Instant::now();
    let groups = small_groups();
    let mut tasks = 0;
    let mut certs = std::collections::BTreeMap::<&'static str, usize>::new();
    let mut solvable = 0;
    let mut c4: Result<(), String> =
        ensure(groups.len() >= 40, format!("only {} groups", groups.len()));
    let mut c5: Result<(), String> = Ok(());
    for (name, g) in &groups {
        let table = match CharacterTable::compute(g.clone()) {
            Ok(t) => t,
            Err(err) => {
                c4 = c4.and(Err(format!("{name}: {err}")));
                continue;
            }
        };
        let chars = match eigenone::e1::default_characters(&table, true) {
            Ok(c) => c,
            Err(err) => {
                c4 = c4.and(Err(format!("{name}: {err}")));
                continue;
            }
        };
        let fast = check_characters(&table, &chars, &options(Mode::Fast), None);
        let slow = check_characters(&table, &chars, &options(Mode::Validate), None);
        let (fast, slow) = match (fast, slow) {
            (Ok(f), Ok(s)) => (f, s),
            (f, s) => {
                c4 = c4.and(Err(format!("{name}: {:?} {:?}", f.err(), s.err())));
                continue;
            }
        };
        for (a, b) in fast.characters.iter().zip(&slow.characters) {
            match compare(a, b) {
                Ok(n) => tasks += n,
                Err(m) => c4 = c4.and(Err(format!("{name}: {m}"))),
            }
        }
        for t in slow.characters.iter().flat_map(|c| &c.nu_classes) {
            let val = t.validation.as_ref().unwrap();
            for m in &val.certificates {
                *certs.entry(m.as_str()).or_default() += 1;
            }
            if !val.certificates.is_empty() && val.direct != Status::Holds || !val.agree {
                c5 = c5.and(Err(format!(
                    "{name}: certificates {:?} vs direct {:?}",
                    val.certificates, val.direct
                )));
            }
        }
        if g.is_solvable() && chars.iter().any(|&c| table.degree(c) % 2 == 1) {
            solvable += 1;
            let cert = fast.structural.as_ref().map(|c| c.method);
            if cert != Some(Method::SolvableCor3) {
                c5 = c5.and(Err(format!("{name}: solvable without SolvableCor3")));
            }
            let odd_direct = slow
                .characters
                .iter()
                .filter(|c| c.degree % 2 == 1)
                .flat_map(|c| &c.nu_classes)
                .all(|t| t.validation.as_ref().unwrap().direct == Status::Holds);
            if !odd_direct {
                c5 = c5.and(Err(format!(
                    "{name}: SolvableCor3 but a direct scan failed"
                )));
            }
        }
        corpus.recorded.push(Recorded {
            table,
            verdict: slow,
        });
        corpus.groups.push(g.clone());
    }
    // named solvable groups outside the size-48 sweep are covered by it already
    for spec in ["S4", "D8", "Q8", "SL2(3)"] {
        let g = group(spec);
        let t = CharacterTable::compute(g).unwrap();
        let v = check_characters(
            &t,
            &t.odd_real_nontrivial().unwrap(),
            &options(Mode::Fast),
            None,
        )
        .unwrap();
        if !v.characters.is_empty()
            && v.structural.as_ref().map(|c| c.method) != Some(Method::SolvableCor3)
        {
            c5 = c5.and(Err(format!("{spec}: no SolvableCor3")));
        }
    }
    let elapsed = start.elapsed();
    let summary: Vec<String> = certs.iter().map(|(k, v)| format!("{k} {v}")).collect();
    (
        c4.map(|_| format!("{} groups of order <= 48, {tasks} tasks, zero discrepancies, {elapsed:.1?}", groups.len())),
        c5.map(|_| format!("certificates [{}] all agree with Direct; {solvable} solvable groups got SolvableCor3", summary.join(", "))),
    )
}

fn criterion6() -> Outcome {
    let rows = g2_rows(&[1]).map_err(e)?;
    let d = &rows[0].details;
    let order: u64 = 3u64.pow(6) * (3u64.pow(2) - 1) * (3u64.pow(6) - 1);
    ensure(order == 4_245_696, "independent order")?;
    ensure(
        d["group_order"].as_str() == Some(&*order.to_string()),
        format!("group order {}", d["group_order"]),
    )?;
    ensure(d["dim"] == "729", "dim V")?;
    let side = |k: &str, v: u64| d[k].as_str() == Some(&*v.to_string());
    ensure(side("lhs", 3u64.pow(12)) && side("rhs", 3u64.pow(7)), "sides")?;
    ensure(rows[0].passes && 3u64.pow(12) > 3u64.pow(7), "comparison")?;
    Ok(format!(
        "|G| = {order}, dim V = 729, 3^12 = {} > 3^7 = {}",
        d["lhs"], d["rhs"]
    )
    .replace('"', ""))
}

fn column_orthogonality(t: &CharacterTable) -> bool {
    let g = t.group();
    let k = t.len();
    for a in 0..k {
        for b in 0..k {
            let mut s = CycloElement::zero();
            for chi in t.irr() {
                s = s.add(&chi[a].mul(&chi[b].conj()));
            }
            let expected = if a == b {
                CycloElement::from_int(
                    g.centralizer_order_idx(g.conjugacy_classes()[a].representative) as i64,
                )
            } else {
                CycloElement::zero()
            };
            if s != expected {
                return false;
            }
        }
    }
    true
}

fn criterion7(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut tables = 0;
    let mut reps = 0;
    let mut all: Vec<Arc<PermGroup>> = PRESET_NAMES.iter().map(|s| group(s)).collect();
    all.extend(corpus.groups.iter().cloned());
    for g in &all {
        let t = CharacterTable::compute(g.clone()).map_err(e)?;
        t.verify().map_err(e)?;
        let sum: usize = t.degrees().iter().map(|d| d * d).sum();
        ensure(sum == g.order(), "sum of squared degrees")?;
        ensure(
            column_orthogonality(&t),
            format!("column orthogonality for order {}", g.order()),
        )?;
        tables += 1;
        if g.order() > 200 {
            continue;
        }
        for chi in 1..t.len() {
            if t.fs_indicator(chi) != 1 {
                continue;
            }
            let rep = build_irreducible_rep(&t, chi, 1).map_err(e)?;
            let cert = verify_rep(&rep, &t, chi, 1);
            ensure(
                cert.is_valid(),
                format!("rep check failed: {:?}", cert.failure),
            )?;
            reps += 1;
        }
    }
    Ok(format!(
        "{tables} tables exactly orthogonal, {reps} representations verified, {:.1?}",
        start.elapsed()
    ))
}

fn criterion8(corpus: &Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let d = rng.gen_range(2..=6);
        let m: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let base = rng.gen_range(1..=9i64);
        let theta = RadicalReal::new(
            RealCyclo::from_int(base),
            rng.gen_range(1..=3),
            if rng.gen() { 1 } else { -1 },
        )
        .map_err(e)?;
        let exact =
            has_algebraic_eigenvalue(&Matrix::from_ints(&m).map_err(e)?, &theta).map_err(e)?;
        let fm = DMatrix::from_fn(d, d, |i, j| m[i][j] as f64);
        ensure(
            exact == float_eigenvalue(&fm, theta.to_f64()),
            format!("disagreement on {m:?}, {theta:?}"),
        )?;
    }
    let mut checked = 0usize;
    for r in &corpus.recorded {
        for c in &r.verdict.characters {
            let tasks: Vec<_> = c.nu_classes.iter().filter(|t| !t.nu.is_empty()).collect();
            if tasks.is_empty() {
                continue;
            }
            let ctx = pair_context(&r.table, c.index, 0).map_err(e)?;
            let order = ctx.table.group().order();
            for t in tasks {
                let nu: Vec<&str> = t.nu.iter().map(|s| s.as_str()).collect();
                let it = ctx.intertwiner(&nu, 0).map_err(e)?;
                let target = it.target(t.sign).to_f64();
                for x in 0..order {
                    let m = ctx.rep.image(x).mul(&it.m).map_err(e)?;
                    let exact = is_witness(&ctx.rep, &it, t.sign, x).map_err(e)?;
                    if exact != float_eigenvalue(&to_float(&m), target) {
                        let f = to_float(&m);
                        let d = f.nrows();
                        let sv = (&f - DMatrix::identity(d, d) * target).singular_values();
                        return Err(format!(
                            "rho(g)m disagreement: order {order}, degree {}, sign {}, k {}, lambda {}, exact {exact}, singular values {sv:?}, m {:?}",
                            c.degree, t.sign, it.k, it.lambda, to_float(&it.m)
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "1000 random matrices and {checked} rho(g)m products agree"
    ))
}

fn criterion9() -> Outcome {
    let suite = |jobs: usize| -> Result<Vec<String>, String> {
        let mut out = Vec::new();
        for (spec, mode, even) in [
            ("ES32+", Mode::Fast, true),
            ("A5", Mode::Validate, false),
            ("S4", Mode::Validate, true),
            ("D12", Mode::Validate, true),
            ("C2^3", Mode::Fast, false),
        ] {
            let mut a = args(spec);
            a.mode = mode;
            a.pairs_even_ok = even;
            a.seed = 7;
            a.jobs = jobs;
            out.push(serde_json::to_string(&run_e1(&a).map_err(e)?).map_err(e)?);
        }
        Ok(out)
    };
    let first = suite(1)?;
    ensure(first == suite(1)?, "repeated run differs")?;
    ensure(first == suite(4)?, "parallel run differs")?;
    let bytes: usize = first.iter().map(|s| s.len()).sum();
    Ok(format!(
        "{} reports ({bytes} bytes) identical across runs and thread counts",
        first.len()
    ))
}

fn main() {
    // `cargo test` passes harness flags; a name filter that excludes us means skip.
    let filters: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    if !filters.is_empty() && !filters.iter().any(|f| "acceptance".contains(f.as_str())) {
        return;
    }
    let mut corpus = Corpus::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    let run = |n: u32, name: &'static str, r: Outcome, results: &mut Vec<(u32, &str, Outcome)>| {
        let line = match &r {
            Ok(m) => format!("criterion {n} [PASS] {name}: {m}"),
            Err(m) => format!("criterion {n} [FAIL] {name}: {m}"),
        };
        println!("{line}");
        results.push((n, name, r));
    };
    run(
        1,
        "extraspecial counterexample",
        criterion1(&mut corpus),
        &mut results,
    );
    run(
        2,
        "trivial module and elementary abelian groups",
        criterion2(),
        &mut results,
    );
    run(
        3,
        "small simple groups",
        criterion3(&mut corpus),
        &mut results,
    );
    let (c4, c5) = criterion4_5(&mut corpus);
    run(
        4,
        "fast equals validate on groups of order <= 48",
        c4,
        &mut results,
    );
    run(5, "certificate soundness", c5, &mut results);
    run(6, "G2(3) degree bound", criterion6(), &mut results);
    run(
        7,
        "character tables and representations",
        criterion7(&corpus),
        &mut results,
    );
    run(
        8,
        "exact versus floating point eigenvalues",
        criterion8(&corpus),
        &mut results,
    );
    run(9, "determinism", criterion9(), &mut results);
    let failed = results.iter().filter(|r| r.2.is_err()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
