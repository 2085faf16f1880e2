//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs without the libtest harness so the summary lines are always shown.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symspace_core::catalog::{build, entry_info, enumerate_params, Params, SeriesEntry, ALL_IDS, STAR_IDS};
use symspace_core::charts::{grassmannian_dim, Chart, ChartSampler, ShapeCondition};
use symspace_core::involutions::groups::random_matrix;
use symspace_core::invariants::{charpoly, double_ratio, double_ratio_in_chart};
use symspace_core::spaces::{act, act_pair, all_labels, component_index, contains, label_representative};
use symspace_core::{Error, Matrix, Rational, Ring, Scalar, SpacePoint, Subspace};

const GOLDEN_CATALOG: &str = include_str!("../../../docs/catalog_list.txt");
const CROSS_RATIO_FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/cross_ratio.json");

type Outcome = Result<String, String>;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symspace"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail(e: Error) -> String {
    e.to_string()
}

/// Smallest and largest instance with `V` of dimension at most 4 over its ring.
fn sample_instances(id: usize) -> Vec<SeriesEntry> {
    let params = enumerate_params(id, 4).expect("registry id");
    let mut picked = vec![params[0]];
    if params.len() > 1 {
        picked.push(*params.last().expect("non-empty"));
    }
    picked.into_iter().map(|p| build(id, p).expect("enumerated params build")).collect()
}

fn describe(e: &SeriesEntry) -> String {
    format!("entry {} [{}]", e.id, e.params.render(e.info().schema))
}

/// A random point: `g·o` for `g ∈ G`, or a transverse `(g₁Q₁, g₂Q₂)` where
/// `G* = G × G`.
fn random_point(e: &SeriesEntry, rng: &mut ChaCha8Rng) -> Result<SpacePoint, Error> {
    let base = SpacePoint::base(e);
    if !matches!(e.list, 2 | 5) {
        return act(e, &e.g.cayley_sample(rng)?, &base);
    }
    for _ in 0..20 {
        let (g1, g2) = (e.g.cayley_sample(rng)?, e.g.cayley_sample(rng)?);
        let pt = act_pair(e, &g1, &g2, &base)?;
        if contains(e, &pt)? {
            return Ok(pt);
        }
    }
    Err(Error::SamplerExhausted)
}

fn criterion_1() -> Outcome {
    ensure(ALL_IDS.len() == 54, || format!("{} ids", ALL_IDS.len()))?;
    let stars: BTreeSet<usize> = ALL_IDS.iter().copied().filter(|&id| entry_info(id).unwrap().star).collect();
    let expected: BTreeSet<usize> = [3, 5, 14, 15, 20, 26, 30, 45, 49, 50].into_iter().collect();
    ensure(stars == expected, || format!("starred ids {stars:?}"))?;
    ensure(STAR_IDS.iter().copied().collect::<BTreeSet<_>>() == expected, || "STAR_IDS disagrees".into())?;
    let t = Instant::now();
    let out = bin().args(["catalog", "list"]).output().map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    ensure(text == GOLDEN_CATALOG, || "catalog list differs from docs/catalog_list.txt".into())?;
    let rows = text.lines().filter(|l| l.starts_with(' ') || l.chars().next().is_some_and(|c| c.is_ascii_digit())).count();
    let starred = text.lines().filter(|l| l.get(3..4) == Some("*")).count();
    ensure(rows == 54 && starred == 10, || format!("{rows} rows, {starred} starred"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("54 entries, 10 starred, golden file matches, {:.0} ms", elapsed.as_secs_f64() * 1e3))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let out = bin()
        .args(["verify", "all", "--max-dim", "6", "--trials", "20", "--seed", "7"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || {
        let failures: Vec<&str> = text.lines().filter(|l| l.contains("FAIL")).take(10).collect();
        format!("exit {:?}: {}", out.status.code(), failures.join(" | "))
    })?;
    let expected: usize = ALL_IDS.iter().map(|&id| enumerate_params(id, 6).unwrap().len()).sum();
    let passes = text.lines().filter(|l| l.ends_with(": PASS")).count();
    ensure(passes == expected, || format!("{passes} PASS lines for {expected} instances"))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{expected} instances pass in {:.1} s", elapsed.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for id in ALL_IDS {
        for p in enumerate_params(id, 6).unwrap() {
            let e = build(id, p).map_err(fail)?;
            let (g, h, s) = (e.g.lie_algebra_dim(), e.h.lie_algebra_dim(), grassmannian_dim(&e));
            ensure(g == h + s, || format!("{}: dim G = {g}, dim H = {h}, dim S = {s}", describe(&e)))?;
            count += 1;
        }
    }
    Ok(format!("dim G − dim H = dim S on {count} instances"))
}

/// Counts for criteria 4 and 5, or the first failure of criterion 4.
struct ChartTally {
    round_trips: usize,
    actions: usize,
    shapes: usize,
    shape_error: Option<String>,
}

fn chart_battery() -> Result<ChartTally, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut tally = ChartTally { round_trips: 0, actions: 0, shapes: 0, shape_error: None };
    let all = [ShapeCondition::Isotropy, ShapeCondition::Orthogonality, ShapeCondition::Exchange];
    for id in ALL_IDS {
        for e in sample_instances(id) {
            let at = |err: Error| format!("{}: {err}", describe(&e));
            let chart = Chart::base(&e);
            let sampler = ChartSampler::base(&e, 3);
            let mut done = 0;
            let mut attempts = 0;
            while done < 100 {
                attempts += 1;
                ensure(attempts <= 400, || format!("{}: only {done} points in the base chart", describe(&e)))?;
                let pt = if attempts % 2 == 0 {
                    sampler.point(&mut rng, 100).map_err(at)?.1
                } else {
                    random_point(&e, &mut rng).map_err(at)?
                };
                ensure(contains(&e, &pt).map_err(at)?, || format!("{}: sampled point is not a member", describe(&e)))?;
                let c = match chart.to_coords(&pt) {
                    Ok(c) => c,
                    Err(Error::NotTransverse) => continue,
                    Err(err) => return Err(at(err)),
                };
                ensure(chart.from_coords(&c).map_err(at)? == pt, || {
                    format!("{}: from_coords(to_coords(pt)) != pt", describe(&e))
                })?;
                match chart.check_shape(&e, &c) {
                    Ok(()) => tally.shapes += 1,
                    Err(err) => {
                        tally.shape_error.get_or_insert_with(|| at(err));
                    }
                }
                if e.list == 1 {
                    let kinds: Vec<ShapeCondition> = chart.residuals(&e, &c.m, &c.n).iter().map(|(k, _)| *k).collect();
                    if !all.iter().all(|k| kinds.contains(k)) {
                        tally.shape_error.get_or_insert_with(|| format!("{}: not every condition checked", describe(&e)));
                    }
                }
                done += 1;
            }
            tally.round_trips += done;

            let mut ok = 0;
            let mut attempts = 0;
            while ok < 50 {
                attempts += 1;
                ensure(attempts <= 500, || format!("{}: only {ok} action samples off the boundary", describe(&e)))?;
                let (c, pt) = sampler.point(&mut rng, 100).map_err(at)?;
                let g = e.g.cayley_sample(&mut rng).map_err(at)?;
                let moved = act(&e, &g, &pt).map_err(at)?;
                let (Ok(lhs), Ok(rhs)) = (chart.to_coords(&moved), chart.act_on_coords(&g, &c)) else {
                    continue;
                };
                ensure(lhs == rhs, || format!("{}: to_coords(g·pt) != g·coords", describe(&e)))?;
                ok += 1;
            }
            tally.actions += ok;
        }
    }
    Ok(tally)
}

fn criteria_4_5() -> (Outcome, Outcome) {
    match guarded_value(chart_battery) {
        Ok(t) => (
            Ok(format!("{} exact round trips, {} action commutations", t.round_trips, t.actions)),
            match t.shape_error {
                Some(err) => Err(err),
                None => Ok(format!("{} coordinate pairs satisfy their shape conditions", t.shapes)),
            },
        ),
        Err(err) => (Err(err), Err("no coordinates checked".into())),
    }
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut invariance = 0;
    for id in ALL_IDS {
        for e in sample_instances(id) {
            let chart = Chart::base(&e);
            let mut ok = 0;
            let mut attempts = 0;
            while ok < 30 {
                attempts += 1;
                ensure(attempts <= 300, || format!("{}: only {ok} transverse pairs", describe(&e)))?;
                let a = random_point(&e, &mut rng).map_err(fail)?;
                let b = random_point(&e, &mut rng).map_err(fail)?;
                let g = e.g.cayley_sample(&mut rng).map_err(fail)?;
                let before = match double_ratio(&e, &a, &b) {
                    Ok(d) => d,
                    Err(Error::NotTransverse) => continue,
                    Err(err) => return Err(format!("{}: {err}", describe(&e))),
                };
                let after = double_ratio(&e, &act(&e, &g, &a).unwrap(), &act(&e, &g, &b).unwrap())
                    .map_err(|err| format!("{}: {err} after the action", describe(&e)))?;
                ensure(before.charpoly == after.charpoly, || format!("{}: charpoly changed under G", describe(&e)))?;
                let (Ok(x), Ok(y)) = (chart.to_coords(&a), chart.to_coords(&b)) else {
                    continue;
                };
                let in_chart = double_ratio_in_chart(&x, &y).map_err(|err| format!("{}: {err}", describe(&e)))?;
                let poly = charpoly(&in_chart).map_err(fail)?;
                ensure(poly == before.charpoly, || format!("{}: chart formula disagrees", describe(&e)))?;
                ok += 1;
            }
            invariance += ok;
        }
    }

    let e = build(52, Params::pq(1, 1)).map_err(fail)?;
    let line = |x: &Rational| {
        let v = Matrix::column_vector(Ring::R, vec![Scalar::one(Ring::R), Scalar::from_rational(Ring::R, x.clone())]);
        Subspace::canonicalize(&v)
    };
    let mut quadruples = 0;
    while quadruples < 100 {
        let x: Vec<Rational> = (0..4)
            .map(|_| Rational::new(rng.gen_range(-20i64..=20).into(), rng.gen_range(1i64..=9).into()))
            .collect();
        let distinct = x.iter().collect::<BTreeSet<_>>().len() == 4;
        if !distinct {
            continue;
        }
        let a = SpacePoint::new(line(&x[0]), line(&x[1]));
        let b = SpacePoint::new(line(&x[2]), line(&x[3]));
        let dr = double_ratio(&e, &a, &b).map_err(fail)?;
        let cross = (&x[0] - &x[2]) * (&x[1] - &x[3]) / ((&x[0] - &x[3]) * (&x[1] - &x[2]));
        let expect = vec![Scalar::one(Ring::R), Scalar::from_rational(Ring::R, -cross)];
        ensure(dr.charpoly == expect, || format!("cross ratio mismatch at {x:?}"))?;
        quadruples += 1;
    }

    let out = bin()
        .args(["double-ratio", "52", "--p", "1", "--q", "1", "--input", CROSS_RATIO_FIXTURE])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success() && text.trim() == r#"[["1"],["-2/3"]]"#, || {
        format!("fixture gave exit {:?}, output {}", out.status.code(), text.trim())
    })?;
    Ok(format!("{invariance} invariant pairs agreeing with the chart formula, {quadruples} cross ratios, CLI fixture"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut stable = 0;
    let mut realized = 0;
    for &id in STAR_IDS {
        for p in enumerate_params(id, 4).unwrap() {
            let e = build(id, p).map_err(fail)?;
            let small = match e.list {
                1 => p.n <= 2,
                _ => p.p + p.q <= 2,
            };
            let labels = all_labels(&e).map_err(fail)?;
            for &label in &labels {
                let pt = label_representative(&e, label).map_err(fail)?;
                ensure(contains(&e, &pt).unwrap(), || format!("{}: representative of {label} is not a member", describe(&e)))?;
                ensure(component_index(&e, &pt).map_err(fail)? == label, || {
                    format!("{}: representative does not carry {label}", describe(&e))
                })?;
                if small {
                    realized += 1;
                }
                for _ in 0..20 {
                    let g = e.g.cayley_sample(&mut rng).map_err(fail)?;
                    let moved = act(&e, &g, &pt).map_err(fail)?;
                    ensure(component_index(&e, &moved).map_err(fail)? == label, || {
                        format!("{}: label {label} moved under G", describe(&e))
                    })?;
                    stable += 1;
                }
            }
        }
    }
    Ok(format!("{stable} labelled actions stable, {realized} labels realized at small size"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut isotropy, mut complement) = (0, 0);
    for id in ALL_IDS.into_iter().filter(|&id| entry_info(id).unwrap().list == 1) {
        let e = build(id, enumerate_params(id, 4).unwrap()[0]).map_err(fail)?;
        let (b, j, d) = (e.form_b.as_ref().unwrap(), e.semiinv.as_ref().unwrap(), e.managing.as_ref().unwrap());
        for t in 0..100 {
            let g = e.g_star.cayley_sample(&mut rng).map_err(fail)?;
            let half = if t % 2 == 0 { &e.base.0 } else { &e.base.1 };
            let p = half.image(&g);
            ensure(b.is_isotropic(&p), || format!("{}: g·Q is not isotropic", describe(&e)))?;
            ensure(j.apply_subspace(&p) == d.orthogonal_complement(&p), || {
                format!("{}: J·P is not the D-orthogonal of P", describe(&e))
            })?;
            complement += 1;
            let k = rng.gen_range(1..=p.dim());
            let u = Subspace::canonicalize(&(p.basis() * &random_matrix(&mut rng, e.ring, p.dim(), k, 2)));
            ensure(b.is_isotropic(&u) && b.is_isotropic(&j.apply_subspace(&u)), || {
                format!("{}: J does not preserve isotropy", describe(&e))
            })?;
            isotropy += 1;
        }
    }
    Ok(format!("{isotropy} isotropy trials, {complement} complement trials"))
}

fn guarded_value<T>(f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    })
}

fn main() -> ExitCode {
    let (c4, c5) = criteria_4_5();
    let results = [
        ("1 catalog", guarded_value(criterion_1)),
        ("2 full conformance", guarded_value(criterion_2)),
        ("3 dimension identity", guarded_value(criterion_3)),
        ("4 charts", c4),
        ("5 shape conditions", c5),
        ("6 double ratio", guarded_value(criterion_6)),
        ("7 components", guarded_value(criterion_7)),
        ("8 isotropy identities", guarded_value(criterion_8)),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {name}: PASS  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL  {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
