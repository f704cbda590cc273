//! One line per acceptance criterion, each with a pinned time limit.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use alv::classify::*;
use alv::cli::{run, ReportDocument};
use alv::dynkin::{construction_divisor, Component, DynkinType, Family, FixedProfile};
use alv::exact::{rat, rational_signature, IntMatrix, QuadExt, Rational};
use alv::lattice::{ade_lattice, SearchOptions};
use alv::lefschetz::*;
use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

const LIMIT_INDICES: Duration = Duration::from_secs(1);
const LIMIT_LEFSCHETZ: Duration = Duration::from_secs(1);
const LIMIT_LABELINGS: Duration = Duration::from_secs(1);
const LIMIT_INDEX2: Duration = Duration::from_secs(1);
const LIMIT_INDEX3: Duration = Duration::from_secs(5);
const LIMIT_INDEX6: Duration = Duration::from_secs(5);
const LIMIT_LATTICE: Duration = Duration::from_secs(30);
const LIMIT_BASIS: Duration = Duration::from_secs(60);
const LIMIT_CONFIG: Duration = Duration::from_secs(1);
const LIMIT_MAIN: Duration = Duration::from_secs(120);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(60);

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, why: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why.into())
    }
}

fn sorted(t: &DynkinType) -> Vec<Component> {
    let mut c = t.components.clone();
    c.sort();
    c
}

fn type_set<'a>(names: impl IntoIterator<Item = &'a str>) -> BTreeSet<Vec<Component>> {
    names.into_iter().map(|s| sorted(&s.parse().unwrap())).collect()
}

fn indices() -> Outcome {
    ensure(candidate_indices(2) == [2, 3, 4, 6], "candidate indices")?;
    ensure(indices_report().is_confirmed(), "indices report")
}

fn lefschetz() -> Outcome {
    let base = QuadExt::from_int(3) - QuadExt::sqrt_m3();
    ensure(local_term_p() == base.clone() * rat(1, 6), "a(P)")?;
    ensure(local_term_q() == base.clone() * rat(1, 12), "a(Q)")?;
    ensure(local_term_curve() == base.clone() * rat(-1, 2), "b(C)")?;
    let target = base * rat(1, 2);
    for c in 0..=10 {
        for l in 0..=10 {
            ensure(
                (holomorphic_lefschetz_order6(2 * l, 2 * l, c) == target) == (l == c + 1),
                format!("step one at c = {c}, l = {l}"),
            )?;
        }
    }
    let profiles = feasible_order6_profiles();
    ensure(profiles.len() == 10, format!("{} feasible profiles", profiles.len()))?;
    for p in profiles {
        let m = solve_multiplicities(p).map_err(|e| e.to_string())?;
        let (c, pp, q) = (p.c as i64, p.p as i64, p.q as i64);
        let want = [5 * c + 2 * pp + q + 6, -c + 2 * pp - q + 4, -c - pp + q + 3, -c - pp - q + 2];
        ensure([m.alpha, m.beta, m.gamma, m.delta] == want, format!("multiplicities at {p:?}"))?;
    }
    ensure(lefschetz_report().is_confirmed(), "lefschetz report")
}

/// Closed-form `(N, M)` per component, written out from the table.
fn table_row(c: Component, order: u32) -> Option<(usize, usize)> {
    let r = c.rank;
    match (order, c.family) {
        (2, Family::A) => (r % 2 == 1).then(|| (r.div_ceil(2), 0)),
        (3, Family::A) if r.is_multiple_of(3) => Some((r / 3, r / 3 + 1)),
        (3, Family::A) if r % 3 == 2 => Some(((r + 1) / 3, (r + 1) / 3)),
        (3, Family::A) => Some((r.div_ceil(3), r.div_ceil(3) - 1)),
        (3, Family::D) if r % 3 == 1 => Some(((r - 1) / 3, (r - 1) / 3 + 2)),
        (3, Family::D) if r.is_multiple_of(3) => Some((r / 3, r / 3 + 1)),
        _ => None,
    }
}

fn labelings() -> Outcome {
    for order in [2, 3] {
        let golden = std::fs::read_to_string(golden_path(&format!("labelings_order{order}.txt"))).map_err(|e| e.to_string())?;
        ensure(library_catalog(order) == golden, format!("order {order} catalog differs from golden file"))?;
        for c in catalog_components() {
            let got: Vec<FixedProfile> = component_profiles(c, order);
            let want: Vec<FixedProfile> =
                table_row(c, order).map(|(n, m)| FixedProfile { n_curves: n, n_isolated: m }).into_iter().collect();
            ensure(got == want, format!("{c} order {order}: {got:?} vs table {want:?}"))?;
        }
    }
    Ok(())
}

fn index2() -> Outcome {
    let r = classify_index2();
    ensure(r.is_confirmed(), "index-2 report")?;
    ensure(r.values["candidates"] == serde_json::json!(["A19"]), "survivor A19")?;
    ensure(component_profiles(Component::a(19), 2) == [FixedProfile { n_curves: 10, n_isolated: 0 }], "A19 has N = 10")?;
    ensure(r.transcript.iter().any(|s| s.passed && s.text == "N = 10 forces r = 1"), "r = 1 step")
}

fn index3() -> Outcome {
    let r = classify_index3();
    ensure(r.is_confirmed(), "index-3 report")?;
    let got: Vec<String> = serde_json::from_value(r.values["candidates"].clone()).map_err(|e| e.to_string())?;
    let mut want = vec!["D19".to_string()];
    for l in 1..=5 {
        let m = 6 - l;
        // D3 is A3, already on the A side
        if 3 * m >= 4 {
            want.push(format!("D{}+D{}", 3 * l + 1, 3 * m));
        }
        want.push(format!("D{}+A{}", 3 * l + 1, 3 * m));
    }
    ensure(got.len() == 10 && type_set(got.iter().map(String::as_str)) == type_set(want.iter().map(String::as_str)), format!("candidates {got:?}"))?;
    let all = all_candidates();
    ensure(all.len() == 11 && all.iter().any(|(t, i)| t.to_string() == "A19" && *i == 2), "A19 completes the 11 candidates")?;
    ensure(
        r.transcript.iter().any(|s| s.passed && s.text.starts_with("survivors have d = e = 0, a = 1")),
        "d = e = 0, a = 1",
    )
}

fn index6() -> Outcome {
    let r = exclude_index6();
    ensure(r.is_confirmed(), "index-6 report")?;
    ensure(
        r.values["tuples_meeting_rank_bound"] == serde_json::json!([{"n": 1, "p": 2, "m": 4, "c": 0, "q": 0}]),
        "unique boundary case",
    )?;
    let forced: Vec<String> = serde_json::from_value(r.values["forced_types"].clone()).map_err(|e| e.to_string())?;
    ensure(forced.len() == 1 && type_set([forced[0].as_str()]) == type_set(["A3+D4+D4+D4+D4"]), "forced A3 + 4 D4")?;
    ensure(r.transcript.iter().any(|s| s.passed && s.text.contains("N = 5 and M >= 14")), "(N, M) = (5, >= 14)")
}

fn lattice_exclusion() -> Outcome {
    let opts = SearchOptions { hsq_bound: 200, nikulin: true };
    for t in LATTICE_EXCLUDED {
        let r = exclude_by_lattice_with(&t.parse().unwrap(), &opts).map_err(|e| e.to_string())?;
        ensure(r.is_confirmed() && r.values["excluded"] == true, format!("{t} not excluded"))?;
        if t == "D10+A9" {
            let hit = r.transcript.iter().any(|s| s.text.contains("n = 20, H^2 = 30") && s.text.contains("mod 20"));
            ensure(hit, "D10+A9 transcript lacks the n = 20, H^2 = 30, mod 20 step")?;
        }
    }
    let r = exclude_by_lattice_with(&"D16+A3".parse().unwrap(), &opts).map_err(|e| e.to_string())?;
    ensure(!r.is_confirmed(), "D16+A3 must survive")
}

/// Gram of the `Pic` basis inside `delta + <H^2>`, computed here.
fn pic_gram(e: &ExtremalType) -> Result<Vec<Vec<Rational>>, String> {
    let delta = ade_lattice(&e.ty);
    let mut labels = delta.labels().to_vec();
    labels.push("H".into());
    let basis: Vec<Vec<Rational>> =
        e.pic_basis.iter().map(|s| parse_combination(s, &labels)).collect::<alv::Result<_>>().map_err(|x| x.to_string())?;
    let g = delta.rational_gram();
    let n = g.len();
    let pair = |x: &[Rational], y: &[Rational]| -> Rational {
        let mut s = &x[n] * &y[n] * rat(e.h_square as i64, 1);
        for i in 0..n {
            for j in 0..n {
                s += &x[i] * &y[j] * &g[i][j];
            }
        }
        s
    };
    Ok(basis.iter().map(|x| basis.iter().map(|y| pair(x, y)).collect()).collect())
}

fn basis() -> Outcome {
    let want = [("D16+A3", 12), ("D4+A15", 12), ("D7+D12", 12), ("D13+A6", 84), ("D7+A12", 156)];
    for (t, h) in want {
        let (e, r) = uniqueness_data(&t.parse().unwrap()).map_err(|x| x.to_string())?;
        ensure(r.is_confirmed(), format!("{t} report"))?;
        ensure(e.h_square == h, format!("{t}: H^2 = {}", e.h_square))?;
        ensure(r.values["orbits"] == 1, format!("{t}: {} orbits", r.values["orbits"]))?;
        let g = pic_gram(&e)?;
        ensure(g.len() == 20, format!("{t}: rank {}", g.len()))?;
        let even = g.iter().enumerate().all(|(i, row)| {
            row.iter().all(|x| x.is_integer()) && (row[i].to_integer() % BigInt::from(2)).is_zero()
        });
        ensure(even, format!("{t}: Gram not even"))?;
        let rows: Vec<Vec<BigInt>> = g.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        let det = IntMatrix::from_big_rows(rows, 20).det().map_err(|x| x.to_string())?;
        ensure(det.abs() == BigInt::from(3), format!("{t}: det {det}"))?;
        let s = rational_signature(&g).map_err(|x| x.to_string())?;
        ensure((s.pos, s.neg) == (1, 19), format!("{t}: signature ({}, {})", s.pos, s.neg))?;
    }
    Ok(())
}

fn configs() -> Outcome {
    let claimed = ["D19", "D16+A3", "D13+A6", "D7+A12", "D7+D12", "D4+A15", "A19"];
    for (i, t) in claimed.iter().enumerate() {
        let case = i + 1;
        let r = verify_construction(case).map_err(|e| e.to_string())?;
        ensure(r.is_confirmed(), format!("case {case}"))?;
        let ty = r.values["type"].as_str().unwrap_or_default();
        ensure(type_set([ty]) == type_set([*t]), format!("case {case}: {ty} vs {t}"))?;
        ensure(construction_divisor(case).map_err(|e| e.to_string())?.curves().len() == 19, "rank 19")?;
        ensure(
            r.transcript.iter().any(|s| s.passed && s.text.starts_with("all") && s.text.contains("fixed curves lie in the support")),
            format!("case {case}: fixed curves"),
        )?;
    }
    Ok(())
}

fn main_theorem_cli() -> Outcome {
    let (code, out, err) = run(["alv", "main-theorem", "--format", "json"]);
    ensure(code == 0, format!("exit {code}: {err}"))?;
    let doc: ReportDocument = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let records = doc.cases.last().and_then(|c| c.values.get("extremal_types")).and_then(|v| v.as_array()).cloned().unwrap_or_default();
    let got: BTreeSet<(Vec<Component>, u64)> = records
        .iter()
        .map(|r| (sorted(&r["type"].as_str().unwrap().parse().unwrap()), r["index"].as_u64().unwrap()))
        .collect();
    let want: BTreeSet<(Vec<Component>, u64)> = ["D19", "D16+A3", "D13+A6", "D7+A12", "D7+D12", "D4+A15", "A19"]
        .iter()
        .map(|t| (sorted(&t.parse().unwrap()), if *t == "A19" { 2 } else { 3 }))
        .collect();
    ensure(records.len() == 7 && got == want, format!("survivors {got:?}"))
}

fn properties() -> Outcome {
    run_arithmetic_suites(1000)?;
    overlattice_cross_check(6).map(|_| ())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("indices", indices, LIMIT_INDICES),
        ("lefschetz", lefschetz, LIMIT_LEFSCHETZ),
        ("labelings", labelings, LIMIT_LABELINGS),
        ("enumerate --index 2", index2, LIMIT_INDEX2),
        ("enumerate --index 3", index3, LIMIT_INDEX3),
        ("exclude --index 6", index6, LIMIT_INDEX6),
        ("lattice-exclude", lattice_exclusion, LIMIT_LATTICE),
        ("basis", basis, LIMIT_BASIS),
        ("verify-config", configs, LIMIT_CONFIG),
        ("main-theorem", main_theorem_cli, LIMIT_MAIN),
        ("property suites", properties, LIMIT_PROPERTIES),
    ];
    let mut failed = vec![];
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = f();
        let dt = t.elapsed();
        let res = res.and_then(|_| ensure(dt < *limit, format!("took {dt:.2?}, limit {limit:?}")));
        match &res {
            Ok(()) => println!("criterion {:>2} {name:<20} PASS  {dt:>10.2?} (limit {limit:?})", i + 1),
            Err(e) => {
                println!("criterion {:>2} {name:<20} FAIL  {dt:>10.2?} (limit {limit:?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
