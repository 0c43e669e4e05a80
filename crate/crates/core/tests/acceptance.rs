//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use hcolor_core::catalog::{get, p12_triangle, Named};
use hcolor_core::conjectures::{derive_s10_from_s12, rigidity_scan, solver_oracle, RigidityTarget, Route};
use hcolor_core::corpus::{connected_cubic, GraphFamily};
use hcolor_core::covers::*;
use hcolor_core::hcoloring::*;
use hcolor_core::invariants::{pullback_suite, CheckStatus, SuiteLimits};
use hcolor_core::iso::is_isomorphic;
use hcolor_core::normal::{jaeger_check, normal_chromatic_index};
use hcolor_core::MultiGraph;

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn opts() -> SolverOptions {
    SolverOptions::default()
}

fn catalog_structure() -> Result<String, String> {
    let p10 = get(Named::P10);
    ensure!((p10.vertex_count(), p10.edge_count()) == (10, 15), "P10 size");
    let pms = enumerate_perfect_matchings(&p10).len();
    ensure!(pms == 6 && brute_force_pms(&p10).len() == 6, "P10 has {pms} perfect matchings");
    let s10 = enumerate_perfect_matchings(&get(Named::S10)).len();
    ensure!(s10 == 0 && brute_force_pms(&get(Named::S10)).is_empty(), "S10 has {s10} perfect matchings");
    let s12 = enumerate_perfect_matchings(&get(Named::S12)).len();
    ensure!(s12 >= 1, "S12 has no perfect matching");
    let b12 = get(Named::S12).bridges().len();
    let b16 = get(Named::S16).bridges().len();
    ensure!(b12 == 3 && b16 == 3, "bridges S12={b12} S16={b16}");
    Ok(format!("P10 pm=6, S10 pm=0, S12 pm={s12}, bridges 3/3"))
}

fn edge_coloring_facts() -> Result<String, String> {
    let mut out = Vec::new();
    for (name, want) in [(Named::K4, 3), (Named::P10, 4), (Named::P12, 4), (Named::S12, 4)] {
        let g = get(name);
        let chi = chromatic_index_cubic(&g);
        ensure!(chi.index == want, "chi'({name}) = {}", chi.index);
        // 3-edge-colorable exactly when THETA colors it
        ensure!(brute_force_hcoloring(&g, &get(Named::Theta)) == (want == 3), "oracle disagrees on {name}");
        if let Some(c) = &chi.coloring {
            c.check_proper(&g).map_err(|e| e.to_string())?;
        }
        out.push(format!("{name}={want}"));
    }
    Ok(out.join(" "))
}

fn cover_numbers() -> Result<String, String> {
    for (name, want) in [(Named::K4, 3), (Named::P10, 5), (Named::P12, 4)] {
        let g = get(name);
        let c = pm_cover_number(&g, 6).ok_or(format!("{name} has no cover"))?;
        c.verify(&g).map_err(|e| e.to_string())?;
        ensure!(c.parts.len() == want, "k({name}) = {}", c.parts.len());
        let oracle = brute_force_cover_number(&g, &brute_force_pms(&g));
        ensure!(oracle == Some(want), "oracle gives {oracle:?} for {name}");
    }
    let p10 = get(Named::P10);
    let bf = find_berge_fulkerson(&p10).ok_or("no Berge-Fulkerson cover of P10")?;
    bf.verify(&p10).map_err(|e| e.to_string())?;
    Ok("k(K4)=3 k(P10)=5 k(P12)=4, P10 Berge-Fulkerson found".into())
}

fn hcoloring_milestones() -> Result<String, String> {
    let (p12, p10) = (get(Named::P12), get(Named::P10));
    let f = solve_hcoloring(&p12, &p10, &opts()).map_err(|e| e.to_string())?.ok_or("no P10-coloring of P12")?;
    verify_hcoloring(&p12, &p10, &f).map_err(|e| e.to_string())?;
    let suite = pullback_suite(&p12, &p10, &f, &SuiteLimits::default()).map_err(|e| e.to_string())?;
    for name in [
        "matching-preimage",
        "perfect-matching-preimage",
        "berge-fulkerson-pullback",
        "even-preimage",
        "bridge-image",
        "normal-pullback",
    ] {
        ensure!(suite.status(name) == Some(&CheckStatus::Passed), "{name}: {:?}", suite.status(name));
    }
    ensure!(suite.passed(), "suite failed: {suite:?}");
    let theta = solve_hcoloring(&p10, &get(Named::Theta), &opts()).map_err(|e| e.to_string())?;
    ensure!(theta.is_none(), "P10 admits a THETA-coloring");
    for name in Named::ALL {
        let g = get(name);
        verify_hcoloring(&g, &g, &EdgeMap::identity(&g)).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("P12 -> P10 found, pullback suite passes, P10 -> THETA none, identities verify".into())
}

fn rigidity() -> Result<String, String> {
    let corpus = connected_cubic(2, 10, GraphFamily::Multi);
    let s10 = rigidity_scan(RigidityTarget::S10, &corpus, 0, &opts());
    ensure!(s10.budget_exhausted.is_empty() && s10.skipped.is_empty(), "S10 scan incomplete");
    ensure!(s10.positives.len() == 1, "S10 positives {:?}", s10.positives);
    ensure!(is_isomorphic(&corpus[s10.positives[0]], &get(Named::S10)), "S10 positive is not S10");
    let p10 = rigidity_scan(RigidityTarget::P10, &corpus, 0, &opts());
    let bridgeless = corpus.iter().filter(|g| g.is_bridgeless()).count();
    ensure!(p10.budget_exhausted.is_empty(), "P10 scan hit budgets");
    ensure!(corpus.len() - p10.skipped.len() == bridgeless, "P10 scan did not cover the bridgeless corpus");
    ensure!(p10.positives.len() == 1, "P10 positives {:?}", p10.positives);
    ensure!(is_isomorphic(&corpus[p10.positives[0]], &get(Named::P10)), "P10 positive is not P10");
    Ok(format!("{} graphs, {bridgeless} bridgeless; positives {{S10}} and {{P10}}", corpus.len()))
}

fn normal_colorings() -> Result<String, String> {
    for (name, want) in [(Named::K4, 3), (Named::P10, 5)] {
        let g = get(name);
        let c = normal_chromatic_index(&g).ok_or(format!("{name} has no normal coloring"))?;
        c.verify(&g).map_err(|e| e.to_string())?;
        ensure!(c.k() == want, "chi'_N({name}) = {}", c.k());
    }
    ensure!(normal_chromatic_index(&get(Named::S10)).is_none(), "S10 has a normal coloring");
    let corpus: Vec<MultiGraph> =
        connected_cubic(2, 10, GraphFamily::Multi).into_iter().filter(|g| g.is_bridgeless()).collect();
    for g in &corpus {
        let r = jaeger_check(g, &opts()).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        ensure!(r.normal.is_some(), "bridgeless graph with no normal 5-coloring");
    }
    Ok(format!("chi'_N(K4)=3 chi'_N(P10)=5 S10 none up to 7; Jaeger on {} graphs", corpus.len()))
}

fn even_parity_equivalence() -> Result<String, String> {
    let corpus = connected_cubic(2, 12, GraphFamily::Multi);
    let mut found = 0;
    for g in &corpus {
        let r = cq_equivalence_check(g).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        ensure!(r.even.is_some() == r.parity.is_some(), "disagreement");
        if let (Some(e), Some(p)) = (&r.even, &r.parity) {
            e.verify(g).map_err(|x| x.to_string())?;
            p.verify(g).map_err(|x| x.to_string())?;
            found += 1;
        }
    }
    Ok(format!("{} graphs agree ({found} with both covers)", corpus.len()))
}

/// Contracts the expanded triangles of `x` one by one, carrying the cover.
fn descend_all(x: &hcolor_core::graph::Expansion, cover: CoverList) -> Result<(MultiGraph, CoverList), String> {
    let mut g = x.graph.clone();
    let mut cover = cover;
    let mut tris: Vec<[usize; 3]> = x.triangles.iter().map(|t| t.triangle_edges).collect();
    while let Some(edges) = tris.pop() {
        let t = g.triangle(edges).map_err(|e| e.to_string())?;
        let (c, down) = descend_even_cover_through_triangle(&g, &t, &cover).map_err(|e| e.to_string())?;
        down.verify(&c.graph).map_err(|e| e.to_string())?;
        for t in &mut tris {
            for e in t.iter_mut() {
                *e = c.edges.get(*e).ok_or("triangle edge vanished")?;
            }
        }
        g = c.graph;
        cover = down;
    }
    Ok((g, cover))
}

fn triangle_constructions() -> Result<String, String> {
    for name in [Named::K4, Named::P10] {
        let h = get(name);
        let joins = find_parity_cover_4(&h).ok_or(format!("{name} has no 4-join cover"))?;
        let lift = lift_join_cover_to_triangle_expansion(&h, &joins).map_err(|e| e.to_string())?;
        lift.cover.verify(&lift.expansion.graph).map_err(|e| e.to_string())?;
        ensure!(lift.cover.kind == CoverKind::PmCover && lift.cover.parts.len() == 4, "lift is not 4 perfect matchings");
        let full = h.expand_all().map_err(|e| e.to_string())?;
        ensure!(lift.expansion.graph == full.graph, "lift is not on the full expansion");

        let even = find_even_cover_5_2(&full.graph).ok_or(format!("expansion of {name} has no (5,2)-even cover"))?;
        let (base, cover) = descend_all(&full, even)?;
        ensure!(is_isomorphic(&base, &h), "descent did not return to {name}");
        cover.verify(&base).map_err(|e| e.to_string())?;
        ensure!(cover.kind == CoverKind::Even52, "descended cover changed kind");
    }
    Ok("K4 and P10: 4-join covers lift, (5,2)-even covers descend to the base".into())
}

fn fictive_pipeline() -> Result<String, String> {
    let k4 = get(Named::K4);
    let c = construct_fictive_triangle(&k4, None).map_err(|e| e.to_string())?;
    ensure!(c.graph.vertex_count() == 36, "{} vertices", c.graph.vertex_count());
    verify_hcoloring(&c.graph, &get(Named::P12), &c.coloring).map_err(|e| e.to_string())?;
    ensure!(unused_edges(&c.coloring).to_vec() == p12_triangle().edges.to_vec(), "unused edges differ from T");
    let chi = chromatic_index_cubic(&c.graph);
    ensure!(chi.index == 4, "chi' = {}", chi.index);

    let p10 = get(Named::P10);
    let colors = chromatic_index_cubic(&k4).coloring.ok_or("K4 not 3-edge-colorable")?.colors;
    let star = p10.star(0);
    let f = EdgeMap::new(colors.iter().map(|&k| star[k]).collect(), p10.edge_count());
    verify_hcoloring(&k4, &p10, &f).map_err(|e| e.to_string())?;
    let e = unused_edges(&f).iter().next().ok_or("no unused edge")?;
    let three = three_coloring_from_deficient_p10_coloring(&k4, &f, e).map_err(|e| e.to_string())?;
    three.check_proper(&k4).map_err(|e| e.to_string())?;
    ensure!(three.k == 3, "not a 3-coloring");
    Ok("36-vertex graph, unused edges = T, chi'=4; K4 star collapse gives a 3-edge-coloring".into())
}

fn s10_pipeline() -> Result<String, String> {
    let s10 = get(Named::S10);
    let d = derive_s10_from_s12(&s10, &mut solver_oracle(opts())).map_err(|e| e.to_string())?;
    ensure!(d.route == Route::Expanded(vec![0]), "S10 route {:?}", d.route);
    verify_hcoloring(&s10, &s10, &d.map).map_err(|e| e.to_string())?;
    let no_pm: Vec<MultiGraph> =
        connected_cubic(2, 10, GraphFamily::Multi).into_iter().filter(|g| brute_force_pms(g).is_empty()).collect();
    for g in &no_pm {
        let d = derive_s10_from_s12(g, &mut solver_oracle(opts())).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        verify_hcoloring(g, &s10, &d.map).map_err(|e| e.to_string())?;
    }
    Ok(format!("S10 via its 12-vertex expansion; {} graphs without perfect matchings", no_pm.len()))
}

fn solver_vs_oracle() -> Result<String, String> {
    let mut mini = connected_cubic(2, 6, GraphFamily::Multi);
    mini.extend([get(Named::P10), get(Named::S10), get(Named::P12), get(Named::S12)]);
    let mut pairs = 0;
    let mut found = 0;
    for g in mini.iter().filter(|g| g.edge_count() <= 9) {
        for h in &mini {
            let fast = solve_hcoloring(g, h, &opts()).map_err(|e| e.to_string())?;
            if let Some(f) = &fast {
                verify_hcoloring(g, h, f).map_err(|e| e.to_string())?;
                found += 1;
            }
            ensure!(fast.is_some() == brute_force_hcoloring(g, h), "disagreement on {:?} -> {:?}", g.edges(), h.edges());
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs agree ({found} colorable)"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 11] = [
        ("catalog structure", catalog_structure, Duration::from_secs(1)),
        ("edge-coloring facts", edge_coloring_facts, Duration::from_secs(1)),
        ("cover numbers", cover_numbers, Duration::from_secs(10)),
        ("H-coloring milestones", hcoloring_milestones, Duration::from_secs(30)),
        ("rigidity at desk scale", rigidity, Duration::from_secs(30 * 60)),
        ("normal colorings", normal_colorings, Duration::from_secs(5 * 60)),
        ("even/parity cover equivalence", even_parity_equivalence, Duration::from_secs(30 * 60)),
        ("triangle cover constructions", triangle_constructions, Duration::from_secs(60)),
        ("fictive-edge pipeline", fictive_pipeline, Duration::from_secs(2 * 60)),
        ("S10 derivation pipeline", s10_pipeline, Duration::from_secs(30 * 60)),
        ("solver vs brute-force oracle", solver_vs_oracle, Duration::from_secs(5 * 60)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > limit => Err(format!("took {took:.2?}, limit {limit:?}")),
            r => r,
        };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

