mod common;

use hcolor_core::catalog::{get, Named};
use hcolor_core::corpus::{connected_cubic, GraphFamily};
use hcolor_core::covers::{chromatic_index_cubic, EdgeColoring};
use hcolor_core::hcoloring::{solve_hcoloring, EdgeMap, SolverOptions};
use hcolor_core::normal::*;
use hcolor_core::{Error, MultiGraph};

/// Normal `k`-colorability by trying every proper coloring.
fn brute_force_normal(g: &MultiGraph, k: usize) -> bool {
    let m = g.edge_count();
    let mut colors = vec![0usize; m];
    loop {
        let c = EdgeColoring { k, colors: colors.clone() };
        if c.check_proper(g).is_ok() && NormalColoring::from_coloring(g, c).is_ok() {
            return true;
        }
        let mut i = 0;
        while i < m && colors[i] == k - 1 {
            colors[i] = 0;
            i += 1;
        }
        if i == m {
            return false;
        }
        colors[i] += 1;
    }
}

#[test]
fn k4_colorings_are_all_poor() {
    let k4 = get(Named::K4);
    let c = chromatic_index_cubic(&k4).coloring.unwrap();
    for e in 0..6 {
        assert_eq!(classify_edge(&k4, &c, e).unwrap(), EdgeClass::Poor);
    }
    let bad = EdgeColoring { k: 3, colors: vec![0; 6] };
    assert!(matches!(classify_edge(&k4, &bad, 0), Err(Error::NotProper(_))));
}

#[test]
fn normal_indices_of_catalog_graphs() {
    assert_eq!(normal_chromatic_index(&get(Named::K4)).unwrap().k(), 3);
    let p10 = normal_chromatic_index(&get(Named::P10)).unwrap();
    assert_eq!(p10.k(), 5);
    assert!(p10.rich_edges().next().is_some());
    assert!(solve_normal(&get(Named::P10), 4).is_none());
    assert!(normal_chromatic_index(&get(Named::S10)).is_none());
}

#[test]
fn search_agrees_with_brute_force_on_small_graphs() {
    for g in connected_cubic(2, 4, GraphFamily::Multi) {
        for k in 3..=5 {
            assert_eq!(solve_normal(&g, k).is_some(), brute_force_normal(&g, k), "{:?} k={k}", g.edges());
        }
    }
    let six = connected_cubic(6, 6, GraphFamily::Multi);
    for g in six {
        assert_eq!(solve_normal(&g, 3).is_some(), brute_force_normal(&g, 3));
        assert_eq!(solve_normal(&g, 4).is_some(), brute_force_normal(&g, 4));
    }
}

#[test]
fn four_colors_normal_iff_three_edge_colorable() {
    for g in connected_cubic(2, 10, GraphFamily::Multi) {
        assert_eq!(solve_normal(&g, 4).is_some(), chromatic_index_cubic(&g).index == 3);
    }
}

#[test]
fn jaeger_equivalence_on_small_bridgeless_graphs() {
    let opts = SolverOptions::default();
    for g in connected_cubic(2, 8, GraphFamily::Multi).into_iter().filter(|g| g.is_bridgeless()) {
        jaeger_check(&g, &opts).unwrap();
    }
    let s10 = jaeger_check(&get(Named::S10), &opts).unwrap();
    assert!(s10.normal.is_none() && s10.p10_coloring.is_none());
    let p10 = jaeger_check(&get(Named::P10), &opts).unwrap();
    assert_eq!(p10.normal.unwrap().k(), 5);
}

#[test]
fn normal_colorings_pull_back() {
    let p10 = get(Named::P10);
    let c = solve_normal(&p10, 5).unwrap();
    assert_eq!(induced_normal_coloring(&p10, &p10, &EdgeMap::identity(&p10), &c).unwrap(), c);
    let opts = SolverOptions::default();
    for g in [get(Named::P12), p10.expand_all().unwrap().graph] {
        let f = solve_hcoloring(&g, &p10, &opts).unwrap().unwrap();
        let pulled = induced_normal_coloring(&g, &p10, &f, &c).unwrap();
        pulled.verify(&g).unwrap();
        assert_eq!(pulled.k(), 5);
    }
}
