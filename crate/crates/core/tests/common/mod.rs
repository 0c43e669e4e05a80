#![allow(dead_code)]

use hcolor_core::catalog::{get, Named};
use hcolor_core::{EdgeSubset, MultiGraph};

pub fn k4() -> MultiGraph {
    get(Named::K4)
}

/// Every `k`-subset of `0..n`, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Perfect matchings by testing every edge subset of size `n/2`.
pub fn brute_force_pms(g: &MultiGraph) -> Vec<EdgeSubset> {
    k_subsets(g.edge_count(), g.vertex_count() / 2)
        .into_iter()
        .map(|s| EdgeSubset::from_edges(g, s))
        .filter(|s| (0..g.vertex_count()).all(|v| s.degree_in(g, v) == 1))
        .collect()
}

/// Proper 3-edge-colorability by trying all `3^m` assignments.
pub fn brute_force_three_colorable(g: &MultiGraph) -> bool {
    let m = g.edge_count();
    let mut colors = vec![0u8; m];
    loop {
        let ok = (0..g.vertex_count()).all(|v| {
            let s = g.star(v);
            s.len() == 3 && colors[s[0]] != colors[s[1]] && colors[s[0]] != colors[s[2]] && colors[s[1]] != colors[s[2]]
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < m && colors[i] == 2 {
            colors[i] = 0;
            i += 1;
        }
        if i == m {
            return false;
        }
        colors[i] += 1;
    }
}

/// Least number of the given perfect matchings covering every edge, by
/// checking all subsets.
pub fn brute_force_cover_number(g: &MultiGraph, pms: &[EdgeSubset]) -> Option<usize> {
    (1..=pms.len()).find(|&k| {
        k_subsets(pms.len(), k).iter().any(|s| {
            let mut u = EdgeSubset::empty(g.edge_count());
            for &i in s {
                u.union_with(&pms[i]);
            }
            u.len() == g.edge_count()
        })
    })
}

/// Loopless connected cubic multigraphs on 2 and 4 vertices plus a few
/// hand-picked larger ones.
pub fn small_graphs() -> Vec<(&'static str, MultiGraph)> {
    let mut v = vec![
        ("theta", get(Named::Theta)),
        ("k4", get(Named::K4)),
        // two digons joined by a double edge path
        ("4-digons", MultiGraph::graph(4, vec![(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]).unwrap()),
        ("4-cycle-doubled", MultiGraph::graph(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap()),
        ("k33", MultiGraph::graph(6, vec![(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()),
        ("prism", MultiGraph::graph(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()),
    ];
    for n in [Named::P10, Named::S10, Named::S12, Named::P12, Named::S16] {
        v.push((n.as_str(), get(n)));
    }
    v
}

/// Whether `g` admits an `h`-coloring, by trying every assignment of target
/// edges to source edges in index order and rejecting a branch as soon as
/// some vertex has its whole star assigned to a non-star.
pub fn brute_force_hcoloring(g: &MultiGraph, h: &MultiGraph) -> bool {
    let mut h_stars: Vec<Vec<usize>> = (0..h.vertex_count()).map(|y| h.star(y).to_vec()).collect();
    for s in &mut h_stars {
        s.sort_unstable();
    }
    // vertices whose star is complete once edge i is assigned
    let mut closes: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for x in 0..g.vertex_count() {
        let last = *g.star(x).iter().max().unwrap();
        closes[last].push(x);
    }
    fn rec(
        i: usize,
        g: &MultiGraph,
        h: &MultiGraph,
        stars: &[Vec<usize>],
        closes: &[Vec<usize>],
        f: &mut Vec<usize>,
    ) -> bool {
        if i == g.edge_count() {
            return true;
        }
        for t in 0..h.edge_count() {
            f[i] = t;
            let ok = closes[i].iter().all(|&x| {
                let mut img: Vec<usize> = g.star(x).iter().map(|&e| f[e]).collect();
                img.sort_unstable();
                stars.contains(&img)
            });
            if ok && rec(i + 1, g, h, stars, closes, f) {
                return true;
            }
        }
        false
    }
    rec(0, g, h, &h_stars, &closes, &mut vec![0; g.edge_count()])
}
