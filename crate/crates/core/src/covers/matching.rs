use crate::covers::{CoverKind, CoverList};
use crate::graph::{EdgeSubset, MultiGraph};

/// All perfect matchings, each exactly once. The search always extends at
/// the lowest uncovered vertex; loops never take part.
pub fn enumerate_perfect_matchings(g: &MultiGraph) -> Vec<EdgeSubset> {
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 1 {
        return out;
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut chosen = Vec::with_capacity(g.vertex_count() / 2);
    pm_extend(g, &mut covered, &mut chosen, &mut out);
    out
}

fn pm_extend(g: &MultiGraph, covered: &mut [bool], chosen: &mut Vec<usize>, out: &mut Vec<EdgeSubset>) {
    let Some(v) = covered.iter().position(|&c| !c) else {
        out.push(EdgeSubset::from_edges(g, chosen.iter().copied()));
        return;
    };
    for &e in g.star(v) {
        if g.is_loop(e) {
            continue;
        }
        let w = g.other_end(e, v);
        if covered[w] {
            continue;
        }
        covered[v] = true;
        covered[w] = true;
        chosen.push(e);
        pm_extend(g, covered, chosen, out);
        chosen.pop();
        covered[v] = false;
        covered[w] = false;
    }
}

/// All matchings including the empty one, or `None` if there are more than
/// `limit`.
pub fn enumerate_matchings(g: &MultiGraph, limit: usize) -> Option<Vec<EdgeSubset>> {
    let mut out = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    if matching_extend(g, 0, &mut used, &mut chosen, &mut out, limit) {
        Some(out)
    } else {
        None
    }
}

fn matching_extend(
    g: &MultiGraph,
    e: usize,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<EdgeSubset>,
    limit: usize,
) -> bool {
    if e == g.edge_count() {
        if out.len() == limit {
            return false;
        }
        out.push(EdgeSubset::from_edges(g, chosen.iter().copied()));
        return true;
    }
    if !matching_extend(g, e + 1, used, chosen, out, limit) {
        return false;
    }
    let (a, b) = g.endpoints(e);
    if a != b && !used[a] && !used[b] {
        used[a] = true;
        used[b] = true;
        chosen.push(e);
        let ok = matching_extend(g, e + 1, used, chosen, out, limit);
        chosen.pop();
        used[a] = false;
        used[b] = false;
        return ok;
    }
    true
}

/// The least number `k ≤ k_max` of perfect matchings whose union is every
/// edge, with a witness. `None` when no such cover exists, in particular when
/// some edge lies in no perfect matching.
pub fn pm_cover_number(g: &MultiGraph, k_max: usize) -> Option<CoverList> {
    let pms = enumerate_perfect_matchings(g);
    let m = g.edge_count();
    let mut reachable = EdgeSubset::empty(m);
    for p in &pms {
        reachable.union_with(p);
    }
    if reachable.len() != m {
        return None;
    }
    let per_pm = g.vertex_count() / 2;
    for k in 1..=k_max {
        let mut chosen = Vec::with_capacity(k);
        if cover_dfs(&pms, &EdgeSubset::empty(m), k, per_pm, &mut chosen) {
            let parts = chosen.into_iter().map(|i| pms[i].clone()).collect();
            return Some(CoverList::new(CoverKind::PmCover, parts));
        }
    }
    None
}

fn cover_dfs(pms: &[EdgeSubset], covered: &EdgeSubset, left: usize, per_pm: usize, chosen: &mut Vec<usize>) -> bool {
    let uncovered = covered.universe() - covered.len();
    if uncovered == 0 {
        return true;
    }
    if uncovered > left * per_pm {
        return false;
    }
    let e = (0..covered.universe()).find(|&e| !covered.contains(e)).expect("some edge is uncovered");
    let mut cands: Vec<(usize, usize)> = pms
        .iter()
        .enumerate()
        .filter(|(_, p)| p.contains(e))
        .map(|(i, p)| (p.iter().filter(|&f| !covered.contains(f)).count(), i))
        .collect();
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, i) in cands {
        let mut next = covered.clone();
        next.union_with(&pms[i]);
        chosen.push(i);
        if cover_dfs(pms, &next, left - 1, per_pm, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Six perfect matchings, repetition allowed, covering each edge exactly twice.
pub fn find_berge_fulkerson(g: &MultiGraph) -> Option<CoverList> {
    let pms = enumerate_perfect_matchings(g);
    if pms.is_empty() {
        return None;
    }
    let mut count = vec![0u8; g.edge_count()];
    let mut chosen = Vec::with_capacity(6);
    if bf_dfs(g, &pms, &mut count, &mut chosen) {
        let parts = chosen.into_iter().map(|i| pms[i].clone()).collect();
        Some(CoverList::new(CoverKind::BergeFulkerson, parts))
    } else {
        None
    }
}

fn bf_dfs(g: &MultiGraph, pms: &[EdgeSubset], count: &mut [u8], chosen: &mut Vec<usize>) -> bool {
    let left = 6 - chosen.len();
    let missing: usize = count.iter().map(|&c| 2 - c as usize).sum();
    if missing == 0 {
        return left == 0;
    }
    if missing != left * (g.vertex_count() / 2) {
        return false;
    }
    let fits = |p: &EdgeSubset| p.iter().all(|f| count[f] < 2);
    // branch on the deficient edge with the fewest fitting matchings
    let mut best: Option<(usize, Vec<usize>)> = None;
    for e in (0..count.len()).filter(|&e| count[e] < 2) {
        let cands: Vec<usize> = (0..pms.len()).filter(|&i| pms[i].contains(e) && fits(&pms[i])).collect();
        if cands.len() < best.as_ref().map_or(usize::MAX, |b| b.1.len()) {
            let empty = cands.is_empty();
            best = Some((e, cands));
            if empty {
                break;
            }
        }
    }
    let (_, cands) = best.expect("a deficient edge exists");
    for i in cands {
        for f in pms[i].iter() {
            count[f] += 1;
        }
        chosen.push(i);
        if bf_dfs(g, pms, count, chosen) {
            return true;
        }
        chosen.pop();
        for f in pms[i].iter() {
            count[f] -= 1;
        }
    }
    false
}

/// Some perfect matching, found by the same search as the enumeration.
pub fn first_perfect_matching(g: &MultiGraph) -> Option<EdgeSubset> {
    if g.vertex_count() % 2 == 1 {
        return None;
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut chosen = Vec::with_capacity(g.vertex_count() / 2);
    first_pm(g, &mut covered, &mut chosen).then(|| EdgeSubset::from_edges(g, chosen))
}

fn first_pm(g: &MultiGraph, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(v) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for &e in g.star(v) {
        let w = g.other_end(e, v);
        if g.is_loop(e) || covered[w] {
            continue;
        }
        covered[v] = true;
        covered[w] = true;
        chosen.push(e);
        if first_pm(g, covered, chosen) {
            return true;
        }
        chosen.pop();
        covered[v] = false;
        covered[w] = false;
    }
    false
}
