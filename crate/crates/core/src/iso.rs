//! Isomorphism of small multigraphs by colour refinement and backtracking.
//!
//! Intended for graphs up to roughly 40 vertices. Parallel edges and loops are
//! respected through adjacency multiplicities.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::graph::MultiGraph;

/// Adjacency with multiplicities: `adj[v]` lists `(w, count)`, loops included.
fn adjacency(g: &MultiGraph) -> Vec<Vec<(usize, usize)>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut out: Vec<(usize, usize)> = Vec::new();
            for &e in g.star(v) {
                let w = g.other_end(e, v);
                match out.iter_mut().find(|(x, _)| *x == w) {
                    Some(slot) => slot.1 += 1,
                    None => out.push((w, 1)),
                }
            }
            out.sort_unstable();
            out
        })
        .collect()
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Stable vertex colours after `rounds` refinement steps. Colours are hashes,
/// so they are comparable across graphs.
fn refine(adj: &[Vec<(usize, usize)>], rounds: usize) -> Vec<u64> {
    let mut colour: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(v, nb)| {
            let loops = nb.iter().find(|(w, _)| *w == v).map_or(0, |x| x.1);
            let mut mult: Vec<usize> = nb.iter().filter(|(w, _)| *w != v).map(|x| x.1).collect();
            mult.sort_unstable();
            hash_of(&(loops, mult))
        })
        .collect();
    let mut classes = count_classes(&colour);
    for _ in 0..rounds {
        let next: Vec<u64> = adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut sig: Vec<(u64, usize)> = nb.iter().map(|&(w, m)| (colour[w], m)).collect();
                sig.sort_unstable();
                hash_of(&(colour[v], sig))
            })
            .collect();
        let c = count_classes(&next);
        colour = next;
        if c == classes {
            break;
        }
        classes = c;
    }
    colour
}

fn count_classes(c: &[u64]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// An isomorphism-invariant fingerprint; equal graphs give equal keys.
pub fn invariant(g: &MultiGraph) -> Vec<u64> {
    let adj = adjacency(g);
    let mut c = refine(&adj, g.vertex_count());
    c.sort_unstable();
    c.push(g.edge_count() as u64);
    c
}

pub fn is_isomorphic(g1: &MultiGraph, g2: &MultiGraph) -> bool {
    isomorphism(g1, g2).is_some()
}

/// A vertex bijection `g1 → g2` preserving all multiplicities, if one exists.
pub fn isomorphism(g1: &MultiGraph, g2: &MultiGraph) -> Option<Vec<usize>> {
    isomorphism_with(g1, g2, &[])
}

/// Like [`isomorphism`], with some vertex images fixed in advance.
pub fn isomorphism_with(g1: &MultiGraph, g2: &MultiGraph, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let n = g1.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let a1 = adjacency(g1);
    let a2 = adjacency(g2);
    let c1 = refine(&a1, n);
    let c2 = refine(&a2, n);
    let (mut s1, mut s2) = (c1.clone(), c2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    let mut search = IsoSearch {
        a1: &a1,
        a2: &a2,
        c1: &c1,
        c2: &c2,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        order: Vec::new(),
    };
    for &(u, v) in fixed {
        if u >= n || v >= n || c1[u] != c2[v] || search.used[v] || search.map[u] != usize::MAX {
            return None;
        }
        if !search.consistent(u, v) {
            return None;
        }
        search.map[u] = v;
        search.used[v] = true;
    }
    search.order = search.vertex_order();
    if search.extend(0) {
        Some(search.map)
    } else {
        None
    }
}

struct IsoSearch<'a> {
    a1: &'a [Vec<(usize, usize)>],
    a2: &'a [Vec<(usize, usize)>],
    c1: &'a [u64],
    c2: &'a [u64],
    map: Vec<usize>,
    used: Vec<bool>,
    order: Vec<usize>,
}

impl IsoSearch<'_> {
    /// Unmapped vertices in an order where each vertex after the first of its
    /// component touches an earlier one; rare colours start components.
    fn vertex_order(&self) -> Vec<usize> {
        let n = self.a1.len();
        let mut freq: HashMap<u64, usize> = HashMap::new();
        for &c in self.c1 {
            *freq.entry(c).or_default() += 1;
        }
        let mut placed: Vec<bool> = self.map.iter().map(|&m| m != usize::MAX).collect();
        let mut order = Vec::with_capacity(n);
        // grow from the pre-mapped vertices first
        let mut queue: Vec<usize> = (0..n).filter(|&v| placed[v]).collect();
        loop {
            let mut i = 0;
            while i < queue.len() {
                let v = queue[i];
                i += 1;
                for &(w, _) in &self.a1[v] {
                    if !placed[w] {
                        placed[w] = true;
                        order.push(w);
                        queue.push(w);
                    }
                }
            }
            let start = (0..n).filter(|&v| !placed[v]).min_by_key(|&v| (freq[&self.c1[v]], v));
            match start {
                Some(s) => {
                    placed[s] = true;
                    order.push(s);
                    queue = vec![s];
                }
                None => break,
            }
        }
        order
    }

    fn mult(adj: &[(usize, usize)], w: usize) -> usize {
        adj.iter().find(|(x, _)| *x == w).map_or(0, |x| x.1)
    }

    /// Mapping `u → v` agrees with every already-mapped vertex.
    fn consistent(&self, u: usize, v: usize) -> bool {
        if Self::mult(&self.a1[u], u) != Self::mult(&self.a2[v], v) {
            return false;
        }
        for &(w, m) in &self.a1[u] {
            if w != u && self.map[w] != usize::MAX && Self::mult(&self.a2[v], self.map[w]) != m {
                return false;
            }
        }
        // mapped neighbours of v must come from neighbours of u
        let mut mapped_u = self.a1[u].iter().filter(|&&(w, _)| w != u && self.map[w] != usize::MAX).count();
        for &(x, _) in &self.a2[v] {
            if x != v && self.used[x] {
                if mapped_u == 0 {
                    return false;
                }
                mapped_u -= 1;
            }
        }
        mapped_u == 0
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        // candidates: neighbours of an already-mapped neighbour's image
        let anchor = self.a1[u].iter().map(|&(w, _)| w).find(|&w| w != u && self.map[w] != usize::MAX);
        let cands: Vec<usize> = match anchor {
            Some(w) => self.a2[self.map[w]].iter().map(|&(x, _)| x).collect(),
            None => (0..self.a2.len()).collect(),
        };
        for v in cands {
            if self.used[v] || self.c1[u] != self.c2[v] || !self.consistent(u, v) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[u] = usize::MAX;
            self.used[v] = false;
        }
        false
    }
}

/// Lifts a vertex isomorphism to an edge bijection, pairing parallel edges in
/// index order.
pub fn edge_map_from_vertex_map(g1: &MultiGraph, g2: &MultiGraph, vmap: &[usize]) -> Vec<usize> {
    let mut taken = vec![false; g2.edge_count()];
    g1.edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (vmap[a], vmap[b]);
            let e = g2
                .star(x)
                .iter()
                .copied()
                .find(|&e| {
                    let (p, q) = g2.endpoints(e);
                    !taken[e] && ((p == x && q == y) || (p == y && q == x))
                })
                .expect("vertex map is an isomorphism");
            taken[e] = true;
            e
        })
        .collect()
}

/// One representative edge per edge orbit under the automorphism group.
pub fn edge_orbit_representatives(g: &MultiGraph) -> Vec<usize> {
    let m = g.edge_count();
    let mut orbit = vec![usize::MAX; m];
    let mut reps = Vec::new();
    for e in 0..m {
        if orbit[e] != usize::MAX {
            continue;
        }
        orbit[e] = e;
        reps.push(e);
        let (a, b) = g.endpoints(e);
        for f in (e + 1)..m {
            if orbit[f] != usize::MAX {
                continue;
            }
            let (c, d) = g.endpoints(f);
            if isomorphism_with(g, g, &[(a, c), (b, d)]).is_some()
                || isomorphism_with(g, g, &[(a, d), (b, c)]).is_some()
            {
                orbit[f] = e;
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{get, Named};

    fn permute(g: &MultiGraph, seed: u64) -> MultiGraph {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        g.relabel(&perm, None).unwrap()
    }

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        for name in Named::ALL {
            let g = get(name);
            for seed in 0..5 {
                let h = permute(&g, seed);
                let vmap = isomorphism(&g, &h).expect("relabelling");
                let emap = edge_map_from_vertex_map(&g, &h, &vmap);
                let mut sorted = emap.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (0..g.edge_count()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn distinct_catalog_graphs_are_not_isomorphic() {
        for a in Named::ALL {
            for b in Named::ALL {
                assert_eq!(is_isomorphic(&get(a), &get(b)), a == b, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn s10_expanded_at_centre_is_s12() {
        let x = get(Named::S10).expand_vertices_to_triangles(&[0]).unwrap();
        assert!(is_isomorphic(&x.graph, &get(Named::S12)));
    }

    #[test]
    fn petersen_is_edge_transitive() {
        assert_eq!(edge_orbit_representatives(&get(Named::P10)).len(), 1);
        assert_eq!(edge_orbit_representatives(&get(Named::K4)).len(), 1);
        assert_eq!(edge_orbit_representatives(&get(Named::Theta)).len(), 1);
        // bridges, central triangle, block sides, digon edges
        assert_eq!(edge_orbit_representatives(&get(Named::S12)).len(), 4);
    }
}
