//! Cubic multigraphs with positional edge identity.
//!
//! Every edge is addressed by its index in the edge list, so parallel edges are
//! distinct objects. Subsets, maps and covers elsewhere in the crate speak edge
//! indices only.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cubic graph or pseudo-graph. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    pseudo: bool,
    stars: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Validates and builds a cubic multigraph. A loop contributes two to the
    /// degree of its vertex and is only accepted when `allow_loops` is set.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, allow_loops: bool) -> Result<Self> {
        let mut degree = vec![0usize; n];
        let mut stars = vec![Vec::with_capacity(3); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::BadIndex { index: w, limit: n });
                }
            }
            if u == v {
                if !allow_loops {
                    return Err(Error::LoopNotAllowed(u));
                }
                degree[u] += 2;
                stars[u].push(i);
            } else {
                degree[u] += 1;
                degree[v] += 1;
                stars[u].push(i);
                stars[v].push(i);
            }
        }
        if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::NotCubic { vertex, degree });
        }
        Ok(MultiGraph { n, edges, pseudo: allow_loops, stars })
    }

    /// Builds a loopless graph.
    pub fn graph(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(n, edges, false)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Whether the value was built with loops permitted.
    pub fn is_pseudo(&self) -> bool {
        self.pseudo
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Incident edge indices of `v` in ascending order; a loop is listed once.
    pub fn star(&self, v: usize) -> &[usize] {
        &self.stars[v]
    }

    /// The star of `v` as an edge subset.
    pub fn star_subset(&self, v: usize) -> Result<EdgeSubset> {
        if v >= self.n {
            return Err(Error::BadIndex { index: v, limit: self.n });
        }
        Ok(EdgeSubset::from_edges(self, self.stars[v].iter().copied()))
    }

    /// The endpoint of `e` other than `v` (`v` itself for a loop).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn are_adjacent_edges(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.stars[u]
            .iter()
            .filter(|&&e| {
                let (a, b) = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
            .count()
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.stars[v]
            .iter()
            .map(|&e| self.other_end(e, v))
            .filter(|&w| w != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| self.neighbors(v).len() == 3)
    }

    pub fn has_parallel_edges(&self) -> bool {
        !self.has_loops() && !self.is_simple()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &e in &self.stars[v] {
                    let w = self.other_end(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Cut edges, found by a low-link traversal over edge identities so that
    /// parallel edges are never reported.
    pub fn bridges(&self) -> EdgeSubset {
        let mut out = EdgeSubset::empty(self.edge_count());
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut time = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next star position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
                if *pos < self.stars[v].len() {
                    let e = self.stars[v][*pos];
                    *pos += 1;
                    if e == pe || self.is_loop(e) {
                        continue;
                    }
                    let w = self.other_end(e, v);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert(pe);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// All triangles, one per triple of pairwise-adjacent edges spanning three
    /// distinct vertices. Parallel edges yield several triangles on the same
    /// vertex triple.
    pub fn find_triangles(&self) -> Vec<TriangleRef> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for &e1 in &self.stars[a] {
                let b = self.other_end(e1, a);
                if b <= a {
                    continue;
                }
                for &e2 in &self.stars[b] {
                    let c = self.other_end(e2, b);
                    if c <= b {
                        continue;
                    }
                    for &e3 in &self.stars[c] {
                        if self.other_end(e3, c) == a {
                            out.push(TriangleRef { vertices: [a, b, c], edges: sorted3([e1, e2, e3]) });
                        }
                    }
                }
            }
        }
        out.sort_by_key(|t| t.edges);
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangles().is_empty()
    }

    /// Validates three edge indices as a triangle of this graph.
    pub fn triangle(&self, edges: [usize; 3]) -> Result<TriangleRef> {
        for &e in &edges {
            if e >= self.edge_count() {
                return Err(Error::BadIndex { index: e, limit: self.edge_count() });
            }
        }
        let edges = sorted3(edges);
        if edges[0] == edges[1] || edges[1] == edges[2] || edges.iter().any(|&e| self.is_loop(e)) {
            return Err(Error::NotATriangle(edges));
        }
        let mut vs: Vec<usize> = edges.iter().flat_map(|&e| [self.edges[e].0, self.edges[e].1]).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != 3 {
            return Err(Error::NotATriangle(edges));
        }
        // every vertex must be hit by exactly two of the edges
        for &v in &vs {
            let hits = edges.iter().filter(|&&e| self.edges[e].0 == v || self.edges[e].1 == v).count();
            if hits != 2 {
                return Err(Error::NotATriangle(edges));
            }
        }
        Ok(TriangleRef { vertices: [vs[0], vs[1], vs[2]], edges })
    }

    /// Edges leaving the triangle, indexed like `t.vertices`. Entry `i` is the
    /// third edge at `t.vertices[i]`, which may itself join two triangle
    /// vertices when the triangle is not contractible.
    pub fn triangle_cut(&self, t: &TriangleRef) -> [usize; 3] {
        let mut out = [0; 3];
        for (i, &v) in t.vertices.iter().enumerate() {
            out[i] = *self.stars[v]
                .iter()
                .find(|e| !t.edges.contains(e))
                .expect("cubic vertex has an edge outside the triangle");
        }
        out
    }

    /// A triangle is contractible when contracting it leaves no loop.
    pub fn is_contractible(&self, t: &TriangleRef) -> Result<bool> {
        self.triangle(t.edges)?;
        let cut = self.triangle_cut(t);
        Ok(cut.iter().all(|&e| {
            let (a, b) = self.edges[e];
            !(t.vertices.contains(&a) && t.vertices.contains(&b))
        }))
    }

    /// Contracts a triangle into its smallest vertex. The result is flagged
    /// pseudo exactly when a loop appears.
    pub fn contract_triangle(&self, t: &TriangleRef) -> Result<Contraction> {
        let t = self.triangle(t.edges)?;
        let keep = t.vertices[0];
        let mut vertex_map = vec![0usize; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if v == t.vertices[1] || v == t.vertices[2] {
                continue;
            }
            vertex_map[v] = next;
            next += 1;
        }
        vertex_map[t.vertices[1]] = vertex_map[keep];
        vertex_map[t.vertices[2]] = vertex_map[keep];

        let mut map = vec![None; self.edge_count()];
        let mut edges = Vec::with_capacity(self.edge_count() - 3);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if t.edges.contains(&i) {
                continue;
            }
            map[i] = Some(edges.len());
            edges.push((vertex_map[u], vertex_map[v]));
        }
        let looped = edges.iter().any(|&(u, v)| u == v);
        let graph = MultiGraph::new(self.n - 2, edges, looped || self.pseudo)?;
        let edge_map = EdgeCorrespondence::new(self.edge_count(), graph.edge_count(), map);
        let merged = vertex_map[keep];
        Ok(Contraction { graph, edges: edge_map, vertex_map, merged })
    }

    /// Replaces each vertex of `set` by a triangle. The vertex keeps its index
    /// and its lowest incident edge; two new vertices, appended in ascending
    /// order of the expanded vertex, take the other two edges.
    pub fn expand_vertices_to_triangles(&self, set: &[usize]) -> Result<Expansion> {
        let mut set: Vec<usize> = set.to_vec();
        set.sort_unstable();
        set.dedup();
        for &u in &set {
            if u >= self.n {
                return Err(Error::BadIndex { index: u, limit: self.n });
            }
            if self.stars[u].iter().any(|&e| self.is_loop(e)) {
                return Err(Error::LoopAtExpandedVertex(u));
            }
        }
        let mut edges = self.edges.clone();
        let mut n = self.n;
        let mut triangles = Vec::with_capacity(set.len());
        for &u in &set {
            let star = [self.stars[u][0], self.stars[u][1], self.stars[u][2]];
            let corners = [u, n, n + 1];
            n += 2;
            for k in 1..3 {
                let e = star[k];
                let (a, b) = edges[e];
                // a parallel pair is rewritten one endpoint at a time
                edges[e] = if a == u { (corners[k], b) } else { (a, corners[k]) };
            }
            let base = edges.len();
            edges.push((corners[0], corners[1]));
            edges.push((corners[1], corners[2]));
            edges.push((corners[0], corners[2]));
            triangles.push(ExpandedVertex {
                original: u,
                corners,
                inherited: star,
                // opposite corner 0, 1, 2 respectively
                triangle_edges: [base + 1, base + 2, base],
            });
        }
        let graph = MultiGraph::new(n, edges, self.pseudo)?;
        let map = (0..self.edge_count()).map(Some).collect();
        let edge_map = EdgeCorrespondence::new(self.edge_count(), graph.edge_count(), map);
        Ok(Expansion { graph, edges: edge_map, triangles })
    }

    /// Expands every vertex.
    pub fn expand_all(&self) -> Result<Expansion> {
        let all: Vec<usize> = (0..self.n).collect();
        self.expand_vertices_to_triangles(&all)
    }

    /// The edge at a vertex of the contractible triangle `t` that is not
    /// adjacent to `e`.
    pub fn opposite_edge(&self, t: &TriangleRef, e: usize) -> Result<usize> {
        if !self.is_contractible(t)? {
            return Err(Error::NotContractible(t.edges));
        }
        if !t.edges.contains(&e) {
            return Err(Error::EdgeNotInTriangle { edge: e, triangle: t.edges });
        }
        let (a, b) = self.edges[e];
        let apex = t.vertices.iter().position(|&v| v != a && v != b).expect("triangle has an apex");
        Ok(self.triangle_cut(t)[apex])
    }

    /// Removes edge `e = uv` and inserts a string of `k` diamonds between `u`
    /// and `v`. Surviving edges keep their relative order; new edges follow.
    pub fn replace_edge_with_diamond_string(&self, e: usize, k: usize) -> Result<StringInsertion> {
        if k == 0 {
            return Err(Error::BadK(k));
        }
        if e >= self.edge_count() {
            return Err(Error::BadIndex { index: e, limit: self.edge_count() });
        }
        let (u, v) = self.edges[e];
        let mut map = vec![None; self.edge_count()];
        let mut edges = Vec::with_capacity(self.edge_count() + 7 * k);
        for (i, &pair) in self.edges.iter().enumerate() {
            if i != e {
                map[i] = Some(edges.len());
                edges.push(pair);
            }
        }
        let first = self.n;
        let head_edge = edges.len();
        edges.push((u, first));
        let diamonds = push_diamond_chain(&mut edges, first, k);
        let tail = diamonds[k - 1].tips[1];
        let tail_edge = edges.len();
        edges.push((tail, v));
        let graph = MultiGraph::new(self.n + 4 * k, edges, self.pseudo)?;
        let string = DiamondString {
            diamonds,
            head_outer_edge: head_edge,
            tail_outer_edge: tail_edge,
        };
        let edge_map = EdgeCorrespondence::new(self.edge_count(), graph.edge_count(), map);
        Ok(StringInsertion { graph, edges: edge_map, string })
    }

    /// A cyclic chain of `k ≥ 2` diamonds.
    pub fn ring_of_diamonds(k: usize) -> Result<MultiGraph> {
        if k < 2 {
            return Err(Error::BadK(k));
        }
        let mut edges = Vec::with_capacity(6 * k);
        let diamonds = push_diamond_chain(&mut edges, 0, k);
        edges.push((diamonds[k - 1].tips[1], diamonds[0].tips[0]));
        MultiGraph::graph(4 * k, edges)
    }

    /// Diamonds: induced copies of K4 minus an edge, all edges simple.
    pub fn find_diamonds(&self) -> Vec<Diamond> {
        let mut out = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if u == v || self.multiplicity(u, v) != 1 {
                continue;
            }
            let nu: Vec<usize> = self.stars[u].iter().filter(|&&f| f != e).map(|&f| self.other_end(f, u)).collect();
            let nv: Vec<usize> = self.stars[v].iter().filter(|&&f| f != e).map(|&f| self.other_end(f, v)).collect();
            let mut tips: Vec<usize> = nu.iter().copied().filter(|w| nv.contains(w)).collect();
            tips.sort_unstable();
            tips.dedup();
            if tips.len() != 2 || nu.len() != 2 || nv.len() != 2 {
                continue;
            }
            let (x, y) = (tips[0], tips[1]);
            if x == u || x == v || y == u || y == v {
                continue;
            }
            if self.multiplicity(x, y) != 0 {
                continue;
            }
            if [(x, u), (x, v), (y, u), (y, v)].iter().any(|&(a, b)| self.multiplicity(a, b) != 1) {
                continue;
            }
            let middle = if u < v { [u, v] } else { [v, u] };
            out.push(Diamond { tips: [x, y], middle });
        }
        out.sort_by_key(|d| (d.tips, d.middle));
        out
    }

    /// Maximal strings of diamonds that have a head and a tail. Diamonds that
    /// close up into a ring are not reported.
    pub fn find_diamond_strings(&self) -> Vec<DiamondString> {
        let diamonds = self.find_diamonds();
        let mut owner = vec![usize::MAX; self.n];
        for (i, d) in diamonds.iter().enumerate() {
            for &w in d.tips.iter().chain(d.middle.iter()) {
                owner[w] = i;
            }
        }
        // diamond reached through the outer edge of each tip
        let outer = |tip: usize| -> (usize, usize) {
            let e = *self.stars[tip]
                .iter()
                .find(|&&f| owner[self.other_end(f, tip)] != owner[tip])
                .expect("tip has an outer edge");
            (e, self.other_end(e, tip))
        };
        let mut used = vec![false; diamonds.len()];
        let mut out = Vec::new();
        for start in 0..diamonds.len() {
            if used[start] {
                continue;
            }
            // walk to one end of the chain
            let mut cur = start;
            let mut entry_tip = diamonds[cur].tips[0];
            let mut steps = 0;
            loop {
                let (_, w) = outer(entry_tip);
                let o = owner[w];
                if o == usize::MAX || !diamonds[o].tips.contains(&w) || steps > diamonds.len() {
                    break;
                }
                cur = o;
                entry_tip = if diamonds[o].tips[0] == w { diamonds[o].tips[1] } else { diamonds[o].tips[0] };
                steps += 1;
            }
            if steps > diamonds.len() {
                // a ring
                mark_chain(&diamonds, &owner, start, &outer, &mut used);
                continue;
            }
            // entry_tip of `cur` is the head
            let mut chain = Vec::new();
            let mut d = cur;
            let mut head_tip = entry_tip;
            loop {
                used[d] = true;
                let other = if diamonds[d].tips[0] == head_tip { diamonds[d].tips[1] } else { diamonds[d].tips[0] };
                chain.push(Diamond { tips: [head_tip, other], middle: diamonds[d].middle });
                let (_, w) = outer(other);
                let o = owner[w];
                if o == usize::MAX || !diamonds[o].tips.contains(&w) || used[o] {
                    break;
                }
                d = o;
                head_tip = w;
            }
            let head = chain[0].tips[0];
            let tail = chain[chain.len() - 1].tips[1];
            let (head_outer_edge, _) = outer(head);
            let (tail_outer_edge, _) = outer(tail);
            out.push(DiamondString { diamonds: chain, head_outer_edge, tail_outer_edge });
        }
        out
    }

    /// Claw-free: no vertex has three distinct, pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| {
            let nb = self.neighbors(v);
            if nb.len() < 3 {
                return true;
            }
            let adj = |a: usize, b: usize| self.multiplicity(a, b) > 0;
            adj(nb[0], nb[1]) || adj(nb[0], nb[2]) || adj(nb[1], nb[2])
        })
    }

    /// Relabels vertices by `perm` (old → new) and permutes the edge list by
    /// `edge_perm` (old → new), if given.
    pub fn relabel(&self, perm: &[usize], edge_perm: Option<&[usize]>) -> Result<MultiGraph> {
        let mut edges = vec![(0, 0); self.edge_count()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let j = edge_perm.map_or(i, |p| p[i]);
            edges[j] = (perm[u], perm[v]);
        }
        MultiGraph::new(self.n, edges, self.pseudo)
    }

    /// Removes a vertex set and adds extra edges; remaining vertices are
    /// renumbered in order. Returns the graph, the edge correspondence and the
    /// vertex renumbering (`usize::MAX` for removed vertices). Extra edges are
    /// given in old vertex indices.
    pub(crate) fn remove_vertices_with_edges(
        &self,
        removed: &[usize],
        extra: &[(usize, usize)],
    ) -> Result<(MultiGraph, EdgeCorrespondence, Vec<usize>)> {
        let mut vmap = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in vmap.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let mut map = vec![None; self.edge_count()];
        let mut edges = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if vmap[u] != usize::MAX && vmap[v] != usize::MAX {
                map[i] = Some(edges.len());
                edges.push((vmap[u], vmap[v]));
            }
        }
        for &(u, v) in extra {
            edges.push((vmap[u], vmap[v]));
        }
        let looped = edges.iter().any(|&(a, b)| a == b);
        let g = MultiGraph::new(next, edges, self.pseudo || looped)?;
        let corr = EdgeCorrespondence::new(self.edge_count(), g.edge_count(), map);
        Ok((g, corr, vmap))
    }
}

/// Edges in depth-first order over the line graph, starting from edge 0 and
/// visiting adjacent edges by ascending index. Components are taken in order
/// of their lowest edge.
pub fn dfs_edge_order(g: &MultiGraph) -> Vec<usize> {
    let m = g.edge_count();
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for root in 0..m {
        if seen[root] {
            continue;
        }
        let mut stack = vec![root];
        while let Some(e) = stack.pop() {
            if seen[e] {
                continue;
            }
            seen[e] = true;
            order.push(e);
            let (a, b) = g.endpoints(e);
            let mut next: Vec<usize> = g.star(a).iter().chain(g.star(b)).copied().filter(|&f| !seen[f]).collect();
            next.sort_unstable();
            next.dedup();
            stack.extend(next.into_iter().rev());
        }
    }
    order
}

/// A static order that always takes the edge with the most already-ordered
/// neighbours at its endpoints, so vertices are closed off early.
pub fn constrained_edge_order(g: &MultiGraph) -> Vec<usize> {
    let m = g.edge_count();
    let mut placed = vec![false; m];
    let mut filled = vec![0usize; g.vertex_count()];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let e = (0..m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| {
                let (a, b) = g.endpoints(e);
                let full = usize::from(filled[a] + 1 >= g.star(a).len()) + usize::from(filled[b] + 1 >= g.star(b).len());
                (filled[a] + filled[b], full, std::cmp::Reverse(e))
            })
            .expect("an unplaced edge remains");
        placed[e] = true;
        let (a, b) = g.endpoints(e);
        filled[a] += 1;
        if b != a {
            filled[b] += 1;
        }
        order.push(e);
    }
    order
}

/// The lowest-index edge joining `a` and `b`.
pub fn edge_between(g: &MultiGraph, a: usize, b: usize) -> Option<usize> {
    g.star(a).iter().copied().find(|&e| {
        let (p, q) = g.endpoints(e);
        (p == a && q == b) || (p == b && q == a)
    })
}

fn sorted3(mut a: [usize; 3]) -> [usize; 3] {
    a.sort_unstable();
    a
}

/// Appends `k` chained diamonds on vertices `first..first + 4k`, joined tip to
/// tip, and returns them oriented from head to tail.
fn push_diamond_chain(edges: &mut Vec<(usize, usize)>, first: usize, k: usize) -> Vec<Diamond> {
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let x = first + 4 * i;
        let (m1, m2, y) = (x + 1, x + 2, x + 3);
        edges.extend_from_slice(&[(x, m1), (x, m2), (m1, m2), (m1, y), (m2, y)]);
        if i > 0 {
            let prev: &Diamond = &out[i - 1];
            edges.push((prev.tips[1], x));
        }
        out.push(Diamond { tips: [x, y], middle: [m1, m2] });
    }
    out
}

fn mark_chain(
    diamonds: &[Diamond],
    owner: &[usize],
    start: usize,
    outer: &dyn Fn(usize) -> (usize, usize),
    used: &mut [bool],
) {
    let mut d = start;
    let mut tip = diamonds[d].tips[1];
    while !used[d] {
        used[d] = true;
        let (_, w) = outer(tip);
        let o = owner[w];
        if o == usize::MAX {
            break;
        }
        d = o;
        tip = if diamonds[o].tips[0] == w { diamonds[o].tips[1] } else { diamonds[o].tips[0] };
    }
}

/// A set of edge indices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    bits: FixedBitSet,
}

impl EdgeSubset {
    pub fn empty(edge_count: usize) -> Self {
        EdgeSubset { bits: FixedBitSet::with_capacity(edge_count) }
    }

    pub fn full(edge_count: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(edge_count);
        bits.insert_range(..);
        EdgeSubset { bits }
    }

    pub fn from_edges(g: &MultiGraph, edges: impl IntoIterator<Item = usize>) -> Self {
        Self::from_indices(g.edge_count(), edges)
    }

    pub fn from_indices(edge_count: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(edge_count);
        for e in edges {
            s.insert(e);
        }
        s
    }

    /// Size of the owning graph's edge set.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, e: usize) {
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: usize) {
        self.bits.set(e, false);
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &EdgeSubset) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        EdgeSubset { bits }
    }

    pub fn symmetric_difference_with(&mut self, other: &EdgeSubset) {
        self.bits.symmetric_difference_with(&other.bits);
    }

    pub fn complement(&self) -> EdgeSubset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSubset { bits }
    }

    /// Checks that the subset was built for `g`.
    pub fn check_owner(&self, g: &MultiGraph) -> Result<()> {
        if self.universe() != g.edge_count() {
            return Err(Error::SubsetMismatch { expected: g.edge_count(), found: self.universe() });
        }
        Ok(())
    }

    /// Degree of `v` in the spanning subgraph (loops count twice).
    pub fn degree_in(&self, g: &MultiGraph, v: usize) -> usize {
        g.star(v)
            .iter()
            .filter(|&&e| self.contains(e))
            .map(|&e| if g.is_loop(e) { 2 } else { 1 })
            .sum()
    }
}

/// A triangle: three distinct vertices and the three edges joining them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleRef {
    pub vertices: [usize; 3],
    pub edges: [usize; 3],
}

/// How edges survive a transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCorrespondence {
    from_edges: usize,
    to_edges: usize,
    map: Vec<Option<usize>>,
}

impl EdgeCorrespondence {
    pub fn new(from_edges: usize, to_edges: usize, map: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(map.len(), from_edges);
        debug_assert!(map.iter().flatten().all(|&e| e < to_edges));
        EdgeCorrespondence { from_edges, to_edges, map }
    }

    pub fn identity(edges: usize) -> Self {
        Self::new(edges, edges, (0..edges).map(Some).collect())
    }

    pub fn get(&self, e: usize) -> Option<usize> {
        self.map.get(e).copied().flatten()
    }

    pub fn from_edge_count(&self) -> usize {
        self.from_edges
    }

    pub fn to_edge_count(&self) -> usize {
        self.to_edges
    }

    /// Target-to-source lookup.
    pub fn inverse(&self) -> Vec<Option<usize>> {
        let mut inv = vec![None; self.to_edges];
        for (e, t) in self.map.iter().enumerate() {
            if let Some(t) = t {
                inv[*t] = Some(e);
            }
        }
        inv
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &EdgeCorrespondence) -> EdgeCorrespondence {
        debug_assert_eq!(self.to_edges, next.from_edges);
        let map = self.map.iter().map(|m| m.and_then(|e| next.get(e))).collect();
        EdgeCorrespondence::new(self.from_edges, next.to_edges, map)
    }

    /// Pushes a subset forward, dropping edges that do not survive.
    pub fn forward(&self, s: &EdgeSubset) -> EdgeSubset {
        EdgeSubset::from_indices(self.to_edges, s.iter().filter_map(|e| self.get(e)))
    }
}

/// Result of contracting a triangle.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: MultiGraph,
    pub edges: EdgeCorrespondence,
    /// old vertex → new vertex; triangle vertices all map to `merged`
    pub vertex_map: Vec<usize>,
    pub merged: usize,
}

/// Result of replacing vertices with triangles.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub graph: MultiGraph,
    pub edges: EdgeCorrespondence,
    pub triangles: Vec<ExpandedVertex>,
}

/// The triangle that replaced one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpandedVertex {
    pub original: usize,
    pub corners: [usize; 3],
    /// edge index (same in both graphs) attached at each corner
    pub inherited: [usize; 3],
    /// `triangle_edges[k]` joins the two corners other than `corners[k]`
    pub triangle_edges: [usize; 3],
}

impl ExpandedVertex {
    pub fn triangle(&self) -> TriangleRef {
        let mut vertices = self.corners;
        vertices.sort_unstable();
        TriangleRef { vertices, edges: sorted3(self.triangle_edges) }
    }
}

/// An induced K4 minus an edge. `tips` are the two degree-2 vertices of the
/// diamond, `middle` the ends of its central edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Diamond {
    pub tips: [usize; 2],
    pub middle: [usize; 2],
}

/// A chain of diamonds joined tip to tip. Each diamond is oriented so that
/// `tips[0]` faces the head; `head_outer_edge` leaves the head and
/// `tail_outer_edge` leaves the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondString {
    pub diamonds: Vec<Diamond>,
    pub head_outer_edge: usize,
    pub tail_outer_edge: usize,
}

impl DiamondString {
    pub fn head(&self) -> usize {
        self.diamonds[0].tips[0]
    }

    pub fn tail(&self) -> usize {
        self.diamonds[self.diamonds.len() - 1].tips[1]
    }

    pub fn len(&self) -> usize {
        self.diamonds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diamonds.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.diamonds
            .iter()
            .flat_map(|d| [d.tips[0], d.middle[0], d.middle[1], d.tips[1]])
            .collect()
    }
}

/// Result of inserting a string of diamonds.
#[derive(Clone, Debug)]
pub struct StringInsertion {
    pub graph: MultiGraph,
    pub edges: EdgeCorrespondence,
    pub string: DiamondString,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Named};

    fn k4() -> MultiGraph {
        MultiGraph::graph(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn build_validates_degrees_and_indices() {
        assert_eq!(k4().edge_count(), 6);
        let theta = MultiGraph::graph(2, vec![(0, 1); 3]).unwrap();
        assert_eq!(theta.star(0), &[0, 1, 2]);
        assert!(matches!(
            MultiGraph::graph(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            Err(Error::NotCubic { .. })
        ));
        assert!(matches!(MultiGraph::graph(2, vec![(0, 5); 3]), Err(Error::BadIndex { .. })));
        assert!(matches!(
            MultiGraph::graph(2, vec![(0, 0), (0, 1), (1, 1)]),
            Err(Error::LoopNotAllowed(0))
        ));
        let dumbbell = MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)], true).unwrap();
        assert_eq!(dumbbell.star(0), &[0, 1]);
        assert!(dumbbell.is_pseudo());
    }

    #[test]
    fn star_of_k4_and_theta() {
        assert_eq!(k4().star_subset(0).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(matches!(k4().star_subset(9), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn bridges_ignore_parallel_edges() {
        let theta = MultiGraph::graph(2, vec![(0, 1); 3]).unwrap();
        assert!(theta.bridges().is_empty());
        let s10 = catalog::get(Named::S10);
        assert_eq!(s10.bridges().to_vec(), vec![0, 1, 2]);
        let dumbbell = MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)], true).unwrap();
        assert_eq!(dumbbell.bridges().to_vec(), vec![1]);
    }

    #[test]
    fn k4_triangles_are_contractible_to_theta() {
        let g = k4();
        let ts = g.find_triangles();
        assert_eq!(ts.len(), 4);
        for t in &ts {
            assert!(g.is_contractible(t).unwrap());
            let c = g.contract_triangle(t).unwrap();
            assert_eq!(c.graph.vertex_count(), 2);
            assert!(!c.graph.has_loops());
            assert_eq!(c.graph.multiplicity(0, 1), 3);
        }
    }

    #[test]
    fn non_triangles_are_rejected() {
        let g = k4();
        assert!(matches!(g.triangle([0, 1, 5]), Err(Error::NotATriangle(_))));
        assert!(matches!(g.triangle([0, 1, 2]), Err(Error::NotATriangle(_))));
        assert!(g.triangle([0, 1, 3]).is_ok());
    }

    #[test]
    fn end_block_triangle_is_not_contractible() {
        let s12 = catalog::get(Named::S12);
        let t = s12.find_triangles().into_iter().find(|t| t.vertices == [3, 4, 5]).unwrap();
        assert!(!s12.is_contractible(&t).unwrap());
        let c = s12.contract_triangle(&t).unwrap();
        assert!(c.graph.has_loops());
        assert!(c.graph.is_pseudo());
        assert!(matches!(s12.opposite_edge(&t, t.edges[0]), Err(Error::NotContractible(_))));
    }

    #[test]
    fn expansion_then_contraction_is_identity() {
        let g = k4();
        let x = g.expand_vertices_to_triangles(&[2]).unwrap();
        assert_eq!(x.graph.vertex_count(), 6);
        let t = x.triangles[0].triangle();
        let c = x.graph.contract_triangle(&t).unwrap();
        assert_eq!(c.graph, g);
        let empty = g.expand_vertices_to_triangles(&[]).unwrap();
        assert_eq!(empty.graph, g);
    }

    #[test]
    fn expansion_rejects_loops() {
        let dumbbell = MultiGraph::new(2, vec![(0, 0), (0, 1), (1, 1)], true).unwrap();
        assert!(matches!(dumbbell.expand_vertices_to_triangles(&[0]), Err(Error::LoopAtExpandedVertex(0))));
    }

    #[test]
    fn opposite_edges_in_expanded_k4() {
        let g = k4();
        let x = g.expand_vertices_to_triangles(&[0]).unwrap();
        let tri = x.triangles[0];
        for k in 0..3 {
            let opp = x.graph.opposite_edge(&tri.triangle(), tri.triangle_edges[k]).unwrap();
            assert_eq!(opp, tri.inherited[k]);
        }
        assert!(matches!(
            x.graph.opposite_edge(&tri.triangle(), 3),
            Err(Error::EdgeNotInTriangle { .. })
        ));
    }

    #[test]
    fn diamond_strings_and_rings() {
        let g = k4();
        let s = g.replace_edge_with_diamond_string(0, 1).unwrap();
        assert_eq!(s.graph.vertex_count(), 8);
        assert!(s.graph.is_claw_free());
        // K4 minus an edge is itself a diamond, so this closes into a ring
        assert!(s.graph.find_diamond_strings().is_empty());
        assert_eq!(s.graph.find_diamonds().len(), 2);

        let p10 = catalog::get(Named::P10);
        let s3 = p10.replace_edge_with_diamond_string(7, 3).unwrap();
        assert_eq!(s3.graph.vertex_count(), 22);
        let found = s3.graph.find_diamond_strings();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 3);
        let mut ends = [found[0].head(), found[0].tail()];
        ends.sort_unstable();
        let mut expected = [s3.string.head(), s3.string.tail()];
        expected.sort_unstable();
        assert_eq!(ends, expected);

        let theta = MultiGraph::graph(2, vec![(0, 1); 3]).unwrap();
        let t = theta.replace_edge_with_diamond_string(1, 1).unwrap();
        assert_eq!(t.graph.vertex_count(), 6);
        assert_eq!(t.graph.multiplicity(0, 1), 2);
        assert!(matches!(g.replace_edge_with_diamond_string(0, 0), Err(Error::BadK(0))));

        for k in 2..6 {
            let r = MultiGraph::ring_of_diamonds(k).unwrap();
            assert_eq!(r.vertex_count(), 4 * k);
            assert!(r.is_connected() && r.is_claw_free() && r.is_bridgeless() && r.is_simple());
            assert_eq!(r.find_diamonds().len(), k);
            assert!(r.find_diamond_strings().is_empty());
        }
        assert!(matches!(MultiGraph::ring_of_diamonds(1), Err(Error::BadK(1))));
    }

    #[test]
    fn claw_freeness() {
        assert!(!catalog::get(Named::P10).is_claw_free());
        assert!(k4().is_claw_free());
        assert!(catalog::get(Named::P10).expand_all().unwrap().graph.is_claw_free());
    }
}
