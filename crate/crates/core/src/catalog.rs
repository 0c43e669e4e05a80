//! Named graphs with frozen vertex and edge numberings.
//!
//! | name  | vertices | numbering |
//! |-------|----------|-----------|
//! | K4    | 4  | edges 01 02 03 12 13 23 |
//! | THETA | 2  | three parallel edges 01 |
//! | P10   | 10 | outer cycle `i,(i+1)%5` (edges 0-4), spokes `i,i+5` (5-9), inner pentagram `5+i,5+(i+2)%5` (10-14) |
//! | P12   | 12 | P10 with vertex 0 replaced by the triangle {0,10,11}: edges 0-14 as in P10 with edge 4 rewired to 10 and edge 5 to 11; triangle edges 15=(0,10) 16=(10,11) 17=(0,11) |
//! | S10   | 10 | centre 0; block i (i=0,1,2) on p=1+3i, q=2+3i, r=3+3i; bridges 0-2 are (0,p); block edges (p,q) (p,r) (q,r) (q,r) |
//! | S12   | 12 | central triangle {0,1,2}; bridges a=0:(0,3) b=1:(1,6) c=2:(2,9); x=3:(1,2) y=4:(0,2) z=5:(0,1) so x/a, y/b, z/c are opposite; block i on p=3+3i, q=4+3i, r=5+3i with edges (p,q) (p,r) (q,r) (q,r) |
//! | S16   | 16 | centre 0; block i on p=1+5i, q, r, s, t (consecutive); bridges 0-2 are (0,p); block edges (p,q) (p,r) (q,s) (q,t) (r,s) (r,t) (s,t), the diamond being {q,r,s,t} |
//!
//! P12 is exactly the triangle expansion of P10 at vertex 0, and contracting
//! its triangle gives back P10 edge for edge. Contracting the central triangle
//! of S12 gives S10 edge for edge.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::{MultiGraph, TriangleRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    P10,
    S10,
    S12,
    P12,
    S16,
    K4,
    Theta,
}

impl Named {
    pub const ALL: [Named; 7] = [Named::P10, Named::S10, Named::S12, Named::P12, Named::S16, Named::K4, Named::Theta];

    pub fn as_str(self) -> &'static str {
        match self {
            Named::P10 => "P10",
            Named::S10 => "S10",
            Named::S12 => "S12",
            Named::P12 => "P12",
            Named::S16 => "S16",
            Named::K4 => "K4",
            Named::Theta => "THETA",
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Named::ALL
            .iter()
            .copied()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Looks a graph up by name.
pub fn catalog(name: &str) -> Result<MultiGraph, Error> {
    Ok(get(name.parse()?))
}

pub fn get(name: Named) -> MultiGraph {
    let (n, edges) = match name {
        Named::K4 => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Named::Theta => (2, vec![(0, 1); 3]),
        Named::P10 => (10, petersen_edges()),
        Named::P12 => {
            let mut e = petersen_edges();
            e[4] = (4, 10);
            e[5] = (11, 5);
            e.extend_from_slice(&[(0, 10), (10, 11), (0, 11)]);
            (12, e)
        }
        Named::S10 => {
            let mut e = vec![(0, 1), (0, 4), (0, 7)];
            for i in 0..3 {
                let (p, q, r) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
                e.extend_from_slice(&[(p, q), (p, r), (q, r), (q, r)]);
            }
            (10, e)
        }
        Named::S12 => {
            let mut e = vec![(0, 3), (1, 6), (2, 9), (1, 2), (0, 2), (0, 1)];
            for i in 0..3 {
                let (p, q, r) = (3 + 3 * i, 4 + 3 * i, 5 + 3 * i);
                e.extend_from_slice(&[(p, q), (p, r), (q, r), (q, r)]);
            }
            (12, e)
        }
        Named::S16 => {
            let mut e = vec![(0, 1), (0, 6), (0, 11)];
            for i in 0..3 {
                let p = 1 + 5 * i;
                let (q, r, s, t) = (p + 1, p + 2, p + 3, p + 4);
                e.extend_from_slice(&[(p, q), (p, r), (q, s), (q, t), (r, s), (r, t), (s, t)]);
            }
            (16, e)
        }
    };
    MultiGraph::graph(n, edges).expect("catalog graphs are cubic")
}

fn petersen_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::with_capacity(15);
    e.extend((0..5).map(|i| (i, (i + 1) % 5)));
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    e
}

/// Edge labels of S12 used by the S10 pipeline.
pub mod s12 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const X: usize = 3;
    pub const Y: usize = 4;
    pub const Z: usize = 5;
    pub const BRIDGES: [usize; 3] = [A, B, C];
    pub const CENTRAL: [usize; 3] = [X, Y, Z];
}

/// The central triangle of S12.
pub fn s12_central_triangle() -> TriangleRef {
    TriangleRef { vertices: [0, 1, 2], edges: s12::CENTRAL }
}

/// The unique triangle T of P12.
pub fn p12_triangle() -> TriangleRef {
    TriangleRef { vertices: [0, 10, 11], edges: [15, 16, 17] }
}

/// Edges of P12 joining T to the rest, i.e. the 3-cut around T.
pub const P12_CUT: [usize; 3] = [0, 4, 5];

/// Outer 5-cycle of P10.
pub const P10_OUTER_CYCLE: [usize; 5] = [0, 1, 2, 3, 4];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_graph_is_cubic_and_loopless() {
        for name in Named::ALL {
            let g = get(name);
            assert!(!g.has_loops(), "{name}");
            for v in 0..g.vertex_count() {
                assert_eq!(g.star(v).len(), 3);
            }
        }
    }

    #[test]
    fn sizes_and_bridges() {
        let p10 = get(Named::P10);
        assert_eq!((p10.vertex_count(), p10.edge_count()), (10, 15));
        assert!(p10.is_bridgeless() && p10.is_simple() && p10.is_triangle_free());
        let s12 = get(Named::S12);
        assert_eq!((s12.vertex_count(), s12.edge_count()), (12, 18));
        assert_eq!(s12.bridges().to_vec(), s12::BRIDGES.to_vec());
        let s16 = get(Named::S16);
        assert_eq!((s16.vertex_count(), s16.edge_count()), (16, 24));
        assert_eq!(s16.bridges().len(), 3);
        assert!(s16.is_simple());
        assert_eq!(s16.find_diamonds().len(), 3);
        assert_eq!(get(Named::S10).star(0), &[0, 1, 2]);
    }

    #[test]
    fn p10_has_girth_five() {
        let g = get(Named::P10);
        // no triangles and no 4-cycles
        assert!(g.is_triangle_free());
        for u in 0..10 {
            for v in (u + 1)..10 {
                if g.multiplicity(u, v) > 0 {
                    continue;
                }
                let common = g.neighbors(u).iter().filter(|w| g.neighbors(v).contains(w)).count();
                assert!(common <= 1);
            }
        }
    }

    #[test]
    fn p12_and_s12_contract_to_p10_and_s10() {
        let p12 = get(Named::P12);
        assert_eq!(p12.find_triangles(), vec![p12_triangle()]);
        let c = p12.contract_triangle(&p12_triangle()).unwrap();
        assert_eq!(c.graph, get(Named::P10));
        let s12 = get(Named::S12);
        let c = s12.contract_triangle(&s12_central_triangle()).unwrap();
        assert_eq!(c.graph, get(Named::S10));
        assert_eq!(p12.triangle_cut(&p12_triangle()), P12_CUT);
    }

    #[test]
    fn p12_is_the_expansion_of_p10_at_zero() {
        let x = get(Named::P10).expand_vertices_to_triangles(&[0]).unwrap();
        assert_eq!(x.graph, get(Named::P12));
    }

    #[test]
    fn s12_opposite_edges() {
        let s12 = get(Named::S12);
        let t = s12_central_triangle();
        assert_eq!(s12.opposite_edge(&t, s12::X).unwrap(), s12::A);
        assert_eq!(s12.opposite_edge(&t, s12::Y).unwrap(), s12::B);
        assert_eq!(s12.opposite_edge(&t, s12::Z).unwrap(), s12::C);
    }

    #[test]
    fn names_parse() {
        assert_eq!("theta".parse::<Named>().unwrap(), Named::Theta);
        assert!(matches!(catalog("Q7"), Err(Error::UnknownName(_))));
    }
}
