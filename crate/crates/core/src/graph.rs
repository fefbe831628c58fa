//! Half-edge model of framed 4-valent graphs.
//!
//! Vertex `v` owns the four half-edge slots `4v..4v+4`. Slots `0,2` and
//! `1,3` are opposite; every other pair of slots at a vertex is adjacent.
//! Edges are a fixed-point-free involution on half-edges. Vertex-free
//! circular components are kept as a bare count.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parity::ParityUnionFind;

/// Global half-edge index: `4 * vertex + slot`.
pub type HalfEdge = usize;

#[inline]
pub fn vertex_of(h: HalfEdge) -> usize {
    h / 4
}

#[inline]
pub fn slot_of(h: HalfEdge) -> usize {
    h % 4
}

/// The half-edge opposite to `h` at the same vertex.
#[inline]
pub fn opposite(h: HalfEdge) -> HalfEdge {
    h ^ 2
}

#[inline]
pub fn are_opposite(a: HalfEdge, b: HalfEdge) -> bool {
    vertex_of(a) == vertex_of(b) && opposite(a) == b
}

/// One of the two ways to split a vertex's slots into adjacent pairs.
///
/// `A` pairs `(0,1),(2,3)`; `B` pairs `(0,3),(1,2)`. The same two values
/// describe both a smoothing and a rotating circuit's transition at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pairing {
    A,
    B,
}

impl Pairing {
    /// The slot glued to `slot` under this pairing.
    #[inline]
    pub fn mate(self, slot: usize) -> usize {
        match self {
            Pairing::A => slot ^ 1,
            Pairing::B => 3 - slot,
        }
    }

    /// Half-edge version of [`Pairing::mate`].
    #[inline]
    pub fn mate_half_edge(self, h: HalfEdge) -> HalfEdge {
        4 * vertex_of(h) + self.mate(slot_of(h))
    }

    pub fn other(self) -> Pairing {
        match self {
            Pairing::A => Pairing::B,
            Pairing::B => Pairing::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SmoothingChoice {
    pub vertex: usize,
    pub pairing: Pairing,
}

impl SmoothingChoice {
    pub fn new(vertex: usize, pairing: Pairing) -> Self {
        SmoothingChoice { vertex, pairing }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FramedFourGraph {
    partner: Vec<HalfEdge>,
    free_circles: usize,
}

impl FramedFourGraph {
    /// Builds a graph from a partner table of length `4 * vertex_count`.
    pub fn from_partner(partner: Vec<HalfEdge>, free_circles: usize) -> Result<Self> {
        if !partner.len().is_multiple_of(4) {
            return Err(Error::InvalidPairing(format!(
                "{} half-edges is not a multiple of 4",
                partner.len()
            )));
        }
        for (h, &p) in partner.iter().enumerate() {
            if p >= partner.len() {
                return Err(Error::InvalidPairing(format!("half-edge {h} points to {p}")));
            }
            if p == h {
                return Err(Error::InvalidPairing(format!("half-edge {h} is matched to itself")));
            }
            if partner[p] != h {
                return Err(Error::InvalidPairing(format!(
                    "half-edge {h} -> {p} but {p} -> {}",
                    partner[p]
                )));
            }
        }
        Ok(FramedFourGraph { partner, free_circles })
    }

    /// Builds a graph from an edge list; every half-edge must occur exactly once.
    pub fn from_edges(vertex_count: usize, edges: &[(HalfEdge, HalfEdge)], free_circles: usize) -> Result<Self> {
        let mut partner = vec![usize::MAX; 4 * vertex_count];
        for &(a, b) in edges {
            for h in [a, b] {
                if h >= partner.len() {
                    return Err(Error::InvalidPairing(format!("half-edge {h} out of range")));
                }
                if partner[h] != usize::MAX {
                    return Err(Error::InvalidPairing(format!("half-edge {h} used twice")));
                }
            }
            if a == b {
                return Err(Error::InvalidPairing(format!("half-edge {a} is matched to itself")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(h) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPairing(format!("half-edge {h} is unmatched")));
        }
        Self::from_partner(partner, free_circles)
    }

    /// `k` vertex-free circles.
    pub fn circles(k: usize) -> Self {
        FramedFourGraph {
            partner: Vec::new(),
            free_circles: k,
        }
    }

    pub fn empty() -> Self {
        Self::circles(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.partner.len() / 4
    }

    pub fn half_edge_count(&self) -> usize {
        self.partner.len()
    }

    /// Edges between vertices; free circles are not counted.
    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    #[inline]
    pub fn partner(&self, h: HalfEdge) -> HalfEdge {
        self.partner[h]
    }

    pub fn partner_table(&self) -> &[HalfEdge] {
        &self.partner
    }

    /// Edges as `(low, high)` half-edge pairs, sorted by `low`.
    pub fn edges(&self) -> Vec<(HalfEdge, HalfEdge)> {
        (0..self.partner.len())
            .filter(|&h| h < self.partner[h])
            .map(|h| (h, self.partner[h]))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty() && self.free_circles == 0
    }

    /// Number of connected components, free circles included.
    pub fn component_count(&self) -> usize {
        self.vertex_components().len() + self.free_circles
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex >= self.vertex_count() {
            return Err(Error::UnknownVertex {
                vertex,
                count: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Smooths one vertex: its slots are glued in adjacent pairs and the vertex
    /// disappears. Chains of glued slots that never leave the vertex become
    /// free circles. Vertices after the smoothed one shift down by one.
    pub fn smooth(&self, choice: SmoothingChoice) -> Result<FramedFourGraph> {
        self.check_vertex(choice.vertex)?;
        let v = choice.vertex;
        let base = 4 * v;
        let inside = |h: HalfEdge| vertex_of(h) == v;
        let mate = |h: HalfEdge| base + choice.pairing.mate(h - base);

        let mut partner = self.partner.clone();
        let mut seen = [false; 4];
        for s in 0..4 {
            let outer = self.partner[base + s];
            if inside(outer) || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut cur = mate(base + s);
            let far = loop {
                seen[cur - base] = true;
                let next = self.partner[cur];
                if !inside(next) {
                    break next;
                }
                seen[next - base] = true;
                cur = mate(next);
            };
            partner[outer] = far;
            partner[far] = outer;
        }

        let mut circles = self.free_circles;
        for s in 0..4 {
            if seen[s] {
                continue;
            }
            let start = base + s;
            let mut cur = start;
            loop {
                seen[cur - base] = true;
                let m = mate(cur);
                seen[m - base] = true;
                cur = self.partner[m];
                if cur == start {
                    break;
                }
            }
            circles += 1;
        }

        let shift = |h: HalfEdge| if vertex_of(h) > v { h - 4 } else { h };
        let partner: Vec<HalfEdge> = partner
            .iter()
            .enumerate()
            .filter(|&(h, _)| !inside(h))
            .map(|(_, &p)| shift(p))
            .collect();
        Ok(FramedFourGraph {
            partner,
            free_circles: circles,
        })
    }

    /// Vertex sets of the components that carry vertices, each sorted, ordered
    /// by smallest vertex.
    pub fn vertex_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for s in 0..4 {
                    let w = vertex_of(self.partner[4 * v + s]);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The subgraph on a set of vertices closed under adjacency.
    pub fn induced(&self, vertices: &[usize]) -> FramedFourGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut partner = Vec::with_capacity(4 * vertices.len());
        for &v in vertices {
            for s in 0..4 {
                let p = self.partner[4 * v + s];
                let w = index[vertex_of(p)];
                assert!(w != usize::MAX, "vertex set is not closed under adjacency");
                partner.push(4 * w + slot_of(p));
            }
        }
        FramedFourGraph {
            partner,
            free_circles: 0,
        }
    }

    /// Connected components: vertex components first (ordered by smallest
    /// vertex), then one single-circle graph per free circle.
    pub fn components(&self) -> Vec<FramedFourGraph> {
        let mut out: Vec<FramedFourGraph> = self.vertex_components().iter().map(|vs| self.induced(vs)).collect();
        out.extend((0..self.free_circles).map(|_| FramedFourGraph::circles(1)));
        out
    }

    /// Removes the component at `index` in [`FramedFourGraph::components`] order.
    pub fn delete_component(&self, index: usize) -> Result<FramedFourGraph> {
        let comps = self.vertex_components();
        if index < comps.len() {
            let keep: Vec<usize> = (0..self.vertex_count())
                .filter(|v| comps[index].binary_search(v).is_err())
                .collect();
            let mut g = self.induced(&keep);
            g.free_circles = self.free_circles;
            Ok(g)
        } else if index < comps.len() + self.free_circles {
            let mut g = self.clone();
            g.free_circles -= 1;
            Ok(g)
        } else {
            Err(Error::UnknownVertex {
                vertex: index,
                count: comps.len() + self.free_circles,
            })
        }
    }

    /// Disjoint union; vertices of later graphs come after earlier ones.
    pub fn disjoint_union<'a>(graphs: impl IntoIterator<Item = &'a FramedFourGraph>) -> Self {
        let mut partner = Vec::new();
        let mut circles = 0;
        for g in graphs {
            let offset = partner.len();
            partner.extend(g.partner.iter().map(|&p| p + offset));
            circles += g.free_circles;
        }
        FramedFourGraph {
            partner,
            free_circles: circles,
        }
    }

    /// All source-sink structures.
    ///
    /// Each vertex gets a type bit: type 0 means slots 0 and 2 are incoming,
    /// type 1 means slots 1 and 3 are. An edge joining slots `s` and `t` forces
    /// the type bits of its endpoints to differ by `1 ^ (s&1) ^ (t&1)`. Each
    /// consistent component contributes two structures, as does every circle.
    pub fn source_sink_structures(&self) -> Vec<SourceSinkStructure> {
        let n = self.vertex_count();
        let mut uf = ParityUnionFind::new(n);
        for (a, b) in self.edges() {
            let parity = 1 ^ (slot_of(a) & 1) ^ (slot_of(b) & 1);
            if uf.union(vertex_of(a), vertex_of(b), parity as u8).is_err() {
                return Vec::new();
            }
        }
        let comps = self.vertex_components();
        let free_bits = comps.len() + self.free_circles;
        let mut out = Vec::with_capacity(1 << free_bits);
        for mask in 0u64..(1u64 << free_bits) {
            let mut vertex_type = vec![0u8; n];
            for (c, members) in comps.iter().enumerate() {
                let seed_type = ((mask >> c) & 1) as u8;
                let root = members[0];
                for &v in members {
                    vertex_type[v] = seed_type ^ uf.parity_between(root, v).unwrap();
                }
            }
            let incoming = (0..4 * n)
                .map(|h| (slot_of(h) as u8 & 1) == vertex_type[vertex_of(h)])
                .collect();
            let circle_orientation = (0..self.free_circles)
                .map(|i| (mask >> (comps.len() + i)) & 1 == 1)
                .collect();
            out.push(SourceSinkStructure {
                incoming,
                circle_orientation,
            });
        }
        out
    }

    pub fn has_source_sink_structure(&self) -> bool {
        let mut uf = ParityUnionFind::new(self.vertex_count());
        self.edges().into_iter().all(|(a, b)| {
            let parity = 1 ^ (slot_of(a) & 1) ^ (slot_of(b) & 1);
            uf.union(vertex_of(a), vertex_of(b), parity as u8).is_ok()
        })
    }
}

/// An orientation of every edge (recorded per half-edge: `incoming[h]` is
/// true when the edge points into `h`'s vertex through `h`) plus one
/// orientation bit per free circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SourceSinkStructure {
    pub incoming: Vec<bool>,
    pub circle_orientation: Vec<bool>,
}

impl SourceSinkStructure {
    /// Checks the orientation against `g`: every edge has one head and one
    /// tail, and every vertex has one opposite pair incoming, the other outgoing.
    pub fn is_valid_for(&self, g: &FramedFourGraph) -> bool {
        if self.incoming.len() != g.half_edge_count() || self.circle_orientation.len() != g.free_circles() {
            return false;
        }
        let edges_ok = g.edges().into_iter().all(|(a, b)| self.incoming[a] != self.incoming[b]);
        let vertices_ok = (0..g.vertex_count()).all(|v| {
            let i = &self.incoming[4 * v..4 * v + 4];
            i[0] == i[2] && i[1] == i[3] && i[0] != i[1]
        });
        edges_ok && vertices_ok
    }
}
