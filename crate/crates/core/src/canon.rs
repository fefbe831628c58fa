//! Canonical forms and framing-preserving isomorphism.
//!
//! A relabeling may permute vertices and, at each vertex, apply any of the
//! eight slot permutations that keep the opposite pairs `{0,2}` and `{1,3}`.
//! The canonical code of a connected component is the lexicographically
//! smallest partner table over all breadth-first relabelings.

use sha2::{Digest, Sha256};

use crate::graph::{slot_of, vertex_of, FramedFourGraph};

/// Isomorphism invariant of a whole graph: sorted component codes plus the
/// number of free circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub components: Vec<Vec<u32>>,
    pub free_circles: usize,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.len() / 4).sum()
    }

    /// Short stable hex digest, used as a graph fingerprint in witnesses.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"f4g1");
        hasher.update((self.free_circles as u64).to_le_bytes());
        for c in &self.components {
            hasher.update((c.len() as u64).to_le_bytes());
            for &x in c {
                hasher.update(x.to_le_bytes());
            }
        }
        let digest = hasher.finalize();
        digest[..12].iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn slot_map(first: usize, flip: bool) -> [usize; 4] {
    // canonical slot -> actual slot
    let side = if flip { (first + 3) % 4 } else { (first + 1) % 4 };
    [first, side, first ^ 2, side ^ 2]
}

/// Canonical code of a connected graph with at least one vertex.
pub fn connected_code(g: &FramedFourGraph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n > 0, "connected_code needs a vertex");
    let mut best: Option<Vec<u32>> = None;
    let mut index = vec![usize::MAX; n];
    let mut to_actual = vec![[0usize; 4]; n];
    let mut order = Vec::with_capacity(n);
    let mut code = vec![0u32; 4 * n];
    let branch_bits = n - 1;

    for root in 0..n {
        for root_first in 0..4 {
            for root_flip in [false, true] {
                for mask in 0u64..(1u64 << branch_bits) {
                    index.iter_mut().for_each(|x| *x = usize::MAX);
                    order.clear();
                    index[root] = 0;
                    to_actual[root] = slot_map(root_first, root_flip);
                    order.push(root);
                    let mut i = 0;
                    while i < order.len() {
                        let v = order[i];
                        i += 1;
                        for c in 0..4 {
                            let p = g.partner(4 * v + to_actual[v][c]);
                            let w = vertex_of(p);
                            if index[w] == usize::MAX {
                                let bit = (mask >> (order.len() - 1)) & 1 == 1;
                                index[w] = order.len();
                                to_actual[w] = slot_map(slot_of(p), bit);
                                order.push(w);
                            }
                        }
                    }
                    debug_assert_eq!(order.len(), n, "graph is not connected");
                    for (ci, &v) in order.iter().enumerate() {
                        for c in 0..4 {
                            let p = g.partner(4 * v + to_actual[v][c]);
                            let w = vertex_of(p);
                            let wc = to_actual[w].iter().position(|&s| s == slot_of(p)).unwrap();
                            code[4 * ci + c] = (4 * index[w] + wc) as u32;
                        }
                    }
                    if best.as_ref().is_none_or(|b| code < *b) {
                        best = Some(code.clone());
                    }
                }
            }
        }
    }
    best.unwrap()
}

pub fn canonical_form(g: &FramedFourGraph) -> CanonicalForm {
    let mut components: Vec<Vec<u32>> = g
        .vertex_components()
        .iter()
        .map(|vs| connected_code(&g.induced(vs)))
        .collect();
    components.sort();
    CanonicalForm {
        components,
        free_circles: g.free_circles(),
    }
}

/// Framing-preserving isomorphism test.
pub fn is_isomorphic(a: &FramedFourGraph, b: &FramedFourGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.free_circles() != b.free_circles() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Rebuilds a graph from its canonical form.
pub fn from_canonical(form: &CanonicalForm) -> FramedFourGraph {
    let parts: Vec<FramedFourGraph> = form
        .components
        .iter()
        .map(|c| {
            FramedFourGraph::from_partner(c.iter().map(|&x| x as usize).collect(), 0)
                .expect("canonical code is a valid pairing")
        })
        .collect();
    let mut g = FramedFourGraph::disjoint_union(&parts);
    g = FramedFourGraph::disjoint_union([&g, &FramedFourGraph::circles(form.free_circles)]);
    g
}
