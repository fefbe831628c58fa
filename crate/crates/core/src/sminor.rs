//! s-minors: smooth some vertices, keep an edge subset with every vertex of
//! valency 0, 2 or 4, dissolve the valency-2 vertices, then delete
//! components. Allowing smoothings first makes every minor an s-minor.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{slot_of, vertex_of, FramedFourGraph, HalfEdge, Pairing, SmoothingChoice};
use crate::minor::component_deletions;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SMinorWitness {
    /// Smoothings applied to the host first, in order.
    #[serde(default)]
    pub smoothings: Vec<SmoothingChoice>,
    /// Kept edges of the smoothed host as `(low, high)` half-edge pairs.
    pub kept_edges: Vec<(HalfEdge, HalfEdge)>,
    /// Vertices of the smoothed host of valency 2 in the kept subgraph.
    pub suppressed: Vec<usize>,
    /// Components of the reduced graph to delete, descending.
    pub deleted_components: Vec<usize>,
}

impl SMinorWitness {
    pub fn replay(&self, host: &FramedFourGraph) -> Result<FramedFourGraph> {
        let mut smoothed = host.clone();
        for &c in &self.smoothings {
            smoothed = smoothed.smooth(c)?;
        }
        let (mut g, suppressed) = reduce_subgraph(&smoothed, &self.kept_edges)?;
        if suppressed != self.suppressed {
            return Err(Error::BadWitness("suppressed vertex list does not match".into()));
        }
        for &i in &self.deleted_components {
            g = g.delete_component(i)?;
        }
        Ok(g)
    }
}

/// Passes to the subgraph made of `kept` edges (plus the host's free circles)
/// and dissolves its valency-2 vertices. Surviving 4-valent vertices keep
/// their slots and hence their framing; closed curves through dissolved
/// vertices only become free circles. Returns the graph and the dissolved
/// vertices.
pub fn reduce_subgraph(host: &FramedFourGraph, kept: &[(HalfEdge, HalfEdge)]) -> Result<(FramedFourGraph, Vec<usize>)> {
    let n = host.vertex_count();
    let mut in_subgraph = vec![false; host.half_edge_count()];
    for &(a, b) in kept {
        if a >= host.half_edge_count() || host.partner(a) != b {
            return Err(Error::BadWitness(format!("({a}, {b}) is not a host edge")));
        }
        in_subgraph[a] = true;
        in_subgraph[b] = true;
    }
    let valency: Vec<usize> = (0..n)
        .map(|v| (0..4).filter(|&s| in_subgraph[4 * v + s]).count())
        .collect();
    if let Some(v) = (0..n).find(|&v| valency[v] % 2 == 1) {
        return Err(Error::BadWitness(format!("vertex {v} has odd valency")));
    }
    let mut new_index = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if valency[v] == 4 {
            new_index[v] = count;
            count += 1;
        }
    }
    let suppressed: Vec<usize> = (0..n).filter(|&v| valency[v] == 2).collect();
    let other_kept = |h: HalfEdge| -> HalfEdge {
        let v = vertex_of(h);
        (0..4).map(|s| 4 * v + s).find(|&x| x != h && in_subgraph[x]).unwrap()
    };

    let mut partner = vec![0usize; 4 * count];
    let mut visited = vec![false; n];
    for v in 0..n {
        if valency[v] != 4 {
            continue;
        }
        for s in 0..4 {
            let mut cur = host.partner(4 * v + s);
            while valency[vertex_of(cur)] == 2 {
                visited[vertex_of(cur)] = true;
                cur = host.partner(other_kept(cur));
            }
            partner[4 * new_index[v] + s] = 4 * new_index[vertex_of(cur)] + slot_of(cur);
        }
    }
    let mut circles = host.free_circles();
    for &v in &suppressed {
        if visited[v] {
            continue;
        }
        let start = v;
        let mut cur = (0..4).map(|s| 4 * v + s).find(|&x| in_subgraph[x]).unwrap();
        loop {
            visited[vertex_of(cur)] = true;
            let next = host.partner(other_kept(cur));
            if vertex_of(next) == start {
                break;
            }
            cur = next;
        }
        circles += 1;
    }
    Ok((FramedFourGraph::from_partner(partner, circles)?, suppressed))
}

/// Exhaustive s-minor search: every way of smoothing a vertex set (fewest
/// smoothings first, isomorphic results skipped), then every even edge
/// subset, largest first.
pub fn has_s_minor(g: &FramedFourGraph, pattern: &FramedFourGraph) -> Option<SMinorWitness> {
    let n = g.vertex_count();
    assert!(n <= 15, "exhaustive s-minor search is for small graphs");
    let mut plans: Vec<Vec<SmoothingChoice>> = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let mut rest = code;
        let mut plan = Vec::new();
        for v in 0..n {
            match rest % 3 {
                1 => plan.push(SmoothingChoice::new(v, Pairing::A)),
                2 => plan.push(SmoothingChoice::new(v, Pairing::B)),
                _ => {}
            }
            rest /= 3;
        }
        if n - plan.len() >= pattern.vertex_count() {
            // highest vertex first so earlier indices stay valid
            plan.reverse();
            plans.push(plan);
        }
    }
    plans.sort_by_key(Vec::len);
    let mut seen = HashSet::new();
    for plan in plans {
        let mut h = g.clone();
        for &c in &plan {
            h = h.smooth(c).expect("vertex in range");
        }
        if !seen.insert(canonical_form(&h)) {
            continue;
        }
        if let Some(mut w) = even_subgraph_search(&h, pattern) {
            w.smoothings = plan;
            return Some(w);
        }
    }
    None
}

fn even_subgraph_search(g: &FramedFourGraph, pattern: &FramedFourGraph) -> Option<SMinorWitness> {
    let edges = g.edges();
    let full = (1u32 << edges.len()) - 1;
    let n = g.vertex_count();
    for mask in (0..=full).rev() {
        let mut valency = vec![0u8; n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                valency[vertex_of(a)] += 1;
                valency[vertex_of(b)] += 1;
            }
        }
        if valency.iter().any(|&d| d % 2 == 1) {
            continue;
        }
        if valency.iter().filter(|&&d| d == 4).count() < pattern.vertex_count() {
            continue;
        }
        let kept: Vec<(HalfEdge, HalfEdge)> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let (reduced, suppressed) = reduce_subgraph(g, &kept).expect("even subgraph");
        if let Some(deleted_components) = component_deletions(&reduced, pattern) {
            return Some(SMinorWitness {
                smoothings: Vec::new(),
                kept_edges: kept,
                suppressed,
                deleted_components,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::named::{delta, gamma, gamma1};

    #[test]
    fn delta_has_gamma_s_minor() {
        let w = has_s_minor(&delta(), &gamma()).unwrap();
        assert!(is_isomorphic(&w.replay(&delta()).unwrap(), &gamma()));
        assert!(w.smoothings.is_empty());
        assert_eq!(w.suppressed.len(), 2);
    }

    #[test]
    fn minors_are_s_minors() {
        // one smoothing turns "1 2 1 2" with a twisted chord into Γ
        let g = crate::diagram::FramedChordDiagram::from_word(&[1, 2, 1, 2], &[0, 1])
            .unwrap()
            .realize();
        let w = has_s_minor(&g, &gamma()).unwrap();
        assert_eq!(w.smoothings.len(), 1);
        assert!(is_isomorphic(&w.replay(&g).unwrap(), &gamma()));
        for m in crate::minor::minor_closure(&delta()) {
            assert!(has_s_minor(&delta(), &m).is_some());
        }
    }

    #[test]
    fn identity_witness() {
        for g in [gamma(), delta(), gamma1()] {
            let w = has_s_minor(&g, &g).unwrap();
            assert_eq!(w.kept_edges.len(), g.edge_count());
            assert!(w.smoothings.is_empty());
            assert!(w.suppressed.is_empty());
            assert!(w.deleted_components.is_empty());
        }
    }

    #[test]
    fn circle_has_no_gamma() {
        assert!(has_s_minor(&FramedFourGraph::circles(1), &gamma()).is_none());
    }

    #[test]
    fn odd_valency_rejected() {
        let g = delta();
        let e = g.edges()[0];
        assert!(reduce_subgraph(&g, &[e]).is_err());
        assert!(reduce_subgraph(&g, &[(0, 0)]).is_err());
    }

    #[test]
    fn dissolving_a_cycle_leaves_a_circle() {
        let g = gamma();
        let (r, s) = reduce_subgraph(&g, &[(0, 2)]).unwrap();
        assert_eq!(r, FramedFourGraph::circles(1));
        assert_eq!(s, vec![0]);
    }
}
