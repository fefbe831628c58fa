//! Two edge-disjoint closed curves crossing transversally at exactly one
//! vertex: the Γ s-minor.
//!
//! Away from the crossing vertex a curve may go straight or turn. A vertex
//! visited twice must be turned at both times, so the curves only touch
//! there; that vertex is smoothed in the corresponding s-minor.

use serde::{Deserialize, Serialize};

use crate::graph::{are_opposite, slot_of, vertex_of, FramedFourGraph, HalfEdge, Pairing, SmoothingChoice};
use crate::minor::component_deletions;
use crate::named::gamma;
use crate::sminor::{reduce_subgraph, SMinorWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCycles {
    /// The crossing vertex.
    pub vertex: usize,
    /// Departure half-edges of the curve leaving through slot 0 and returning
    /// through slot 2.
    pub first: Vec<HalfEdge>,
    /// Same for slots 1 and 3.
    pub second: Vec<HalfEdge>,
}

impl TwoCycles {
    /// Host edges used by both curves.
    pub fn edges(&self, g: &FramedFourGraph) -> Vec<(HalfEdge, HalfEdge)> {
        let mut e: Vec<(HalfEdge, HalfEdge)> = self
            .first
            .iter()
            .chain(&self.second)
            .map(|&h| {
                let p = g.partner(h);
                (h.min(p), h.max(p))
            })
            .collect();
        e.sort_unstable();
        e
    }

    /// Vertices passed twice, with the pairing of their two turns.
    fn touchings(&self, g: &FramedFourGraph) -> Vec<SmoothingChoice> {
        let mut out = Vec::new();
        let mut count = vec![0u8; g.vertex_count()];
        for &d in self.first.iter().chain(&self.second) {
            let v = vertex_of(d);
            count[v] += 1;
            if count[v] == 2 && v != self.vertex {
                let pairing = if Pairing::A.mate(slot_of(d)) == slot_of(self.arrival_before(g, d)) {
                    Pairing::A
                } else {
                    Pairing::B
                };
                out.push(SmoothingChoice::new(v, pairing));
            }
        }
        out.sort_by_key(|c| std::cmp::Reverse(c.vertex));
        out
    }

    /// The half-edge through which the curve arrived before departing at `d`.
    fn arrival_before(&self, g: &FramedFourGraph, d: HalfEdge) -> HalfEdge {
        for cycle in [&self.first, &self.second] {
            if let Some(i) = cycle.iter().position(|&x| x == d) {
                let prev = cycle[(i + cycle.len() - 1) % cycle.len()];
                return g.partner(prev);
            }
        }
        unreachable!("departure belongs to a curve")
    }

    /// The same witness phrased as an s-minor witness for pattern Γ: smooth
    /// the touching vertices, keep the curves, dissolve the rest.
    pub fn to_s_minor_witness(&self, g: &FramedFourGraph) -> SMinorWitness {
        let smoothings = self.touchings(g);
        let mut h = g.clone();
        for &c in &smoothings {
            h = h.smooth(c).expect("vertex in range");
        }
        let renumber = |v: usize| v - smoothings.iter().filter(|c| c.vertex < v).count();
        let smoothed: Vec<usize> = smoothings.iter().map(|c| c.vertex).collect();
        let mut kept: Vec<(HalfEdge, HalfEdge)> = self
            .first
            .iter()
            .chain(&self.second)
            .filter(|&&d| !smoothed.contains(&vertex_of(d)))
            .map(|&d| {
                let d = 4 * renumber(vertex_of(d)) + slot_of(d);
                let p = h.partner(d);
                (d.min(p), d.max(p))
            })
            .collect();
        kept.sort_unstable();
        let (reduced, suppressed) = reduce_subgraph(&h, &kept).expect("curves form an even subgraph");
        let deleted_components = component_deletions(&reduced, &gamma()).expect("two curves reduce to Γ");
        SMinorWitness {
            smoothings,
            kept_edges: kept,
            suppressed,
            deleted_components,
        }
    }
}

struct Search<'a> {
    g: &'a FramedFourGraph,
    center: usize,
    used: Vec<bool>,
    /// Per vertex: number of passes so far and whether the first went straight.
    passes: Vec<(u8, bool)>,
}

impl Search<'_> {
    /// Extends the current curve from the arrival half-edge `arrival`; `to` is
    /// the slot at the centre that closes it. `done` is called on closure.
    fn extend(
        &mut self,
        arrival: HalfEdge,
        to: usize,
        path: &mut Vec<HalfEdge>,
        done: &mut dyn FnMut(&mut Self, &[HalfEdge]) -> bool,
    ) -> bool {
        if self.used[arrival] {
            return false;
        }
        let w = vertex_of(arrival);
        if w == self.center {
            if slot_of(arrival) != to {
                return false;
            }
            self.used[arrival] = true;
            let snapshot = path.clone();
            let hit = done(self, &snapshot);
            self.used[arrival] = false;
            return hit;
        }
        let (count, first_straight) = self.passes[w];
        if count == 1 && first_straight {
            return false;
        }
        self.used[arrival] = true;
        for s in 0..4 {
            let dep = 4 * w + s;
            if self.used[dep] {
                continue;
            }
            let straight = are_opposite(arrival, dep);
            if count == 1 && straight {
                continue;
            }
            self.used[dep] = true;
            self.passes[w] = (count + 1, if count == 0 { straight } else { first_straight });
            path.push(dep);
            let hit = self.extend(self.g.partner(dep), to, path, done);
            path.pop();
            self.passes[w] = (count, first_straight);
            self.used[dep] = false;
            if hit {
                self.used[arrival] = false;
                return true;
            }
        }
        self.used[arrival] = false;
        false
    }

    /// Starts a curve at centre slot `from`, to close at slot `to`.
    fn curve(&mut self, from: usize, to: usize, done: &mut dyn FnMut(&mut Self, &[HalfEdge]) -> bool) -> bool {
        let dep = 4 * self.center + from;
        self.used[dep] = true;
        let mut path = vec![dep];
        let hit = self.extend(self.g.partner(dep), to, &mut path, done);
        self.used[dep] = false;
        hit
    }
}

/// Searches for two curves forming a Γ s-minor, trying crossing vertices in
/// increasing order.
pub fn gamma_s_minor_witness(g: &FramedFourGraph) -> Option<TwoCycles> {
    for center in 0..g.vertex_count() {
        let mut search = Search {
            g,
            center,
            used: vec![false; g.half_edge_count()],
            passes: vec![(0, false); g.vertex_count()],
        };
        let mut result = None;
        search.curve(0, 2, &mut |s, first| {
            let mut second = None;
            s.curve(1, 3, &mut |_, p| {
                second = Some(p.to_vec());
                true
            });
            match second {
                Some(p) => {
                    result = Some(TwoCycles {
                        vertex: center,
                        first: first.to_vec(),
                        second: p,
                    });
                    true
                }
                None => false,
            }
        });
        if result.is_some() {
            return result;
        }
    }
    None
}
