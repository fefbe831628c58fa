//! Rotating circuits: closed traversals that use every edge once and, at each
//! vertex passage, turn to an adjacent (never the opposite) half-edge.
//!
//! A circuit is determined by its graph and a transition [`Pairing`] per
//! vertex; the traversal starts by entering vertex 0 through slot 0.

use crate::diagram::FramedChordDiagram;
use crate::error::{Error, Result};
use crate::graph::{are_opposite, vertex_of, FramedFourGraph, HalfEdge, Pairing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RotatingCircuit {
    graph: FramedFourGraph,
    transitions: Vec<Pairing>,
    /// Half-edges the traversal leaves through, in order. Empty for a circle.
    departures: Vec<HalfEdge>,
}

/// One traversal step: leave through `from`, arrive through `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub from: HalfEdge,
    pub to: HalfEdge,
}

/// Closed curves produced by a transition assignment, as departure lists.
fn closed_curves(g: &FramedFourGraph, transitions: &[Pairing]) -> Vec<Vec<HalfEdge>> {
    let mut used = vec![false; g.half_edge_count()];
    let mut curves = Vec::new();
    for start_entry in 0..g.half_edge_count() {
        if used[start_entry] {
            continue;
        }
        let mut curve = Vec::new();
        let mut entry = start_entry;
        loop {
            let dep = transitions[vertex_of(entry)].mate_half_edge(entry);
            used[entry] = true;
            used[dep] = true;
            curve.push(dep);
            entry = g.partner(dep);
            if entry == start_entry {
                break;
            }
        }
        curves.push(curve);
    }
    curves
}

fn check_connected(g: &FramedFourGraph) -> Result<()> {
    let c = g.component_count();
    if c != 1 {
        return Err(Error::Disconnected(c));
    }
    Ok(())
}

impl RotatingCircuit {
    /// Builds the circuit for an explicit transition assignment.
    pub fn with_transitions(g: &FramedFourGraph, transitions: Vec<Pairing>) -> Result<Self> {
        check_connected(g)?;
        if transitions.len() != g.vertex_count() {
            return Err(Error::UnknownVertex {
                vertex: transitions.len(),
                count: g.vertex_count(),
            });
        }
        if g.vertex_count() == 0 {
            return Ok(RotatingCircuit {
                graph: g.clone(),
                transitions,
                departures: Vec::new(),
            });
        }
        let curves = closed_curves(g, &transitions);
        if curves.len() != 1 {
            return Err(Error::SplitTraversal(curves.len()));
        }
        // curves[0] starts by entering half-edge 0 (vertex 0, slot 0)
        let departures = curves.into_iter().next().unwrap();
        Ok(RotatingCircuit {
            graph: g.clone(),
            transitions,
            departures,
        })
    }

    pub fn graph(&self) -> &FramedFourGraph {
        &self.graph
    }

    pub fn transitions(&self) -> &[Pairing] {
        &self.transitions
    }

    pub fn transition(&self, vertex: usize) -> Pairing {
        self.transitions[vertex]
    }

    pub fn departures(&self) -> &[HalfEdge] {
        &self.departures
    }

    pub fn is_circle(&self) -> bool {
        self.departures.is_empty()
    }

    pub fn len(&self) -> usize {
        self.departures.len().max(1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> Vec<Step> {
        self.departures
            .iter()
            .map(|&from| Step {
                from,
                to: self.graph.partner(from),
            })
            .collect()
    }

    /// Half-edge through which passage `i` enters its vertex.
    pub fn entry(&self, i: usize) -> HalfEdge {
        let n = self.departures.len();
        self.graph.partner(self.departures[(i + n - 1) % n])
    }

    /// Whether the two passages through `vertex` enter along opposite half-edges.
    pub fn is_good_at(&self, vertex: usize) -> bool {
        let entries: Vec<HalfEdge> = (0..self.departures.len())
            .filter(|&i| vertex_of(self.departures[i]) == vertex)
            .map(|i| self.entry(i))
            .collect();
        are_opposite(entries[0], entries[1])
    }

    /// The framed chord diagram of this circuit. Chord `v + 1` stands for
    /// vertex `v`; its framing is 0 at good vertices and 1 at bad ones.
    pub fn chord_diagram(&self) -> FramedChordDiagram {
        let word: Vec<u32> = self.departures.iter().map(|&h| vertex_of(h) as u32 + 1).collect();
        let framings = (0..self.graph.vertex_count())
            .map(|v| (v as u32 + 1, u8::from(!self.is_good_at(v))))
            .collect();
        FramedChordDiagram::new(word, framings).expect("circuit passes each vertex twice")
    }

    /// Switches the transition at every listed vertex simultaneously.
    pub fn change_transitions(&self, vertices: &[usize]) -> Result<Self> {
        let mut transitions = self.transitions.clone();
        for &v in vertices {
            if v >= transitions.len() {
                return Err(Error::UnknownVertex {
                    vertex: v,
                    count: transitions.len(),
                });
            }
            transitions[v] = transitions[v].other();
        }
        Self::with_transitions(&self.graph, transitions)
    }

    /// Switches the transition at one vertex. Fails when the traversal would
    /// fall apart into two closed curves, which happens exactly at good vertices.
    pub fn change_transition(&self, vertex: usize) -> Result<Self> {
        self.change_transitions(&[vertex])
    }
}

/// A deterministic rotating circuit of a connected graph.
///
/// Starts from transition `A` everywhere and, while the traversal has more
/// than one closed curve, switches the lowest vertex shared by two curves.
/// Switching at such a vertex always merges the two curves.
pub fn rotating_circuit(g: &FramedFourGraph) -> Result<RotatingCircuit> {
    check_connected(g)?;
    let n = g.vertex_count();
    let mut transitions = vec![Pairing::A; n];
    loop {
        let curves = closed_curves(g, &transitions);
        if curves.len() <= 1 {
            return RotatingCircuit::with_transitions(g, transitions);
        }
        let mut curve_of = vec![usize::MAX; g.half_edge_count()];
        for (c, curve) in curves.iter().enumerate() {
            for &dep in curve {
                curve_of[dep] = c;
            }
        }
        let v = (0..n)
            .find(|&v| {
                let first = curve_of[4 * v..4 * v + 4]
                    .iter()
                    .copied()
                    .find(|&c| c != usize::MAX)
                    .unwrap();
                curve_of[4 * v..4 * v + 4]
                    .iter()
                    .any(|&c| c != usize::MAX && c != first)
            })
            .expect("a connected graph with several curves has a shared vertex");
        transitions[v] = transitions[v].other();
    }
}

/// Every rotating circuit of a connected graph, one per transition assignment
/// that yields a single closed traversal.
pub fn all_rotating_circuits(g: &FramedFourGraph) -> Result<Vec<RotatingCircuit>> {
    check_connected(g)?;
    let n = g.vertex_count();
    assert!(n < 26, "exhaustive circuit enumeration is for small graphs");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let transitions: Vec<Pairing> = (0..n)
            .map(|v| if mask >> v & 1 == 0 { Pairing::A } else { Pairing::B })
            .collect();
        if let Ok(c) = RotatingCircuit::with_transitions(g, transitions) {
            out.push(c);
        }
    }
    Ok(out)
}

/// The circuit of `d.realize()` with transition `A` at every vertex. Its
/// diagram is `d` rotated to start at the first endpoint of the smallest label.
pub fn standard_circuit(d: &FramedChordDiagram) -> RotatingCircuit {
    let g = d.realize();
    RotatingCircuit::with_transitions(&g, vec![Pairing::A; g.vertex_count()])
        .expect("realized diagrams close up under transition A")
}
