use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::hgraph::{shortest_odd_cycle, Evidence};
use super::ObstructionKind;
use crate::circuit::{rotating_circuit, RotatingCircuit};
use crate::diagram::FramedChordDiagram;
use crate::graph::FramedFourGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarityWitness {
    /// Two families of chords, each pairwise unlinked.
    Bipartition {
        first: Vec<u32>,
        second: Vec<u32>,
    },
    Obstruction {
        kind: ObstructionKind,
        evidence: Evidence,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPlanarity {
    pub diagram: FramedChordDiagram,
    pub witness: PlanarityWitness,
}

impl ComponentPlanarity {
    pub fn is_planar(&self) -> bool {
        matches!(self.witness, PlanarityWitness::Bipartition { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarityVerdict {
    pub planar: bool,
    /// One entry per component, in [`FramedFourGraph::components`] order.
    pub components: Vec<ComponentPlanarity>,
}

/// Planarity of one chord diagram: a framing-1 chord is a Γ obstruction;
/// otherwise the interlacement graph must be bipartite, and a shortest odd
/// cycle is a Δ obstruction.
pub fn planarity_of_diagram(d: &FramedChordDiagram) -> PlanarityWitness {
    if let Some((&c, _)) = d.framings().iter().find(|&(_, &f)| f == 1) {
        return PlanarityWitness::Obstruction {
            kind: ObstructionKind::Gamma,
            evidence: Evidence::TwistedChord(c),
        };
    }
    let ig = d.interlacement_graph();
    let n = ig.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut bipartite = true;
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in 0..n {
                if !ig.adjacency[u][w] {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    bipartite = false;
                }
            }
        }
    }
    if bipartite {
        let pick = |c: u8| (0..n).filter(|&i| color[i] == c).map(|i| ig.labels[i]).collect();
        return PlanarityWitness::Bipartition {
            first: pick(0),
            second: pick(1),
        };
    }
    let cycle = shortest_odd_cycle(&ig.adjacency).expect("non-bipartite graph has an odd cycle");
    PlanarityWitness::Obstruction {
        kind: ObstructionKind::Delta,
        evidence: Evidence::OddCycle(cycle.into_iter().map(|i| ig.labels[i]).collect()),
    }
}

pub fn planarity_with_circuit(c: &RotatingCircuit) -> ComponentPlanarity {
    let diagram = c.chord_diagram();
    let witness = planarity_of_diagram(&diagram);
    ComponentPlanarity { diagram, witness }
}

/// Decides planarity component by component using the deterministic circuit.
pub fn is_planar(g: &FramedFourGraph) -> PlanarityVerdict {
    let components: Vec<ComponentPlanarity> = g
        .components()
        .iter()
        .map(|comp| planarity_with_circuit(&rotating_circuit(comp).expect("component is connected")))
        .collect();
    PlanarityVerdict {
        planar: components.iter().all(ComponentPlanarity::is_planar),
        components,
    }
}

/// Two pairwise-unlinked families covering every chord of an all-framing-0 diagram.
pub fn validate_bipartition(d: &FramedChordDiagram, first: &[u32], second: &[u32]) -> bool {
    let mut all: Vec<u32> = first.iter().chain(second).copied().collect();
    all.sort_unstable();
    if all != d.labels() || d.framings().values().any(|&f| f == 1) {
        return false;
    }
    let unlinked = |side: &[u32]| {
        side.iter()
            .enumerate()
            .all(|(i, &a)| side[i + 1..].iter().all(|&b| !d.linked(a, b).unwrap()))
    };
    unlinked(first) && unlinked(second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{delta, gamma};

    #[test]
    fn gamma_and_delta_are_not_planar() {
        let v = is_planar(&gamma());
        assert!(!v.planar);
        assert!(matches!(
            v.components[0].witness,
            PlanarityWitness::Obstruction {
                kind: ObstructionKind::Gamma,
                ..
            }
        ));
        let v = is_planar(&delta());
        assert!(!v.planar);
        assert!(matches!(
            v.components[0].witness,
            PlanarityWitness::Obstruction {
                kind: ObstructionKind::Delta,
                ..
            }
        ));
    }

    #[test]
    fn two_linked_chords_are_planar() {
        let d = FramedChordDiagram::from_word(&[1, 2, 1, 2], &[0, 0]).unwrap();
        let v = is_planar(&d.realize());
        assert!(v.planar);
        match &v.components[0].witness {
            PlanarityWitness::Bipartition { first, second } => {
                assert_eq!((first.as_slice(), second.as_slice()), (&[1][..], &[2][..]));
                assert!(validate_bipartition(&v.components[0].diagram, first, second));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_graph_and_circles_are_planar() {
        assert!(is_planar(&FramedFourGraph::empty()).planar);
        let v = is_planar(&FramedFourGraph::circles(2));
        assert!(v.planar);
        assert_eq!(v.components.len(), 2);
    }
}
