use serde::{Deserialize, Serialize};

use super::hgraph::{build_h, forced_two_coloring, Evidence, Split};
use super::planarity::planarity_of_diagram;
use super::ObstructionKind;
use crate::circuit::{rotating_circuit, RotatingCircuit};
use crate::diagram::FramedChordDiagram;
use crate::graph::FramedFourGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rp2Witness {
    Split(Split),
    Obstruction { kind: ObstructionKind, evidence: Evidence },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRp2 {
    pub diagram: FramedChordDiagram,
    pub planar: bool,
    pub witness: Rp2Witness,
}

impl ComponentRp2 {
    pub fn is_embeddable(&self) -> bool {
        matches!(self.witness, Rp2Witness::Split(_))
    }
}

/// How component verdicts combine for a disconnected graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentPolicy {
    /// Every component is judged on its own.
    #[default]
    PerComponent,
    /// The projective plane has room for one cross-cap: additionally at most
    /// one component may be non-planar.
    SingleCrossCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rp2Verdict {
    pub embeddable: bool,
    pub policy: ComponentPolicy,
    pub components: Vec<ComponentRp2>,
}

pub fn rp2_of_diagram(d: &FramedChordDiagram) -> Rp2Witness {
    match forced_two_coloring(&build_h(d)) {
        Ok(split) => Rp2Witness::Split(split),
        Err(evidence) => {
            let kind = match &evidence {
                Evidence::OddCycle(c) if c.iter().all(|l| d.framings()[l] == 0) => ObstructionKind::Delta,
                _ => ObstructionKind::Gamma1,
            };
            Rp2Witness::Obstruction { kind, evidence }
        }
    }
}

pub fn rp2_with_circuit(c: &RotatingCircuit) -> ComponentRp2 {
    let diagram = c.chord_diagram();
    let planar = matches!(
        planarity_of_diagram(&diagram),
        super::planarity::PlanarityWitness::Bipartition { .. }
    );
    let witness = rp2_of_diagram(&diagram);
    ComponentRp2 {
        diagram,
        planar,
        witness,
    }
}

/// Checkerboard embeddability in the projective plane, judging each component
/// on its own.
pub fn rp2_checkerboard_embeddable(g: &FramedFourGraph) -> Rp2Verdict {
    rp2_checkerboard_embeddable_with(g, ComponentPolicy::PerComponent)
}

pub fn rp2_checkerboard_embeddable_with(g: &FramedFourGraph, policy: ComponentPolicy) -> Rp2Verdict {
    let components: Vec<ComponentRp2> = g
        .components()
        .iter()
        .map(|comp| rp2_with_circuit(&rotating_circuit(comp).expect("component is connected")))
        .collect();
    let all_pass = components.iter().all(ComponentRp2::is_embeddable);
    let embeddable = match policy {
        ComponentPolicy::PerComponent => all_pass,
        ComponentPolicy::SingleCrossCap => all_pass && components.iter().filter(|c| !c.planar).count() <= 1,
    };
    Rp2Verdict {
        embeddable,
        policy,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{delta, gamma, gamma1};
    use crate::obstructions::validate_split;

    #[test]
    fn named_graph_verdicts() {
        let v = rp2_checkerboard_embeddable(&gamma());
        assert!(v.embeddable);
        match &v.components[0].witness {
            Rp2Witness::Split(s) => {
                assert!(s.d1.is_empty());
                assert_eq!(s.d2, vec![1]);
                assert!(validate_split(&v.components[0].diagram, s));
            }
            other => panic!("{other:?}"),
        }
        let v = rp2_checkerboard_embeddable(&gamma1());
        assert!(!v.embeddable);
        assert!(matches!(
            v.components[0].witness,
            Rp2Witness::Obstruction {
                kind: ObstructionKind::Gamma1,
                ..
            }
        ));
        let v = rp2_checkerboard_embeddable(&delta());
        assert!(!v.embeddable);
        assert!(matches!(
            v.components[0].witness,
            Rp2Witness::Obstruction {
                kind: ObstructionKind::Delta,
                ..
            }
        ));
    }

    #[test]
    fn single_cross_cap_policy() {
        let two = FramedFourGraph::disjoint_union([&gamma(), &gamma()]);
        assert!(rp2_checkerboard_embeddable(&two).embeddable);
        assert!(!rp2_checkerboard_embeddable_with(&two, ComponentPolicy::SingleCrossCap).embeddable);
        let one = FramedFourGraph::disjoint_union([&gamma(), &FramedFourGraph::circles(3)]);
        assert!(rp2_checkerboard_embeddable_with(&one, ComponentPolicy::SingleCrossCap).embeddable);
    }
}
