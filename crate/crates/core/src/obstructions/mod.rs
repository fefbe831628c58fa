//! The planarity and projective-plane deciders, their certificates, and the
//! reduction of a conflict to an explicit obstruction minor.

mod hgraph;
mod materialize;
mod planarity;
mod rp2;
mod two_cycles;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use hgraph::{build_h, forced_two_coloring, validate_split, Evidence, HGraph, Split};
pub use materialize::{materialize_obstruction, materialize_with_circuit};
pub use planarity::{
    is_planar, planarity_of_diagram, planarity_with_circuit, validate_bipartition, ComponentPlanarity,
    PlanarityVerdict, PlanarityWitness,
};
pub use rp2::{
    rp2_checkerboard_embeddable, rp2_checkerboard_embeddable_with, rp2_of_diagram, rp2_with_circuit, ComponentPolicy,
    ComponentRp2, Rp2Verdict, Rp2Witness,
};
pub use two_cycles::{gamma_s_minor_witness, TwoCycles};

use crate::graph::FramedFourGraph;
use crate::named::NamedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    Gamma,
    Delta,
    Gamma1,
}

impl ObstructionKind {
    pub fn graph(self) -> FramedFourGraph {
        match self {
            ObstructionKind::Gamma => NamedGraph::Gamma,
            ObstructionKind::Delta => NamedGraph::Delta,
            ObstructionKind::Gamma1 => NamedGraph::Gamma1,
        }
        .graph()
        .expect("named obstruction graphs are valid")
    }
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionKind::Gamma => "gamma",
            ObstructionKind::Delta => "delta",
            ObstructionKind::Gamma1 => "gamma1",
        })
    }
}
