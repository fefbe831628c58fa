//! Turns a conflict into an explicit smoothing sequence ending at Γ, Δ or Γ₁.
//!
//! The reduction works on a graph together with a rotating circuit. Deleting a
//! chord is the smoothing that follows the circuit's transition at that
//! vertex. Switching the circuit at a vertex changes only the coding, not the
//! graph. For an induced odd cycle `c1 .. c(2k+1)` of the interlacement graph,
//! switching at `c2, c3` together and deleting both leaves the cycle
//! `c1, c4, .., c(2k+1)` with the same framings. On a triangle whose first
//! chord has framing 1, switching at that chord alone unlinks the other two and
//! gives both framing 1.

use std::collections::BTreeMap;

use super::hgraph::Evidence;
use super::ObstructionKind;
use crate::canon::is_isomorphic;
use crate::circuit::{rotating_circuit, RotatingCircuit};
use crate::diagram::FramedChordDiagram;
use crate::error::{Error, Result};
use crate::graph::{FramedFourGraph, SmoothingChoice};
use crate::minor::{MinorStep, MinorWitness};

pub fn materialize_obstruction(g: &FramedFourGraph, evidence: &Evidence) -> Result<MinorWitness> {
    materialize_with_circuit(&rotating_circuit(g)?, evidence)
}

/// Builds and replays the witness for `evidence`, which must refer to the
/// chord diagram of `circuit` (chord `v + 1` is vertex `v`).
pub fn materialize_with_circuit(circuit: &RotatingCircuit, evidence: &Evidence) -> Result<MinorWitness> {
    let d = circuit.chord_diagram();
    let target = check_evidence(&d, evidence)?;
    let mut bench = Bench::new(circuit.clone());
    match evidence {
        Evidence::TwistedChord(a) => bench.keep_only(&[*a])?,
        Evidence::UnlinkedTwistedPair(a, b) => bench.keep_only(&[*a, *b])?,
        Evidence::OddCycle(cycle) => {
            bench.keep_only(cycle)?;
            bench.shrink_cycle(cycle.clone())?;
        }
        Evidence::ForcedPath(path) => {
            bench.keep_only(path)?;
            let a = path[0];
            bench.switch(&[a])?;
            let rest = path[1..].to_vec();
            let mut expected = d.restrict(&rest)?.framings().clone();
            expected.insert(rest[0], 1);
            expected.insert(*rest.last().unwrap(), 0);
            bench.delete(a)?;
            bench.expect_cycle(&rest, &expected)?;
            bench.shrink_cycle(rest)?;
        }
    }
    let target_graph = target.graph();
    if !is_isomorphic(bench.circuit.graph(), &target_graph) {
        return Err(Error::BadWitness(format!("reduction did not end at {target}")));
    }
    let witness = MinorWitness::new(circuit.graph(), &target_graph, bench.steps);
    witness.verify(circuit.graph(), &target_graph)?;
    Ok(witness)
}

/// Checks that the evidence has the shape it claims in `d` and returns the
/// obstruction it leads to.
fn check_evidence(d: &FramedChordDiagram, evidence: &Evidence) -> Result<ObstructionKind> {
    let mismatch = |m: String| Err(Error::ConflictMismatch(m));
    for c in evidence.chords() {
        d.framing(c)
            .map_err(|_| Error::ConflictMismatch(format!("chord {c} not in diagram")))?;
    }
    let f = |c: u32| d.framings()[&c];
    match evidence {
        Evidence::TwistedChord(a) => {
            if f(*a) != 1 {
                return mismatch(format!("chord {a} has framing 0"));
            }
            Ok(ObstructionKind::Gamma)
        }
        Evidence::UnlinkedTwistedPair(a, b) => {
            if a == b || f(*a) != 1 || f(*b) != 1 || d.linked(*a, *b)? {
                return mismatch(format!("({a}, {b}) is not an unlinked framing-1 pair"));
            }
            Ok(ObstructionKind::Gamma1)
        }
        Evidence::OddCycle(cycle) => {
            let twisted = cycle.iter().filter(|&&c| f(c) == 1).count();
            if cycle.len() < 3 || cycle.len() % 2 == 0 || twisted > 1 || (twisted == 1 && f(cycle[0]) != 1) {
                return mismatch("odd cycle has the wrong length or framings".into());
            }
            check_induced_cycle(d, cycle)?;
            Ok(if twisted == 0 {
                ObstructionKind::Delta
            } else {
                ObstructionKind::Gamma1
            })
        }
        Evidence::ForcedPath(path) => {
            let m = path.len();
            let ends_ok = m >= 4 && m % 2 == 0 && f(path[0]) == 1 && f(path[m - 1]) == 1;
            if !ends_ok || path[1..m - 1].iter().any(|&c| f(c) != 0) {
                return mismatch("forced path has the wrong length or framings".into());
            }
            check_induced_cycle(d, path)?;
            Ok(ObstructionKind::Gamma1)
        }
    }
}

fn check_induced_cycle(d: &FramedChordDiagram, cycle: &[u32]) -> Result<()> {
    let n = cycle.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if cycle[i] == cycle[j] {
                return Err(Error::ConflictMismatch(format!("chord {} repeated", cycle[i])));
            }
            if d.linked(cycle[i], cycle[j])? != consecutive {
                return Err(Error::ConflictMismatch(format!(
                    "chords {} and {} break the cycle",
                    cycle[i], cycle[j]
                )));
            }
        }
    }
    Ok(())
}

/// A graph with its circuit, tracking original chord labels across deletions.
struct Bench {
    circuit: RotatingCircuit,
    /// original label of each current vertex
    label_of: Vec<u32>,
    steps: Vec<MinorStep>,
}

impl Bench {
    fn new(circuit: RotatingCircuit) -> Self {
        let n = circuit.graph().vertex_count() as u32;
        Bench {
            circuit,
            label_of: (1..=n).collect(),
            steps: Vec::new(),
        }
    }

    fn vertex(&self, label: u32) -> Result<usize> {
        self.label_of
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::UnknownChord(label))
    }

    /// Current diagram, in original labels.
    fn diagram(&self) -> FramedChordDiagram {
        let d = self.circuit.chord_diagram();
        let word = d.word().iter().map(|&l| self.label_of[l as usize - 1]).collect();
        let framings = d
            .framings()
            .iter()
            .map(|(&l, &f)| (self.label_of[l as usize - 1], f))
            .collect();
        FramedChordDiagram::new(word, framings).expect("relabeling is a bijection")
    }

    fn delete(&mut self, label: u32) -> Result<()> {
        let v = self.vertex(label)?;
        let choice = SmoothingChoice::new(v, self.circuit.transition(v));
        let smoothed = self.circuit.graph().smooth(choice)?;
        let mut transitions = self.circuit.transitions().to_vec();
        transitions.remove(v);
        self.circuit = RotatingCircuit::with_transitions(&smoothed, transitions)?;
        self.label_of.remove(v);
        self.steps.push(MinorStep::Smooth(choice));
        Ok(())
    }

    fn keep_only(&mut self, keep: &[u32]) -> Result<()> {
        let drop: Vec<u32> = self.label_of.iter().copied().filter(|l| !keep.contains(l)).collect();
        for l in drop {
            self.delete(l)?;
        }
        Ok(())
    }

    fn switch(&mut self, labels: &[u32]) -> Result<()> {
        let vs = labels.iter().map(|&l| self.vertex(l)).collect::<Result<Vec<_>>>()?;
        self.circuit = self.circuit.change_transitions(&vs)?;
        Ok(())
    }

    fn expect_cycle(&self, cycle: &[u32], framings: &BTreeMap<u32, u8>) -> Result<()> {
        let d = self.diagram();
        let fail = |what: &str| {
            Err(Error::BadWitness(format!(
                "reduction step produced {d}, expected {what} on {cycle:?}"
            )))
        };
        if d.framings() != framings {
            return fail("framings");
        }
        if check_induced_cycle(&d, cycle).is_err() {
            return fail("an induced cycle");
        }
        Ok(())
    }

    /// Shrinks an induced odd cycle (framing-1 chord first, if any) to a
    /// triangle two chords at a time, then resolves a twisted triangle into
    /// two unlinked framing-1 chords.
    fn shrink_cycle(&mut self, mut cycle: Vec<u32>) -> Result<()> {
        let framings = self.diagram().framings().clone();
        while cycle.len() > 3 {
            let (c2, c3) = (cycle[1], cycle[2]);
            self.switch(&[c2, c3])?;
            self.delete(c2)?;
            self.delete(c3)?;
            cycle.drain(1..3);
            let expected = cycle.iter().map(|c| (*c, framings[c])).collect();
            self.expect_cycle(&cycle, &expected)?;
        }
        if framings[&cycle[0]] == 1 {
            self.switch(&[cycle[0]])?;
            let d = self.diagram();
            let (b, c) = (cycle[1], cycle[2]);
            if d.framings()[&b] != 1 || d.framings()[&c] != 1 || d.linked(b, c)? {
                return Err(Error::BadWitness(format!("switching the twisted triangle gave {d}")));
            }
            self.delete(cycle[0])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::standard_circuit;
    use crate::named::{gamma1, NamedGraph};

    #[test]
    fn gamma1_on_itself_is_empty() {
        let w = materialize_obstruction(&gamma1(), &Evidence::UnlinkedTwistedPair(1, 2)).unwrap();
        assert!(w.steps.is_empty());
    }

    #[test]
    fn odd_gons_reduce_to_gamma1() {
        for k in 1..=4 {
            let d = NamedGraph::OddGon(k).diagram().unwrap();
            let cycle: Vec<u32> = (1..=(2 * k as u32 + 1)).collect();
            let w = materialize_with_circuit(&standard_circuit(&d), &Evidence::OddCycle(cycle)).unwrap();
            assert_eq!(w.smoothing_count(), 2 * k - 1);
            w.verify(&d.realize(), &gamma1()).unwrap();
        }
    }

    #[test]
    fn mismatched_evidence_rejected() {
        let c = standard_circuit(&NamedGraph::OddGon(1).diagram().unwrap());
        assert!(matches!(
            materialize_with_circuit(&c, &Evidence::TwistedChord(2)),
            Err(Error::ConflictMismatch(_))
        ));
        assert!(matches!(
            materialize_with_circuit(&c, &Evidence::OddCycle(vec![2, 1, 3])),
            Err(Error::ConflictMismatch(_))
        ));
        assert!(matches!(
            materialize_with_circuit(&c, &Evidence::UnlinkedTwistedPair(1, 9)),
            Err(Error::ConflictMismatch(_))
        ));
    }
}
