//! Ground-truth minor containment by exhaustive smoothing.
//!
//! A minor is reached by smoothings followed by deletions of whole
//! components; deletions can always be moved to the end, so witnesses list
//! smoothings first.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, connected_code, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{FramedFourGraph, Pairing, SmoothingChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorStep {
    Smooth(SmoothingChoice),
    /// Index into [`FramedFourGraph::components`] of the current graph.
    DeleteComponent(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub steps: Vec<MinorStep>,
    pub source: String,
    pub target: String,
}

impl MinorWitness {
    pub fn new(source: &FramedFourGraph, target: &FramedFourGraph, steps: Vec<MinorStep>) -> Self {
        MinorWitness {
            steps,
            source: canonical_form(source).fingerprint(),
            target: canonical_form(target).fingerprint(),
        }
    }

    pub fn smoothing_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, MinorStep::Smooth(_))).count()
    }

    pub fn replay(&self, source: &FramedFourGraph) -> Result<FramedFourGraph> {
        replay_steps(source, &self.steps)
    }

    /// Replays from `source` and checks the result against `target`, including
    /// both recorded fingerprints.
    pub fn verify(&self, source: &FramedFourGraph, target: &FramedFourGraph) -> Result<()> {
        let src = canonical_form(source).fingerprint();
        if src != self.source {
            return Err(Error::BadWitness(format!(
                "source fingerprint {} does not match {}",
                src, self.source
            )));
        }
        let end = self.replay(source)?;
        let end_form = canonical_form(&end);
        let target_form = canonical_form(target);
        if end_form != target_form {
            return Err(Error::BadWitness("replay does not reach the target".into()));
        }
        if target_form.fingerprint() != self.target {
            return Err(Error::BadWitness("target fingerprint mismatch".into()));
        }
        Ok(())
    }

    /// Witness for `source ⊇ c` from witnesses for `source ⊇ mid` and `mid ⊇ c`.
    pub fn then(&self, next: &MinorWitness) -> Result<MinorWitness> {
        if self.target != next.source {
            return Err(Error::BadWitness("witnesses do not chain".into()));
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().copied());
        Ok(MinorWitness {
            steps,
            source: self.source.clone(),
            target: next.target.clone(),
        })
    }
}

pub fn replay_steps(source: &FramedFourGraph, steps: &[MinorStep]) -> Result<FramedFourGraph> {
    let mut g = source.clone();
    for step in steps {
        g = match *step {
            MinorStep::Smooth(choice) => g.smooth(choice)?,
            MinorStep::DeleteComponent(i) => g.delete_component(i)?,
        };
    }
    Ok(g)
}

/// Every graph obtained by one smoothing, two per vertex.
pub fn all_smoothings(g: &FramedFourGraph) -> Vec<(SmoothingChoice, FramedFourGraph)> {
    let mut out = Vec::with_capacity(2 * g.vertex_count());
    for v in 0..g.vertex_count() {
        for pairing in [Pairing::A, Pairing::B] {
            let choice = SmoothingChoice::new(v, pairing);
            out.push((choice, g.smooth(choice).expect("vertex in range")));
        }
    }
    out
}

/// If `pattern` is a union of components of `host`, the component indices to
/// delete (descending, so they can be applied in order).
pub fn component_deletions(host: &FramedFourGraph, pattern: &FramedFourGraph) -> Option<Vec<usize>> {
    if pattern.free_circles() > host.free_circles() || pattern.vertex_count() > host.vertex_count() {
        return None;
    }
    let host_sets = host.vertex_components();
    let host_codes: Vec<Vec<u32>> = host_sets.iter().map(|vs| connected_code(&host.induced(vs))).collect();
    let mut used = vec![false; host_codes.len()];
    for vs in pattern.vertex_components() {
        let code = connected_code(&pattern.induced(&vs));
        let hit = (0..host_codes.len()).find(|&i| !used[i] && host_codes[i] == code)?;
        used[hit] = true;
    }
    let mut deletions: Vec<usize> = (0..host_codes.len()).filter(|&i| !used[i]).collect();
    let extra_circles = host.free_circles() - pattern.free_circles();
    let first_circle = host_codes.len();
    deletions.extend(first_circle..first_circle + extra_circles);
    deletions.reverse();
    Some(deletions)
}

/// Breadth-first search over the smoothing closure of `g`, memoized on
/// canonical forms. Returns a witness with the fewest smoothings.
pub fn has_minor(g: &FramedFourGraph, pattern: &FramedFourGraph) -> Option<MinorWitness> {
    struct Node {
        graph: FramedFourGraph,
        parent: Option<(usize, SmoothingChoice)>,
    }
    let mut nodes = vec![Node {
        graph: g.clone(),
        parent: None,
    }];
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    seen.insert(canonical_form(g));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        if let Some(deletions) = component_deletions(&nodes[i].graph, pattern) {
            let mut smoothings = Vec::new();
            let mut cur = i;
            while let Some((p, choice)) = nodes[cur].parent {
                smoothings.push(MinorStep::Smooth(choice));
                cur = p;
            }
            smoothings.reverse();
            smoothings.extend(deletions.into_iter().map(MinorStep::DeleteComponent));
            let witness = MinorWitness::new(g, pattern, smoothings);
            debug_assert!(witness.verify(g, pattern).is_ok());
            return Some(witness);
        }
        if nodes[i].graph.vertex_count() <= pattern.vertex_count() {
            continue;
        }
        for (choice, child) in all_smoothings(&nodes[i].graph) {
            if seen.insert(canonical_form(&child)) {
                nodes.push(Node {
                    graph: child,
                    parent: Some((i, choice)),
                });
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    None
}

/// Every minor of `g` up to isomorphism, `g` itself included: the smoothing
/// closure together with every way of deleting components.
pub fn minor_closure(g: &FramedFourGraph) -> Vec<FramedFourGraph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    let mut stack = vec![g.clone()];
    seen.insert(canonical_form(g));
    while let Some(cur) = stack.pop() {
        let mut next: Vec<FramedFourGraph> = all_smoothings(&cur).into_iter().map(|(_, c)| c).collect();
        for i in 0..cur.component_count() {
            next.push(cur.delete_component(i).expect("index in range"));
        }
        for child in next {
            if seen.insert(canonical_form(&child)) {
                stack.push(child);
            }
        }
        out.push(cur);
    }
    out
}

/// Cached containment test for a fixed list of connected patterns.
///
/// A connected pattern is a minor of `g` iff it is a minor of one of `g`'s
/// components, so results are memoized per connected canonical code and
/// shared across every graph the oracle is asked about.
pub struct MinorOracle {
    patterns: Vec<Vec<u32>>,
    memo: RwLock<HashMap<Vec<u32>, u64>>,
}

impl MinorOracle {
    pub fn new(patterns: &[FramedFourGraph]) -> Self {
        assert!(patterns.len() <= 64);
        let patterns = patterns
            .iter()
            .map(|p| {
                assert!(
                    p.is_connected() && p.vertex_count() > 0,
                    "oracle patterns must be connected with at least one vertex"
                );
                connected_code(p)
            })
            .collect();
        MinorOracle {
            patterns,
            memo: RwLock::new(HashMap::new()),
        }
    }

    /// Bit `i` is set iff pattern `i` is a minor of `g`.
    pub fn contained(&self, g: &FramedFourGraph) -> u64 {
        g.vertex_components()
            .iter()
            .map(|vs| self.contained_connected(&g.induced(vs)))
            .fold(0, |a, b| a | b)
    }

    pub fn contains(&self, g: &FramedFourGraph, pattern_index: usize) -> bool {
        self.contained(g) >> pattern_index & 1 == 1
    }

    fn contained_connected(&self, g: &FramedFourGraph) -> u64 {
        let code = connected_code(g);
        if let Some(&m) = self.memo.read().unwrap().get(&code) {
            return m;
        }
        let mut mask = 0u64;
        for (i, p) in self.patterns.iter().enumerate() {
            if *p == code {
                mask |= 1 << i;
            }
        }
        for (_, child) in all_smoothings(g) {
            mask |= self.contained(&child);
        }
        self.memo.write().unwrap().insert(code, mask);
        mask
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{delta, gamma, gamma1, odd_gon};

    #[test]
    fn smoothings_of_small_graphs() {
        let kids = all_smoothings(&gamma());
        assert_eq!(kids.len(), 2);
        assert!(kids.iter().all(|(_, g)| *g == FramedFourGraph::circles(1)));
        assert!(all_smoothings(&FramedFourGraph::circles(1)).is_empty());
        assert_eq!(all_smoothings(&delta()).len(), 6);
    }

    #[test]
    fn known_containments() {
        assert!(has_minor(&delta(), &gamma()).is_none());
        let w = has_minor(&gamma1(), &gamma()).unwrap();
        assert_eq!(w.smoothing_count(), 1);
        w.verify(&gamma1(), &gamma()).unwrap();
        let p3 = odd_gon(1).unwrap();
        let w = has_minor(&p3, &gamma1()).unwrap();
        w.verify(&p3, &gamma1()).unwrap();
    }

    #[test]
    fn reflexive_with_empty_witness() {
        let w = has_minor(&delta(), &delta()).unwrap();
        assert!(w.steps.is_empty());
    }

    #[test]
    fn oracle_agrees_with_search() {
        let oracle = MinorOracle::new(&[gamma(), delta(), gamma1()]);
        for g in [gamma(), delta(), gamma1(), odd_gon(1).unwrap(), odd_gon(2).unwrap()] {
            for (i, p) in [gamma(), delta(), gamma1()].iter().enumerate() {
                assert_eq!(oracle.contains(&g, i), has_minor(&g, p).is_some());
            }
        }
    }

    #[test]
    fn deletion_matching() {
        let u = FramedFourGraph::disjoint_union([&delta(), &gamma(), &FramedFourGraph::circles(2)]);
        let dels = component_deletions(&u, &gamma()).unwrap();
        assert_eq!(dels, vec![3, 2, 0]);
        assert_eq!(
            replay_steps(
                &u,
                &dels.iter().map(|&i| MinorStep::DeleteComponent(i)).collect::<Vec<_>>()
            )
            .unwrap(),
            gamma()
        );
        assert!(component_deletions(&gamma(), &delta()).is_none());
    }
}
