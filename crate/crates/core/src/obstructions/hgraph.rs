//! The constraint graph on chords for projective-plane embeddability, and its
//! 2-coloring with framing-1 chords pinned to the Möbius side.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::diagram::FramedChordDiagram;
use crate::parity::ParityUnionFind;

/// Vertices are chords. `a` and `b` are joined when at least one of them has
/// framing 0 and they are linked, or both have framing 1 and are unlinked.
/// Framing-1 chords are forced onto the `d2` side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGraph {
    pub labels: Vec<u32>,
    pub adjacency: Vec<Vec<bool>>,
    pub forced: Vec<bool>,
}

impl HGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adjacency[i][j] {
                    out.push((self.labels[i], self.labels[j]));
                }
            }
        }
        out
    }

    pub fn forced_labels(&self) -> Vec<u32> {
        self.labels
            .iter()
            .zip(&self.forced)
            .filter(|&(_, &f)| f)
            .map(|(&l, _)| l)
            .collect()
    }

    fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e)
            .map(|(j, _)| j)
    }
}

pub fn build_h(d: &FramedChordDiagram) -> HGraph {
    let ig = d.interlacement_graph();
    let labels = ig.labels.clone();
    let twisted: Vec<bool> = labels.iter().map(|l| d.framings()[l] == 1).collect();
    let n = labels.len();
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let linked = ig.adjacency[i][j];
            adjacency[i][j] = if twisted[i] && twisted[j] { !linked } else { linked };
        }
    }
    HGraph {
        labels,
        adjacency,
        forced: twisted,
    }
}

/// Chord split: `d1` is the disc side, `d2` the Möbius side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub d1: Vec<u32>,
    pub d2: Vec<u32>,
}

/// A minimal reason why no valid coloring or bipartition exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// A chord of framing 1 (planarity only).
    TwistedChord(u32),
    /// Two unlinked chords of framing 1.
    UnlinkedTwistedPair(u32, u32),
    /// Chords forming an induced odd cycle of the interlacement graph, in
    /// cyclic order; at most one has framing 1, and if so it comes first.
    OddCycle(Vec<u32>),
    /// `a, x1, .., xm, b` with `a`, `b` linked chords of framing 1, the `xi` of
    /// framing 0, `m` even, and the interlacement graph on them the cycle in
    /// this order.
    ForcedPath(Vec<u32>),
}

impl Evidence {
    pub fn chords(&self) -> Vec<u32> {
        match self {
            Evidence::TwistedChord(a) => vec![*a],
            Evidence::UnlinkedTwistedPair(a, b) => vec![*a, *b],
            Evidence::OddCycle(c) | Evidence::ForcedPath(c) => c.clone(),
        }
    }
}

/// Shortest odd cycle of a simple graph, as vertex indices in cyclic order.
pub(crate) fn shortest_odd_cycle(adjacency: &[Vec<bool>]) -> Option<Vec<usize>> {
    let n = adjacency.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in 0..n {
                if adjacency[u][w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for u in 0..n {
            for w in (u + 1)..n {
                if !adjacency[u][w] || dist[u] == usize::MAX || dist[u] != dist[w] {
                    continue;
                }
                let len = 2 * dist[u] + 1;
                if best.as_ref().is_some_and(|b| b.len() <= len) {
                    continue;
                }
                let mut left = vec![u];
                while *left.last().unwrap() != s {
                    left.push(parent[*left.last().unwrap()]);
                }
                let mut right = vec![w];
                while *right.last().unwrap() != s {
                    right.push(parent[*right.last().unwrap()]);
                }
                right.pop();
                left.reverse();
                left.extend(right);
                if left.len() == len {
                    best = Some(left);
                }
            }
        }
    }
    best
}

/// Shortest odd-length walk between two distinct forced vertices of `h`.
fn shortest_forced_odd_path(h: &HGraph) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for a in (0..n).filter(|&i| h.forced[i]) {
        // state = 2 * vertex + parity
        let mut dist = vec![usize::MAX; 2 * n];
        let mut parent = vec![usize::MAX; 2 * n];
        dist[2 * a] = 0;
        let mut queue = VecDeque::from([2 * a]);
        while let Some(st) = queue.pop_front() {
            let (u, p) = (st / 2, st % 2);
            for w in h.neighbors(u) {
                let next = 2 * w + (1 - p);
                if dist[next] == usize::MAX {
                    dist[next] = dist[st] + 1;
                    parent[next] = st;
                    queue.push_back(next);
                }
            }
        }
        for b in (0..n).filter(|&j| j != a && h.forced[j]) {
            let end = 2 * b + 1;
            if dist[end] == usize::MAX || best.as_ref().is_some_and(|p| p.len() <= dist[end] + 1) {
                continue;
            }
            let mut walk = vec![end];
            while *walk.last().unwrap() != 2 * a {
                walk.push(parent[*walk.last().unwrap()]);
            }
            walk.reverse();
            best = Some(walk.into_iter().map(|st| st / 2).collect());
        }
    }
    best
}

/// Colors `h` so that adjacent chords differ and every forced chord lands in
/// `d2`. On failure returns a minimal conflict: an unlinked framing-1 pair if
/// there is one, otherwise the shortest of an odd cycle of `h` and an odd path
/// between two forced chords (the path wins ties).
pub fn forced_two_coloring(h: &HGraph) -> Result<Split, Evidence> {
    let n = h.vertex_count();
    let z = n;
    let mut uf = ParityUnionFind::new(n + 1);
    let mut ok = true;
    for i in 0..n {
        if h.forced[i] {
            ok &= uf.union(i, z, 1).is_ok();
        }
        for j in (i + 1)..n {
            if h.adjacency[i][j] {
                ok &= uf.union(i, j, 1).is_ok();
            }
        }
    }
    if ok {
        let mut d1 = Vec::new();
        let mut d2 = Vec::new();
        let mut anchor: Vec<Option<usize>> = vec![None; n + 1];
        for i in 0..n {
            let side = match uf.parity_between(i, z) {
                Some(p) => p,
                None => {
                    let (root, _) = uf.find(i);
                    let a = *anchor[root].get_or_insert(i);
                    uf.parity_between(i, a).unwrap()
                }
            };
            if side == 1 {
                d2.push(h.labels[i]);
            } else {
                d1.push(h.labels[i]);
            }
        }
        return Ok(Split { d1, d2 });
    }

    for i in 0..n {
        for j in (i + 1)..n {
            if h.forced[i] && h.forced[j] && h.adjacency[i][j] {
                return Err(Evidence::UnlinkedTwistedPair(h.labels[i], h.labels[j]));
            }
        }
    }
    let cycle = shortest_odd_cycle(&h.adjacency);
    let path = shortest_forced_odd_path(h);
    let label = |v: Vec<usize>| v.into_iter().map(|i| h.labels[i]).collect::<Vec<u32>>();
    match (cycle, path) {
        (c, Some(p)) if c.as_ref().is_none_or(|c| p.len() < c.len()) => Err(Evidence::ForcedPath(label(p))),
        (Some(mut c), _) => {
            if let Some(k) = c.iter().position(|&i| h.forced[i]) {
                c.rotate_left(k);
            }
            Err(Evidence::OddCycle(label(c)))
        }
        _ => unreachable!("an infeasible forced coloring has an odd cycle or a forced odd path"),
    }
}

/// Checks a split against the embeddability conditions: framing-1 chords all
/// in `d2`; `d1` pairwise unlinked; framing-1 chords of `d2` pairwise linked;
/// framing-0 chords of `d2` unlinked with every other chord of `d2`.
pub fn validate_split(d: &FramedChordDiagram, split: &Split) -> bool {
    let mut all: Vec<u32> = split.d1.iter().chain(&split.d2).copied().collect();
    all.sort_unstable();
    if all != d.labels() {
        return false;
    }
    let f = |c: u32| d.framings()[&c];
    let linked = |a: u32, b: u32| d.linked(a, b).unwrap();
    let pairs = |side: &[u32]| -> Vec<(u32, u32)> {
        let mut v = Vec::new();
        for i in 0..side.len() {
            for j in (i + 1)..side.len() {
                v.push((side[i], side[j]));
            }
        }
        v
    };
    split.d1.iter().all(|&c| f(c) == 0)
        && pairs(&split.d1).into_iter().all(|(a, b)| !linked(a, b))
        && pairs(&split.d2).into_iter().all(|(a, b)| match (f(a), f(b)) {
            (1, 1) => linked(a, b),
            _ => !linked(a, b),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(word: &[u32], fr: &[u8]) -> FramedChordDiagram {
        FramedChordDiagram::from_word(word, fr).unwrap()
    }

    #[test]
    fn h_of_gamma1_is_forced_edge() {
        let h = build_h(&d(&[1, 1, 2, 2], &[1, 1]));
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert_eq!(h.forced_labels(), vec![1, 2]);
        assert_eq!(forced_two_coloring(&h), Err(Evidence::UnlinkedTwistedPair(1, 2)));
    }

    #[test]
    fn h_of_delta_is_triangle() {
        let h = build_h(&d(&[1, 2, 3, 1, 2, 3], &[0, 0, 0]));
        assert_eq!(h.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(h.forced_labels().is_empty());
        match forced_two_coloring(&h) {
            Err(Evidence::OddCycle(c)) => assert_eq!(c.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_twisted_chord() {
        let dg = d(&[1, 1], &[1]);
        let h = build_h(&dg);
        assert!(h.edges().is_empty());
        assert_eq!(h.forced_labels(), vec![1]);
        let split = forced_two_coloring(&h).unwrap();
        assert_eq!(
            split,
            Split {
                d1: vec![],
                d2: vec![1]
            }
        );
        assert!(validate_split(&dg, &split));
    }

    #[test]
    fn edgeless_h() {
        let dg = d(&[1, 1, 2, 2, 3, 3], &[0, 1, 0]);
        let split = forced_two_coloring(&build_h(&dg)).unwrap();
        assert_eq!(
            split,
            Split {
                d1: vec![1, 3],
                d2: vec![2]
            }
        );
        assert!(validate_split(&dg, &split));
    }

    #[test]
    fn five_cycle_conflict() {
        let mut w = vec![1, 5];
        for i in 2..=5 {
            w.push(i);
            w.push(i - 1);
        }
        let dg = d(&w, &[0, 0, 0, 0, 0]);
        match forced_two_coloring(&build_h(&dg)) {
            Err(Evidence::OddCycle(c)) => assert_eq!(c.len(), 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn forced_path_conflict() {
        // interlacement 4-cycle a-x1-x2-b-a with a, b of framing 1
        let mut w = vec![1, 4];
        for i in 2..=4 {
            w.push(i);
            w.push(i - 1);
        }
        let dg = FramedChordDiagram::new(w, [(1, 1), (2, 0), (3, 0), (4, 1)].into()).unwrap();
        match forced_two_coloring(&build_h(&dg)) {
            Err(Evidence::ForcedPath(p)) => {
                assert_eq!(p.len(), 4);
                assert!([1, 4].contains(&p[0]) && [1, 4].contains(&p[3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn split_validation_rejects_bad_splits() {
        let dg = d(&[1, 2, 1, 2], &[0, 0]);
        assert!(validate_split(
            &dg,
            &Split {
                d1: vec![1],
                d2: vec![2]
            }
        ));
        assert!(!validate_split(
            &dg,
            &Split {
                d1: vec![1, 2],
                d2: vec![]
            }
        ));
        assert!(!validate_split(
            &dg,
            &Split {
                d1: vec![],
                d2: vec![1, 2]
            }
        ));
        assert!(!validate_split(
            &dg,
            &Split {
                d1: vec![1],
                d2: vec![]
            }
        ));
        let tw = d(&[1, 2, 1, 2], &[1, 1]);
        assert!(validate_split(
            &tw,
            &Split {
                d1: vec![],
                d2: vec![1, 2]
            }
        ));
        assert!(!validate_split(
            &tw,
            &Split {
                d1: vec![1],
                d2: vec![2]
            }
        ));
    }
}
