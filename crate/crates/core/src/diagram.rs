//! Framed chord diagrams: a cyclic word in which every chord label occurs
//! twice, plus a framing bit per chord.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::FramedFourGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FramedChordDiagram {
    word: Vec<u32>,
    framings: BTreeMap<u32, u8>,
}

impl FramedChordDiagram {
    pub fn new(word: Vec<u32>, framings: BTreeMap<u32, u8>) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &l in &word {
            *counts.entry(l).or_default() += 1;
        }
        if let Some((l, c)) = counts.iter().find(|&(_, &c)| c != 2) {
            return Err(Error::MalformedDiagram(format!("label {l} occurs {c} times")));
        }
        if !counts.keys().eq(framings.keys()) {
            return Err(Error::MalformedDiagram(
                "framings must cover exactly the chord labels".into(),
            ));
        }
        if let Some((l, f)) = framings.iter().find(|&(_, &f)| f > 1) {
            return Err(Error::MalformedDiagram(format!(
                "framing of chord {l} is {f}, expected 0 or 1"
            )));
        }
        Ok(FramedChordDiagram { word, framings })
    }

    /// Convenience constructor with framings listed in order of first
    /// occurrence of each label.
    pub fn from_word(word: &[u32], framings_by_first_occurrence: &[u8]) -> Result<Self> {
        let mut order = Vec::new();
        for &l in word {
            if !order.contains(&l) {
                order.push(l);
            }
        }
        if order.len() != framings_by_first_occurrence.len() {
            return Err(Error::MalformedDiagram(format!(
                "{} chords but {} framings",
                order.len(),
                framings_by_first_occurrence.len()
            )));
        }
        let framings = order
            .into_iter()
            .zip(framings_by_first_occurrence.iter().copied())
            .collect();
        Self::new(word.to_vec(), framings)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn chord_count(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Chord labels in increasing order.
    pub fn labels(&self) -> Vec<u32> {
        self.framings.keys().copied().collect()
    }

    pub fn framings(&self) -> &BTreeMap<u32, u8> {
        &self.framings
    }

    pub fn framing(&self, chord: u32) -> Result<u8> {
        self.framings.get(&chord).copied().ok_or(Error::UnknownChord(chord))
    }

    /// Framings in order of first occurrence in the word.
    pub fn framings_by_first_occurrence(&self) -> Vec<u8> {
        self.first_occurrence_order().iter().map(|l| self.framings[l]).collect()
    }

    pub fn first_occurrence_order(&self) -> Vec<u32> {
        let mut order = Vec::with_capacity(self.chord_count());
        for &l in &self.word {
            if !order.contains(&l) {
                order.push(l);
            }
        }
        order
    }

    /// Both positions of a chord in the word, ascending.
    pub fn positions(&self, chord: u32) -> Result<(usize, usize)> {
        let mut it = self
            .word
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == chord)
            .map(|(i, _)| i);
        match (it.next(), it.next()) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(Error::UnknownChord(chord)),
        }
    }

    /// Whether the endpoints of `a` and `b` alternate around the core circle.
    pub fn linked(&self, a: u32, b: u32) -> Result<bool> {
        if a == b {
            return Err(Error::SameChord(a));
        }
        let (a0, a1) = self.positions(a)?;
        let (b0, b1) = self.positions(b)?;
        let inside = |p: usize| a0 < p && p < a1;
        Ok(inside(b0) != inside(b1))
    }

    pub fn interlacement_graph(&self) -> InterlacementGraph {
        let labels = self.labels();
        let pos: Vec<(usize, usize)> = labels.iter().map(|&l| self.positions(l).unwrap()).collect();
        let n = labels.len();
        let mut adjacency = vec![vec![false; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let (a0, a1) = pos[i];
                let inside = |p: usize| a0 < p && p < a1;
                let l = inside(pos[j].0) != inside(pos[j].1);
                adjacency[i][j] = l;
                adjacency[j][i] = l;
            }
        }
        InterlacementGraph { labels, adjacency }
    }

    /// Removes a chord and both of its endpoints.
    pub fn delete_chord(&self, chord: u32) -> Result<Self> {
        if !self.framings.contains_key(&chord) {
            return Err(Error::UnknownChord(chord));
        }
        let mut d = self.clone();
        d.word.retain(|&l| l != chord);
        d.framings.remove(&chord);
        Ok(d)
    }

    /// Keeps only the listed chords.
    pub fn restrict(&self, chords: &[u32]) -> Result<Self> {
        for &c in chords {
            if !self.framings.contains_key(&c) {
                return Err(Error::UnknownChord(c));
            }
        }
        let mut d = self.clone();
        d.word.retain(|l| chords.contains(l));
        d.framings.retain(|l, _| chords.contains(l));
        Ok(d)
    }

    /// Rotates the word by `k` positions to the left.
    pub fn rotated(&self, k: usize) -> Self {
        let mut d = self.clone();
        if !d.word.is_empty() {
            let k = k % d.word.len();
            d.word.rotate_left(k);
        }
        d
    }

    /// Relabels chords `1..=n` in order of first occurrence.
    pub fn normalized_labels(&self) -> Self {
        let order = self.first_occurrence_order();
        let rename: BTreeMap<u32, u32> = order.iter().enumerate().map(|(i, &l)| (l, i as u32 + 1)).collect();
        FramedChordDiagram {
            word: self.word.iter().map(|l| rename[l]).collect(),
            framings: self.framings.iter().map(|(l, &f)| (rename[l], f)).collect(),
        }
    }

    /// Representative of the class under rotation and relabeling (the core
    /// orientation is kept, so mirror images stay distinct).
    pub fn canonical(&self) -> Self {
        (0..self.word.len().max(1))
            .map(|k| self.rotated(k).normalized_labels())
            .min_by(|x, y| {
                (x.word.as_slice(), x.framings_by_first_occurrence())
                    .cmp(&(y.word.as_slice(), y.framings_by_first_occurrence()))
            })
            .unwrap()
    }

    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.chord_count() == other.chord_count() && self.canonical() == other.canonical()
    }

    /// Rebuilds the framed 4-graph coded by this diagram, one vertex per chord.
    ///
    /// Chords are mapped to vertices in increasing label order. The core
    /// circle passes each vertex twice: the first passage enters at slot 0 and
    /// leaves at slot 1; the second enters at slot 2 and leaves at slot 3 for
    /// framing 0 (entries opposite), or enters at 3 and leaves at 2 for framing
    /// 1 (entries adjacent). The empty diagram gives a single free circle.
    pub fn realize(&self) -> FramedFourGraph {
        if self.word.is_empty() {
            return FramedFourGraph::circles(1);
        }
        let labels = self.labels();
        let vertex = |l: u32| labels.binary_search(&l).unwrap();
        let len = self.word.len();
        let mut seen_once = vec![false; labels.len()];
        let mut entry = vec![0usize; len];
        let mut exit = vec![0usize; len];
        for (i, &l) in self.word.iter().enumerate() {
            let v = vertex(l);
            let (e, x) = if !seen_once[v] {
                seen_once[v] = true;
                (0, 1)
            } else if self.framings[&l] == 0 {
                (2, 3)
            } else {
                (3, 2)
            };
            entry[i] = 4 * v + e;
            exit[i] = 4 * v + x;
        }
        let edges: Vec<(usize, usize)> = (0..len).map(|i| (exit[i], entry[(i + 1) % len])).collect();
        FramedFourGraph::from_edges(labels.len(), &edges, 0).expect("realized pairing is valid")
    }
}

impl fmt::Display for FramedChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        let fr: Vec<String> = self
            .framings_by_first_occurrence()
            .iter()
            .map(|b| b.to_string())
            .collect();
        write!(f, "[{}] ({})", w.join(" "), fr.join(" "))
    }
}

/// Simple graph on chord labels; edges join linked chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    pub labels: Vec<u32>,
    pub adjacency: Vec<Vec<bool>>,
}

impl InterlacementGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(j)) => self.adjacency[i][j],
            _ => false,
        }
    }

    pub fn index(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
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

    pub fn degree(&self, label: u32) -> usize {
        self.index(label)
            .map(|i| self.adjacency[i].iter().filter(|&&x| x).count())
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(word: &[u32], fr: &[u8]) -> FramedChordDiagram {
        FramedChordDiagram::from_word(word, fr).unwrap()
    }

    #[test]
    fn validation() {
        assert!(FramedChordDiagram::from_word(&[1, 2, 1], &[0, 0]).is_err());
        assert!(FramedChordDiagram::from_word(&[1, 1], &[2]).is_err());
        assert!(FramedChordDiagram::from_word(&[1, 1], &[0, 1]).is_err());
        assert!(FramedChordDiagram::from_word(&[], &[]).is_ok());
    }

    #[test]
    fn linked_examples() {
        assert!(d(&[1, 2, 1, 2], &[0, 0]).linked(1, 2).unwrap());
        assert!(!d(&[1, 1, 2, 2], &[0, 0]).linked(1, 2).unwrap());
        let tri = d(&[1, 2, 3, 1, 2, 3], &[0, 0, 0]);
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            assert!(tri.linked(a, b).unwrap());
            assert!(tri.linked(b, a).unwrap());
        }
        assert_eq!(tri.linked(1, 1), Err(Error::SameChord(1)));
        assert_eq!(tri.linked(1, 9), Err(Error::UnknownChord(9)));
    }

    #[test]
    fn interlacement_examples() {
        let tri = d(&[1, 2, 3, 1, 2, 3], &[0, 0, 0]).interlacement_graph();
        assert_eq!(tri.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let two = d(&[1, 1, 2, 2], &[1, 1]).interlacement_graph();
        assert!(two.edges().is_empty());
    }

    #[test]
    fn delete_chord_examples() {
        let g1 = d(&[1, 1, 2, 2], &[1, 1]);
        assert_eq!(g1.delete_chord(2).unwrap(), d(&[1, 1], &[1]));
        assert_eq!(d(&[1, 2, 1, 2], &[0, 0]).delete_chord(1).unwrap(), d(&[2, 2], &[0]));
        assert_eq!(
            d(&[1, 2, 3, 1, 2, 3], &[0, 0, 0]).delete_chord(3).unwrap(),
            d(&[1, 2, 1, 2], &[0, 0])
        );
        assert_eq!(g1.delete_chord(5), Err(Error::UnknownChord(5)));
    }

    #[test]
    fn canonical_quotients_rotation_and_labels_only() {
        let a = d(&[1, 2, 1, 2], &[0, 1]);
        let b = d(&[2, 1, 2, 1], &[1, 0]);
        assert!(a.is_equivalent(&b));
        let c = d(&[5, 5, 7, 7], &[1, 0]);
        let e = d(&[1, 1, 2, 2], &[0, 1]);
        assert!(c.is_equivalent(&e));
        assert!(!a.is_equivalent(&d(&[1, 2, 1, 2], &[0, 0])));
    }

    #[test]
    fn realize_small() {
        let circle = FramedChordDiagram::empty().realize();
        assert_eq!(circle, FramedFourGraph::circles(1));
        let gamma = d(&[1, 1], &[1]).realize();
        assert_eq!(gamma.edges(), vec![(0, 2), (1, 3)]);
        let eight = d(&[1, 1], &[0]).realize();
        assert_eq!(eight.edges(), vec![(0, 3), (1, 2)]);
    }
}
