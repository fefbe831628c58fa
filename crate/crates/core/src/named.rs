//! The obstruction graphs: Γ, Δ, Γ₁ and the odd-gon family P₂ₖ₊₁.

use std::fmt;
use std::str::FromStr;

use crate::diagram::FramedChordDiagram;
use crate::error::{Error, Result};
use crate::graph::FramedFourGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// One vertex, two loops, each joining a pair of opposite slots.
    Gamma,
    /// Three pairwise linked chords of framing 0.
    Delta,
    /// Two unlinked chords of framing 1.
    Gamma1,
    /// `2k+1` chords linked in a cycle; the first is framed 1, the rest 0.
    OddGon(usize),
}

impl NamedGraph {
    pub fn diagram(self) -> Result<FramedChordDiagram> {
        match self {
            NamedGraph::Gamma => FramedChordDiagram::from_word(&[1, 1], &[1]),
            NamedGraph::Delta => FramedChordDiagram::from_word(&[1, 2, 3, 1, 2, 3], &[0, 0, 0]),
            NamedGraph::Gamma1 => FramedChordDiagram::from_word(&[1, 1, 2, 2], &[1, 1]),
            NamedGraph::OddGon(k) => {
                if k < 1 {
                    return Err(Error::InvalidOddGon);
                }
                let mut framings = vec![0u8; 2 * k + 1];
                framings[0] = 1;
                cycle_diagram(2 * k + 1, &framings)
            }
        }
    }

    pub fn graph(self) -> Result<FramedFourGraph> {
        match self {
            NamedGraph::Gamma => FramedFourGraph::from_edges(1, &[(0, 2), (1, 3)], 0),
            other => Ok(other.diagram()?.realize()),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Gamma => write!(f, "gamma"),
            NamedGraph::Delta => write!(f, "delta"),
            NamedGraph::Gamma1 => write!(f, "gamma1"),
            NamedGraph::OddGon(k) => write!(f, "odd_gon({k})"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" => Ok(NamedGraph::Gamma),
            "delta" => Ok(NamedGraph::Delta),
            "gamma1" => Ok(NamedGraph::Gamma1),
            _ => {
                let k = s
                    .strip_prefix("odd_gon(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("odd_gon:"))
                    .ok_or_else(|| Error::UnknownName(s.to_string()))?
                    .parse::<usize>()
                    .map_err(|_| Error::UnknownName(s.to_string()))?;
                if k < 1 {
                    return Err(Error::InvalidOddGon);
                }
                Ok(NamedGraph::OddGon(k))
            }
        }
    }
}

/// Chord diagram whose interlacement graph is the cycle `1-2-...-m-1`
/// (`m >= 3`), with framings listed for chords `1..=m`.
///
/// Word: `1 m 2 1 3 2 ... m (m-1)`. Chord `i` spans the interval between its
/// two occurrences, which contains exactly one endpoint of `i-1` and of `i+1`.
pub fn cycle_diagram(m: usize, framings: &[u8]) -> Result<FramedChordDiagram> {
    if m < 3 || framings.len() != m {
        return Err(Error::MalformedDiagram(format!(
            "cycle diagram needs m >= 3 chords and m framings (m = {m})"
        )));
    }
    let m32 = m as u32;
    let mut word = vec![1, m32];
    for i in 2..=m32 {
        word.push(i);
        word.push(i - 1);
    }
    let map = (1..=m32).zip(framings.iter().copied()).collect();
    FramedChordDiagram::new(word, map)
}

pub fn gamma() -> FramedFourGraph {
    NamedGraph::Gamma.graph().unwrap()
}

pub fn delta() -> FramedFourGraph {
    NamedGraph::Delta.graph().unwrap()
}

pub fn gamma1() -> FramedFourGraph {
    NamedGraph::Gamma1.graph().unwrap()
}

/// P₂ₖ₊₁ for `k >= 1`.
pub fn odd_gon(k: usize) -> Result<FramedFourGraph> {
    NamedGraph::OddGon(k).graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn gamma_matches_its_diagram() {
        assert!(is_isomorphic(&gamma(), &NamedGraph::Gamma.diagram().unwrap().realize()));
        assert_eq!(gamma().vertex_count(), 1);
        assert_eq!(gamma().edge_count(), 2);
        assert!(gamma().source_sink_structures().is_empty());
    }

    #[test]
    fn cycle_diagrams_have_cycle_interlacement() {
        for m in [3usize, 5, 7, 9] {
            let d = cycle_diagram(m, &vec![0; m]).unwrap();
            let ig = d.interlacement_graph();
            for a in 1..=m as u32 {
                for b in (a + 1)..=m as u32 {
                    let consecutive = b == a + 1 || (a == 1 && b == m as u32);
                    assert_eq!(ig.has_edge(a, b), consecutive, "m={m} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("gamma".parse::<NamedGraph>().unwrap(), NamedGraph::Gamma);
        assert_eq!("odd_gon(2)".parse::<NamedGraph>().unwrap(), NamedGraph::OddGon(2));
        assert_eq!("odd_gon(0)".parse::<NamedGraph>(), Err(Error::InvalidOddGon));
        assert!("kappa".parse::<NamedGraph>().is_err());
        assert_eq!(odd_gon(0), Err(Error::InvalidOddGon));
    }

    #[test]
    fn odd_gon_one() {
        let p3 = odd_gon(1).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        let d = NamedGraph::OddGon(1).diagram().unwrap();
        assert_eq!(d.interlacement_graph().edges().len(), 3);
        assert_eq!(d.framings_by_first_occurrence(), vec![1, 0, 0]);
    }
}
