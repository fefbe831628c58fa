//! Exhaustive enumeration of small framed chord diagrams and the harness
//! that cross-checks the deciders against the minor oracles.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::{certify_planarity, certify_rp2, validate_certificate};
use crate::diagram::FramedChordDiagram;
use crate::minor::MinorOracle;
use crate::named::{delta, gamma, gamma1};
use crate::obstructions::{gamma_s_minor_witness, is_planar, rp2_checkerboard_embeddable, ComponentPolicy};

/// Every perfect matching of `0..2n`, as words labeled by first occurrence.
pub fn labeled_matchings(n: usize) -> Vec<Vec<u32>> {
    fn go(word: &mut Vec<u32>, next: u32, out: &mut Vec<Vec<u32>>) {
        let Some(i) = word.iter().position(|&l| l == 0) else {
            out.push(word.clone());
            return;
        };
        word[i] = next;
        for j in i + 1..word.len() {
            if word[j] == 0 {
                word[j] = next;
                go(word, next + 1, out);
                word[j] = 0;
            }
        }
        word[i] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; 2 * n], 1, &mut out);
    out
}

/// Every labeled framed diagram with exactly `n` chords: matchings times
/// framings, `(2n-1)!! * 2^n` of them.
pub fn labeled_diagrams(n: usize) -> Vec<FramedChordDiagram> {
    labeled_matchings(n)
        .into_iter()
        .flat_map(|w| {
            (0..1u32 << n).map(move |mask| {
                let bits: Vec<u8> = (0..n).map(|i| (mask >> i & 1) as u8).collect();
                FramedChordDiagram::from_word(&w, &bits).expect("matching is a valid word")
            })
        })
        .collect()
}

/// Representatives of the equivalence classes of diagrams with exactly `n`
/// chords, in sorted order.
pub fn distinct_diagrams(n: usize) -> Vec<FramedChordDiagram> {
    let set: BTreeSet<(Vec<u32>, Vec<u8>)> = labeled_diagrams(n)
        .par_iter()
        .map(|d| {
            let c = d.canonical();
            (c.word().to_vec(), c.framings_by_first_occurrence())
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    set.into_iter()
        .map(|(w, f)| FramedChordDiagram::from_word(&w, &f).expect("canonical form is valid"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub word: Vec<u32>,
    pub framings: Vec<u8>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeReport {
    pub chords: usize,
    pub labeled: usize,
    pub distinct: usize,
    pub planar: usize,
    pub rp2: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub sizes: Vec<SizeReport>,
    pub verified: bool,
    pub disagreements: Vec<Disagreement>,
}

impl EnumerationReport {
    pub fn distinct(&self) -> usize {
        self.sizes.iter().map(|s| s.distinct).sum()
    }
}

/// Checks one diagram: the planarity decider against the two-cycle search
/// and the Γ/Δ minor oracle, the RP² decider against the Δ/Γ₁ oracle, and
/// every certificate by re-validation. Returns a description of each
/// mismatch.
pub fn verify_diagram(d: &FramedChordDiagram, oracle: &MinorOracle) -> Vec<String> {
    let g = d.realize();
    let mut problems = Vec::new();
    let planar = is_planar(&g).planar;
    let rp2 = rp2_checkerboard_embeddable(&g).embeddable;
    let two_cycles = gamma_s_minor_witness(&g).is_some();
    let mask = oracle.contained(&g);
    let (has_gamma, has_delta, has_gamma1) = (mask & 1 != 0, mask & 2 != 0, mask & 4 != 0);
    if planar == two_cycles {
        problems.push(format!("planar={planar} but two-cycle search found={two_cycles}"));
    }
    if planar == (has_gamma || has_delta) {
        problems.push(format!("planar={planar} but Γ minor={has_gamma}, Δ minor={has_delta}"));
    }
    if rp2 == (has_delta || has_gamma1) {
        problems.push(format!("rp2={rp2} but Δ minor={has_delta}, Γ₁ minor={has_gamma1}"));
    }
    for doc in [certify_planarity(&g), certify_rp2(&g, ComponentPolicy::PerComponent)] {
        if let Err(e) = validate_certificate(&doc, &g) {
            problems.push(format!("{:?} certificate: {e}", doc.question));
        }
    }
    problems
}

/// The oracle for Γ, Δ and Γ₁, in that bit order.
pub fn obstruction_oracle() -> MinorOracle {
    MinorOracle::new(&[gamma(), delta(), gamma1()])
}

/// Enumerates every diagram class with at most `max_chords` chords and, with
/// `verify`, cross-checks each one.
pub fn enumerate(max_chords: usize, verify: bool) -> EnumerationReport {
    let oracle = obstruction_oracle();
    let mut report = EnumerationReport {
        verified: verify,
        ..Default::default()
    };
    for n in 0..=max_chords {
        let diagrams = distinct_diagrams(n);
        let results: Vec<(bool, bool, Vec<String>)> = diagrams
            .par_iter()
            .map(|d| {
                let g = d.realize();
                let problems = if verify { verify_diagram(d, &oracle) } else { Vec::new() };
                (
                    is_planar(&g).planar,
                    rp2_checkerboard_embeddable(&g).embeddable,
                    problems,
                )
            })
            .collect();
        report.sizes.push(SizeReport {
            chords: n,
            labeled: labeled_matchings(n).len() << n,
            distinct: diagrams.len(),
            planar: results.iter().filter(|r| r.0).count(),
            rp2: results.iter().filter(|r| r.1).count(),
        });
        for (d, (_, _, problems)) in diagrams.iter().zip(results) {
            report
                .disagreements
                .extend(problems.into_iter().map(|detail| Disagreement {
                    word: d.word().to_vec(),
                    framings: d.framings_by_first_occurrence(),
                    detail,
                }));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(labeled_matchings(3).len(), 15);
        assert_eq!(labeled_matchings(4).len(), 105);
        assert_eq!(labeled_diagrams(3).len(), 120);
        assert_eq!(distinct_diagrams(0).len(), 1);
        // one chord: framing 0 or 1
        assert_eq!(distinct_diagrams(1).len(), 2);
        // two chords: linked or not, framings 00, 01 ~ 10, 11
        assert_eq!(distinct_diagrams(2).len(), 6);
    }

    #[test]
    fn small_sizes_agree() {
        let report = enumerate(3, true);
        assert!(report.disagreements.is_empty(), "{:?}", report.disagreements);
        assert_eq!(report.sizes[3].labeled, 120);
    }
}
