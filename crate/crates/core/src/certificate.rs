//! Self-checking JSON certificates for the deciders and the containment
//! searches.
//!
//! Positive answers carry, per component, the chord diagram the decision was
//! made on together with the bipartition or split. Negative answers carry an
//! obstruction whose steps replay from the whole input graph (other
//! components are deleted first) to Γ, Δ or Γ₁.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, is_isomorphic};
use crate::circuit::rotating_circuit;
use crate::diagram::FramedChordDiagram;
use crate::error::{Error, Result};
use crate::graph::FramedFourGraph;
use crate::minor::{has_minor, replay_steps, MinorStep};
use crate::obstructions::{
    is_planar, materialize_obstruction, planarity_of_diagram, rp2_checkerboard_embeddable_with, validate_bipartition,
    validate_split, ComponentPolicy, Evidence, ObstructionKind, PlanarityWitness, Rp2Witness, Split,
};
use crate::sminor::{has_s_minor, SMinorWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Question {
    Planar,
    Rp2,
    /// RP² with at most one non-planar component.
    Rp2Multi,
    Minor,
    SMinor,
}

/// A chord diagram as a word plus framing bits in first-occurrence order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramRecord {
    pub word: Vec<u32>,
    pub framings: Vec<u8>,
}

impl DiagramRecord {
    pub fn to_diagram(&self) -> Result<FramedChordDiagram> {
        FramedChordDiagram::from_word(&self.word, &self.framings)
    }
}

impl From<&FramedChordDiagram> for DiagramRecord {
    fn from(d: &FramedChordDiagram) -> Self {
        DiagramRecord {
            word: d.word().to_vec(),
            framings: d.framings_by_first_occurrence(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBipartition {
    pub diagram: DiagramRecord,
    pub first: Vec<u32>,
    pub second: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSplit {
    pub diagram: DiagramRecord,
    pub d1: Vec<u32>,
    pub d2: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub kind: ObstructionKind,
    /// Index of the offending component.
    pub component: usize,
    pub diagram: DiagramRecord,
    pub evidence: Evidence,
    pub chords: Vec<u32>,
    /// Replays from the whole input graph to `kind`.
    pub steps: Vec<MinorStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Bipartition(Vec<ComponentBipartition>),
    Split(Vec<ComponentSplit>),
    Obstruction(ObstructionRecord),
    /// Two different components each containing Γ or Δ.
    CrossCaps(Vec<ObstructionRecord>),
    Minor {
        steps: Vec<MinorStep>,
    },
    SMinor(SMinorWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub question: Question,
    pub input_fingerprint: String,
    /// Fingerprint of the pattern, for containment questions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern_fingerprint: Option<String>,
    pub verdict: bool,
    /// Absent only for a negative containment answer.
    pub witness: Option<Witness>,
}

impl CertificateDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidCertificate(e.to_string()))
    }
}

fn fingerprint(g: &FramedFourGraph) -> String {
    canonical_form(g).fingerprint()
}

/// Deletions that leave only component `keep` of `g`, highest index first.
fn isolate(g: &FramedFourGraph, keep: usize) -> Vec<MinorStep> {
    (0..g.component_count())
        .rev()
        .filter(|&j| j != keep)
        .map(MinorStep::DeleteComponent)
        .collect()
}

fn obstruction_record(
    g: &FramedFourGraph,
    component: usize,
    diagram: &FramedChordDiagram,
    kind: ObstructionKind,
    evidence: Evidence,
) -> ObstructionRecord {
    let comp = &g.components()[component];
    let local = materialize_obstruction(comp, &evidence).expect("decider evidence materializes");
    let mut steps = isolate(g, component);
    steps.extend(local.steps);
    ObstructionRecord {
        kind,
        component,
        diagram: diagram.into(),
        chords: evidence.chords(),
        evidence,
        steps,
    }
}

pub fn certify_planarity(g: &FramedFourGraph) -> CertificateDocument {
    let verdict = is_planar(g);
    let witness = match verdict.components.iter().enumerate().find(|(_, c)| !c.is_planar()) {
        Some((i, c)) => {
            let PlanarityWitness::Obstruction { kind, evidence } = &c.witness else {
                unreachable!()
            };
            Witness::Obstruction(obstruction_record(g, i, &c.diagram, *kind, evidence.clone()))
        }
        None => Witness::Bipartition(
            verdict
                .components
                .iter()
                .map(|c| {
                    let PlanarityWitness::Bipartition { first, second } = &c.witness else {
                        unreachable!()
                    };
                    ComponentBipartition {
                        diagram: (&c.diagram).into(),
                        first: first.clone(),
                        second: second.clone(),
                    }
                })
                .collect(),
        ),
    };
    CertificateDocument {
        question: Question::Planar,
        input_fingerprint: fingerprint(g),
        pattern_fingerprint: None,
        verdict: verdict.planar,
        witness: Some(witness),
    }
}

pub fn certify_rp2(g: &FramedFourGraph, policy: ComponentPolicy) -> CertificateDocument {
    let verdict = rp2_checkerboard_embeddable_with(g, policy);
    let question = match policy {
        ComponentPolicy::PerComponent => Question::Rp2,
        ComponentPolicy::SingleCrossCap => Question::Rp2Multi,
    };
    let failing = verdict.components.iter().enumerate().find(|(_, c)| !c.is_embeddable());
    let witness = if let Some((i, c)) = failing {
        let Rp2Witness::Obstruction { kind, evidence } = &c.witness else {
            unreachable!()
        };
        Witness::Obstruction(obstruction_record(g, i, &c.diagram, *kind, evidence.clone()))
    } else if !verdict.embeddable {
        let records = verdict
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.planar)
            .take(2)
            .map(|(i, c)| match planarity_of_diagram(&c.diagram) {
                PlanarityWitness::Obstruction { kind, evidence } => {
                    obstruction_record(g, i, &c.diagram, kind, evidence)
                }
                PlanarityWitness::Bipartition { .. } => unreachable!(),
            })
            .collect();
        Witness::CrossCaps(records)
    } else {
        Witness::Split(
            verdict
                .components
                .iter()
                .map(|c| {
                    let Rp2Witness::Split(s) = &c.witness else {
                        unreachable!()
                    };
                    ComponentSplit {
                        diagram: (&c.diagram).into(),
                        d1: s.d1.clone(),
                        d2: s.d2.clone(),
                    }
                })
                .collect(),
        )
    };
    CertificateDocument {
        question,
        input_fingerprint: fingerprint(g),
        pattern_fingerprint: None,
        verdict: verdict.embeddable,
        witness: Some(witness),
    }
}

pub fn certify_minor(g: &FramedFourGraph, pattern: &FramedFourGraph) -> CertificateDocument {
    let found = has_minor(g, pattern);
    CertificateDocument {
        question: Question::Minor,
        input_fingerprint: fingerprint(g),
        pattern_fingerprint: Some(fingerprint(pattern)),
        verdict: found.is_some(),
        witness: found.map(|w| Witness::Minor { steps: w.steps }),
    }
}

pub fn certify_s_minor(g: &FramedFourGraph, pattern: &FramedFourGraph) -> CertificateDocument {
    let found = has_s_minor(g, pattern);
    CertificateDocument {
        question: Question::SMinor,
        input_fingerprint: fingerprint(g),
        pattern_fingerprint: Some(fingerprint(pattern)),
        verdict: found.is_some(),
        witness: found.map(Witness::SMinor),
    }
}

fn invalid<T>(message: impl Into<String>) -> Result<T> {
    Err(Error::InvalidCertificate(message.into()))
}

/// Checks that a positive witness lists one diagram per component, each
/// coding its component.
fn check_diagrams<'a>(
    g: &FramedFourGraph,
    diagrams: impl ExactSizeIterator<Item = &'a DiagramRecord>,
) -> Result<Vec<FramedChordDiagram>> {
    let comps = g.components();
    if diagrams.len() != comps.len() {
        return invalid(format!(
            "{} component entries for {} components",
            diagrams.len(),
            comps.len()
        ));
    }
    let mut out = Vec::with_capacity(comps.len());
    for (i, (rec, comp)) in diagrams.zip(&comps).enumerate() {
        let d = rec.to_diagram()?;
        if !is_isomorphic(&d.realize(), comp) {
            return invalid(format!("diagram {i} does not code component {i}"));
        }
        out.push(d);
    }
    Ok(out)
}

fn check_obstruction(g: &FramedFourGraph, rec: &ObstructionRecord, allowed: &[ObstructionKind]) -> Result<()> {
    if !allowed.contains(&rec.kind) {
        return invalid(format!("obstruction {} does not answer this question", rec.kind));
    }
    if rec.chords != rec.evidence.chords() {
        return invalid("chord list disagrees with the evidence");
    }
    let prefix = isolate(g, rec.component);
    if rec.component >= g.component_count() || !rec.steps.starts_with(&prefix) {
        return invalid("steps must first isolate the named component");
    }
    let d = rec.diagram.to_diagram()?;
    if !is_isomorphic(&d.realize(), &g.components()[rec.component]) {
        return invalid("obstruction diagram does not code its component");
    }
    let end = replay_steps(g, &rec.steps).map_err(|e| Error::InvalidCertificate(e.to_string()))?;
    if !is_isomorphic(&end, &rec.kind.graph()) {
        return invalid(format!("steps do not replay to {}", rec.kind));
    }
    Ok(())
}

/// Re-validates `doc` against the input graph it claims to describe.
pub fn validate_certificate(doc: &CertificateDocument, g: &FramedFourGraph) -> Result<()> {
    validate_with_pattern(doc, g, None)
}

/// As [`validate_certificate`]; containment questions also need the pattern.
pub fn validate_with_pattern(
    doc: &CertificateDocument,
    g: &FramedFourGraph,
    pattern: Option<&FramedFourGraph>,
) -> Result<()> {
    if doc.input_fingerprint != fingerprint(g) {
        return invalid("input fingerprint does not match the graph");
    }
    use ObstructionKind::*;
    match (doc.question, doc.verdict, &doc.witness) {
        (Question::Planar, true, Some(Witness::Bipartition(parts))) => {
            let ds = check_diagrams(g, parts.iter().map(|p| &p.diagram))?;
            for (d, p) in ds.iter().zip(parts) {
                if !validate_bipartition(d, &p.first, &p.second) {
                    return invalid("bipartition is not valid");
                }
            }
            Ok(())
        }
        (Question::Planar, false, Some(Witness::Obstruction(rec))) => check_obstruction(g, rec, &[Gamma, Delta]),
        (Question::Rp2 | Question::Rp2Multi, true, Some(Witness::Split(parts))) => {
            let ds = check_diagrams(g, parts.iter().map(|p| &p.diagram))?;
            let mut non_planar = 0;
            for (d, p) in ds.iter().zip(parts) {
                let split = Split {
                    d1: p.d1.clone(),
                    d2: p.d2.clone(),
                };
                if !validate_split(d, &split) {
                    return invalid("split is not valid");
                }
                non_planar += usize::from(matches!(planarity_of_diagram(d), PlanarityWitness::Obstruction { .. }));
            }
            if doc.question == Question::Rp2Multi && non_planar > 1 {
                return invalid("more than one component needs the cross-cap");
            }
            Ok(())
        }
        (Question::Rp2 | Question::Rp2Multi, false, Some(Witness::Obstruction(rec))) => {
            check_obstruction(g, rec, &[Delta, Gamma1])
        }
        (Question::Rp2Multi, false, Some(Witness::CrossCaps(recs))) => {
            if recs.len() != 2 || recs[0].component == recs[1].component {
                return invalid("need two different non-planar components");
            }
            recs.iter().try_for_each(|r| check_obstruction(g, r, &[Gamma, Delta]))
        }
        (Question::Minor | Question::SMinor, _, witness) => {
            let Some(pattern) = pattern else {
                return invalid("containment certificates need the pattern");
            };
            if doc.pattern_fingerprint.as_deref() != Some(fingerprint(pattern).as_str()) {
                return invalid("pattern fingerprint does not match");
            }
            let end = match (doc.verdict, witness) {
                (false, None) => return Ok(()),
                (true, Some(Witness::Minor { steps })) if doc.question == Question::Minor => replay_steps(g, steps),
                (true, Some(Witness::SMinor(w))) if doc.question == Question::SMinor => w.replay(g),
                _ => return invalid("witness does not fit the verdict"),
            };
            let end = end.map_err(|e| Error::InvalidCertificate(e.to_string()))?;
            if !is_isomorphic(&end, pattern) {
                return invalid("witness does not reach the pattern");
            }
            Ok(())
        }
        _ => invalid("witness does not fit the question and verdict"),
    }
}

/// Codes every component by its deterministic circuit (empty for circles).
pub fn component_diagrams(g: &FramedFourGraph) -> Vec<FramedChordDiagram> {
    g.components()
        .iter()
        .map(|c| rotating_circuit(c).map(|r| r.chord_diagram()).unwrap_or_default())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{delta, gamma, gamma1, odd_gon};

    fn round_trip(doc: &CertificateDocument) -> CertificateDocument {
        CertificateDocument::from_json(&doc.to_json()).unwrap()
    }

    #[test]
    fn named_graphs_certify() {
        for g in [
            gamma(),
            delta(),
            gamma1(),
            odd_gon(2).unwrap(),
            FramedFourGraph::circles(2),
        ] {
            for doc in [
                certify_planarity(&g),
                certify_rp2(&g, ComponentPolicy::PerComponent),
                certify_rp2(&g, ComponentPolicy::SingleCrossCap),
            ] {
                validate_certificate(&round_trip(&doc), &g).unwrap();
            }
        }
        let doc = certify_rp2(&gamma(), ComponentPolicy::PerComponent);
        assert!(doc.verdict);
        assert!(doc.to_json().contains("\"split\""));
        let doc = certify_planarity(&gamma());
        assert!(!doc.verdict);
        assert!(doc.to_json().contains("\"gamma\""));
    }

    #[test]
    fn obstruction_in_second_component() {
        let d = FramedChordDiagram::from_word(&[1, 2, 1, 2], &[0, 0]).unwrap();
        let g = FramedFourGraph::disjoint_union([&d.realize(), &delta(), &FramedFourGraph::circles(1)]);
        let doc = certify_planarity(&g);
        let Some(Witness::Obstruction(rec)) = &doc.witness else {
            panic!()
        };
        assert_eq!(rec.component, 1);
        validate_certificate(&doc, &g).unwrap();
    }

    #[test]
    fn cross_caps() {
        let g = FramedFourGraph::disjoint_union([&gamma(), &gamma()]);
        let doc = certify_rp2(&g, ComponentPolicy::SingleCrossCap);
        assert!(!doc.verdict);
        assert!(matches!(doc.witness, Some(Witness::CrossCaps(_))));
        validate_certificate(&round_trip(&doc), &g).unwrap();
    }

    #[test]
    fn tampering_is_caught() {
        let p3 = odd_gon(1).unwrap();
        let mut doc = certify_rp2(&p3, ComponentPolicy::PerComponent);
        validate_certificate(&doc, &p3).unwrap();
        if let Some(Witness::Obstruction(rec)) = &mut doc.witness {
            assert!(rec.steps.pop().is_some());
        }
        assert!(validate_certificate(&doc, &p3).is_err());

        let mut doc = certify_planarity(&delta());
        if let Some(Witness::Obstruction(rec)) = &mut doc.witness {
            rec.kind = ObstructionKind::Gamma;
        }
        assert!(validate_certificate(&doc, &delta()).is_err());

        let mut doc = certify_rp2(&gamma(), ComponentPolicy::PerComponent);
        if let Some(Witness::Split(parts)) = &mut doc.witness {
            let p = &mut parts[0];
            std::mem::swap(&mut p.d1, &mut p.d2);
        }
        assert!(validate_certificate(&doc, &gamma()).is_err());

        let doc = certify_planarity(&gamma());
        assert!(validate_certificate(&doc, &delta()).is_err());
    }

    #[test]
    fn containment_certificates() {
        let doc = certify_minor(&gamma1(), &gamma());
        assert!(doc.verdict);
        validate_with_pattern(&round_trip(&doc), &gamma1(), Some(&gamma())).unwrap();
        let doc = certify_minor(&delta(), &gamma());
        assert!(!doc.verdict);
        validate_with_pattern(&doc, &delta(), Some(&gamma())).unwrap();
        let doc = certify_s_minor(&delta(), &gamma());
        assert!(doc.verdict);
        validate_with_pattern(&round_trip(&doc), &delta(), Some(&gamma())).unwrap();
    }
}
