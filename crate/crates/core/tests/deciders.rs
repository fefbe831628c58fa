mod common;

use common::{connected_corpus, corpus};
use f4g::certificate::{certify_planarity, certify_rp2, validate_certificate, Witness};
use f4g::minor::{has_minor, MinorOracle};
use f4g::named::{delta, gamma, gamma1, odd_gon};
use f4g::obstructions::{
    gamma_s_minor_witness, is_planar, materialize_obstruction, rp2_checkerboard_embeddable,
    rp2_checkerboard_embeddable_with, rp2_of_diagram, ComponentPolicy, Evidence, ObstructionKind, Rp2Witness,
};
use f4g::sminor::has_s_minor;
use f4g::{is_isomorphic, FramedChordDiagram, FramedFourGraph};

#[test]
fn two_cycle_search_matches_exhaustive_s_minor_search() {
    let g = gamma();
    for d in corpus(3) {
        let h = d.realize();
        let two = gamma_s_minor_witness(&h);
        assert_eq!(two.is_some(), has_s_minor(&h, &g).is_some(), "{d}");
        if let Some(w) = two {
            let s = w.to_s_minor_witness(&h);
            assert!(is_isomorphic(&s.replay(&h).unwrap(), &g), "{d}");
        }
    }
}

#[test]
fn minors_are_s_minors() {
    let oracle = MinorOracle::new(&[gamma(), delta(), gamma1()]);
    for d in corpus(3) {
        let h = d.realize();
        for (i, p) in [gamma(), delta(), gamma1()].iter().enumerate() {
            if oracle.contains(&h, i) {
                assert!(has_s_minor(&h, p).is_some(), "{d} pattern {i}");
            }
        }
    }
}

#[test]
fn source_sink_graphs_have_equal_verdicts() {
    for (d, h) in connected_corpus(4) {
        if h.has_source_sink_structure() {
            assert_eq!(is_planar(&h).planar, rp2_checkerboard_embeddable(&h).embeddable, "{d}");
        }
    }
}

#[test]
fn every_obstruction_materializes() {
    for (d, h) in connected_corpus(4) {
        let v = rp2_checkerboard_embeddable(&h);
        if let Rp2Witness::Obstruction { kind, evidence } = &v.components[0].witness {
            let w = materialize_obstruction(&h, evidence).unwrap();
            w.verify(&h, &kind.graph()).unwrap();
            assert!(has_minor(&h, &kind.graph()).is_some(), "{d}");
        }
        let v = is_planar(&h);
        if let f4g::obstructions::PlanarityWitness::Obstruction { kind, evidence } = &v.components[0].witness {
            materialize_obstruction(&h, evidence)
                .unwrap()
                .verify(&h, &kind.graph())
                .unwrap();
        }
    }
}

#[test]
fn forced_path_conflicts_materialize() {
    // 1 and 4 framed 1, linked through the framing-0 path 2, 3
    let d = FramedChordDiagram::from_word(&[1, 2, 1, 3, 2, 4, 3, 4], &[1, 0, 0, 1]).unwrap();
    let w = rp2_of_diagram(&d);
    let Rp2Witness::Obstruction { kind, evidence } = w else {
        panic!("{w:?}")
    };
    assert_eq!(kind, ObstructionKind::Gamma1);
    let g = d.realize();
    let c = f4g::standard_circuit(&d);
    let m = f4g::obstructions::materialize_with_circuit(&c, &evidence).unwrap();
    m.verify(&g, &gamma1()).unwrap();
}

#[test]
fn larger_odd_gons_reduce() {
    for k in 1..=4 {
        let g = odd_gon(k).unwrap();
        let doc = certify_rp2(&g, ComponentPolicy::PerComponent);
        assert!(!doc.verdict);
        let Some(Witness::Obstruction(rec)) = &doc.witness else {
            panic!()
        };
        assert_eq!(rec.kind, ObstructionKind::Gamma1);
        validate_certificate(&doc, &g).unwrap();
    }
}

#[test]
fn planar_diagrams_embed_everywhere() {
    for (d, h) in connected_corpus(4) {
        if is_planar(&h).planar {
            assert!(rp2_checkerboard_embeddable(&h).embeddable, "{d}");
        }
    }
}

#[test]
fn mismatched_evidence_is_an_error() {
    let g = delta();
    assert!(materialize_obstruction(&g, &Evidence::TwistedChord(1)).is_err());
    assert!(materialize_obstruction(&g, &Evidence::UnlinkedTwistedPair(1, 2)).is_err());
}

#[test]
fn multi_component_policy() {
    let g = FramedFourGraph::disjoint_union([&gamma(), &delta()]);
    assert!(!rp2_checkerboard_embeddable(&g).embeddable);
    let planar_part = FramedChordDiagram::from_word(&[1, 2, 1, 2], &[0, 0]).unwrap().realize();
    let g = FramedFourGraph::disjoint_union([&gamma(), &planar_part, &gamma1().components()[0]]);
    assert!(!rp2_checkerboard_embeddable_with(&g, ComponentPolicy::SingleCrossCap).embeddable);
    let g = FramedFourGraph::disjoint_union([&gamma(), &planar_part]);
    let doc = certify_rp2(&g, ComponentPolicy::SingleCrossCap);
    assert!(doc.verdict);
    validate_certificate(&doc, &g).unwrap();
    let doc = certify_planarity(&g);
    assert!(!doc.verdict);
    validate_certificate(&doc, &g).unwrap();
}
