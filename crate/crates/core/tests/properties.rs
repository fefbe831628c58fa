//! Randomized invariants over diagrams with up to seven chords.

use f4g::certificate::{certify_planarity, certify_rp2, validate_certificate};
use f4g::obstructions::{is_planar, rp2_checkerboard_embeddable, ComponentPolicy};
use f4g::{
    all_rotating_circuits, canonical_form, is_isomorphic, parse_diagram_file, rotating_circuit, DiagramFile,
    FramedChordDiagram, FramedFourGraph, Pairing, SmoothingChoice,
};
use proptest::prelude::*;

fn diagram(max_chords: usize) -> impl Strategy<Value = FramedChordDiagram> {
    (0..=max_chords)
        .prop_flat_map(|n| {
            let word: Vec<u32> = (1..=n as u32).flat_map(|l| [l, l]).collect();
            (Just(word).prop_shuffle(), proptest::collection::vec(0u8..2, n))
        })
        .prop_map(|(word, bits)| FramedChordDiagram::from_word(&word, &bits).unwrap())
}

/// Relabels vertices by `perm` and applies a framing-preserving slot
/// symmetry (`s ^ 1`, `s + 2`, or both) chosen per vertex by `sym`.
fn relabel(g: &FramedFourGraph, perm: &[usize], sym: &[u8]) -> FramedFourGraph {
    let slot = |v: usize, s: usize| {
        let s = if sym[v] & 1 == 1 { s ^ 1 } else { s };
        if sym[v] & 2 == 2 {
            (s + 2) % 4
        } else {
            s
        }
    };
    let mut partner = vec![0; g.half_edge_count()];
    for h in 0..g.half_edge_count() {
        let p = g.partner(h);
        partner[4 * perm[h / 4] + slot(h / 4, h % 4)] = 4 * perm[p / 4] + slot(p / 4, p % 4);
    }
    FramedFourGraph::from_partner(partner, g.free_circles()).unwrap()
}

fn relabeling(max_chords: usize) -> impl Strategy<Value = (FramedChordDiagram, Vec<usize>, Vec<u8>)> {
    diagram(max_chords).prop_flat_map(|d| {
        let n = d.chord_count();
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (Just(d), perm, proptest::collection::vec(0u8..4, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabeling_preserves_canonical_form((d, perm, sym) in relabeling(7)) {
        let g = d.realize();
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, &perm, &sym)));
    }

    #[test]
    fn smoothing_commutes_with_isomorphism((d, perm, sym) in relabeling(6), v in 0usize..6, b in any::<bool>()) {
        let g = d.realize();
        prop_assume!(v < g.vertex_count());
        let h = relabel(&g, &perm, &sym);
        let p = if b { Pairing::A } else { Pairing::B };
        let a = g.smooth(SmoothingChoice::new(v, p)).unwrap();
        let b = h.smooth(SmoothingChoice::new(perm[v], p)).unwrap();
        prop_assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn chord_diagram_round_trip(d in diagram(6)) {
        let g = d.realize();
        prop_assume!(g.vertex_count() > 0);
        let c = rotating_circuit(&g).unwrap();
        prop_assert!(is_isomorphic(&c.chord_diagram().realize(), &g));
        for c in all_rotating_circuits(&g).unwrap().iter().take(8) {
            prop_assert!(is_isomorphic(&c.chord_diagram().realize(), &g));
        }
    }

    #[test]
    fn smoothing_keeps_source_sink_structures(d in diagram(6)) {
        let g = d.realize();
        if g.has_source_sink_structure() {
            for (_, child) in f4g::minor::all_smoothings(&g) {
                prop_assert!(child.has_source_sink_structure());
            }
        }
    }

    #[test]
    fn parse_serialize_round_trip(ds in proptest::collection::vec(diagram(5), 0..4), circles in 0usize..3) {
        let file = DiagramFile { diagrams: ds, circles };
        let back = parse_diagram_file(&file.serialize()).unwrap();
        prop_assert_eq!(back.circles, circles);
        prop_assert_eq!(back.diagrams.len(), file.diagrams.len());
        for (a, b) in file.diagrams.iter().zip(&back.diagrams) {
            prop_assert!(a.is_equivalent(b));
        }
        prop_assert!(is_isomorphic(&back.graph(), &file.graph()));
    }

    #[test]
    fn certificates_validate(ds in proptest::collection::vec(diagram(6), 1..3)) {
        let parts: Vec<FramedFourGraph> = ds.iter().map(FramedChordDiagram::realize).collect();
        let g = FramedFourGraph::disjoint_union(&parts);
        for doc in [
            certify_planarity(&g),
            certify_rp2(&g, ComponentPolicy::PerComponent),
            certify_rp2(&g, ComponentPolicy::SingleCrossCap),
        ] {
            prop_assert!(validate_certificate(&doc, &g).is_ok(), "{}", doc.to_json());
        }
    }

    #[test]
    fn properties_are_minor_monotone(d in diagram(6)) {
        let g = d.realize();
        let planar = is_planar(&g).planar;
        let rp2 = rp2_checkerboard_embeddable(&g).embeddable;
        prop_assert!(!planar || rp2);
        for (_, child) in f4g::minor::all_smoothings(&g) {
            prop_assert!(!planar || is_planar(&child).planar);
            prop_assert!(!rp2 || rp2_checkerboard_embeddable(&child).embeddable);
        }
    }

    #[test]
    fn decider_is_circuit_independent(d in diagram(6)) {
        let g = d.realize();
        prop_assume!(g.vertex_count() > 0);
        let verdicts: Vec<(bool, bool)> = all_rotating_circuits(&g)
            .unwrap()
            .iter()
            .map(|c| {
                (
                    f4g::obstructions::planarity_with_circuit(c).is_planar(),
                    f4g::obstructions::rp2_with_circuit(c).is_embeddable(),
                )
            })
            .collect();
        prop_assert!(verdicts.windows(2).all(|w| w[0] == w[1]));
    }
}
