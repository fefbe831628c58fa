#![allow(dead_code)]

use std::path::PathBuf;

use f4g::enumerate::distinct_diagrams;
use f4g::{FramedChordDiagram, FramedFourGraph};

/// Every diagram class with at most `n` chords.
pub fn corpus(n: usize) -> Vec<FramedChordDiagram> {
    (0..=n).flat_map(distinct_diagrams).collect()
}

/// Corpus graphs with at least one vertex (all connected).
pub fn connected_corpus(n: usize) -> Vec<(FramedChordDiagram, FramedFourGraph)> {
    corpus(n)
        .into_iter()
        .filter(|d| !d.is_empty())
        .map(|d| {
            let g = d.realize();
            (d, g)
        })
        .collect()
}

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Runs the CLI in-process and returns exit code, stdout and stderr.
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = f4g::cli::run(std::iter::once("f4g").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
