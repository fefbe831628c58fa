//! The `fcd 1` text format: one chord-diagram block per component plus an
//! optional free-circle count.
//!
//! ```text
//! fcd 1
//! n 2
//! 1 1 2 2
//! 1 1
//! circles 1
//! ```
//!
//! Framing bits are listed in order of first occurrence of each label, and
//! labels in a block are `1..=n`.

use std::fmt::Write as _;

use crate::circuit::rotating_circuit;
use crate::diagram::FramedChordDiagram;
use crate::error::{Error, Result};
use crate::graph::FramedFourGraph;

pub const MAGIC: &str = "fcd 1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramFile {
    pub diagrams: Vec<FramedChordDiagram>,
    pub circles: usize,
}

impl DiagramFile {
    /// Codes every component of `g` by its deterministic rotating circuit;
    /// free circles go to the trailing count.
    pub fn from_graph(g: &FramedFourGraph) -> Self {
        let diagrams = g
            .components()
            .iter()
            .filter(|c| c.vertex_count() > 0)
            .map(|c| rotating_circuit(c).expect("component is connected").chord_diagram())
            .collect();
        DiagramFile {
            diagrams,
            circles: g.free_circles(),
        }
    }

    /// Union of the realized blocks (an empty block is a circle) and the
    /// trailing free circles.
    pub fn graph(&self) -> FramedFourGraph {
        let parts: Vec<FramedFourGraph> = self
            .diagrams
            .iter()
            .map(FramedChordDiagram::realize)
            .chain(std::iter::once(FramedFourGraph::circles(self.circles)))
            .collect();
        FramedFourGraph::disjoint_union(&parts)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::from(MAGIC);
        out.push('\n');
        for d in &self.diagrams {
            let d = d.normalized_labels();
            let word: Vec<String> = d.word().iter().map(u32::to_string).collect();
            let bits: Vec<String> = d.framings_by_first_occurrence().iter().map(u8::to_string).collect();
            let _ = writeln!(out, "n {}\n{}\n{}", d.chord_count(), word.join(" "), bits.join(" "));
        }
        if self.circles > 0 {
            let _ = writeln!(out, "circles {}", self.circles);
        }
        out
    }
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str), what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .or_else(|_| err(line, col, format!("expected {what}, found '{tok}'")))
}

/// Expects `keyword <number>` on a line.
fn keyword_line(line_no: usize, line: &str, keyword: &str) -> Result<Option<usize>> {
    let toks = tokens(line);
    match toks.as_slice() {
        [(_, k), value] if *k == keyword => Ok(Some(number(line_no, *value, "a count")?)),
        [(_, k), ..] if *k == keyword => err(line_no, 1, format!("expected '{keyword} <count>'")),
        _ => Ok(None),
    }
}

pub fn parse_diagram_file(text: &str) -> Result<DiagramFile> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let lines: Vec<&str> = body.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
    if lines.first().map(|l| l.trim()) != Some(MAGIC) {
        return err(1, 1, format!("expected header '{MAGIC}'"));
    }
    let mut file = DiagramFile::default();
    let mut i = 1;
    let mut seen_circles = false;
    while i < lines.len() {
        let line_no = i + 1;
        let line = lines[i];
        if line.trim().is_empty() {
            i += 1;
            continue;
        }
        if seen_circles {
            return err(line_no, 1, "nothing may follow the 'circles' line");
        }
        if let Some(k) = keyword_line(line_no, line, "circles")? {
            file.circles = k;
            seen_circles = true;
            i += 1;
            continue;
        }
        let Some(n) = keyword_line(line_no, line, "n")? else {
            return err(line_no, 1, "expected 'n <count>' or 'circles <count>'");
        };
        if i + 2 >= lines.len() {
            return err(line_no, 1, "block needs a label line and a framing line");
        }
        file.diagrams
            .push(parse_block(n, line_no + 1, lines[i + 1], lines[i + 2])?);
        i += 3;
    }
    Ok(file)
}

fn parse_block(n: usize, line_no: usize, label_line: &str, bit_line: &str) -> Result<FramedChordDiagram> {
    let labels = tokens(label_line);
    if labels.len() != 2 * n {
        return err(line_no, 1, format!("expected {} labels, found {}", 2 * n, labels.len()));
    }
    let mut word = Vec::with_capacity(2 * n);
    let mut count = vec![0usize; n + 1];
    for &(col, tok) in &labels {
        let l = number(line_no, (col, tok), "a chord label")?;
        if l == 0 || l > n {
            return err(line_no, col, format!("label {l} outside 1..={n}"));
        }
        count[l] += 1;
        if count[l] > 2 {
            return err(line_no, col, format!("label {l} occurs more than twice"));
        }
        word.push(l as u32);
    }
    if let Some(l) = (1..=n).find(|&l| count[l] != 2) {
        return err(line_no, 1, format!("label {l} occurs {} times", count[l]));
    }
    let bits_line_no = line_no + 1;
    let bit_toks = tokens(bit_line);
    if bit_toks.len() != n {
        return err(
            bits_line_no,
            1,
            format!("expected {n} framing bits, found {}", bit_toks.len()),
        );
    }
    let mut bits = Vec::with_capacity(n);
    for &(col, tok) in &bit_toks {
        match tok {
            "0" => bits.push(0),
            "1" => bits.push(1),
            _ => return err(bits_line_no, col, format!("framing bit must be 0 or 1, found '{tok}'")),
        }
    }
    FramedChordDiagram::from_word(&word, &bits)
}
