//! Command-line front end. Exit codes: 0 when the property holds or the
//! containment is found, 1 when it fails, 2 on input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::certificate::{
    certify_minor, certify_planarity, certify_rp2, certify_s_minor, validate_certificate, validate_with_pattern,
    CertificateDocument, Witness,
};
use crate::circuit::rotating_circuit;
use crate::enumerate::enumerate;
use crate::error::{Error, Result};
use crate::format::{parse_diagram_file, DiagramFile};
use crate::graph::{FramedFourGraph, Pairing};
use crate::named::NamedGraph;
use crate::obstructions::ComponentPolicy;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "f4g",
    version,
    about = "Planarity and projective-plane checks for framed 4-valent graphs"
)]
pub struct Cli {
    /// Print a JSON certificate or report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print nothing; only the exit code carries the answer.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a property of the graph in an fcd file ("-" reads stdin).
    #[command(subcommand)]
    Check(Check),
    /// Print the deterministic rotating circuit of every component.
    Circuit { file: PathBuf },
    /// Search for a pattern as a minor.
    Minor(Containment),
    /// Search for a pattern as an s-minor.
    Sminor(Containment),
    /// Enumerate every framed chord diagram with at most N chords.
    Enumerate {
        #[arg(long)]
        chords: usize,
        /// Cross-check the deciders against the minor oracles.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Planarity.
    Planar { file: PathBuf },
    /// Checkerboard embeddability in the projective plane.
    Rp2 {
        file: PathBuf,
        /// Also require at most one non-planar component.
        #[arg(long)]
        multi: bool,
    },
}

#[derive(Debug, Args)]
pub struct Containment {
    pub file: PathBuf,
    /// gamma, delta, gamma1, odd_gon(k), or an fcd file.
    #[arg(long)]
    pub pattern: String,
}

fn read_graph(path: &Path) -> Result<FramedFourGraph> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(parse_diagram_file(&text)?.graph())
}

fn resolve_pattern(spec: &str) -> Result<FramedFourGraph> {
    match spec.parse::<NamedGraph>() {
        Ok(named) => named.graph(),
        Err(e) if Path::new(spec).is_file() => read_graph(Path::new(spec)).map_err(|_| e),
        Err(e) => Err(e),
    }
}

struct Out<'a> {
    out: &'a mut dyn Write,
    json: bool,
    quiet: bool,
}

impl Out<'_> {
    fn text(&mut self, line: impl AsRef<str>) {
        if !self.quiet && !self.json {
            let _ = writeln!(self.out, "{}", line.as_ref());
        }
    }

    fn json(&mut self, value: &impl Serialize) {
        if !self.quiet && self.json {
            let _ = writeln!(
                self.out,
                "{}",
                serde_json::to_string_pretty(value).expect("serializable")
            );
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut o = Out {
        out,
        json: cli.json,
        quiet: cli.quiet,
    };
    match execute(&cli.command, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn exit_for(verdict: bool) -> i32 {
    if verdict {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn execute(command: &Command, o: &mut Out) -> Result<i32> {
    match command {
        Command::Check(Check::Planar { file }) => {
            let g = read_graph(file)?;
            let doc = certify_planarity(&g);
            validate_certificate(&doc, &g)?;
            report_decision(o, &doc, "planar", "not planar");
            Ok(exit_for(doc.verdict))
        }
        Command::Check(Check::Rp2 { file, multi }) => {
            let g = read_graph(file)?;
            let policy = if *multi {
                ComponentPolicy::SingleCrossCap
            } else {
                ComponentPolicy::PerComponent
            };
            let doc = certify_rp2(&g, policy);
            validate_certificate(&doc, &g)?;
            report_decision(
                o,
                &doc,
                "RP2 checkerboard embeddable",
                "not RP2 checkerboard embeddable",
            );
            Ok(exit_for(doc.verdict))
        }
        Command::Circuit { file } => {
            let g = read_graph(file)?;
            circuit(o, &g);
            Ok(EXIT_HOLDS)
        }
        Command::Minor(c) | Command::Sminor(c) => {
            let g = read_graph(&c.file)?;
            let pattern = resolve_pattern(&c.pattern)?;
            let s_minor = matches!(command, Command::Sminor(_));
            let doc = if s_minor {
                certify_s_minor(&g, &pattern)
            } else {
                certify_minor(&g, &pattern)
            };
            validate_with_pattern(&doc, &g, Some(&pattern))?;
            let what = if s_minor { "an s-minor" } else { "a minor" };
            if doc.verdict {
                o.text(format!("{} is {what}", c.pattern));
                match &doc.witness {
                    Some(Witness::Minor { steps }) => {
                        o.text(format!("steps: {}", serde_json::to_string(steps).unwrap()))
                    }
                    Some(Witness::SMinor(w)) => o.text(format!("witness: {}", serde_json::to_string(w).unwrap())),
                    _ => {}
                }
            } else {
                o.text(format!("{} is not {what}", c.pattern));
            }
            o.json(&doc);
            Ok(exit_for(doc.verdict))
        }
        Command::Enumerate { chords, verify } => {
            let report = enumerate(*chords, *verify);
            for s in &report.sizes {
                o.text(format!(
                    "{} chords: {} labeled, {} distinct, {} planar, {} RP2-embeddable",
                    s.chords, s.labeled, s.distinct, s.planar, s.rp2
                ));
            }
            if *verify {
                if let Some(d) = report.disagreements.first() {
                    o.text(format!(
                        "first disagreement: {:?} {:?}: {}",
                        d.word, d.framings, d.detail
                    ));
                }
                o.text(format!(
                    "{} disagreements over {} diagrams",
                    report.disagreements.len(),
                    report.distinct()
                ));
            }
            o.json(&report);
            Ok(exit_for(report.disagreements.is_empty()))
        }
    }
}

fn report_decision(o: &mut Out, doc: &CertificateDocument, yes: &str, no: &str) {
    o.text(if doc.verdict { yes } else { no });
    match &doc.witness {
        Some(Witness::Bipartition(parts)) => {
            for (i, p) in parts.iter().enumerate() {
                o.text(format!("component {i}: bipartition {:?} | {:?}", p.first, p.second));
            }
        }
        Some(Witness::Split(parts)) => {
            for (i, p) in parts.iter().enumerate() {
                o.text(format!("component {i}: split d1={:?} d2={:?}", p.d1, p.d2));
            }
        }
        Some(Witness::Obstruction(r)) => {
            o.text(format!(
                "component {}: obstruction {} on chords {:?} ({} steps)",
                r.component,
                r.kind,
                r.chords,
                r.steps.len()
            ));
        }
        Some(Witness::CrossCaps(rs)) => {
            for r in rs {
                o.text(format!(
                    "component {}: needs a cross-cap, obstruction {} on chords {:?}",
                    r.component, r.kind, r.chords
                ));
            }
        }
        _ => {}
    }
    o.json(doc);
}

#[derive(Serialize)]
struct ComponentCircuit {
    transitions: Vec<Pairing>,
    word: Vec<u32>,
    framings: Vec<u8>,
}

fn circuit(o: &mut Out, g: &FramedFourGraph) {
    let comps: Vec<ComponentCircuit> = g
        .components()
        .iter()
        .filter(|c| c.vertex_count() > 0)
        .map(|c| {
            let r = rotating_circuit(c).expect("component is connected");
            let d = r.chord_diagram();
            ComponentCircuit {
                transitions: r.transitions().to_vec(),
                word: d.word().to_vec(),
                framings: d.framings_by_first_occurrence(),
            }
        })
        .collect();
    o.text(DiagramFile::from_graph(g).serialize().trim_end());
    o.json(&serde_json::json!({ "components": comps, "circles": g.free_circles() }));
}
