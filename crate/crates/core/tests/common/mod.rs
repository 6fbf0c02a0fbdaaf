#![allow(dead_code)]

use std::path::PathBuf;

use knotoid::cli::DiagramFile;
use knotoid::diagram::{EventKind, MorseDiagram, OrientedDiagram};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Every corpus diagram, sorted by name.
pub fn corpus() -> Vec<DiagramFile> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "morse"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| DiagramFile::load(p).expect("corpus file parses"))
        .collect()
}

pub fn diagram(name: &str) -> MorseDiagram {
    DiagramFile::load(&corpus_dir().join(format!("{name}.morse")))
        .expect("named corpus file")
        .diagram
}

pub fn oriented(name: &str) -> OrientedDiagram {
    OrientedDiagram::new(&diagram(name))
}

/// Knotoids whose leg is the first event and head the last: both endpoints
/// sit in the unbounded region, so the diagram is of knot type.
pub fn is_outer_knot_type(d: &MorseDiagram) -> bool {
    let ev = d.events();
    ev.first().is_some_and(|e| e.kind == EventKind::Leg)
        && ev.last().is_some_and(|e| e.kind == EventKind::Head)
}

/// Single-component knotoids (no closed components).
pub fn is_pure_knotoid(od: &OrientedDiagram) -> bool {
    od.open_component().is_some() && od.components().len() == 1
}
