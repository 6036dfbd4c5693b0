//! Graphviz output for finite posets.

use std::fmt::Write;

use hopf_galois::exactla::Subspace;
use hopf_galois::quotlat::PosetReport;
use sha2::{Digest, Sha256};

/// First eight hex digits of the SHA-256 of the canonical RREF string.
pub fn short_hash(s: &Subspace) -> String {
    let digest = Sha256::digest(s.canonical_string().as_bytes());
    digest.iter().take(4).fold(String::new(), |mut out, b| {
        let _ = write!(out, "{b:02x}");
        out
    })
}

/// Hasse diagram with edges from lower to upper covers, drawn bottom to top.
pub fn hasse_dot(name: &str, labels: &[String], report: &PosetReport) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{l}\"];");
    }
    for (lo, hi) in &report.hasse_edges {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
