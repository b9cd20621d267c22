//! Named builders for the reference graphs, with their expected
//! substructure data as machine-checkable fixtures.
//!
//! The entries cover every 2-step nilpotent algebra of dimension at most
//! 6 that a labeled graph realizes, the complete-graph family giving free
//! 2-step algebras, and the two graphs of the worked isomorphism example
//! (a one-label complete graph on four vertices and the two-edge graph
//! isomorphic to it). Expectations list the nontrivial subalgebras and
//! graph-ideals; [`verify_entry`] replays the enumeration and reports any
//! span that is missing or unexpected.

use thiserror::Error;

use crate::graph::LabeledDigraph;
use crate::substructure::enumerate_substructures;

/// A reference graph and the spans expected from its enumeration.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: LabeledDigraph,
    /// Nontrivial subalgebra spans, as basis-name sets (vertices and
    /// labels).
    pub expected_subalgebras: Vec<Vec<&'static str>>,
    /// The subset of [`Self::expected_subalgebras`] that are graph-ideals.
    pub expected_graph_ideals: Vec<Vec<&'static str>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{name}`; available: {available}")]
    Unknown { name: String, available: String },
    #[error("entry `{0}` is out of scope: {1}")]
    OutOfScope(&'static str, &'static str),
}

/// Enumeration replay vs. the recorded expectations.
#[derive(Clone, Debug)]
pub struct CatalogVerifyReport {
    pub name: String,
    /// Expected spans the enumeration did not produce (with the expected
    /// flag).
    pub misses: Vec<String>,
    /// Nontrivial spans or ideal flags the enumeration produced beyond
    /// the expectations.
    pub extras: Vec<String>,
    pub nontrivial_found: usize,
}

impl CatalogVerifyReport {
    pub fn ok(&self) -> bool {
        self.misses.is_empty()
    }
}

/// Registered entry names, including the out-of-scope stub.
pub fn names() -> Vec<&'static str> {
    ALL_NAMES.to_vec()
}

const ALL_NAMES: [&str; 16] = [
    "heis_x_g1",
    "g5_1",
    "g5_2",
    "heis_x_g1_2",
    "g6_1",
    "g6_2",
    "g6_3",
    "heis_x_heis",
    "heis_x_g1_3",
    "g5_1_x_g1",
    "g5_2_x_g1",
    "example1_k4",
    "example1_g5_1",
    "k2_free",
    "k3_free",
    "k4_free",
];

/// Looks up one entry by name.
pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    if name == "g6_3" {
        return Err(CatalogError::OutOfScope(
            "g6_3",
            "a one-parameter family of algebras; no single labeled graph realizes it",
        ));
    }
    build(name).ok_or_else(|| CatalogError::Unknown {
        name: name.to_string(),
        available: ALL_NAMES.join(", "),
    })
}

/// Every buildable entry, in registration order.
pub fn all_entries() -> Vec<CatalogEntry> {
    ALL_NAMES
        .iter()
        .filter(|&&n| n != "g6_3")
        .map(|&n| get(n).expect("registered"))
        .collect()
}

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> LabeledDigraph {
    LabeledDigraph::from_named_edges(vertices, edges).expect("catalog data is valid")
}

fn build(name: &str) -> Option<CatalogEntry> {
    let entry = match name {
        "heis_x_g1" => CatalogEntry {
            name: "heis_x_g1",
            description: "Heisenberg algebra times one abelian line (dimension 4)",
            graph: graph(&["x1", "x2", "x4"], &[("x1", "x2", "x3")]),
            expected_subalgebras: vec![vec!["x1", "x2", "x3"]],
            expected_graph_ideals: vec![vec!["x1", "x2", "x3"]],
        },
        "g5_1" => CatalogEntry {
            name: "g5_1",
            description: "two disjoint edges sharing one label (dimension 5)",
            graph: graph(
                &["x1", "x2", "x3", "x4"],
                &[("x1", "x2", "x5"), ("x3", "x4", "x5")],
            ),
            expected_subalgebras: vec![vec!["x1", "x2", "x5"], vec!["x3", "x4", "x5"]],
            expected_graph_ideals: vec![vec!["x1", "x2", "x5"], vec!["x3", "x4", "x5"]],
        },
        "g5_2" => CatalogEntry {
            name: "g5_2",
            description: "two edges from one vertex, distinct labels (dimension 5)",
            graph: graph(
                &["x1", "x2", "x3"],
                &[("x1", "x2", "x4"), ("x1", "x3", "x5")],
            ),
            expected_subalgebras: vec![vec!["x1", "x3", "x5"], vec!["x1", "x2", "x4"]],
            expected_graph_ideals: vec![],
        },
        "heis_x_g1_2" => CatalogEntry {
            name: "heis_x_g1_2",
            description: "Heisenberg algebra times two abelian lines (dimension 5)",
            graph: graph(&["x1", "x2", "x4", "x5"], &[("x1", "x2", "x3")]),
            expected_subalgebras: vec![vec!["x1", "x2", "x3"]],
            expected_graph_ideals: vec![vec!["x1", "x2", "x3"]],
        },
        "g6_1" => CatalogEntry {
            name: "g6_1",
            description: "triangle with three distinct labels; free 2-step on 3 generators (dimension 6)",
            graph: graph(
                &["x1", "x2", "x3"],
                &[("x1", "x3", "x4"), ("x2", "x3", "x5"), ("x1", "x2", "x6")],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x3", "x4"],
                vec!["x1", "x2", "x6"],
                vec!["x2", "x3", "x5"],
            ],
            expected_graph_ideals: vec![],
        },
        "g6_2" => CatalogEntry {
            name: "g6_2",
            description: "path-like graph on four vertices with one repeated label (dimension 6)",
            graph: graph(
                &["x1", "x2", "x3", "x4"],
                &[("x1", "x2", "x5"), ("x1", "x3", "x6"), ("x2", "x4", "x6")],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x3", "x6"],
                vec!["x1", "x2", "x5"],
                vec!["x2", "x4", "x6"],
                vec!["x1", "x2", "x3", "x5", "x6"],
                vec!["x1", "x2", "x4", "x5", "x6"],
            ],
            expected_graph_ideals: vec![
                vec!["x1", "x2", "x3", "x5", "x6"],
                vec!["x1", "x2", "x4", "x5", "x6"],
            ],
        },
        "heis_x_heis" => CatalogEntry {
            name: "heis_x_heis",
            description: "product of two Heisenberg algebras (dimension 6)",
            graph: graph(
                &["x1", "x2", "x4", "x5"],
                &[("x1", "x2", "x3"), ("x4", "x5", "x6")],
            ),
            expected_subalgebras: vec![vec!["x1", "x2", "x3"], vec!["x4", "x5", "x6"]],
            expected_graph_ideals: vec![vec!["x1", "x2", "x3"], vec!["x4", "x5", "x6"]],
        },
        "heis_x_g1_3" => CatalogEntry {
            name: "heis_x_g1_3",
            description: "Heisenberg algebra times three abelian lines (dimension 6)",
            graph: graph(&["x1", "x2", "x4", "x5", "x6"], &[("x1", "x2", "x3")]),
            expected_subalgebras: vec![vec!["x1", "x2", "x3"]],
            expected_graph_ideals: vec![vec!["x1", "x2", "x3"]],
        },
        "g5_1_x_g1" => CatalogEntry {
            name: "g5_1_x_g1",
            description: "two disjoint edges sharing one label, times an abelian line (dimension 6)",
            graph: graph(
                &["x1", "x2", "x3", "x4", "x6"],
                &[("x1", "x2", "x5"), ("x3", "x4", "x5")],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x2", "x5"],
                vec!["x3", "x4", "x5"],
                vec!["x1", "x2", "x3", "x4", "x5"],
            ],
            expected_graph_ideals: vec![
                vec!["x1", "x2", "x5"],
                vec!["x3", "x4", "x5"],
                vec!["x1", "x2", "x3", "x4", "x5"],
            ],
        },
        "g5_2_x_g1" => CatalogEntry {
            name: "g5_2_x_g1",
            description: "two edges from one vertex with distinct labels, times an abelian line (dimension 6)",
            graph: graph(
                &["x1", "x2", "x3", "x6"],
                &[("x1", "x2", "x4"), ("x1", "x3", "x5")],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x3", "x5"],
                vec!["x1", "x2", "x4"],
                vec!["x1", "x2", "x3", "x4", "x5"],
            ],
            expected_graph_ideals: vec![vec!["x1", "x2", "x3", "x4", "x5"]],
        },
        "example1_k4" => CatalogEntry {
            name: "example1_k4",
            description: "complete graph on four vertices with a single label (dimension 5), \
                          oriented so the recorded cross-isomorphism verifies",
            graph: graph(
                &["x1", "x2", "x3", "x4"],
                &[
                    ("x1", "x2", "c1"),
                    ("x3", "x1", "c1"),
                    ("x1", "x4", "c1"),
                    ("x2", "x3", "c1"),
                    ("x4", "x2", "c1"),
                    ("x3", "x4", "c1"),
                ],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x2", "c1"],
                vec!["x1", "x3", "c1"],
                vec!["x1", "x4", "c1"],
                vec!["x2", "x3", "c1"],
                vec!["x2", "x4", "c1"],
                vec!["x3", "x4", "c1"],
                vec!["x1", "x2", "x3", "c1"],
                vec!["x1", "x2", "x4", "c1"],
                vec!["x1", "x3", "x4", "c1"],
                vec!["x2", "x3", "x4", "c1"],
            ],
            expected_graph_ideals: vec![
                vec!["x1", "x2", "c1"],
                vec!["x1", "x3", "c1"],
                vec!["x1", "x4", "c1"],
                vec!["x2", "x3", "c1"],
                vec!["x2", "x4", "c1"],
                vec!["x3", "x4", "c1"],
                vec!["x1", "x2", "x3", "c1"],
                vec!["x1", "x2", "x4", "c1"],
                vec!["x1", "x3", "x4", "c1"],
                vec!["x2", "x3", "x4", "c1"],
            ],
        },
        "example1_g5_1" => CatalogEntry {
            name: "example1_g5_1",
            description: "two disjoint edges sharing one label, in the basis whose recorded map \
                          lands on the one-label complete graph (dimension 5)",
            graph: graph(
                &["y1", "y2", "y3", "y4"],
                &[("y1", "y4", "k"), ("y2", "y3", "k")],
            ),
            expected_subalgebras: vec![vec!["y1", "y4", "k"], vec!["y2", "y3", "k"]],
            expected_graph_ideals: vec![vec!["y1", "y4", "k"], vec!["y2", "y3", "k"]],
        },
        "k2_free" => CatalogEntry {
            name: "k2_free",
            description: "free 2-step algebra on 2 generators (the Heisenberg algebra, dimension 3)",
            graph: graph(&["x1", "x2"], &[("x1", "x2", "c12")]),
            expected_subalgebras: vec![],
            expected_graph_ideals: vec![],
        },
        "k3_free" => CatalogEntry {
            name: "k3_free",
            description: "free 2-step algebra on 3 generators (dimension 6)",
            graph: graph(
                &["x1", "x2", "x3"],
                &[("x1", "x2", "c12"), ("x1", "x3", "c13"), ("x2", "x3", "c23")],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x2", "c12"],
                vec!["x1", "x3", "c13"],
                vec!["x2", "x3", "c23"],
            ],
            expected_graph_ideals: vec![],
        },
        "k4_free" => CatalogEntry {
            name: "k4_free",
            description: "free 2-step algebra on 4 generators (dimension 10)",
            graph: graph(
                &["x1", "x2", "x3", "x4"],
                &[
                    ("x1", "x2", "c12"),
                    ("x1", "x3", "c13"),
                    ("x1", "x4", "c14"),
                    ("x2", "x3", "c23"),
                    ("x2", "x4", "c24"),
                    ("x3", "x4", "c34"),
                ],
            ),
            expected_subalgebras: vec![
                vec!["x1", "x2", "c12"],
                vec!["x1", "x3", "c13"],
                vec!["x1", "x4", "c14"],
                vec!["x2", "x3", "c23"],
                vec!["x2", "x4", "c24"],
                vec!["x3", "x4", "c34"],
                vec!["x1", "x2", "x3", "c12", "c13", "c23"],
                vec!["x1", "x2", "x4", "c12", "c14", "c24"],
                vec!["x1", "x3", "x4", "c13", "c14", "c34"],
                vec!["x2", "x3", "x4", "c23", "c24", "c34"],
            ],
            expected_graph_ideals: vec![],
        },
        _ => return None,
    };
    Some(entry)
}

fn span_key(names: &[String]) -> Vec<String> {
    let mut k = names.to_vec();
    k.sort();
    k
}

fn format_span(names: &[String]) -> String {
    format!("<{}>", names.join(","))
}

/// Re-enumerates the entry's substructures and diffs them against the
/// recorded expectations.
pub fn verify_entry(entry: &CatalogEntry) -> CatalogVerifyReport {
    let reports = enumerate_substructures(&entry.graph, entry.graph.vertex_count());
    let nontrivial: Vec<_> = reports.iter().filter(|r| r.is_nontrivial()).collect();

    let found_subs: Vec<Vec<String>> = nontrivial
        .iter()
        .filter(|r| r.is_subalgebra)
        .map(|r| span_key(&r.span_names()))
        .collect();
    let found_ideals: Vec<Vec<String>> = nontrivial
        .iter()
        .filter(|r| r.is_graph_ideal && r.is_ideal)
        .map(|r| span_key(&r.span_names()))
        .collect();

    let to_key = |span: &[&'static str]| {
        span_key(&span.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    };
    let expected_subs: Vec<Vec<String>> =
        entry.expected_subalgebras.iter().map(|s| to_key(s)).collect();
    let expected_ideals: Vec<Vec<String>> =
        entry.expected_graph_ideals.iter().map(|s| to_key(s)).collect();

    let mut misses = Vec::new();
    for span in &expected_subs {
        if !found_subs.contains(span) {
            misses.push(format!("subalgebra {} not found", format_span(span)));
        }
    }
    for span in &expected_ideals {
        if !found_ideals.contains(span) {
            misses.push(format!("graph-ideal {} not found", format_span(span)));
        }
    }

    let mut extras = Vec::new();
    for span in &found_subs {
        if !expected_subs.contains(span) {
            extras.push(format!("unexpected subalgebra {}", format_span(span)));
        }
    }
    for span in &found_ideals {
        if expected_subs.contains(span) && !expected_ideals.contains(span) {
            extras.push(format!("unexpected graph-ideal {}", format_span(span)));
        }
    }

    CatalogVerifyReport {
        name: entry.name.to_string(),
        misses,
        extras,
        nontrivial_found: nontrivial.len(),
    }
}
