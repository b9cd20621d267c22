//! Subalgebras and graph-ideals spanned by induced subgraphs.
//!
//! Every vertex subset spans, together with the labels of its induced
//! subgraph, a subalgebra of the graph's algebra. A combinatorial
//! criterion — every label incident to the subset is captured by the
//! induced subgraph — promotes the span to an ideal. Both facts are
//! re-checked here by brute force on every call: closure for the
//! subalgebra claim, and a full-basis bracket oracle for ideals, which
//! stays authoritative should the criterion ever disagree.

use serde::Serialize;
use std::fmt;

use crate::graph::{GraphError, LabeledDigraph};
use crate::lie::{build_lie, LieAlgebra};

/// Why a span is considered trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialReason {
    /// The subset is all of the vertices, so the span is the whole algebra.
    WholeAlgebra,
    /// The span sits inside the degree −2 stratum (empty vertex subset).
    WithinCenter,
    /// The induced subgraph has an isolated vertex, so the span splits off
    /// an abelian factor.
    AbelianFactor,
}

impl fmt::Display for TrivialReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrivialReason::WholeAlgebra => "whole algebra",
            TrivialReason::WithinCenter => "contained in the center",
            TrivialReason::AbelianFactor => "abelian factor",
        })
    }
}

/// Analysis of one vertex subset: the span it generates and its flags.
///
/// `is_graph_ideal` is the combinatorial criterion; `is_ideal` is the
/// brute-force bracket oracle and is the authoritative answer when the two
/// would ever differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubstructureReport {
    #[serde(skip)]
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub labels: Vec<usize>,
    #[serde(rename = "vertices")]
    pub vertex_names: Vec<String>,
    #[serde(rename = "labels")]
    pub label_names: Vec<String>,
    pub is_subalgebra: bool,
    pub is_graph_ideal: bool,
    pub is_ideal: bool,
    pub trivial: Option<TrivialReason>,
}

impl SubstructureReport {
    pub fn is_nontrivial(&self) -> bool {
        self.trivial.is_none()
    }

    /// Basis names of the span, vertices first: `⟨x1,x2,x5⟩`-style.
    pub fn span_names(&self) -> Vec<String> {
        let mut s = self.vertex_names.clone();
        s.extend(self.label_names.iter().cloned());
        s
    }
}

/// Analyzes the span of one vertex subset (indices into `g`).
pub fn analyze_subset(g: &LabeledDigraph, subset: &[usize]) -> SubstructureReport {
    analyze(g, &build_lie(g), subset)
}

/// Name-based form of [`analyze_subset`].
pub fn analyze_subset_by_names(
    g: &LabeledDigraph,
    names: &[&str],
) -> Result<SubstructureReport, GraphError> {
    let subset = names
        .iter()
        .map(|n| {
            g.vertex_index(n)
                .ok_or_else(|| GraphError::UnknownVertex(n.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(analyze_subset(g, &subset))
}

/// One report per connected component; each is an ideal.
pub fn component_ideals(g: &LabeledDigraph) -> Vec<SubstructureReport> {
    let alg = build_lie(g);
    g.components()
        .iter()
        .map(|component| analyze(g, &alg, component))
        .collect()
}

/// Reports for every vertex subset of size at most `max_subset_size`,
/// nontrivial spans first. Within each group, subsets come smaller-first
/// and then lexicographically by vertex indices.
///
/// The subset count is exponential in the vertex count; intended for the
/// desk-scale graphs this library targets.
pub fn enumerate_substructures(g: &LabeledDigraph, max_subset_size: usize) -> Vec<SubstructureReport> {
    let n = g.vertex_count();
    assert!(n < usize::BITS as usize, "enumeration needs fewer vertices");
    let max = max_subset_size.min(n);
    let alg = build_lie(g);

    let mut subsets: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .filter(|s: &Vec<usize>| s.len() <= max)
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut reports: Vec<SubstructureReport> =
        subsets.iter().map(|s| analyze(g, &alg, s)).collect();
    // stable partition: nontrivial first, original order kept in each group
    reports.sort_by_key(|r| r.trivial.is_some());
    reports
}

fn analyze(g: &LabeledDigraph, alg: &LieAlgebra, subset: &[usize]) -> SubstructureReport {
    let n = g.vertex_count();
    let mut vertices: Vec<usize> = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    assert!(
        vertices.iter().all(|&v| v < n),
        "vertex index out of range"
    );

    let mut in_subset = vec![false; n];
    for &v in &vertices {
        in_subset[v] = true;
    }

    // labels of the induced subgraph, in the graph's label order
    let mut label_in = vec![false; g.label_count()];
    for e in g.edges() {
        if in_subset[e.tail] && in_subset[e.head] {
            label_in[e.label] = true;
        }
    }
    let labels: Vec<usize> = (0..g.label_count()).filter(|&l| label_in[l]).collect();

    // coordinate mask of the span inside the algebra
    let mut in_span = vec![false; alg.dim()];
    for &v in &vertices {
        in_span[v] = true;
    }
    for &l in &labels {
        in_span[n + l] = true;
    }
    let span: Vec<usize> = (0..alg.dim()).filter(|&i| in_span[i]).collect();
    let lies_in_span = |coords: &[crate::linalg::Rational]| {
        coords
            .iter()
            .enumerate()
            .all(|(i, c)| in_span[i] || num_traits::Zero::is_zero(c))
    };

    // closure: brackets of span basis vectors stay inside the span
    let mut is_subalgebra = true;
    'outer: for &a in &span {
        for &b in &span {
            let w = alg.bracket(&alg.basis_element(a), &alg.basis_element(b));
            if !lies_in_span(&w.coords) {
                is_subalgebra = false;
                break 'outer;
            }
        }
    }

    // oracle: brackets of the span against the whole basis stay inside
    let mut is_ideal = true;
    'ideal: for b in 0..alg.dim() {
        for &s in &span {
            let w = alg.bracket(&alg.basis_element(b), &alg.basis_element(s));
            if !lies_in_span(&w.coords) {
                is_ideal = false;
                break 'ideal;
            }
        }
    }

    // criterion: every label incident to the subset is captured
    let signed = g.signed_labels();
    let is_graph_ideal = vertices.iter().all(|&x| {
        g.neighborhood(x)
            .iter()
            .all(|&y| match signed.get(x, y) {
                Some((l, _)) => label_in[l],
                None => true,
            })
    });

    let trivial = if vertices.len() == n {
        Some(TrivialReason::WholeAlgebra)
    } else if vertices.is_empty() {
        Some(TrivialReason::WithinCenter)
    } else if vertices
        .iter()
        .any(|&x| g.neighborhood(x).iter().all(|y| !in_subset[*y]))
    {
        Some(TrivialReason::AbelianFactor)
    } else {
        None
    };

    SubstructureReport {
        vertex_names: vertices.iter().map(|&v| g.vertex_name(v).to_string()).collect(),
        label_names: labels.iter().map(|&l| g.label_name(l).to_string()).collect(),
        vertices,
        labels,
        is_subalgebra,
        is_graph_ideal,
        is_ideal,
        trivial,
    }
}
