//! Graded maps between graph algebras and the edge-reversal isomorphisms.
//!
//! A degree-0 linear map is a pair of blocks, one per stratum. Reversing a
//! uniquely-labeled edge `a → b` has an explicit candidate isomorphism:
//! negate the basis vector of `a`, fix every other vertex, and negate each
//! label carried by the other edges at `a`. Every constructor here runs
//! the candidate through the bracket-by-bracket verifier and reports a
//! structured counterexample instead of trusting the recipe, because the
//! recipe can fail when a label at `a` also occurs on edges away from `a`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, LabeledDigraph};
use crate::lie::{build_lie, Element, LieAlgebra};
use crate::linalg::{rat, Rational, RationalMatrix};

use num_traits::{One, Signed, Zero};

/// Degree-0 linear map between two stratified algebras, stored as one
/// block per stratum (columns index the source basis, rows the target).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedLinearMap {
    #[serde(skip)]
    pub source: LieAlgebra,
    #[serde(skip)]
    pub target: LieAlgebra,
    pub block_minus_one: RationalMatrix,
    pub block_minus_two: RationalMatrix,
}

/// Result of the graded-isomorphism verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub stratum_dims_match: bool,
    pub blocks_invertible: bool,
    /// Source basis pair where `f[a,b] != [f(a), f(b)]`, if any.
    pub bracket_witness: Option<(usize, usize)>,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.stratum_dims_match && self.blocks_invertible && self.bracket_witness.is_none()
    }
}

/// A reversal construction: either a verified isomorphism onto the
/// reoriented graph's algebra, or the candidate map with the verifier's
/// counterexample.
#[derive(Clone, Debug)]
pub enum ReversalOutcome {
    Verified {
        map: GradedLinearMap,
        graph: LabeledDigraph,
    },
    Counterexample {
        map: GradedLinearMap,
        graph: LabeledDigraph,
        report: IsoReport,
    },
}

impl ReversalOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, ReversalOutcome::Verified { .. })
    }

    pub fn map(&self) -> &GradedLinearMap {
        match self {
            ReversalOutcome::Verified { map, .. } | ReversalOutcome::Counterexample { map, .. } => {
                map
            }
        }
    }

    pub fn graph(&self) -> &LabeledDigraph {
        match self {
            ReversalOutcome::Verified { graph, .. }
            | ReversalOutcome::Counterexample { graph, .. } => graph,
        }
    }

    pub fn counterexample(&self) -> Option<&IsoReport> {
        match self {
            ReversalOutcome::Verified { .. } => None,
            ReversalOutcome::Counterexample { report, .. } => Some(report),
        }
    }
}

/// Errors for the reversal and search operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("label `{0}` occurs on {1} edges; the single-edge reversal needs a unique label")]
    LabelNotUnique(String, usize),
    #[error("label `{0}` occurs {1} times inside one connected component")]
    LabelRepeatedInComponent(String, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("edges are not uniquely labeled ({labels} labels for {edges} edges)")]
    LabelsNotDistinct { labels: usize, edges: usize },
    #[error("orientation search is limited to {max} edges, graph has {got}")]
    SearchBudget { max: usize, got: usize },
}

/// A successful orientation search: the first edge-reversal mask (bit i
/// reverses edge i) under which the candidate blocks verify.
#[derive(Clone, Debug)]
pub struct OrientationSearchHit {
    pub mask: u64,
    pub graph: LabeledDigraph,
    pub map: GradedLinearMap,
}

const SEARCH_MAX_EDGES: usize = 8;

impl GradedLinearMap {
    /// Wraps two blocks as a map; panics when the block shapes do not
    /// match the stratum dimensions.
    pub fn new(
        source: LieAlgebra,
        target: LieAlgebra,
        block_minus_one: RationalMatrix,
        block_minus_two: RationalMatrix,
    ) -> Self {
        assert_eq!(block_minus_one.rows(), target.n(), "vertex block rows");
        assert_eq!(block_minus_one.cols(), source.n(), "vertex block cols");
        assert_eq!(block_minus_two.rows(), target.m(), "label block rows");
        assert_eq!(block_minus_two.cols(), source.m(), "label block cols");
        GradedLinearMap {
            source,
            target,
            block_minus_one,
            block_minus_two,
        }
    }

    pub fn identity(alg: &LieAlgebra) -> Self {
        GradedLinearMap::new(
            alg.clone(),
            alg.clone(),
            RationalMatrix::identity(alg.n()),
            RationalMatrix::identity(alg.m()),
        )
    }

    /// Diagonal sign map (±1 per vertex and per label).
    pub fn from_signs(
        source: LieAlgebra,
        target: LieAlgebra,
        vertex_signs: &[i8],
        label_signs: &[i8],
    ) -> Self {
        GradedLinearMap::new(source, target, diagonal(vertex_signs), diagonal(label_signs))
    }

    /// Block-wise image of a source element.
    pub fn apply(&self, v: &Element) -> Element {
        assert_eq!(v.coords.len(), self.source.dim(), "element sized for another algebra");
        let vertex_in = &v.coords[..self.source.n()];
        let label_in = &v.coords[self.source.n()..];
        let mut coords = self.block_minus_one.mul_vec(vertex_in);
        coords.extend(self.block_minus_two.mul_vec(label_in));
        Element { coords }
    }

    /// `self ∘ inner`: applies `inner` first. Panics when the strata of
    /// `inner`'s target and `self`'s source have different dimensions.
    pub fn compose(&self, inner: &GradedLinearMap) -> GradedLinearMap {
        assert_eq!(inner.target.n(), self.source.n(), "composition strata");
        assert_eq!(inner.target.m(), self.source.m(), "composition strata");
        GradedLinearMap::new(
            inner.source.clone(),
            self.target.clone(),
            self.block_minus_one.mul(&inner.block_minus_one),
            self.block_minus_two.mul(&inner.block_minus_two),
        )
    }

    /// Human-readable images `source_name -> linear combination`, vertices
    /// first, then labels.
    pub fn describe(&self) -> Vec<String> {
        let mut lines = Vec::new();
        for j in 0..self.source.n() {
            let image = combination(
                (0..self.target.n()).map(|i| {
                    (
                        self.block_minus_one[(i, j)].clone(),
                        self.target.minus_one_basis()[i].as_str(),
                    )
                }),
            );
            lines.push(format!("{} -> {}", self.source.minus_one_basis()[j], image));
        }
        for j in 0..self.source.m() {
            let image = combination(
                (0..self.target.m()).map(|i| {
                    (
                        self.block_minus_two[(i, j)].clone(),
                        self.target.minus_two_basis()[i].as_str(),
                    )
                }),
            );
            lines.push(format!("{} -> {}", self.source.minus_two_basis()[j], image));
        }
        lines
    }
}

fn diagonal(signs: &[i8]) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(signs.len(), signs.len());
    for (i, &s) in signs.iter().enumerate() {
        m[(i, i)] = rat(s.into());
    }
    m
}

fn combination<'a>(terms: impl Iterator<Item = (Rational, &'a str)>) -> String {
    let mut out = String::new();
    for (coeff, name) in terms {
        if coeff.is_zero() {
            continue;
        }
        let mag = coeff.abs();
        let sign = coeff.is_negative();
        if out.is_empty() {
            if sign {
                out.push('-');
            }
        } else {
            out.push_str(if sign { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Verifies that a graded map is a Lie-algebra isomorphism: square
/// invertible blocks and `f[a,b] = [f(a), f(b)]` over all source basis
/// pairs.
pub fn is_graded_lie_isomorphism(f: &GradedLinearMap) -> IsoReport {
    let stratum_dims_match =
        f.source.n() == f.target.n() && f.source.m() == f.target.m();
    let blocks_invertible = stratum_dims_match
        && f.block_minus_one.is_invertible()
        && f.block_minus_two.is_invertible();

    let mut bracket_witness = None;
    let d = f.source.dim();
    'pairs: for a in 0..d {
        for b in a + 1..d {
            let ea = f.source.basis_element(a);
            let eb = f.source.basis_element(b);
            let lhs = f.apply(&f.source.bracket(&ea, &eb));
            let rhs = f.target.bracket(&f.apply(&ea), &f.apply(&eb));
            if lhs != rhs {
                bracket_witness = Some((a, b));
                break 'pairs;
            }
        }
    }

    IsoReport {
        stratum_dims_match,
        blocks_invertible,
        bracket_witness,
    }
}

/// Sign data of the single-edge recipe: negate the tail vertex, and
/// negate every label on the tail's other edges. Each such label is
/// negated once no matter how many of the tail's edges carry it — every
/// bracket at the tail demands the same sign, so the negation is a set
/// operation, not a per-edge toggle.
fn accumulate_reversal_signs(
    g: &LabeledDigraph,
    tail: usize,
    reversed_label: usize,
    vertex_signs: &mut [i8],
    label_signs: &mut [i8],
) {
    vertex_signs[tail] = -1;
    for e in g.edges() {
        if (e.tail == tail || e.head == tail) && e.label != reversed_label {
            label_signs[e.label] = -1;
        }
    }
}

fn verified_outcome(map: GradedLinearMap, graph: LabeledDigraph) -> ReversalOutcome {
    let report = is_graded_lie_isomorphism(&map);
    if report.ok() {
        ReversalOutcome::Verified { map, graph }
    } else {
        ReversalOutcome::Counterexample { map, graph, report }
    }
}

/// Reverses the edge `tail → head`, whose label must occur exactly once in
/// the whole graph, and builds the candidate isomorphism onto the new
/// algebra. The returned outcome carries the verifier's verdict.
pub fn reversal_isomorphism(
    g: &LabeledDigraph,
    tail: usize,
    head: usize,
) -> Result<ReversalOutcome, MorphismError> {
    let reversed = g.reverse_edge(tail, head)?;
    let label = g
        .edges()
        .iter()
        .find(|e| e.tail == tail && e.head == head)
        .expect("reverse_edge checked existence")
        .label;
    let mult = g.label_multiplicity(label);
    if mult != 1 {
        return Err(MorphismError::LabelNotUnique(
            g.label_name(label).to_string(),
            mult,
        ));
    }

    let mut vertex_signs = vec![1i8; g.vertex_count()];
    let mut label_signs = vec![1i8; g.label_count()];
    accumulate_reversal_signs(g, tail, label, &mut vertex_signs, &mut label_signs);

    let map = GradedLinearMap::from_signs(
        build_lie(g),
        build_lie(&reversed),
        &vertex_signs,
        &label_signs,
    );
    Ok(verified_outcome(map, reversed))
}

/// Reverses every edge carrying `label` at once. The label must occur at
/// most once per connected component; the candidate map applies the
/// single-edge recipe inside each component.
pub fn relabel_group_reversal(
    g: &LabeledDigraph,
    label: usize,
) -> Result<ReversalOutcome, MorphismError> {
    assert!(label < g.label_count(), "label index out of range");
    let component = g.component_index();
    let mut per_component = vec![0usize; g.components().len()];
    for e in g.edges() {
        if e.label == label {
            per_component[component[e.tail]] += 1;
        }
    }
    if let Some(&count) = per_component.iter().find(|&&c| c > 1) {
        return Err(MorphismError::LabelRepeatedInComponent(
            g.label_name(label).to_string(),
            count,
        ));
    }

    let targets: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| e.label == label)
        .map(|e| (e.tail, e.head))
        .collect();
    let mut reversed = g.clone();
    for &(t, h) in &targets {
        reversed = reversed.reverse_edge(t, h)?;
    }

    let mut vertex_signs = vec![1i8; g.vertex_count()];
    let mut label_signs = vec![1i8; g.label_count()];
    for &(t, _) in &targets {
        accumulate_reversal_signs(g, t, label, &mut vertex_signs, &mut label_signs);
    }

    let map = GradedLinearMap::from_signs(
        build_lie(g),
        build_lie(&reversed),
        &vertex_signs,
        &label_signs,
    );
    Ok(verified_outcome(map, reversed))
}

/// For a connected, uniquely labeled graph: reverses the listed edges one
/// at a time (indices into the edge list, applied in the given order),
/// composing the single-edge isomorphisms, and verifies the composite
/// end-to-end.
pub fn orientation_isomorphism(
    g: &LabeledDigraph,
    edge_subset: &[usize],
) -> Result<ReversalOutcome, MorphismError> {
    if g.components().len() != 1 {
        return Err(MorphismError::NotConnected);
    }
    if g.label_count() != g.edge_count() {
        return Err(MorphismError::LabelsNotDistinct {
            labels: g.label_count(),
            edges: g.edge_count(),
        });
    }
    assert!(
        edge_subset.iter().all(|&i| i < g.edge_count()),
        "edge index out of range"
    );

    let source = build_lie(g);
    let mut current = g.clone();
    let mut composite = GradedLinearMap::identity(&source);
    for &idx in edge_subset {
        let e = current.edges()[idx];
        let step = reversal_isomorphism(&current, e.tail, e.head)?;
        composite = step.map().compose(&composite);
        current = step.graph().clone();
    }
    Ok(verified_outcome(composite, current))
}

/// Sweeps all `2^|E|` orientations of `g` (mask bit i reverses edge i)
/// and returns the first under which the candidate blocks verify as an
/// isomorphism from `source`. Budgeted to 8 edges.
pub fn find_isomorphism_by_orientation_search(
    source: &LieAlgebra,
    g: &LabeledDigraph,
    block_minus_one: &RationalMatrix,
    block_minus_two: &RationalMatrix,
) -> Result<Option<OrientationSearchHit>, MorphismError> {
    let e = g.edge_count();
    if e > SEARCH_MAX_EDGES {
        return Err(MorphismError::SearchBudget {
            max: SEARCH_MAX_EDGES,
            got: e,
        });
    }
    if block_minus_one.rows() != g.vertex_count()
        || block_minus_one.cols() != source.n()
        || block_minus_two.rows() != g.label_count()
        || block_minus_two.cols() != source.m()
    {
        return Ok(None);
    }

    let base_edges = g.edges().to_vec();
    for mask in 0u64..1 << e {
        let mut oriented = g.clone();
        for (i, edge) in base_edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                oriented = oriented.reverse_edge(edge.tail, edge.head)?;
            }
        }
        let map = GradedLinearMap::new(
            source.clone(),
            build_lie(&oriented),
            block_minus_one.clone(),
            block_minus_two.clone(),
        );
        if is_graded_lie_isomorphism(&map).ok() {
            return Ok(Some(OrientationSearchHit {
                mask,
                graph: oriented,
                map,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg_graph() -> LabeledDigraph {
        LabeledDigraph::parse("vertices: a b\nedge a -> b : u").unwrap()
    }

    fn path_graph() -> LabeledDigraph {
        LabeledDigraph::parse("vertices: x1 x2 x3\nedge x1 -> x2 : c1\nedge x2 -> x3 : c2\n")
            .unwrap()
    }

    fn k4_single_label() -> LabeledDigraph {
        LabeledDigraph::from_named_edges(
            &["x1", "x2", "x3", "x4"],
            &[
                ("x1", "x2", "c1"),
                ("x1", "x3", "c1"),
                ("x1", "x4", "c1"),
                ("x2", "x3", "c1"),
                ("x2", "x4", "c1"),
                ("x3", "x4", "c1"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_an_isomorphism() {
        for g in [heisenberg_graph(), path_graph(), k4_single_label()] {
            let alg = build_lie(&g);
            assert!(is_graded_lie_isomorphism(&GradedLinearMap::identity(&alg)).ok());
        }
    }

    #[test]
    fn apply_respects_blocks() {
        let alg = build_lie(&heisenberg_graph());
        let f = GradedLinearMap::from_signs(alg.clone(), alg.clone(), &[-1, 1], &[1]);
        let image = f.apply(&alg.basis_element(0));
        assert_eq!(image, alg.basis_element(0).scale(&rat(-1)));
        assert_eq!(f.apply(&alg.basis_element(2)), alg.basis_element(2));
    }

    #[test]
    fn singular_block_fails_verification() {
        let alg = build_lie(&heisenberg_graph());
        let f = GradedLinearMap::from_signs(alg.clone(), alg.clone(), &[0, 1], &[1]);
        let report = is_graded_lie_isomorphism(&f);
        assert!(!report.ok());
        assert!(!report.blocks_invertible);
    }

    #[test]
    fn single_edge_reversal_negates_the_tail() {
        let g = heisenberg_graph();
        let outcome = reversal_isomorphism(&g, 0, 1).unwrap();
        assert!(outcome.is_verified());
        let map = outcome.map();
        assert_eq!(map.block_minus_one[(0, 0)], rat(-1));
        assert_eq!(map.block_minus_one[(1, 1)], rat(1));
        assert_eq!(map.block_minus_two[(0, 0)], rat(1));
        assert_eq!(outcome.graph().serialize(), "vertices: a b\nedge b -> a : u\n");
        assert_eq!(map.describe(), vec!["a -> -a", "b -> b", "u -> u"]);
    }

    #[test]
    fn path_reversal_negates_the_shared_vertex_and_other_label() {
        let g = path_graph();
        let outcome = reversal_isomorphism(&g, 1, 2).unwrap();
        assert!(outcome.is_verified());
        let map = outcome.map();
        // tail x2 negated, its other incident label c1 negated, c2 fixed
        assert_eq!(map.block_minus_one[(1, 1)], rat(-1));
        assert_eq!(map.block_minus_one[(0, 0)], rat(1));
        assert_eq!(map.block_minus_two[(0, 0)], rat(-1));
        assert_eq!(map.block_minus_two[(1, 1)], rat(1));
    }

    #[test]
    fn repeated_label_is_rejected() {
        let err = reversal_isomorphism(&k4_single_label(), 0, 1).unwrap_err();
        assert_eq!(err, MorphismError::LabelNotUnique("c1".to_string(), 6));
    }

    #[test]
    fn double_reversal_composes_back_to_the_source() {
        let g = path_graph();
        let first = reversal_isomorphism(&g, 0, 1).unwrap();
        let second = reversal_isomorphism(first.graph(), 1, 0).unwrap();
        assert_eq!(second.graph(), &g);
        let round = second.map().compose(first.map());
        assert!(is_graded_lie_isomorphism(&round).ok());
        assert_eq!(round.target, build_lie(&g));
    }

    #[test]
    fn group_reversal_flips_every_edge_with_the_label() {
        let g = LabeledDigraph::parse(
            "vertices: x1 x2 x3 x4\nedge x1 -> x2 : x5\nedge x3 -> x4 : x5\n",
        )
        .unwrap();
        let outcome = relabel_group_reversal(&g, 0).unwrap();
        assert!(outcome.is_verified());
        assert_eq!(
            outcome.graph().serialize(),
            "vertices: x1 x2 x3 x4\nedge x2 -> x1 : x5\nedge x4 -> x3 : x5\n"
        );
        // both component tails negated
        let map = outcome.map();
        assert_eq!(map.block_minus_one[(0, 0)], rat(-1));
        assert_eq!(map.block_minus_one[(2, 2)], rat(-1));
    }

    #[test]
    fn group_reversal_needs_component_uniqueness() {
        let g = LabeledDigraph::parse(
            "vertices: a b c\nedge a -> b : u\nedge b -> c : u\nedge a -> c : v\n",
        )
        .unwrap();
        let err = relabel_group_reversal(&g, 0).unwrap_err();
        assert_eq!(err, MorphismError::LabelRepeatedInComponent("u".to_string(), 2));
    }

    #[test]
    fn orientation_composite_over_a_triangle() {
        let k3 = LabeledDigraph::parse(
            "vertices: x1 x2 x3\nedge x1 -> x2 : c1\nedge x1 -> x3 : c2\nedge x2 -> x3 : c3\n",
        )
        .unwrap();
        let outcome = orientation_isomorphism(&k3, &[0, 1, 2]).unwrap();
        assert!(outcome.is_verified());
        assert_eq!(
            outcome.graph().serialize(),
            "vertices: x1 x2 x3\nedge x2 -> x1 : c1\nedge x3 -> x1 : c2\nedge x3 -> x2 : c3\n"
        );
    }

    #[test]
    fn empty_edge_subset_gives_the_identity() {
        let g = path_graph();
        let outcome = orientation_isomorphism(&g, &[]).unwrap();
        assert!(outcome.is_verified());
        assert_eq!(outcome.map(), &GradedLinearMap::identity(&build_lie(&g)));
    }

    #[test]
    fn orientation_preconditions() {
        assert_eq!(
            orientation_isomorphism(&k4_single_label(), &[0]).unwrap_err(),
            MorphismError::LabelsNotDistinct { labels: 1, edges: 6 }
        );
        let disconnected = LabeledDigraph::parse(
            "vertices: a b c d\nedge a -> b : u\nedge c -> d : v\n",
        )
        .unwrap();
        assert_eq!(
            orientation_isomorphism(&disconnected, &[]).unwrap_err(),
            MorphismError::NotConnected
        );
    }

    #[test]
    fn orientation_search_finds_the_flipping_mask() {
        let g = heisenberg_graph();
        let source = build_lie(&g);
        // candidate negating the first vertex: works only with the edge
        // reversed, so the sweep must land on mask 1
        let b1 = RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, 1]]);
        let b2 = RationalMatrix::identity(1);
        let hit = find_isomorphism_by_orientation_search(&source, &g, &b1, &b2)
            .unwrap()
            .unwrap();
        assert_eq!(hit.mask, 1);
        assert!(is_graded_lie_isomorphism(&hit.map).ok());

        // identity candidate hits immediately at mask 0
        let id_hit = find_isomorphism_by_orientation_search(
            &source,
            &g,
            &RationalMatrix::identity(2),
            &RationalMatrix::identity(1),
        )
        .unwrap()
        .unwrap();
        assert_eq!(id_hit.mask, 0);
    }

    #[test]
    fn orientation_search_exhausts_on_singular_candidate() {
        let g = heisenberg_graph();
        let source = build_lie(&g);
        let b1 = RationalMatrix::zeros(2, 2);
        let b2 = RationalMatrix::identity(1);
        assert!(find_isomorphism_by_orientation_search(&source, &g, &b1, &b2)
            .unwrap()
            .is_none());
    }

    #[test]
    fn orientation_search_budget() {
        let mut vertices = vec![];
        let mut edges = vec![];
        let names: Vec<String> = (0..10).map(|i| format!("v{i}")).collect();
        let labels: Vec<String> = (0..9).map(|i| format!("c{i}")).collect();
        for name in &names {
            vertices.push(name.as_str());
        }
        for i in 0..9 {
            edges.push((names[i].as_str(), names[i + 1].as_str(), labels[i].as_str()));
        }
        let g = LabeledDigraph::from_named_edges(&vertices, &edges).unwrap();
        let source = build_lie(&g);
        let err = find_isomorphism_by_orientation_search(
            &source,
            &g,
            &RationalMatrix::identity(10),
            &RationalMatrix::identity(9),
        )
        .unwrap_err();
        assert_eq!(err, MorphismError::SearchBudget { max: 8, got: 9 });
    }
}
