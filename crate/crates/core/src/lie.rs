//! The 2-step nilpotent Lie algebra of a labeled directed graph.
//!
//! The algebra is spanned by the vertices (degree −1) and the labels
//! (degree −2). The only nonzero basis brackets are `[x_i, x_j] = ±c_l`
//! where an edge joins `x_i` and `x_j` with label `c_l`, the sign tracking
//! the edge direction; labels are central. All structure constants are 0,
//! 1 or −1, so the bracket is exact over the rationals.

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{GraphError, LabeledDigraph};
use crate::linalg::{is_zero_vec, rat, Rational, RationalMatrix};

/// Stratified 2-step nilpotent Lie algebra with a fixed graded basis.
///
/// Basis order is vertices (`minus_one`) then labels (`minus_two`); the
/// structure tensor `s[i][j][l]` gives `[x_i, x_j] = Σ_l s[i][j][l]·c_l`
/// and is stored densely in row-major `(i, j, l)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    minus_one: Vec<String>,
    minus_two: Vec<String>,
    structure: Vec<i8>,
}

/// Element in the concatenated basis (vertex coordinates then label
/// coordinates), exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub coords: Vec<Rational>,
}

/// Errors when reading a structure tensor back into a graph.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("structure constant {value} at ({i}, {j}, {l}) outside {{-1, 0, 1}}")]
    BadConstant { i: String, j: String, l: String, value: i8 },
    #[error("tensor not antisymmetric at pair ({0}, {1})")]
    NotAntisymmetric(String, String),
    #[error("two labels on pair ({0}, {1})")]
    TwoLabelsOnPair(String, String),
    #[error("label `{0}` occurs in no bracket")]
    UnusedLabel(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Outcome of the four axiom checks; witnesses index the concatenated
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub antisymmetry_witness: Option<(usize, usize)>,
    pub jacobi_witness: Option<(usize, usize, usize)>,
    pub nilpotency_witness: Option<(usize, usize, usize)>,
    /// Dimension of span{[b_a, b_b]}; generation holds when it equals the
    /// degree −2 dimension.
    pub generated_dim: usize,
    pub minus_two_dim: usize,
}

impl AxiomReport {
    pub fn antisymmetry_ok(&self) -> bool {
        self.antisymmetry_witness.is_none()
    }

    pub fn jacobi_ok(&self) -> bool {
        self.jacobi_witness.is_none()
    }

    pub fn nilpotency_ok(&self) -> bool {
        self.nilpotency_witness.is_none()
    }

    pub fn generation_ok(&self) -> bool {
        self.generated_dim == self.minus_two_dim
    }

    pub fn all_ok(&self) -> bool {
        self.antisymmetry_ok() && self.jacobi_ok() && self.nilpotency_ok() && self.generation_ok()
    }
}

/// Builds the algebra of a graph: `[x_i, x_j] = c_l` for each edge
/// `x_i → x_j` labeled `c_l`, extended antisymmetrically, labels central.
pub fn build_lie(g: &LabeledDigraph) -> LieAlgebra {
    let n = g.vertex_count();
    let m = g.label_count();
    let mut structure = vec![0i8; n * n * m];
    for e in g.edges() {
        structure[(e.tail * n + e.head) * m + e.label] = 1;
        structure[(e.head * n + e.tail) * m + e.label] = -1;
    }
    LieAlgebra {
        minus_one: g.vertices().to_vec(),
        minus_two: g.labels().to_vec(),
        structure,
    }
}

impl LieAlgebra {
    /// Wraps a raw tensor without validating the algebra invariants, so
    /// that deliberately broken tensors can be fed to [`verify_axioms`]
    /// and [`graph_from_algebra`]. Only the shape is checked.
    pub fn from_tensor(minus_one: Vec<String>, minus_two: Vec<String>, structure: Vec<i8>) -> Self {
        let (n, m) = (minus_one.len(), minus_two.len());
        assert_eq!(structure.len(), n * n * m, "tensor shape mismatch");
        LieAlgebra {
            minus_one,
            minus_two,
            structure,
        }
    }

    /// Degree −1 dimension (vertex count).
    pub fn n(&self) -> usize {
        self.minus_one.len()
    }

    /// Degree −2 dimension (label count).
    pub fn m(&self) -> usize {
        self.minus_two.len()
    }

    pub fn dim(&self) -> usize {
        self.n() + self.m()
    }

    pub fn minus_one_basis(&self) -> &[String] {
        &self.minus_one
    }

    pub fn minus_two_basis(&self) -> &[String] {
        &self.minus_two
    }

    /// The two graded basis lists.
    pub fn stratification(&self) -> (&[String], &[String]) {
        (&self.minus_one, &self.minus_two)
    }

    /// Name of a concatenated-basis vector (vertices first, then labels).
    pub fn basis_name(&self, idx: usize) -> &str {
        if idx < self.n() {
            &self.minus_one[idx]
        } else {
            &self.minus_two[idx - self.n()]
        }
    }

    /// Structure constant of `[x_i, x_j]` on `c_l`.
    pub fn structure(&self, i: usize, j: usize, l: usize) -> i8 {
        self.structure[(i * self.n() + j) * self.m() + l]
    }

    pub fn zero_element(&self) -> Element {
        Element {
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    /// Basis vector of the concatenated basis.
    pub fn basis_element(&self, idx: usize) -> Element {
        assert!(idx < self.dim(), "basis index out of range");
        let mut e = self.zero_element();
        e.coords[idx] = rat(1);
        e
    }

    /// Bilinear bracket. Only vertex coordinates interact; the result is
    /// supported on label coordinates. Panics on mis-sized elements.
    pub fn bracket(&self, u: &Element, v: &Element) -> Element {
        let (n, m) = (self.n(), self.m());
        assert_eq!(u.coords.len(), self.dim(), "element sized for another algebra");
        assert_eq!(v.coords.len(), self.dim(), "element sized for another algebra");
        let mut out = self.zero_element();
        for i in 0..n {
            if u.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v.coords[j].is_zero() {
                    continue;
                }
                for l in 0..m {
                    let s = self.structure(i, j, l);
                    if s != 0 {
                        let term = &u.coords[i] * &v.coords[j] * rat(s.into());
                        out.coords[n + l] += term;
                    }
                }
            }
        }
        out
    }

    /// JSON description used by the command-line `info` output:
    /// `{dim, generators, relations: [{left, right, result, sign}]}`.
    /// Relations run over vertex pairs i < j in basis order.
    pub fn info_json(&self) -> Value {
        let mut relations = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                for l in 0..self.m() {
                    let s = self.structure(i, j, l);
                    if s != 0 {
                        relations.push(json!({
                            "left": self.minus_one[i],
                            "right": self.minus_one[j],
                            "result": self.minus_two[l],
                            "sign": s,
                        }));
                    }
                }
            }
        }
        json!({
            "dim": self.dim(),
            "generators": self.minus_one,
            "relations": relations,
        })
    }
}

impl Element {
    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.coords.len(), other.coords.len());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.coords.len(), other.coords.len());
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Element {
        Element {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

/// Checks antisymmetry, Jacobi, 2-step nilpotency and stratified
/// generation exhaustively over all basis tuples of the concatenated
/// basis.
pub fn verify_axioms(alg: &LieAlgebra) -> AxiomReport {
    let d = alg.dim();
    let basis: Vec<Element> = (0..d).map(|i| alg.basis_element(i)).collect();
    let pair: Vec<Vec<Element>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| alg.bracket(a, b)).collect())
        .collect();

    let mut antisymmetry_witness = None;
    'anti: for a in 0..d {
        for b in a..d {
            if !pair[a][b].add(&pair[b][a]).is_zero() {
                antisymmetry_witness = Some((a, b));
                break 'anti;
            }
        }
    }

    let mut jacobi_witness = None;
    let mut nilpotency_witness = None;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let abc = alg.bracket(&pair[a][b], &basis[c]);
                if nilpotency_witness.is_none() && !abc.is_zero() {
                    nilpotency_witness = Some((a, b, c));
                }
                if jacobi_witness.is_none() {
                    let bca = alg.bracket(&pair[b][c], &basis[a]);
                    let cab = alg.bracket(&pair[c][a], &basis[b]);
                    if !abc.add(&bca).add(&cab).is_zero() {
                        jacobi_witness = Some((a, b, c));
                    }
                }
            }
        }
    }

    // span of all basis brackets, projected to the label coordinates
    let n = alg.n();
    let mut rows = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let coords = &pair[a][b].coords;
            if !is_zero_vec(coords) {
                rows.push(coords[n..].to_vec());
            }
        }
    }
    let generated_dim = if rows.is_empty() {
        0
    } else {
        RationalMatrix::from_rows(rows).rank()
    };

    AxiomReport {
        antisymmetry_witness,
        jacobi_witness,
        nilpotency_witness,
        generated_dim,
        minus_two_dim: alg.m(),
    }
}

/// Reads a structure tensor back into a labeled directed graph.
///
/// Each vertex pair carries at most one label; the edge is oriented so the
/// stored constant on it is +1. Edges are emitted label-major (grouped by
/// degree −2 basis order), which makes `build_lie(graph_from_algebra(a)) =
/// a` exact and keeps the graph's first-use label order equal to the
/// algebra's label order.
pub fn graph_from_algebra(alg: &LieAlgebra) -> Result<LabeledDigraph, LieError> {
    let (n, m) = (alg.n(), alg.m());
    for i in 0..n {
        for j in 0..n {
            for l in 0..m {
                let s = alg.structure(i, j, l);
                if !(-1..=1).contains(&s) {
                    return Err(LieError::BadConstant {
                        i: alg.minus_one[i].clone(),
                        j: alg.minus_one[j].clone(),
                        l: alg.minus_two[l].clone(),
                        value: s,
                    });
                }
                if s != -alg.structure(j, i, l) {
                    return Err(LieError::NotAntisymmetric(
                        alg.minus_one[i].clone(),
                        alg.minus_one[j].clone(),
                    ));
                }
            }
        }
    }

    // pair -> (label, sign), rejecting any second label on the same pair
    let mut pair_label = vec![None; n * n];
    for i in 0..n {
        for j in i + 1..n {
            for l in 0..m {
                let s = alg.structure(i, j, l);
                if s == 0 {
                    continue;
                }
                if pair_label[i * n + j].is_some() {
                    return Err(LieError::TwoLabelsOnPair(
                        alg.minus_one[i].clone(),
                        alg.minus_one[j].clone(),
                    ));
                }
                pair_label[i * n + j] = Some((l, s));
            }
        }
    }

    let mut edges: Vec<(&str, &str, &str)> = Vec::new();
    for l in 0..m {
        let mut used = false;
        for i in 0..n {
            for j in i + 1..n {
                if pair_label[i * n + j] == Some((l, 1)) {
                    edges.push((&alg.minus_one[i], &alg.minus_one[j], &alg.minus_two[l]));
                    used = true;
                } else if pair_label[i * n + j] == Some((l, -1)) {
                    edges.push((&alg.minus_one[j], &alg.minus_one[i], &alg.minus_two[l]));
                    used = true;
                }
            }
        }
        if !used {
            return Err(LieError::UnusedLabel(alg.minus_two[l].clone()));
        }
    }

    let names: Vec<&str> = alg.minus_one.iter().map(String::as_str).collect();
    Ok(LabeledDigraph::from_named_edges(&names, &edges)?)
}
