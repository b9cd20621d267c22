//! Labeled directed simple graphs and their matrices.
//!
//! A graph here is a finite simple directed graph together with a surjective
//! labeling of its edges: the combinatorial object from which the 2-step
//! nilpotent algebra is built. Vertices, edges and labels all keep a fixed
//! declaration order so every downstream enumeration and matrix is
//! reproducible. Labels are always stored in first-use order of the edge
//! list; this makes text serialization an exact inverse of parsing.

use std::fmt;

use thiserror::Error;

use crate::linalg::{rat, RationalMatrix};

/// One directed labeled edge, all fields indices into the owning graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub label: usize,
}

/// Finite simple directed graph with a surjective edge labeling.
///
/// Invariants (enforced by every constructor):
/// - no loops, and at most one edge per unordered vertex pair;
/// - every label is carried by at least one edge;
/// - vertex names and label names are valid identifiers (`[A-Za-z0-9_]+`),
///   internally duplicate-free, and disjoint from each other;
/// - `labels` is ordered by first use along `edges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    vertices: Vec<String>,
    labels: Vec<String>,
    edges: Vec<Edge>,
}

/// Errors from graph construction, parsing, and lookups.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid identifier `{0}` (need nonempty [A-Za-z0-9_])")]
    InvalidName(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("name `{0}` is used as both a vertex and a label")]
    NameClash(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}` (graph must be simple)")]
    LoopEdge(String),
    #[error("vertices `{0}` and `{1}` are already joined (graph must be simple)")]
    DuplicatePair(String, String),
    #[error("no edge {0} -> {1}")]
    EdgeNotFound(String, String),
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Incremental builder shared by `parse` and the programmatic constructors;
/// maintains every graph invariant as items arrive.
struct Builder {
    vertices: Vec<String>,
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            vertices: Vec::new(),
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn add_vertex(&mut self, name: &str) -> Result<(), GraphError> {
        if !is_identifier(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.vertices.iter().any(|v| v == name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        if self.labels.iter().any(|l| l == name) {
            return Err(GraphError::NameClash(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(())
    }

    fn add_edge(&mut self, tail: &str, head: &str, label: &str) -> Result<(), GraphError> {
        let t = self
            .vertices
            .iter()
            .position(|v| v == tail)
            .ok_or_else(|| GraphError::UnknownVertex(tail.to_string()))?;
        let h = self
            .vertices
            .iter()
            .position(|v| v == head)
            .ok_or_else(|| GraphError::UnknownVertex(head.to_string()))?;
        if t == h {
            return Err(GraphError::LoopEdge(tail.to_string()));
        }
        if self
            .edges
            .iter()
            .any(|e| (e.tail, e.head) == (t, h) || (e.tail, e.head) == (h, t))
        {
            return Err(GraphError::DuplicatePair(tail.to_string(), head.to_string()));
        }
        if !is_identifier(label) {
            return Err(GraphError::InvalidName(label.to_string()));
        }
        if self.vertices.iter().any(|v| v == label) {
            return Err(GraphError::NameClash(label.to_string()));
        }
        let l = self
            .labels
            .iter()
            .position(|c| c == label)
            .unwrap_or_else(|| {
                self.labels.push(label.to_string());
                self.labels.len() - 1
            });
        self.edges.push(Edge {
            tail: t,
            head: h,
            label: l,
        });
        Ok(())
    }

    fn finish(self) -> LabeledDigraph {
        LabeledDigraph {
            vertices: self.vertices,
            labels: self.labels,
            edges: self.edges,
        }
    }
}

impl LabeledDigraph {
    /// Builds from vertex names and `(tail, head, label)` name triples.
    /// Label order is first use along `edges`.
    pub fn from_named_edges(
        vertices: &[&str],
        edges: &[(&str, &str, &str)],
    ) -> Result<Self, GraphError> {
        let mut b = Builder::new();
        for v in vertices {
            b.add_vertex(v)?;
        }
        for (t, h, l) in edges {
            b.add_edge(t, h, l)?;
        }
        Ok(b.finish())
    }

    /// Parses the `.lg` text format.
    ///
    /// The format is line-oriented UTF-8; `#` starts a comment. `vertices:`
    /// lines (one or more, cumulative) declare vertex names, `edge TAIL ->
    /// HEAD : LABEL` lines declare edges referencing vertices already
    /// declared. Labels are declared implicitly by use. Whitespace around
    /// tokens is ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut b = Builder::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: GraphError| GraphError::Parse {
                line: lineno,
                message: e.to_string(),
            };
            if let Some(rest) = line.strip_prefix("vertices:") {
                for name in rest.split_whitespace() {
                    b.add_vertex(name).map_err(at)?;
                }
            } else if let Some(rest) = line
                .strip_prefix("edge")
                .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
            {
                let (tail, target) = rest.split_once("->").ok_or(GraphError::Parse {
                    line: lineno,
                    message: "expected `edge TAIL -> HEAD : LABEL`".to_string(),
                })?;
                let (head, label) = target.split_once(':').ok_or(GraphError::Parse {
                    line: lineno,
                    message: "expected `: LABEL` after the head vertex".to_string(),
                })?;
                b.add_edge(tail.trim(), head.trim(), label.trim())
                    .map_err(at)?;
            } else {
                return Err(GraphError::Parse {
                    line: lineno,
                    message: format!("unrecognized line `{line}`"),
                });
            }
        }
        Ok(b.finish())
    }

    /// Writes the `.lg` text form; `parse(serialize(g)) = g` with identical
    /// vertex, edge and label orderings.
    pub fn serialize(&self) -> String {
        let mut out = String::from("vertices:");
        for v in &self.vertices {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} -> {} : {}\n",
                self.vertices[e.tail], self.vertices[e.head], self.labels[e.label]
            ));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn label_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn label_name(&self, l: usize) -> &str {
        &self.labels[l]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// Number of edges carrying the given label.
    pub fn label_multiplicity(&self, label: usize) -> usize {
        self.edges.iter().filter(|e| e.label == label).count()
    }

    /// Symmetric 0/1 adjacency matrix of the underlying undirected graph.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut a = vec![vec![0i64; n]; n];
        for e in &self.edges {
            a[e.tail][e.head] = 1;
            a[e.head][e.tail] = 1;
        }
        a
    }

    /// Diagonal matrix of undirected vertex degrees.
    pub fn valency(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut b = vec![vec![0i64; n]; n];
        for e in &self.edges {
            b[e.tail][e.tail] += 1;
            b[e.head][e.head] += 1;
        }
        b
    }

    /// Laplacian in the adjacency-minus-valency sign convention (the
    /// negative of the common degree-minus-adjacency form; its kernel is the
    /// same either way).
    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        let mut l = self.adjacency();
        let b = self.valency();
        for (lr, br) in l.iter_mut().zip(&b) {
            for (lv, bv) in lr.iter_mut().zip(br) {
                *lv -= bv;
            }
        }
        l
    }

    /// Connected-component count as the exact rational nullity of the
    /// Laplacian.
    pub fn component_count_spectral(&self) -> usize {
        let n = self.vertices.len();
        let rows = self
            .laplacian()
            .into_iter()
            .map(|r| r.into_iter().map(rat).collect())
            .collect();
        let m = RationalMatrix::from_rows(rows);
        n - if n == 0 { 0 } else { m.rank() }
    }

    /// Connected components as sorted vertex-index sets, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertices.len());
        for e in &self.edges {
            uf.union(e.tail, e.head);
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of_root = vec![usize::MAX; self.vertices.len()];
        for v in 0..self.vertices.len() {
            let r = uf.find(v);
            if group_of_root[r] == usize::MAX {
                group_of_root[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of_root[r]].push(v);
        }
        groups
    }

    /// Component id per vertex, numbered in [`Self::components`] order.
    pub fn component_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.vertices.len()];
        for (c, group) in self.components().iter().enumerate() {
            for &v in group {
                idx[v] = c;
            }
        }
        idx
    }

    /// Induced subgraph on a vertex-index subset: all edges with both
    /// endpoints inside, labels re-derived so the labeling stays surjective.
    /// The subset is deduplicated and taken in ascending original order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> LabeledDigraph {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        assert!(
            keep.iter().all(|&v| v < self.vertices.len()),
            "vertex index out of range"
        );
        let mut b = Builder::new();
        for &v in &keep {
            b.add_vertex(&self.vertices[v]).expect("subset of valid graph");
        }
        for e in &self.edges {
            if keep.contains(&e.tail) && keep.contains(&e.head) {
                b.add_edge(
                    &self.vertices[e.tail],
                    &self.vertices[e.head],
                    &self.labels[e.label],
                )
                .expect("edges of valid graph");
            }
        }
        b.finish()
    }

    /// Name-based form of [`Self::induced_subgraph`] for callers holding
    /// user input.
    pub fn induced_subgraph_by_names(&self, names: &[&str]) -> Result<LabeledDigraph, GraphError> {
        let subset = names
            .iter()
            .map(|n| {
                self.vertex_index(n)
                    .ok_or_else(|| GraphError::UnknownVertex(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.induced_subgraph(&subset))
    }

    /// Same graph with the single edge `tail -> head` reversed; vertex,
    /// edge, and label orderings are untouched.
    pub fn reverse_edge(&self, tail: usize, head: usize) -> Result<LabeledDigraph, GraphError> {
        let mut g = self.clone();
        let e = g
            .edges
            .iter_mut()
            .find(|e| e.tail == tail && e.head == head)
            .ok_or_else(|| {
                GraphError::EdgeNotFound(
                    self.vertices.get(tail).cloned().unwrap_or_else(|| tail.to_string()),
                    self.vertices.get(head).cloned().unwrap_or_else(|| head.to_string()),
                )
            })?;
        std::mem::swap(&mut e.tail, &mut e.head);
        Ok(g)
    }

    pub fn reverse_edge_by_names(&self, tail: &str, head: &str) -> Result<LabeledDigraph, GraphError> {
        let t = self
            .vertex_index(tail)
            .ok_or_else(|| GraphError::UnknownVertex(tail.to_string()))?;
        let h = self
            .vertex_index(head)
            .ok_or_else(|| GraphError::UnknownVertex(head.to_string()))?;
        self.reverse_edge(t, h)
    }

    /// All vertices joined to `v` by an edge in either direction, ascending.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        assert!(v < self.vertices.len(), "vertex index out of range");
        let mut ns: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.tail == v {
                    Some(e.head)
                } else if e.head == v {
                    Some(e.tail)
                } else {
                    None
                }
            })
            .collect();
        ns.sort_unstable();
        ns
    }

    pub fn neighborhood_by_name(&self, name: &str) -> Result<Vec<usize>, GraphError> {
        let v = self
            .vertex_index(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))?;
        Ok(self.neighborhood(v))
    }

    /// Signed-label lookup table for this graph.
    pub fn signed_labels(&self) -> SignedLabelMap {
        SignedLabelMap::new(self)
    }
}

impl fmt::Display for LabeledDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Antisymmetric map from ordered vertex pairs to signed labels:
/// `get(x, y)` is `(label, +1)` for an edge x→y, `(label, −1)` for y→x, and
/// `None` when the pair is not adjacent.
pub struct SignedLabelMap {
    n: usize,
    table: Vec<Option<(usize, i8)>>,
}

impl SignedLabelMap {
    fn new(g: &LabeledDigraph) -> Self {
        let n = g.vertex_count();
        let mut table = vec![None; n * n];
        for e in g.edges() {
            table[e.tail * n + e.head] = Some((e.label, 1));
            table[e.head * n + e.tail] = Some((e.label, -1));
        }
        SignedLabelMap { n, table }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<(usize, i8)> {
        self.table[x * self.n + y]
    }
}

/// Classic union-find with path halving and union by size.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
