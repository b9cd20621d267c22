//! 2-step nilpotent Lie algebras of labeled directed graphs.
//!
//! A labeled digraph determines a 2-step nilpotent Lie algebra: the
//! vertices span the generating stratum, the edge labels span the
//! derived stratum, and each edge `a -> b : u` imposes the bracket
//! relation `[a, b] = u`. This crate builds that algebra over the
//! rationals and implements the structure theory that is visible in the
//! graph itself:
//!
//! - [`graph`] — the labeled digraph type, its `.lg` text format, and
//!   matrix invariants (adjacency, valency, and their difference, whose
//!   kernel counts connected components);
//! - [`lie`] — structure constants, brackets, axiom verification, and
//!   recovery of the graph from a bracket tensor;
//! - [`substructure`] — subalgebras and ideals spanned by vertex subsets
//!   together with their induced labels, and the combinatorial ideal
//!   criterion;
//! - [`morphism`] — graded isomorphisms, in particular the explicit
//!   basis change that undoes an edge reversal and its obstruction;
//! - [`derivation`] — the graded derivations that preserve each stratum,
//!   computed by exact rational elimination, with closed-form dimension
//!   checks for complete bipartite graphs;
//! - [`catalog`] — named reference graphs with recorded substructure
//!   expectations, re-verifiable on demand;
//! - [`linalg`] — dense exact rational matrices (reduced row echelon
//!   form, rank, nullspace).
//!
//! All computation is exact: matrix entries are arbitrary-precision
//! rationals and structure constants are `{-1, 0, 1}`.

pub mod catalog;
pub mod derivation;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod morphism;
pub mod substructure;

pub use catalog::{all_entries, get, names, verify_entry, CatalogEntry, CatalogError,
                  CatalogVerifyReport};
pub use derivation::{build_kmn_distinct_labels, build_kmn_single_label, der0, derivation_system,
                     kmn_dimension_formula, DerivationError, DerivationSpace, DerivationSystem,
                     KmnLabeling};
pub use graph::{Edge, GraphError, LabeledDigraph};
pub use lie::{build_lie, graph_from_algebra, verify_axioms, AxiomReport, Element, LieAlgebra,
              LieError};
pub use linalg::{rat, ratio, RationalMatrix, Rational};
pub use morphism::{find_isomorphism_by_orientation_search, is_graded_lie_isomorphism,
                   orientation_isomorphism, relabel_group_reversal, reversal_isomorphism,
                   GradedLinearMap, IsoReport, MorphismError, OrientationSearchHit,
                   ReversalOutcome};
pub use substructure::{analyze_subset, analyze_subset_by_names, component_ideals,
                       enumerate_substructures, SubstructureReport, TrivialReason};
