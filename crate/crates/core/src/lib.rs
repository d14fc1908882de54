//! Relation morphisms of directed graphs and the algebras they induce.
//!
//! Graphs and paths live in [`graph`] and [`path`]; graph and path
//! homomorphisms in [`morphism`]; relation morphisms, their composition,
//! admissibility and factorizations in [`relation`]; the path, Cohn and
//! Leavitt path algebras in [`algebra`]; and induced algebra homomorphisms in
//! [`induced`].

pub mod algebra;
pub mod graph;
pub mod induced;
pub mod morphism;
pub mod path;
pub mod random;
pub mod relation;

pub use algebra::{
    acyclic_basis, default_special_edges, normalize_words, normalize_words_with, relators, Algebra, AlgebraError,
    Element, Generator, Level, Monomial, Relator, RelatorKind, Scalar, SpecialEdges, Word,
};
pub use graph::{
    Cardinality, EdgeFamily, EdgeRef, FamilyId, FamilySpec, Graph, GraphError, GraphSpec, VertexClassification,
    VertexId,
};
pub use induced::{
    functoriality_gap, induce, induce_between, induce_unchecked, FunctorialityGap, InduceError, InducedHom,
};
pub use morphism::{
    GraphHom, GraphHomCategory, GraphHomClassification, MorphismError, PathHom, PathHomCategory, PathHomClassification,
};
pub use path::{Path, PrefixOrder};
pub use relation::{
    admissibility_report, compose_generators, compose_relations, lift_graph_hom, lower_path_hom, pullback_factorize,
    pushout_obstruction, transitive_closure_check, universal_mediator, AdmissibilityReport, Factorization, Mediator,
    PushoutWitness, RelationCategory, RelationError, RelationMorphism, TransitivityWitness,
};
