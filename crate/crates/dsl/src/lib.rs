//! The `.qv` text format for graphs, homomorphisms and relations, the
//! fixture corpus, and the `relgraph` command-line tool.

pub mod checks;
pub mod cli;
pub mod document;
pub mod dot;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod syntax;

pub use checks::evaluate;
pub use document::{parse_document, Document, Hom, Object};
pub use error::{DslError, ErrorKind, Span};
pub use expr::parse_element;
pub use fixtures::{corpus, fixture, Expectation, Fixture, Origin};
