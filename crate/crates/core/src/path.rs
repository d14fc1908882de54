//! Finite paths and the prefix order.
//!
//! A [`Path`] records its full vertex sequence next to its edge sequence, so
//! endpoints, prefixes and concatenation never need the ambient graph once the
//! path has been constructed (see [`crate::Graph::path`] and friends).

use std::cmp::Ordering;

use crate::graph::{EdgeRef, VertexId};

/// A vertex (length 0) or a nonempty sequence of composable edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeRef>,
}

/// Verdict of [`Path::compare`] in the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrefixOrder {
    Equal,
    /// The left path is a proper initial subpath of the right one.
    PrefixOf,
    /// The right path is a proper initial subpath of the left one.
    ExtensionOf,
    Incomparable,
}

impl PrefixOrder {
    pub fn comparable(self) -> bool {
        self != PrefixOrder::Incomparable
    }
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a path from raw parts; `vertices` must have exactly one more
    /// element than `edges`. Callers are responsible for composability.
    pub(crate) fn from_parts(vertices: Vec<VertexId>, edges: Vec<EdgeRef>) -> Self {
        debug_assert_eq!(vertices.len(), edges.len() + 1);
        Path { vertices, edges }
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        *self.vertices.last().expect("path has at least one vertex")
    }

    /// Number of edges. A path of length 0 is a vertex, never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// The vertices visited by the path, `len() + 1` of them.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn first_edge(&self) -> Option<EdgeRef> {
        self.edges.first().copied()
    }

    pub fn last_edge(&self) -> Option<EdgeRef> {
        self.edges.last().copied()
    }

    /// Appends an edge ending at `target`. The edge must start at `self.target()`.
    pub(crate) fn push(&mut self, edge: EdgeRef, target: VertexId) {
        self.edges.push(edge);
        self.vertices.push(target);
    }

    /// Concatenation `self · other`; vertices act as identities.
    /// Returns `None` when `self.target() != other.source()`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target() != other.source() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path { vertices, edges })
    }

    /// The initial subpath of length `k` (clamped to the path length).
    pub fn prefix(&self, k: usize) -> Path {
        let k = k.min(self.len());
        Path {
            vertices: self.vertices[..=k].to_vec(),
            edges: self.edges[..k].to_vec(),
        }
    }

    /// The final subpath obtained by dropping the first `k` edges.
    pub fn suffix_from(&self, k: usize) -> Path {
        let k = k.min(self.len());
        Path {
            vertices: self.vertices[k..].to_vec(),
            edges: self.edges[k..].to_vec(),
        }
    }

    /// The path without its last edge; `None` for vertices.
    pub fn without_last(&self) -> Option<Path> {
        if self.is_vertex() {
            None
        } else {
            Some(self.prefix(self.len() - 1))
        }
    }

    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.source() == other.source() && self.len() <= other.len() && other.edges[..self.len()] == self.edges[..]
    }

    /// If `prefix ⪯ self`, returns the `z` with `prefix · z = self`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if prefix.is_prefix_of(self) {
            Some(self.suffix_from(prefix.len()))
        } else {
            None
        }
    }

    pub fn compare(&self, other: &Path) -> PrefixOrder {
        if self == other {
            PrefixOrder::Equal
        } else if self.is_prefix_of(other) {
            PrefixOrder::PrefixOf
        } else if other.is_prefix_of(self) {
            PrefixOrder::ExtensionOf
        } else {
            PrefixOrder::Incomparable
        }
    }

    pub fn comparable(&self, other: &Path) -> bool {
        self.compare(other).comparable()
    }

    pub(crate) fn any_edge(&self, pred: impl Fn(EdgeRef) -> bool) -> bool {
        self.edges.iter().any(|&e| pred(e))
    }
}

/// Canonical order: shorter paths first, then lexicographic in edge
/// declaration order; vertices are ordered by declaration.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
