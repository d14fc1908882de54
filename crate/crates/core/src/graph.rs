//! Directed graphs with named vertices and parallel edge families.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::path::Path;

/// Index of a vertex in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge family in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId(pub usize);

/// One member of an edge family. Ordering is the canonical edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub family: FamilyId,
    pub index: usize,
}

impl EdgeRef {
    pub fn new(family: FamilyId, index: usize) -> Self {
        EdgeRef { family, index }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFamily {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
    pub cardinality: Cardinality,
}

impl EdgeFamily {
    pub fn is_infinite(&self) -> bool {
        self.cardinality == Cardinality::Infinite
    }

    /// Members that take part in enumeration: all of a finite family, the
    /// index-0 representative of an infinite one.
    pub fn listed_members(&self) -> usize {
        match self.cardinality {
            Cardinality::Finite(n) => n,
            Cardinality::Infinite => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("dangling endpoint: edge `{family}` refers to undeclared vertex `{vertex}`")]
    DanglingEndpoint { family: String, vertex: String },
    #[error("vertex `{0}` is declared twice")]
    DuplicateVertex(String),
    #[error("edge `{0}` is declared twice")]
    DuplicateEdge(String),
    #[error("`{0}` is used both as a vertex and as an edge")]
    NameClash(String),
    #[error("edge family `{0}` has cardinality zero")]
    ZeroCardinality(String),
    #[error("paths do not compose: `{left}` ends at `{at}` but `{right}` starts at `{from}`")]
    NotComposable {
        left: String,
        right: String,
        at: String,
        from: String,
    },
    #[error("graph has an infinite edge family `{0}`")]
    InfiniteFamily(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edge index {index} is out of range for `{family}`")]
    IndexOutOfRange { family: String, index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub source: String,
    pub target: String,
    pub cardinality: Cardinality,
}

/// Unvalidated description of a graph, turned into a [`Graph`] by [`GraphSpec::build`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub families: Vec<FamilySpec>,
}

impl GraphSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn edge(self, name: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Self {
        self.family(name, source, target, Cardinality::Finite(1))
    }

    pub fn family(
        mut self,
        name: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
        cardinality: Cardinality,
    ) -> Self {
        self.families.push(FamilySpec {
            name: name.into(),
            source: source.into(),
            target: target.into(),
            cardinality,
        });
        self
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        Graph::new(self)
    }
}

/// Sinks, infinite emitters, regular and zero-regular vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClassification {
    pub sinks: BTreeSet<VertexId>,
    pub infinite_emitters: BTreeSet<VertexId>,
    pub regular: BTreeSet<VertexId>,
    /// Regular vertices emitting exactly one edge, which is a loop.
    pub zero_regular: BTreeSet<VertexId>,
    pub row_finite: bool,
}

/// A validated directed graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    families: Vec<EdgeFamily>,
    vertex_index: HashMap<String, VertexId>,
    family_index: HashMap<String, FamilyId>,
    out_families: Vec<Vec<FamilyId>>,
    classes: VertexClassification,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.families == other.families
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new(spec: GraphSpec) -> Result<Graph, GraphError> {
        let mut vertex_index = HashMap::new();
        for (i, name) in spec.vertices.iter().enumerate() {
            if vertex_index.insert(name.clone(), VertexId(i)).is_some() {
                return Err(GraphError::DuplicateVertex(name.clone()));
            }
        }
        let mut family_index = HashMap::new();
        let mut families = Vec::with_capacity(spec.families.len());
        for (i, f) in spec.families.into_iter().enumerate() {
            if vertex_index.contains_key(&f.name) {
                return Err(GraphError::NameClash(f.name));
            }
            if family_index.insert(f.name.clone(), FamilyId(i)).is_some() {
                return Err(GraphError::DuplicateEdge(f.name));
            }
            if f.cardinality == Cardinality::Finite(0) {
                return Err(GraphError::ZeroCardinality(f.name));
            }
            let lookup = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| GraphError::DanglingEndpoint {
                        family: f.name.clone(),
                        vertex: v.to_string(),
                    })
            };
            let source = lookup(&f.source)?;
            let target = lookup(&f.target)?;
            families.push(EdgeFamily {
                name: f.name,
                source,
                target,
                cardinality: f.cardinality,
            });
        }
        let mut out_families = vec![Vec::new(); spec.vertices.len()];
        for (i, f) in families.iter().enumerate() {
            out_families[f.source.0].push(FamilyId(i));
        }
        let classes = classify(&families, &out_families);
        Ok(Graph {
            vertices: spec.vertices,
            families,
            vertex_index,
            family_index,
            out_families,
            classes,
        })
    }

    /// The description this graph was built from.
    pub fn spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertices.clone(),
            families: self
                .families
                .iter()
                .map(|f| FamilySpec {
                    name: f.name.clone(),
                    source: self.vertex_name(f.source).to_string(),
                    target: self.vertex_name(f.target).to_string(),
                    cardinality: f.cardinality,
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn family_count(&self) -> usize {
        self.families.len()
    }

    pub fn families(&self) -> impl Iterator<Item = (FamilyId, &EdgeFamily)> + '_ {
        self.families.iter().enumerate().map(|(i, f)| (FamilyId(i), f))
    }

    pub fn family(&self, id: FamilyId) -> &EdgeFamily {
        &self.families[id.0]
    }

    pub fn family_id(&self, name: &str) -> Option<FamilyId> {
        self.family_index.get(name).copied()
    }

    pub fn has_infinite_families(&self) -> bool {
        self.families.iter().any(EdgeFamily::is_infinite)
    }

    pub fn infinite_families(&self) -> impl Iterator<Item = FamilyId> + '_ {
        self.families().filter(|(_, f)| f.is_infinite()).map(|(id, _)| id)
    }

    pub fn source(&self, e: EdgeRef) -> VertexId {
        self.families[e.family.0].source
    }

    pub fn target(&self, e: EdgeRef) -> VertexId {
        self.families[e.family.0].target
    }

    pub fn is_infinite(&self, e: EdgeRef) -> bool {
        self.families[e.family.0].is_infinite()
    }

    pub fn contains_edge(&self, e: EdgeRef) -> bool {
        match self.families.get(e.family.0).map(|f| f.cardinality) {
            Some(Cardinality::Finite(n)) => e.index < n,
            Some(Cardinality::Infinite) => true,
            None => false,
        }
    }

    /// Every finite-family edge followed by each infinite family's
    /// representative, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.families()
            .flat_map(|(id, f)| (0..f.listed_members()).map(move |i| EdgeRef::new(id, i)))
    }

    /// Edges of finite families only.
    pub fn finite_edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges().filter(|&e| !self.is_infinite(e))
    }

    pub fn finite_edge_count(&self) -> usize {
        self.finite_edges().count()
    }

    /// Out-edges of `v` under representative compression, in canonical order.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeRef> + '_ {
        self.out_families[v.0]
            .iter()
            .flat_map(move |&id| (0..self.families[id.0].listed_members()).map(move |i| EdgeRef::new(id, i)))
    }

    /// Number of out-edges of `v`, or `None` for infinite emitters.
    pub fn out_degree(&self, v: VertexId) -> Option<usize> {
        let mut n = 0;
        for id in &self.out_families[v.0] {
            match self.families[id.0].cardinality {
                Cardinality::Finite(k) => n += k,
                Cardinality::Infinite => return None,
            }
        }
        Some(n)
    }

    /// Finite-family edges ending at `v`, in canonical order.
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeRef> + '_ {
        self.finite_edges().filter(move |&e| self.target(e) == v)
    }

    pub fn classification(&self) -> &VertexClassification {
        &self.classes
    }

    pub fn is_regular(&self, v: VertexId) -> bool {
        self.classes.regular.contains(&v)
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.classes.sinks.contains(&v)
    }

    pub fn edge_name(&self, e: EdgeRef) -> String {
        let f = &self.families[e.family.0];
        match f.cardinality {
            Cardinality::Finite(1) => f.name.clone(),
            _ => format!("{}[{}]", f.name, e.index),
        }
    }

    /// Resolves `name` or `name[i]`. A bare name denotes member 0 and is only
    /// accepted for families of cardinality one.
    pub fn edge(&self, text: &str) -> Result<EdgeRef, GraphError> {
        let (name, index) = match text.strip_suffix(']').and_then(|t| t.rsplit_once('[')) {
            Some((name, idx)) => {
                let index = idx
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| GraphError::UnknownEdge(text.to_string()))?;
                (name, Some(index))
            }
            None => (text, None),
        };
        let id = self
            .family_id(name)
            .ok_or_else(|| GraphError::UnknownEdge(text.to_string()))?;
        let family = &self.families[id.0];
        let index = match (index, family.cardinality) {
            (Some(i), _) => i,
            (None, Cardinality::Finite(1)) => 0,
            (None, _) => return Err(GraphError::UnknownEdge(text.to_string())),
        };
        let e = EdgeRef::new(id, index);
        if self.contains_edge(e) {
            Ok(e)
        } else {
            Err(GraphError::IndexOutOfRange {
                family: name.to_string(),
                index,
            })
        }
    }

    pub fn vertex_path(&self, v: VertexId) -> Path {
        Path::vertex(v)
    }

    pub fn edge_path(&self, e: EdgeRef) -> Path {
        Path::from_parts(vec![self.source(e), self.target(e)], vec![e])
    }

    /// The path through `edges`; fails on an empty or non-composable sequence.
    pub fn path(&self, edges: &[EdgeRef]) -> Result<Path, GraphError> {
        let (&first, rest) = edges
            .split_first()
            .ok_or_else(|| GraphError::UnknownEdge(String::new()))?;
        let mut p = self.edge_path(first);
        for &e in rest {
            if self.source(e) != p.target() {
                return Err(GraphError::NotComposable {
                    left: self.path_name(&p),
                    right: self.edge_name(e),
                    at: self.vertex_name(p.target()).to_string(),
                    from: self.vertex_name(self.source(e)).to_string(),
                });
            }
            p.push(e, self.target(e));
        }
        Ok(p)
    }

    /// `p` followed by the edge `e`, or `None` if they do not compose.
    pub fn extend(&self, p: &Path, e: EdgeRef) -> Option<Path> {
        if self.source(e) != p.target() {
            return None;
        }
        let mut q = p.clone();
        q.push(e, self.target(e));
        Some(q)
    }

    pub fn concat(&self, p: &Path, q: &Path) -> Result<Path, GraphError> {
        p.concat(q).ok_or_else(|| GraphError::NotComposable {
            left: self.path_name(p),
            right: self.path_name(q),
            at: self.vertex_name(p.target()).to_string(),
            from: self.vertex_name(q.source()).to_string(),
        })
    }

    /// A vertex name, or edge names joined by `.`.
    pub fn path_name(&self, p: &Path) -> String {
        if p.is_vertex() {
            self.vertex_name(p.source()).to_string()
        } else {
            p.edges()
                .iter()
                .map(|&e| self.edge_name(e))
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Parses a vertex name or a `.`-separated edge sequence.
    pub fn parse_path(&self, text: &str) -> Result<Path, GraphError> {
        let text = text.trim();
        if let Some(v) = self.vertex(text) {
            return Ok(Path::vertex(v));
        }
        let edges = text
            .split('.')
            .map(|part| self.edge(part.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        self.path(&edges)
    }

    pub fn uses_infinite_edge(&self, p: &Path) -> bool {
        p.any_edge(|e| self.is_infinite(e))
    }

    /// All paths starting at `v` of length at most `max_len`, shortest first and
    /// lexicographic within a length. Infinite families contribute only their
    /// representative member.
    pub fn paths_from(&self, v: VertexId, max_len: usize) -> Vec<Path> {
        let mut all = vec![Path::vertex(v)];
        let mut level_start = 0;
        for _ in 0..max_len {
            let level_end = all.len();
            for i in level_start..level_end {
                let p = all[i].clone();
                for e in self.out_edges(p.target()) {
                    let mut q = p.clone();
                    q.push(e, self.target(e));
                    all.push(q);
                }
            }
            if all.len() == level_end {
                break;
            }
            level_start = level_end;
        }
        all
    }

    /// All paths of exactly length `len` starting at `v`.
    pub fn paths_of_length(&self, v: VertexId, len: usize) -> Vec<Path> {
        self.paths_from(v, len).into_iter().filter(|p| p.len() == len).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the family-level multigraph.
        let n = self.vertex_count();
        let mut indegree = vec![0usize; n];
        for f in &self.families {
            indegree[f.target.0] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for id in &self.out_families[v] {
                let t = self.families[id.0].target.0;
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    /// Same vertices plus a reversed ghost family `name*` for every family.
    pub fn extended_graph(&self) -> Result<Graph, GraphError> {
        if let Some(f) = self.families.iter().find(|f| f.is_infinite()) {
            return Err(GraphError::InfiniteFamily(f.name.clone()));
        }
        let mut spec = self.spec();
        let ghosts: Vec<FamilySpec> = spec
            .families
            .iter()
            .map(|f| FamilySpec {
                name: format!("{}*", f.name),
                source: f.target.clone(),
                target: f.source.clone(),
                cardinality: f.cardinality,
            })
            .collect();
        spec.families.extend(ghosts);
        spec.build()
    }
}

fn classify(families: &[EdgeFamily], out_families: &[Vec<FamilyId>]) -> VertexClassification {
    let mut c = VertexClassification {
        sinks: BTreeSet::new(),
        infinite_emitters: BTreeSet::new(),
        regular: BTreeSet::new(),
        zero_regular: BTreeSet::new(),
        row_finite: true,
    };
    for (v, out) in out_families.iter().enumerate() {
        let v = VertexId(v);
        if out.is_empty() {
            c.sinks.insert(v);
            continue;
        }
        if out.iter().any(|id| families[id.0].is_infinite()) {
            c.infinite_emitters.insert(v);
            c.row_finite = false;
            continue;
        }
        c.regular.insert(v);
        if let [only] = out.as_slice() {
            let f = &families[only.0];
            if f.cardinality == Cardinality::Finite(1) && f.target == v {
                c.zero_regular.insert(v);
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::PrefixOrder;

    fn line(n: usize) -> Graph {
        let mut spec = GraphSpec::new().vertices((1..=n).map(|i| i.to_string()));
        for i in 1..n {
            spec = spec.edge(format!("e{i}"), i.to_string(), (i + 1).to_string());
        }
        spec.build().unwrap()
    }

    fn loop_graph() -> Graph {
        GraphSpec::new().vertex("v").edge("e", "v", "v").build().unwrap()
    }

    fn nopull_f() -> Graph {
        GraphSpec::new()
            .vertices(["1", "2", "4"])
            .edge("e12", "1", "2")
            .family("inf", "1", "4", Cardinality::Infinite)
            .build()
            .unwrap()
    }

    fn names(g: &Graph, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| g.path_name(p)).collect()
    }

    fn ids(g: &Graph, names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|n| g.vertex(n).unwrap()).collect()
    }

    #[test]
    fn builds_line_and_empty_graph() {
        let g = line(3);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.finite_edge_count(), 2);
        let empty = GraphSpec::new().build().unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(empty.is_acyclic());
    }

    #[test]
    fn rejects_malformed_specs() {
        let dangling = GraphSpec::new().vertex("1").edge("f", "1", "9").build();
        assert_eq!(
            dangling,
            Err(GraphError::DanglingEndpoint {
                family: "f".into(),
                vertex: "9".into()
            })
        );
        let dup = GraphSpec::new().vertices(["1", "1"]).build();
        assert_eq!(dup, Err(GraphError::DuplicateVertex("1".into())));
        let dup_edge = GraphSpec::new()
            .vertex("1")
            .edge("e", "1", "1")
            .edge("e", "1", "1")
            .build();
        assert_eq!(dup_edge, Err(GraphError::DuplicateEdge("e".into())));
        let zero = GraphSpec::new()
            .vertex("1")
            .family("e", "1", "1", Cardinality::Finite(0))
            .build();
        assert_eq!(zero, Err(GraphError::ZeroCardinality("e".into())));
        let clash = GraphSpec::new().vertex("x").edge("x", "x", "x").build();
        assert_eq!(clash, Err(GraphError::NameClash("x".into())));
    }

    #[test]
    fn classifies_vertices() {
        let g = loop_graph();
        let c = g.classification();
        assert_eq!(c.zero_regular, ids(&g, &["v"]));

        let f = nopull_f();
        let c = f.classification();
        assert!(c.regular.is_empty());
        assert_eq!(c.infinite_emitters, ids(&f, &["1"]));
        assert_eq!(c.sinks, ids(&f, &["2", "4"]));
        assert!(!c.row_finite);

        let o2 = GraphSpec::new()
            .vertices(["1", "2"])
            .edge("e11", "1", "1")
            .edge("e12", "1", "2")
            .edge("e21", "2", "1")
            .build()
            .unwrap();
        let c = o2.classification();
        assert_eq!(c.regular, ids(&o2, &["1", "2"]));
        assert!(c.zero_regular.is_empty());
        assert!(c.row_finite);
    }

    #[test]
    fn enumerates_paths() {
        let g = line(3);
        let v1 = g.vertex("1").unwrap();
        assert_eq!(names(&g, &g.paths_from(v1, 2)), ["1", "e1", "e1.e2"]);

        let l = loop_graph();
        let v = l.vertex("v").unwrap();
        assert_eq!(names(&l, &l.paths_from(v, 3)), ["v", "e", "e.e", "e.e.e"]);

        let f = nopull_f();
        let v1 = f.vertex("1").unwrap();
        assert_eq!(names(&f, &f.paths_from(v1, 1)), ["1", "e12", "inf[0]"]);
    }

    #[test]
    fn compares_and_concatenates() {
        let g = line(3);
        let v1 = Path::vertex(g.vertex("1").unwrap());
        let e1 = g.parse_path("e1").unwrap();
        let e1e2 = g.parse_path("e1.e2").unwrap();
        assert_eq!(v1.compare(&e1), PrefixOrder::PrefixOf);
        assert_eq!(e1.compare(&e1e2), PrefixOrder::PrefixOf);
        assert_eq!(e1e2.compare(&e1), PrefixOrder::ExtensionOf);
        assert_eq!(g.concat(&v1, &e1).unwrap(), e1);
        let e2 = g.parse_path("e2").unwrap();
        assert_eq!(g.concat(&e1, &e2).unwrap(), e1e2);
        assert!(g.concat(&e1, &e1).is_err());

        let o = GraphSpec::new()
            .vertices(["v", "w"])
            .edge("a", "v", "w")
            .edge("b", "v", "w")
            .build()
            .unwrap();
        let a = o.parse_path("a").unwrap();
        let b = o.parse_path("b").unwrap();
        assert_eq!(a.compare(&b), PrefixOrder::Incomparable);
    }

    #[test]
    fn builds_extended_graphs() {
        let g = line(2).extended_graph().unwrap();
        let ghost = g.edge("e1*").unwrap();
        assert_eq!(g.vertex_name(g.source(ghost)), "2");
        assert_eq!(g.vertex_name(g.target(ghost)), "1");
        assert_eq!(g.finite_edge_count(), 2);

        let empty = GraphSpec::new().build().unwrap();
        assert_eq!(empty.extended_graph().unwrap(), empty);

        let l = loop_graph().extended_graph().unwrap();
        let v = l.vertex("v").unwrap();
        assert_eq!(l.out_edges(v).count(), 2);

        assert_eq!(
            nopull_f().extended_graph(),
            Err(GraphError::InfiniteFamily("inf".into()))
        );
    }

    #[test]
    fn resolves_family_members() {
        let g = GraphSpec::new()
            .vertex("1")
            .family("h", "1", "1", Cardinality::Finite(3))
            .build()
            .unwrap();
        let e = g.edge("h[2]").unwrap();
        assert_eq!(g.edge_name(e), "h[2]");
        assert!(g.edge("h").is_err());
        assert!(g.edge("h[3]").is_err());
        assert_eq!(g.out_degree(g.vertex("1").unwrap()), Some(3));
    }
}
