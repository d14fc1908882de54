//! Graph homomorphisms (length preserving) and path homomorphisms.
//!
//! Both kinds send an infinite edge family onto an infinite edge family,
//! member by member; finite edges never land on members of infinite families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{EdgeRef, FamilyId, Graph, GraphError, VertexId};
use crate::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no image given for vertex `{0}`")]
    MissingVertex(String),
    #[error("no image given for edge `{0}`")]
    MissingEdge(String),
    #[error("`{0}` is assigned twice")]
    DuplicateAssignment(String),
    #[error("`{0}` is neither a vertex nor an edge of the domain")]
    UnknownName(String),
    #[error("image of `{edge}` does not respect endpoints: {detail}")]
    Endpoint { edge: String, detail: String },
    #[error("infinite family `{0}` must be sent onto an infinite family")]
    FamilyMismatch(String),
    #[error("image of `{0}` uses an edge of an infinite family")]
    InfiniteImage(String),
    #[error("vertex `{0}` must be sent to a vertex")]
    VertexToEdge(String),
    #[error("edge `{0}` must be sent to a single edge")]
    NotLengthPreserving(String),
    #[error("codomain of the first map is not the domain of the second")]
    DomainMismatch,
}

struct Assignments {
    vmap: Vec<VertexId>,
    edges: BTreeMap<EdgeRef, Path>,
    families: BTreeMap<FamilyId, FamilyId>,
}

/// Resolves `lhs -> rhs` text pairs against the two graphs. The left side
/// names a vertex, an edge or an infinite family of `domain`; the right side
/// names a vertex, an edge path or an infinite family of `codomain`.
fn resolve(domain: &Graph, codomain: &Graph, pairs: &[(&str, &str)]) -> Result<Assignments, MorphismError> {
    let mut vmap: Vec<Option<VertexId>> = vec![None; domain.vertex_count()];
    let mut edges = BTreeMap::new();
    let mut families = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for &(lhs, rhs) in pairs {
        let lhs = lhs.trim();
        let rhs = rhs.trim();
        if !seen.insert(lhs.to_string()) {
            return Err(MorphismError::DuplicateAssignment(lhs.to_string()));
        }
        if let Some(v) = domain.vertex(lhs) {
            let w = codomain.vertex(rhs).ok_or_else(|| match codomain.parse_path(rhs) {
                Ok(_) => MorphismError::VertexToEdge(lhs.to_string()),
                Err(e) => e.into(),
            })?;
            vmap[v.0] = Some(w);
            continue;
        }
        if let Some(id) = domain.family_id(lhs).filter(|&id| domain.family(id).is_infinite()) {
            let target = codomain
                .family_id(rhs)
                .filter(|&t| codomain.family(t).is_infinite())
                .ok_or_else(|| MorphismError::FamilyMismatch(lhs.to_string()))?;
            families.insert(id, target);
            continue;
        }
        let e = domain
            .edge(lhs)
            .map_err(|_| MorphismError::UnknownName(lhs.to_string()))?;
        if codomain
            .family_id(rhs)
            .is_some_and(|t| codomain.family(t).is_infinite())
        {
            return Err(MorphismError::InfiniteImage(lhs.to_string()));
        }
        edges.insert(e, codomain.parse_path(rhs)?);
    }
    let vmap = vmap
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.ok_or_else(|| MorphismError::MissingVertex(domain.vertex_name(VertexId(i)).to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Assignments { vmap, edges, families })
}

/// Checks totality and the endpoint conditions shared by both kinds of maps.
fn validate(
    domain: &Graph,
    codomain: &Graph,
    vmap: &[VertexId],
    edges: &BTreeMap<EdgeRef, Path>,
    families: &BTreeMap<FamilyId, FamilyId>,
) -> Result<(), MorphismError> {
    if vmap.len() < domain.vertex_count() {
        let v = VertexId(vmap.len());
        return Err(MorphismError::MissingVertex(domain.vertex_name(v).to_string()));
    }
    if vmap.len() > domain.vertex_count() || vmap.iter().any(|w| w.0 >= codomain.vertex_count()) {
        return Err(MorphismError::DomainMismatch);
    }
    for e in domain.finite_edges() {
        let name = domain.edge_name(e);
        let p = edges.get(&e).ok_or_else(|| MorphismError::MissingEdge(name.clone()))?;
        if codomain.uses_infinite_edge(p) {
            return Err(MorphismError::InfiniteImage(name));
        }
        let s = vmap[domain.source(e).0];
        let t = vmap[domain.target(e).0];
        if p.source() != s || p.target() != t {
            return Err(MorphismError::Endpoint {
                detail: format!(
                    "`{}` runs from `{}` to `{}`, expected `{}` to `{}`",
                    codomain.path_name(p),
                    codomain.vertex_name(p.source()),
                    codomain.vertex_name(p.target()),
                    codomain.vertex_name(s),
                    codomain.vertex_name(t),
                ),
                edge: name,
            });
        }
    }
    for id in domain.infinite_families() {
        let name = &domain.family(id).name;
        let t = *families
            .get(&id)
            .ok_or_else(|| MorphismError::MissingEdge(name.clone()))?;
        let image = codomain.family(t);
        if !image.is_infinite() {
            return Err(MorphismError::FamilyMismatch(name.clone()));
        }
        let f = domain.family(id);
        if image.source != vmap[f.source.0] || image.target != vmap[f.target.0] {
            return Err(MorphismError::Endpoint {
                edge: name.clone(),
                detail: format!("family `{}` has the wrong endpoints", image.name),
            });
        }
    }
    Ok(())
}

/// A length-preserving path homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHom {
    domain: Arc<Graph>,
    codomain: Arc<Graph>,
    vmap: Vec<VertexId>,
    emap: BTreeMap<EdgeRef, EdgeRef>,
    families: BTreeMap<FamilyId, FamilyId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphHomCategory {
    OG,
    POG,
    TBPOG,
    CRTBPOG,
}

impl fmt::Display for GraphHomCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHomClassification {
    pub proper: bool,
    pub target_injective: bool,
    pub target_surjective: bool,
    pub target_bijective: bool,
    pub regular: bool,
    pub category: GraphHomCategory,
}

impl GraphHom {
    /// Validates explicit maps. `emap` covers every finite edge of `domain`,
    /// `families` every infinite family.
    pub fn new(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        vmap: Vec<VertexId>,
        emap: BTreeMap<EdgeRef, EdgeRef>,
        families: BTreeMap<FamilyId, FamilyId>,
    ) -> Result<Self, MorphismError> {
        for (&e, &f) in &emap {
            if !domain.contains_edge(e) || domain.is_infinite(e) {
                return Err(MorphismError::UnknownName(format!("{e:?}")));
            }
            if !codomain.contains_edge(f) {
                return Err(MorphismError::UnknownName(format!("{f:?}")));
            }
        }
        let paths = emap.iter().map(|(&e, &f)| (e, codomain.edge_path(f))).collect();
        validate(&domain, &codomain, &vmap, &paths, &families)?;
        Ok(GraphHom {
            domain,
            codomain,
            vmap,
            emap,
            families,
        })
    }

    /// Builds a map from `lhs -> rhs` name pairs; see [`PathHom::from_names`].
    pub fn from_names(domain: Arc<Graph>, codomain: Arc<Graph>, pairs: &[(&str, &str)]) -> Result<Self, MorphismError> {
        let a = resolve(&domain, &codomain, pairs)?;
        let mut emap = BTreeMap::new();
        for (e, p) in &a.edges {
            match p.edges() {
                [f] => {
                    emap.insert(*e, *f);
                }
                _ => return Err(MorphismError::NotLengthPreserving(domain.edge_name(*e))),
            }
        }
        Self::new(domain, codomain, a.vmap, emap, a.families)
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        let vmap = g.vertices().collect();
        let emap = g.finite_edges().map(|e| (e, e)).collect();
        let families = g.infinite_families().map(|id| (id, id)).collect();
        GraphHom {
            domain: g.clone(),
            codomain: g,
            vmap,
            emap,
            families,
        }
    }

    pub fn domain(&self) -> &Arc<Graph> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Graph> {
        &self.codomain
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vmap[v.0]
    }

    /// Image of any edge, including members of infinite families.
    pub fn edge_image(&self, e: EdgeRef) -> EdgeRef {
        match self.emap.get(&e) {
            Some(&f) => f,
            None => EdgeRef::new(self.families[&e.family], e.index),
        }
    }

    pub fn family_image(&self, id: FamilyId) -> Option<FamilyId> {
        self.families.get(&id).copied()
    }

    pub fn family_map(&self) -> &BTreeMap<FamilyId, FamilyId> {
        &self.families
    }

    pub fn apply(&self, p: &Path) -> Path {
        if p.is_vertex() {
            return Path::vertex(self.vertex_image(p.source()));
        }
        let edges: Vec<EdgeRef> = p.edges().iter().map(|&e| self.edge_image(e)).collect();
        self.codomain
            .path(&edges)
            .expect("graph homomorphisms preserve composability")
    }

    /// The same map viewed as a path homomorphism.
    pub fn to_path_hom(&self) -> PathHom {
        PathHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            vmap: self.vmap.clone(),
            pmap: self
                .emap
                .iter()
                .map(|(&e, &f)| (e, self.codomain.edge_path(f)))
                .collect(),
            families: self.families.clone(),
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &GraphHom) -> Result<GraphHom, MorphismError> {
        if *first.codomain != *self.domain {
            return Err(MorphismError::DomainMismatch);
        }
        Ok(GraphHom {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            vmap: first.vmap.iter().map(|&v| self.vertex_image(v)).collect(),
            emap: first.emap.iter().map(|(&e, &f)| (e, self.edge_image(f))).collect(),
            families: first.families.iter().map(|(&a, b)| (a, self.families[b])).collect(),
        })
    }

    /// Listed edges of the domain mapping onto `f` (infinite families through
    /// their representatives).
    pub fn edge_preimage(&self, f: EdgeRef) -> Vec<EdgeRef> {
        self.domain.edges().filter(|&e| self.edge_image(e) == f).collect()
    }

    pub fn vertex_preimage(&self, w: VertexId) -> Vec<VertexId> {
        self.domain.vertices().filter(|&v| self.vertex_image(v) == w).collect()
    }

    pub fn classify(&self) -> GraphHomClassification {
        // Preimages are finite: the domain lists finitely many vertices and
        // edges, and a member of an infinite family is hit only by the
        // equally indexed members of the finitely many families mapped onto it.
        let proper = true;
        let mut target_injective = true;
        let mut target_surjective = true;
        for f in self.codomain.edges() {
            let pre = self.edge_preimage(f);
            let targets: Vec<VertexId> = pre.iter().map(|&e| self.domain.target(e)).collect();
            let distinct: BTreeSet<VertexId> = targets.iter().copied().collect();
            if distinct.len() != targets.len() {
                target_injective = false;
            }
            let over = self.vertex_preimage(self.codomain.target(f));
            if over.iter().any(|v| !distinct.contains(v)) {
                target_surjective = false;
            }
        }
        let regular = self
            .domain
            .vertices()
            .filter(|&v| self.codomain.is_regular(self.vertex_image(v)))
            .all(|v| self.domain.is_regular(v));
        let target_bijective = target_injective && target_surjective;
        let category = if !proper {
            GraphHomCategory::OG
        } else if !target_bijective {
            GraphHomCategory::POG
        } else if !regular {
            GraphHomCategory::TBPOG
        } else {
            GraphHomCategory::CRTBPOG
        };
        GraphHomClassification {
            proper,
            target_injective,
            target_surjective,
            target_bijective,
            regular,
            category,
        }
    }
}

/// A path homomorphism: vertices to vertices, edges to paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathHom {
    domain: Arc<Graph>,
    codomain: Arc<Graph>,
    vmap: Vec<VertexId>,
    pmap: BTreeMap<EdgeRef, Path>,
    families: BTreeMap<FamilyId, FamilyId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathHomCategory {
    PG,
    IPG,
    MIPG,
    RMIPG,
}

impl fmt::Display for PathHomCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathHomClassification {
    pub injective_on_vertices: bool,
    pub monotone: bool,
    pub regular: bool,
    pub category: PathHomCategory,
    /// Regular domain vertices at which the regularity condition fails.
    pub irregular_vertices: Vec<VertexId>,
}

impl PathHom {
    pub fn new(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        vmap: Vec<VertexId>,
        pmap: BTreeMap<EdgeRef, Path>,
        families: BTreeMap<FamilyId, FamilyId>,
    ) -> Result<Self, MorphismError> {
        validate(&domain, &codomain, &vmap, &pmap, &families)?;
        Ok(PathHom {
            domain,
            codomain,
            vmap,
            pmap,
            families,
        })
    }

    /// Builds a map from `lhs -> rhs` name pairs. Each left side names a
    /// vertex, an edge (`e` or `e[i]`) or an infinite family of `domain`; the
    /// right side a vertex, a dotted edge path or an infinite family of
    /// `codomain`.
    pub fn from_names(domain: Arc<Graph>, codomain: Arc<Graph>, pairs: &[(&str, &str)]) -> Result<Self, MorphismError> {
        let a = resolve(&domain, &codomain, pairs)?;
        Self::new(domain, codomain, a.vmap, a.edges, a.families)
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        GraphHom::identity(g).to_path_hom()
    }

    pub fn domain(&self) -> &Arc<Graph> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Graph> {
        &self.codomain
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vmap[v.0]
    }

    /// Image of any edge, including members of infinite families.
    pub fn edge_image(&self, e: EdgeRef) -> Path {
        match self.pmap.get(&e) {
            Some(p) => p.clone(),
            None => self.codomain.edge_path(EdgeRef::new(self.families[&e.family], e.index)),
        }
    }

    pub fn family_image(&self, id: FamilyId) -> Option<FamilyId> {
        self.families.get(&id).copied()
    }

    pub fn family_map(&self) -> &BTreeMap<FamilyId, FamilyId> {
        &self.families
    }

    pub fn apply(&self, p: &Path) -> Path {
        let mut out = Path::vertex(self.vertex_image(p.source()));
        for &e in p.edges() {
            out = out
                .concat(&self.edge_image(e))
                .expect("path homomorphisms preserve composability");
        }
        out
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &PathHom) -> Result<PathHom, MorphismError> {
        if *first.codomain != *self.domain {
            return Err(MorphismError::DomainMismatch);
        }
        Ok(PathHom {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            vmap: first.vmap.iter().map(|&v| self.vertex_image(v)).collect(),
            pmap: first.pmap.iter().map(|(&e, p)| (e, self.apply(p))).collect(),
            families: first.families.iter().map(|(&a, b)| (a, self.families[b])).collect(),
        })
    }

    /// True if every edge goes to a single edge.
    pub fn is_length_preserving(&self) -> bool {
        self.pmap.values().all(|p| p.len() == 1)
    }

    /// The same map as a graph homomorphism, if it is length preserving.
    pub fn to_graph_hom(&self) -> Option<GraphHom> {
        let emap = self
            .pmap
            .iter()
            .map(|(&e, p)| match p.edges() {
                [f] => Some((e, *f)),
                _ => None,
            })
            .collect::<Option<BTreeMap<_, _>>>()?;
        Some(GraphHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            vmap: self.vmap.clone(),
            emap,
            families: self.families.clone(),
        })
    }

    pub fn classify(&self) -> PathHomClassification {
        let images: BTreeSet<VertexId> = self.vmap.iter().copied().collect();
        let injective_on_vertices = images.len() == self.vmap.len();
        let monotone = self.is_monotone();
        let irregular_vertices: Vec<VertexId> = self
            .domain
            .classification()
            .regular
            .iter()
            .copied()
            .filter(|&v| !self.regular_at(v))
            .collect();
        let regular = irregular_vertices.is_empty();
        let category = if !injective_on_vertices {
            PathHomCategory::PG
        } else if !monotone {
            PathHomCategory::IPG
        } else if !regular {
            PathHomCategory::MIPG
        } else {
            PathHomCategory::RMIPG
        };
        PathHomClassification {
            injective_on_vertices,
            monotone,
            regular,
            category,
            irregular_vertices,
        }
    }

    /// No image of an edge is a prefix of the image of a different edge.
    /// Checking representatives suffices: distinct members of an infinite
    /// family go to distinct parallel edges.
    fn is_monotone(&self) -> bool {
        let edges: Vec<EdgeRef> = self.domain.edges().collect();
        let images: Vec<Path> = edges.iter().map(|&e| self.edge_image(e)).collect();
        for (i, a) in images.iter().enumerate() {
            for (j, b) in images.iter().enumerate() {
                if i != j && a.is_prefix_of(b) {
                    return false;
                }
            }
        }
        true
    }

    /// The regularity condition at a regular vertex `v` of the domain.
    fn regular_at(&self, v: VertexId) -> bool {
        let out: Vec<EdgeRef> = self.domain.out_edges(v).collect();
        if self.domain.classification().zero_regular.contains(&v) {
            let collapsed = out
                .iter()
                .all(|&e| self.edge_image(e) == Path::vertex(self.vertex_image(v)));
            if collapsed {
                return true;
            }
        }
        let images: Vec<Path> = out.iter().map(|&e| self.edge_image(e)).collect();
        let image_set: BTreeSet<Path> = images.iter().cloned().collect();
        if image_set.len() != images.len() {
            return false;
        }
        self.images_form_cover(self.vertex_image(v), &image_set)
    }

    /// Whether `images` is exactly the set of paths `y` satisfying
    /// (i) `y` is not a vertex, (ii) no proper extension of `y` lies in
    /// `images`, (iii) for every position `i` and every edge `f` leaving the
    /// source of the `i`-th edge of `y`, some member of `images` starts with
    /// the first `i - 1` edges of `y` followed by `f`.
    ///
    /// Candidates longer than the longest member fail (iii) at their last
    /// position, and all members start at `root`, so enumerating paths from
    /// `root` up to that length decides the equivalence exactly.
    fn images_form_cover(&self, root: VertexId, images: &BTreeSet<Path>) -> bool {
        let g = &self.codomain;
        let max_len = images.iter().map(Path::len).max().unwrap_or(0);
        let is_prefix_of_image = |p: &Path| images.iter().any(|y| p.is_prefix_of(y));
        for y in g.paths_from(root, max_len) {
            let nonvertex = !y.is_vertex();
            let maximal = images.iter().all(|z| z == &y || !y.is_prefix_of(z));
            let covering = nonvertex
                && (0..y.len()).all(|i| {
                    let stem = y.prefix(i);
                    g.out_edges(stem.target()).all(|f| {
                        let probe = g.extend(&stem, f).expect("out-edge extends its source");
                        is_prefix_of_image(&probe)
                    })
                });
            let expected = nonvertex && maximal && covering;
            if expected != images.contains(&y) {
                return false;
            }
        }
        // A vertex image is never produced by the enumeration above as a
        // valid member, so it has already been rejected if present.
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Cardinality, GraphSpec};

    fn arc(spec: GraphSpec) -> Arc<Graph> {
        Arc::new(spec.build().unwrap())
    }

    fn o2() -> (Arc<Graph>, Arc<Graph>, Arc<Graph>) {
        let e = arc(GraphSpec::new()
            .vertices(["1", "2"])
            .edge("e11", "1", "1")
            .edge("e12", "1", "2")
            .edge("e21", "2", "1"));
        let f = arc(GraphSpec::new().vertex("1").edge("f1", "1", "1").edge("f2", "1", "1"));
        let h = arc(GraphSpec::new().vertex("1").edge("h1", "1", "1").edge("h2", "1", "1"));
        (e, f, h)
    }

    #[test]
    fn classifies_o2_maps() {
        let (e, f, h) = o2();
        let phi = GraphHom::from_names(
            e,
            h.clone(),
            &[("1", "1"), ("2", "1"), ("e11", "h1"), ("e12", "h1"), ("e21", "h2")],
        )
        .unwrap();
        let c = phi.classify();
        assert!(c.target_injective);
        assert!(!c.target_surjective);
        assert!(c.regular);
        assert_eq!(c.category, GraphHomCategory::POG);

        let theta = PathHom::from_names(f, h, &[("1", "1"), ("f1", "h1"), ("f2", "h2.h1")]).unwrap();
        let c = theta.classify();
        assert!(c.monotone);
        assert!(!c.regular);
        assert_eq!(c.category, PathHomCategory::MIPG);
    }

    #[test]
    fn identities_are_top_category() {
        let (e, _, _) = o2();
        assert_eq!(
            GraphHom::identity(e.clone()).classify().category,
            GraphHomCategory::CRTBPOG
        );
        let c = PathHom::identity(e).classify();
        assert_eq!(c.category, PathHomCategory::RMIPG);
    }

    #[test]
    fn rejects_endpoint_violations() {
        let e = arc(GraphSpec::new().vertices(["1", "2"]).edge("e", "1", "2"));
        let l = arc(GraphSpec::new().vertices(["a", "b"]).edge("l", "a", "a"));
        let bad = GraphHom::from_names(e.clone(), l.clone(), &[("1", "a"), ("2", "b"), ("e", "l")]);
        assert!(matches!(bad, Err(MorphismError::Endpoint { .. })));
        let bad = PathHom::from_names(e, l, &[("1", "b"), ("2", "a"), ("e", "l")]);
        assert!(matches!(bad, Err(MorphismError::Endpoint { .. })));
    }

    #[test]
    fn composes_path_homs() {
        let g = arc(GraphSpec::new()
            .vertices(["1", "2", "3"])
            .edge("g", "1", "2")
            .edge("g'", "2", "3"));
        let h = arc(GraphSpec::new().vertices(["1", "3"]).edge("h", "1", "3"));
        let theta = PathHom::from_names(h.clone(), g.clone(), &[("1", "1"), ("3", "3"), ("h", "g.g'")]).unwrap();
        let id = PathHom::identity(g);
        assert_eq!(id.after(&theta).unwrap(), theta);
        let idh = PathHom::identity(h);
        assert_eq!(theta.after(&idh).unwrap(), theta);
        assert!(idh.after(&theta).is_err());
    }

    #[test]
    fn infinite_families_map_member_wise() {
        let f = arc(GraphSpec::new().vertices(["1", "2", "4"]).edge("f12", "1", "2").family(
            "inf",
            "1",
            "4",
            Cardinality::Infinite,
        ));
        let h = arc(GraphSpec::new()
            .vertices(["1", "2", "3", "4"])
            .edge("f12", "1", "2")
            .edge("f13", "1", "3")
            .family("inf", "1", "4", Cardinality::Infinite));
        let incl = PathHom::from_names(
            f.clone(),
            h.clone(),
            &[("1", "1"), ("2", "2"), ("4", "4"), ("f12", "f12"), ("inf", "inf")],
        )
        .unwrap();
        let c = incl.classify();
        assert_eq!(c.category, PathHomCategory::RMIPG);
        let member = f.edge("inf[7]").unwrap();
        assert_eq!(h.path_name(&incl.edge_image(member)), "inf[7]");

        let missing = PathHom::from_names(f, h, &[("1", "1"), ("2", "2"), ("4", "4"), ("f12", "f12")]);
        assert!(matches!(missing, Err(MorphismError::MissingEdge(_))));
    }

    #[test]
    fn zero_regular_loops_may_collapse() {
        let e = arc(GraphSpec::new().vertex("v").edge("l", "v", "v"));
        let w = arc(GraphSpec::new().vertex("w"));
        let collapse = PathHom::from_names(e, w, &[("v", "w"), ("l", "w")]).unwrap();
        assert!(collapse.classify().regular);
    }
}
