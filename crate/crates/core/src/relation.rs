//! Relation morphisms between path sets, stored by their generators.
//!
//! A relation morphism `E → F` is kept as three finite generator sets:
//! vertex pairs, pairs `(x, f)` of a finite path of `E` and a finite edge of
//! `F`, and pairs of infinite families related member by member. The relation
//! itself is the closure of the generators under componentwise concatenation,
//! which makes it multiplicative and decomposable by construction. A pair with
//! a single edge on the right lies in the closure exactly when it is a
//! generator, so equal relations have equal generator sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Cardinality, EdgeRef, FamilyId, Graph, GraphError, GraphSpec, VertexId};
use crate::morphism::{GraphHom, MorphismError, PathHom};
use crate::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("generator ({path}, {edge}) needs the vertex pair ({left}, {right})")]
    MissingEndpointPair {
        path: String,
        edge: String,
        left: String,
        right: String,
    },
    #[error("generator `{0}` involves an edge of an infinite family")]
    InfiniteEdge(String),
    #[error("family pair ({0}, {1}) must relate two infinite families")]
    NotInfiniteFamilies(String, String),
    #[error("the inner relation is not vertex disjoint: `{0}` is related to several vertices")]
    NotVertexDisjoint(String),
    #[error("the relations do not share the middle graph")]
    GraphMismatch,
    #[error("the given maps do not factor the relation")]
    NotAFactorization,
}

/// A relation morphism given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationMorphism {
    domain: Arc<Graph>,
    codomain: Arc<Graph>,
    vertex_pairs: BTreeSet<(VertexId, VertexId)>,
    edge_pairs: BTreeSet<(Path, EdgeRef)>,
    family_pairs: BTreeSet<(FamilyId, FamilyId)>,
    by_edge: BTreeMap<EdgeRef, Vec<Path>>,
}

impl RelationMorphism {
    /// Validates generators: every edge generator needs the vertex pairs of its
    /// endpoints, and infinite families only appear through family pairs.
    pub fn from_generators(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        vertex_pairs: BTreeSet<(VertexId, VertexId)>,
        edge_pairs: BTreeSet<(Path, EdgeRef)>,
        family_pairs: BTreeSet<(FamilyId, FamilyId)>,
    ) -> Result<Self, RelationError> {
        for &(u, v) in &vertex_pairs {
            if u.0 >= domain.vertex_count() || v.0 >= codomain.vertex_count() {
                return Err(RelationError::GraphMismatch);
            }
        }
        let needs = |u: VertexId, v: VertexId, path: String, edge: String| {
            if vertex_pairs.contains(&(u, v)) {
                Ok(())
            } else {
                Err(RelationError::MissingEndpointPair {
                    path,
                    edge,
                    left: domain.vertex_name(u).to_string(),
                    right: codomain.vertex_name(v).to_string(),
                })
            }
        };
        for (x, f) in &edge_pairs {
            if !codomain.contains_edge(*f) {
                return Err(RelationError::GraphMismatch);
            }
            let xname = domain.path_name(x);
            let fname = codomain.edge_name(*f);
            if domain.uses_infinite_edge(x) || codomain.is_infinite(*f) {
                return Err(RelationError::InfiniteEdge(format!("({xname}, {fname})")));
            }
            needs(x.source(), codomain.source(*f), xname.clone(), fname.clone())?;
            needs(x.target(), codomain.target(*f), xname, fname)?;
        }
        for &(a, b) in &family_pairs {
            let fa = domain.family(a);
            let fb = codomain.family(b);
            if !fa.is_infinite() || !fb.is_infinite() {
                return Err(RelationError::NotInfiniteFamilies(fa.name.clone(), fb.name.clone()));
            }
            needs(fa.source, fb.source, fa.name.clone(), fb.name.clone())?;
            needs(fa.target, fb.target, fa.name.clone(), fb.name.clone())?;
        }
        Ok(Self::assemble(domain, codomain, vertex_pairs, edge_pairs, family_pairs))
    }

    /// Resolves generators written as names: vertex pairs, `(path, edge)` pairs
    /// and pairs of infinite family names.
    pub fn from_names(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        vertex_pairs: &[(&str, &str)],
        edge_pairs: &[(&str, &str)],
    ) -> Result<Self, RelationError> {
        let mut vp = BTreeSet::new();
        for &(u, v) in vertex_pairs {
            let u = domain
                .vertex(u.trim())
                .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
            let v = codomain
                .vertex(v.trim())
                .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
            vp.insert((u, v));
        }
        let mut ep = BTreeSet::new();
        let mut fp = BTreeSet::new();
        for &(x, f) in edge_pairs {
            let (x, f) = (x.trim(), f.trim());
            let fam_x = domain.family_id(x).filter(|&id| domain.family(id).is_infinite());
            let fam_f = codomain.family_id(f).filter(|&id| codomain.family(id).is_infinite());
            match (fam_x, fam_f) {
                (Some(a), Some(b)) => {
                    fp.insert((a, b));
                }
                (None, None) => {
                    ep.insert((domain.parse_path(x)?, codomain.edge(f)?));
                }
                _ => return Err(RelationError::NotInfiniteFamilies(x.to_string(), f.to_string())),
            }
        }
        Self::from_generators(domain, codomain, vp, ep, fp)
    }

    fn assemble(
        domain: Arc<Graph>,
        codomain: Arc<Graph>,
        vertex_pairs: BTreeSet<(VertexId, VertexId)>,
        edge_pairs: BTreeSet<(Path, EdgeRef)>,
        family_pairs: BTreeSet<(FamilyId, FamilyId)>,
    ) -> Self {
        let mut by_edge: BTreeMap<EdgeRef, Vec<Path>> = BTreeMap::new();
        for (x, f) in &edge_pairs {
            by_edge.entry(*f).or_default().push(x.clone());
        }
        RelationMorphism {
            domain,
            codomain,
            vertex_pairs,
            edge_pairs,
            family_pairs,
            by_edge,
        }
    }

    pub fn identity(g: Arc<Graph>) -> Self {
        lift_graph_hom(&GraphHom::identity(g))
    }

    pub fn domain(&self) -> &Arc<Graph> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Graph> {
        &self.codomain
    }

    pub fn vertex_pairs(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.vertex_pairs
    }

    pub fn edge_pairs(&self) -> &BTreeSet<(Path, EdgeRef)> {
        &self.edge_pairs
    }

    pub fn family_pairs(&self) -> &BTreeSet<(FamilyId, FamilyId)> {
        &self.family_pairs
    }

    /// Paths of the domain related to the single edge `f` by a generator.
    /// For a member of an infinite family these are the equally indexed
    /// members of the families paired with it.
    pub fn edge_preimage(&self, f: EdgeRef) -> Vec<Path> {
        if self.codomain.is_infinite(f) {
            return self
                .family_pairs
                .iter()
                .filter(|&&(_, b)| b == f.family)
                .map(|&(a, _)| self.domain.edge_path(EdgeRef::new(a, f.index)))
                .collect();
        }
        self.by_edge.get(&f).cloned().unwrap_or_default()
    }

    pub fn vertex_preimage(&self, v: VertexId) -> Vec<VertexId> {
        self.vertex_pairs
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(u, _)| u)
            .collect()
    }

    /// Vertices of the codomain related to `u`.
    pub fn vertex_image(&self, u: VertexId) -> Vec<VertexId> {
        self.vertex_pairs
            .range((u, VertexId(0))..=(u, VertexId(usize::MAX)))
            .map(|&(_, v)| v)
            .collect()
    }

    /// Whether `(x, y)` lies in the generated relation.
    pub fn member(&self, x: &Path, y: &Path) -> bool {
        if y.is_vertex() {
            return x.is_vertex() && self.vertex_pairs.contains(&(x.source(), y.source()));
        }
        // Positions of `x` reachable after matching the first i edges of `y`.
        let mut positions = BTreeSet::from([0usize]);
        for &f in y.edges() {
            let pieces = self.edge_preimage(f);
            let mut next = BTreeSet::new();
            for &k in &positions {
                for piece in &pieces {
                    let end = k + piece.len();
                    if piece.source() == x.vertices()[k] && end <= x.len() && x.edges()[k..end] == *piece.edges() {
                        next.insert(end);
                    }
                }
            }
            if next.is_empty() {
                return false;
            }
            positions = next;
        }
        positions.contains(&x.len())
    }

    /// All `x` with `(x, y)` in the relation, in canonical order.
    pub fn preimage(&self, y: &Path) -> Vec<Path> {
        if y.is_vertex() {
            return self.vertex_preimage(y.source()).into_iter().map(Path::vertex).collect();
        }
        let mut partial: BTreeSet<Path> = BTreeSet::new();
        for (i, &f) in y.edges().iter().enumerate() {
            let pieces = self.edge_preimage(f);
            partial = if i == 0 {
                pieces.into_iter().collect()
            } else {
                partial
                    .iter()
                    .flat_map(|p| pieces.iter().filter_map(move |q| p.concat(q)))
                    .collect()
            };
            if partial.is_empty() {
                break;
            }
        }
        partial.into_iter().collect()
    }

    pub fn is_vertex_disjoint(&self) -> bool {
        self.first_shared_vertex().is_none()
    }

    fn first_shared_vertex(&self) -> Option<VertexId> {
        let mut seen = BTreeSet::new();
        self.vertex_pairs.iter().map(|&(u, _)| u).find(|&u| !seen.insert(u))
    }

    /// Human-readable generator listing.
    pub fn describe_generators(&self) -> (Vec<String>, Vec<String>) {
        let e = &self.domain;
        let f = &self.codomain;
        let vs = self
            .vertex_pairs
            .iter()
            .map(|&(u, v)| format!("({}, {})", e.vertex_name(u), f.vertex_name(v)))
            .collect();
        let mut es: Vec<String> = self
            .edge_pairs
            .iter()
            .map(|(x, g)| format!("({}, {})", e.path_name(x), f.edge_name(*g)))
            .collect();
        es.extend(
            self.family_pairs
                .iter()
                .map(|&(a, b)| format!("({}, {})", e.family(a).name, f.family(b).name)),
        );
        (vs, es)
    }

    pub fn admissibility(&self) -> AdmissibilityReport {
        admissibility_report(self)
    }
}

/// `R_φ = {(x, φ(x))}`.
pub fn lift_graph_hom(phi: &GraphHom) -> RelationMorphism {
    let e = phi.domain().clone();
    let vertex_pairs = e.vertices().map(|v| (v, phi.vertex_image(v))).collect();
    let edge_pairs = e.finite_edges().map(|x| (e.edge_path(x), phi.edge_image(x))).collect();
    let family_pairs = phi.family_map().iter().map(|(&a, &b)| (a, b)).collect();
    RelationMorphism::assemble(e, phi.codomain().clone(), vertex_pairs, edge_pairs, family_pairs)
}

/// `R^ϑ = {(ϑ(y), y)}`, a relation from the codomain of `theta` to its domain.
pub fn lower_path_hom(theta: &PathHom) -> RelationMorphism {
    let f = theta.domain().clone();
    let vertex_pairs = f.vertices().map(|v| (theta.vertex_image(v), v)).collect();
    let edge_pairs = f.finite_edges().map(|y| (theta.edge_image(y), y)).collect();
    let family_pairs = theta.family_map().iter().map(|(&a, &b)| (b, a)).collect();
    RelationMorphism::assemble(theta.codomain().clone(), f, vertex_pairs, edge_pairs, family_pairs)
}

/// `outer ∘ inner`. The inner relation must be vertex disjoint, which keeps
/// the composite multiplicative.
pub fn compose_relations(
    outer: &RelationMorphism,
    inner: &RelationMorphism,
) -> Result<RelationMorphism, RelationError> {
    if let Some(u) = inner.first_shared_vertex() {
        return Err(RelationError::NotVertexDisjoint(
            inner.domain.vertex_name(u).to_string(),
        ));
    }
    compose_generators(outer, inner)
}

/// The generator formula for `outer ∘ inner` without the vertex-disjointness
/// requirement. Used where the composite is only compared generator-wise,
/// as in factorization round trips.
pub fn compose_generators(
    outer: &RelationMorphism,
    inner: &RelationMorphism,
) -> Result<RelationMorphism, RelationError> {
    if *inner.codomain != *outer.domain {
        return Err(RelationError::GraphMismatch);
    }
    let mut vertex_pairs = BTreeSet::new();
    for &(u, v) in &inner.vertex_pairs {
        for w in outer.vertex_image(v) {
            vertex_pairs.insert((u, w));
        }
    }
    let mut edge_pairs = BTreeSet::new();
    for (y, g) in &outer.edge_pairs {
        for x in inner.preimage(y) {
            edge_pairs.insert((x, *g));
        }
    }
    let mut family_pairs = BTreeSet::new();
    for &(a, b) in &inner.family_pairs {
        for &(b2, c) in &outer.family_pairs {
            if b == b2 {
                family_pairs.insert((a, c));
            }
        }
    }
    Ok(RelationMorphism::assemble(
        inner.domain.clone(),
        outer.codomain.clone(),
        vertex_pairs,
        edge_pairs,
        family_pairs,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationCategory {
    RG,
    PRG,
    CRG,
    ARG,
}

impl fmt::Display for RelationCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub multiplicative: bool,
    pub decomposable: bool,
    pub proper: bool,
    pub vertex_disjoint: bool,
    pub target_injective: bool,
    pub target_surjective: bool,
    pub monotone: bool,
    pub regular: bool,
    pub category: RelationCategory,
    /// One line per failed condition instance.
    pub failures: Vec<String>,
}

impl AdmissibilityReport {
    pub fn target_bijective(&self) -> bool {
        self.target_injective && self.target_surjective
    }

    pub fn is_admissible(&self) -> bool {
        self.category == RelationCategory::ARG
    }

    /// `(name, value)` for every flag, in a fixed order.
    pub fn flags(&self) -> [(&'static str, bool); 8] {
        [
            ("multiplicative", self.multiplicative),
            ("decomposable", self.decomposable),
            ("proper", self.proper),
            ("vertex_disjoint", self.vertex_disjoint),
            ("target_injective", self.target_injective),
            ("target_surjective", self.target_surjective),
            ("monotone", self.monotone),
            ("regular", self.regular),
        ]
    }
}

pub fn admissibility_report(r: &RelationMorphism) -> AdmissibilityReport {
    let e = &*r.domain;
    let f = &*r.codomain;
    let mut failures = Vec::new();

    let mut owners: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(u, v) in &r.vertex_pairs {
        owners.entry(u).or_default().push(v);
    }
    let mut vertex_disjoint = true;
    for (u, vs) in &owners {
        if vs.len() > 1 {
            vertex_disjoint = false;
            let names: Vec<&str> = vs.iter().map(|&v| f.vertex_name(v)).collect();
            failures.push(format!(
                "vertex_disjoint: {} is related to {}",
                e.vertex_name(*u),
                names.join(", ")
            ));
        }
    }

    let mut target_injective = true;
    let mut target_surjective = true;
    for g in f.edges() {
        let pre = r.edge_preimage(g);
        let mut hit: BTreeMap<VertexId, Vec<&Path>> = BTreeMap::new();
        for x in &pre {
            hit.entry(x.target()).or_default().push(x);
        }
        for (t, xs) in &hit {
            if xs.len() > 1 {
                target_injective = false;
                let names: Vec<String> = xs.iter().map(|x| e.path_name(x)).collect();
                failures.push(format!(
                    "target_injective: preimages {} of {} all end at {}",
                    names.join(", "),
                    f.edge_name(g),
                    e.vertex_name(*t)
                ));
            }
        }
        for u in r.vertex_preimage(f.target(g)) {
            if !hit.contains_key(&u) {
                target_surjective = false;
                failures.push(format!(
                    "target_surjective: no preimage of {} ends at {}",
                    f.edge_name(g),
                    e.vertex_name(u)
                ));
            }
        }
    }

    // Pairs of edge generators, with one representative per family pair:
    // distinct members of related families are parallel edges, hence never
    // prefixes of one another.
    let mut generators: Vec<(Path, EdgeRef)> = r.edge_pairs.iter().cloned().collect();
    generators.extend(
        r.family_pairs
            .iter()
            .map(|&(a, b)| (e.edge_path(EdgeRef::new(a, 0)), EdgeRef::new(b, 0))),
    );
    let mut monotone = true;
    for (i, (x, g)) in generators.iter().enumerate() {
        for (j, (x2, g2)) in generators.iter().enumerate() {
            if i != j && x.is_prefix_of(x2) {
                monotone = false;
                failures.push(format!(
                    "monotone: ({}, {}) is below ({}, {})",
                    e.path_name(x),
                    f.edge_name(*g),
                    e.path_name(x2),
                    f.edge_name(*g2)
                ));
            }
        }
    }

    let mut regular = true;
    for &(u, v) in &r.vertex_pairs {
        if !f.is_regular(v) {
            continue;
        }
        if let Some(x) = uncovered_path(r, u, v) {
            regular = false;
            failures.push(format!(
                "regular: path {} from {} is comparable to no generator over an edge leaving {}",
                e.path_name(&x),
                e.vertex_name(u),
                f.vertex_name(v)
            ));
        }
    }

    let category = if !(vertex_disjoint && target_injective) {
        RelationCategory::RG
    } else if !(target_surjective && monotone) {
        RelationCategory::PRG
    } else if !regular {
        RelationCategory::CRG
    } else {
        RelationCategory::ARG
    };
    AdmissibilityReport {
        // Closure under concatenation of generators.
        multiplicative: true,
        decomposable: true,
        // Finitely many generators give finite preimages.
        proper: true,
        vertex_disjoint,
        target_injective,
        target_surjective,
        monotone,
        regular,
        category,
        failures,
    }
}

/// For a regular vertex `v` of the codomain and `u` related to it, the first
/// path from `u` comparable to no generator path `x'` over an edge leaving
/// `v`. Only paths up to the longest such `x'` need checking: a longer path
/// is comparable to `x'` exactly when its prefix of that length is.
fn uncovered_path(r: &RelationMorphism, u: VertexId, v: VertexId) -> Option<Path> {
    let f = &*r.codomain;
    let candidates: Vec<&Path> = r
        .edge_pairs
        .iter()
        .filter(|(x, g)| f.source(*g) == v && x.source() == u)
        .map(|(x, _)| x)
        .collect();
    if candidates.is_empty() {
        return Some(Path::vertex(u));
    }
    let bound = candidates.iter().map(|x| x.len()).max().unwrap_or(0);
    r.domain
        .paths_from(u, bound)
        .into_iter()
        .find(|x| !candidates.iter().any(|c| c.comparable(x)))
}

/// The relation graph together with its two projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub relation_graph: Arc<Graph>,
    /// First projection, a path homomorphism into the domain.
    pub theta: PathHom,
    /// Second projection, a graph homomorphism into the codomain.
    pub phi: GraphHom,
}

/// Builds the relation graph: one vertex per vertex pair, one edge per edge
/// generator and one infinite family per family pair.
pub fn pullback_factorize(r: &RelationMorphism) -> Factorization {
    let e = &*r.domain;
    let f = &*r.codomain;
    let vname = |&(u, v): &(VertexId, VertexId)| format!("({},{})", e.vertex_name(u), f.vertex_name(v));
    let mut spec = GraphSpec::new().vertices(r.vertex_pairs.iter().map(vname));
    let mut theta_pairs: Vec<(String, String)> = Vec::new();
    let mut phi_pairs: Vec<(String, String)> = Vec::new();
    for pair in &r.vertex_pairs {
        theta_pairs.push((vname(pair), e.vertex_name(pair.0).to_string()));
        phi_pairs.push((vname(pair), f.vertex_name(pair.1).to_string()));
    }
    for (x, g) in &r.edge_pairs {
        let name = format!("({},{})", e.path_name(x), f.edge_name(*g));
        spec = spec.edge(
            name.clone(),
            vname(&(x.source(), f.source(*g))),
            vname(&(x.target(), f.target(*g))),
        );
        theta_pairs.push((name.clone(), e.path_name(x)));
        phi_pairs.push((name, f.edge_name(*g)));
    }
    for &(a, b) in &r.family_pairs {
        let (fa, fb) = (e.family(a), f.family(b));
        let name = format!("({},{})", fa.name, fb.name);
        spec = spec.family(
            name.clone(),
            vname(&(fa.source, fb.source)),
            vname(&(fa.target, fb.target)),
            Cardinality::Infinite,
        );
        theta_pairs.push((name.clone(), fa.name.clone()));
        phi_pairs.push((name, fb.name.clone()));
    }
    let g = Arc::new(spec.build().expect("relation graph names are distinct"));
    let theta = PathHom::from_names(g.clone(), r.domain.clone(), &borrow(&theta_pairs))
        .expect("first projection is a path homomorphism");
    let phi = GraphHom::from_names(g.clone(), r.codomain.clone(), &borrow(&phi_pairs))
        .expect("second projection is a graph homomorphism");
    Factorization {
        relation_graph: g,
        theta,
        phi,
    }
}

fn borrow(pairs: &[(String, String)]) -> Vec<(&str, &str)> {
    pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

/// The comparison map from another factorization into the relation graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mediator {
    pub factorization: Factorization,
    pub map: GraphHom,
    pub surjective: bool,
    pub injective: bool,
}

/// Given `theta: G' → E` and `phi: G' → F` with `R_phi ∘ R^theta = R`,
/// returns the graph homomorphism `z ↦ (theta(z), phi(z))` into the relation
/// graph of `R`.
pub fn universal_mediator(r: &RelationMorphism, theta: &PathHom, phi: &GraphHom) -> Result<Mediator, RelationError> {
    let g = theta.domain().clone();
    if *phi.domain() != g {
        return Err(RelationError::GraphMismatch);
    }
    let composite = compose_generators(&lift_graph_hom(phi), &lower_path_hom(theta))?;
    if composite != *r {
        return Err(RelationError::NotAFactorization);
    }
    let fac = pullback_factorize(r);
    let rg = &fac.relation_graph;
    let e = &*r.domain;
    let f = &*r.codomain;
    let vertex_index: BTreeMap<(VertexId, VertexId), VertexId> = r
        .vertex_pairs
        .iter()
        .zip(rg.vertices())
        .map(|(&p, id)| (p, id))
        .collect();
    let edge_index: BTreeMap<(Path, EdgeRef), EdgeRef> = r.edge_pairs.iter().cloned().zip(rg.finite_edges()).collect();
    let vmap = g
        .vertices()
        .map(|z| vertex_index[&(theta.vertex_image(z), phi.vertex_image(z))])
        .collect();
    let emap = g
        .finite_edges()
        .map(|z| (z, edge_index[&(theta.edge_image(z), phi.edge_image(z))]))
        .collect();
    let families = g
        .infinite_families()
        .map(|id| {
            let a = theta.family_image(id).expect("total on families");
            let b = phi.family_image(id).expect("total on families");
            let name = format!("({},{})", e.family(a).name, f.family(b).name);
            (id, rg.family_id(&name).expect("family pair is in the relation graph"))
        })
        .collect();
    let map = GraphHom::new(g.clone(), rg.clone(), vmap, emap, families)?;
    let hit_v: BTreeSet<VertexId> = g.vertices().map(|z| map.vertex_image(z)).collect();
    let hit_e: BTreeSet<EdgeRef> = g.edges().map(|z| map.edge_image(z)).collect();
    let surjective = hit_v.len() == rg.vertex_count() && rg.edges().all(|x| hit_e.contains(&x));
    let injective = hit_v.len() == g.vertex_count() && hit_e.len() == g.edges().count();
    Ok(Mediator {
        factorization: fac,
        map,
        surjective,
        injective,
    })
}

/// An edge whose preimage contains paths of two different lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushoutWitness {
    pub edge: EdgeRef,
    pub shorter: Path,
    pub longer: Path,
}

/// The first codomain edge (canonical order) whose preimage mixes lengths.
/// Such an edge rules out any factorization through a pushout-type square.
pub fn pushout_obstruction(r: &RelationMorphism) -> Option<PushoutWitness> {
    for f in r.codomain.edges() {
        let mut pre = r.edge_preimage(f);
        pre.sort();
        let (Some(first), Some(last)) = (pre.first(), pre.last()) else {
            continue;
        };
        if first.len() != last.len() {
            let longer = pre.iter().find(|x| x.len() != first.len()).expect("lengths differ");
            return Some(PushoutWitness {
                edge: f,
                shorter: first.clone(),
                longer: longer.clone(),
            });
        }
    }
    None
}

/// Pairs `(x, y), (x', y), (x', y')` in the relation with `(x, y')` missing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityWitness {
    pub present: [(Path, Path); 3],
    pub missing: (Path, Path),
}

/// Searches for a failure of transitive closedness among pairs whose paths
/// have length at most `max_len`. Returns the first witness ordered by total
/// length, then by the paths in canonical order; `None` means no witness
/// exists within the bound.
pub fn transitive_closure_check(r: &RelationMorphism, max_len: usize) -> Option<TransitivityWitness> {
    let mut by_x: BTreeMap<Path, Vec<Path>> = BTreeMap::new();
    let mut by_y: BTreeMap<Path, Vec<Path>> = BTreeMap::new();
    for v in r.codomain.vertices() {
        for y in r.codomain.paths_from(v, max_len) {
            for x in r.preimage(&y) {
                if x.len() <= max_len {
                    by_x.entry(x.clone()).or_default().push(y.clone());
                    by_y.entry(y.clone()).or_default().push(x);
                }
            }
        }
    }
    type Key = (usize, Path, Path, Path, Path);
    let mut best: Option<(Key, TransitivityWitness)> = None;
    for (y, xs) in &by_y {
        for x in xs {
            for x2 in xs {
                if x == x2 {
                    continue;
                }
                for y2 in &by_x[x2] {
                    if y2 == y || r.member(x, y2) {
                        continue;
                    }
                    let key = (
                        x.len() + y.len() + x2.len() + y2.len(),
                        x.clone(),
                        y.clone(),
                        x2.clone(),
                        y2.clone(),
                    );
                    if best.as_ref().is_none_or(|(k, _)| key < *k) {
                        let witness = TransitivityWitness {
                            present: [
                                (x.clone(), y.clone()),
                                (x2.clone(), y.clone()),
                                (x2.clone(), y2.clone()),
                            ],
                            missing: (x.clone(), y2.clone()),
                        };
                        best = Some((key, witness));
                    }
                }
            }
        }
    }
    best.map(|(_, w)| w)
}
