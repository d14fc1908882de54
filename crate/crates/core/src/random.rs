//! Seedable generators of small graphs, homomorphisms, relations and free
//! algebra expressions, for property testing.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{scalar, Algebra, Generator, Level, Scalar, Word};
use crate::graph::{EdgeRef, FamilyId, Graph, GraphSpec, VertexId};
use crate::morphism::{GraphHom, PathHom};
use crate::path::Path;
use crate::relation::RelationMorphism;

/// Size limits for generated graphs.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_path_len: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 5,
            max_edges: 6,
            max_path_len: 3,
        }
    }
}

/// A graph with 1..=`max_vertices` vertices `v0, v1, …` and up to
/// `max_edges` single edges `a0, a1, …` between random endpoints.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let m = rng.gen_range(0..=max_edges);
    let mut spec = GraphSpec::new().vertices((0..n).map(|i| format!("v{i}")));
    for j in 0..m {
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        spec = spec.edge(format!("a{j}"), format!("v{s}"), format!("v{t}"));
    }
    spec.build().expect("generated names are distinct")
}

/// A relation with arbitrary generators: random vertex pairs and random
/// `(path, edge)` pairs, with the endpoint pairs they need added.
pub fn random_generators<R: Rng + ?Sized>(rng: &mut R, limits: Limits) -> RelationMorphism {
    let e = Arc::new(random_graph(rng, limits.max_vertices, limits.max_edges));
    let f = Arc::new(random_graph(rng, limits.max_vertices, limits.max_edges));
    let mut vertex_pairs = BTreeSet::new();
    for u in e.vertices() {
        if rng.gen_bool(0.6) {
            vertex_pairs.insert((u, VertexId(rng.gen_range(0..f.vertex_count()))));
        }
    }
    let mut edge_pairs = BTreeSet::new();
    let f_edges: Vec<EdgeRef> = f.edges().collect();
    if !f_edges.is_empty() {
        for _ in 0..rng.gen_range(0..=4) {
            let u = VertexId(rng.gen_range(0..e.vertex_count()));
            let paths = e.paths_from(u, limits.max_path_len);
            let x = paths.choose(rng).expect("vertex path").clone();
            let g = *f_edges.choose(rng).expect("nonempty");
            vertex_pairs.insert((x.source(), f.source(g)));
            vertex_pairs.insert((x.target(), f.target(g)));
            edge_pairs.insert((x, g));
        }
    }
    RelationMorphism::from_generators(e, f, vertex_pairs, edge_pairs, BTreeSet::new())
        .expect("endpoint pairs were added")
}

/// A relation into `target` built to be close to admissible: every target
/// vertex gets 0..=2 copies in a fresh domain graph, and every edge `f` and
/// every copy of its target receive one generator path from a copy of its
/// source, running through fresh intermediate vertices. With probability
/// `noise` per step, stray edges and generators are added to break
/// conditions. Returns `None` if the domain exceeds `limits`.
pub fn random_relation_into<R: Rng + ?Sized>(
    rng: &mut R,
    target: Arc<Graph>,
    limits: Limits,
    noise: f64,
) -> Option<RelationMorphism> {
    let mut names: Vec<String> = Vec::new();
    let mut copies: Vec<Vec<usize>> = Vec::new();
    for v in target.vertices() {
        let k = rng.gen_range(0..=2);
        let mut mine = Vec::new();
        for c in 0..k {
            mine.push(names.len());
            names.push(format!("{}_{c}", target.vertex_name(v)));
        }
        copies.push(mine);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut generators: Vec<(Vec<usize>, EdgeRef)> = Vec::new();
    for f in target.finite_edges() {
        let sources = &copies[target.source(f).0];
        for &end in &copies[target.target(f).0] {
            let Some(&start) = sources.choose(rng) else {
                continue;
            };
            let len = rng.gen_range(1..=limits.max_path_len);
            let mut at = start;
            let mut path = Vec::new();
            for step in 0..len {
                let next = if step + 1 == len {
                    end
                } else {
                    names.push(format!("m{}", names.len()));
                    names.len() - 1
                };
                path.push(edges.len());
                edges.push((at, next));
                at = next;
            }
            generators.push((path, f));
        }
    }
    let mut vertex_pairs: Vec<(usize, VertexId)> = Vec::new();
    for (v, mine) in copies.iter().enumerate() {
        for &c in mine {
            vertex_pairs.push((c, VertexId(v)));
        }
    }
    if names.is_empty() {
        return None;
    }
    if rng.gen_bool(noise) {
        let a = rng.gen_range(0..names.len());
        let b = rng.gen_range(0..names.len());
        edges.push((a, b));
    }
    if rng.gen_bool(noise) && !vertex_pairs.is_empty() {
        // Relate one copy to a second target vertex.
        let (c, _) = *vertex_pairs.choose(rng).expect("nonempty");
        vertex_pairs.push((c, VertexId(rng.gen_range(0..target.vertex_count()))));
    }
    if names.len() > limits.max_vertices || edges.len() > limits.max_edges {
        return None;
    }
    let mut spec = GraphSpec::new().vertices(names.iter().cloned());
    for (i, &(a, b)) in edges.iter().enumerate() {
        spec = spec.edge(format!("x{i}"), names[a].clone(), names[b].clone());
    }
    let domain = Arc::new(spec.build().expect("generated names are distinct"));
    let mut edge_pairs: BTreeSet<(Path, EdgeRef)> = generators
        .into_iter()
        .map(|(p, f)| {
            let refs: Vec<EdgeRef> = p.iter().map(|&i| EdgeRef::new(FamilyId(i), 0)).collect();
            (domain.path(&refs).expect("generator paths compose"), f)
        })
        .collect();
    let vertex_pairs: BTreeSet<(VertexId, VertexId)> =
        vertex_pairs.into_iter().map(|(c, v)| (VertexId(c), v)).collect();
    if rng.gen_bool(noise) {
        // A stray generator over an edge whose endpoints are both related.
        let mut candidates: Vec<(Path, EdgeRef)> = Vec::new();
        for f in target.finite_edges() {
            for u in domain.vertices() {
                if !vertex_pairs.contains(&(u, target.source(f))) {
                    continue;
                }
                for x in domain.paths_from(u, 2) {
                    if vertex_pairs.contains(&(x.target(), target.target(f))) {
                        candidates.push((x, f));
                    }
                }
            }
        }
        if let Some(extra) = candidates.choose(rng) {
            edge_pairs.insert(extra.clone());
        }
    }
    RelationMorphism::from_generators(domain, target, vertex_pairs, edge_pairs, BTreeSet::new()).ok()
}

/// A near-admissible relation between small random graphs, retrying until the
/// size limits hold.
pub fn random_relation<R: Rng + ?Sized>(rng: &mut R, limits: Limits, noise: f64) -> RelationMorphism {
    loop {
        let target = Arc::new(random_graph(rng, 3, 3));
        if let Some(r) = random_relation_into(rng, target, limits, noise) {
            return r;
        }
    }
}

/// A composable pair `(outer, inner)` of near-admissible relations
/// `E → F → G`.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R, limits: Limits, noise: f64) -> (RelationMorphism, RelationMorphism) {
    loop {
        let g = Arc::new(random_graph(rng, 2, 3));
        let Some(outer) = random_relation_into(rng, g, limits, noise) else {
            continue;
        };
        if let Some(inner) = random_relation_into(rng, outer.domain().clone(), limits, noise) {
            return (outer, inner);
        }
    }
}

/// A path homomorphism `F → E` into a random graph `E`, injective on
/// vertices. At some vertices the images of the out-edges form a complete
/// set of alternatives (which tends to make the map regular there), at
/// others they are arbitrary paths.
pub fn random_path_hom<R: Rng + ?Sized>(rng: &mut R, limits: Limits) -> PathHom {
    let e = Arc::new(random_graph(rng, limits.max_vertices, limits.max_edges));
    random_path_hom_into(rng, e, limits)
}

/// As [`random_path_hom`], into a given finite graph.
pub fn random_path_hom_into<R: Rng + ?Sized>(rng: &mut R, e: Arc<Graph>, limits: Limits) -> PathHom {
    let mut images: Vec<(VertexId, Path)> = Vec::new();
    for u in e.vertices() {
        if rng.gen_bool(0.5) {
            for p in random_cover(rng, &e, u, limits.max_path_len) {
                images.push((u, p));
            }
        } else {
            let paths: Vec<Path> = e
                .paths_from(u, limits.max_path_len)
                .into_iter()
                .filter(|p| !p.is_vertex())
                .collect();
            for _ in 0..rng.gen_range(0..=2) {
                if let Some(p) = paths.choose(rng) {
                    images.push((u, p.clone()));
                }
            }
        }
    }
    images.sort();
    images.dedup();
    images.truncate(limits.max_edges.max(1) + 2);
    let mut spec = GraphSpec::new().vertices(e.vertices().map(|v| format!("w{}", v.0)));
    let mut pairs: Vec<(String, String)> = e
        .vertices()
        .map(|v| (format!("w{}", v.0), e.vertex_name(v).to_string()))
        .collect();
    for (i, (_, p)) in images.iter().enumerate() {
        let name = format!("b{i}");
        spec = spec.edge(name.clone(), format!("w{}", p.source().0), format!("w{}", p.target().0));
        pairs.push((name, e.path_name(p)));
    }
    let f = Arc::new(spec.build().expect("generated names are distinct"));
    let borrowed: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    PathHom::from_names(f, e, &borrowed).expect("images respect endpoints")
}

/// A graph homomorphism into `target` from a fresh graph with 0..=2 copies
/// of each target vertex. Each target edge gets 0..=2 lifts per copy of its
/// target vertex, starting at random copies of its source.
pub fn random_graph_hom_into<R: Rng + ?Sized>(rng: &mut R, target: Arc<Graph>) -> GraphHom {
    let mut spec = GraphSpec::new();
    let mut copies: Vec<Vec<String>> = Vec::new();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for v in target.vertices() {
        let mine: Vec<String> = (0..rng.gen_range(0..=2))
            .map(|c| format!("{}_{c}", target.vertex_name(v)))
            .collect();
        for name in &mine {
            spec = spec.vertex(name.clone());
            pairs.push((name.clone(), target.vertex_name(v).to_string()));
        }
        copies.push(mine);
    }
    let mut n = 0;
    for f in target.finite_edges() {
        for end in copies[target.target(f).0].clone() {
            for _ in 0..rng.gen_range(0..=2) {
                let Some(start) = copies[target.source(f).0].choose(rng) else {
                    continue;
                };
                let name = format!("z{n}");
                n += 1;
                spec = spec.edge(name.clone(), start.clone(), end.clone());
                pairs.push((name, target.edge_name(f)));
            }
        }
    }
    let domain = Arc::new(spec.build().expect("generated names are distinct"));
    let borrowed: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    GraphHom::from_names(domain, target, &borrowed).expect("lifts respect endpoints")
}

/// A maximal antichain of nonvertex paths from `u` obtained by repeatedly
/// replacing a path with all its one-edge extensions.
fn random_cover<R: Rng + ?Sized>(rng: &mut R, g: &Graph, u: VertexId, max_len: usize) -> Vec<Path> {
    let mut cover: Vec<Path> = g.out_edges(u).map(|e| g.edge_path(e)).collect();
    for _ in 0..2 {
        if cover.is_empty() {
            break;
        }
        let i = rng.gen_range(0..cover.len());
        let p = cover[i].clone();
        let next: Vec<Path> = g.out_edges(p.target()).filter_map(|e| g.extend(&p, e)).collect();
        if p.len() < max_len && !next.is_empty() && rng.gen_bool(0.5) {
            cover.swap_remove(i);
            cover.extend(next);
        }
    }
    cover
}

/// A random formal sum of up to `max_terms` words of length 1..=`max_len`
/// over the generators of the algebra, with small integer coefficients.
pub fn random_raw_sum<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &Algebra,
    max_terms: usize,
    max_len: usize,
) -> Vec<(Scalar, Word)> {
    let gens = Generator::all(alg.graph(), alg.level());
    if gens.is_empty() {
        return Vec::new();
    }
    let n = rng.gen_range(1..=max_terms.max(1));
    (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            let word = (0..len).map(|_| *gens.choose(rng).expect("nonempty")).collect();
            let mut c = rng.gen_range(-3..=3);
            if c == 0 {
                c = 1;
            }
            (scalar(c), word)
        })
        .collect()
}

/// A random word whose adjacent generators compose, so that its product is
/// usually nonzero.
pub fn random_composable_word<R: Rng + ?Sized>(rng: &mut R, alg: &Algebra, max_len: usize) -> Word {
    let g = alg.graph();
    let gens = Generator::all(g, alg.level());
    let Some(&first) = gens.choose(rng) else {
        return Vec::new();
    };
    let mut word = vec![first];
    let len = rng.gen_range(1..=max_len.max(1));
    while word.len() < len {
        let at = word.last().expect("nonempty").target(g);
        let next: Vec<Generator> = gens
            .iter()
            .copied()
            .filter(|x| x.source(g) == at && !matches!(x, Generator::Vertex(_)))
            .collect();
        match next.choose(rng) {
            Some(&x) => word.push(x),
            None => break,
        }
    }
    word
}

/// Levels in a fixed order, handy for sampling.
pub const LEVELS: [Level; 3] = [Level::Path, Level::Cohn, Level::Leavitt];
