//! Free words in the generators and a rewriting system reducing them to
//! normal-form monomials.
//!
//! This is a second route to the same normal forms as [`Element`] products:
//! the rules (vertex absorption, orthogonality, ghost-edge cancellation and,
//! at the Leavitt level, the rewrite of `e e*` for special edges) may fire in
//! any order, which makes confluence observable.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Algebra, AlgebraError, Element, Level, Monomial, Scalar};
use crate::graph::{EdgeRef, Graph, VertexId};
use crate::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Vertex(VertexId),
    Edge(EdgeRef),
    Ghost(EdgeRef),
}

impl Generator {
    pub fn source(self, g: &Graph) -> VertexId {
        match self {
            Generator::Vertex(v) => v,
            Generator::Edge(e) => g.source(e),
            Generator::Ghost(e) => g.target(e),
        }
    }

    pub fn target(self, g: &Graph) -> VertexId {
        match self {
            Generator::Vertex(v) => v,
            Generator::Edge(e) => g.target(e),
            Generator::Ghost(e) => g.source(e),
        }
    }

    pub fn name(self, g: &Graph) -> String {
        match self {
            Generator::Vertex(v) => g.vertex_name(v).to_string(),
            Generator::Edge(e) => g.edge_name(e),
            Generator::Ghost(e) => format!("{}^*", g.edge_name(e)),
        }
    }

    /// Generators of the algebra at `level`, with infinite families
    /// represented by their index-0 member.
    pub fn all(g: &Graph, level: Level) -> Vec<Generator> {
        let mut out: Vec<Generator> = g.vertices().map(Generator::Vertex).collect();
        out.extend(g.edges().map(Generator::Edge));
        if level != Level::Path {
            out.extend(g.edges().map(Generator::Ghost));
        }
        out
    }
}

/// A product of generators, read left to right.
pub type Word = Vec<Generator>;

pub(crate) fn word_name(g: &Graph, w: &[Generator]) -> String {
    w.iter().map(|x| x.name(g)).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Redex {
    /// Adjacent generators at `i`, `i + 1` do not compose.
    Mismatch(usize),
    /// A vertex at `i` absorbed by a composable neighbour.
    Absorb(usize),
    /// A ghost at `i` followed by an edge.
    GhostEdge(usize),
    /// A special edge at `i` followed by its ghost.
    Special(usize),
}

fn redexes(alg: &Algebra, w: &[Generator]) -> Vec<Redex> {
    let g = &*alg.graph;
    let mut out = Vec::new();
    for i in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[i], w[i + 1]);
        if a.target(g) != b.source(g) {
            out.push(Redex::Mismatch(i));
            continue;
        }
        match (a, b) {
            (Generator::Ghost(_), Generator::Edge(_)) => out.push(Redex::GhostEdge(i)),
            (Generator::Edge(e), Generator::Ghost(f)) if alg.level == Level::Leavitt && e == f && alg.is_special(e) => {
                out.push(Redex::Special(i))
            }
            _ => {}
        }
    }
    if w.len() > 1 {
        for (i, x) in w.iter().enumerate() {
            if let Generator::Vertex(v) = *x {
                let left_ok = i == 0 || w[i - 1].target(g) == v;
                let right_ok = i + 1 == w.len() || w[i + 1].source(g) == v;
                if left_ok && right_ok {
                    out.push(Redex::Absorb(i));
                }
            }
        }
    }
    out
}

fn splice(w: &[Generator], i: usize, len: usize, with: &[Generator]) -> Word {
    let mut out = Vec::with_capacity(w.len() + with.len());
    out.extend_from_slice(&w[..i]);
    out.extend_from_slice(with);
    out.extend_from_slice(&w[i + len..]);
    out
}

fn rewrite(alg: &Algebra, coef: &Scalar, w: &[Generator], r: Redex) -> Vec<(Scalar, Word)> {
    match r {
        Redex::Mismatch(_) => Vec::new(),
        Redex::Absorb(i) => vec![(coef.clone(), splice(w, i, 1, &[]))],
        Redex::GhostEdge(i) => match (w[i], w[i + 1]) {
            (Generator::Ghost(e), Generator::Edge(f)) if e == f => {
                let t = alg.graph.target(e);
                vec![(coef.clone(), splice(w, i, 2, &[Generator::Vertex(t)]))]
            }
            _ => Vec::new(),
        },
        Redex::Special(i) => {
            let Generator::Edge(e) = w[i] else {
                unreachable!("special redex starts with an edge")
            };
            let v = alg.graph.source(e);
            let mut out = vec![(coef.clone(), splice(w, i, 2, &[Generator::Vertex(v)]))];
            for other in alg.graph.out_edges(v).filter(|&o| o != e) {
                let pair = [Generator::Edge(other), Generator::Ghost(other)];
                out.push((-coef.clone(), splice(w, i, 2, &pair)));
            }
            out
        }
    }
}

/// Reads an irreducible word as a monomial.
fn word_monomial(g: &Graph, w: &[Generator]) -> Monomial {
    if let [Generator::Vertex(v)] = w {
        return Monomial::vertex(*v);
    }
    let reals: Vec<EdgeRef> = w
        .iter()
        .filter_map(|x| match x {
            Generator::Edge(e) => Some(*e),
            _ => None,
        })
        .collect();
    let mut ghosts: Vec<EdgeRef> = w
        .iter()
        .filter_map(|x| match x {
            Generator::Ghost(e) => Some(*e),
            _ => None,
        })
        .collect();
    ghosts.reverse();
    let path = |edges: &[EdgeRef], end: VertexId| -> Path {
        if edges.is_empty() {
            Path::vertex(end)
        } else {
            g.path(edges).expect("irreducible words compose")
        }
    };
    let apex = w.iter().fold(None, |acc, x| match x {
        Generator::Edge(e) => Some(g.target(*e)),
        _ => acc,
    });
    let apex = apex.unwrap_or_else(|| w[0].source(g));
    Monomial {
        real: path(&reals, apex),
        ghost: path(&ghosts, apex),
    }
}

/// Normalizes a formal sum of words, firing the first redex of the first
/// reducible term at every step.
pub fn normalize_words(alg: &Arc<Algebra>, raw: &[(Scalar, Word)]) -> Result<Element, AlgebraError> {
    normalize_words_with(alg, raw, |_| 0)
}

/// Normalizes a formal sum of words. `choose(n)` picks an index below `n`:
/// it is called once to select a reducible term and once to select one of
/// its redexes, so different choosers explore different rewrite orders.
pub fn normalize_words_with(
    alg: &Arc<Algebra>,
    raw: &[(Scalar, Word)],
    mut choose: impl FnMut(usize) -> usize,
) -> Result<Element, AlgebraError> {
    let ghostly = |w: &Word| w.iter().any(|x| matches!(x, Generator::Ghost(_)));
    if alg.level == Level::Path && raw.iter().any(|(_, w)| ghostly(w)) {
        return Err(AlgebraError::NoGhosts);
    }
    let mut terms: Vec<(Scalar, Word)> = raw
        .iter()
        .filter(|(c, w)| !c.is_zero() && !w.is_empty())
        .cloned()
        .collect();
    loop {
        let reducible: Vec<(usize, Vec<Redex>)> = terms
            .iter()
            .enumerate()
            .map(|(i, (_, w))| (i, redexes(alg, w)))
            .filter(|(_, r)| !r.is_empty())
            .collect();
        if reducible.is_empty() {
            break;
        }
        let (ti, rs) = &reducible[choose(reducible.len()) % reducible.len()];
        let r = rs[choose(rs.len()) % rs.len()];
        let (coef, w) = terms.swap_remove(*ti);
        terms.extend(rewrite(alg, &coef, &w, r));
    }
    let mut out = Element::zero(alg);
    for (c, w) in terms {
        let m = word_monomial(&alg.graph, &w);
        out = out.checked_add(&Element::term(alg, m, c)?)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelatorKind {
    /// `P_v P_w − δ P_v`.
    Vertex,
    /// `P_s(e) S_e − S_e` and `S_e P_t(e) − S_e`.
    Edge,
    /// `P_t(e) S_e* − S_e*` and `S_e* P_s(e) − S_e*`.
    Ghost,
    /// `S_e* S_f − δ P_t(e)`.
    GhostEdge,
    /// `Σ S_e S_e* − P_v` at a regular vertex.
    Regular,
}

/// A formal sum of words that vanishes in the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub kind: RelatorKind,
    pub terms: Vec<(Scalar, Word)>,
}

impl Relator {
    pub fn display(&self, g: &Graph) -> String {
        let mut s = String::new();
        for (i, (c, w)) in self.terms.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            s.push_str(match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if !abs.is_one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(&word_name(g, w));
        }
        s
    }
}

/// The defining relations of the algebra. Each infinite family contributes
/// its members 0 and 1, enough to exercise both cases of `δ`.
pub fn relators(alg: &Algebra) -> Vec<Relator> {
    use Generator::{Edge, Ghost, Vertex};
    let g = &*alg.graph;
    let one = Scalar::one;
    let mut edges: Vec<EdgeRef> = g.edges().collect();
    for id in g.infinite_families() {
        edges.push(EdgeRef::new(id, 1));
    }
    let mut out = Vec::new();
    let rel = |kind, terms| Relator { kind, terms };
    for v in g.vertices() {
        for w in g.vertices() {
            let mut terms = vec![(one(), vec![Vertex(v), Vertex(w)])];
            if v == w {
                terms.push((-one(), vec![Vertex(v)]));
            }
            out.push(rel(RelatorKind::Vertex, terms));
        }
    }
    for &e in &edges {
        let (s, t) = (g.source(e), g.target(e));
        out.push(rel(
            RelatorKind::Edge,
            vec![(one(), vec![Vertex(s), Edge(e)]), (-one(), vec![Edge(e)])],
        ));
        out.push(rel(
            RelatorKind::Edge,
            vec![(one(), vec![Edge(e), Vertex(t)]), (-one(), vec![Edge(e)])],
        ));
    }
    if alg.level == Level::Path {
        return out;
    }
    for &e in &edges {
        let (s, t) = (g.source(e), g.target(e));
        out.push(rel(
            RelatorKind::Ghost,
            vec![(one(), vec![Vertex(t), Ghost(e)]), (-one(), vec![Ghost(e)])],
        ));
        out.push(rel(
            RelatorKind::Ghost,
            vec![(one(), vec![Ghost(e), Vertex(s)]), (-one(), vec![Ghost(e)])],
        ));
    }
    for &e in &edges {
        for &f in &edges {
            let mut terms = vec![(one(), vec![Ghost(e), Edge(f)])];
            if e == f {
                terms.push((-one(), vec![Vertex(g.target(e))]));
            }
            out.push(rel(RelatorKind::GhostEdge, terms));
        }
    }
    if alg.level == Level::Leavitt {
        for &v in &g.classification().regular {
            let mut terms: Vec<(Scalar, Word)> = g.out_edges(v).map(|e| (one(), vec![Edge(e), Ghost(e)])).collect();
            terms.push((-one(), vec![Vertex(v)]));
            out.push(rel(RelatorKind::Regular, terms));
        }
    }
    out
}
