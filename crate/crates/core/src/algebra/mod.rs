//! Path algebras, Cohn path algebras and Leavitt path algebras over the
//! rationals, computed on normal-form monomials.
//!
//! A monomial is a pair of paths `(real, ghost)` with a common target and
//! stands for `S_real · S_ghost*`. At the path level the ghost part is always
//! the target vertex of the real part. At the Leavitt level a monomial whose
//! two parts end in the same special edge is rewritten with the Cuntz–Krieger
//! relation at that edge's source; the remaining monomials form a basis.

mod basis;
mod words;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{EdgeRef, Graph, VertexId};
use crate::path::Path;

pub use basis::acyclic_basis;
pub use words::{normalize_words, normalize_words_with, relators, Generator, Relator, RelatorKind, Word};

/// Exact rational coefficients.
pub type Scalar = BigRational;

/// Builds an integer scalar.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Path,
    Cohn,
    Leavitt,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Path => "path",
            Level::Cohn => "cohn",
            Level::Leavitt => "leavitt",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements live in different algebras")]
    AlgebraMismatch,
    #[error("the path algebra has no ghost generators or involution")]
    NoGhosts,
    #[error("paths `{0}` and `{1}` do not end at the same vertex")]
    TargetMismatch(String, String),
    #[error("graph has a cycle")]
    Cyclic,
    #[error("graph has an infinite edge family `{0}`")]
    InfiniteFamily(String),
    #[error("`{edge}` cannot be the special edge of `{vertex}`")]
    InvalidSpecialEdge { vertex: String, edge: String },
    #[error("regular vertex `{0}` has no special edge")]
    MissingSpecialEdge(String),
}

/// The special edge chosen at each regular vertex, used to orient the
/// Cuntz–Krieger rewrite.
pub type SpecialEdges = BTreeMap<VertexId, EdgeRef>;

/// First out-edge in declaration order at every regular vertex.
pub fn default_special_edges(g: &Graph) -> SpecialEdges {
    g.classification()
        .regular
        .iter()
        .filter_map(|&v| g.out_edges(v).next().map(|e| (v, e)))
        .collect()
}

/// An algebra attached to a graph at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    level: Level,
    graph: Arc<Graph>,
    special: SpecialEdges,
}

impl Algebra {
    pub fn new(level: Level, graph: Arc<Graph>) -> Arc<Algebra> {
        let special = default_special_edges(&graph);
        Arc::new(Algebra { level, graph, special })
    }

    pub fn with_special_edges(
        level: Level,
        graph: Arc<Graph>,
        special: SpecialEdges,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        for &v in &graph.classification().regular {
            let e = *special
                .get(&v)
                .ok_or_else(|| AlgebraError::MissingSpecialEdge(graph.vertex_name(v).to_string()))?;
            if !graph.contains_edge(e) || graph.source(e) != v {
                return Err(AlgebraError::InvalidSpecialEdge {
                    vertex: graph.vertex_name(v).to_string(),
                    edge: format!("{e:?}"),
                });
            }
        }
        if let Some((&v, &e)) = special.iter().find(|(v, _)| !graph.is_regular(**v)) {
            return Err(AlgebraError::InvalidSpecialEdge {
                vertex: graph.vertex_name(v).to_string(),
                edge: graph.edge_name(e),
            });
        }
        Ok(Arc::new(Algebra { level, graph, special }))
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn special_edges(&self) -> &SpecialEdges {
        &self.special
    }

    fn is_special(&self, e: EdgeRef) -> bool {
        self.special.get(&self.graph.source(e)) == Some(&e)
    }

    /// Whether `m` is in normal form at this level.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        if m.real.target() != m.ghost.target() {
            return false;
        }
        match self.level {
            Level::Path => m.ghost.is_vertex(),
            Level::Cohn => true,
            Level::Leavitt => !self.is_reducible(m),
        }
    }

    fn is_reducible(&self, m: &Monomial) -> bool {
        match (m.real.last_edge(), m.ghost.last_edge()) {
            (Some(a), Some(b)) => a == b && self.is_special(a),
            _ => false,
        }
    }

    /// Adds `coef · m` to `out`, rewriting `m` into normal form first.
    fn add_normalized(&self, m: Monomial, coef: Scalar, out: &mut BTreeMap<Monomial, Scalar>) {
        if self.level == Level::Leavitt && self.is_reducible(&m) {
            // x̂e (ŷe)* = x̂ŷ* − Σ_{e' ≠ e} x̂e' (ŷe')* for the special edge e.
            let e = m.real.last_edge().expect("reducible monomials end in an edge");
            let real = m.real.without_last().expect("nonempty");
            let ghost = m.ghost.without_last().expect("nonempty");
            for other in self.graph.out_edges(self.graph.source(e)) {
                if other == e {
                    continue;
                }
                let m2 = Monomial {
                    real: self.graph.extend(&real, other).expect("same source"),
                    ghost: self.graph.extend(&ghost, other).expect("same source"),
                };
                add_term(out, m2, -coef.clone());
            }
            self.add_normalized(Monomial { real, ghost }, coef, out);
        } else {
            add_term(out, m, coef);
        }
    }

    /// The Cohn-level product of two monomials: a monomial or zero.
    fn cohn_product(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        // (x y*)(x' y'*): if x' = y z the middle collapses to z; if y = x' z it
        // collapses to z*; otherwise CK1 kills it.
        if let Some(z) = b.real.strip_prefix(&a.ghost) {
            Some(Monomial {
                real: a.real.concat(&z).expect("z starts at t(x)"),
                ghost: b.ghost.clone(),
            })
        } else {
            a.ghost.strip_prefix(&b.real).map(|z| Monomial {
                real: a.real.clone(),
                ghost: b.ghost.concat(&z).expect("z starts at t(y')"),
            })
        }
    }
}

fn add_term(out: &mut BTreeMap<Monomial, Scalar>, m: Monomial, coef: Scalar) {
    if coef.is_zero() {
        return;
    }
    let entry = out.entry(m);
    match entry {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coef;
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coef);
        }
    }
}

/// `S_real · S_ghost*` with `real` and `ghost` ending at the same vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub real: Path,
    pub ghost: Path,
}

impl Monomial {
    pub fn new(real: Path, ghost: Path) -> Option<Monomial> {
        (real.target() == ghost.target()).then_some(Monomial { real, ghost })
    }

    /// `S_x`, that is `(x, t(x))`.
    pub fn path(x: Path) -> Monomial {
        let ghost = Path::vertex(x.target());
        Monomial { real: x, ghost }
    }

    /// `S_{x*}`, that is `(t(x), x)`.
    pub fn ghost_path(x: Path) -> Monomial {
        let real = Path::vertex(x.target());
        Monomial { real, ghost: x }
    }

    pub fn vertex(v: VertexId) -> Monomial {
        Monomial {
            real: Path::vertex(v),
            ghost: Path::vertex(v),
        }
    }

    pub fn star(&self) -> Monomial {
        Monomial {
            real: self.ghost.clone(),
            ghost: self.real.clone(),
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        match (self.real.is_vertex(), self.ghost.is_vertex()) {
            (_, true) => g.path_name(&self.real),
            (true, false) => format!("{}^*", g.path_name(&self.ghost)),
            (false, false) => format!("{} {}^*", g.path_name(&self.real), g.path_name(&self.ghost)),
        }
    }
}

/// A finite linear combination of normal-form monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    algebra: Arc<Algebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero(algebra: &Arc<Algebra>) -> Element {
        Element {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `coef · m`, normalized.
    pub fn term(algebra: &Arc<Algebra>, m: Monomial, coef: Scalar) -> Result<Element, AlgebraError> {
        if algebra.level == Level::Path && !m.ghost.is_vertex() {
            return Err(AlgebraError::NoGhosts);
        }
        if m.real.target() != m.ghost.target() {
            return Err(AlgebraError::TargetMismatch(
                algebra.graph.path_name(&m.real),
                algebra.graph.path_name(&m.ghost),
            ));
        }
        let mut terms = BTreeMap::new();
        algebra.add_normalized(m, coef, &mut terms);
        Ok(Element {
            algebra: algebra.clone(),
            terms,
        })
    }

    pub fn monomial(algebra: &Arc<Algebra>, m: Monomial) -> Result<Element, AlgebraError> {
        Self::term(algebra, m, Scalar::one())
    }

    pub fn vertex(algebra: &Arc<Algebra>, v: VertexId) -> Element {
        Self::monomial(algebra, Monomial::vertex(v)).expect("vertex monomials are valid")
    }

    pub fn path(algebra: &Arc<Algebra>, x: Path) -> Element {
        Self::monomial(algebra, Monomial::path(x)).expect("path monomials are valid")
    }

    pub fn edge(algebra: &Arc<Algebra>, e: EdgeRef) -> Element {
        Self::path(algebra, algebra.graph.edge_path(e))
    }

    pub fn ghost_path(algebra: &Arc<Algebra>, x: Path) -> Result<Element, AlgebraError> {
        Self::monomial(algebra, Monomial::ghost_path(x))
    }

    pub fn ghost(algebra: &Arc<Algebra>, e: EdgeRef) -> Result<Element, AlgebraError> {
        Self::ghost_path(algebra, algebra.graph.edge_path(e))
    }

    /// The element denoted by a single generator.
    pub fn generator(algebra: &Arc<Algebra>, g: Generator) -> Result<Element, AlgebraError> {
        match g {
            Generator::Vertex(v) => Ok(Self::vertex(algebra, v)),
            Generator::Edge(e) => Ok(Self::edge(algebra, e)),
            Generator::Ghost(e) => Self::ghost(algebra, e),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn level(&self) -> Level {
        self.algebra.level
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.algebra.graph
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_algebra(&self, other: &Element) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.same_algebra(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.checked_add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect()
        };
        Element {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.same_algebra(other)?;
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = self.algebra.cohn_product(a, b) {
                    self.algebra.add_normalized(m, ca * cb, &mut terms);
                }
            }
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    /// The involution `S_x S_y* ↦ S_y S_x*`, identity on scalars.
    pub fn star(&self) -> Result<Element, AlgebraError> {
        if self.algebra.level == Level::Path {
            return Err(AlgebraError::NoGhosts);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            self.algebra.add_normalized(m.star(), c.clone(), &mut terms);
        }
        Ok(Element {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    /// The same linear combination read in another algebra over the same
    /// graph (renormalized there).
    pub fn reinterpret(&self, algebra: &Arc<Algebra>) -> Result<Element, AlgebraError> {
        if *algebra.graph != *self.algebra.graph {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let mut out = Element::zero(algebra);
        for (m, c) in &self.terms {
            out = out.checked_add(&Element::term(algebra, m.clone(), c.clone())?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let g = &self.algebra.graph;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&m.display(g))?;
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;

    /// Panics if the operands live in different algebras.
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("operands in the same algebra")
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("operands in the same algebra")
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("operands in the same algebra")
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}
