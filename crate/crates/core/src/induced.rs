//! Algebra homomorphisms induced by relation morphisms.
//!
//! A relation `R: E → F` induces a map from the algebra of `F` to the algebra
//! of `E` sending `S_y` to the sum of `S_x` over the preimage of `y`, for
//! vertices and edges `y`, and `S_f*` to the sum of the corresponding ghosts.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{relators, Algebra, AlgebraError, Element, Generator, Level, Relator};
use crate::graph::{EdgeRef, FamilyId, Graph};
use crate::relation::{compose_generators, AdmissibilityReport, RelationCategory, RelationError, RelationMorphism};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InduceError {
    #[error("the {level} level needs {}", failing.join(", "))]
    Precondition { level: Level, failing: Vec<&'static str> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error("element is not in the source algebra of the homomorphism")]
    WrongAlgebra,
}

/// A homomorphism given by the images of the generators of its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedHom {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    images: BTreeMap<Generator, Element>,
    /// Infinite families of the source paired with families of the target;
    /// members map to the equally indexed members.
    families: Vec<(FamilyId, FamilyId)>,
}

/// Flags an induced homomorphism at `level` requires, with their values.
fn requirements(report: &AdmissibilityReport, level: Level) -> Vec<(&'static str, bool)> {
    let mut out = vec![("vertex_disjoint", report.vertex_disjoint)];
    if level == Level::Path {
        return out;
    }
    out.extend([
        ("target_injective", report.target_injective),
        ("target_surjective", report.target_surjective),
        ("monotone", report.monotone),
    ]);
    if level == Level::Leavitt {
        out.push(("regular", report.regular));
    }
    out
}

/// The homomorphism induced by `r` at `level`. The path level needs a vertex
/// disjoint relation, the Cohn level a relation in CRG and the Leavitt level
/// an admissible one.
pub fn induce(r: &RelationMorphism, level: Level) -> Result<InducedHom, InduceError> {
    let report = r.admissibility();
    let failing: Vec<&'static str> = requirements(&report, level)
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
    if !failing.is_empty() {
        return Err(InduceError::Precondition { level, failing });
    }
    debug_assert!(level == Level::Path || report.category >= RelationCategory::CRG);
    Ok(induce_unchecked(r, level))
}

/// The generator formula at `level` with no precondition; the result need not
/// be well defined, which [`InducedHom::verify_relators`] detects.
pub fn induce_unchecked(r: &RelationMorphism, level: Level) -> InducedHom {
    let source = Algebra::new(level, r.codomain().clone());
    let target = Algebra::new(level, r.domain().clone());
    induce_between(r, source, target).expect("algebras are built over the relation's graphs")
}

/// The generator formula between explicitly given algebras, which allows
/// non-default special edges.
pub fn induce_between(
    r: &RelationMorphism,
    source: Arc<Algebra>,
    target: Arc<Algebra>,
) -> Result<InducedHom, InduceError> {
    if source.graph() != r.codomain() || target.graph() != r.domain() || source.level() != target.level() {
        return Err(InduceError::WrongAlgebra);
    }
    let f = r.codomain();
    let mut images = BTreeMap::new();
    for v in f.vertices() {
        let mut sum = Element::zero(&target);
        for u in r.vertex_preimage(v) {
            sum = &sum + &Element::vertex(&target, u);
        }
        images.insert(Generator::Vertex(v), sum);
    }
    for e in f.finite_edges() {
        let pre = r.edge_preimage(e);
        let mut sum = Element::zero(&target);
        for x in &pre {
            sum = &sum + &Element::path(&target, x.clone());
        }
        images.insert(Generator::Edge(e), sum);
        if source.level() != Level::Path {
            let mut ghosts = Element::zero(&target);
            for x in pre {
                ghosts = &ghosts + &Element::ghost_path(&target, x)?;
            }
            images.insert(Generator::Ghost(e), ghosts);
        }
    }
    let families = r.family_pairs().iter().map(|&(a, b)| (b, a)).collect();
    Ok(InducedHom {
        source,
        target,
        images,
        families,
    })
}

impl InducedHom {
    pub fn level(&self) -> Level {
        self.source.level()
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn images(&self) -> &BTreeMap<Generator, Element> {
        &self.images
    }

    /// Replaces the image of one generator, e.g. to test the verifier.
    pub fn with_image(mut self, g: Generator, image: Element) -> Self {
        self.images.insert(g, image);
        self
    }

    /// Image of any generator, including members of infinite families.
    pub fn image(&self, g: Generator) -> Result<Element, InduceError> {
        if let Some(x) = self.images.get(&g) {
            return Ok(x.clone());
        }
        let (e, ghost) = match g {
            Generator::Edge(e) => (e, false),
            Generator::Ghost(e) if self.level() != Level::Path => (e, true),
            _ => return Err(InduceError::WrongAlgebra),
        };
        let mut sum = Element::zero(&self.target);
        for &(b, a) in &self.families {
            if b == e.family {
                let member = EdgeRef::new(a, e.index);
                let term = if ghost {
                    Element::ghost(&self.target, member)?
                } else {
                    Element::edge(&self.target, member)
                };
                sum = &sum + &term;
            }
        }
        Ok(sum)
    }

    fn word_image(&self, word: &[Generator]) -> Result<Element, InduceError> {
        let mut it = word.iter();
        let Some(&first) = it.next() else {
            return Ok(Element::zero(&self.target));
        };
        let mut acc = self.image(first)?;
        for &g in it {
            acc = acc.checked_mul(&self.image(g)?)?;
        }
        Ok(acc)
    }

    /// Substitutes generator images into `a` and multiplies out.
    pub fn apply(&self, a: &Element) -> Result<Element, InduceError> {
        if a.algebra() != &self.source {
            return Err(InduceError::WrongAlgebra);
        }
        let mut out = Element::zero(&self.target);
        for (m, c) in a.terms() {
            let word: Vec<Generator> = if m.real.is_vertex() && m.ghost.is_vertex() {
                vec![Generator::Vertex(m.real.source())]
            } else {
                m.real
                    .edges()
                    .iter()
                    .map(|&e| Generator::Edge(e))
                    .chain(m.ghost.edges().iter().rev().map(|&e| Generator::Ghost(e)))
                    .collect()
            };
            out = &out + &self.word_image(&word)?.scale(c);
        }
        Ok(out)
    }

    /// Pushes every defining relation of the source algebra through the
    /// generator images and returns those that do not vanish in the target,
    /// with their residues.
    pub fn verify_relators(&self) -> Result<Vec<(Relator, Element)>, InduceError> {
        let mut violated = Vec::new();
        for rel in relators(&self.source) {
            let mut sum = Element::zero(&self.target);
            for (c, w) in &rel.terms {
                sum = &sum + &self.word_image(w)?.scale(c);
            }
            if !sum.is_zero() {
                violated.push((rel, sum));
            }
        }
        Ok(violated)
    }
}

/// Differences `R*(S*(γ)) − (S∘R)*(γ)` over the generators `γ` of the
/// outermost graph, nonzero ones only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorialityGap {
    pub entries: Vec<(Generator, Element)>,
}

impl FunctorialityGap {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, g: Generator) -> Option<&Element> {
        self.entries.iter().find(|(h, _)| *h == g).map(|(_, x)| x)
    }

    pub fn describe(&self, graph: &Graph) -> Vec<String> {
        self.entries
            .iter()
            .map(|(g, x)| format!("{}: {}", g.name(graph), x))
            .collect()
    }
}

/// Compares the homomorphism induced by `outer ∘ inner` with the composite of
/// the induced homomorphisms, generator by generator. Works for any pair of
/// composable relations so that failures can be exhibited.
pub fn functoriality_gap(
    outer: &RelationMorphism,
    inner: &RelationMorphism,
    level: Level,
) -> Result<FunctorialityGap, InduceError> {
    let composite = compose_generators(outer, inner)?;
    let whole = induce_unchecked(&composite, level);
    let first = induce_unchecked(outer, level);
    let second = induce_unchecked(inner, level);
    let g = outer.codomain();
    let mut gens = Generator::all(g, level);
    for id in g.infinite_families() {
        gens.push(Generator::Edge(EdgeRef::new(id, 1)));
        if level != Level::Path {
            gens.push(Generator::Ghost(EdgeRef::new(id, 1)));
        }
    }
    let mut entries = Vec::new();
    for gen in gens {
        let via_parts = second.apply(&first.image(gen)?)?;
        let direct = whole.image(gen)?;
        let diff = &via_parts - &direct;
        if !diff.is_zero() {
            entries.push((gen, diff));
        }
    }
    Ok(FunctorialityGap { entries })
}
