//! Parsed documents with every declaration resolved into core objects.

use std::collections::BTreeMap;
use std::sync::Arc;

use relgraph::{
    compose_relations, lift_graph_hom, lower_path_hom, Graph, GraphHom, GraphSpec, PathHom, RelationMorphism,
};

use crate::error::{DslError, Span};
use crate::syntax::{parse_items, print_items, GraphDecl, HomDecl, HomKind, Item, Name, RelationBody, RelationDecl};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hom {
    Graph(GraphHom),
    Path(PathHom),
}

impl Hom {
    pub fn to_path_hom(&self) -> PathHom {
        match self {
            Hom::Graph(h) => h.to_path_hom(),
            Hom::Path(h) => h.clone(),
        }
    }

    pub fn domain(&self) -> &Arc<Graph> {
        match self {
            Hom::Graph(h) => h.domain(),
            Hom::Path(h) => h.domain(),
        }
    }

    pub fn codomain(&self) -> &Arc<Graph> {
        match self {
            Hom::Graph(h) => h.codomain(),
            Hom::Path(h) => h.codomain(),
        }
    }
}

/// A declared object, looked up by name.
#[derive(Debug, Clone, Copy)]
pub enum Object<'a> {
    Graph(&'a Arc<Graph>),
    Hom(&'a Hom),
    Relation(&'a RelationMorphism),
}

/// Declarations in source order together with their resolved values.
/// Two documents are equal when their declarations are; positions do not
/// count.
#[derive(Debug, Clone)]
pub struct Document {
    items: Vec<Item>,
    graphs: BTreeMap<String, Arc<Graph>>,
    homs: BTreeMap<String, Hom>,
    relations: BTreeMap<String, RelationMorphism>,
}

impl PartialEq for Document {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

impl Eq for Document {}

/// Parses and resolves a document.
pub fn parse_document(text: &str) -> Result<Document, DslError> {
    Document::from_items(parse_items(text)?)
}

impl Document {
    pub fn from_items(items: Vec<Item>) -> Result<Document, DslError> {
        let mut doc = Document {
            items: Vec::new(),
            graphs: BTreeMap::new(),
            homs: BTreeMap::new(),
            relations: BTreeMap::new(),
        };
        for item in items {
            doc.add(item)?;
        }
        Ok(doc)
    }

    /// Resolves one more declaration against the ones before it.
    pub fn add(&mut self, item: Item) -> Result<(), DslError> {
        let name = item.name().clone();
        if self.lookup(&name.value).is_some() {
            return Err(DslError::semantic(
                format!("`{}` is declared twice", name.value),
                name.span,
            ));
        }
        match &item {
            Item::Graph(g) => {
                let graph = resolve_graph(g)?;
                self.graphs.insert(name.value, Arc::new(graph));
            }
            Item::Hom(h) => {
                let hom = self.resolve_hom(h)?;
                self.homs.insert(name.value, hom);
            }
            Item::Relation(r) => {
                let rel = self.resolve_relation(r)?;
                self.relations.insert(name.value, rel);
            }
        }
        self.items.push(item);
        Ok(())
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.items.iter().map(|i| i.name().value.as_str())
    }

    pub fn lookup(&self, name: &str) -> Option<Object<'_>> {
        if let Some(g) = self.graphs.get(name) {
            return Some(Object::Graph(g));
        }
        if let Some(h) = self.homs.get(name) {
            return Some(Object::Hom(h));
        }
        self.relations.get(name).map(Object::Relation)
    }

    pub fn graph(&self, name: &str) -> Option<&Arc<Graph>> {
        self.graphs.get(name)
    }

    pub fn hom(&self, name: &str) -> Option<&Hom> {
        self.homs.get(name)
    }

    pub fn relation(&self, name: &str) -> Option<&RelationMorphism> {
        self.relations.get(name)
    }

    /// The document in canonical layout.
    pub fn print(&self) -> String {
        print_items(&self.items)
    }

    fn graph_named(&self, n: &Name) -> Result<Arc<Graph>, DslError> {
        self.graphs
            .get(&n.value)
            .cloned()
            .ok_or_else(|| DslError::unresolved("graph", &n.value, n.span))
    }

    fn resolve_hom(&self, h: &HomDecl) -> Result<Hom, DslError> {
        let domain = self.graph_named(&h.domain)?;
        let codomain = self.graph_named(&h.codomain)?;
        let pairs: Vec<(&str, &str)> = h
            .maps
            .iter()
            .map(|(a, b)| (a.value.as_str(), b.value.as_str()))
            .collect();
        let spans = entry_spans(h.maps.iter());
        let fail = |e: &dyn std::fmt::Display| DslError::semantic(e, locate(&spans, &e.to_string(), h.name.span));
        Ok(match h.kind {
            HomKind::Graph => Hom::Graph(GraphHom::from_names(domain, codomain, &pairs).map_err(|e| fail(&e))?),
            HomKind::Path => Hom::Path(PathHom::from_names(domain, codomain, &pairs).map_err(|e| fail(&e))?),
        })
    }

    fn resolve_relation(&self, r: &RelationDecl) -> Result<RelationMorphism, DslError> {
        let hom = |n: &Name| {
            self.homs
                .get(&n.value)
                .ok_or_else(|| DslError::unresolved("homomorphism", &n.value, n.span))
        };
        let relation = |n: &Name| {
            self.relations
                .get(&n.value)
                .ok_or_else(|| DslError::unresolved("relation", &n.value, n.span))
        };
        match &r.body {
            RelationBody::Generators {
                domain,
                codomain,
                vertices,
                edges,
            } => {
                let e = self.graph_named(domain)?;
                let f = self.graph_named(codomain)?;
                fn as_str(ps: &[(Name, Name)]) -> Vec<(&str, &str)> {
                    ps.iter().map(|(a, b)| (a.value.as_str(), b.value.as_str())).collect()
                }
                RelationMorphism::from_names(e, f, &as_str(vertices), &as_str(edges)).map_err(|err| {
                    let spans = entry_spans(vertices.iter().chain(edges));
                    DslError::semantic(&err, locate(&spans, &err.to_string(), r.name.span))
                })
            }
            RelationBody::Lift(n) => match hom(n)? {
                Hom::Graph(h) => Ok(lift_graph_hom(h)),
                Hom::Path(_) => Err(DslError::semantic(
                    format!("`{}` is a path homomorphism; only graph homomorphisms lift", n.value),
                    n.span,
                )),
            },
            RelationBody::Lower(n) => Ok(lower_path_hom(&hom(n)?.to_path_hom())),
            RelationBody::Compose(outer, inner) => {
                compose_relations(relation(outer)?, relation(inner)?).map_err(|e| DslError::semantic(e, r.name.span))
            }
        }
    }
}

fn resolve_graph(g: &GraphDecl) -> Result<Graph, DslError> {
    let mut spec = GraphSpec::new().vertices(g.vertices.iter().map(|v| v.value.clone()));
    for e in &g.edges {
        spec = spec.family(
            e.name.value.clone(),
            e.source.value.clone(),
            e.target.value.clone(),
            e.cardinality,
        );
    }
    spec.build().map_err(|err| {
        // Report at the last declaration of the offending name, which is
        // the duplicate for redeclarations and the edge otherwise.
        let mut spans: Vec<(String, Span)> = g.vertices.iter().map(|v| (v.value.clone(), v.span)).collect();
        spans.extend(g.edges.iter().map(|e| (e.name.value.clone(), e.name.span)));
        spans.reverse();
        DslError::semantic(&err, locate(&spans, &err.to_string(), g.name.span))
    })
}

fn entry_spans<'a>(entries: impl Iterator<Item = &'a (Name, Name)>) -> Vec<(String, Span)> {
    entries
        .flat_map(|(a, b)| [(a.value.clone(), a.span), (b.value.clone(), b.span)])
        .collect()
}

/// The span of the first entry whose text is quoted in `message`.
fn locate(spans: &[(String, Span)], message: &str, fallback: Span) -> Span {
    spans
        .iter()
        .find(|(text, _)| message.contains(&format!("`{text}`")))
        .map_or(fallback, |(_, s)| *s)
}
