//! Graphviz output. Infinite edge families are drawn as one dashed edge
//! labeled `∞`.

use std::fmt::Write as _;

use relgraph::{pullback_factorize, Graph, RelationMorphism};

use crate::document::{Document, Hom, Object};
use crate::error::DslError;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `label(edge)` gives the label of each finite edge.
fn digraph(name: &str, g: &Graph, label: impl Fn(relgraph::EdgeRef) -> String) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in g.vertices() {
        writeln!(out, "  {};", quote(g.vertex_name(v))).expect("string write");
    }
    for (id, fam) in g.families() {
        let s = quote(g.vertex_name(fam.source));
        let t = quote(g.vertex_name(fam.target));
        if fam.is_infinite() {
            writeln!(
                out,
                "  {s} -> {t} [label=\"∞\", style=dashed, tooltip={}];",
                quote(&fam.name)
            )
            .expect("string write");
            continue;
        }
        for i in 0..fam.listed_members() {
            let e = relgraph::EdgeRef::new(id, i);
            writeln!(out, "  {s} -> {t} [label={}];", quote(&label(e))).expect("string write");
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(name: &str, g: &Graph) -> String {
    digraph(name, g, |e| g.edge_name(e))
}

/// The relation graph, each edge labeled by its generator `(x, f)`, that is
/// by its images under both projections.
pub fn relation_dot(name: &str, r: &RelationMorphism) -> String {
    let fac = pullback_factorize(r);
    digraph(name, &fac.relation_graph, |e| fac.relation_graph.edge_name(e))
}

/// The domain graph, each edge labeled `e ↦ image`.
pub fn hom_dot(name: &str, h: &Hom) -> String {
    let g = h.domain();
    let p = h.to_path_hom();
    digraph(name, g, |e| {
        format!("{} ↦ {}", g.edge_name(e), p.codomain().path_name(&p.edge_image(e)))
    })
}

/// DOT text for any named declaration.
pub fn export_dot(doc: &Document, name: &str) -> Result<String, DslError> {
    match doc.lookup(name) {
        Some(Object::Graph(g)) => Ok(graph_dot(name, g)),
        Some(Object::Hom(h)) => Ok(hom_dot(name, h)),
        Some(Object::Relation(r)) => Ok(relation_dot(name, r)),
        None => Err(DslError::usage(format!("unknown name `{name}`"))),
    }
}

/// Node and edge statement counts of DOT text produced here.
pub fn dot_shape(dot: &str) -> (usize, usize) {
    let lines: Vec<&str> = dot.lines().filter(|l| l.starts_with("  ")).collect();
    let edges = lines.iter().filter(|l| l.contains(" -> ")).count();
    (lines.len() - edges, edges)
}
