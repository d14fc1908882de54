use std::collections::BTreeSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relgraph::random::{random_relation, Limits};
use relgraph::{Cardinality, Graph, GraphSpec, RelationMorphism};
use relgraph_dsl::{corpus, parse_document};

#[test]
fn printed_corpus_reparses_to_the_same_document() {
    for f in corpus() {
        let doc = f.document();
        let printed = doc.print();
        let again = parse_document(&printed).unwrap_or_else(|e| panic!("{}: {e}\n{printed}", f.label()));
        assert_eq!(again, doc, "{}", f.label());
        assert_eq!(again.print(), printed, "{}: printing is not idempotent", f.label());
        for name in doc.names() {
            match (doc.relation(name), again.relation(name)) {
                (Some(a), Some(b)) => assert_eq!(a, b, "{}: relation {name}", f.label()),
                (None, None) => {}
                _ => panic!("{}: {name} changed kind", f.label()),
            }
        }
    }
}

#[test]
fn written_relation_matches_the_one_built_in_code() {
    let doc = relgraph_dsl::fixtures::chain().document();
    let e = Arc::new(
        GraphSpec::new()
            .vertices(["1", "2", "3"])
            .edge("e", "1", "2")
            .edge("e''", "2", "2")
            .edge("e'", "2", "3")
            .build()
            .unwrap(),
    );
    let f = Arc::new(
        GraphSpec::new()
            .vertices(["1", "2", "3"])
            .edge("f", "1", "2")
            .edge("f'", "2", "3")
            .build()
            .unwrap(),
    );
    let edge = |g: &Graph, n: &str| g.edge(n).unwrap();
    let path = |names: &[&str]| e.path(&names.iter().map(|n| edge(&e, n)).collect::<Vec<_>>()).unwrap();
    let vertex_pairs: BTreeSet<_> = ["1", "2", "3"]
        .iter()
        .map(|v| (e.vertex(v).unwrap(), f.vertex(v).unwrap()))
        .collect();
    let edge_pairs: BTreeSet<_> = [
        (path(&["e"]), edge(&f, "f")),
        (path(&["e", "e''"]), edge(&f, "f")),
        (path(&["e'"]), edge(&f, "f'")),
        (path(&["e''", "e'"]), edge(&f, "f'")),
    ]
    .into_iter()
    .collect();
    let built = RelationMorphism::from_generators(e, f, vertex_pairs, edge_pairs, BTreeSet::new()).unwrap();
    assert_eq!(doc.relation("R").unwrap(), &built);
}

fn graph_text(name: &str, g: &Graph) -> String {
    let vertices: Vec<&str> = g.vertices().map(|v| g.vertex_name(v)).collect();
    let mut out = format!("graph {name} {{ vertices: {};", vertices.join(" "));
    let mut edges = String::new();
    for (_, fam) in g.families() {
        let card = match fam.cardinality {
            Cardinality::Finite(1) => String::new(),
            Cardinality::Finite(k) => format!(" * {k}"),
            Cardinality::Infinite => " * inf".to_string(),
        };
        edges.push_str(&format!(
            " {}: {} -> {}{card};",
            fam.name,
            g.vertex_name(fam.source),
            g.vertex_name(fam.target)
        ));
    }
    if !edges.is_empty() {
        out.push_str(" edges:");
        out.push_str(&edges);
    }
    out.push_str(" }\n");
    out
}

#[test]
fn random_relations_survive_writing_and_reading() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let r = random_relation(&mut rng, Limits::default(), 0.3);
        let (vs, es) = r.describe_generators();
        let mut text = graph_text("E", r.domain());
        text.push_str(&graph_text("F", r.codomain()));
        text.push_str(&format!("relation R: E -> F {{ vertices: {};", vs.join(" ")));
        if !es.is_empty() {
            text.push_str(&format!(" edges: {};", es.join(" ")));
        }
        text.push_str(" }\n");
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("case {i}: {e}\n{text}"));
        assert_eq!(doc.relation("R").unwrap(), &r, "case {i}\n{text}");
        let again = parse_document(&doc.print()).unwrap();
        assert_eq!(again.relation("R").unwrap(), &r, "case {i}");
    }
}
