//! Named computations over a document, each rendering its result as a
//! short string. Fixture expectations are written in this vocabulary, and
//! `demo` replays them by comparing strings exactly.
//!
//! | check                          | result                                  |
//! |--------------------------------|-----------------------------------------|
//! | `category R`                   | `RG`, `PRG`, `CRG` or `ARG`             |
//! | `failing R`                    | failing admissibility flags, or `none`  |
//! | `factor R`                     | `theta=<cat> phi=<cat>`                 |
//! | `factor-gap R LEVEL`           | gap of the factorization pair           |
//! | `relation-graph R`             | `vertices=N edges=M`                    |
//! | `edge-counts R`                | `a->b:N …` over relation graph edges    |
//! | `classify H`                   | category of a homomorphism              |
//! | `regular X`                    | `true` / `false`                        |
//! | `apply R LEVEL EXPR`           | induced image of an element             |
//! | `preimage R PATH`              | preimage paths                          |
//! | `gap S R LEVEL`                | `gen: element; …` or `empty`            |
//! | `relators R LEVEL`             | `vanish=true` / `vanish=false`          |
//! | `equal R S`                    | `true` / `false`                        |
//! | `pushout R`                    | `f: x vs y` or `none`                   |
//! | `transitive R L`               | `(x, y) (x', y) (x', y') missing (x, y')` or `none` |
//! | `mediator R THETA PHI`         | `surjective=… injective=…`              |
//! | `basis G LEVEL`                | dimension                               |
//! | `dot NAME`                     | `nodes=N edges=M`                       |

use std::collections::BTreeMap;

use relgraph::{
    acyclic_basis, functoriality_gap, induce, induce_unchecked, lift_graph_hom, lower_path_hom, pullback_factorize,
    pushout_obstruction, transitive_closure_check, universal_mediator, Algebra, Graph, Level, Path, RelationMorphism,
};

use crate::document::{Document, Hom, Object};
use crate::dot::{dot_shape, export_dot};
use crate::error::DslError;
use crate::expr::parse_element;

pub fn parse_level(s: &str) -> Result<Level, DslError> {
    match s {
        "path" => Ok(Level::Path),
        "cohn" => Ok(Level::Cohn),
        "leavitt" => Ok(Level::Leavitt),
        _ => Err(DslError::usage(format!(
            "unknown level `{s}`; expected path, cohn or leavitt"
        ))),
    }
}

fn relation<'a>(doc: &'a Document, name: &str) -> Result<&'a RelationMorphism, DslError> {
    doc.relation(name)
        .ok_or_else(|| DslError::usage(format!("`{name}` is not a declared relation")))
}

fn hom<'a>(doc: &'a Document, name: &str) -> Result<&'a Hom, DslError> {
    doc.hom(name)
        .ok_or_else(|| DslError::usage(format!("`{name}` is not a declared homomorphism")))
}

fn core(e: impl std::fmt::Display) -> DslError {
    DslError::usage(e.to_string())
}

fn pair(e: &Graph, f: &Graph, (x, y): &(Path, Path)) -> String {
    format!("({}, {})", e.path_name(x), f.path_name(y))
}

pub fn hom_category(h: &Hom) -> String {
    match h {
        Hom::Graph(h) => h.classify().category.to_string(),
        Hom::Path(h) => h.classify().category.to_string(),
    }
}

fn hom_regular(h: &Hom) -> bool {
    match h {
        Hom::Graph(h) => h.classify().regular,
        Hom::Path(h) => h.classify().regular,
    }
}

/// Relation graph edges counted by the domain vertices their generator
/// paths join, in canonical order.
pub fn edge_counts(r: &RelationMorphism) -> String {
    let e = r.domain();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (x, _) in r.edge_pairs() {
        *counts.entry((x.source().0, x.target().0)).or_default() += 1;
    }
    counts
        .iter()
        .map(|(&(s, t), n)| {
            format!(
                "{}->{}:{n}",
                e.vertex_name(relgraph::VertexId(s)),
                e.vertex_name(relgraph::VertexId(t))
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Evaluates one check against `doc`.
pub fn evaluate(doc: &Document, check: &str) -> Result<String, DslError> {
    let words: Vec<&str> = check.split_whitespace().collect();
    let arg = |i: usize| {
        words
            .get(i)
            .copied()
            .ok_or_else(|| DslError::usage(format!("check `{check}` needs more arguments")))
    };
    let Some(&name) = words.first() else {
        return Err(DslError::usage("empty check"));
    };
    Ok(match name {
        "category" => relation(doc, arg(1)?)?.admissibility().category.to_string(),
        "failing" => {
            let report = relation(doc, arg(1)?)?.admissibility();
            let failing: Vec<&str> = report.flags().iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            if failing.is_empty() {
                "none".to_string()
            } else {
                failing.join(" ")
            }
        }
        "factor" => {
            let fac = pullback_factorize(relation(doc, arg(1)?)?);
            format!(
                "theta={} phi={}",
                fac.theta.classify().category,
                fac.phi.classify().category
            )
        }
        "factor-gap" => {
            let fac = pullback_factorize(relation(doc, arg(1)?)?);
            let level = parse_level(arg(2)?)?;
            let gap = functoriality_gap(&lift_graph_hom(&fac.phi), &lower_path_hom(&fac.theta), level).map_err(core)?;
            render_gap(&gap.describe(fac.phi.codomain()))
        }
        "relation-graph" => {
            let fac = pullback_factorize(relation(doc, arg(1)?)?);
            let g = &fac.relation_graph;
            format!("vertices={} edges={}", g.vertex_count(), g.edges().count())
        }
        "edge-counts" => edge_counts(relation(doc, arg(1)?)?),
        "classify" => hom_category(hom(doc, arg(1)?)?),
        "regular" => match doc.lookup(arg(1)?) {
            Some(Object::Hom(h)) => hom_regular(h).to_string(),
            Some(Object::Relation(r)) => r.admissibility().regular.to_string(),
            _ => {
                return Err(DslError::usage(format!(
                    "`{}` is not a homomorphism or relation",
                    arg(1)?
                )))
            }
        },
        "apply" => {
            let r = relation(doc, arg(1)?)?;
            let level = parse_level(arg(2)?)?;
            let h = induce(r, level).map_err(core)?;
            let expr = words[3..].join(" ");
            let x = parse_element(h.source(), &expr)?;
            h.apply(&x).map_err(core)?.to_string()
        }
        "preimage" => {
            let r = relation(doc, arg(1)?)?;
            let y = r.codomain().parse_path(arg(2)?).map_err(core)?;
            let mut pre = r.preimage(&y);
            pre.sort();
            let names: Vec<String> = pre.iter().map(|x| r.domain().path_name(x)).collect();
            names.join(", ")
        }
        "gap" => {
            let outer = relation(doc, arg(1)?)?;
            let inner = relation(doc, arg(2)?)?;
            let level = parse_level(arg(3)?)?;
            let gap = functoriality_gap(outer, inner, level).map_err(core)?;
            render_gap(&gap.describe(outer.codomain()))
        }
        "relators" => {
            let r = relation(doc, arg(1)?)?;
            let level = parse_level(arg(2)?)?;
            let violated = induce_unchecked(r, level).verify_relators().map_err(core)?;
            format!("vanish={}", violated.is_empty())
        }
        "equal" => {
            let a = relation(doc, arg(1)?)?;
            let b = relation(doc, arg(2)?)?;
            (a == b).to_string()
        }
        "pushout" => {
            let r = relation(doc, arg(1)?)?;
            match pushout_obstruction(r) {
                Some(w) => format!(
                    "{}: {} vs {}",
                    r.codomain().edge_name(w.edge),
                    r.domain().path_name(&w.shorter),
                    r.domain().path_name(&w.longer)
                ),
                None => "none".to_string(),
            }
        }
        "transitive" => {
            let r = relation(doc, arg(1)?)?;
            let bound: usize = arg(2)?
                .parse()
                .map_err(|_| DslError::usage(format!("`{}` is not a length bound", arg(2).unwrap_or(""))))?;
            let (e, f) = (r.domain(), r.codomain());
            match transitive_closure_check(r, bound) {
                Some(w) => {
                    let present: Vec<String> = w.present.iter().map(|p| pair(e, f, p)).collect();
                    format!("{} missing {}", present.join(" "), pair(e, f, &w.missing))
                }
                None => "none".to_string(),
            }
        }
        "mediator" => {
            let r = relation(doc, arg(1)?)?;
            let theta = hom(doc, arg(2)?)?.to_path_hom();
            let Hom::Graph(phi) = hom(doc, arg(3)?)? else {
                return Err(DslError::usage(format!("`{}` must be a graph homomorphism", arg(3)?)));
            };
            let m = universal_mediator(r, &theta, phi).map_err(core)?;
            format!("surjective={} injective={}", m.surjective, m.injective)
        }
        "basis" => {
            let g = doc
                .graph(arg(1)?)
                .ok_or_else(|| DslError::usage(format!("`{}` is not a declared graph", arg(1).unwrap_or(""))))?;
            let alg = Algebra::new(parse_level(arg(2)?)?, g.clone());
            acyclic_basis(&alg).map_err(core)?.len().to_string()
        }
        "dot" => {
            let (nodes, edges) = dot_shape(&export_dot(doc, arg(1)?)?);
            format!("nodes={nodes} edges={edges}")
        }
        _ => return Err(DslError::usage(format!("unknown check `{name}`"))),
    })
}

fn render_gap(entries: &[String]) -> String {
    if entries.is_empty() {
        "empty".to_string()
    } else {
        entries.join("; ")
    }
}
