//! The `relgraph` command line.
//!
//! Every command reads a document from a `.qv` file or from the corpus
//! (`fixture:ID` or `fixture:ID:n=3,k=2`) and writes one record per line:
//! plain text by default, one JSON object per line with `--json`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! and input errors.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use relgraph::{
    compose_relations, induce, induce_unchecked, lift_graph_hom, lower_path_hom, pullback_factorize, GraphHomCategory,
    Level, RelationMorphism,
};

use crate::checks::{evaluate, parse_level};
use crate::document::{parse_document, Document, Hom, Object};
use crate::dot::export_dot;
use crate::error::DslError;
use crate::expr::parse_element;
use crate::fixtures::{fixture, FIXTURE_IDS};

#[derive(Debug, Parser)]
#[command(
    name = "relgraph",
    version,
    about = "Relation morphisms of directed graphs and their induced algebra maps"
)]
struct Cli {
    /// Write JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Admissibility report of a relation; fails unless it is admissible.
    Check { input: String, relation: String },
    /// Pullback-type factorization through the relation graph; fails unless
    /// both projections are admissible.
    Factor { input: String, relation: String },
    /// Composite OUTER ∘ INNER, printed as a relation declaration.
    Compose {
        input: String,
        outer: String,
        inner: String,
        /// Name for the printed composite.
        #[arg(long, default_value = "composite")]
        name: String,
    },
    /// Generator images of the induced homomorphism; fails if the level's
    /// preconditions do not hold or a defining relation is not preserved.
    Induce {
        input: String,
        relation: String,
        #[arg(long, value_parser = parse_level_arg)]
        level: Level,
    },
    /// Applies the homomorphism induced by a relation (or by a homomorphism,
    /// through its associated relation) to an element.
    Eval {
        input: String,
        map: String,
        expr: String,
        #[arg(long, value_parser = parse_level_arg, default_value = "path")]
        level: Level,
    },
    /// Replays a fixture's table of expected values.
    Demo {
        fixture: String,
        /// Fixture parameter, as `name=value`.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, usize)>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Writes a declaration in Graphviz format.
    Export {
        input: String,
        name: String,
        #[arg(long, required = true)]
        dot: bool,
    },
    /// Evaluates one named check, as used in fixture tables.
    Query {
        input: String,
        #[arg(required = true, num_args = 1..)]
        check: Vec<String>,
    },
    /// Prints the document in canonical layout.
    Print { input: String },
    /// Lists the fixture corpus.
    Fixtures,
}

fn parse_level_arg(s: &str) -> Result<Level, String> {
    parse_level(s).map_err(|e| e.message)
}

fn parse_param(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let v = v.parse().map_err(|_| format!("`{v}` is not a non-negative integer"))?;
    Ok((k.to_string(), v))
}

/// Reads `fixture:ID[:k=v,…]` or a file.
pub fn load(input: &str) -> Result<Document, DslError> {
    if let Some(rest) = input.strip_prefix("fixture:") {
        let (id, params) = rest.split_once(':').unwrap_or((rest, ""));
        let mut map = BTreeMap::new();
        for p in params.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = parse_param(p).map_err(DslError::usage)?;
            map.insert(k, v);
        }
        return Ok(fixture(id, &map)?.document());
    }
    let text = std::fs::read_to_string(input).map_err(|e| DslError::usage(format!("cannot read `{input}`: {e}")))?;
    parse_document(&text)
}

struct Report<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Report<'_> {
    fn emit(&mut self, text: impl AsRef<str>, value: Value) {
        let line = if self.json {
            value.to_string()
        } else {
            text.as_ref().to_string()
        };
        // A closed pipe is not worth an error of its own.
        let _ = writeln!(self.out, "{line}");
    }
}

fn relation<'a>(doc: &'a Document, name: &str) -> Result<&'a RelationMorphism, DslError> {
    doc.relation(name)
        .ok_or_else(|| DslError::usage(format!("`{name}` is not a declared relation")))
}

/// The relation whose induced map `eval` applies.
fn map_relation(doc: &Document, name: &str) -> Result<RelationMorphism, DslError> {
    match doc.lookup(name) {
        Some(Object::Relation(r)) => Ok(r.clone()),
        Some(Object::Hom(Hom::Graph(h))) => Ok(lift_graph_hom(h)),
        Some(Object::Hom(Hom::Path(h))) => Ok(lower_path_hom(h)),
        _ => Err(DslError::usage(format!("`{name}` is not a relation or homomorphism"))),
    }
}

fn check(doc: &Document, name: &str, rep: &mut Report) -> Result<bool, DslError> {
    let r = relation(doc, name)?;
    let report = r.admissibility();
    let flags: serde_json::Map<String, Value> = report.flags().iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let pass = report.is_admissible();
    let mut text = format!("{name}: {}", report.category);
    for (k, v) in report.flags() {
        text.push_str(&format!("\n  {k}: {}", if v { "yes" } else { "no" }));
    }
    for f in &report.failures {
        text.push_str(&format!("\n  failure: {f}"));
    }
    rep.emit(
        text,
        json!({
            "command": "check",
            "relation": name,
            "category": report.category.to_string(),
            "flags": flags,
            "failures": report.failures,
            "pass": pass,
        }),
    );
    Ok(pass)
}

fn factor(doc: &Document, name: &str, rep: &mut Report) -> Result<bool, DslError> {
    let fac = pullback_factorize(relation(doc, name)?);
    let theta = fac.theta.classify();
    let phi = fac.phi.classify();
    let g = &fac.relation_graph;
    let mut problems = Vec::new();
    if !theta.regular {
        problems.push("theta not regular".to_string());
    }
    if phi.category != GraphHomCategory::CRTBPOG {
        problems.push(format!("phi is only {}", phi.category));
    }
    let mut text = format!(
        "{name}: relation graph with {} vertices and {} edges\n  theta: {}\n  phi: {}",
        g.vertex_count(),
        g.edges().count(),
        theta.category,
        phi.category
    );
    for p in &problems {
        text.push_str(&format!("\n  {p}"));
    }
    rep.emit(
        text,
        json!({
            "command": "factor",
            "relation": name,
            "relation_graph": {"vertices": g.vertex_count(), "edges": g.edges().count()},
            "theta": {"category": theta.category.to_string(), "regular": theta.regular},
            "phi": {"category": phi.category.to_string()},
            "problems": problems,
            "pass": problems.is_empty(),
        }),
    );
    Ok(problems.is_empty())
}

fn compose(doc: &Document, outer: &str, inner: &str, name: &str, rep: &mut Report) -> Result<bool, DslError> {
    let (s, r) = (relation(doc, outer)?, relation(doc, inner)?);
    let c = match compose_relations(s, r) {
        Ok(c) => c,
        Err(e) => {
            rep.emit(
                format!("cannot compose {outer} after {inner}: {e}"),
                json!({"command": "compose", "outer": outer, "inner": inner, "error": e.to_string(), "pass": false}),
            );
            return Ok(false);
        }
    };
    let (vs, es) = c.describe_generators();
    let domain = graph_name(doc, c.domain());
    let codomain = graph_name(doc, c.codomain());
    let mut text = format!(
        "relation {name}: {domain} -> {codomain} {{\n    vertices: {};\n",
        vs.join(" ")
    );
    if !es.is_empty() {
        text.push_str(&format!("    edges: {};\n", es.join(" ")));
    }
    text.push('}');
    let category = c.admissibility().category.to_string();
    rep.emit(
        format!("{text}\n# category {category}"),
        json!({
            "command": "compose",
            "outer": outer,
            "inner": inner,
            "domain": domain,
            "codomain": codomain,
            "vertices": vs,
            "edges": es,
            "category": category,
            "pass": true,
        }),
    );
    Ok(true)
}

fn graph_name(doc: &Document, g: &relgraph::Graph) -> String {
    doc.names()
        .find(|n| doc.graph(n).is_some_and(|h| **h == *g))
        .unwrap_or("?")
        .to_string()
}

fn induce_cmd(doc: &Document, name: &str, level: Level, rep: &mut Report) -> Result<bool, DslError> {
    let r = relation(doc, name)?;
    let precondition = induce(r, level).err().map(|e| e.to_string());
    let h = induce_unchecked(r, level);
    let f = r.codomain();
    let mut images = Vec::new();
    for (g, x) in h.images() {
        images.push((g.name(f), x.to_string()));
    }
    let violated = h.verify_relators().map_err(|e| DslError::usage(e.to_string()))?;
    let broken: Vec<String> = violated.iter().map(|(rel, _)| rel.display(f)).collect();
    let pass = precondition.is_none() && broken.is_empty();
    let mut text = format!("{name} at the {level} level");
    for (g, x) in &images {
        text.push_str(&format!("\n  {g} ↦ {x}"));
    }
    if let Some(p) = &precondition {
        text.push_str(&format!("\n  precondition: {p}"));
    }
    for b in &broken {
        text.push_str(&format!("\n  not preserved: {b}"));
    }
    let images: serde_json::Map<String, Value> = images.into_iter().map(|(g, x)| (g, json!(x))).collect();
    rep.emit(
        text,
        json!({
            "command": "induce",
            "relation": name,
            "level": level.to_string(),
            "images": images,
            "precondition": precondition,
            "relators_not_preserved": broken,
            "pass": pass,
        }),
    );
    Ok(pass)
}

fn eval(doc: &Document, map: &str, expr: &str, level: Level, rep: &mut Report) -> Result<bool, DslError> {
    let r = map_relation(doc, map)?;
    let h = match induce(&r, level) {
        Ok(h) => h,
        Err(e) => {
            rep.emit(
                format!("{map} induces no {level} homomorphism: {e}"),
                json!({"command": "eval", "map": map, "level": level.to_string(), "error": e.to_string(), "pass": false}),
            );
            return Ok(false);
        }
    };
    let x = parse_element(h.source(), expr)?;
    let y = h.apply(&x).map_err(|e| DslError::usage(e.to_string()))?;
    rep.emit(
        format!("{y}"),
        json!({"command": "eval", "map": map, "level": level.to_string(), "input": x.to_string(), "output": y.to_string(), "pass": true}),
    );
    Ok(true)
}

fn demo(id: &str, params: &BTreeMap<String, usize>, rep: &mut Report) -> Result<bool, DslError> {
    let f = fixture(id, params)?;
    let doc = f.document();
    let label = f.label();
    let mut all = true;
    for e in &f.expectations {
        let (got, pass) = match evaluate(&doc, &e.check) {
            Ok(got) => {
                let pass = got == e.expected;
                (got, pass)
            }
            Err(err) => (format!("error: {err}"), false),
        };
        all &= pass;
        let text = if pass {
            format!("[ok] {}: {got} ({})", e.check, e.origin)
        } else {
            format!(
                "[MISMATCH] {}: got {got}, expected {} ({})",
                e.check, e.expected, e.origin
            )
        };
        rep.emit(
            text,
            json!({
                "command": "demo",
                "fixture": label,
                "check": e.check,
                "expected": e.expected,
                "got": got,
                "origin": e.origin.to_string(),
                "pass": pass,
            }),
        );
    }
    rep.emit(
        format!(
            "{label}: {} checks, {}",
            f.expectations.len(),
            if all { "all match" } else { "MISMATCHES" }
        ),
        json!({"command": "demo", "fixture": label, "checks": f.expectations.len(), "pass": all}),
    );
    Ok(all)
}

fn execute(cli: Cli, rep: &mut Report) -> Result<bool, DslError> {
    match cli.command {
        Command::Check { input, relation } => check(&load(&input)?, &relation, rep),
        Command::Factor { input, relation } => factor(&load(&input)?, &relation, rep),
        Command::Compose {
            input,
            outer,
            inner,
            name,
        } => compose(&load(&input)?, &outer, &inner, &name, rep),
        Command::Induce { input, relation, level } => induce_cmd(&load(&input)?, &relation, level, rep),
        Command::Eval {
            input,
            map,
            expr,
            level,
        } => eval(&load(&input)?, &map, &expr, level, rep),
        Command::Demo { fixture, params, n, k } => {
            let mut map: BTreeMap<String, usize> = params.into_iter().collect();
            if let Some(n) = n {
                map.insert("n".into(), n);
            }
            if let Some(k) = k {
                map.insert("k".into(), k);
            }
            demo(&fixture, &map, rep)
        }
        Command::Export { input, name, .. } => {
            let dot = export_dot(&load(&input)?, &name)?;
            rep.emit(
                dot.trim_end(),
                json!({"command": "export", "name": name, "format": "dot", "text": dot}),
            );
            Ok(true)
        }
        Command::Query { input, check } => {
            let check = check.join(" ");
            let got = evaluate(&load(&input)?, &check)?;
            rep.emit(&got, json!({"command": "query", "check": check, "result": got}));
            Ok(true)
        }
        Command::Print { input } => {
            let doc = load(&input)?;
            let text = doc.print();
            rep.emit(text.trim_end(), json!({"command": "print", "text": text}));
            Ok(true)
        }
        Command::Fixtures => {
            for (id, params) in FIXTURE_IDS {
                let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let defaults: serde_json::Map<String, Value> =
                    params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
                rep.emit(
                    if ps.is_empty() {
                        id.to_string()
                    } else {
                        format!("{id} ({})", ps.join(", "))
                    },
                    json!({"command": "fixtures", "id": id, "defaults": defaults}),
                );
            }
            Ok(true)
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let json = cli.json;
    let mut rep = Report { json, out };
    match execute(cli, &mut rep) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let line = if json {
                json!({
                    "error": {
                        "kind": e.kind.as_str(),
                        "message": e.message,
                        "line": e.span.map(|s| s.line),
                        "col": e.span.map(|s| s.col),
                    }
                })
                .to_string()
            } else {
                format!("error: {e}")
            };
            let _ = writeln!(err, "{line}");
            2
        }
    }
}
