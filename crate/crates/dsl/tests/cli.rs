use std::io::Write as _;

use relgraph_dsl::cli::run;

fn relgraph(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("relgraph").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn check_accepts_an_admissible_relation() {
    let (code, out, _) = relgraph(&["check", "fixture:nopull", "R"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("R: ARG"), "{out}");
}

#[test]
fn check_fails_on_a_relation_that_is_not_admissible() {
    let (code, out, _) = relgraph(&["check", "fixture:chain", "R"]);
    assert_eq!(code, 1);
    assert!(out.contains("monotone: no"), "{out}");
}

#[test]
fn factor_reports_the_irregular_projection() {
    let (code, out, _) = relgraph(&["factor", "fixture:nopull", "R"]);
    assert_eq!(code, 1);
    assert!(out.contains("theta not regular"), "{out}");
    let (code, out, _) = relgraph(&["factor", "fixture:qsph:n=2", "R"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn demo_replays_the_cuntz_counts() {
    let (code, out, _) = relgraph(&["demo", "cuntz", "--n", "2", "--k", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("edge-counts R: 1->2:1 2->1:3 2->2:2"), "{out}");
    assert!(out.contains("gap Rtheta' Rphi' leavitt: empty"), "{out}");
    let (code, _, _) = relgraph(&["demo", "line", "--param", "n=5"]);
    assert_eq!(code, 0);
}

#[test]
fn every_fixture_demo_passes() {
    for id in [
        "line", "chain", "lengths", "o2", "qsph", "cuntz", "nopull", "last", "fdec", "tclose", "pi",
    ] {
        let (code, out, err) = relgraph(&["demo", id]);
        assert_eq!(code, 0, "{id}\n{out}{err}");
    }
}

#[test]
fn json_lines_are_valid_json() {
    let (code, out, _) = relgraph(&["--json", "demo", "chain"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["command"], "demo");
        assert_eq!(v["pass"], true);
    }
    let (_, out, _) = relgraph(&["--json", "factor", "fixture:nopull", "R"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["theta"]["regular"], false);
}

#[test]
fn parse_errors_exit_with_two() {
    let mut file = tempfile_path("bad.qv");
    writeln!(file.1, "graph E {{\n  vertices: 1 2;\n  edges: e: 1 -> 9;\n}}").unwrap();
    let (code, _, err) = relgraph(&["check", file.0.to_str().unwrap(), "R"]);
    assert_eq!(code, 2);
    assert!(err.contains("3:10") && err.contains("dangling endpoint"), "{err}");
    let (code, _, err) = relgraph(&["--json", "print", file.0.to_str().unwrap()]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["error"]["line"], 3);
    assert_eq!(relgraph(&["demo", "nosuch"]).0, 2);
    assert_eq!(relgraph(&["induce", "fixture:o2", "R", "--level", "banach"]).0, 2);
    assert_eq!(relgraph(&["check", "/nonexistent/file.qv", "R"]).0, 2);
}

fn tempfile_path(name: &str) -> (std::path::PathBuf, std::fs::File) {
    let dir = std::env::temp_dir().join(format!("relgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn eval_applies_the_induced_map() {
    let (code, out, _) = relgraph(&["eval", "fixture:chain", "R", "f f'"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "e.e' + 2*e.e''.e' + e.e''.e''.e'");
    // Not in CRG, so no Leavitt map.
    assert_eq!(
        relgraph(&["eval", "fixture:chain", "R", "f", "--level", "leavitt"]).0,
        1
    );
}

#[test]
fn induce_flags_broken_relations() {
    let (code, out, _) = relgraph(&["induce", "fixture:nopull", "Rt", "--level", "leavitt"]);
    assert_eq!(code, 1);
    assert!(out.contains("precondition"), "{out}");
    assert!(out.contains("not preserved"), "{out}");
    assert_eq!(relgraph(&["induce", "fixture:qsph", "R", "--level", "leavitt"]).0, 0);
}

#[test]
fn compose_prints_a_declaration_that_parses() {
    let (code, out, _) = relgraph(&["compose", "fixture:fdec", "Rtheta'", "inner", "--name", "W"]);
    assert_eq!(code, 0);
    let doc = relgraph_dsl::fixtures::fdec().document();
    let mut text = doc.print();
    text.push_str(
        out.lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
            .as_str(),
    );
    let again = relgraph_dsl::parse_document(&text).unwrap();
    assert_eq!(again.relation("W"), doc.relation("R"));
}

#[test]
fn export_draws_infinite_families_once() {
    let (code, out, _) = relgraph(&["export", "fixture:nopull", "F", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"1\" -> \"4\" [label=\"∞\""), "{out}");
    let (_, out, _) = relgraph(&["export", "fixture:line:n=2", "E", "--dot"]);
    assert_eq!(out.matches(" -> ").count(), 1);
    assert_eq!(relgraph(&["export", "fixture:line", "E"]).0, 2);
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = relgraph(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("demo"));
}
