//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relgraph::algebra::scalar;
use relgraph::random::{
    random_chain, random_composable_word, random_path_hom, random_raw_sum, random_relation, Limits,
};
use relgraph::{
    acyclic_basis, compose_generators, compose_relations, functoriality_gap, induce, induce_unchecked, lift_graph_hom,
    lower_path_hom, normalize_words, normalize_words_with, pullback_factorize, transitive_closure_check, Algebra,
    Element, Generator, Graph, GraphHomCategory, Level, PathHom, PathHomCategory, RelationCategory, RelationMorphism,
    Scalar, Word,
};
use relgraph_dsl::fixtures::{chain, corpus, cuntz, fdec, last, line, nopull, qsph, tclose};
use relgraph_dsl::{Document, Hom};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Option<Duration>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel<'a>(doc: &'a Document, name: &str) -> &'a RelationMorphism {
    doc.relation(name).unwrap_or_else(|| panic!("no relation {name}"))
}

fn path_elem(alg: &Arc<Algebra>, g: &Graph, text: &str) -> Element {
    Element::path(alg, g.parse_path(text).expect("path"))
}

fn corpus_docs() -> Vec<(String, Document)> {
    corpus().into_iter().map(|f| (f.label(), f.document())).collect()
}

fn relations(doc: &Document) -> Vec<(&str, &RelationMorphism)> {
    doc.names().filter_map(|n| doc.relation(n).map(|r| (n, r))).collect()
}

fn level_for(c: RelationCategory) -> Vec<Level> {
    match c {
        RelationCategory::RG => vec![],
        RelationCategory::PRG => vec![Level::Path],
        RelationCategory::CRG => vec![Level::Path, Level::Cohn],
        RelationCategory::ARG => vec![Level::Path, Level::Cohn, Level::Leavitt],
    }
}

fn ac01() -> Outcome {
    let doc = chain().document();
    let r = rel(&doc, "R");
    let h = induce(r, Level::Path).map_err(|e| e.to_string())?;
    let (e, f) = (r.domain(), r.codomain());
    let x = path_elem(h.source(), f, "f.f'");
    let got = h.apply(&x).map_err(|e| e.to_string())?;
    let t = h.target();
    let expected =
        &(&path_elem(t, e, "e.e'") + &path_elem(t, e, "e.e''.e'").scale(&scalar(2))) + &path_elem(t, e, "e.e''.e''.e'");
    ensure(got == expected, || format!("image is {got}"))?;
    let pre = r.preimage(&f.parse_path("f.f'").expect("path"));
    let mut sum = Element::zero(t);
    for p in pre {
        sum = &sum + &Element::path(t, p);
    }
    ensure(sum.terms().values().all(|c| *c == scalar(1)), || {
        format!("preimage sum {sum}")
    })?;
    ensure(sum != got, || "preimage sum equals the image".into())?;
    Ok(format!("image {got}; preimage sum {sum}"))
}

fn ac02() -> Outcome {
    let doc = chain().document();
    let outer = rel(&doc, "Rtheta'");
    let inner = rel(&doc, "inner");
    let gap = functoriality_gap(outer, inner, Level::Path).map_err(|e| e.to_string())?;
    let h = outer.codomain().edge("h").expect("edge h");
    let alg = Algebra::new(Level::Path, inner.domain().clone());
    let expected = path_elem(&alg, inner.domain(), "e.e''.e'");
    let got = gap.get(Generator::Edge(h)).ok_or("no gap at h")?;
    ensure(*got == expected, || format!("gap at h is {got}"))?;
    Ok(format!("gap at h = {got}"))
}

fn ac03() -> Outcome {
    let mut checked: BTreeMap<Level, usize> = BTreeMap::new();
    let mut check_pair = |what: &str, outer: &RelationMorphism, inner: &RelationMorphism| -> Result<(), String> {
        let c = outer.admissibility().category.min(inner.admissibility().category);
        for level in level_for(c) {
            let gap = functoriality_gap(outer, inner, level).map_err(|e| e.to_string())?;
            ensure(gap.is_empty(), || {
                format!("{what}: gap at {level}: {:?}", gap.describe(outer.codomain()))
            })?;
            *checked.entry(level).or_default() += 1;
        }
        Ok(())
    };
    for (label, doc) in corpus_docs() {
        let rs = relations(&doc);
        for (sn, s) in &rs {
            for (rn, r) in &rs {
                if **s.domain() == **r.codomain() {
                    check_pair(&format!("{label} {sn} after {rn}"), s, r)?;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..400 {
        let (outer, inner) = random_chain(&mut rng, Limits::default(), 0.15);
        check_pair(&format!("random chain {i}"), &outer, &inner)?;
    }
    ensure(checked.len() == 3 && checked.values().all(|&n| n >= 100), || {
        format!("too few qualifying pairs: {checked:?}")
    })?;
    Ok(format!("pairs checked per level {checked:?}"))
}

fn ac04() -> Outcome {
    let (mut positive, mut negative) = (Vec::new(), Vec::new());
    for (label, doc) in corpus_docs() {
        for (name, r) in relations(&doc) {
            let report = r.admissibility();
            if report.category < RelationCategory::CRG {
                continue;
            }
            let violated = induce_unchecked(r, Level::Leavitt)
                .verify_relators()
                .map_err(|e| e.to_string())?;
            ensure(violated.is_empty() == report.regular, || {
                format!(
                    "{label} {name}: regular={} but {} relators fail",
                    report.regular,
                    violated.len()
                )
            })?;
            if report.regular {
                positive.push(format!("{label}/{name}"));
            } else {
                negative.push(format!("{label}/{name}"));
            }
        }
    }
    ensure(positive.iter().any(|p| p.starts_with("qsph")), || {
        "no positive sphere instance".into()
    })?;
    ensure(negative.contains(&"nopull/Rt".to_string()), || {
        format!("negatives {negative:?}")
    })?;
    Ok(format!(
        "{} regular, {} not ({})",
        positive.len(),
        negative.len(),
        negative.join(", ")
    ))
}

fn roundtrip(r: &RelationMorphism) -> Result<(), String> {
    let fac = pullback_factorize(r);
    let back = compose_generators(&lift_graph_hom(&fac.phi), &lower_path_hom(&fac.theta)).map_err(|e| e.to_string())?;
    ensure(back == *r, || {
        format!("{:?} != {:?}", back.describe_generators(), r.describe_generators())
    })
}

fn ac05() -> Outcome {
    let mut n = 0;
    for (label, doc) in corpus_docs() {
        for (name, r) in relations(&doc) {
            roundtrip(r).map_err(|e| format!("{label} {name}: {e}"))?;
            n += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..150 {
        let r = random_relation(&mut rng, Limits::default(), 0.3);
        roundtrip(&r).map_err(|e| format!("random {i}: {e}"))?;
    }
    Ok(format!("{n} corpus relations and 150 random ones"))
}

fn ac06() -> Outcome {
    let mut fixtures: Vec<_> = (1..=3).map(qsph).collect();
    fixtures.push(cuntz(2, 2));
    for f in &fixtures {
        let fac = pullback_factorize(rel(&f.document(), "R"));
        let (t, p) = (fac.theta.classify().category, fac.phi.classify().category);
        ensure(t == PathHomCategory::RMIPG && p == GraphHomCategory::CRTBPOG, || {
            format!("{}: theta {t} phi {p}", f.label())
        })?;
    }
    let fac = pullback_factorize(rel(&nopull().document(), "R"));
    let c = fac.theta.classify();
    ensure(!c.regular && c.category == PathHomCategory::MIPG, || {
        format!("nopull theta {}", c.category)
    })?;
    Ok("spheres and cuntz(2,2) factor admissibly; nopull theta is MIPG, not regular".into())
}

fn ac07() -> Outcome {
    let doc = cuntz(2, 2).document();
    let fac = pullback_factorize(rel(&doc, "R"));
    let g = &fac.relation_graph;
    let e = fac.theta.codomain();
    let mut counts: BTreeMap<(String, String), usize> = BTreeMap::new();
    for x in g.edges() {
        let s = e.vertex_name(fac.theta.vertex_image(g.source(x))).to_string();
        let t = e.vertex_name(fac.theta.vertex_image(g.target(x))).to_string();
        *counts.entry((s, t)).or_default() += 1;
    }
    let expected: BTreeMap<(String, String), usize> = [(("1", "2"), 1), (("2", "2"), 2), (("2", "1"), 3)]
        .into_iter()
        .map(|((s, t), n)| ((s.to_string(), t.to_string()), n))
        .collect();
    ensure(
        g.vertex_count() == 2 && g.edges().count() == 6 && counts == expected,
        || format!("{} vertices, {} edges, {counts:?}", g.vertex_count(), g.edges().count()),
    )?;
    Ok(format!("2 vertices, 6 edges, {counts:?}"))
}

fn ac08() -> Outcome {
    let mut dims = Vec::new();
    for n in 2..=6 {
        let doc = line(n).document();
        let alg = Algebra::new(Level::Leavitt, doc.graph("E").expect("E").clone());
        let d = acyclic_basis(&alg).map_err(|e| e.to_string())?.len();
        ensure(d == n * n, || format!("n={n}: {d} basis elements"))?;
        dims.push(d);
    }
    Ok(format!("dimensions {dims:?}"))
}

fn ac09() -> Outcome {
    let doc = tclose().document();
    let r = rel(&doc, "R");
    let report = r.admissibility();
    let seven = [
        report.multiplicative,
        report.decomposable,
        report.proper,
        report.vertex_disjoint,
        report.target_bijective(),
        report.monotone,
        report.regular,
    ];
    ensure(seven.iter().all(|&b| b), || format!("failures {:?}", report.failures))?;
    let w = transitive_closure_check(r, 1).ok_or("no witness at length 1")?;
    let (e, f) = (r.domain(), r.codomain());
    let pair = |p: &(relgraph::Path, relgraph::Path)| (e.path_name(&p.0), f.path_name(&p.1));
    let present: BTreeSet<_> = w.present.iter().map(pair).collect();
    let s = |a: &str, b: &str| (a.to_string(), b.to_string());
    let expected: BTreeSet<_> = [s("v", "u"), s("w", "u"), s("v", "h")].into_iter().collect();
    ensure(present == expected && pair(&w.missing) == s("w", "h"), || {
        format!("witness {present:?} missing {:?}", pair(&w.missing))
    })?;
    Ok("all seven flags hold; witness (v,u) (w,u) (v,h), missing (w,h)".into())
}

fn ac10() -> Outcome {
    let mut homs: Vec<(String, PathHom)> = Vec::new();
    for (label, doc) in corpus_docs() {
        for name in doc.names() {
            if let Some(Hom::Path(h)) = doc.hom(name) {
                homs.push((format!("{label}/{name}"), h.clone()));
            }
            if let Some(r) = doc.relation(name) {
                homs.push((format!("{label}/{name} theta"), pullback_factorize(r).theta));
            }
        }
    }
    let corpus_count = homs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut random = 0;
    while random < 120 {
        let h = random_path_hom(&mut rng, Limits::default());
        if h.classify().category >= PathHomCategory::MIPG {
            homs.push((format!("random {random}"), h));
            random += 1;
        }
    }
    let mut checked = 0;
    for (what, h) in &homs {
        let c = h.classify();
        if c.category < PathHomCategory::MIPG {
            continue;
        }
        let lowered = lower_path_hom(h).admissibility().regular;
        ensure(c.regular == lowered, || {
            format!("{what}: hom regular={} relation regular={lowered}", c.regular)
        })?;
        checked += 1;
    }
    Ok(format!(
        "{checked} morphisms agree ({corpus_count} from the corpus, 120 random)"
    ))
}

fn random_sum(rng: &mut ChaCha8Rng, alg: &Algebra) -> Vec<(Scalar, Word)> {
    if rng.gen_bool(0.5) {
        return random_raw_sum(rng, alg, 4, 4);
    }
    (0..rng.gen_range(1..=3))
        .map(|_| (scalar(rng.gen_range(1..=3)), random_composable_word(rng, alg, 5)))
        .collect()
}

/// Multiplies generators as algebra elements, independently of word
/// rewriting.
fn product_oracle(alg: &Arc<Algebra>, raw: &[(Scalar, Word)]) -> Result<Element, String> {
    let mut total = Element::zero(alg);
    for (c, w) in raw {
        if w.is_empty() {
            continue;
        }
        let mut x = Element::generator(alg, w[0]).map_err(|e| e.to_string())?;
        for &g in &w[1..] {
            let y = Element::generator(alg, g).map_err(|e| e.to_string())?;
            x = x.checked_mul(&y).map_err(|e| e.to_string())?;
        }
        total = &total + &x.scale(c);
    }
    Ok(total)
}

fn ac11() -> Outcome {
    let mut graphs: Vec<Arc<Graph>> = Vec::new();
    for (_, doc) in corpus_docs() {
        for name in doc.names() {
            if let Some(g) = doc.graph(name) {
                if !graphs.iter().any(|h| **h == **g) {
                    graphs.push(g.clone());
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nonzero = 0;
    for g in &graphs {
        let alg = Algebra::new(Level::Leavitt, g.clone());
        for _ in 0..500 {
            let raw = random_sum(&mut rng, &alg);
            let reference = normalize_words(&alg, &raw).map_err(|e| e.to_string())?;
            for order in 0..10u64 {
                let mut chooser = ChaCha8Rng::seed_from_u64(rng.gen::<u64>() ^ order);
                let got = normalize_words_with(&alg, &raw, |n| chooser.gen_range(0..n)).map_err(|e| e.to_string())?;
                ensure(got == reference, || {
                    format!("order {order} gives {got}, default gives {reference}")
                })?;
            }
            let product = product_oracle(&alg, &raw)?;
            ensure(product == reference, || {
                format!("products give {product}, rewriting gives {reference}")
            })?;
            nonzero += usize::from(!reference.is_zero());
        }
    }
    Ok(format!(
        "{} graphs x 500 sums x 10 orders; {nonzero} sums nonzero",
        graphs.len()
    ))
}

fn ac12() -> Outcome {
    let r_last = rel(&last().document(), "R").clone();
    ensure(r_last.admissibility().is_admissible(), || {
        "last R is not admissible".into()
    })?;
    let doc = fdec().document();
    let r = rel(&doc, "R");
    ensure(*r == r_last, || "fdec R differs from last R".into())?;
    let inner = compose_relations(rel(&doc, "Rphi"), rel(&doc, "Rtheta")).map_err(|e| e.to_string())?;
    let whole = compose_relations(rel(&doc, "Rtheta'"), &inner).map_err(|e| e.to_string())?;
    ensure(
        whole.describe_generators() == r.describe_generators() && whole == *r,
        || format!("composite {:?}", whole.describe_generators()),
    )?;
    let class = |n: &str| match doc.hom(n) {
        Some(Hom::Path(h)) => h.classify().category.to_string(),
        Some(Hom::Graph(h)) => h.classify().category.to_string(),
        None => "missing".into(),
    };
    let got = [class("theta"), class("phi"), class("theta'")];
    ensure(got == ["RMIPG", "CRTBPOG", "RMIPG"], || format!("classes {got:?}"))?;
    Ok("composite equals R; factors RMIPG, CRTBPOG, RMIPG".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "AC-01",
            "induced image of f.f' versus its preimage sum",
            Some(Duration::from_secs(1)),
            ac01,
        ),
        (
            "AC-02",
            "non-functoriality gap at h",
            Some(Duration::from_secs(1)),
            ac02,
        ),
        (
            "AC-03",
            "functoriality for PRG/CRG/ARG pairs",
            Some(Duration::from_secs(60)),
            ac03,
        ),
        ("AC-04", "Leavitt relators vanish iff regular", None, ac04),
        ("AC-05", "pullback factorization round trip", None, ac05),
        ("AC-06", "admissible pullback factors", None, ac06),
        ("AC-07", "relation graph counts for cuntz(2,2)", None, ac07),
        (
            "AC-08",
            "Leavitt dimension of the line graph",
            Some(Duration::from_secs(5)),
            ac08,
        ),
        ("AC-09", "transitive closure witness", None, ac09),
        ("AC-10", "regularity of path homs versus their relations", None, ac10),
        ("AC-11", "normal forms independent of rewrite order", None, ac11),
        ("AC-12", "three-step factorization", None, ac12),
    ];
    let mut failed = 0;
    for (id, what, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match (result, budget) {
            (Ok(msg), Some(b)) if took > b => Err(format!("took {took:?}, budget {b:?}; {msg}")),
            (r, _) => r,
        };
        match result {
            Ok(msg) => println!("[PASS] {id} {what} ({} ms): {msg}", took.as_millis()),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {what} ({} ms): {msg}", took.as_millis());
            }
        }
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
