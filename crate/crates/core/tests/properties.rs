use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relgraph::random::{
    random_chain, random_composable_word, random_generators, random_graph, random_graph_hom_into, random_path_hom,
    random_path_hom_into, random_raw_sum, random_relation, Limits, LEVELS,
};
use relgraph::{
    compose_generators, compose_relations, induce, lift_graph_hom, lower_path_hom, normalize_words,
    normalize_words_with, pullback_factorize, relators, Algebra, Element, Generator, Graph, Level, Monomial, Path,
    PathHomCategory, PrefixOrder, RelationCategory, RelationMorphism, Scalar, Word,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_paths(g: &Graph, max_len: usize) -> Vec<Path> {
    g.vertices().flat_map(|v| g.paths_from(v, max_len)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concatenation_adds_lengths(seed: u64) {
        let g = random_graph(&mut rng(seed), 4, 6);
        let paths = all_paths(&g, 2);
        for p in &paths {
            for q in paths.iter().filter(|q| q.source() == p.target()) {
                let pq = g.concat(p, q).unwrap();
                prop_assert_eq!(pq.len(), p.len() + q.len());
                prop_assert_eq!(pq.source(), p.source());
                prop_assert_eq!(pq.target(), q.target());
            }
        }
    }

    #[test]
    fn prefix_order_is_a_partial_order(seed: u64) {
        let g = random_graph(&mut rng(seed), 3, 5);
        for v in g.vertices() {
            let paths = g.paths_from(v, 3);
            for p in &paths {
                prop_assert_eq!(p.compare(p), PrefixOrder::Equal);
                for q in &paths {
                    let below = |a: &Path, b: &Path| a.is_prefix_of(b);
                    if below(p, q) && below(q, p) {
                        prop_assert_eq!(p, q);
                    }
                    for r in &paths {
                        if below(p, q) && below(q, r) {
                            prop_assert!(below(p, r));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_grows_with_the_bound(seed: u64, bound in 0usize..4) {
        let g = random_graph(&mut rng(seed), 4, 6);
        for v in g.vertices() {
            let small: BTreeSet<Path> = g.paths_from(v, bound).into_iter().collect();
            let large: BTreeSet<Path> = g.paths_from(v, bound + 1).into_iter().collect();
            prop_assert!(small.is_subset(&large));
            let cut: BTreeSet<Path> = large.into_iter().filter(|p| p.len() <= bound).collect();
            prop_assert_eq!(cut, small);
        }
    }

    #[test]
    fn vertex_classification_is_consistent(seed: u64) {
        let g = random_graph(&mut rng(seed), 5, 6);
        let c = g.classification();
        prop_assert!(c.zero_regular.is_subset(&c.regular));
        prop_assert!(c.regular.is_disjoint(&c.sinks));
        prop_assert!(c.regular.is_disjoint(&c.infinite_emitters));
        prop_assert_eq!(c.row_finite, c.infinite_emitters.is_empty());
        for v in g.vertices() {
            prop_assert_eq!(c.sinks.contains(&v), g.out_edges(v).next().is_none());
        }
    }

    #[test]
    fn graph_hom_categories_are_closed_under_composition(seed: u64) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let outer = random_graph_hom_into(&mut r, g);
        let inner = random_graph_hom_into(&mut r, outer.domain().clone());
        let both = outer.classify().category.min(inner.classify().category);
        let composite = outer.after(&inner).unwrap();
        prop_assert!(composite.classify().category >= both);
    }

    #[test]
    fn path_hom_categories_are_closed_under_composition(seed: u64) {
        let mut r = rng(seed);
        let limits = Limits::default();
        let outer = random_path_hom(&mut r, limits);
        let inner = random_path_hom_into(&mut r, outer.domain().clone(), limits);
        let both = outer.classify().category.min(inner.classify().category);
        let composite = outer.after(&inner).unwrap();
        prop_assert!(composite.classify().category >= both);
    }

    #[test]
    fn relation_flags_are_closed_under_composition(seed: u64) {
        let (outer, inner) = random_chain(&mut rng(seed), Limits::default(), 0.3);
        let a = inner.admissibility();
        let b = outer.admissibility();
        let Ok(c) = compose_relations(&outer, &inner).map(|s| s.admissibility()) else {
            prop_assert!(!a.vertex_disjoint);
            return Ok(());
        };
        if a.vertex_disjoint && b.vertex_disjoint {
            prop_assert!(c.vertex_disjoint);
            if a.target_injective && b.target_injective {
                prop_assert!(c.target_injective);
            }
        }
        if a.category >= RelationCategory::PRG && b.category >= RelationCategory::PRG {
            if a.target_surjective && b.target_surjective {
                prop_assert!(c.target_surjective);
            }
            if a.monotone && b.monotone {
                prop_assert!(c.monotone);
            }
        }
        if a.category >= RelationCategory::CRG && b.category >= RelationCategory::CRG && a.regular && b.regular {
            prop_assert!(c.regular);
        }
    }

    #[test]
    fn factorization_composes_back(seed: u64, structured: bool) {
        let mut r = rng(seed);
        let rel = if structured {
            random_relation(&mut r, Limits::default(), 0.3)
        } else {
            random_generators(&mut r, Limits::default())
        };
        let fac = pullback_factorize(&rel);
        let back = compose_generators(&lift_graph_hom(&fac.phi), &lower_path_hom(&fac.theta)).unwrap();
        prop_assert_eq!(back, rel);
    }

    #[test]
    fn factorization_projections_inherit_the_category(seed: u64) {
        let rel = random_relation(&mut rng(seed), Limits::default(), 0.3);
        let report = rel.admissibility();
        let fac = pullback_factorize(&rel);
        let theta = fac.theta.classify();
        let phi = fac.phi.classify();
        if report.category >= RelationCategory::PRG {
            prop_assert!(theta.injective_on_vertices);
            prop_assert!(phi.proper && phi.target_injective);
        }
        if report.category >= RelationCategory::CRG {
            prop_assert!(theta.category >= PathHomCategory::MIPG);
            prop_assert!(phi.target_bijective);
        }
        if report.category == RelationCategory::ARG && rel.codomain().classification().row_finite {
            prop_assert_eq!(theta.category, PathHomCategory::RMIPG);
            prop_assert!(phi.regular && phi.target_bijective);
        }
    }

    #[test]
    fn membership_matches_brute_force(seed: u64, structured: bool) {
        let mut r = rng(seed);
        let rel = if structured {
            random_relation(&mut r, Limits::default(), 0.3)
        } else {
            random_generators(&mut r, Limits::default())
        };
        let closure = brute_force_closure(&rel, 3);
        let e = rel.domain();
        let f = rel.codomain();
        for y in all_paths(f, 3) {
            for x in all_paths(e, 7) {
                prop_assert_eq!(rel.member(&x, &y), closure.contains(&(x.clone(), y.clone())));
            }
        }
    }

    #[test]
    fn bounded_regularity_agrees_with_a_deeper_search(seed: u64) {
        let rel = random_relation(&mut rng(seed), Limits::default(), 0.3);
        prop_assert_eq!(rel.admissibility().regular, regular_to_double_depth(&rel));
    }

    #[test]
    fn path_hom_regularity_matches_its_relation(seed: u64) {
        let theta = random_path_hom(&mut rng(seed), Limits::default());
        let c = theta.classify();
        if c.category >= PathHomCategory::MIPG {
            prop_assert_eq!(c.regular, lower_path_hom(&theta).admissibility().regular);
        }
    }

    #[test]
    fn multiplication_is_associative(seed: u64, level in 0usize..3) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let alg = Algebra::new(LEVELS[level], g);
        let [a, b, c] = [0, 1, 2].map(|_| random_element(&mut r, &alg));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn star_is_an_anti_involution(seed: u64, leavitt: bool) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let alg = Algebra::new(if leavitt { Level::Leavitt } else { Level::Cohn }, g);
        let a = random_element(&mut r, &alg);
        let b = random_element(&mut r, &alg);
        prop_assert_eq!(a.star().unwrap().star().unwrap(), a.clone());
        prop_assert_eq!((&a * &b).star().unwrap(), &b.star().unwrap() * &a.star().unwrap());
    }

    #[test]
    fn cohn_products_of_monomials_are_monomials(seed: u64) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let alg = Algebra::new(Level::Cohn, g);
        for _ in 0..8 {
            let a = Element::monomial(&alg, random_monomial(&mut r, &alg)).unwrap();
            let b = Element::monomial(&alg, random_monomial(&mut r, &alg)).unwrap();
            let p = &a * &b;
            prop_assert!(p.terms().len() <= 1);
            prop_assert!(p.terms().values().all(|c| *c == Scalar::from_integer(1.into())));
        }
    }

    #[test]
    fn normal_forms_do_not_depend_on_rewrite_order(seed: u64, level in 0usize..3) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let alg = Algebra::new(LEVELS[level], g);
        let raw = random_raw_sum(&mut r, &alg, 4, 5);
        let first = normalize_words(&alg, &raw).unwrap();
        let mut order = rng(seed ^ 0x5eed);
        let other = normalize_words_with(&alg, &raw, |n| order.gen_range(0..n)).unwrap();
        prop_assert_eq!(&first, &other);
        prop_assert_eq!(first, product_of_words(&alg, &raw));
    }

    #[test]
    fn zero_test_ignores_the_special_edges(seed: u64) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 5));
        let one = Algebra::new(Level::Leavitt, g.clone());
        let mut special = one.special_edges().clone();
        for (v, e) in special.iter_mut() {
            let out: Vec<_> = g.out_edges(*v).collect();
            *e = out[r.gen_range(0..out.len())];
        }
        let two = Algebra::with_special_edges(Level::Leavitt, g.clone(), special).unwrap();
        // Products of relators with words vanish under either choice.
        for rel in relators(&one) {
            let w = random_composable_word(&mut r, &one, 3);
            let raw: Vec<(Scalar, Word)> = rel
                .terms
                .iter()
                .map(|(c, t)| (c.clone(), w.iter().chain(t).copied().collect()))
                .collect();
            prop_assert!(normalize_words(&one, &raw).unwrap().is_zero());
            prop_assert!(normalize_words(&two, &raw).unwrap().is_zero());
        }
        // Normal monomials under one choice are nonzero under the other.
        for _ in 0..8 {
            let m = random_monomial(&mut r, &one);
            prop_assert!(!normalize_words(&two, &[(Scalar::from_integer(1.into()), monomial_word(&m))]).unwrap().is_zero());
        }
    }

    #[test]
    fn relators_vanish_at_their_level(seed: u64, level in 0usize..3) {
        let g = Arc::new(random_graph(&mut rng(seed), 4, 5));
        let alg = Algebra::new(LEVELS[level], g);
        for rel in relators(&alg) {
            prop_assert!(normalize_words(&alg, &rel.terms).unwrap().is_zero());
            prop_assert!(product_of_words(&alg, &rel.terms).is_zero());
        }
    }

    #[test]
    fn identity_relation_induces_the_identity(seed: u64, level in 0usize..3) {
        let mut r = rng(seed);
        let g = Arc::new(random_graph(&mut r, 3, 4));
        let h = induce(&RelationMorphism::identity(g.clone()), LEVELS[level]).unwrap();
        for gen in Generator::all(&g, LEVELS[level]) {
            prop_assert_eq!(h.image(gen).unwrap(), Element::generator(h.source(), gen).unwrap());
        }
        let a = random_element(&mut r, h.source());
        prop_assert_eq!(h.apply(&a).unwrap(), a);
    }

    #[test]
    fn induced_images_respect_the_relators(seed: u64) {
        let rel = random_relation(&mut rng(seed), Limits::default(), 0.3);
        let report = rel.admissibility();
        let levels = [
            (Level::Path, report.vertex_disjoint),
            (Level::Cohn, report.category >= RelationCategory::CRG),
            (Level::Leavitt, report.category == RelationCategory::ARG),
        ];
        for (level, ok) in levels {
            if ok {
                prop_assert!(induce(&rel, level).unwrap().verify_relators().unwrap().is_empty());
            }
        }
    }
}

/// All pairs obtained by concatenating generator pairs componentwise, with
/// codomain paths of length at most `max_len`.
fn brute_force_closure(rel: &RelationMorphism, max_len: usize) -> BTreeSet<(Path, Path)> {
    let e = rel.domain();
    let f = rel.codomain();
    let mut layer: BTreeSet<(Path, Path)> = rel
        .vertex_pairs()
        .iter()
        .map(|&(u, v)| (e.vertex_path(u), f.vertex_path(v)))
        .collect();
    let edges: Vec<(Path, Path)> = rel
        .edge_pairs()
        .iter()
        .map(|(x, g)| (x.clone(), f.edge_path(*g)))
        .collect();
    let mut all = layer.clone();
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for (x, y) in &layer {
            for (x2, y2) in &edges {
                if let (Some(a), Some(b)) = (x.concat(x2), y.concat(y2)) {
                    next.insert((a, b));
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Regularity checked against every path up to twice the longest generator.
fn regular_to_double_depth(rel: &RelationMorphism) -> bool {
    let e = rel.domain();
    let f = rel.codomain();
    let longest = rel.edge_pairs().iter().map(|(x, _)| x.len()).max().unwrap_or(0);
    rel.vertex_pairs().iter().all(|&(u, v)| {
        if !f.is_regular(v) {
            return true;
        }
        let candidates: Vec<&Path> = rel
            .edge_pairs()
            .iter()
            .filter(|(x, g)| f.source(*g) == v && x.source() == u)
            .map(|(x, _)| x)
            .collect();
        e.paths_from(u, 2 * longest)
            .iter()
            .all(|x| candidates.iter().any(|c| c.comparable(x)))
    })
}

fn random_monomial(r: &mut ChaCha8Rng, alg: &Arc<Algebra>) -> Monomial {
    let g = alg.graph();
    let paths = all_paths(g, 2);
    loop {
        let x = paths[r.gen_range(0..paths.len())].clone();
        let m = if alg.level() == Level::Path {
            Monomial::path(x)
        } else {
            let ys: Vec<&Path> = paths.iter().filter(|y| y.target() == x.target()).collect();
            Monomial::new(x, ys[r.gen_range(0..ys.len())].clone()).unwrap()
        };
        if alg.is_normal(&m) {
            return m;
        }
    }
}

fn random_element(r: &mut ChaCha8Rng, alg: &Arc<Algebra>) -> Element {
    let mut out = Element::zero(alg);
    for _ in 0..r.gen_range(1..=3) {
        let c = Scalar::from_integer(r.gen_range(-2i64..=3).into());
        let m = Element::term(alg, random_monomial(r, alg), c).unwrap();
        out = &out + &m;
    }
    out
}

fn monomial_word(m: &Monomial) -> Word {
    if m.real.is_vertex() && m.ghost.is_vertex() {
        return vec![Generator::Vertex(m.real.source())];
    }
    m.real
        .edges()
        .iter()
        .map(|&e| Generator::Edge(e))
        .chain(m.ghost.edges().iter().rev().map(|&e| Generator::Ghost(e)))
        .collect()
}

/// Evaluates a formal sum by multiplying generator elements.
fn product_of_words(alg: &Arc<Algebra>, raw: &[(Scalar, Word)]) -> Element {
    let mut out = Element::zero(alg);
    for (c, w) in raw {
        let mut acc: Option<Element> = None;
        for &x in w {
            let gx = Element::generator(alg, x).unwrap();
            acc = Some(match acc {
                None => gx,
                Some(a) => &a * &gx,
            });
        }
        if let Some(a) = acc {
            out = &out + &a.scale(c);
        }
    }
    out
}
