//! Acceptance suite: one test per criterion, each printing a PASS line and
//! enforcing its time budget. Run with
//! `cargo test -p grphcat-core --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grphcat_core::fmt::{check_fmt, fmt_factorize, image_oracle, kernel_pair_oracle};
use grphcat_core::gen::{random_graph, random_morphism};
use grphcat_core::graph::{Category, Graph, PartId};
use grphcat_core::iso::find_isomorphism;
use grphcat_core::limits::{coequalizer, coproduct, equalizer, product, ConeResult};
use grphcat_core::morphism::Morphism;
use grphcat_core::reconstruction::{
    corpus_sweep, make_deck, match_decks, reconstruction_check, DeckMode, ReconstructionOutcome,
    SweepOptions,
};
use grphcat_core::ump::{enumerate_morphisms, verify_universal_property, CompetingCone};

mod common;
use common::{small_universe, universal_epi, universal_mono};

fn k2() -> Graph {
    Graph::build(["u1", "u2"], [("e", "u1", "u2")]).unwrap()
}

fn kbar2() -> Graph {
    Graph::build(["v1", "v2"], Vec::<(&str, &str, &str)>::new()).unwrap()
}

fn inclusion_kbar2_k2() -> Morphism {
    Morphism::new(
        kbar2(),
        k2(),
        BTreeMap::from([
            (PartId::vertex("v1"), PartId::vertex("u1")),
            (PartId::vertex("v2"), PartId::vertex("u2")),
        ]),
    )
    .unwrap()
}

fn counts(g: &Graph) -> (usize, usize) {
    (g.vertex_count(), g.edge_count())
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
    println!("criterion {criterion}: PASS ({elapsed:.2?})");
}

#[test]
fn criterion_1_inclusion_factorization_drops_the_edge() {
    let start = Instant::now();
    for cat in [Category::Grphs, Category::StGrphs] {
        let f = inclusion_kbar2_k2();
        let fx = fmt_factorize(&f, cat).unwrap();
        assert_eq!(counts(&fx.coimage), (2, 0), "{cat}: coimage counts");
        assert_eq!(counts(&fx.image), (2, 0), "{cat}: image counts");
        assert_eq!(fx.image, image_oracle(&f), "{cat}: image is Im(f)");
        assert!(check_fmt(&fx).holds(), "{cat}: h must be an isomorphism");
    }
    finish("1 (factorization of the two-point inclusion)", start, Duration::from_secs(1));
}

#[test]
fn criterion_2_simple_categories_pull_the_edge_into_the_image() {
    let start = Instant::now();
    for cat in [Category::SiGrphs, Category::SLStGrphs] {
        let f = inclusion_kbar2_k2();
        let fx = fmt_factorize(&f, cat).unwrap();
        assert_eq!(
            fx.image.edge_count(),
            1,
            "{cat}: the identified parallel edges must appear in the image"
        );
        assert!(!check_fmt(&fx).holds(), "{cat}: h must fail to be an isomorphism");
    }
    finish("2 (counterexample in the simple-graph categories)", start, Duration::from_secs(1));
}

#[test]
fn criterion_3_randomized_factorization_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0f0);
    let mut cases = 0usize;
    for cat in [Category::Grphs, Category::StGrphs] {
        for _ in 0..500 {
            let f = random_morphism(&mut rng, cat, 8);
            let fx = fmt_factorize(&f, cat).unwrap();
            assert!(check_fmt(&fx).holds(), "{cat}: {f:?}");

            // q identifies exactly the fibers of f
            let a_parts = f.domain().part_set();
            for x in &a_parts {
                for y in &a_parts {
                    assert_eq!(
                        fx.q.apply(x) == fx.q.apply(y),
                        f.apply(x) == f.apply(y),
                        "{cat}: q-identification differs at ({x}, {y})"
                    );
                }
            }

            // k* identifies the two copies of exactly the image parts
            let image = image_oracle(&f);
            for p in f.codomain().part_set() {
                let left = fx.k_star.apply(fx.i0.apply(&p));
                let right = fx.k_star.apply(fx.i1.apply(&p));
                assert_eq!(
                    left == right,
                    image.has_part(&p),
                    "{cat}: k*-identification differs at {p}"
                );
            }

            // supporting claims of the proof
            assert_eq!(fx.image, image, "{cat}: image object is Im(f)");
            assert!(fx.h.is_mono(cat), "{cat}: h must be mono");
            assert!(fx.h_prime.is_epi(cat), "{cat}: h' must be epi");
            let got: BTreeSet<PartId> = fx.kernel_pair.part_set().into_iter().collect();
            assert_eq!(got, kernel_pair_oracle(&f, cat), "{cat}: kernel pair oracle");

            // on small instances, h is the one and only commuting filler
            if fx.coimage.part_count() <= 4 && fx.image.part_count() <= 5 {
                assert_eq!(
                    grphcat_core::fmt::count_commuting_fillers(&fx),
                    Some(1),
                    "{cat}: h must be unique"
                );
            }
            cases += 1;
        }
    }
    assert_eq!(cases, 1000);
    finish("3 (randomized factorization suite, 1000/1000)", start, Duration::from_secs(60));
}

#[test]
fn criterion_4_epi_mono_lemma_oracles() {
    let start = Instant::now();
    for cat in [Category::Grphs, Category::StGrphs] {
        let universe = small_universe(cat, 4);
        let mut morphisms = 0usize;
        for a in &universe {
            for b in &universe {
                for f in enumerate_morphisms(a, b, cat).unwrap() {
                    let epi = f.is_epi(cat);
                    let mono = f.is_mono(cat);
                    assert_eq!(
                        epi,
                        universal_epi(&f, &universe, cat),
                        "{cat}: epi characterization differs for {f:?}"
                    );
                    assert_eq!(
                        mono,
                        universal_mono(&f, &universe, cat),
                        "{cat}: mono characterization differs for {f:?}"
                    );
                    assert_eq!(
                        f.is_iso(cat),
                        epi && mono,
                        "{cat}: balance fails for {f:?}"
                    );
                    morphisms += 1;
                }
            }
        }
        assert!(morphisms > 0);
        println!("  {cat}: {} morphisms checked over {} objects", morphisms, universe.len());
    }
    finish("4 (epi/mono characterizations vs universal oracles)", start, Duration::from_secs(120));
}

#[test]
fn criterion_5_product_counts() {
    let start = Instant::now();
    let grphs = product(&k2(), &k2(), Category::Grphs).unwrap();
    assert_eq!(counts(&grphs.object), (4, 6));
    let tensor = product(&k2(), &k2(), Category::StGrphs).unwrap();
    assert_eq!(counts(&tensor.object), (4, 2));
    let strong = product(&k2(), &k2(), Category::SiGrphs).unwrap();
    assert_eq!(counts(&strong.object), (4, 6));
    // K4: all six vertex pairs adjacent, no loops or parallels
    assert!(strong.object.validate_in(Category::SiGrphs));
    let incidences: BTreeSet<_> = strong.object.edges().map(|(_, i)| i.clone()).collect();
    assert_eq!(incidences.len(), 6);
    finish("5 (product part counts)", start, Duration::from_secs(1));
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, items: &'a [T]) -> Option<&'a T> {
    if items.is_empty() {
        None
    } else {
        Some(&items[rng.random_range(0..items.len())])
    }
}

/// One randomized universal-property instance; returns the verified cone.
fn ump_instance(rng: &mut ChaCha8Rng, kind: usize, cat: Category) -> Option<ConeResult> {
    match kind {
        0 => {
            let a = random_graph(rng, cat, 4);
            let b = random_graph(rng, cat, 4);
            let cone = product(&a, &b, cat).unwrap();
            let t = random_graph(rng, cat, 4);
            let t0 = pick(rng, &enumerate_morphisms(&t, &a, cat).unwrap())?.clone();
            let t1 = pick(rng, &enumerate_morphisms(&t, &b, cat).unwrap())?.clone();
            let report = verify_universal_property(&cone, &[CompetingCone { legs: vec![t0, t1] }])
                .unwrap();
            assert!(report.ok, "product UMP failed: {:?}", report.transcript);
            Some(cone)
        }
        1 => {
            let gs = [random_graph(rng, cat, 3), random_graph(rng, cat, 3)];
            let cone = coproduct(&gs, cat).unwrap();
            let t = random_graph(rng, cat, 4);
            let s0 = pick(rng, &enumerate_morphisms(&gs[0], &t, cat).unwrap())?.clone();
            let s1 = pick(rng, &enumerate_morphisms(&gs[1], &t, cat).unwrap())?.clone();
            let report = verify_universal_property(&cone, &[CompetingCone { legs: vec![s0, s1] }])
                .unwrap();
            assert!(report.ok, "coproduct UMP failed: {:?}", report.transcript);
            Some(cone)
        }
        2 => {
            let a = random_graph(rng, cat, 4);
            let b = random_graph(rng, cat, 4);
            let homs = enumerate_morphisms(&a, &b, cat).unwrap();
            let f = pick(rng, &homs)?.clone();
            let g = pick(rng, &homs)?.clone();
            let cone = equalizer(&f, &g, cat).unwrap();
            // competing morphisms that equalize the pair, from small apexes
            let t = random_graph(rng, cat, 3);
            let zs: Vec<Morphism> = enumerate_morphisms(&t, &a, cat)
                .unwrap()
                .into_iter()
                .filter(|z| {
                    grphcat_core::morphism::compose(&f, z).unwrap()
                        == grphcat_core::morphism::compose(&g, z).unwrap()
                })
                .collect();
            let z = match pick(rng, &zs) {
                Some(z) => z.clone(),
                // the equalizer's own inclusion always qualifies
                None => cone.legs[0].clone(),
            };
            let report =
                verify_universal_property(&cone, &[CompetingCone { legs: vec![z] }]).unwrap();
            assert!(report.ok, "equalizer UMP failed: {:?}", report.transcript);
            Some(cone)
        }
        _ => {
            let a = random_graph(rng, cat, 4);
            let b = random_graph(rng, cat, 4);
            let homs = enumerate_morphisms(&a, &b, cat).unwrap();
            let f = pick(rng, &homs)?.clone();
            let g = pick(rng, &homs)?.clone();
            let cone = coequalizer(&f, &g, cat).unwrap();
            let t = random_graph(rng, cat, 3);
            let zs: Vec<Morphism> = enumerate_morphisms(&b, &t, cat)
                .unwrap()
                .into_iter()
                .filter(|z| {
                    grphcat_core::morphism::compose(z, &f).unwrap()
                        == grphcat_core::morphism::compose(z, &g).unwrap()
                })
                .collect();
            let z = match pick(rng, &zs) {
                Some(z) => z.clone(),
                None => cone.legs[0].clone(),
            };
            let report =
                verify_universal_property(&cone, &[CompetingCone { legs: vec![z] }]).unwrap();
            assert!(report.ok, "coequalizer UMP failed: {:?}", report.transcript);
            Some(cone)
        }
    }
}

#[test]
fn criterion_6_universal_property_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0c0_a000);
    let mut done = 0usize;
    let mut kind = 0usize;
    let mut cat_idx = 0usize;
    while done < 50 {
        let cat = Category::ALL[cat_idx % 4];
        if ump_instance(&mut rng, kind % 4, cat).is_some() {
            done += 1;
            kind += 1;
        }
        cat_idx += 1;
    }
    finish("6 (universal properties on 50 randomized instances)", start, Duration::from_secs(120));
}

#[test]
fn criterion_7_reconstruction_biconditional_sweep() {
    let start = Instant::now();

    // vertex mode over all simple graphs on 3..=5 vertices
    let mut opts = SweepOptions::new(DeckMode::VertexDeleted, 5);
    opts.n_min = 3;
    let vertex_report = corpus_sweep(&opts).unwrap();
    assert_eq!(
        vertex_report.total_delta_failures(),
        0,
        "vertex-mode violations: {:?}",
        vertex_report.violations
    );
    assert_eq!(
        vertex_report.total_deck_equal_noniso(),
        0,
        "unexpected deck-equal non-isomorphic vertex pairs: {:?}",
        vertex_report.noniso_pairs
    );
    for row in &vertex_report.rows {
        println!(
            "  vertex n={}: pairs={} noniso={} failures={}",
            row.n, row.pairs_checked, row.deck_equal_noniso, row.delta_failures
        );
    }

    // edge mode over all simple graphs with >= 4 edges on <= 5 vertices
    let mut opts = SweepOptions::new(DeckMode::EdgeDeleted, 5);
    opts.n_min = 4;
    opts.min_edges = 4;
    let edge_report = corpus_sweep(&opts).unwrap();
    assert_eq!(
        edge_report.total_delta_failures(),
        0,
        "edge-mode violations: {:?}",
        edge_report.violations
    );
    assert_eq!(
        edge_report.total_deck_equal_noniso(),
        0,
        "unexpected deck-equal non-isomorphic edge pairs: {:?}",
        edge_report.noniso_pairs
    );
    for row in &edge_report.rows {
        println!(
            "  edge n={}: pairs={} noniso={} failures={}",
            row.n, row.pairs_checked, row.deck_equal_noniso, row.delta_failures
        );
    }

    // the two-vertex pair sits below the hypothesis: deck-equal,
    // non-isomorphic, delta absent
    let below = corpus_sweep(&SweepOptions::new(DeckMode::VertexDeleted, 2)).unwrap();
    assert_eq!(below.total_deck_equal_noniso(), 1);
    assert_eq!(below.total_delta_failures(), 0);
    let outcome = reconstruction_check(&kbar2(), &k2(), DeckMode::VertexDeleted).unwrap();
    match outcome {
        ReconstructionOutcome::Case(case) => assert!(case.delta.is_none()),
        other => panic!("two-vertex pair should complete via the swapped orientation: {other:?}"),
    }

    finish("7 (reconstruction biconditional sweep)", start, Duration::from_secs(600));
}

#[test]
fn criterion_8_coimage_isomorphic_to_target() {
    let start = Instant::now();
    let mut matched_cases = 0usize;
    for (mode, ns, min_edges) in [
        (DeckMode::VertexDeleted, 3..=4usize, 0usize),
        (DeckMode::EdgeDeleted, 4..=4, 4),
    ] {
        for n in ns {
            let graphs: Vec<Graph> = grphcat_core::reconstruction::enumerate_simple_graphs(n)
                .unwrap()
                .into_iter()
                .filter(|g| g.edge_count() >= min_edges)
                .collect();
            for (i, g) in graphs.iter().enumerate() {
                for h in &graphs[i..] {
                    let dg = make_deck(g, mode).unwrap();
                    let dh = make_deck(h, mode).unwrap();
                    if match_decks(&dg, &dh).unwrap().is_none() {
                        continue;
                    }
                    match reconstruction_check(g, h, mode).unwrap() {
                        ReconstructionOutcome::Case(case) => {
                            let target = if case.swapped { g } else { h };
                            assert!(
                                find_isomorphism(&case.fx.coimage, target).is_some(),
                                "coimage not isomorphic to the target for mode {mode}, n={n}"
                            );
                            matched_cases += 1;
                        }
                        ReconstructionOutcome::HypothesisViolation { .. } => {}
                        ReconstructionOutcome::DecksMismatch { .. } => {
                            unreachable!("decks matched above")
                        }
                    }
                }
            }
        }
    }
    assert!(matched_cases > 0);
    println!("  {matched_cases} matched-deck cases verified");
    finish("8 (coimage isomorphic to target in every matched case)", start, Duration::from_secs(600));
}
