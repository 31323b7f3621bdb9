//! End-to-end acceptance suite: every headline claim is recomputed from
//! scratch and compared against the shipped catalog, printing one line per
//! criterion.
//!
//! Discrepancies between the shipped catalog lists and the recomputed
//! ground truth are themselves part of the verified output (see README):
//! four uncovered cycle pairs, an undersized disjoint-dual-origin list, and
//! a handful of extension-table gaps. The tests that pin those document the
//! exact values; the strict zero-diff assertion for the cycle sweep lives
//! alongside and is expected to stay red for as long as the catalog
//! transcribes its sources faithfully.

use std::time::Instant;
use tourneykit::pattern::CycleType;
use tourneykit::verify::{self, BuildingLemma};
use tourneykit::{catalog, contains_cycle, enumerate, Tournament};

fn line(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

// criterion 1: the whole catalog revalidates in bounded time
#[test]
fn c1_catalog_self_validation() {
    let t0 = Instant::now();
    let rep = verify::verify_exception_catalog(2);
    let within = t0.elapsed().as_secs() < 10;
    let pass = rep.passed() && within;
    line(
        "1 (catalog)",
        pass,
        &format!(
            "{} instances, {} violations, {:?}",
            rep.instances,
            rep.violations.len(),
            t0.elapsed()
        ),
    );
    assert!(rep.passed(), "violations: {:?}", rep.violations);
    assert!(within, "catalog check exceeded 10s: {:?}", t0.elapsed());
    assert!(rep.instances >= 52 + 18);
    // the stated-S imprecisions in the source lists are reported as diffs
    assert_eq!(rep.found_not_listed.len(), 5, "{:?}", rep.found_not_listed);
}

// criterion 2: origin coverage sweep, orders 3..=7
#[test]
fn c2_theorem_coverage_sweep() {
    let t0 = Instant::now();
    let rep = verify::verify_theorem_2_1(7, 2).unwrap();
    line(
        "2 (origin coverage 3..7)",
        rep.passed(),
        &format!(
            "{} qualifying pairs, {} violations, {:?}",
            rep.instances,
            rep.violations.len(),
            t0.elapsed()
        ),
    );
    assert!(t0.elapsed().as_secs() < 300);
    assert!(
        rep.passed(),
        "uncovered origin pairs outside the catalog: {:?}",
        rep.violations
    );
}

// the one tournament whose coverage once looked uncovered is the 7F record
// under relabeling; pin that identification
#[test]
fn c2_former_gap_is_the_7f_record() {
    let t = Tournament::parse("t 7 000011000010100000000").unwrap();
    let p = tourneykit::parse_path_type("+(1,1,1,3)").unwrap();
    assert!(t.is_isomorphic(&catalog::exception_tournament("7F").unwrap()));
    assert_eq!(
        catalog::match_path_exception(&t, &p),
        Some(catalog::MatchedException::Finite(44))
    );
    // and it is genuinely distinct from the other record of the same type
    assert!(!t.is_isomorphic(&catalog::exception_tournament("7D").unwrap()));
    line(
        "2 (7F identification)",
        true,
        "former gap matches record 44",
    );
}

// criterion 3: the cycle-containment sweep against the catalog
#[test]
fn c3_corollary_sweep_equality() {
    let rep = verify::verify_main_corollary(7, 2).unwrap();
    let clean = rep.found_not_listed.is_empty() && rep.listed_not_found.is_empty();
    line(
        "3 (cycle sweep 3..7, exact equality)",
        clean,
        &format!(
            "{} found-not-listed, {} listed-not-found",
            rep.found_not_listed.len(),
            rep.listed_not_found.len()
        ),
    );
    // expected to stay red: four failing pairs are absent from the source
    // list (see c3_pinned_diff); the reverse direction is clean
    assert!(
        clean,
        "catalog diff:\nfound-not-listed: {:?}\nlisted-not-found: {:?}",
        rep.found_not_listed, rep.listed_not_found
    );
}

#[test]
fn c3_pinned_diff_and_counts() {
    let rep = verify::verify_main_corollary(7, 2).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.listed_not_found, Vec::<String>::new());
    assert_eq!(
        rep.found_not_listed,
        vec![
            "[t 6 000010001010000; (2,1,2,1)]".to_string(),
            "[t 6 000110001010101; (2,1,2,1)]".to_string(),
            "[t 6 000110100001100; (1,1,1,1)]".to_string(),
            "[t 7 000111010010010100010; (1,1,1,1)]".to_string(),
        ]
    );
    line("3 (pinned diff)", true, "four extra failing pairs, stable");
}

#[test]
fn c3_particular_cells() {
    // n=3: only the strong triangle misses its one non-directed type
    let f3 = verify::failing_pairs(3, 3).unwrap();
    assert_eq!(f3.len(), 1);
    assert!(f3[0].0.is_strong());
    assert_eq!(f3[0].1.blocks(), &[2, 1][..]);

    // n=5, m=5: the two-regular tournament and the 5C record
    let f55 = verify::failing_pairs(5, 5).unwrap();
    let mut labels: Vec<String> = f55
        .iter()
        .map(|(t, c)| {
            let name = ["5A", "5C"]
                .iter()
                .find(|n| catalog::exception_tournament(n).unwrap().is_isomorphic(t))
                .map(|s| s.to_string())
                .unwrap_or_else(|| t.to_line());
            format!("{name};{c}")
        })
        .collect();
    labels.sort();
    assert_eq!(labels, vec!["5A;(2,1,1,1)", "5C;(4,1)"]);

    // n=7: the Hamiltonian cell holds only the Paley record; the record
    // with type (2,1,2,1) sits one order below, next to the 7K one
    let f77 = verify::failing_pairs(7, 7).unwrap();
    assert_eq!(f77.len(), 1);
    assert!(f77[0]
        .0
        .is_isomorphic(&catalog::exception_tournament("7A").unwrap()));
    let f76 = verify::failing_pairs(7, 6).unwrap();
    let seven_a = catalog::exception_tournament("7A").unwrap();
    let seven_k = catalog::exception_tournament("7K").unwrap();
    assert!(f76
        .iter()
        .any(|(t, c)| t.is_isomorphic(&seven_a) && c.blocks() == [2, 1, 2, 1]));
    assert!(f76
        .iter()
        .any(|(t, c)| t.is_isomorphic(&seven_k) && c.is_antidirected()));
    line(
        "3 (particular cells)",
        true,
        "n=3, n=5/m=5, n=7 cells pinned",
    );
}

// deep halves of criteria 2 and 3, gated like the CLI's --deep
#[test]
fn c2_deep_order_8() {
    if std::env::var("TK_DEEP").ok().as_deref() != Some("1") {
        line("2 (order-8 sweep)", true, "skipped; set TK_DEEP=1 to run");
        return;
    }
    let t0 = Instant::now();
    let rep = verify::verify_theorem_2_1(8, 8).unwrap();
    line(
        "2 (order-8 sweep)",
        rep.passed(),
        &format!("{} qualifying pairs, {:?}", rep.instances, t0.elapsed()),
    );
    assert!(rep.passed(), "{:?}", rep.violations);
    assert!(t0.elapsed().as_secs() < 7200);
}

#[test]
fn c3_deep_order_8() {
    if std::env::var("TK_DEEP").ok().as_deref() != Some("1") {
        line("3 (order-8 sweep)", true, "skipped; set TK_DEEP=1 to run");
        return;
    }
    let rep = verify::verify_main_corollary(8, 8).unwrap();
    // no order-8 entries beyond the two catalog records
    let extra_8: Vec<&String> = rep
        .found_not_listed
        .iter()
        .filter(|s| s.starts_with("[t 8"))
        .collect();
    line(
        "3 (order-8 sweep)",
        extra_8.is_empty(),
        &format!("order-8 diff entries: {}", extra_8.len()),
    );
    assert_eq!(extra_8, Vec::<&String>::new());
    assert!(rep.notes.iter().any(|n| n.contains("up to duality: 35")));
}

// criterion 4: the standalone statements
#[test]
fn c4_small_lemmas() {
    let t0 = Instant::now();
    let rep = verify::verify_small_lemmas(7, 2).unwrap();
    line(
        "4 (small lemmas)",
        rep.passed(),
        &format!(
            "{} instances, {} violations, {:?}",
            rep.instances,
            rep.violations.len(),
            t0.elapsed()
        ),
    );
    assert!(rep.passed(), "{:?}", rep.violations);
    assert!(t0.elapsed().as_secs() < 900);
    // the disjoint-dual-origin id list: everything listed checks out, and
    // the sweep finds 35 entries the list omits (one finite id plus the
    // dominated-triangle families)
    assert_eq!(rep.listed_not_found, Vec::<String>::new());
    assert_eq!(rep.found_not_listed.len(), 35, "{:?}", rep.found_not_listed);
    assert!(rep
        .found_not_listed
        .contains(&"lemma2.8: Exc 17".to_string()));
}

// criterion 5: count duality
#[test]
fn c5_count_duality() {
    let t0 = Instant::now();
    let rep = verify::verify_reversal_counts(6, 100, 0, 2).unwrap();
    line(
        "5 (count duality)",
        rep.passed(),
        &format!("{} instances, {:?}", rep.instances, t0.elapsed()),
    );
    assert!(rep.passed(), "{:?}", rep.violations);
    assert!(t0.elapsed().as_secs() < 120);
}

// criterion 6: building-lemma extension sweeps
#[test]
fn c6_building_lemmas() {
    let t0 = Instant::now();
    let mut all_pass = true;
    let mut details = Vec::new();
    for w in ["2.10", "2.11", "2.12", "2.13"] {
        let which = BuildingLemma::parse(w).unwrap();
        let rep = verify::verify_building_lemmas(which, 2).unwrap();
        all_pass &= rep.passed();
        details.push(format!(
            "{w}: {}fnl/{}lnf",
            rep.found_not_listed.len(),
            rep.listed_not_found.len()
        ));
        assert!(rep.passed(), "{w}: {:?}", rep.violations);
        // determinism of the diff
        let again = verify::verify_building_lemmas(which, 4).unwrap();
        assert_eq!(rep.found_not_listed, again.found_not_listed);
        assert_eq!(rep.listed_not_found, again.listed_not_found);
    }
    line(
        "6 (building lemmas)",
        all_pass,
        &format!("{}; {:?}", details.join(", "), t0.elapsed()),
    );
    assert!(t0.elapsed().as_secs() < 1800);
}

#[test]
fn c6_pinned_extension_diffs() {
    // the under-listings are stable: one extra neighborhood class on the
    // Paley base in each direction, four extra family-based extensions
    let fnl = |w: &str| {
        verify::verify_building_lemmas(BuildingLemma::parse(w).unwrap(), 2)
            .unwrap()
            .found_not_listed
    };
    assert_eq!(fnl("2.10").len(), 1);
    assert_eq!(fnl("2.11").len(), 1);
    assert_eq!(fnl("2.12").len(), 0);
    assert_eq!(fnl("2.13").len(), 4);
    line("6 (pinned diffs)", true, "1/1/0/4 under-listings, stable");
}

// criterion 7: the split-based embedder agrees with brute force
#[test]
fn c7_guided_embedder() {
    use rand::{Rng, SeedableRng};
    let t0 = Instant::now();
    for n in 3..=7 {
        let reps = enumerate::tournaments_of_order(n, false).unwrap();
        for c in CycleType::enumerate(n, false) {
            for t in &reps {
                let guided = tourneykit::proof_guided_cycle_embedding(t, &c);
                assert_eq!(
                    guided.is_some(),
                    contains_cycle(t, &c),
                    "{} {c}",
                    t.to_line()
                );
                if let Some(e) = guided {
                    assert!(tourneykit::validate_cycle_embedding(t, &c, &e.vertices));
                }
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    let mut worst = std::time::Duration::ZERO;
    for _ in 0..200 {
        let n = rng.gen_range(9..=64);
        let pairs = n * (n - 1) / 2;
        let bits: Vec<bool> = (0..pairs).map(|_| rng.gen()).collect();
        let t = Tournament::new(n, &bits).unwrap();
        let c = loop {
            let dirs: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            if dirs.iter().any(|&d| d) && dirs.iter().any(|&d| !d) {
                break CycleType::from_arc_dirs(&dirs);
            }
        };
        let t1 = Instant::now();
        let w = tourneykit::proof_guided_cycle_embedding(&t, &c)
            .expect("random large tournaments contain every non-directed cycle");
        let dt = t1.elapsed();
        worst = worst.max(dt);
        assert!(tourneykit::validate_cycle_embedding(&t, &c, &w.vertices));
        assert!(dt.as_secs() < 1, "instance exceeded 1s: {dt:?}");
    }
    line(
        "7 (guided embedder)",
        true,
        &format!(
            "exhaustive to 7 + 200 random, worst {worst:?}, {:?}",
            t0.elapsed()
        ),
    );
}

// criterion 8: enumeration counts and the naive oracle
#[test]
fn c8_enumeration() {
    let expected = [(3, 2), (4, 4), (5, 12), (6, 56), (7, 456), (8, 6880)];
    for (n, want) in expected {
        assert_eq!(
            enumerate::count_tournaments(n, false).unwrap(),
            want,
            "n={n}"
        );
    }
    // naive reclassification for n <= 5
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        let mut naive = std::collections::BTreeSet::new();
        for code in 0u64..1 << pairs {
            let bits: Vec<bool> = (0..pairs).map(|k| code >> k & 1 == 1).collect();
            naive.insert(
                Tournament::new(n, &bits)
                    .unwrap()
                    .canonical_form()
                    .bit_string(),
            );
        }
        let stream: std::collections::BTreeSet<String> = enumerate::tournaments_of_order(n, false)
            .unwrap()
            .iter()
            .map(|t| t.canonical_form().bit_string())
            .collect();
        assert_eq!(stream, naive, "n={n}");
    }
    line(
        "8 (enumeration)",
        true,
        "counts 2,4,12,56,456,6880 + naive oracle to 5",
    );
}

// criterion 9: byte-identical reports across worker counts
#[test]
fn c9_determinism_across_jobs() {
    let a = verify::verify_theorem_2_1(6, 1)
        .unwrap()
        .to_canonical_json();
    let b = verify::verify_theorem_2_1(6, 5)
        .unwrap()
        .to_canonical_json();
    assert_eq!(a, b);
    let a = verify::verify_main_corollary(6, 1)
        .unwrap()
        .to_canonical_json();
    let b = verify::verify_main_corollary(6, 7)
        .unwrap()
        .to_canonical_json();
    assert_eq!(a, b);
    let a = verify::verify_small_lemmas(6, 1)
        .unwrap()
        .to_canonical_json();
    let b = verify::verify_small_lemmas(6, 3)
        .unwrap()
        .to_canonical_json();
    assert_eq!(a, b);
    let a = verify::verify_exception_catalog(1).to_canonical_json();
    let b = verify::verify_exception_catalog(8).to_canonical_json();
    assert_eq!(a, b);
    line(
        "9 (determinism)",
        true,
        "reports byte-identical across 1..8 workers",
    );
}

// Camion's criterion ties the directed Hamiltonian cycle to strongness
#[test]
fn camion_equivalence_to_7() {
    for n in 3..=7 {
        let c = CycleType::directed(n).unwrap();
        for t in enumerate::tournaments_of_order(n, false).unwrap() {
            assert_eq!(t.is_strong(), contains_cycle(&t, &c), "{}", t.to_line());
        }
    }
}

// the committed catalog export stays in sync with the code
#[test]
fn catalog_json_committed_copy_is_current() {
    let generated = tourneykit::export::catalog_json();
    let committed = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog.json"),
    )
    .expect("catalog.json is committed at the repository root");
    assert_eq!(
        generated, committed,
        "regenerate catalog.json via `tk catalog`"
    );
}

// the failing set is closed under dualization of both sides
#[test]
fn c3_failing_set_dual_closure() {
    for (n, m) in [(5, 5), (6, 6), (6, 4), (7, 6), (7, 4)] {
        let pairs = verify::failing_pairs(n, m).unwrap();
        let keyed: std::collections::BTreeSet<(String, String)> = pairs
            .iter()
            .map(|(t, c)| (t.canonical_form().to_line(), c.to_string()))
            .collect();
        for (t, c) in &pairs {
            let dual_key = (t.dual().canonical_form().to_line(), c.dual().to_string());
            assert!(
                keyed.contains(&dual_key),
                "dual of [{}; {}] missing",
                t.to_line(),
                c
            );
        }
    }
    line(
        "3 (dual closure)",
        true,
        "failing sets closed under dualization",
    );
}

// record matching is relabeling-invariant
#[test]
fn matching_is_relabeling_invariant() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let relabel = |t: &Tournament, rng: &mut rand_chacha::ChaCha8Rng| {
        let mut perm: Vec<usize> = (0..t.order()).collect();
        perm.shuffle(rng);
        let arcs: Vec<(usize, usize)> = t.arcs().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Tournament::from_arcs(t.order(), &arcs).unwrap()
    };
    for rec in catalog::finite_path_exceptions() {
        let expect = catalog::match_path_exception(&rec.tournament, &rec.path);
        assert!(expect.is_some(), "Exc {} must match itself", rec.id);
        for _ in 0..100 {
            let r = relabel(&rec.tournament, &mut rng);
            assert_eq!(catalog::match_path_exception(&r, &rec.path), expect);
        }
    }
    for rec in catalog::cycle_exceptions().iter().filter(|r| r.id <= 3) {
        for m in &rec.members {
            for _ in 0..100 {
                let r = relabel(m, &mut rng);
                assert!(catalog::match_cycle_exception(&r, &rec.cycle).is_some());
            }
        }
    }
    line(
        "matching",
        true,
        "relabeling-invariant over 100 trials per record",
    );
}

// no two finite records coincide
#[test]
fn finite_records_are_distinct() {
    let mut seen = std::collections::BTreeSet::new();
    for rec in catalog::finite_path_exceptions() {
        let key = (
            rec.tournament.canonical_form().bit_string(),
            rec.path.to_string(),
        );
        assert!(seen.insert(key), "duplicate record Exc {}", rec.id);
    }
}
