//! End-to-end gate: each test exercises one advertised guarantee at its
//! full range and asserts both correctness and a wall-clock budget.
//!
//! The tests share a mutex so the budgets measure one suite at a time.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use wittflag::verify::{self, SuiteReport};
use wittflag::witt::{self, FlagType};

static GATE: Mutex<()> = Mutex::new(());

fn gate() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn check(name: &str, report: SuiteReport) {
    let passed = report.failures() == 0;
    assert!(passed, "{name} failed:\n{}", report.render_text());
    println!("PASS {name}: {} items", report.items.len());
}

fn within(name: &str, budget: Duration, started: Instant) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "{name} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn worked_examples_reproduce_all_three_families() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::examples_suite();
    within("worked examples", Duration::from_secs(1), t);
    check("worked examples", report);
}

#[test]
fn relation_families_are_regular_with_matching_dimension() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::regularity_suite(5, 4);
    within("regularity range", Duration::from_secs(120), t);
    check("regularity range", report);
}

#[test]
fn surplus_members_reduce_to_verified_combinations() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::reduction_suite(5, 4);
    within("reduction range", Duration::from_secs(120), t);
    check("reduction range", report);
}

#[test]
fn power_series_kernel_and_recursion_identities() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::series_suite(4);
    within("series identities", Duration::from_secs(60), t);
    check("series identities", report);
}

#[test]
fn exterior_rank_closed_form_matches_expansion() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::appendix_suite(12);
    within("closed-form ranks", Duration::from_secs(1), t);
    check("closed-form ranks", report);
}

#[test]
fn emitted_tables_match_closed_form_ranks() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::tables_suite(7);
    within("rank tables", Duration::from_secs(60), t);
    check("rank tables", report);
}

#[test]
fn tate_classification_counts_at_bound_six() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::classification_suite(6);
    within("classification counts", Duration::from_secs(60), t);
    check("classification counts", report);
}

#[test]
fn lemma_witnesses_all_hold() {
    let _g = gate();
    let t = Instant::now();
    let report = verify::lemmas_suite();
    within("lemma witnesses", Duration::from_secs(1), t);
    check("lemma witnesses", report);
}

#[test]
fn anchor_presentations() {
    let _g = gate();
    let t = Instant::now();

    // Two-torsion concentrated in degree zero.
    let p = witt::compute(FlagType::A, 0, &[1, 2]).expect("A (1,2)");
    assert_eq!(p.ranks.dims, [1, 0, 0, 0]);
    assert!(p.exterior_generators.is_empty());

    // One exterior generator in degree -1.
    let p = witt::compute(FlagType::A, 0, &[1, 1, 1]).expect("A (1,1,1)");
    assert_eq!(p.ranks.dims, [1, 1, 0, 0]);
    assert_eq!(p.exterior_generators.len(), 1);
    assert_eq!(p.exterior_generators[0].name, "v1");
    assert_eq!(p.exterior_generators[0].degree, -1);

    let p = witt::compute(FlagType::C, 1, &[1]).expect("C m=1 (1)");
    assert_eq!(p.ranks.dims, [2, 1, 0, 1]);

    // Quotients by the full group collapse to the base field.
    let trivial: &[(FlagType, u64, &[u64])] = &[
        (FlagType::A, 0, &[4]),
        (FlagType::B, 4, &[]),
        (FlagType::C, 3, &[]),
        (FlagType::D, 5, &[]),
    ];
    for &(ft, m, blocks) in trivial {
        let p = witt::compute(ft, m, blocks)
            .unwrap_or_else(|e| panic!("{ft} m={m} {blocks:?}: {e}"));
        assert_eq!(p.ranks.dims, [1, 0, 0, 0], "{ft} m={m} {blocks:?}");
        assert!(p.exterior_generators.is_empty());
    }

    within("anchor presentations", Duration::from_secs(1), t);
    println!("PASS anchor presentations: 7 instances");
}
