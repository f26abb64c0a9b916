//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. The corpus is computed once and shared across criteria.

use std::sync::{Arc, LazyLock};

use wreathgap::groups::{all_wreath_elements, builtin_group, FiniteGroupTable};
use wreathgap::verify::{
    default_corpus, run_corpus, CheckResult, CheckStatus, EntryResult, Guards,
};
use wreathgap::wreath_reps::enumerate_wn_irreps;

static CORPUS: LazyLock<Vec<EntryResult>> =
    LazyLock::new(|| run_corpus::<f64>(&default_corpus(), &Guards::default()));

fn verdict(name: &str, ok: bool, detail: &str) {
    println!(
        "[acceptance] {name}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{name}: {detail}");
}

fn checks_named<'a>(prefix: &'a str) -> impl Iterator<Item = (&'a str, &'a CheckResult)> + 'a {
    CORPUS.iter().flat_map(move |entry| {
        entry
            .results
            .iter()
            .filter(move |r| r.check_name.starts_with(prefix))
            .map(move |r| (entry.label.as_str(), r))
    })
}

const CRITERION_GROUPS: [(&str, usize); 6] = [
    ("C2", 2),
    ("C2", 3),
    ("C3", 2),
    ("C3", 3),
    ("S3", 2),
    ("S3", 3),
];

fn group_order(name: &str) -> usize {
    builtin_group::<f64>(name).unwrap().order()
}

#[test]
fn criterion_1_oracle_identity() {
    // Every (G, n) in {C2,C3,S3} x {2,3} with |G|^n n! <= 2000, every
    // corpus hypergraph: the regular multiset equals the per-irrep union
    // within 1e-8 * (1 + |L|). Runtime under 60 s total.
    let mut failures = Vec::new();
    let mut oracle_runs = 0usize;
    let mut elapsed = 0.0f64;
    for (group, n) in CRITERION_GROUPS {
        let order = group_order(group).pow(n as u32) * (1..=n).product::<usize>();
        assert!(order <= 2000, "corpus (G,n) exceeds the criterion guard");
        let entries: Vec<&EntryResult> = CORPUS
            .iter()
            .filter(|e| e.group == group && e.n == n)
            .collect();
        assert!(
            !entries.is_empty(),
            "corpus has no ({group}, {n}) entries"
        );
        for entry in entries {
            for r in entry
                .results
                .iter()
                .filter(|r| r.check_name.starts_with("oracle["))
            {
                oracle_runs += 1;
                elapsed += r.elapsed_secs;
                if r.status != CheckStatus::Pass {
                    failures.push(format!("{} :: {}", entry.label, r.check_name));
                }
            }
        }
    }
    verdict(
        "criterion 1 (oracle identity)",
        failures.is_empty() && oracle_runs > 0 && elapsed < 60.0,
        &format!("{oracle_runs} oracle runs in {elapsed:.1}s; failures: {failures:?}"),
    );
}

#[test]
fn criterion_2_main_theorem() {
    // Equality within 1e-8 on the full corpus (>= 50 triples), including
    // the K3 anchor value 3/2 at n = 3.
    let results: Vec<(&str, &CheckResult)> = checks_named("main_theorem").collect();
    let triples = results.len();
    let failures: Vec<&str> = results
        .iter()
        .filter(|(_, r)| r.status == CheckStatus::Fail)
        .map(|(label, _)| *label)
        .collect();

    let anchor_ok = CORPUS
        .iter()
        .filter(|e| e.n == 3 && e.hypergraph_tag == "complete_graph")
        .flat_map(|e| e.results.iter())
        .filter(|r| r.check_name.starts_with("main_theorem"))
        .all(|r| {
            (r.lhs.unwrap() - 1.5).abs() <= 1e-8 && (r.rhs.unwrap() - 1.5).abs() <= 1e-8
        });

    verdict(
        "criterion 2 (main theorem equality)",
        triples >= 50 && failures.is_empty() && anchor_ok,
        &format!("{triples} triples; anchor 3/2 ok: {anchor_ok}; failures: {failures:?}"),
    );
}

#[test]
fn criterion_3_prop_star() {
    // lambda_min(std) <= min-degree everywhere; strict by more than 1e-7
    // without almost-isolated vertices (the check enforces 10 * tol).
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (label, r) in checks_named("prop_star") {
        checked += 1;
        if r.status == CheckStatus::Fail {
            failures.push(label.to_string());
        }
    }
    // Spot anchor: K3 has 1.5 vs 2.
    let anchor_ok = CORPUS
        .iter()
        .filter(|e| e.n == 3 && e.hypergraph_tag == "complete_graph")
        .flat_map(|e| e.results.iter())
        .filter(|r| r.check_name.starts_with("prop_star"))
        .all(|r| (r.lhs.unwrap() - 1.5).abs() <= 1e-8 && (r.rhs.unwrap() - 2.0).abs() <= 1e-12);
    verdict(
        "criterion 3 (proposition star)",
        checked > 0 && failures.is_empty() && anchor_ok,
        &format!("{checked} instances; failures: {failures:?}"),
    );
}

#[test]
fn criterion_4_prop_gap() {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (label, r) in checks_named("prop_gap") {
        checked += 1;
        if r.status == CheckStatus::Fail {
            failures.push(label.to_string());
        }
    }
    verdict(
        "criterion 4 (proposition gap)",
        checked > 0 && failures.is_empty(),
        &format!("{checked} instances; failures: {failures:?}"),
    );
}

#[test]
fn criterion_5_structural_suite() {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (label, r) in checks_named("structural") {
        checked += 1;
        if r.status == CheckStatus::Fail {
            failures.push(format!("{label}: {:?}", r.witnesses));
        }
    }
    verdict(
        "criterion 5 (structural suite)",
        checked > 0 && failures.is_empty(),
        &format!("{checked} suites; failures: {failures:?}"),
    );
}

#[test]
fn criterion_6_classification_identities() {
    // Sum of dim^2 = |G|^n n! in exact integer arithmetic, and character
    // norm 1 +- 1e-8 per constructed irrep for |W_n| <= 1536.
    let mut lines = Vec::new();
    let mut ok = true;
    let mut pairs: Vec<(&str, usize)> = CRITERION_GROUPS.to_vec();
    pairs.push(("C2", 4));
    for (group, n) in pairs {
        let g: Arc<FiniteGroupTable<f64>> = Arc::new(builtin_group(group).unwrap());
        let order = g.order().pow(n as u32) * (1..=n).product::<usize>();
        let irreps = enumerate_wn_irreps(&g, n, None).unwrap();
        let sum_sq: usize = irreps.iter().map(|r| r.dimension().pow(2)).sum();
        if sum_sq != order {
            ok = false;
            lines.push(format!("({group},{n}): sum dim^2 {sum_sq} != {order}"));
            continue;
        }
        if order <= 1536 {
            let elements = all_wreath_elements(g.as_ref(), n);
            for rho in &irreps {
                let norm: f64 = elements
                    .iter()
                    .map(|w| rho.character(w).norm_sqr())
                    .sum::<f64>()
                    / order as f64;
                if (norm - 1.0).abs() > 1e-8 {
                    ok = false;
                    lines.push(format!(
                        "({group},{n}): character norm {norm} for {}",
                        rho.label()
                    ));
                }
            }
        }
    }
    verdict(
        "criterion 6 (classification identities)",
        ok,
        &format!("{lines:?}"),
    );
}

#[test]
fn criterion_7_caputo_instances() {
    // Three-way equality on pairs, mean-field, top-heavy and AKP classes.
    let mut by_class = [0usize; 4];
    let mut failures = Vec::new();
    for (label, r) in checks_named("caputo") {
        if r.status == CheckStatus::Fail {
            failures.push(label.to_string());
        }
        if r.check_name.contains("PairsAndSingletons") {
            by_class[0] += 1;
        } else if r.check_name.contains("MeanField") {
            by_class[1] += 1;
        } else if r.check_name.contains("TuplesNMinus1") {
            by_class[2] += 1;
        } else if r.check_name.contains("Akp") {
            by_class[3] += 1;
        }
    }
    verdict(
        "criterion 7 (verified instances)",
        failures.is_empty() && by_class.iter().all(|&c| c > 0),
        &format!(
            "pairs/mean-field/top-heavy/akp counts {by_class:?}; failures: {failures:?}"
        ),
    );
}

#[test]
fn criterion_8_remark_tuples() {
    // n = 3 and n = 4 over C2 with weights on |B| >= n-1: flat spectra
    // outside the remark's family.
    let mut n3 = 0usize;
    let mut n4 = 0usize;
    let mut failures = Vec::new();
    for (label, r) in checks_named("remark_tuples") {
        if r.status == CheckStatus::Fail {
            failures.push(label.to_string());
        }
        if r.check_name.contains("n=3") {
            n3 += 1;
        }
        if r.check_name.contains("n=4") {
            n4 += 1;
        }
    }
    verdict(
        "criterion 8 (remark on (n-1)-tuples)",
        n3 > 0 && n4 > 0 && failures.is_empty(),
        &format!("n=3 runs {n3}, n=4 runs {n4}; failures: {failures:?}"),
    );
}

#[test]
fn corpus_has_no_failures_or_guard_skips() {
    // The harness-level invariant: deterministic full-corpus run with every
    // proof-structure implication intact.
    let mut fail = 0usize;
    let mut skipped = 0usize;
    let mut implications = 0usize;
    for entry in CORPUS.iter() {
        for r in &entry.results {
            match r.status {
                CheckStatus::Fail => fail += 1,
                CheckStatus::Skipped => skipped += 1,
                CheckStatus::Pass => {}
            }
            if r.check_name.starts_with("implication") {
                implications += 1;
            }
        }
    }
    verdict(
        "corpus sanity (no failures, implications asserted)",
        fail == 0 && skipped == 0 && implications == CORPUS.len(),
        &format!(
            "{} entries, {fail} failures, {skipped} skips, {implications} implications",
            CORPUS.len()
        ),
    );
}
