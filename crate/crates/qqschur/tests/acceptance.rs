//! Acceptance suite: one test per acceptance criterion, each pinned to its
//! stated rank and tolerance (all checks here are exact identities).  Every
//! test prints a single pass/fail line; `cargo test` output carries the
//! same information through the test names.

use qqschur::par::Exec;
use qqschur::verify::{run_suite, SuiteReport, VerifyOpts};

fn opts(r: usize) -> VerifyOpts {
    VerifyOpts {
        r,
        n: None,
        exec: Exec::Par,
        seed: 0x5eed,
    }
}

fn require(criterion: usize, label: &str, rep: SuiteReport) {
    let status = if rep.ok() { "pass" } else { "FAIL" };
    println!(
        "criterion {} ({}): {} [{} cases, {} ms]",
        criterion,
        label,
        status,
        rep.cases(),
        rep.millis
    );
    if let Some(f) = &rep.failure {
        panic!("criterion {} failed: {}", criterion, f);
    }
}

#[test]
fn criterion_1_hecke_presentation() {
    let rep = run_suite("hecke-relations", &opts(4)).unwrap();
    require(1, "defining relations and group specialization, r<=4", rep);
}

#[test]
fn criterion_2_module_bases() {
    let rep = run_suite("module-bases", &opts(4)).unwrap();
    require(2, "bitabloid counts and generator relations, r<=4", rep);
}

#[test]
fn criterion_3_one_dimensionality() {
    let rep = run_suite("specht-onedim", &opts(3)).unwrap();
    require(3, "one-dimensional sandwich and rewritings, r<=3", rep);
}

#[test]
fn criterion_4_standard_basis() {
    let rep = run_suite("standard-basis", &opts(3)).unwrap();
    require(
        4,
        "triple count = commutant dimension, maps independent, r<=3",
        rep,
    );
}

#[test]
fn criterion_5_coset_congruences() {
    let rep = run_suite("coset-congruences", &opts(3)).unwrap();
    require(5, "reduction congruences and inner identity, r<=3", rep);
}

#[test]
fn criterion_6_semistandard_basis() {
    let rep = run_suite("semistandard-basis", &opts(4)).unwrap();
    require(
        6,
        "weight ranks generic r<=3 and at one r<=4, leading terms, integrality",
        rep,
    );
}

#[test]
fn criterion_7_gram_identity() {
    let rep = run_suite("gram-identity", &opts(4)).unwrap();
    require(7, "closed Gram value of the canonical generator, r<=4", rep);
}

#[test]
fn criterion_8_genericity() {
    let rep = run_suite("genericity", &opts(2)).unwrap();
    require(
        8,
        "structure constants specialize correctly, r<=2, three fields",
        rep,
    );
}

#[test]
fn criterion_9_worked_examples() {
    let rep = run_suite("worked-examples", &opts(3)).unwrap();
    require(9, "documented worked examples, byte-exact", rep);
}

// Supporting invariant suites; not numbered criteria but part of `verify all`.

#[test]
fn supporting_coeff_ring_invariants() {
    let rep = run_suite("coeff-ring", &opts(2)).unwrap();
    assert!(rep.ok(), "{:?}", rep.failure);
}

#[test]
fn supporting_weyl_group_invariants() {
    let rep = run_suite("weyl-group", &opts(3)).unwrap();
    assert!(rep.ok(), "{:?}", rep.failure);
}

#[test]
fn supporting_hecke_element_identities() {
    let rep = run_suite("hecke-elements", &opts(4)).unwrap();
    assert!(rep.ok(), "{:?}", rep.failure);
}

#[test]
fn supporting_form_and_endomorphism_identities() {
    let rep = run_suite("forms", &opts(3)).unwrap();
    assert!(rep.ok(), "{:?}", rep.failure);
}
