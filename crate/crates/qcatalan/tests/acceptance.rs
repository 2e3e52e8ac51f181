//! Acceptance gate: each test drives the named checks behind one contract
//! criterion at its full default bound and prints a pass/fail line per
//! check.  Run with `--nocapture` to see the lines for passing criteria.

use qcatalan::verify::{find_check, CheckReport};

fn run_criterion(criterion: &str, names: &[&str]) {
    let reports: Vec<CheckReport> = names
        .iter()
        .map(|n| find_check(n).unwrap_or_else(|| panic!("unknown check {n}")).run(None))
        .collect();
    let mut failures = Vec::new();
    for r in &reports {
        let tag = if r.passed() { "PASS" } else { "FAIL" };
        println!("[{tag}] {criterion} :: {} (n <= {})", r.name, r.max_n);
        if !r.passed() {
            failures.push(format!(
                "{}: {}",
                r.name,
                r.counterexample.as_deref().unwrap_or("no counterexample recorded")
            ));
        }
    }
    assert!(failures.is_empty(), "{criterion} failed:\n{}", failures.join("\n"));
}

#[test]
fn criterion_01_inv_route_agreement() {
    run_criterion("criterion-01", &["inv-routes", "inv-recursions"]);
}

#[test]
fn criterion_02_maj_route_agreement() {
    run_criterion("criterion-02", &["maj-routes"]);
}

#[test]
fn criterion_03_bijection_suites() {
    run_criterion(
        "criterion-03",
        &[
            "motzkin-bijection",
            "restricted-motzkin-bijection",
            "shadow-bijection",
            "polyomino-bijection",
            "shorten-bijection",
        ],
    );
}

#[test]
fn criterion_04_sumpeaks_sumtunnels() {
    run_criterion("criterion-04", &["sumpeaks-sumtunnels"]);
}

#[test]
fn criterion_05_peak_recursions_and_decompositions() {
    run_criterion("criterion-05", &["dyck-stats-recursions", "peak-decompositions"]);
}

#[test]
fn criterion_06_polyomino_bridge() {
    run_criterion("criterion-06", &["polyomino-bridge"]);
}

#[test]
fn criterion_07_parallelogram_restricted_sum() {
    run_criterion("criterion-07", &["parallelogram-maj-sum"]);
}

#[test]
fn criterion_08_symmetry_unimodality_log_concavity() {
    run_criterion("criterion-08", &["maj-symmetry", "unimodality", "log-concavity"]);
}

#[test]
fn criterion_09_parity_structure() {
    run_criterion("criterion-09", &["parity"]);
}

#[test]
fn criterion_10_signed_enumeration() {
    run_criterion(
        "criterion-10",
        &[
            "signed-routes",
            "signed-catalan",
            "symmetric-dyck",
            "signed-quadratic",
            "signed-ode",
        ],
    );
}

#[test]
fn criterion_11_refined_functional_equation() {
    run_criterion("criterion-11", &["functional-equation"]);
}

#[test]
fn criterion_12_lrm_exc_fix() {
    run_criterion("criterion-12", &["lrm-exc-fix"]);
}

#[test]
fn supplementary_checks() {
    run_criterion(
        "supplementary",
        &[
            "nee-correspondence",
            "weighted-motzkin",
            "even-odd-parts",
            "jacobi-refined",
            "motzkin-decomposition",
            "avoidance-oracle",
            "counts",
            "cf-depth-stability",
            "narayana",
            "shadow-polyomino-link",
        ],
    );
}
