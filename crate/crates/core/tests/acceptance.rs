//! Acceptance gate: each criterion runs its default grid with exact equality
//! and prints one `PASS`/`FAIL` line.

use std::time::{Duration, Instant};

use wreath_fock::oracle::verify::delta_eig_report;
use wreath_fock::report::Report;
use wreath_fock::{verify, VerifyParams, THEOREMS};

fn default_run(theorem: &str) -> Report {
    verify(theorem, &VerifyParams::default()).unwrap_or_else(|e| panic!("{theorem}: {e}"))
}

fn failures(r: &Report) -> String {
    r.instances
        .iter()
        .filter(|i| i.counterexample.is_some())
        .take(3)
        .map(|i| format!("{} {:?}", i.id, i.counterexample))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Prints the result line and panics on failure, including exceeding the
/// time limit.
fn gate(label: &str, limit: Duration, start: Instant, reports: &[Report], extra: Result<(), String>) {
    let elapsed = start.elapsed();
    let total: usize = reports.iter().map(|r| r.summary.total).sum();
    let passed: usize = reports.iter().map(|r| r.summary.passed).sum();
    let in_time = elapsed <= limit;
    let ok = reports.iter().all(Report::all_pass) && total > 0 && extra.is_ok() && in_time;
    let slow = if in_time { "" } else { " (over time limit)" };
    println!(
        "{} {label}: {passed}/{total} instances, {:.2}s of {}s{slow}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    if !ok {
        let detail: Vec<String> = reports.iter().map(failures).filter(|s| !s.is_empty()).collect();
        panic!("{label} failed: {} {:?}", detail.join(" | "), extra.err());
    }
}

#[test]
fn criterion_1_symmetric_group_convolution() {
    let t = Instant::now();
    let r = default_run("th_symm");
    let degrees = if r.parameters.get("n").map(String::as_str) == Some("3,4,5,6") {
        Ok(())
    } else {
        Err(format!("grid {:?}", r.parameters.get("n")))
    };
    gate("1 th_symm", Duration::from_secs(10), t, &[r], degrees);
}

#[test]
fn criterion_2_wreath_convolution() {
    let t = Instant::now();
    let r = default_run("th_main");
    gate("2 th_main", Duration::from_secs(60), t, &[r], Ok(()));
}

#[test]
fn criterion_3_heisenberg_intertwining() {
    let t = Instant::now();
    let r = default_run("th_heis");
    gate("3 th_heis", Duration::from_secs(30), t, &[r], Ok(()));
}

#[test]
fn criterion_4_transposition_eigenvalues() {
    let t = Instant::now();
    let r = default_run("prop_reform");
    let table = delta_eig_report("trivial", 3).expect("delta-eig");
    let column: Vec<String> = table.table.as_ref().expect("table").rows.iter().map(|row| row[2].clone()).collect();
    let mut extra = if column == ["-3", "0", "3"] {
        Ok(())
    } else {
        Err(format!("n=3 eigenvalues {column:?}"))
    };
    let convolution = r.instances.iter().filter(|i| i.id.ends_with("convolution")).count();
    let operator = r.instances.iter().filter(|i| i.id.ends_with("operator")).count();
    // p(2..=5) = 2+3+5+7 and p(2..=6) adds 11
    if (convolution, operator) != (17, 28) {
        extra = Err(format!("expected 17 convolution and 28 operator checks, got {convolution} and {operator}"));
    }
    gate("4 prop_reform", Duration::from_secs(10), t, &[r, table], extra);
}

#[test]
fn criterion_5_virasoro_and_hamiltonian() {
    let t = Instant::now();
    let reports = [default_run("lem_ham"), default_run("virasoro")];
    let window = if reports.iter().all(|r| r.parameters["window"] == "8") {
        Ok(())
    } else {
        Err("window is not 8".to_string())
    };
    gate("5 lem_ham + virasoro", Duration::from_secs(20), t, &reports, window);
}

#[test]
fn criterion_6_cubic_heisenberg_commutator() {
    let t = Instant::now();
    let r = default_run("final");
    gate("6 final", Duration::from_secs(30), t, &[r], Ok(()));
}

#[test]
fn criterion_7_structural() {
    let t = Instant::now();
    let r = default_run("structural");
    gate("7 structural", Duration::from_secs(30), t, &[r], Ok(()));
}

#[test]
fn criterion_8_determinism() {
    let t = Instant::now();
    let suite = || -> Vec<Report> { THEOREMS.iter().map(|th| default_run(th)).collect() };
    let reports = suite();
    let first = wreath_fock::report::render_all(&reports, true);
    let second = wreath_fock::report::render_all(&suite(), true);
    let extra = if first == second {
        Ok(())
    } else {
        Err("reports differ between runs".to_string())
    };
    // no limit of its own: two passes over the whole suite
    gate("8 determinism", Duration::from_secs(600), t, &reports, extra);
}
