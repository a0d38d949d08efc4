//! Acceptance suite: each check runs a closed-form result against its
//! independent oracle at the pinned tolerance and prints a pass/fail line.

use pdmosc::verify;

fn run(f: fn() -> pdmosc::Result<verify::CheckResult>) {
    let r = f().expect("criterion errored");
    println!("[{}] {} -- {}", if r.passed { "pass" } else { "FAIL" }, r.name, r.detail);
    assert!(r.passed, "{}: {}", r.name, r.detail);
}

#[test]
fn criterion_01_spectrum_oracle() {
    run(verify::criterion_spectrum_oracle);
}

#[test]
fn criterion_02_classical_oracle() {
    run(verify::criterion_classical_oracle);
}

#[test]
fn criterion_03_morse_catalog() {
    run(verify::criterion_morse_catalog);
}

#[test]
fn criterion_04_expectations() {
    run(verify::criterion_expectations);
}

#[test]
fn criterion_05_uncertainty_sweep() {
    run(verify::criterion_uncertainty_sweep);
}

#[test]
fn criterion_06_algebra() {
    run(verify::criterion_algebra);
}

#[test]
fn criterion_07_coherent() {
    run(verify::criterion_coherent);
}

#[test]
fn criterion_08_classical_limit() {
    run(verify::criterion_classical_limit);
}

#[test]
fn criterion_09_cat_overlap() {
    run(verify::criterion_cat_overlap);
}

#[test]
fn criterion_10_correspondence() {
    run(verify::criterion_correspondence);
}
