//! Acceptance suite: one test per headline guarantee, each printing a
//! PASS line with the measured values (visible under `--nocapture`).

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use linbound::element_orders::{
    construct_even_order_element, dixon_mortimer_lower_log2, epsilon_enclosure, sieve,
    verify_theorem43_side_conditions, Parity,
};
use linbound::exactmath::{
    certified_strictly_greater, log2_of_natural, refine_to_decision, DyadicRational, Natural,
    DEFAULT_PRECISION,
};
use linbound::factorial_bounds::{
    elementary_lower_log2_factorial_pow2, elementary_upper_log2_factorial_pow2,
    stirling_log2_factorial_bounds, verify_induction_chain,
};
use linbound::oracles::{
    factorial_exact, gl_max_even_order_exhaustive, landau_constrained_exact, PartitionConstraint,
};
use linbound::verify::{run_suite_with, FormulaMutation, Formulas, SuiteSelection};

fn run_cli(args: &[&str]) -> (Value, Duration) {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_linbound"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(
        output.status.success(),
        "CLI failed: {:?}\nstderr: {}",
        args,
        String::from_utf8_lossy(&output.stderr)
    );
    let value =
        serde_json::from_slice(&output.stdout).expect("analyze --format json emits valid JSON");
    (value, elapsed)
}

fn engine_m_min(report: &Value, engine: &str) -> u64 {
    report["engines"][engine]["m_min"]
        .as_u64()
        .unwrap_or_else(|| panic!("engine {engine} missing m_min in {report}"))
}

#[test]
fn criterion_01_aes_flagship_both_engines_agree_on_67() {
    let (report, elapsed) = run_cli(&[
        "analyze",
        "--block-bits",
        "128",
        "--group",
        "alt",
        "--engines",
        "elementary,order-analytic",
        "--format",
        "json",
    ]);
    assert_eq!(engine_m_min(&report, "elementary"), 67);
    assert_eq!(engine_m_min(&report, "order-analytic"), 67);
    assert!(
        elapsed < Duration::from_secs(60),
        "flagship run took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE PASS: criterion 1 — AES flagship: counting and order engines both report m_min = 67 in {elapsed:?}"
    );
}

#[test]
fn criterion_02_stirling_engine_reports_68() {
    let (report, _) = run_cli(&[
        "analyze",
        "--block-bits",
        "128",
        "--group",
        "alt",
        "--engines",
        "stirling",
        "--format",
        "json",
    ]);
    assert_eq!(engine_m_min(&report, "stirling"), 68);
    println!("ACCEPTANCE PASS: criterion 2 — Stirling refinement reports m_min = 68");
}

#[test]
fn criterion_03_64_bit_counting_reports_33() {
    let (report, _) = run_cli(&[
        "analyze",
        "--block-bits",
        "64",
        "--group",
        "alt",
        "--format",
        "json",
    ]);
    assert_eq!(engine_m_min(&report, "elementary"), 33);
    println!("ACCEPTANCE PASS: criterion 3 — 64-bit counting bound reports m_min = 33");
}

#[test]
fn criterion_04_lemma_chain_checks() {
    // inequality (4) form at n = 128 in exact integer arithmetic
    let l = elementary_lower_log2_factorial_pow2(128).unwrap();
    assert!(Natural::from(128u64).pow(19) < l);
    // induction step for every 2 <= n <= 128
    let chain = verify_induction_chain(128).unwrap();
    let passed = chain.checks.iter().filter(|c| c.passed).count();
    assert_eq!(passed, 127);
    assert!(chain.all_passed);
    println!(
        "ACCEPTANCE PASS: criterion 4 — 128^19 < n + (n-2)2^n + 2 exactly; induction steps {passed}/127"
    );
}

#[test]
fn criterion_05_sandwich_for_n_2_to_16() {
    let start = Instant::now();
    let mut cases = 0;
    for n in 2u32..=16 {
        let fact = factorial_exact(1u64 << n).unwrap();
        let exact = log2_of_natural(&fact, 96).unwrap();
        let lower = DyadicRational::from_natural(&elementary_lower_log2_factorial_pow2(n).unwrap());
        let upper = DyadicRational::from_natural(&elementary_upper_log2_factorial_pow2(n).unwrap());
        assert!(exact.lo() > &lower, "elementary lower fails at n={n}");
        assert!(exact.hi() < &upper, "elementary upper fails at n={n}");
        let stirling = stirling_log2_factorial_bounds(&Natural::pow2(u64::from(n)), 96).unwrap();
        assert!(stirling.lo() < exact.lo(), "Stirling lower fails at n={n}");
        assert!(exact.hi() < stirling.hi(), "Stirling upper fails at n={n}");
        cases += 1;
    }
    let elapsed = start.elapsed();
    assert_eq!(cases, 15);
    assert!(
        elapsed < Duration::from_secs(300),
        "sandwich run took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE PASS: criterion 5 — exact log2(2^n!) strictly inside both enclosures, {cases}/15 cases (including 65536!) in {elapsed:?}"
    );
}

#[test]
fn criterion_06_darafsheh_attainment_by_exhaustion() {
    assert_eq!(
        gl_max_even_order_exhaustive(4).unwrap(),
        Natural::from(6u64)
    );
    let start = Instant::now();
    let n5 = gl_max_even_order_exhaustive(5).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(n5, Natural::from(14u64));
    assert!(
        elapsed < Duration::from_secs(600),
        "GL(5,2) sweep took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE PASS: criterion 6 — exhaustive GL maxima 6 (N=4) and 14 (N=5) equal 2^(N-1)-2; N=5 sweep in {elapsed:?}"
    );
}

#[test]
fn criterion_07_constructive_landau() {
    // flagship witness on 128 points
    let witness = construct_even_order_element(128, DEFAULT_PRECISION).unwrap();
    assert_eq!(witness.order, Natural::from(223_092_870u64));
    assert_eq!(witness.structure.parity(), Parity::Even);
    // strict certified exceedance of the analytic guarantee at 128 points
    let points = Natural::from(128u64);
    let exceeds = refine_to_decision(DEFAULT_PRECISION, "witness vs analytic bound", |bits| {
        let lhs = log2_of_natural(&witness.order, bits)?;
        let rhs = dixon_mortimer_lower_log2(&points, bits)?;
        Ok(certified_strictly_greater(&lhs, &rhs))
    })
    .unwrap();
    assert!(exceeds);

    // the exhaustive oracle dominates the construction on 7..=80 points
    let constraint = PartitionConstraint {
        require_even_parity: true,
        require_even_order: true,
    };
    for pts in 7u32..=80 {
        let oracle = landau_constrained_exact(pts, constraint).unwrap();
        let w = construct_even_order_element(u64::from(pts), 32).unwrap();
        assert!(
            oracle >= w.order,
            "oracle maximum below constructed order at {pts} points"
        );
    }
    println!(
        "ACCEPTANCE PASS: criterion 7 — order 223092870 (even parity) certifiably exceeds the analytic bound; oracle >= construction on all of 7..=80 points"
    );
}

#[test]
fn criterion_08_epsilon_certified_between_1_69_and_1_70() {
    let eps = epsilon_enclosure(128);
    // strict rational comparisons: lo > 169/100 and hi < 170/100
    let lo_gate = DyadicRational::from_u64(169)
        .div_ceil(&DyadicRational::from_u64(100), 96)
        .unwrap();
    let hi_gate = DyadicRational::from_u64(170)
        .div_floor(&DyadicRational::from_u64(100), 96)
        .unwrap();
    assert!(eps.lo() > &lo_gate);
    assert!(eps.hi() < &hi_gate);
    println!(
        "ACCEPTANCE PASS: criterion 8 — epsilon enclosed in [{:.8}, {:.8}], inside (1.69, 1.70)",
        eps.lo().to_f64(),
        eps.hi().to_f64()
    );
}

#[test]
fn criterion_09_side_conditions_machine_verified() {
    let report = verify_theorem43_side_conditions(DEFAULT_PRECISION).unwrap();
    assert_eq!(report.conditions.len(), 3);
    for c in &report.conditions {
        assert!(c.passed, "side condition failed: {} ({})", c.name, c.detail);
    }
    // the prime-sum saturation the proof quotes: 4 + sum of odd primes
    // through 19 is exactly 79
    let s: u64 = sieve(19).odd_primes().sum();
    assert_eq!(4 + s, 79);
    println!("ACCEPTANCE PASS: criterion 9 — side conditions (i)-(iii) verified with certified intervals");
}

#[test]
fn criterion_10_single_exponent_mutations_are_caught() {
    let mutations = FormulaMutation::all();
    assert_eq!(mutations.len(), 14);
    for mutation in mutations {
        let report = run_suite_with(
            SuiteSelection::All,
            &Formulas::mutated(mutation),
            true, // stop at the first failure; one is all the claim needs
        );
        assert!(
            !report.all_passed(),
            "suite failed to detect mutation {mutation:?}"
        );
    }
    // and the pristine table passes the cheap sections end to end
    let pristine = run_suite_with(SuiteSelection::Lemma31, &Formulas::pristine(), false);
    assert!(pristine.all_passed());
    println!(
        "ACCEPTANCE PASS: criterion 10 — all 14 single-exponent formula mutations trip at least one suite check"
    );
}
