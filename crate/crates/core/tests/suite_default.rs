use electroloc::suite::{default_manifest, negative_controls, run_suite, Status, SuiteConfig};

fn config(filter: Option<&str>, parallelism: Option<usize>) -> SuiteConfig {
    SuiteConfig {
        order: None,
        filter: filter.map(String::from),
        parallelism,
    }
}

#[test]
fn shipped_manifest_passes() {
    let manifest = default_manifest().unwrap();
    let report = run_suite("default", &manifest, &config(None, None)).unwrap();
    let failing: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.status != Status::Pass)
        .map(|e| format!("{} {}", e.name, e.residual))
        .collect();
    assert!(failing.is_empty(), "{failing:#?}");
    assert_eq!(report.totals.total, manifest.entries.len());

    let spin = report.entry("spin_magnitude").unwrap();
    assert_eq!(spin.coefficients.values().collect::<Vec<_>>(), ["-3/4"]);
    let svec = report.entry("spin_vector_magnitude").unwrap();
    assert_eq!(svec.coefficients, spin.coefficients);
    let forms = report.entry("hermitian_forms").unwrap();
    assert_eq!(forms.coefficients["mass hbar^2 coefficient"], "3/4");
    assert_eq!(forms.coefficients["momentum hbar^2 coefficient"], "3/32");
}

#[test]
fn every_tag_is_populated() {
    let manifest = default_manifest().unwrap();
    for tag in [
        "hermitian",
        "canonical",
        "clifford",
        "conformal",
        "frames",
        "adjoint",
    ] {
        assert!(
            manifest.entries.iter().filter(|e| e.tag == tag).count() >= 10,
            "{tag}"
        );
    }
}

#[test]
fn flipped_identities_all_fail() {
    let controls = negative_controls(&default_manifest().unwrap());
    assert!(controls.entries.len() > 500);
    let report = run_suite("controls", &controls, &config(None, None)).unwrap();
    let passing: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.status == Status::Pass)
        .map(|e| e.name.clone())
        .collect();
    assert!(passing.is_empty(), "{passing:?}");
}

#[test]
fn report_is_independent_of_thread_count() {
    let manifest = default_manifest().unwrap();
    for tag in ["hermitian", "conformal"] {
        let one = run_suite("default", &manifest, &config(Some(tag), Some(1))).unwrap();
        let four = run_suite("default", &manifest, &config(Some(tag), Some(4))).unwrap();
        let (one, four) = (one.without_timings(), four.without_timings());
        assert_eq!(one.to_json(), four.to_json());
        assert_eq!(one.to_markdown(), four.to_markdown());
    }
}

#[test]
fn filter_selects_a_single_tag() {
    let report = run_suite(
        "default",
        &default_manifest().unwrap(),
        &config(Some("adjoint"), None),
    )
    .unwrap();
    assert!(report.all_passed());
    assert!(report.entries.iter().all(|e| e.tag == "adjoint"));
}
