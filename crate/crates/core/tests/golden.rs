use std::fs;
use std::path::Path;

use electroloc::ncalg::RenderOptions;
use electroloc::scalars::MonomialOrder;
use electroloc::suite::{diff_snapshots, golden_snapshot, render_snapshot};

const NAMES: [&str; 2] = ["Xh[0]", "C[0]"];

fn committed() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden"))
}

#[test]
fn committed_snapshots_match() {
    let differing = diff_snapshots(&NAMES, committed(), &RenderOptions::default()).unwrap();
    assert!(differing.is_empty(), "stale golden files: {differing:?}");
}

#[test]
fn two_runs_write_identical_files() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let opts = RenderOptions::default();
    let first = golden_snapshot(&NAMES, a.path(), &opts).unwrap();
    let second = golden_snapshot(&NAMES, b.path(), &opts).unwrap();
    assert_eq!(first.len(), NAMES.len());
    for (p, q) in first.iter().zip(&second) {
        assert_eq!(p.file_name(), q.file_name());
        assert_eq!(fs::read(p).unwrap(), fs::read(q).unwrap());
    }
}

#[test]
fn changed_monomial_order_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    golden_snapshot(&NAMES, dir.path(), &RenderOptions::default()).unwrap();
    let descending = RenderOptions {
        order: MonomialOrder::Descending,
        ..RenderOptions::default()
    };
    let differing = diff_snapshots(&NAMES, dir.path(), &descending).unwrap();
    assert_eq!(differing, NAMES.map(String::from).to_vec());
}

#[test]
fn snapshot_starts_with_expression_header() {
    let text = render_snapshot("Xh[0]", &RenderOptions::default()).unwrap();
    assert!(text.starts_with("# Xh[0]\n"));
    assert!(text.lines().any(|l| l == "x0"));
}
