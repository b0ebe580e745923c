//! Golden files of normal-form renderings.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::expr::{parse, EvalConfig, Evaluator};
use crate::ncalg::RenderOptions;

use super::DEFAULT_ORDER;

/// `Xh[0]` becomes `Xh_0.txt`.
pub fn snapshot_file_name(expr: &str) -> String {
    let mut name: String = expr
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    while name.contains("__") {
        name = name.replace("__", "_");
    }
    format!("{}.txt", name.trim_matches('_'))
}

pub fn render_snapshot(expr: &str, opts: &RenderOptions) -> Result<String> {
    let e = parse(expr)?;
    let value = Evaluator::new(EvalConfig {
        order: Some(DEFAULT_ORDER),
    })
    .eval(&e)?;
    Ok(format!("# {e}\n{}", value.render_plain(opts)))
}

/// Writes one file per expression into `dir`.
pub fn golden_snapshot(names: &[&str], dir: &Path, opts: &RenderOptions) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    names
        .iter()
        .map(|n| {
            let path = dir.join(snapshot_file_name(n));
            fs::write(&path, render_snapshot(n, opts)?)?;
            Ok(path)
        })
        .collect()
}

/// Expressions whose file in `dir` is missing or differs from a fresh
/// rendering.
pub fn diff_snapshots(names: &[&str], dir: &Path, opts: &RenderOptions) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for n in names {
        let fresh = render_snapshot(n, opts)?;
        let stored = fs::read_to_string(dir.join(snapshot_file_name(n))).ok();
        if stored.as_deref() != Some(fresh.as_str()) {
            out.push(n.to_string());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names() {
        assert_eq!(snapshot_file_name("Xh[0]"), "Xh_0.txt");
        assert_eq!(
            snapshot_file_name("comm(Xh[1], Xh[2])"),
            "comm_Xh_1_Xh_2.txt"
        );
    }
}
