use super::{IdentityReport, Status};

const RESIDUAL_WIDTH: usize = 120;

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

fn clip(s: &str) -> String {
    let mut out: String = s.chars().take(RESIDUAL_WIDTH).collect();
    if s.chars().count() > RESIDUAL_WIDTH {
        out.push_str(" ...");
    }
    out.replace('|', "\\|")
}

pub(super) fn markdown(r: &IdentityReport) -> String {
    let mut out = format!("# {}\n\n", r.suite);
    if let Some(n) = r.config.order {
        out.push_str(&format!("Series order: {n}\n\n"));
    }
    out.push_str(&format!(
        "**{} / {} passed**, {} failed, {} errors\n\n",
        r.totals.pass, r.totals.total, r.totals.fail, r.totals.error
    ));
    out.push_str("| name | tag | status | order | ms |\n|---|---|---|---|---:|\n");
    for e in &r.entries {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {:.1} |\n",
            e.name,
            e.tag,
            status_word(e.status),
            e.order,
            e.ms
        ));
    }
    let coefficients: Vec<_> = r
        .entries
        .iter()
        .flat_map(|e| e.coefficients.iter().map(move |(k, v)| (&e.name, k, v)))
        .collect();
    if !coefficients.is_empty() {
        out.push_str(
            "\n## Extracted coefficients\n\n| entry | coefficient | value |\n|---|---|---|\n",
        );
        for (name, k, v) in coefficients {
            out.push_str(&format!("| {name} | {k} | {v} |\n"));
        }
    }
    let failures: Vec<_> = r
        .entries
        .iter()
        .filter(|e| e.status != Status::Pass)
        .collect();
    if !failures.is_empty() {
        out.push_str("\n## Residuals\n\n");
        for e in failures {
            out.push_str(&format!("- `{}`: {}\n", e.name, clip(&e.residual)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::suite::{run_suite, Manifest, SuiteConfig};

    #[test]
    fn markdown_lists_failures() {
        let m = Manifest::parse("[t]\nok := M == M @ exact\nbad := M == D @ exact").unwrap();
        let md = run_suite("demo", &m, &SuiteConfig::default())
            .unwrap()
            .to_markdown();
        assert!(md.starts_with("# demo\n"));
        assert!(md.contains("**1 / 2 passed**"));
        assert!(md.contains("| bad | t | FAIL | exact |"));
        assert!(md.contains("## Residuals"));
    }
}
