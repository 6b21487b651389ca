//! Report rendering: JSON, CSV (one row per length), and a human table.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::census::CycleCensusReport;

pub fn to_json(report: &CycleCensusReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn from_json(text: &str) -> Result<CycleCensusReport, serde_json::Error> {
    serde_json::from_str(text)
}

/// One row per length. The `phi`/`lambda` columns sum over contained cycle
/// lengths; eigen columns appear only when the diagnostic was requested.
pub fn to_csv(report: &CycleCensusReport) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let eigen = report.eigen_diagnostic.as_ref();
    let mut header = vec![
        "n", "m", "c", "d", "girth", "length", "trace", "omega", "psi", "phi", "lambda", "count",
    ];
    if eigen.is_some() {
        header.extend(["eigen_trace", "eigen_rel_error"]);
    }
    writer.write_record(&header).expect("in-memory write");
    let g = &report.graph;
    for entry in &report.census {
        let (phi, lambda) = entry.psi.contributions.iter().fold(
            (BigUint::zero(), BigUint::zero()),
            |(p, l), part| (p + &part.phi, l + &part.lambda),
        );
        let mut row = vec![
            g.n.to_string(),
            g.m.to_string(),
            g.c.to_string(),
            g.d.to_string(),
            g.girth.to_string(),
            entry.length.to_string(),
            entry.trace.to_string(),
            entry.omega.to_string(),
            entry.psi.total.to_string(),
            phi.to_string(),
            lambda.to_string(),
            entry.count.to_string(),
        ];
        if let Some(diag) = eigen {
            match diag.entries.iter().find(|e| e.length == entry.length) {
                Some(e) => row.extend([format!("{:e}", e.approx), format!("{:e}", e.rel_error)]),
                None => row.extend([String::new(), String::new()]),
            }
        }
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("csv is utf-8")
}

/// Aligned summary table followed by the per-length psi breakdown.
pub fn to_human(report: &CycleCensusReport) -> String {
    let g = &report.graph;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: n = {}, m = {}, (c, d) = ({}, {}), girth = {}",
        g.n, g.m, g.c, g.d, g.girth
    );
    let _ = writeln!(out, "method: {}", report.method);
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    if report.census.is_empty() {
        return out;
    }
    let rows: Vec<[String; 5]> = report
        .census
        .iter()
        .map(|e| {
            [
                e.length.to_string(),
                e.trace.to_string(),
                e.omega.to_string(),
                e.psi.total.to_string(),
                e.count.to_string(),
            ]
        })
        .collect();
    let titles = ["L", "trace", "omega", "psi", "cycles"];
    let widths: Vec<usize> = (0..5)
        .map(|i| rows.iter().map(|r| r[i].len()).chain([titles[i].len()]).max().unwrap_or(0))
        .collect();
    out.push('\n');
    let line = |cells: &[&str]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let _ = writeln!(out, "{}", line(&titles));
    for r in &rows {
        let cells: Vec<&str> = r.iter().map(String::as_str).collect();
        let _ = writeln!(out, "{}", line(&cells));
    }

    out.push_str("\npsi breakdown (j = contained cycle length):\n");
    for e in &report.census {
        if e.psi.contributions.is_empty() {
            let _ = writeln!(out, "  L = {:>3}: none", e.length);
            continue;
        }
        for part in &e.psi.contributions {
            let _ = writeln!(
                out,
                "  L = {:>3}, j = {:>3}: phi = {}, lambda = {}",
                e.length, part.cycle_length, part.phi, part.lambda
            );
        }
    }

    if let Some(diag) = &report.eigen_diagnostic {
        let _ = writeln!(out, "\neigen diagnostic (relative tolerance {:e}):", diag.tolerance);
        for e in &diag.entries {
            let _ = writeln!(
                out,
                "  L = {:>3}: exact = {}, spectral = {:.6e}, rel. error = {:.2e}{}",
                e.length,
                e.exact,
                e.approx,
                e.rel_error,
                if e.within_tolerance { "" } else { "  OUT OF TOLERANCE" }
            );
        }
    }
    out
}
