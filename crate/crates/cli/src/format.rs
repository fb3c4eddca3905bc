//! Plain-text rendering of reports and tables.

use std::fmt::Write;

use qls_core::constructions::{Achievability, Status};
use qls_core::{CardinalityReport, Tolerance, VerificationReport};

use crate::TableFormat;

pub fn verification(r: &VerificationReport) -> String {
    let mut s = String::new();
    writeln!(s, "valid: {}", r.pass).unwrap();
    writeln!(s, "worst norm deviation: {:.3e}", r.worst_norm_deviation).unwrap();
    writeln!(s, "worst row deviation: {:.3e}", r.worst_row_deviation).unwrap();
    writeln!(s, "worst column deviation: {:.3e}", r.worst_col_deviation).unwrap();
    if let Some(f) = &r.first_failure {
        writeln!(s, "first failure: {:?} at {:?}", f.kind, f.indices).unwrap();
    }
    s
}

pub fn cardinality(r: &CardinalityReport, tol: &Tolerance) -> String {
    let mut s = String::new();
    writeln!(s, "order: {}", r.order).unwrap();
    writeln!(s, "cardinality: {}", r.c).unwrap();
    let hist: Vec<String> = r
        .class_size_histogram()
        .iter()
        .enumerate()
        .filter(|(_, n)| **n > 0)
        .map(|(k, n)| format!("{n} x {}", k + 1))
        .collect();
    writeln!(s, "class sizes: {}", hist.join(", ")).unwrap();
    writeln!(
        s,
        "same-class overlap >= {:.12} (threshold {:.12})",
        r.min_same_overlap, tol.tau_same
    )
    .unwrap();
    writeln!(
        s,
        "cross-class overlap <= {:.12} (limit {:.12})",
        r.max_distinct_overlap,
        tol.distinct_limit()
    )
    .unwrap();
    s
}

/// `[4, 6, 7, 8, 10]` becomes `4, 6-8, 10`.
pub fn ranges(values: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut k = 0;
    while k < values.len() {
        let start = values[k];
        let mut end = start;
        while k + 1 < values.len() && values[k + 1] == end + 1 {
            k += 1;
            end = values[k];
        }
        parts.push(if start == end { start.to_string() } else { format!("{start}-{end}") });
        k += 1;
    }
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(", ")
    }
}

fn with_status(set: &[Achievability], status: Status) -> Vec<usize> {
    set.iter().filter(|a| a.status == status).map(|a| a.c).collect()
}

pub fn plan(order: usize, set: &[Achievability]) -> String {
    let mut s = String::new();
    writeln!(s, "order {order}: cardinalities {order}..={}", order * order).unwrap();
    for a in set {
        writeln!(s, "{:>4}  {:<10}  {}", a.c, a.status, a.provenance).unwrap();
    }
    s
}

pub fn table(rows: &[(usize, Vec<Achievability>)], fmt: TableFormat) -> String {
    let mut s = String::new();
    match fmt {
        TableFormat::Csv => writeln!(s, "order,achievable,excluded,unknown").unwrap(),
        TableFormat::Md => {
            writeln!(s, "| order | achievable | excluded | unknown |").unwrap();
            writeln!(s, "|---|---|---|---|").unwrap();
        }
    }
    for (v, set) in rows {
        let cols = [Status::Achievable, Status::Excluded, Status::Unknown].map(|st| ranges(&with_status(set, st)));
        match fmt {
            TableFormat::Csv => writeln!(s, "{v},\"{}\",\"{}\",\"{}\"", cols[0], cols[1], cols[2]).unwrap(),
            TableFormat::Md => writeln!(s, "| {v} | {} | {} | {} |", cols[0], cols[1], cols[2]).unwrap(),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compresses_runs() {
        assert_eq!(ranges(&[4, 6, 7, 8, 10]), "4, 6-8, 10");
        assert_eq!(ranges(&[]), "-");
        assert_eq!(ranges(&[3]), "3");
    }
}
