//! Text and CSV renderings. Every renderer builds the full output string;
//! printing happens once, in `main`, so concurrent engine work can never
//! interleave output.

use evsym_core::{ConjectureReport, EvMultiset, KostkaSystem, Partition, TheoremReport};
use num_bigint::BigInt;

pub fn partitions_text(partitions: &[Partition]) -> String {
    let mut out = String::new();
    for p in partitions {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out.push_str(&format!("count {}\n", partitions.len()));
    out
}

pub fn partitions_csv(partitions: &[Partition]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["partition"]).expect("csv");
    for p in partitions {
        w.write_record([p.to_string()]).expect("csv");
    }
    finish(w)
}

pub fn ev_text(ev: &EvMultiset) -> String {
    let mut out = String::new();
    for entry in ev.entries() {
        out.push_str(&format!(
            "{}  x{}  sign {:+}\n",
            entry.partition,
            entry.multiplicity,
            entry.sign()
        ));
    }
    out.push_str(&format!("total multiplicity {}\n", ev.total_multiplicity()));
    out
}

pub fn ev_csv(ev: &EvMultiset) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["partition", "multiplicity", "sign"]).expect("csv");
    for entry in ev.entries() {
        w.write_record([
            entry.partition.to_string(),
            entry.multiplicity.to_string(),
            entry.sign().to_string(),
        ])
        .expect("csv");
    }
    finish(w)
}

pub fn theorem_text(report: &TheoremReport) -> String {
    format!(
        "lhs = {}\nrhs = {}\n{}\n",
        report.lhs,
        report.rhs,
        if report.equal { "EQUAL" } else { "UNEQUAL" }
    )
}

pub fn theorem_csv(report: &TheoremReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["side", "partition", "coefficient"]).expect("csv");
    for (side, expansion) in [("lhs", &report.lhs), ("rhs", &report.rhs)] {
        for (p, c) in expansion.terms() {
            w.write_record([side, &p.to_string(), &c.to_string()]).expect("csv");
        }
    }
    finish(w)
}

pub fn character_text(values: &[(&str, BigInt)], agree: bool) -> String {
    let mut out = String::new();
    if values.len() == 1 {
        out.push_str(&format!("{}\n", values[0].1));
    } else {
        for (label, value) in values {
            out.push_str(&format!("{label} = {value}\n"));
        }
        if !agree {
            out.push_str("CROSS-CHECK FAILED\n");
        }
    }
    out
}

pub fn character_csv(values: &[(&str, BigInt)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["method", "value"]).expect("csv");
    for (label, value) in values {
        w.write_record([label.to_string(), value.to_string()]).expect("csv");
    }
    finish(w)
}

/// One aligned table: a label column followed by data columns.
fn render_table(corner: &str, headers: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain(std::iter::once(corner.len()))
        .max()
        .unwrap_or(0);
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for (_, cells) in rows {
        for (i, cell) in cells.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("{corner:<label_width$}"));
    for (h, w) in headers.iter().zip(&widths) {
        out.push_str(&format!("  {h:>w$}"));
    }
    out.push('\n');
    for (label, cells) in rows {
        out.push_str(&format!("{label:<label_width$}"));
        for (cell, w) in cells.iter().zip(&widths) {
            out.push_str(&format!("  {cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// The per-entry weighted character values behind one side of a
/// [`ConjectureReport`] row: used by the table rendering.
pub struct ConjectureCells {
    /// Ev members in ascending order (the layout the tables use).
    pub columns: Vec<Partition>,
    /// `cells[row][col]`: rendered `weight*value` factors.
    pub cells: Vec<Vec<String>>,
}

pub fn conjecture_text(report: &ConjectureReport, lhs: &ConjectureCells, rhs: &ConjectureCells) -> String {
    let n = report.lambda.degree();
    let mut out = format!(
        "lambda = {} | n = {} | 2n = {} | N = {}\n\n",
        report.lambda,
        n,
        2 * n,
        report.n
    );
    for (title, rows, cells, total) in [
        (
            format!("signed rows: mu in R_{}({})", 2 * report.n + 1, 2 * n),
            &report.lhs_rows,
            lhs,
            ("lhs", &report.lhs),
        ),
        (
            format!("unsigned rows: mu in Rc_{}({})", 2 * report.n, 2 * n),
            &report.rhs_rows,
            rhs,
            ("rhs", &report.rhs),
        ),
    ] {
        out.push_str(&title);
        out.push('\n');
        let mut headers: Vec<String> = cells.columns.iter().map(|p| p.bracket()).collect();
        headers.push("row sum".to_string());
        let table_rows: Vec<(String, Vec<String>)> = rows
            .iter()
            .zip(&cells.cells)
            .map(|((mu, sum), row_cells)| {
                let mut cs = row_cells.clone();
                cs.push(sum.to_string());
                (format!("s{}", mu.bracket()), cs)
            })
            .collect();
        out.push_str(&render_table("mu", &headers, &table_rows));
        out.push_str(&format!("{} = {}\n\n", total.0, total.1));
    }
    out.push_str(if report.equal { "EQUAL\n" } else { "UNEQUAL\n" });
    out
}

pub fn conjecture_csv(reports: &[&ConjectureReport], with_n_column: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if with_n_column {
        w.write_record(["N", "side", "mu", "row_sum"]).expect("csv");
    } else {
        w.write_record(["side", "mu", "row_sum"]).expect("csv");
    }
    for report in reports {
        for (side, rows) in [("lhs", &report.lhs_rows), ("rhs", &report.rhs_rows)] {
            for (mu, sum) in rows.iter() {
                if with_n_column {
                    w.write_record([
                        report.n.to_string(),
                        side.to_string(),
                        mu.to_string(),
                        sum.to_string(),
                    ])
                    .expect("csv");
                } else {
                    w.write_record([side.to_string(), mu.to_string(), sum.to_string()])
                        .expect("csv");
                }
            }
        }
    }
    finish(w)
}

pub fn chartable_text(rows: &[Partition], cols: &[Partition], values: &[Vec<BigInt>]) -> String {
    let headers: Vec<String> = cols.iter().map(|p| p.bracket()).collect();
    let table_rows: Vec<(String, Vec<String>)> = rows
        .iter()
        .zip(values)
        .map(|(mu, row)| {
            (
                format!("s{}", mu.bracket()),
                row.iter().map(|v| v.to_string()).collect(),
            )
        })
        .collect();
    render_table("", &headers, &table_rows)
}

pub fn chartable_csv(rows: &[Partition], cols: &[Partition], values: &[Vec<BigInt>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = vec!["mu".to_string()];
    header.extend(cols.iter().map(|p| p.bracket()));
    w.write_record(&header).expect("csv");
    for (mu, row) in rows.iter().zip(values) {
        let mut record: Vec<String> = vec![mu.bracket()];
        record.extend(row.iter().map(|v| v.to_string()));
        w.write_record(&record).expect("csv");
    }
    finish(w)
}

pub fn kostka_text(system: &KostkaSystem, with_inverse: bool) -> String {
    let order = system.order();
    let mut out = format!("degree {} ({} partitions)\n", system.degree(), order.len());
    out.push_str(&format!(
        "order: {}\n",
        order
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    ));
    out.push_str("K (rows = shapes, columns = contents):\n");
    out.push_str(&dense_matrix_text(order.len(), system.columns()));
    if with_inverse {
        out.push_str("K_inv:\n");
        out.push_str(&dense_matrix_text(order.len(), system.inverse()));
    }
    out
}

fn dense_matrix_text(size: usize, columns: &[Vec<(usize, BigInt)>]) -> String {
    let mut dense = vec![vec![BigInt::from(0); size]; size];
    for (j, col) in columns.iter().enumerate() {
        for (i, v) in col {
            dense[*i][j] = v.clone();
        }
    }
    let cells: Vec<Vec<String>> = dense
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect();
    let mut widths = vec![0usize; size];
    for row in &cells {
        for (j, c) in row.iter().enumerate() {
            widths[j] = widths[j].max(c.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn kostka_csv(system: &KostkaSystem, with_inverse: bool) -> String {
    let order = system.order();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["matrix", "shape", "content", "value"]).expect("csv");
    let mut emit = |name: &str, columns: &[Vec<(usize, BigInt)>]| {
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                w.write_record([
                    name.to_string(),
                    order[*i].to_string(),
                    order[j].to_string(),
                    v.to_string(),
                ])
                .expect("csv");
            }
        }
    };
    emit("K", system.columns());
    if with_inverse {
        emit("K_inv", system.inverse());
    }
    finish(w)
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
}
