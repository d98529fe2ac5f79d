//! Rendering of command results as JSON lines, CSV or plain text.

use std::fmt::Write;

use rm_infoset::modular::GroupIso;
use rm_infoset::reed_muller::RMFactorization;
use rm_infoset::Position;
use serde::Serialize;

use crate::args::Format;
use crate::infoset::InfosetRow;
use crate::tables::TableReport;

fn join(positions: &[Position], sep: &str) -> String {
    positions
        .iter()
        .map(Position::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports always serialize")
}

/// One JSON object per row and line.
pub fn infoset(rows: &[InfosetRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for row in rows {
                writeln!(out, "{}", json(row)).unwrap();
            }
        }
        Format::Csv => {
            let verified = rows.iter().any(|r| r.verified.is_some());
            out.push_str("m,rho,r1,r2,a,b,delta1,delta2,info_set,check_set");
            out.push_str(if verified { ",verified\n" } else { "\n" });
            for row in rows {
                let s = &row.set;
                write!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    s.m,
                    s.rho,
                    s.r1,
                    s.r2,
                    s.a,
                    s.b,
                    s.iso[0],
                    s.iso[1],
                    join(&s.info_set, ";"),
                    join(&s.check_set, ";")
                )
                .unwrap();
                if let Some(v) = row.verified {
                    write!(out, ",{v}").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Text => {
            for row in rows {
                let s = &row.set;
                write!(
                    out,
                    "R({},{}) r1={} r2={} a={} b={} T(1)=({},{}) I={{{}}}",
                    s.rho,
                    s.m,
                    s.r1,
                    s.r2,
                    s.a,
                    s.b,
                    s.iso[0],
                    s.iso[1],
                    join(&s.info_set, ",")
                )
                .unwrap();
                match row.verified {
                    Some(true) => out.push_str(" verified"),
                    Some(false) => out.push_str(" NOT VERIFIED"),
                    None => {}
                }
                out.push('\n');
            }
        }
    }
    out
}

#[derive(Serialize)]
struct FactorizationDoc {
    m: u32,
    n: u64,
    r1: u64,
    r2: u64,
    a: u32,
    b: u32,
    mersenne: bool,
}

pub fn factorizations(facts: &[RMFactorization], format: Format) -> String {
    let docs: Vec<FactorizationDoc> = facts
        .iter()
        .map(|f| FactorizationDoc {
            m: f.m(),
            n: f.n(),
            r1: f.r1(),
            r2: f.r2(),
            a: f.a(),
            b: f.b(),
            mersenne: f.is_mersenne(),
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Json => writeln!(out, "{}", json(&docs)).unwrap(),
        Format::Csv => {
            out.push_str("m,n,r1,r2,a,b\n");
            for d in &docs {
                writeln!(out, "{},{},{},{},{},{}", d.m, d.n, d.r1, d.r2, d.a, d.b).unwrap();
            }
        }
        Format::Text => {
            for d in &docs {
                writeln!(
                    out,
                    "m={} n={} r1={} r2={} a={} b={}",
                    d.m, d.n, d.r1, d.r2, d.a, d.b
                )
                .unwrap();
            }
        }
    }
    out
}

#[derive(Serialize)]
struct IsoDoc {
    r1: u64,
    r2: u64,
    delta: [u64; 2],
    crt: bool,
}

pub fn isos(isos: &[GroupIso], format: Format) -> String {
    let docs: Vec<IsoDoc> = isos
        .iter()
        .map(|t| IsoDoc {
            r1: t.r1(),
            r2: t.r2(),
            delta: [t.delta().0, t.delta().1],
            crt: t.is_crt(),
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Json => writeln!(out, "{}", json(&docs)).unwrap(),
        Format::Csv => {
            out.push_str("r1,r2,delta1,delta2,crt\n");
            for d in &docs {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    d.r1, d.r2, d.delta[0], d.delta[1], d.crt
                )
                .unwrap();
            }
        }
        Format::Text => {
            for d in &docs {
                let tag = if d.crt { " (crt)" } else { "" };
                writeln!(
                    out,
                    "Z_{} x Z_{}: T(1)=({},{}){tag}",
                    d.r1, d.r2, d.delta[0], d.delta[1]
                )
                .unwrap();
            }
        }
    }
    out
}

fn table_text(out: &mut String, report: &TableReport) {
    let t = &report.table;
    writeln!(out, "table {}: {}", t.id, report.title).unwrap();
    writeln!(out, "{}", t.columns.join(" | ")).unwrap();
    for row in &t.rows {
        writeln!(out, "{}", row.cells.join(" | ")).unwrap();
    }
    if report.discrepancies.is_empty() {
        writeln!(out, "matches reference ({} rows)", t.rows.len()).unwrap();
    } else {
        writeln!(out, "{} discrepancies:", report.discrepancies.len()).unwrap();
        for d in &report.discrepancies {
            writeln!(out, "  {d}").unwrap();
        }
    }
}

pub fn tables(reports: &[TableReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => writeln!(out, "{}", json(&reports)).unwrap(),
        Format::Csv => {
            for report in reports {
                let t = &report.table;
                writeln!(out, "table,{}", t.columns.join(",")).unwrap();
                for row in &t.rows {
                    let cells: Vec<String> =
                        row.cells.iter().map(|c| c.replace(' ', ";")).collect();
                    writeln!(out, "{},{}", t.id, cells.join(",")).unwrap();
                }
            }
        }
        Format::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                table_text(&mut out, report);
            }
        }
    }
    out
}
