//! Rendering of command results as aligned tables, JSON or CSV.

use std::io::{self, Write};

use anyhow::Result;
use num_bigint::BigInt;
use pyquad::families::FamilyRow;
use pyquad::quadratic::AnalysisReport;
use pyquad::report::VerificationReport;
use pyquad::triples::{primitivity, Triple};
use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
pub struct TripleRow {
    #[serde(serialize_with = "as_string")]
    pub i: u64,
    #[serde(flatten)]
    pub triple: Triple,
}

fn as_string<S: serde::Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn print_json<T: Serialize + ?Sized>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn print_csv(header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Right-aligned columns separated by two spaces.
fn print_table(header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = io::stdout().lock();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn print_rows(header: &[&str], rows: &[Vec<String>], format: Format) -> Result<()> {
    match format {
        Format::Csv => print_csv(header, rows),
        _ => print_table(header, rows),
    }
}

pub fn emit_fib(n: u64, modulus: Option<&BigInt>, value: &BigInt, format: Format) -> Result<()> {
    match format {
        Format::Table => {
            println!("{value}");
            Ok(())
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: String,
                #[serde(rename = "mod", skip_serializing_if = "Option::is_none")]
                modulus: Option<String>,
                value: String,
            }
            print_json(&Out {
                n: n.to_string(),
                modulus: modulus.map(ToString::to_string),
                value: value.to_string(),
            })
        }
        Format::Csv => {
            let m = modulus.map(ToString::to_string).unwrap_or_default();
            print_csv(&["n", "mod", "value"], &[vec![n.to_string(), m, value.to_string()]])
        }
    }
}

pub fn emit_triples(rows: &[TripleRow], format: Format) -> Result<()> {
    if format == Format::Json {
        return print_json(rows);
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let t = &r.triple;
            let (primitive, g) = primitivity(t);
            vec![
                r.i.to_string(),
                t.leg_a().to_string(),
                t.leg_b().to_string(),
                t.hyp().to_string(),
                g.to_string(),
                primitive.to_string(),
            ]
        })
        .collect();
    print_rows(&["i", "leg_a", "leg_b", "hyp", "gcd", "primitive"], &cells, format)
}

pub fn emit_quad(report: &AnalysisReport, format: Format) -> Result<()> {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    let p = &report.poly;
    let fields: Vec<(&str, String)> = vec![
        ("a", p.a().to_string()),
        ("b", p.b().to_string()),
        ("c", p.c().to_string()),
        ("discriminant", report.discriminant.to_string()),
        ("roots", report.roots.kind().to_string()),
        ("x1", opt(report.roots.x1().map(ToString::to_string))),
        ("x2", opt(report.roots.x2().map(ToString::to_string))),
        ("vx", report.vertex_x.to_string()),
        ("vy", report.vertex_y.to_string()),
        ("integral", opt(report.integral_signed.as_ref().map(ToString::to_string))),
        ("integral_abs", opt(report.integral_abs.as_ref().map(ToString::to_string))),
        ("p1", opt(report.breakdown.as_ref().map(|b| b.p1.to_string()))),
        ("p2", opt(report.breakdown.as_ref().map(|b| b.p2.to_string()))),
        ("p3", opt(report.breakdown.as_ref().map(|b| b.p3.to_string()))),
    ];
    match format {
        Format::Json => print_json(report),
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            print_csv(&header, &[fields.into_iter().map(|(_, v)| v).collect()])
        }
        Format::Table => {
            println!("{p}");
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &fields {
                println!("  {k:<width$}  {v}");
            }
            Ok(())
        }
    }
}

pub fn emit_family(rows: &[FamilyRow], format: Format) -> Result<()> {
    if format == Format::Json {
        return print_json(rows);
    }
    let header = [
        "n", "a", "b", "c", "x1", "x2", "vx", "vy", "integral_abs", "flavor", "closed_form", "match",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.a.to_string(),
                r.b.to_string(),
                r.c.to_string(),
                r.x1.to_string(),
                r.x2.to_string(),
                r.vx.to_string(),
                r.vy.to_string(),
                r.integral_abs.to_string(),
                r.flavor.to_string(),
                r.closed_form.to_string(),
                r.matches.to_string(),
            ]
        })
        .collect();
    print_rows(&header, &cells, format)
}

pub fn emit_reports(reports: &[VerificationReport], format: Format) -> Result<()> {
    match format {
        Format::Json => print_json(reports),
        Format::Csv => {
            let cells: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.claim.clone(),
                        r.range.clone(),
                        if r.passed() { "pass" } else { "fail" }.to_string(),
                        r.counterexamples.len().to_string(),
                        format!("{:.6}", r.elapsed_secs),
                    ]
                })
                .collect();
            print_csv(&["claim", "range", "status", "counterexamples", "elapsed_secs"], &cells)
        }
        Format::Table => {
            let width = reports.iter().map(|r| r.claim.len()).max().unwrap_or(0);
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{status}  {:<width$}  {}  ({:.3}s)",
                    r.claim, r.range, r.elapsed_secs
                );
            }
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            if !failed.is_empty() {
                print_json(&failed)?;
            }
            Ok(())
        }
    }
}
