//! Rendering of polynomials, root lists, verdicts and reports in the
//! three output formats. Exact rationals are serialized as `p/q` strings,
//! never as floats, so machine output diffs cleanly.

use std::io::Write;
use std::path::Path;

use betti_core::arith::{BiPoly, IntPoly};
use betti_core::realroot::IsolationList;
use betti_core::recurrences::{DeformFamily, UniFamily};
use betti_core::verify::Verdict;

use crate::suites::SuiteReport;
use crate::Format;

pub fn print_uni(family: UniFamily, index: u32, poly: &IntPoly, format: Format) {
    match format {
        Format::Table => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            println!(
                "{}_{index}  [{}]  {}",
                family.tag(),
                coeffs.join(", "),
                poly.display_with(family.var())
            );
        }
        Format::Json => {
            let value = serde_json::json!({
                "family": family.tag(),
                "index": index,
                "coefficients": poly.to_strings(),
            });
            println!("{value}");
        }
        Format::Csv => {
            println!(
                "{},{},{},{}",
                family.tag(),
                index,
                poly.degree().map_or(-1i64, |d| d as i64),
                poly.to_strings().join(" ")
            );
        }
    }
}

pub fn print_deform(family: DeformFamily, index: u32, poly: &BiPoly, format: Format) {
    match format {
        Format::Table => {
            println!(
                "{}_{index}  {}",
                family.tag(),
                poly.display_with("y", "t")
            );
        }
        Format::Json => {
            let value = serde_json::json!({
                "family": family.tag(),
                "index": index,
                "y_coefficients": poly.to_strings(),
            });
            println!("{value}");
        }
        Format::Csv => {
            let rows: Vec<String> = poly
                .to_strings()
                .iter()
                .map(|row| row.join(" "))
                .collect();
            println!(
                "{},{},{},{}",
                family.tag(),
                index,
                poly.deg_y().map_or(-1i64, |d| d as i64),
                rows.join(";")
            );
        }
    }
}

pub fn print_roots(list: &IsolationList, format: Format, digits: usize) {
    let entries = list.to_json(digits);
    match format {
        Format::Json => {
            let value: Vec<_> = entries
                .iter()
                .map(|e| serde_json::json!({"lo": e.lo, "hi": e.hi, "mid": e.mid}))
                .collect();
            println!("{}", serde_json::Value::Array(value));
        }
        Format::Csv => {
            println!("lo,hi,mid");
            for e in &entries {
                println!("{},{},{}", e.lo, e.hi, e.mid);
            }
        }
        Format::Table => {
            if entries.is_empty() {
                println!("no roots in the requested domain");
            }
            for (i, e) in entries.iter().enumerate() {
                println!("root {:2}  ~ {}  in [{}, {}]", i + 1, e.mid, e.lo, e.hi);
            }
        }
    }
}

pub fn print_verdicts(verdicts: &[Verdict], format: Format) {
    match format {
        Format::Json => {
            // batch mode: one JSON object per line
            for v in verdicts {
                println!("{}", serde_json::to_string(v).expect("verdict to JSON"));
            }
        }
        Format::Csv => {
            println!("claim,index,pass,witness,millis");
            for v in verdicts {
                println!(
                    "{},{},{},{},{}",
                    v.claim,
                    v.index,
                    v.pass,
                    v.witness.as_deref().unwrap_or(""),
                    v.millis
                );
            }
        }
        Format::Table => {
            for v in verdicts {
                let status = if v.pass { "PASS" } else { "FAIL" };
                match &v.witness {
                    Some(w) => println!("{status}  {:32} {:5}  {} ms  ({w})", v.claim, v.index, v.millis),
                    None => println!("{status}  {:32} {:5}  {} ms", v.claim, v.index, v.millis),
                }
            }
        }
    }
}

pub fn print_report(report: &SuiteReport, format: Format) {
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report to JSON")
            );
        }
        _ => {
            print_verdicts(&report.verdicts, Format::Table);
            println!(
                "{} verdicts, {} passed, {} failed in {} ms",
                report.summary.total,
                report.summary.passed,
                report.summary.failed,
                report.wall_millis
            );
        }
    }
}

/// Writes to the path when given, otherwise to stdout.
pub fn emit(path: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            let mut file = std::fs::File::create(p)?;
            file.write_all(content.as_bytes())?;
            Ok(())
        }
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}
