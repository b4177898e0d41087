//! Report formats: JSON Lines, one report per line, and a CSV summary with
//! one row per graph.
//!
//! JSON Lines fields: `id`, `cells`, `cell_count`, `vertices`, `edges`,
//! `perfect_matchings` (decimal string), `clar_exhaustive`, `clar_ip`,
//! `max_forcing_exhaustive`, `max_forcing_clar`, `forcing_pairs`,
//! `lp_optimum` (exact rational string), `checks` (each `holds`, `violated`
//! or `skipped(reason)`), `elapsed_us`. Only `elapsed_us` varies between runs.

use std::io::{self, Write};

use super::battery::{Checks, Outcome, VerificationReport};

pub const TIMING_FIELD: &str = "elapsed_us";

pub fn write_jsonl<W: Write>(out: &mut W, reports: &[VerificationReport]) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn to_jsonl(reports: &[VerificationReport]) -> String {
    let mut buf = Vec::new();
    write_jsonl(&mut buf, reports).expect("writing to memory");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// A JSON Lines report with the timing field removed from every line.
pub fn strip_timing(jsonl: &str) -> String {
    jsonl
        .lines()
        .map(|line| match serde_json::from_str::<serde_json::Value>(line) {
            Ok(serde_json::Value::Object(mut map)) => {
                map.remove(TIMING_FIELD);
                serde_json::Value::Object(map).to_string()
            }
            _ => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

pub fn write_csv<W: Write>(out: &mut W, reports: &[VerificationReport]) -> io::Result<()> {
    let names: Vec<&str> = Checks::named_fields();
    write!(out, "id,cells,perfect_matchings,clar_exhaustive,clar_ip,max_forcing_exhaustive,max_forcing_clar,lp_optimum")?;
    for name in &names {
        write!(out, ",{name}")?;
    }
    writeln!(out, ",violations")?;
    for r in reports {
        let cells: Vec<String> = r.cells.iter().map(|[x, y]| format!("{x} {y}")).collect();
        write!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.id,
            quoted(&cells.join(";")),
            opt(&r.perfect_matchings),
            opt(&r.clar_exhaustive),
            opt(&r.clar_ip),
            opt(&r.max_forcing_exhaustive),
            opt(&r.max_forcing_clar),
            opt(&r.lp_optimum),
        )?;
        for (_, outcome) in r.checks.named() {
            match outcome {
                Outcome::Skipped(_) => write!(out, ",{}", quoted(&outcome.to_string()))?,
                _ => write!(out, ",{outcome}")?,
            }
        }
        writeln!(out, ",{}", r.violations())?;
    }
    Ok(())
}

pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, reports).expect("writing to memory");
    String::from_utf8(buf).expect("ASCII output")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Connectivity;
    use crate::harness::battery::{run_battery, BatteryConfig};

    #[test]
    fn jsonl_has_one_line_per_graph() {
        let reports = run_battery(&BatteryConfig::new(2, Connectivity::Edge)).unwrap();
        let text = to_jsonl(&reports);
        assert_eq!(text.lines().count(), 3);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["perfect_matchings"], "2");
        assert_eq!(first["checks"]["counting"], "holds");
        assert!(!strip_timing(&text).contains(TIMING_FIELD));
    }

    #[test]
    fn csv_shape() {
        let reports = run_battery(&BatteryConfig::new(2, Connectivity::Edge)).unwrap();
        let csv = to_csv(&reports);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("0,\"0 0\",2,1,1,1,1,1,holds"));
    }
}
