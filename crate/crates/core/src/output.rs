//! Rendering of rows, census counts, moments, CLT tables and verification
//! reports as aligned text, CSV or JSON. Counts and rationals are always
//! emitted as exact decimal strings; only `t`, `phi` and `sup_distance` are
//! floating point.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{require_c, Error, Result};
use crate::exact::{decimal_render, ExactRational};
use crate::stats::{clt_report_for_row, k_cdf_bounds_for_row, moments, Convention, Normalization, MOMENT_PLACES};
use crate::triangle::{census, triangle, Method, Triangle};
use crate::verify::{run_verify, VerifyReport};

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// Exact rational as `num/den`, or just `num` when the denominator is one.
pub fn rational_string(q: &ExactRational) -> String {
    q.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct CellRecord {
    pub c: i64,
    pub sigma: i64,
    pub count: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub c: i64,
    #[serde(rename = "T")]
    pub t: String,
    #[serde(rename = "K")]
    pub k: String,
    #[serde(rename = "Tp")]
    pub tp: String,
    pub t_over_2k: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MomentRecord {
    pub c: i64,
    pub convention: String,
    pub value_num: String,
    pub value_den: String,
    pub rendered: String,
    /// `c` minus the moment, rendered.
    pub gap: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CltRecord {
    pub c: i64,
    pub sigma: i64,
    /// float
    pub t: f64,
    pub f_before: String,
    #[serde(rename = "F")]
    pub f: String,
    pub f_decimal: String,
    /// float
    pub phi: f64,
    pub k_lower: String,
    pub k_upper: String,
    pub k_exact: String,
    /// float
    pub sup_distance: f64,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    kind: &'a str,
    method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalization: Option<Normalization>,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<serde_json::Value>,
    records: &'a [T],
}

fn to_csv<T: Serialize>(records: &[T], header: &[&str]) -> String {
    let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    wtr.write_record(header).expect("in-memory write");
    for r in records {
        wtr.serialize(r).expect("in-memory write");
    }
    String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn to_json<T: Serialize>(
    kind: &str,
    normalization: Option<Normalization>,
    summary: Option<serde_json::Value>,
    records: &[T],
) -> String {
    let env = Envelope {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        kind,
        method: Method::Both,
        normalization,
        summary,
        records,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("records serialize");
    s.push('\n');
    s
}

/// Right-aligned text grid; the first row is the header.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|i| rows.iter().filter_map(|r| r.get(i)).map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for (n, row) in rows.iter().enumerate() {
        let line: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:>w$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if n == 0 {
            let total = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
            out.push_str(&"-".repeat(total));
            out.push('\n');
        }
    }
    out
}

fn cell_records(tri: &Triangle, c_min: i64) -> Vec<CellRecord> {
    tri.rows()
        .iter()
        .filter(|r| r.c() >= c_min)
        .flat_map(|r| r.iter().map(move |(s, v)| CellRecord { c: r.c(), sigma: s.value(), count: v.to_string() }))
        .collect()
}

fn triangle_grid(tri: &Triangle, c_min: i64) -> String {
    let rows: Vec<_> = tri.rows().iter().filter(|r| r.c() >= c_min).collect();
    let lo = rows.iter().filter_map(|r| r.min_signature()).map(|s| s.value()).min().unwrap_or(0);
    let hi = rows.iter().filter_map(|r| r.max_signature()).map(|s| s.value()).max().unwrap_or(0);
    let sigmas: Vec<i64> = (lo..=hi).step_by(2).collect();

    let mut table =
        vec![std::iter::once("c\\sigma".to_string()).chain(sigmas.iter().map(i64::to_string)).collect::<Vec<_>>()];
    for r in rows {
        let mut line = vec![r.c().to_string()];
        for &s in &sigmas {
            let v = r.get(s);
            line.push(if v == 0.into() { String::new() } else { v.to_string() });
        }
        table.push(line);
    }
    grid(&table)
}

const CELL_HEADER: [&str; 3] = ["c", "sigma", "count"];

fn render_cells(tri: &Triangle, c_min: i64, format: Format, kind: &str) -> String {
    match format {
        Format::Table => triangle_grid(tri, c_min),
        Format::Csv => to_csv(&cell_records(tri, c_min), &CELL_HEADER),
        Format::Json => to_json(kind, None, None, &cell_records(tri, c_min)),
    }
}

/// One row, computed by both methods.
pub fn cmd_row(c: i64, format: Format) -> Result<String> {
    require_c(c, 3)?;
    let tri = triangle(c, Method::Both)?;
    Ok(render_cells(&tri, c, format, "row"))
}

/// Rows `3..=c_max`, computed by both methods.
pub fn cmd_triangle(c_max: i64, format: Format) -> Result<String> {
    let tri = triangle(c_max, Method::Both)?;
    Ok(render_cells(&tri, 3, format, "triangle"))
}

fn check_range(c_min: i64, c_max: i64, floor: i64) -> Result<()> {
    require_c(c_min, floor)?;
    if c_max < c_min {
        return Err(Error::Range(format!("c_max {c_max} is below c_min {c_min}")));
    }
    Ok(())
}

pub fn cmd_counts(c_min: i64, c_max: i64, format: Format) -> Result<String> {
    check_range(c_min, c_max, 3)?;
    let records: Vec<CensusRecord> = (c_min..=c_max)
        .map(|c| {
            let k = census(c)?;
            Ok(CensusRecord {
                c,
                t_over_2k: decimal_render(&k.t_over_2k(), MOMENT_PLACES),
                t: k.t_count.to_string(),
                k: k.k_count.to_string(),
                tp: k.tp_count.to_string(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(match format {
        Format::Table => {
            let mut rows = vec![vec!["c".into(), "|T|".into(), "|K|".into(), "|Tp|".into(), "|T|/(2|K|)".into()]];
            rows.extend(
                records
                    .iter()
                    .map(|r| vec![r.c.to_string(), r.t.clone(), r.k.clone(), r.tp.clone(), r.t_over_2k.clone()]),
            );
            grid(&rows)
        }
        Format::Csv => to_csv(&records, &["c", "T", "K", "Tp", "t_over_2k"]),
        Format::Json => to_json("counts", None, None, &records),
    })
}

pub fn moment_records(c_min: i64, c_max: i64, convention: Convention) -> Result<Vec<MomentRecord>> {
    check_range(c_min, c_max, 6)?;
    let tri = triangle(c_max, Method::Both)?;
    tri.rows()
        .iter()
        .filter(|r| r.c() >= c_min)
        .map(|r| {
            let m = moments(r, convention)?;
            let gap = ExactRational::from_integer(r.c().into()) - &m.second_moment;
            Ok(MomentRecord {
                c: r.c(),
                convention: convention.to_string(),
                value_num: m.second_moment.numer().to_string(),
                value_den: m.second_moment.denom().to_string(),
                rendered: m.rendered,
                gap: decimal_render(&gap, MOMENT_PLACES),
            })
        })
        .collect()
}

pub fn cmd_variance(c_min: i64, c_max: i64, convention: Convention, format: Format) -> Result<String> {
    let records = moment_records(c_min, c_max, convention)?;
    Ok(match format {
        Format::Table => {
            let mut rows = vec![vec!["c".into(), "exact".into(), convention.to_string(), "c - value".into()]];
            rows.extend(records.iter().map(|r| {
                let exact =
                    if r.value_den == "1" { r.value_num.clone() } else { format!("{}/{}", r.value_num, r.value_den) };
                vec![r.c.to_string(), exact, r.rendered.clone(), r.gap.clone()]
            }));
            grid(&rows)
        }
        Format::Csv => to_csv(&records, &["c", "convention", "value_num", "value_den", "rendered", "gap"]),
        Format::Json => to_json("variance", None, None, &records),
    })
}

/// Per-c CLT tables with K-side bounds. Rows are computed once up to the
/// largest requested c; output is ordered by ascending c.
/// `(c, sup_distance)` per requested c.
pub type SupSummary = Vec<(i64, f64)>;

pub fn clt_records(c_list: &[i64], normalization: Normalization) -> Result<(Vec<CltRecord>, SupSummary)> {
    let Some(&c_max) = c_list.iter().max() else {
        return Err(Error::Range("no crossing numbers given".into()));
    };
    for &c in c_list {
        require_c(c, 3)?;
    }
    let mut cs = c_list.to_vec();
    cs.sort_unstable();
    cs.dedup();

    let tri = triangle(c_max, Method::Both)?;
    let mut records = Vec::new();
    let mut summary = Vec::new();
    for c in cs {
        let row = tri.row(c).expect("row within triangle");
        let report = clt_report_for_row(row, normalization)?;
        for p in &report.points {
            let k = k_cdf_bounds_for_row(row, p.sigma as f64)?;
            records.push(CltRecord {
                c,
                sigma: p.sigma,
                t: p.t,
                f_before: rational_string(&p.f_before),
                f: rational_string(&p.f),
                f_decimal: decimal_render(&p.f, MOMENT_PLACES),
                phi: p.phi,
                k_lower: rational_string(&k.lower),
                k_upper: rational_string(&k.upper),
                k_exact: k.exact.as_ref().map(rational_string).unwrap_or_default(),
                sup_distance: report.sup_distance,
            });
        }
        summary.push((c, report.sup_distance));
    }
    Ok((records, summary))
}

pub fn cmd_clt(c_list: &[i64], normalization: Normalization, format: Format) -> Result<String> {
    let (records, summary) = clt_records(c_list, normalization)?;
    Ok(match format {
        Format::Table => {
            let mut out = String::new();
            for &(c, sup) in &summary {
                let mut rows = vec![["sigma", "t", "F(t-)", "F(t)", "phi(t)", "k_lower", "k_upper", "k_exact"]
                    .map(String::from)
                    .to_vec()];
                rows.extend(records.iter().filter(|r| r.c == c).map(|r| {
                    vec![
                        r.sigma.to_string(),
                        format!("{:.6}", r.t),
                        r.f_before.clone(),
                        r.f.clone(),
                        format!("{:.12}", r.phi),
                        r.k_lower.clone(),
                        r.k_upper.clone(),
                        r.k_exact.clone(),
                    ]
                }));
                let _ = writeln!(out, "c = {c} ({normalization})");
                out.push_str(&grid(&rows));
                let _ = writeln!(out, "sup_distance c={c} {sup:.12}\n");
            }
            out
        }
        Format::Csv => to_csv(
            &records,
            &["c", "sigma", "t", "f_before", "F", "f_decimal", "phi", "k_lower", "k_upper", "k_exact", "sup_distance"],
        ),
        Format::Json => {
            let summary = serde_json::json!(summary
                .iter()
                .map(|&(c, sup)| serde_json::json!({ "c": c, "sup_distance": sup }))
                .collect::<Vec<_>>());
            to_json("clt", Some(normalization), Some(summary), &records)
        }
    })
}

/// Verification report rendered in `format`, plus the process exit code.
pub fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Table => format!("{report}\n"),
        Format::Csv => {
            #[derive(Serialize)]
            struct Line<'a> {
                check: &'a str,
                status: &'a str,
                c: String,
                sigma: String,
                detail: &'a str,
            }
            let mut lines = Vec::new();
            for chk in &report.checks {
                if chk.passed() {
                    lines.push(Line {
                        check: &chk.name,
                        status: "pass",
                        c: String::new(),
                        sigma: String::new(),
                        detail: "",
                    });
                }
                for f in &chk.failures {
                    lines.push(Line {
                        check: &chk.name,
                        status: "fail",
                        c: f.c.to_string(),
                        sigma: f.sigma.map(|s| s.to_string()).unwrap_or_default(),
                        detail: &f.detail,
                    });
                }
            }
            let notes: Vec<String> =
                report.discrepancies.iter().map(|d| format!("printed {} computed {}", d.printed, d.computed)).collect();
            for (d, note) in report.discrepancies.iter().zip(&notes) {
                lines.push(Line {
                    check: "published_moment",
                    status: "note",
                    c: d.c.to_string(),
                    sigma: String::new(),
                    detail: note,
                });
            }
            to_csv(&lines, &["check", "status", "c", "sigma", "detail"])
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "tool": TOOL_NAME,
                "version": TOOL_VERSION,
                "kind": "verify",
                "method": Method::Both,
                "passed": report.passed(),
                "report": report,
            }))
            .expect("report serializes");
            s.push('\n');
            s
        }
    }
}

pub fn cmd_verify(c_max: i64, format: Format) -> Result<(String, i32)> {
    let report = run_verify(c_max)?;
    Ok((render_verify(&report, format), report.exit_code()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_ten_table_and_csv() {
        let table = cmd_row(10, Format::Table).unwrap();
        let last = table.lines().last().unwrap();
        let cells: Vec<_> = last.split_whitespace().collect();
        assert_eq!(cells, ["10", "1", "7", "20", "29", "20", "7", "1"]);
        assert!(table.lines().next().unwrap().contains("-6"));

        let csv = cmd_row(10, Format::Csv).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "c,sigma,count");
        assert_eq!(lines[1], "10,-6,1");
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn row_three() {
        let csv = cmd_row(3, Format::Csv).unwrap();
        assert_eq!(csv, "c,sigma,count\n3,2,1\n");
        assert!(cmd_row(2, Format::Csv).is_err());
    }

    #[test]
    fn json_is_self_describing() {
        let json = cmd_row(6, Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["tool"], TOOL_NAME);
        assert_eq!(v["method"], "both");
        assert_eq!(v["records"][1]["count"], "3");
    }

    #[test]
    fn counts_rows() {
        let csv = cmd_counts(3, 10, Format::Csv).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "c,T,K,Tp,t_over_2k");
        assert_eq!(lines[1], "3,1,1,1,0.500000000");
        assert_eq!(lines[4], "6,5,3,1,0.833333333");
        assert!(lines[8].starts_with("10,85,"));
        assert!(cmd_counts(5, 4, Format::Csv).is_err());
    }

    #[test]
    fn variance_table_values() {
        let recs = moment_records(7, 7, Convention::TrueCentral).unwrap();
        assert_eq!((recs[0].value_num.as_str(), recs[0].value_den.as_str()), ("296", "121"));
        let recs = moment_records(6, 14, Convention::PaperCenter).unwrap();
        let rendered: Vec<_> = recs.iter().map(|r| r.rendered.as_str()).collect();
        assert_eq!(rendered[2], "3.428571429");
        assert!(moment_records(5, 8, Convention::PaperCenter).is_err());
    }

    #[test]
    fn clt_six_has_center_point() {
        let csv = cmd_clt(&[6], Normalization::SqrtC, Format::Csv).unwrap();
        let center = csv.lines().find(|l| l.starts_with("6,0,")).unwrap();
        let fields: Vec<_> = center.split(',').collect();
        assert_eq!(fields[2].parse::<f64>().unwrap(), 0.0);
        assert_eq!(fields[4], "4/5");
        assert_eq!(fields[5], "0.800000000");
        assert_eq!(fields[6].parse::<f64>().unwrap(), 0.5);
        assert_eq!(fields[9], "5/6");
    }

    #[test]
    fn clt_orders_by_c() {
        let (_, summary) = clt_records(&[20, 6, 10, 6], Normalization::SqrtC).unwrap();
        let cs: Vec<_> = summary.iter().map(|s| s.0).collect();
        assert_eq!(cs, [6, 10, 20]);
        assert!(clt_records(&[], Normalization::SqrtC).is_err());
    }
}
