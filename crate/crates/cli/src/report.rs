//! Report rows and their text, CSV and JSON renderings.
//!
//! Sets and colorings are stored as space-separated integers so every row
//! is flat and survives a CSV round trip unchanged.

use std::fmt::Write as _;

use anyhow::Result;
use compel_core::{Coloring, PropertyKind, VertexSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub records: Records,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rows", rename_all = "kebab-case")]
pub enum Records {
    Chi(Vec<ChiRow>),
    Check(Vec<CheckRow>),
    Table(Vec<TableRow>),
    Verify(Vec<AssertionRow>),
    Td3(Vec<Td3Row>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiRow {
    pub graph: String,
    pub n: usize,
    pub property: PropertyKind,
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
    pub witness: Option<String>,
    pub infeasible_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub graph: String,
    pub property: PropertyKind,
    pub compelling: bool,
    pub method: String,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub n: usize,
    pub order: usize,
    pub property: PropertyKind,
    pub solver: Option<usize>,
    pub closed_form: Option<String>,
    pub matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AssertionRow {
    pub suite: String,
    pub assertion: String,
    pub checks: usize,
    pub failures: usize,
    pub example: Option<String>,
}

impl AssertionRow {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Td3Row {
    pub graph: String,
    pub n: usize,
    pub has_tdc3: bool,
    pub chi_td_is_3: bool,
    pub case: Option<String>,
    pub guessed: Option<String>,
    pub witness: Option<String>,
}

pub fn join<I: IntoIterator<Item = usize>>(items: I) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn set_text(s: VertexSet) -> String {
    join(s.iter())
}

pub fn coloring_text(c: &Coloring) -> String {
    join(c.as_slice().iter().copied())
}

pub fn write_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn read_csv<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

impl RunReport {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => match &self.records {
                Records::Chi(r) => write_csv(r),
                Records::Check(r) => write_csv(r),
                Records::Table(r) => write_csv(r),
                Records::Verify(r) => write_csv(r),
                Records::Td3(r) => write_csv(r),
            },
            Format::Text => Ok(self.text()),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        match &self.records {
            Records::Chi(rows) => rows.iter().for_each(|r| chi_text(&mut out, r)),
            Records::Check(rows) => {
                for r in rows {
                    let verdict = if r.compelling {
                        "COMPELLING"
                    } else {
                        "NOT-COMPELLING"
                    };
                    let _ = writeln!(
                        out,
                        "{verdict} ({} on {}, {})",
                        r.property, r.graph, r.method
                    );
                    if let Some(c) = &r.counterexample {
                        let _ = writeln!(out, "committee: {c}");
                    }
                }
            }
            Records::Table(rows) => {
                let _ = writeln!(
                    out,
                    "{:>4} {:>5} {:>7} {:>11} {:>6}",
                    "n", "order", "solver", "closed-form", "match"
                );
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{:>4} {:>5} {:>7} {:>11} {:>6}",
                        r.n,
                        r.order,
                        opt(r.solver.map(|v| v.to_string())),
                        opt(r.closed_form.clone()),
                        opt(r.matches.map(|b| b.to_string()))
                    );
                }
            }
            Records::Verify(rows) => {
                for r in rows {
                    let tag = if r.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "[{tag}] {}: {} ({} checks, {} failures)",
                        r.suite, r.assertion, r.checks, r.failures
                    );
                    if let Some(e) = &r.example {
                        let _ = writeln!(out, "    counterexample: {e}");
                    }
                }
            }
            Records::Td3(rows) => {
                for r in rows {
                    let _ = writeln!(out, "graph {} (n = {})", r.graph, r.n);
                    let _ = writeln!(
                        out,
                        "3-class TDC: {}",
                        if r.has_tdc3 { "yes" } else { "no" }
                    );
                    let _ = writeln!(out, "chi_td = 3: {}", r.chi_td_is_3);
                    if let (Some(case), Some(g)) = (&r.case, &r.guessed) {
                        let _ = writeln!(out, "case {case}, guessed {g}");
                    }
                    if let Some(w) = &r.witness {
                        vertex_lines(&mut out, w);
                    }
                }
            }
        }
        out
    }
}

fn opt(v: Option<String>) -> String {
    v.unwrap_or_else(|| "-".into())
}

fn vertex_lines(out: &mut String, colors: &str) {
    for (v, c) in colors.split_whitespace().enumerate() {
        let _ = writeln!(out, "{v}: {c}");
    }
}

fn chi_text(out: &mut String, r: &ChiRow) {
    let _ = writeln!(out, "graph {} (n = {})", r.graph, r.n);
    let _ = writeln!(out, "property {}", r.property);
    match r.value {
        Some(v) => {
            let _ = writeln!(out, "chi_P = {v}");
        }
        None => {
            let _ = writeln!(
                out,
                "INFEASIBLE: {}",
                r.infeasible_reason
                    .as_deref()
                    .unwrap_or("no compelling coloring")
            );
        }
    }
    let upper = r.upper_bound.map_or("?".to_string(), |u| u.to_string());
    let _ = writeln!(out, "bounds {} <= chi_P <= {upper}", r.lower_bound);
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "witness");
        vertex_lines(out, w);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Vec<TableRow> {
        vec![
            TableRow {
                family: "split".into(),
                n: 3,
                order: 6,
                property: PropertyKind::Edge,
                solver: Some(4),
                closed_form: Some(">3".into()),
                matches: Some(true),
            },
            TableRow {
                family: "fan".into(),
                n: 6,
                order: 7,
                property: PropertyKind::CDom,
                solver: None,
                closed_form: None,
                matches: None,
            },
        ]
    }

    #[test]
    fn csv_roundtrip() {
        let rows = table();
        let text = write_csv(&rows).unwrap();
        assert!(text.starts_with("family,n,order,property,solver,closed_form,matches\n"));
        assert_eq!(read_csv::<TableRow>(&text).unwrap(), rows);
    }

    #[test]
    fn json_roundtrip() {
        let report = RunReport {
            command: "family-table".into(),
            seed: 1,
            elapsed_ms: 0,
            records: Records::Table(table()),
        };
        let text = report.render(Format::Json).unwrap();
        assert_eq!(serde_json::from_str::<RunReport>(&text).unwrap(), report);
    }

    #[test]
    fn infeasible_text() {
        let row = ChiRow {
            graph: "E3".into(),
            n: 3,
            property: PropertyKind::Edge,
            value: None,
            lower_bound: 1,
            upper_bound: None,
            witness: None,
            infeasible_reason: Some("no vertex subset has property edge".into()),
        };
        let mut out = String::new();
        chi_text(&mut out, &row);
        assert!(out.contains("INFEASIBLE: no vertex subset"));
    }
}
