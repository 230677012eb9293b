use std::fs;
use std::io::Read;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use compel_core::io::{parse_coloring, parse_graph, write_graph};
use compel_core::td3::chi_td_is_3;
use compel_core::{
    chi_p_with, has_tdc3, is_compelling, min_property_set_with, CheckMethod, Graph, Limits,
};

use crate::args::{Cli, Command, GlobalOpts};
use crate::report::*;
use crate::suites::{run_suite, Ctx};

/// A finished command. `failed` is set when a verification assertion
/// failed; `output` is the rendered report, or raw text for `generate`.
pub struct Outcome {
    pub report: Option<RunReport>,
    pub output: String,
    pub failed: bool,
    pub warnings: Vec<String>,
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = read_source(path)?;
    let g = parse_graph(&text).with_context(|| format!("{}", path.display()))?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .filter(|s| *s != "-")
        .unwrap_or("stdin");
    Ok(g.with_name(name))
}

fn limits(opts: &GlobalOpts) -> Limits {
    Limits::uniform(opts.max_n)
}

pub fn execute(cli: &Cli, echo: &str) -> Result<Outcome> {
    let opts = &cli.global;
    let start = Instant::now();
    let mut warnings = Vec::new();
    let mut failed = false;
    let records = match &cli.command {
        Command::Chi { graph, property } => {
            let g = load_graph(graph)?;
            let r = chi_p_with(&g, *property, &limits(opts))?;
            let reason = match r.value {
                Some(_) => None,
                None if min_property_set_with(*property, &g, &limits(opts))?.is_none() => {
                    Some(format!("no vertex subset has property {property}"))
                }
                None => Some(format!("no proper coloring compels {property}")),
            };
            Records::Chi(vec![ChiRow {
                graph: g.name().unwrap_or_default().to_string(),
                n: g.n(),
                property: *property,
                value: r.value,
                lower_bound: r.lower_bound,
                upper_bound: r.upper_bound,
                witness: r.witness.as_ref().map(coloring_text),
                infeasible_reason: reason,
            }])
        }
        Command::Check {
            graph,
            coloring,
            property,
        } => {
            let g = load_graph(graph)?;
            let c = parse_coloring(&read_source(coloring)?, g.n())
                .with_context(|| format!("{}", coloring.display()))?;
            c.check_proper(&g)?;
            let r = is_compelling(&g, &c, *property)?;
            Records::Check(vec![CheckRow {
                graph: g.name().unwrap_or_default().to_string(),
                property: *property,
                compelling: r.verdict,
                method: match r.method {
                    CheckMethod::PerVertexFast => "per-vertex".into(),
                    CheckMethod::RcSearch => "committee-search".into(),
                },
                counterexample: r.counterexample.map(set_text),
            }])
        }
        Command::FamilyTable {
            family,
            range,
            property,
        } => {
            let lo = range.lo.max(family.min_n());
            if lo > range.lo {
                warnings.push(format!(
                    "{} starts at n = {}; skipping smaller values",
                    family.name(),
                    lo
                ));
            }
            let mut rows = Vec::new();
            for n in lo..=range.hi {
                if family.order(n) > opts.max_n {
                    warnings.push(format!(
                        "range truncated at n = {}: order {} exceeds --max-n {}",
                        n - 1,
                        family.order(n),
                        opts.max_n
                    ));
                    break;
                }
                let g = family.build(n, opts.seed)?;
                let solver = chi_p_with(&g, *property, &limits(opts))?.value;
                let e = family.expectation(&g, n, *property, &limits(opts))?;
                rows.push(TableRow {
                    family: family.name().into(),
                    n,
                    order: g.n(),
                    property: *property,
                    solver,
                    closed_form: e.label(),
                    matches: e.matches(solver),
                });
            }
            failed = rows.iter().any(|r| r.matches == Some(false));
            Records::Table(rows)
        }
        Command::Verify { suite } => {
            let ctx = Ctx {
                seed: opts.seed,
                max_n: opts.max_n,
                limits: limits(opts),
            };
            let rows = run_suite(*suite, &ctx)?;
            failed = rows.iter().any(|r| !r.passed());
            Records::Verify(rows)
        }
        Command::Td3 { graph } => {
            let g = load_graph(graph)?;
            if g.n() < 3 || g.has_isolated_vertex() {
                bail!("the td3 tester needs n >= 3 and no isolated vertices");
            }
            let w = has_tdc3(&g);
            Records::Td3(vec![Td3Row {
                graph: g.name().unwrap_or_default().to_string(),
                n: g.n(),
                has_tdc3: w.is_some(),
                chi_td_is_3: chi_td_is_3(&g),
                case: w.as_ref().map(|w| format!("{:?}", w.case)),
                guessed: w.as_ref().map(|w| join(w.guessed.iter().copied())),
                witness: w.as_ref().map(|w| coloring_text(&w.coloring)),
            }])
        }
        Command::Generate { family, n } => {
            if *n < family.min_n() {
                bail!("{} needs n >= {}", family.name(), family.min_n());
            }
            let g = family.build(*n, opts.seed)?;
            return Ok(Outcome {
                report: None,
                output: write_graph(&g),
                failed: false,
                warnings,
            });
        }
    };
    let report = RunReport {
        command: echo.to_string(),
        seed: opts.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
        records,
    };
    let output = report.render(opts.format)?;
    Ok(Outcome {
        report: Some(report),
        output,
        failed,
        warnings,
    })
}
