//! Plain-text graph and coloring files.
//!
//! Graph files start with a header `n m`, followed by `m` lines `u v`
//! (`0 <= u < v < n` when written; either order is accepted when read).
//! An optional final line `outer: v0 v1 ... v(n-1)` records the outer cycle
//! of a maximal outerplanar graph. Lines starting with `#` and blank lines
//! are ignored.
//!
//! Coloring files hold one `v c` pair per line, covering every vertex once.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{t}` is not a vertex index")))
        })
        .collect()
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    match parse_ints(line, s)?.as_slice() {
        &[a, b] => Ok((a, b)),
        other => Err(parse_err(
            line,
            format!("expected two numbers, found {}", other.len()),
        )),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::new(n).map_err(|e| parse_err(hline, e.to_string()))?;
    let mut seen = 0;
    let mut outer = None;
    for (line, l) in lines {
        if let Some(rest) = l.strip_prefix("outer:") {
            if outer.is_some() {
                return Err(parse_err(line, "duplicate outer line"));
            }
            outer = Some((line, parse_ints(line, rest)?));
            continue;
        }
        if outer.is_some() {
            return Err(parse_err(line, "edges must come before the outer line"));
        }
        let (u, v) = parse_pair(line, l)?;
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("edge {u}-{v} out of range for n = {n}"),
            ));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(line, format!("duplicate edge {u}-{v}")));
        }
        g.add_edge(u, v)
            .map_err(|e| parse_err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    if let Some((line, order)) = outer {
        g.set_outer_cycle(order)
            .map_err(|e| parse_err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(order) = g.outer_cycle() {
        let list: Vec<String> = order.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "outer: {}", list.join(" "));
    }
    out
}

/// Reads `v c` lines for a graph of order `n`. Color labels may be any
/// nonnegative integers; they are renumbered by first use along `0..n`.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut labels: Vec<Option<usize>> = vec![None; n];
    for (line, l) in content_lines(text) {
        let (v, c) = parse_pair(line, l)?;
        if v >= n {
            return Err(parse_err(
                line,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if labels[v].replace(c).is_some() {
            return Err(parse_err(line, format!("vertex {v} colored twice")));
        }
    }
    let labels: Vec<usize> = labels
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| parse_err(0, format!("vertex {v} has no color"))))
        .collect::<Result<_>>()?;
    Ok(Coloring::from_labels(&labels))
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, col) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{v} {col}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn roundtrip_with_outer() {
        let g = random_mop(7, 3).unwrap();
        let text = write_graph(&g);
        assert!(text.contains("outer: "));
        let h = parse_graph(&text).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(h.outer_cycle(), g.outer_cycle());
    }

    #[test]
    fn format_shape() {
        let text = write_graph(&path(3).unwrap());
        assert_eq!(text, "# P3\n3 2\n0 1\n1 2\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("3 1\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph("3 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("4 3\n0 1\n1 2\n2 3\nouter: 0 1 2 3\n"),
            Err(Error::Parse { line: 5, .. })
        ));
        let ok = parse_graph("# comment\n\n3 2\n# inside\n2 1\n0 1\n").unwrap();
        assert_eq!(ok.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn colorings() {
        let c = parse_coloring("0 5\n2 5\n1 9\n", 3).unwrap();
        assert_eq!(c.as_slice(), &[0, 1, 0]);
        assert_eq!(parse_coloring(&write_coloring(&c), 3).unwrap(), c);
        assert!(parse_coloring("0 1\n", 2).is_err());
        assert!(parse_coloring("0 1\n0 2\n1 1\n", 2).is_err());
        assert!(parse_coloring("0 1\n5 1\n", 2).is_err());
    }
}
