use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use compel_cli::report::{read_csv, TableRow};
use compel_cli::RunReport;
use tempfile::TempDir;

fn compel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn c5(dir: &Path) -> PathBuf {
    write(dir, "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
}

#[test]
fn chi_of_c5_connected_is_four() {
    let dir = TempDir::new().unwrap();
    let g = c5(dir.path());
    let o = compel(&["chi", g.to_str().unwrap(), "--property", "connected"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("chi_P = 4"), "{}", stdout(&o));
}

#[test]
fn chi_of_p6_edge_has_valid_witness() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
    let o = compel(&["chi", g.to_str().unwrap(), "-p", "edge", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
    let compel_cli::report::Records::Chi(rows) = report.records else {
        panic!("wrong record kind")
    };
    assert_eq!(rows[0].value, Some(3));
    let witness = rows[0].witness.clone().unwrap();
    let coloring: String = witness
        .split(' ')
        .enumerate()
        .map(|(v, c)| format!("{v} {c}\n"))
        .collect();
    let c = write(dir.path(), "w.txt", &coloring);
    let o = compel(&[
        "check",
        g.to_str().unwrap(),
        c.to_str().unwrap(),
        "-p",
        "edge",
    ]);
    assert!(stdout(&o).starts_with("COMPELLING"), "{}", stdout(&o));
}

#[test]
fn check_verdicts_on_c5() {
    let dir = TempDir::new().unwrap();
    let g = c5(dir.path());
    let c = write(dir.path(), "col.txt", "0 0\n1 1\n2 0\n3 1\n4 2\n");
    let args = |p: &'static str| {
        vec![
            "check".to_string(),
            g.display().to_string(),
            c.display().to_string(),
            "-p".into(),
            p.into(),
        ]
    };
    let run = |p| {
        let a = args(p);
        compel(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let dom = run("dom");
    assert_eq!(dom.status.code(), Some(0));
    assert!(stdout(&dom).starts_with("COMPELLING"));
    let conn = run("connected");
    assert_eq!(conn.status.code(), Some(0));
    assert!(stdout(&conn).starts_with("NOT-COMPELLING"));
    assert!(stdout(&conn).contains("committee: 1 2 4"));
}

#[test]
fn improper_coloring_names_edge() {
    let dir = TempDir::new().unwrap();
    let g = c5(dir.path());
    let c = write(dir.path(), "bad.txt", "0 0\n1 0\n2 1\n3 0\n4 1\n");
    let o = compel(&[
        "check",
        g.to_str().unwrap(),
        c.to_str().unwrap(),
        "-p",
        "dom",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edge 0-1"));
}

#[test]
fn malformed_graph_exits_2() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "bad.txt", "3 2\n0 1\n");
    assert_eq!(
        compel(&["chi", g.to_str().unwrap(), "-p", "dom"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        compel(&["chi", "/nonexistent/graph.txt", "-p", "dom"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        compel(&["chi", g.to_str().unwrap(), "-p", "clique"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(compel(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn infeasible_exits_0() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "e3.txt", "3 0\n");
    let o = compel(&["chi", g.to_str().unwrap(), "-p", "edge"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("INFEASIBLE"));
}

#[test]
fn family_tables_match_closed_forms() {
    for (family, range, p) in [
        ("path", "2..12", "edge"),
        ("cycle", "3..12", "connected"),
        ("mop-random", "3..11", "connected"),
    ] {
        let o = compel(&["family-table", family, range, "-p", p, "--format", "csv"]);
        assert_eq!(o.status.code(), Some(0), "{family}");
        let rows: Vec<TableRow> = read_csv(&stdout(&o)).unwrap();
        assert!(!rows.is_empty());
        assert!(
            rows.iter().all(|r| r.matches == Some(true)),
            "{family}: {rows:?}"
        );
    }
    let o = compel(&[
        "family-table",
        "cycle",
        "3..12",
        "-p",
        "connected",
        "--format",
        "csv",
    ]);
    let values: Vec<_> = read_csv::<TableRow>(&stdout(&o))
        .unwrap()
        .iter()
        .map(|r| r.solver.unwrap())
        .collect();
    assert_eq!(values, vec![3, 2, 4, 5, 6, 7, 8, 9, 10, 11]);
}

#[test]
fn family_table_truncates_at_max_n() {
    let o = compel(&[
        "family-table",
        "path",
        "2..30",
        "-p",
        "edge",
        "--max-n",
        "9",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("truncated"));
    assert_eq!(read_csv::<TableRow>(&stdout(&o)).unwrap().len(), 8);
}

#[test]
fn csv_output_roundtrips() {
    let o = compel(&[
        "family-table",
        "split",
        "2..5",
        "-p",
        "edge",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let rows: Vec<TableRow> = read_csv(&text).unwrap();
    assert_eq!(compel_cli::report::write_csv(&rows).unwrap(), text);
}

#[test]
fn verify_suites_pass() {
    for suite in [
        "equivalences",
        "mop-claims",
        "td3",
        "bounds",
        "families",
        "extremal",
    ] {
        let o = compel(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("[FAIL]"));
    }
}

#[test]
fn reports_are_reproducible() {
    let run = || {
        let o = compel(&["verify", "td3", "--seed", "7", "--format", "json"]);
        let mut r: RunReport = serde_json::from_str(&stdout(&o)).unwrap();
        r.elapsed_ms = 0;
        r
    };
    assert_eq!(run(), run());
}

#[test]
fn td3_and_generate() {
    let dir = TempDir::new().unwrap();
    let o = compel(&["generate", "cycle", "6"]);
    let g = write(dir.path(), "c6.txt", &stdout(&o));
    let o = compel(&["td3", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3-class TDC:"));
    let k23 = write(dir.path(), "k23.txt", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    let o = compel(&["td3", k23.to_str().unwrap()]);
    assert!(stdout(&o).contains("chi_td = 3: false"));
    let e = write(dir.path(), "iso.txt", "3 1\n0 1\n");
    assert_eq!(compel(&["td3", e.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn timeout_exits_3() {
    let o = compel(&["verify", "all", "--timeout-secs", "0"]);
    assert_eq!(o.status.code(), Some(3));
}
