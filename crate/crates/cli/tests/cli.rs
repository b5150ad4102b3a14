use std::io::Write;
use std::process::{Command, Output, Stdio};

use opturan::constructions::{construct_Gn, construct_Hprime};
use opturan::search::report::{probe_conjecture, verify_theorems, ReportRow, Table};
use opturan::search::{Engine, SearchConfig};
use opturan::{graph6, DoubleStarSpec, Mode};

fn opturan(args: &[&str]) -> Output {
    opturan_with_input(args, "")
}

fn opturan_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_opturan"))
        .args(args)
        .env_remove("OPTURAN_CACHE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn engine() -> Engine {
    Engine::new(SearchConfig::default()).unwrap()
}

fn spec(p: usize, q: usize) -> DoubleStarSpec {
    DoubleStarSpec::new(p, q).unwrap()
}

#[test]
fn construct_summaries() {
    let out = opturan(&["construct", "Gn", "--n", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), graph6::encode(&construct_Gn(12).unwrap()));
    let summary = lines.next().unwrap();
    assert!(summary.contains("n=12 edges=16"), "{summary}");
    assert!(summary.contains("free[S(2,2)]=true"));

    let out = opturan(&["construct", "Hprime", "--t", "3", "--i", "0"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), graph6::encode(&construct_Hprime(3, 0).unwrap()));
    assert!(text.contains("n=18 edges=29"));
    assert!(text.contains("free[S(2,3)]=true"));
}

#[test]
fn construct_rejects_bad_parameters() {
    assert_eq!(opturan(&["construct", "On", "--n", "4"]).status.code(), Some(1));
    assert_eq!(opturan(&["construct", "Gn"]).status.code(), Some(1));
    assert_eq!(opturan(&["construct", "Xn", "--n", "8"]).status.code(), Some(1));
}

#[test]
fn check_reports_each_line() {
    let g12 = graph6::encode(&construct_Gn(12).unwrap());
    let out = opturan_with_input(&["check"], &format!("C~\n{g12}\nnot graph6\n"));
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("outerplanar=false"));
    assert!(lines[1].contains("free=true edges=16"));
    assert!(lines[2].starts_with("line=3 error="));

    let out = opturan_with_input(&["check", "--p", "2", "--q", "3"], &format!("{g12}\n"));
    assert!(out.status.success());
}

#[test]
fn ex_matches_library() {
    let out = opturan(&["--format", "json", "ex", "--n", "10", "--p", "2", "--q", "2", "--mode", "general"]);
    assert!(out.status.success());
    let from_cli: Table<ReportRow> = serde_json::from_str(&stdout(&out)).unwrap();
    let direct = engine().ex(10, spec(2, 2), Mode::General).unwrap();
    assert_eq!(from_cli.rows, vec![ReportRow::from_result(&direct)]);
    assert_eq!(from_cli.rows[0].value, 14);

    let table = stdout(&opturan(&["ex", "--n", "10", "--p", "2", "--q", "2", "--mode", "general"]));
    assert!(table.contains("MATCH"));
    assert!(table.contains(&direct.witnesses[0]));

    let g6 = stdout(&opturan(&["--format", "graph6", "ex", "--n", "10", "--mode", "general"]));
    assert_eq!(g6.lines().collect::<Vec<_>>(), direct.witnesses);
}

#[test]
fn verify_matches_library_and_passes() {
    let out = opturan(&["--format", "json", "--workers", "2", "verify", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let from_cli: Table<ReportRow> = serde_json::from_str(&stdout(&out)).unwrap();
    let specs: Vec<_> = [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5)].iter().map(|&(p, q)| spec(p, q)).collect();
    let direct = verify_theorems(&engine(), &specs, 9).unwrap();
    assert_eq!(from_cli, direct);
    assert!(from_cli.rows.iter().all(|r| r.status.as_str() == "MATCH"));
}

#[test]
fn renderings_agree() {
    let args = ["verify", "--n-max", "7", "--spec", "2,2"];
    let json: Table<ReportRow> =
        serde_json::from_str(&stdout(&opturan(&[&["--format", "json"][..], &args].concat()))).unwrap();
    let csv = stdout(&opturan(&[&["--format", "csv"][..], &args].concat()));
    let table = stdout(&opturan(&args));
    for (row, line) in json.rows.iter().zip(csv.lines().skip(1)) {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[0], row.n.to_string());
        assert_eq!(cells[4], row.value.to_string());
        assert_eq!(cells[8], row.witness);
        assert!(table.contains(&row.witness));
    }
}

#[test]
fn probe_matches_library() {
    let out = opturan(&["--format", "json", "probe", "--from", "7", "--to", "9"]);
    assert!(out.status.success());
    let from_cli: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let direct = probe_conjecture(&engine(), 7, 9).unwrap();
    assert_eq!(from_cli, serde_json::to_value(&direct).unwrap());
}

#[test]
fn caps_refuse_without_override() {
    let out = opturan(&["verify", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--override-cap"));
    assert_eq!(opturan(&["ex", "--n", "15"]).status.code(), Some(3));
    assert_eq!(opturan(&["probe", "--from", "7", "--to", "13"]).status.code(), Some(3));
}

#[test]
fn usage_errors() {
    assert_eq!(opturan(&["ex", "--n", "6", "--p", "3", "--q", "2"]).status.code(), Some(1));
    assert_eq!(opturan(&["probe", "--from", "9", "--to", "7"]).status.code(), Some(1));
    assert_eq!(opturan(&["--workers", "0", "ex", "--n", "6"]).status.code(), Some(1));
    assert_eq!(opturan(&["--help"]).status.code(), Some(0));
}

#[test]
fn cache_env_is_used() {
    let dir = std::env::temp_dir().join(format!("opturan-cli-cache-{}", std::process::id()));
    let path = dir.join("results.tsv");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_opturan"))
            .args(["--format", "json", "ex", "--n", "8"])
            .env("OPTURAN_CACHE", &path)
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let stored = std::fs::read_to_string(&path).unwrap();
    assert!(stored.lines().any(|l| l.starts_with("8\t2\t2\tconnected\t10\t")), "{stored}");
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
