use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alpha-spectra"))
        .args(args)
        .env_remove("ALPHA_SPECTRA_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rho_column(o: &Output) -> Vec<f64> {
    stdout(o).lines().skip(1).map(|l| l.split_whitespace().nth(4).unwrap().parse().unwrap()).collect()
}

#[test]
fn rho_family_rows() {
    let o = run(&["rho", "--family", "gnk:7,3", "--alpha", "0,0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let rho = rho_column(&o);
    assert_eq!(rho.len(), 2);
    assert!(rho[0] > 3.0 && rho[1] > rho[0]);
}

#[test]
fn rho_closed_forms() {
    let o = run(&["rho", "--graph6", "Bw", "--alpha", "0"]);
    assert!((rho_column(&o)[0] - 2.0).abs() < 1e-10);
    let o = run(&["rho", "--family", "path:5", "--alpha", "0"]);
    assert!((rho_column(&o)[0] - 3f64.sqrt()).abs() < 1e-10);
}

#[test]
fn rho_input_errors() {
    let o = run(&["rho", "--family", "gnk:8;5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 5"));
    // two isolated vertices
    assert_eq!(run(&["rho", "--graph6", "A?"]).status.code(), Some(3));
    assert_eq!(run(&["rho", "--family", "path:4", "--alpha", "1"]).status.code(), Some(3));
    assert_eq!(run(&["rho"]).status.code(), Some(3));
    assert_eq!(run(&["nonsense"]).status.code(), Some(3));
}

#[test]
fn enum_counts() {
    let o = run(&["enum", "trees", "--n", "7", "--count"]);
    assert_eq!(stdout(&o).trim(), "11");
    let o = run(&["enum", "graphs", "--n", "5", "--cut-vertices", "3", "--count"]);
    // only P_5 has three cut vertices among 5-vertex graphs
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["enum", "graphs", "--n", "6", "--count"]);
    assert_eq!(stdout(&o).trim(), "112");
}

#[test]
fn enum_lists_graph6() {
    let o = run(&["enum", "trees", "--n", "6", "--matching", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(String::from).collect();
    let p6 = run(&["enum", "trees", "--n", "6"]);
    assert!(lines.iter().all(|l| stdout(&p6).contains(l.as_str())));
    assert!(lines.contains(&path6()));
}

/// P_6 as emitted by the enumerator: the only 6-vertex tree with two leaves.
fn path6() -> String {
    let o = run(&["enum", "trees", "--n", "6"]);
    stdout(&o)
        .lines()
        .find(|l| leaves(l) == 2)
        .expect("a path among the trees")
        .to_string()
}

/// Leaf count of a small graph6 string.
fn leaves(g6: &str) -> usize {
    let bytes: Vec<u8> = g6.bytes().map(|b| b - 63).collect();
    let n = bytes[0] as usize;
    let mut bits = bytes[1..].iter().flat_map(|b| (0..6).rev().map(move |i| b >> i & 1 == 1));
    let mut deg = vec![0; n];
    for j in 1..n {
        for i in 0..j {
            if bits.next().unwrap() {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    deg.iter().filter(|&&d| d == 1).count()
}

#[test]
fn enum_guards() {
    assert_eq!(run(&["enum", "trees", "--n", "13", "--count"]).status.code(), Some(3));
    assert_eq!(run(&["enum", "graphs", "--n", "8", "--count"]).status.code(), Some(3));
    assert_eq!(run(&["enum", "trees", "--n", "6", "--cut-vertices", "2"]).status.code(), Some(3));
    assert_eq!(run(&["enum", "trees", "--n", "6", "--matching", "4"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_alpha-spectra"))
        .args(["enum", "trees", "--n", "9", "--count"])
        .env("ALPHA_SPECTRA_BUDGET", "trees=8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_alpha-spectra"))
        .args(["enum", "trees", "--n", "9", "--count"])
        .env("ALPHA_SPECTRA_BUDGET", "trees=banana")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_theorem3_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t3.json");
    let o = run(&["verify", "theorem3", "--n", "4..10", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("Theorem3"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let outcomes = report["outcomes"].as_array().unwrap();
    // sum over n = 4..10 of floor(n/2), times five alpha values
    assert_eq!(outcomes.len(), (4..=10).map(|n| n / 2).sum::<usize>() * 5);
    assert!(outcomes.iter().all(|o| o["status"] == "pass"));
    assert!(report["version"].is_string());
    assert!(report["config"]["alpha_grid"].is_array());
}

#[test]
fn verify_smith_passes() {
    let o = run(&["verify", "smith", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("version,claim,"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("SmithRadii"));
}

#[test]
fn verify_refusals() {
    let o = run(&["verify", "theorem2", "--n", "9"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("refusing"));
    assert_eq!(run(&["verify", "theorem9"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "lemma2", "--alpha", "1.0"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "lemma2", "--n", "7..3"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "lemma2", "--jobs", "0"]).status.code(), Some(3));
}

#[test]
fn verify_inconclusive_exit_code() {
    // at alpha = 0.99 some Theorem 1 gaps are far below the 1e-8 tolerance
    let o = run(&["verify", "theorem1", "--alpha", "0.99", "--n", "12..12", "--no-timing"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    // raising the tolerance above every gap turns passes into inconclusives too
    let o = run(&["verify", "theorem2", "--n", "4", "--tolerance", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_job_independent() {
    let a = run(&["verify", "all", "--n", "4..6", "--jobs", "1", "--no-timing"]);
    let b = run(&["verify", "all", "--n", "4..6", "--jobs", "8", "--no-timing"]);
    assert_eq!(a.status.code(), b.status.code());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}
