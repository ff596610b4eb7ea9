use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primegraph"))
        .args(args)
        .env_remove("PRIMEGRAPH_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Compares with tests/golden/<name>; UPDATE_GOLDEN=1 rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let actual = stdout(args);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

#[test]
fn adjacent_reports_criterion() {
    assert_eq!(stdout(&["adjacent", "A(6,2)", "2", "31"]), "non-adjacent (Prop3.1 clause 1)\n");
    assert_eq!(stdout(&["adjacent", "Alt(7)", "3", "5"]), "non-adjacent (Alt)\n");
    assert_eq!(stdout(&["adjacent", "M11", "2", "3"]), "adjacent (SporadicData)\n");
}

#[test]
fn indep_examples() {
    assert!(stdout(&["indep", "E8(2)"]).starts_with("t = 12\n"));
    assert!(stdout(&["indep", "Alt(27)", "--contains", "2"]).starts_with("t(2) = 1\n"));
    assert!(stdout(&["indep", "2G2(27)", "--contains", "2"]).starts_with("t(2) = 3\n"));
}

#[test]
fn golden_outputs() {
    golden("graph_2B2_8.json", &["graph", "2B2(8)", "--format", "json"]);
    golden("graph_Alt5.dot", &["graph", "Alt(5)", "--format", "dot"]);
    golden("graph_A3_3.txt", &["graph", "A3(3)"]);
    golden("indep_M11_2.json", &["indep", "M11", "--contains", "2", "--format", "json"]);
    golden("census_B2_3.json", &["census", "B2(3)", "--format", "json"]);
    golden("census_G2_3.csv", &["census", "G2(3)"]);
    golden("verify_table3.json", &["verify", "--tables", "3", "--format", "json"]);
}

#[test]
fn graph_json_counts() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["graph", "2B2(8)", "--format", "json"])).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert!(v["edges"].as_array().unwrap().is_empty());
    assert_eq!(v["provenance"].as_array().unwrap().len(), 6);
}

#[test]
fn dot_output_is_well_formed() {
    let dot = stdout(&["graph", "A3(3)", "--format", "dot"]);
    assert!(dot.starts_with("graph \"GK(A3(3))\" {\n") && dot.ends_with("}\n"));
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    let v: serde_json::Value = serde_json::from_str(&stdout(&["graph", "A3(3)", "--format", "json"])).unwrap();
    assert_eq!(edges, v["edges"].as_array().unwrap().len());
    assert!(edges > 0);
}

#[test]
fn verify_examples() {
    let out = stdout(&["verify", "--tables", "2"]);
    assert!(out.contains("tables: 26 rows, 52 checks, 0 mismatches"), "{out}");
    let out = stdout(&["verify", "--oracle", "--max-rank", "4", "--q", "2,3,4,5,7,8,9"]);
    assert!(out.ends_with("total mismatches: 0\n"), "{out}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["adjacent", "A1(6)", "2", "3"]), Some(2));
    assert_eq!(code(&["adjacent", "Alt(7)", "3", "11"]), Some(2));
    assert_eq!(code(&["adjacent", "Alt(7)", "3", "x"]), Some(2));
    assert_eq!(code(&["graph", "Foo"]), Some(2));
    assert_eq!(code(&["census", "M11"]), Some(2));
    assert_eq!(code(&["verify", "--tables", "10"]), Some(2));
    assert_eq!(code(&["indep", "Alt(7)", "--contains", "3", "--contains", "2"]), Some(2));
    assert_eq!(code(&["--budget", "1", "census", "A20(2)"]), Some(3));
    assert_eq!(code(&["nonsense"]), Some(2));
    let err = String::from_utf8(run(&["adjacent", "Alt(7)", "3", "11"]).stderr).unwrap();
    assert!(err.starts_with("error[vertex]: "), "{err}");
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_primegraph"))
        .args(["census", "A20(2)"])
        .env("PRIMEGRAPH_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn deterministic_output() {
    let args = ["graph", "F4(3)", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}
