use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn ufi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ufi")).args(args).output().unwrap()
}

fn ufi_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ufi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn betti_of_running_example() {
    let o = ufi(&["betti", &data("running.json")]);
    assert!(o.status.success());
    let out = stdout(&o);
    let row = out.lines().find(|l| l.trim_start().starts_with("6 |")).unwrap();
    let cells: Vec<&str> = row.split('|').nth(1).unwrap().split_whitespace().collect();
    assert_eq!(cells, ["17", "28", "14", "2"]);

    let j = json(&ufi(&["--json", "betti", "--oracle", &data("running.json")]));
    assert_eq!(j["agree"], true);
    assert_eq!(j["table"], serde_json::json!([[0, 6, 17], [1, 7, 28], [2, 8, 14], [3, 9, 2]]));
}

#[test]
fn check_reports_link_witness() {
    let o = ufi(&["check", &data("nonnested.json")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not nested: link(f) ⊄ link(a)"));
    let j = json(&ufi(&["check", "--json", &data("running.json")]));
    assert_eq!(j["nested"], true);
    assert_eq!(j["ordered"], true);
}

#[test]
fn precondition_exit_code_prints_witness() {
    let o = ufi(&["betti", &data("nonnested.json")]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("not nested: link(f) ⊄ link(a)"));
    assert_eq!(ufi(&["cubical", &data("awkward.json")]).status.code(), Some(4));
    assert_eq!(ufi(&["invariants", &data("empty.json")]).status.code(), Some(4));
}

#[test]
fn parse_exit_code() {
    assert_eq!(ufi(&["betti", "{bad"]).status.code(), Some(2));
    assert_eq!(ufi(&["betti", "/no/such/file.json"]).status.code(), Some(2));
    let o = ufi(&["check", r#"{"vertices":"ab","facets":["az"]}"#]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown vertex"));
    let o = ufi(&["check", r#"{"vertices":"ab","facets":["ab"],"colour":[]}"#]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_exit_code_and_override() {
    let o = ufi(&["betti", "--oracle", "--max-oracle-generators", "5", &data("running.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("generator count is 17"));
    assert_eq!(ufi(&["check", "--max-vertices", "3", &data("running.json")]).status.code(), Some(3));
    assert_eq!(ufi(&["primes", "--powers", "5", &data("running.json")]).status.code(), Some(3));
    let o = ufi(&["primes", "--powers", "5", "--max-power", "5", &data("running.json")]);
    assert!(o.status.success());
}

#[test]
fn empty_complex_oracle() {
    let j = json(&ufi(&["betti", "--oracle", "--json", &data("empty.json")]));
    assert_eq!(j["oracle"], serde_json::json!([[0, 0, 1]]));
    assert_eq!(j["agree"], true);
}

#[test]
fn non_nested_oracle_still_runs() {
    let o = ufi(&["betti", "--oracle", "--json", &data("awkward.json")]);
    assert!(o.status.success());
    let j = json(&o);
    let b1: u64 = j["oracle"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e[0] == 1)
        .map(|e| e[2].as_u64().unwrap())
        .sum();
    assert_eq!(b1, 9);
}

#[test]
fn ideal_json_round_trip() {
    let ideal = ufi(&["ideal", "--json", &data("running.json")]);
    assert!(ideal.status.success());
    let direct = json(&ufi(&["betti", "--oracle", "--json", &data("running.json")]));
    let via = json(&ufi_stdin(&["betti", "--json", "-"], &ideal.stdout));
    assert_eq!(via["oracle"], direct["oracle"]);
    let again = ufi_stdin(&["ideal", "--json", "-"], &ideal.stdout);
    assert_eq!(again.stdout, ideal.stdout);

    let tagged = json(&ufi(&["ideal", "--json", "--tag-faces", &data("running.json")]));
    assert_eq!(tagged["faces"][0], "∅");
    assert_eq!(tagged["generators"][0], "x1^2*x2^2*x3^2");
    assert_eq!(tagged["generators"].as_array().unwrap().len(), 17);

    let primes = json(&ufi(&["primes", "--json", &data("running.json")]));
    let via = json(&ufi_stdin(&["primes", "--json", "-"], &ideal.stdout));
    assert_eq!(via["primes"], primes["primes"]);
}

#[test]
fn poset_json_round_trip() {
    let p = ufi(&["poset", "--json", &data("running.json")]);
    let j = json(&p);
    assert_eq!(j["elements"].as_array().unwrap().len(), 17);
    assert_eq!(j["covers"].as_array().unwrap().len(), 28);
    let again = ufi_stdin(&["poset", "--json", "-"], &p.stdout);
    assert_eq!(again.stdout, p.stdout);
    let dot = stdout(&ufi(&["poset", &data("running.json")]));
    let dot_again = stdout(&ufi_stdin(&["poset", "-"], &p.stdout));
    assert_eq!(dot, dot_again);
    assert!(dot.starts_with("digraph"));
}

#[test]
fn product_round_trip() {
    let o = ufi(&["product", "--json", &data("product_left.json"), &data("product_right.json")]);
    assert!(o.status.success());
    let j = json(&o);
    assert_eq!(j["colouring"].as_array().unwrap().len(), 3);
    let check = json(&ufi_stdin(&["check", "--json", "-"], &o.stdout));
    assert_eq!(check["ordered"], true);
    let text = stdout(&ufi(&["product", &data("product_left.json"), &data("product_right.json")]));
    assert!(text.contains("facets: cg adf adg aef bdf bdg bef cdf"));
    assert!(text.contains("ideal equals the product: yes"));
}

#[test]
fn primes_and_powers() {
    let j = json(&ufi(&["primes", "--json", "--powers", "2", "--oracle", &data("running_d.json")]));
    assert_eq!(j["agree"], true);
    assert_eq!(j["primes"].as_array().unwrap().len(), 9);
    assert_eq!(j["powers"][1]["new"], serde_json::json!(["(x1, x2, x4)", "(x1, x2, x3, x4)"]));
    assert_eq!(j["persistent"], true);
}

#[test]
fn invariants_of_running_example() {
    let j = json(&ufi(&["invariants", "--json", "--oracle", &data("running.json")]));
    assert_eq!(j["multiplicity"], 13);
    assert_eq!(j["projective_dimension"], 4);
    assert_eq!(j["depth"], 2);
    assert_eq!(j["regularity"], 6);
    assert_eq!(j["oracle_mismatches"], serde_json::json!([]));
}

#[test]
fn bs_coefficients() {
    let out = stdout(&ufi(&["bs", &data("running.json")]));
    assert_eq!(out.trim(), "1·π(6) + 6·π(6,7) + 16·π(6,7,8) + 12·π(6,7,8,9)");
    let out = stdout(&ufi(&["bs", "--quotient", "--oracle", &data("running.json")]));
    assert!(out.starts_with("26·π(0,6,7) + 116·π(0,6,7,8) + 108·π(0,6,7,8,9)"));
    assert!(out.contains("oracle: agrees"));
}

#[test]
fn cubical_outputs() {
    let j = json(&ufi(&["cubical", "--json", &data("running.json")]));
    assert_eq!(j["f_vector"], serde_json::json!([17, 28, 14, 2]));
    assert_eq!(j["collapses"], 30);
    let dot = stdout(&ufi(&["cubical", "--dot", &data("running.json")]));
    assert!(dot.starts_with("graph C {"));
    assert_eq!(dot.matches(" -- ").count(), 28);
    let r = ufi(&["cubical", "--resolution", "--json", &data("running.json")]);
    assert!(r.status.success());
    let j = json(&r);
    assert_eq!(j["verification"]["betti_agree"], true);
    assert_eq!(j["verification"]["cell_degrees"], 61);
    let ranks: Vec<usize> = j["resolution"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["basis"].as_array().unwrap().len())
        .collect();
    assert_eq!(ranks, [1, 17, 28, 14, 2]);
}

#[test]
fn chromatic_numbers() {
    let j = json(&ufi(&["chromatic", "--json", r#"{"vertices":"abcde","facets":["abc","bd","cde"]}"#]));
    assert_eq!(j["chromatic_number"], 3);
    assert_eq!(j["nested_chromatic_number"], 5);
    assert_eq!(j["graph_nested_chromatic_number"], 3);
}

#[test]
fn verify_bundle() {
    for f in ["running.json", "running_d.json", "empty.json", "product_right.json"] {
        let o = ufi(&["verify", &data(f)]);
        assert!(o.status.success(), "{f}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    assert_eq!(ufi(&["verify", &data("nonnested.json")]).status.code(), Some(4));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--json"],
        vec!["primes", "--powers", "3"],
        vec!["cubical", "--resolution"],
        vec!["poset"],
    ] {
        let mut a = args.clone();
        let path = data("running.json");
        a.push(&path);
        assert_eq!(ufi(&a).stdout, ufi(&a).stdout, "{args:?}");
    }
}

#[test]
fn empty_classes_need_flag() {
    let t = r#"{"vertices":"ab","facets":["ab"],"colouring":["a","b",[]]}"#;
    let o = ufi(&["check", t]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("class 3 is empty"));
    assert!(ufi(&["check", "--allow-empty-classes", t]).status.success());
}

#[test]
fn usage_errors_exit_two() {
    let o = ufi(&["cubical", "--dot", "--resolution", &data("running.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(ufi(&["frobnicate"]).status.code(), Some(2));
}
