use mitosis_kit::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mitosis-kit").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn degree_check_example() {
    let v = json(&["degree-check", "--family", "gz-a", "--n", "3", "--word", "1,2", "--lambda", "3,0,-3"]);
    assert_eq!(v["match"], true);
    assert_eq!(v["samples"][0]["lambda"], serde_json::json!([3, 0, -3]));
}

#[test]
fn volpoly_example() {
    let v = json(&["volpoly", "--family", "sgz", "--n", "2"]);
    assert_eq!(v["polynomial"], serde_json::json!({"3,1": "1/6", "1,3": "-1/6"}));
}

#[test]
fn ddo_mitosis_renders_three_tables() {
    let (code, out, _) = run(&["mitosis", "--family", "ddo-c2", "--ops", "2,1,2", "--render", "text"]);
    assert_eq!(code, 0);
    let tables: Vec<&str> = out.split("\n\n").filter(|t| !t.trim().is_empty()).collect();
    assert_eq!(tables.len(), 3);
    assert!(tables.iter().all(|t| t.matches('+').count() == 1));
    let v = json(&["mitosis", "--family", "ddo-c2", "--ops", "2,1,2"]);
    let cells: Vec<_> = v["faces"].as_array().unwrap().iter().map(|f| f["cells"].clone()).collect();
    assert_eq!(cells, vec![serde_json::json!([[2, 1]]), serde_json::json!([[2, 2]]), serde_json::json!([[3, 2]])]);
}

#[test]
fn structconst_and_ranks() {
    let v = json(&["structconst", "--family", "gz-a", "--n", "3", "--u", "1,2", "--v", "2,1"]);
    assert_eq!(v["terms"], serde_json::json!({"1": "1/1", "2": "1/1"}));
    let v = json(&["ring-ranks", "--family", "gz-a", "--n", "3"]);
    assert_eq!(v["ranks"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn conjecture_report_n2() {
    let v = json(&["conjecture-report", "--family", "sgz", "--n", "2", "--convention", "verbatim-order/identity-index"]);
    assert_eq!(v["conventions"][0]["matched"], 8);
}

#[test]
fn output_is_deterministic() {
    let args = ["build", "--family", "ddo-c2", "--lambda", "2,1"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let dir = std::env::temp_dir().join(format!("mitosis-kit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    let (code, out, _) = run(&["build", "--family", "gz-a", "--n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (_, direct, _) = run(&["build", "--family", "gz-a", "--n", "3"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["volpoly", "--family", "nope"]).0, 1);
    assert_eq!(run(&["build", "--family", "gz-a", "--n", "3", "--lambda", "1,2,3"]).0, 1);
    assert_eq!(run(&["degree-check", "--family", "gz-a", "--n", "3", "--word", "7"]).0, 1);
    assert_eq!(run(&["mitosis", "--family", "gz-a", "--n", "3"]).0, 1);
    // the statement index map disagrees with the oracle for sgz(2)
    let (code, out, _) = run(&["degree-check", "--family", "sgz", "--n", "2", "--word", "1"]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["match"], false);
    assert_eq!(run(&["--help"]).0, 0);
}
