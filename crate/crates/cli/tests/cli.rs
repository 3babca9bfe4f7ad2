use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use twist_cli::InvariantReport;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    root().join("data").join(name).display().to_string()
}

fn twist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn assert_schema(schema: &str, value: &Value) {
    let path = root().join("schemas").join(schema);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find(|l| l.starts_with(key) && l[key.len()..].starts_with("  "))
        .unwrap_or_else(|| panic!("no {key} line in\n{text}"))[key.len()..]
        .trim()
}

#[test]
fn trefoil_report() {
    let o = twist(&["invariants", "--strands", "2", "--word", "1 1 1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(line(&text, "alexander"), "t^-1 - 1 + t");
    assert_eq!(line(&text, "genus bound"), "1");
    assert_eq!(line(&text, "jones"), "t + t^3 - t^4");
}

#[test]
fn unknot_report() {
    let o = twist(&["invariants", "--strands", "2", "--word", "1", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_schema("invariant_report.schema.json", &v);
    assert_eq!(v["self_linking"], -1);
    assert_eq!(v["components"], 1);
    assert_eq!(v["alexander_text"], "1");
}

#[test]
fn beta_zero_breadth() {
    let o = twist(&["invariants", "--strands", "4", "--family", "beta", "--n", "0", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_schema("invariant_report.schema.json", &v);
    assert_eq!(v["breadth"], 2);
    assert_eq!(v["surface"]["genus"], 1);
}

#[test]
fn bandword_input_carries_a_surface() {
    let o = twist(&["invariants", "--strands", "4", "--bandword", "B(1,4) 2 B(2,4) B(1,3) 2", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_schema("invariant_report.schema.json", &v);
    assert_eq!(v["surface"]["euler_characteristic"], -1);
    let back: InvariantReport = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&back).unwrap(), v);
}

#[test]
fn report_round_trips() {
    for args in [
        ["--strands", "3", "--word", "1 -2 1 -2"],
        ["--strands", "2", "--word", "1 1"],
    ] {
        let mut full = vec!["invariants", "--json"];
        full.extend(args);
        let o = twist(&full);
        let report: InvariantReport = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", stdout(&o));
    }
}

#[test]
fn families() {
    let cases = [("gamma", "1", "2"), ("beta", "1", "3"), ("beta", "0", "1")];
    for (kind, n, genus) in cases {
        let o = twist(&["family", kind, "--n", n, "--json"]);
        assert!(o.status.success());
        let v = json(&o);
        assert_schema("family_report.schema.json", &v);
        assert_eq!(v["surface"]["genus"].to_string(), genus, "{kind} {n}");
        assert_eq!(v["genus_certified"], true);
    }
    let text = stdout(&twist(&["family", "beta", "--n", "1"]));
    assert_eq!(line(&text, "genus"), "3 (certified)");
    assert_eq!(line(&text, "breadth"), "6");
    let text = stdout(&twist(&["family", "beta", "--n", "2"]));
    assert!(line(&text, "genus").starts_with('5'));
}

#[test]
fn inputs_match_their_schemas() {
    for (file, schema) in [
        ("m8_20_bandword.json", "qp_bandword.schema.json"),
        ("m8_20_sites.json", "sites.schema.json"),
        ("no_sites.json", "sites.schema.json"),
        ("corrupted_sites.json", "sites.schema.json"),
    ] {
        let v: Value = serde_json::from_str(&std::fs::read_to_string(data(file)).unwrap()).unwrap();
        assert_schema(schema, &v);
    }
    let o = twist(&["family", "gamma", "--n", "2", "--json"]);
    assert_schema("embedded_bandword.schema.json", &json(&o)["bandword"]);
}

#[test]
fn unknotify_worked_example() {
    let o = twist(&["unknotify", &data("m8_20_bandword.json"), &data("m8_20_sites.json"), "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_schema("theorem_a_output.schema.json", &v);
    assert_eq!(v["certificate"]["gamma"]["components"], 1);
    assert_eq!(v["certificate"]["gamma"]["self_linking"], -1);
    assert_eq!(v["certificate"]["gamma_alexander"]["coeffs"], serde_json::json!([1]));
    assert_eq!(v["certificate"]["sublink"]["strands"], 3);

    let text = stdout(&twist(&["unknotify", &data("m8_20_bandword.json"), &data("m8_20_sites.json")]));
    assert_eq!(line(&text, "Δ(γ)"), "1");
    assert_eq!(line(&text, "V(γ)"), "1");
    assert!(!text.contains("FAILED"));
}

#[test]
fn unknotify_without_sites_passes_through() {
    let o = twist(&["unknotify", &data("m8_20_bandword.json"), &data("no_sites.json"), "--json"]);
    let v = json(&o);
    assert_schema("theorem_a_output.schema.json", &v);
    assert_eq!(v["beta_prime"], v["gamma"]);
    assert_eq!(v["added_strands"], serde_json::json!([]));
    // m(8_20) itself is not an unknot
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Δ(γ) = 1"));
}

#[test]
fn corrupted_site_is_a_pattern_error() {
    let o = twist(&["unknotify", &data("m8_20_bandword.json"), &data("corrupted_sites.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("site 0"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let o = twist(&["invariants", "--strands", "2", "--word", "1 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error"));
    assert_eq!(twist(&["invariants", "--strands", "2", "--word", "2"]).status.code(), Some(2));
    assert_eq!(twist(&["invariants", "--word", "1"]).status.code(), Some(2));
    assert_eq!(twist(&["family", "delta", "--n", "1"]).status.code(), Some(2));
    assert_eq!(twist(&["unknotify", "/nonexistent", "/nonexistent"]).status.code(), Some(2));
}

#[test]
fn no_jones_skips_jones() {
    let text = stdout(&twist(&["invariants", "--strands", "2", "--word", "1 1 1", "--no-jones"]));
    assert!(!text.contains("jones"));
    let v = json(&twist(&["invariants", "--strands", "2", "--word", "1 1 1", "--no-jones", "--json"]));
    assert!(v["jones"].is_null());
}

#[test]
fn max_strands_guards_jones() {
    let o = twist(&["invariants", "--strands", "4", "--word", "1 2 3", "--max-strands", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds"));
}

#[test]
fn json_is_byte_deterministic() {
    let (bandword, sites) = (data("m8_20_bandword.json"), data("m8_20_sites.json"));
    let runs = [
        vec!["family", "beta", "--n", "2", "--json"],
        vec!["invariants", "--strands", "3", "--word", "1 -2 1 -2 1", "--json"],
        vec!["unknotify", &bandword, &sites, "--json"],
    ];
    for args in runs {
        assert_eq!(twist(&args).stdout, twist(&args).stdout, "{args:?}");
    }
}

#[test]
fn verify_checklist() {
    let a = twist(&["verify", "--json", "--no-jones"]);
    let b = twist(&["verify-paper", "--json", "--no-jones"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_schema("verify_report.schema.json", &v);
    let passed = v["passed"].as_bool().unwrap();
    assert_eq!(a.status.code(), Some(if passed { 0 } else { 1 }));
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 9);
    for c in criteria {
        for k in c["checks"].as_array().unwrap() {
            assert!(!k["name"].as_str().unwrap().contains("V("), "{k}");
        }
    }
    assert!(criteria[7]["skipped"].as_array().unwrap().len() == 2);

    let text = stdout(&twist(&["verify", "--no-jones"]));
    assert!(text.contains("[PASS] 1."));
    assert!(text.contains(" ms)"));
    assert!(text.contains("skip"));
}

#[test]
fn budget_zero_surfaces_the_error() {
    let o = twist(&["verify", "--no-jones", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeded its budget of 0 steps"), "{}", stderr(&o));
    assert!(stdout(&o).contains("error: handle reduction exceeded"));
}
