use std::process::{Command, Output};

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .env_remove("HOPF_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn catalog_lists_every_entry() {
    let o = hopf(&["catalog"]);
    assert!(o.status.success());
    let v = json(&o);
    let names: Vec<&str> = v["outputs"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), 10);
    for n in ["smash:a4-z9", "smash:s5-z3", "smash:s8-z8", "group:pq-5-11-3", "double:S3"] {
        assert!(names.contains(&n), "{n}");
    }
}

#[test]
fn a4z9_has_nonintegral_third_indicators() {
    let o = hopf(&["indicators", "--algebra", "smash:a4-z9", "--m", "3", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.contains(",3,3,1,1+z@3,")).collect();
    assert_eq!(rows.len(), 2, "{text}");
    assert!(rows.iter().all(|r| r.contains(",,definition;closed_form;rotation")));
}

#[test]
fn pq_order_three() {
    let o = hopf(&["order", "--algebra", "group:pq-5-11-3", "--char", "dim5"]);
    assert!(o.status.success());
    let row = &json(&o)["outputs"][0];
    assert_eq!(row["ord"], 3);
    assert_eq!(row["ord_divides_dim"], false);
    assert_eq!(row["ord_divides_dim_mult"], true);
}

#[test]
fn pq_index_and_dot_output() {
    let dir = std::env::temp_dir().join(format!("hopf-cli-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.dot");
    let o = hopf(&["index", "--algebra", "group:pq-5-11-3", "--char", "dim5", "--dot", path.to_str().unwrap()]);
    assert!(o.status.success());
    let row = &json(&o)["outputs"][0];
    assert_eq!(row["index"], 1);
    assert_eq!(row["perron"], 5);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_passes_on_a4z9() {
    let o = hopf(&["verify", "all", "--algebra", "smash:a4-z9"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["outputs"]["failed"], 0);
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["indicators", "--algebra", "double:S3", "--m", "4", "--k", "coprime"];
    let a = hopf(&args);
    let b = hopf(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timings_appear_only_on_request() {
    assert!(json(&hopf(&["exponent", "--algebra", "group:S3"])).get("timings_ms").is_none());
    let v = json(&hopf(&["--timings", "exponent", "--algebra", "group:S3"]));
    assert!(v["timings_ms"]["total"].is_u64());
}

#[test]
fn bad_descriptor_reports_position() {
    let dir = std::env::temp_dir().join(format!("hopf-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"kind\":\"group\",\n \"group\":{\"kind\":\"cyclic\",\"n\":3,}}").unwrap();
    let o = hopf(&["exponent", "--algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2 column"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_four() {
    assert_eq!(hopf(&["indicators"]).status.code(), Some(4));
    assert_eq!(hopf(&["exponent", "--algebra", "no-such-thing"]).status.code(), Some(4));
    assert_eq!(hopf(&["--help"]).status.code(), Some(0));
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(["exponent", "--algebra", "group:S3", "--seed", "5"])
        .env("HOPF_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(json(&o)["seed"], 11);
    let o = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(["exponent", "--algebra", "group:S3"])
        .env("HOPF_SEED", "eleven")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn exponent_of_the_double_of_s3() {
    let v = json(&hopf(&["exponent", "--algebra", "double:S3"]));
    assert_eq!(v["outputs"]["exp"], 6);
    assert_eq!(v["outputs"]["closed_form"], 6);
}
