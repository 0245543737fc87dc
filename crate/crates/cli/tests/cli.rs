use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn gallery(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery").join(format!("{name}.morph"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphic")).args(args).output().expect("binary runs")
}

fn run_on(cmd: &[&str], name: &str, extra: &[&str]) -> Output {
    let path = gallery(name);
    let mut args: Vec<&str> = cmd.to_vec();
    args.push(path.to_str().unwrap());
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn decide_exit_codes() {
    let o = run_on(&["decide"], "ba-example", &["prime"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("b occurs exactly once"));
    assert_eq!(run_on(&["decide"], "thue-morse", &["primitive"]).status.code(), Some(0));
    let o = run_on(&["decide"], "fibonacci", &["periodic"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("No (conditional)"));
    assert!(stdout(&o).contains("64"));
}

#[test]
fn decide_json_verdict() {
    let o = run_on(&["decide"], "periodic-ab", &["pi", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "Yes");
    assert_eq!(v["certificate"]["kind"], "periodic");
}

#[test]
fn analyze_report_shape() {
    let o = run_on(&["analyze"], "paper12", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let keys = ["morphism", "shape", "matrix", "word", "complexity", "properties", "graded", "diagnostics"];
    let positions: Vec<usize> =
        keys.iter().map(|k| text.find(&format!("\n  \"{k}\":")).unwrap_or_else(|| panic!("missing {k}"))).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["properties"]["prime"]["value"], "Yes");
    assert_eq!(v["graded"]["rotation_audit"]["pass"], true);
    assert_eq!(v["diagnostics"]["convention_mismatch"], true);
    assert_eq!(v["diagnostics"]["weights_transposed"][4], "655");
    assert_eq!(v["diagnostics"]["gcd_w4_w5"]["direct"], "3");
    assert_eq!(v["diagnostics"]["gcd_w4_w5"]["transposed"], "1");
    assert_eq!(v["complexity"]["hilbert"][1], 13);
}

#[test]
fn analyze_periodic_and_strict() {
    let o = run_on(&["analyze"], "periodic-ab", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["properties"]["pi"]["value"], "Yes");
    assert_eq!(v["properties"]["noetherian"]["value"], "Yes");
    assert_eq!(v["properties"]["gk_dimension"], 1);
    assert!(v["word"]["eventually_periodic"]["certificate"]["text"].as_str().unwrap().contains("(ε)(a b)^ω"));
    // Jacobson radical is not covered by the encoded rules here.
    assert_eq!(run_on(&["analyze"], "periodic-ab", &["--strict"]).status.code(), Some(3));
    assert_eq!(run_on(&["analyze"], "paper12", &["--strict"]).status.code(), Some(0));
}

#[test]
fn missing_file_and_parse_errors() {
    assert_eq!(run(&["analyze", "nonexistent.morph"]).status.code(), Some(2));
    let mut f = tempfile();
    writeln!(f.1, "letters: a b\nstart: a\nmap a -> a b\nmap b -> c").unwrap();
    let o = run(&["decide", f.0.to_str().unwrap(), "prime"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    assert!(o.stdout.is_empty());
}

fn tempfile() -> (PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("morphic-cli-test-{}.morph", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn audit_exit_codes() {
    let o = run_on(&["audit"], "paper12", &["--max-len", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run_on(&["audit"], "periodic-ab", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample: a b"));
    let o = run_on(&["audit"], "fibonacci", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rotation_audit"]["max_len"], 64);
}

#[test]
fn gallery_commands() {
    let o = run(&["gallery", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["paper12", "thue-morse", "fibonacci", "periodic-ab", "ba-example"]);
    let o = run(&["gallery", "show", "paper12"]);
    let text = stdout(&o);
    assert_eq!(text, std::fs::read_to_string(gallery("paper12")).unwrap());
    assert_eq!(text.lines().filter(|l| l.starts_with("map ")).count(), 12);
    assert!(text.contains("degree x1 = 1") && text.contains("degree default = 2"));
    assert_eq!(run(&["gallery", "show", "nope"]).status.code(), Some(2));
}

#[test]
fn rejects_non_positive_bounds() {
    let o = run_on(&["analyze"], "fibonacci", &["--max-len", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
