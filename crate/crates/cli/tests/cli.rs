use std::io::Write;
use std::process::{Command, Output, Stdio};

use hypdet::sl2::{equivariant_basis, multiplication_tensor};
use hypdet::tensor::{decide, random_tensor, DecideOptions};
use hypdet::{ModuleSpec, Tensor3};
use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hypdet"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hypdet");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn analyze(tensor: &str, extra: &[&str]) -> (Output, Value) {
    let mut args = vec!["analyze"];
    args.extend_from_slice(extra);
    let o = run(&args, Some(tensor));
    let v = json(&o);
    (o, v)
}

#[test]
fn analyze_multiplication() {
    let (o, r) = analyze(&multiplication_tensor(1, 1).to_json(), &["--specs", "S1;S1;S2"]);
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
    assert_eq!(r["verdict"]["kind"], "Nondegenerate");
    assert_eq!(r["boundary"], true);
    assert_eq!(r["surjective"], true);
    assert_eq!(r["constantRank"], true);
    assert_eq!(r["equivariance"], true);
    assert_eq!(r["fiberDimSample"], 2);
    assert_eq!(r["format"], serde_json::json!([2, 2, 3]));
}

#[test]
fn analyze_constructed_degenerate() {
    let t = Tensor3::from_i64(2, 2, 3, &[0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]).unwrap();
    let (o, r) = analyze(&t.to_json(), &["--seed", "7"]);
    assert!(o.status.success());
    assert_eq!(r["verdict"]["kind"], "Degenerate");
    assert_eq!(r["verdict"]["witness"]["a"], serde_json::json!(["1", "0"]));
    assert_eq!(r["verdict"]["witness"]["b"], serde_json::json!(["1", "0"]));
    assert_eq!(r["constantRank"], false);
    assert_eq!(r["seed"], 7);
    assert!(r.get("equivariance").is_none());
}

#[test]
fn analyze_reads_a_file() {
    let path = std::env::temp_dir().join(format!("hypdet-cli-{}.json", std::process::id()));
    std::fs::write(&path, random_tensor(2, 2, 2, 3, 5).unwrap().to_json()).unwrap();
    let o = run(&["analyze", path.to_str().unwrap()], None);
    std::fs::remove_file(&path).unwrap();
    let r = json(&o);
    assert!(o.status.success());
    assert_eq!(r["verdict"]["kind"], "Degenerate");
    assert_eq!(r["boundary"], false);
}

#[test]
fn malformed_input_is_an_error_object() {
    for (input, kind) in [
        ("{\"dimA\":2", "parse"),
        ("{\"dimA\":1,\"dimB\":1,\"dimC\":2,\"entries\":[[[\"1\"]]]}", "parse"),
        ("[]", "parse"),
    ] {
        let o = run(&["analyze"], Some(input));
        assert!(!o.status.success(), "{input}");
        let e = json(&o);
        assert_eq!(e["error"]["kind"], kind, "{input}");
        assert!(e["error"]["message"].is_string());
    }
    let o = run(&["analyze", "--specs", "S1;S1;S1"], Some(&multiplication_tensor(1, 1).to_json()));
    assert!(!o.status.success());
    assert_eq!(json(&o)["error"]["kind"], "dimension");
    let o = run(&["analyze", "/nonexistent/tensor.json"], None);
    assert!(!o.status.success());
    assert_eq!(json(&o)["error"]["kind"], "input");
}

#[test]
fn generate_schwarzenberger() {
    let o = run(&["generate", "schwarzenberger", "1", "1"], None);
    assert!(o.status.success());
    let t = Tensor3::from_json(&stdout(&o)).unwrap();
    assert_eq!(t, multiplication_tensor(1, 1));
    for k in 0..2 {
        for l in 0..2 {
            for s in 0..3 {
                assert_eq!(t.get(k, l, s).to_string(), if s == k + l { "1" } else { "0" });
            }
        }
    }
}

#[test]
fn generate_equivariant() {
    let o = run(&["generate", "equivariant", "S1", "S1", "S1+S0", "1"], None);
    assert!(o.status.success());
    let t = Tensor3::from_json(&stdout(&o)).unwrap();
    let spec = |s: &str| s.parse::<ModuleSpec>().unwrap();
    assert_eq!(t, equivariant_basis(&spec("S1"), &spec("S1"), &spec("S1+S0"))[0]);

    let o = run(&["generate", "equivariant", "S1", "S1", "S2", "1", "1"], None);
    assert!(!o.status.success());
    let msg = json(&o)["error"]["message"].as_str().unwrap().to_string();
    assert!(msg.contains("expected 1 coefficient,"), "{msg}");

    let o = run(&["generate", "equivariant", "S1", "S0^2", "S1+S0", "-1/2"], None);
    assert!(json(&o)["error"]["message"].as_str().unwrap().contains("expected 2 coefficients"));
    let o = run(&["generate", "equivariant", "S1", "S0^2", "S1+S0", "-1/2", "3"], None);
    assert!(o.status.success());
}

#[test]
fn generate_random_is_deterministic() {
    let a = run(&["generate", "random", "2", "3", "4", "--seed", "9", "--height", "2"], None);
    let b = run(&["generate", "random", "2", "3", "4", "--seed", "9", "--height", "2"], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(Tensor3::from_json(&stdout(&a)).unwrap(), random_tensor(2, 3, 4, 9, 2).unwrap());
}

#[test]
fn round_trip_matches_library() {
    let generated: Vec<(Vec<&str>, Tensor3)> = vec![
        (vec!["schwarzenberger", "2", "1"], multiplication_tensor(2, 1)),
        (vec!["random", "2", "2", "3", "--seed", "1"], random_tensor(2, 2, 3, 1, 5).unwrap()),
        (vec!["random", "3", "2", "4", "--seed", "2", "--height", "1"], random_tensor(3, 2, 4, 2, 1).unwrap()),
        (vec!["random", "2", "3", "4", "--seed", "5", "--height", "1"], random_tensor(2, 3, 4, 5, 1).unwrap()),
    ];
    for (args, lib) in generated {
        let mut full = vec!["generate"];
        full.extend(args);
        let g = run(&full, None);
        assert!(g.status.success());
        let (_, r) = analyze(&stdout(&g), &[]);
        let expected = serde_json::to_value(decide(&lib, &DecideOptions::default())).unwrap();
        assert_eq!(r["verdict"], expected, "{full:?}");
    }
}

fn verify(args: &[&str]) -> (Output, Vec<Value>) {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let o = run(&full, None);
    let lines = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    (o, lines)
}

#[test]
fn verify_small() {
    let (o, lines) = verify(&["2", "2", "--samples", "1", "--seed", "1"]);
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
    let case = |label: &str| lines.iter().find(|l| l["case"] == label).unwrap().clone();
    assert!(case("S1;S1;S2")["verdicts"].as_array().unwrap().iter().all(|v| v["kind"] == "Nondegenerate"));
    assert!(case("S1;S1;S1+S0")["verdicts"].as_array().unwrap().iter().all(|v| v["kind"] == "Degenerate"));
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["counterexamples"], 0);
    assert_eq!(summary["seed"], 1);
}

#[test]
fn verify_three_by_three() {
    let (o, lines) = verify(&["3", "3", "--samples", "5", "--seed", "1"]);
    assert!(o.status.success());
    assert!(lines[..lines.len() - 1].iter().all(|l| l["conforms"] == true));
    assert_eq!(lines.last().unwrap()["summary"]["counterexamples"], 0);
}

#[test]
fn verify_without_samples() {
    let (o, lines) = verify(&["3", "2", "--samples", "0"]);
    assert!(o.status.success());
    for l in &lines[..lines.len() - 1] {
        let verdicts = l["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), l["homDim"].as_u64().unwrap() as usize);
        assert!(verdicts.iter().all(|v| v["label"].as_str().unwrap().starts_with("basis")));
    }
}

#[test]
fn verify_rejects_small_bounds() {
    let (o, lines) = verify(&["1", "3"]);
    assert!(!o.status.success());
    assert_eq!(lines[0]["error"]["kind"], "input");
}
