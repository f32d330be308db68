use serde_json::Value;
use std::process::Command;

fn chk(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chk"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("chk runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, s) = chk(args, &[]);
    (code, serde_json::from_str(&s).unwrap_or_else(|e| panic!("{e}: {s}")))
}

#[test]
fn order_example() {
    let (code, v) = json(&["order", "--l", "3", "--theta", "-2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["eta"], serde_json::json!([1, 2, 0]));
    assert_eq!(v["order"], "0>2>1");
    assert_eq!(v["schema"], 1);
}

#[test]
fn abl_example() {
    let (code, v) = json(&["abl-verify", "--l", "2", "--theta", "-1,1", "--m", "1", "--window", "15"]);
    assert_eq!(code, 0);
    assert_eq!(v["equal"], true);
}

#[test]
fn homs_example() {
    let (code, v) = json(&["homs", "--l", "2", "--lambda", "-1,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["(0,1)"], serde_json::json!({ "dim": 1, "p": 3 }));
    assert!(v.get("(1,0)").is_none());
}

#[test]
fn regime_rejections_exit_2() {
    assert_eq!(json(&["order", "--theta", "1,1"]).0, 2);
    assert_eq!(json(&["order", "--theta", "1,-1,0"]).0, 2);
    assert_eq!(json(&["order", "--l", "3", "--theta", "-1,1"]).0, 2);
    assert_eq!(json(&["homs", "--lambda", "1/2,1/3"]).0, 2);
    assert_eq!(json(&["sweep", "--l", "2"]).0, 2);
    let (code, v) = json(&["abl-verify", "--theta", "-1,1", "--m", "-1"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("m = -1"));
}

#[test]
fn verifiers_pass() {
    let cases: &[&[&str]] = &[
        &["fixed-points", "--theta", "-2,1,1"],
        &["charts", "--theta", "1,-2,1"],
        &["sections", "--theta", "-2,1,1", "--m", "2"],
        &["shift-verify", "--lambda", "1/2,1/3,1/6", "--theta", "-2,1,1"],
        &["gr-verify", "--lambda", "3/4,1/4", "--theta", "-1,1", "--m", "2", "--cap", "6,6"],
        &["ch-cycles", "--theta", "-2,1,1", "--lambda", "-3,2,2"],
    ];
    for args in cases {
        let (code, s) = chk(args, &[]);
        assert_eq!(code, 0, "{args:?}: {s}");
    }
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--l", "3", "--seed", "11", "--m", "1"];
    let (c1, a) = chk(&args, &[("CHK_THREADS", "1")]);
    let (c2, b) = chk(&args, &[("CHK_THREADS", "4")]);
    assert_eq!((c1, c2), (0, 0), "{a}");
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["alcoves"], 6);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("chk-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("order.json");
    let (code, s) = chk(&["order", "--theta", "-1,1", "--out", path.to_str().unwrap()], &[]);
    assert_eq!((code, s.as_str()), (0, ""));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["eta"], serde_json::json!([1, 0]));
    std::fs::remove_dir_all(dir).unwrap();
}
