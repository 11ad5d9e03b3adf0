use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_wittext")).args(args).current_dir(dir).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn dense_gt_closed_then_verify() {
    let d = tempfile::tempdir().unwrap();
    let (c, _) = run(d.path(), &["module", "--kind", "dense", "--anchor", "1/2", "--tau", "9", "--kmin", "-12", "--kmax", "12", "-o", "m.json"]);
    assert_eq!(c, 0);
    let (c, v) = run(d.path(), &["extend", "--module", "m.json", "--side", "gt", "--branch", "+", "--method", "closed", "--depth", "6", "-o", "a.json"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["status"], "Extended");
    let (c, v) = run(d.path(), &["verify", "--action", "a.json"]);
    assert_eq!(c, 0, "{v}");
}

#[test]
fn dense_vir_auto_has_zero_central_charge() {
    let d = tempfile::tempdir().unwrap();
    run(d.path(), &["module", "--kind", "dense", "--anchor", "1/2", "--tau", "9", "--kmin", "-12", "--kmax", "12", "-o", "m.json"]);
    let (c, v) = run(d.path(), &["extend", "--module", "m.json", "--side", "vir", "--branch", "auto"]);
    assert_eq!(c, 0);
    assert_eq!(v["result"]["central_zero"], true);
}

#[test]
fn sqrt2_module() {
    let d = tempfile::tempdir().unwrap();
    let (c, _) = run(d.path(), &["module", "--kind", "dense", "--tau", "2", "--anchor", "0", "--kmin", "-6", "--kmax", "6", "-o", "m.json"]);
    assert_eq!(c, 0);
    let (c, _) = run(d.path(), &["extend", "--module", "m.json", "--side", "gt", "--depth", "4"]);
    assert_eq!(c, 0);
}

#[test]
fn printed_counterexample_is_infeasible() {
    let d = tempfile::tempdir().unwrap();
    run(d.path(), &["module", "--kind", "counterexample", "--lambda", "1/2", "--kmin", "-12", "--kmax", "6", "--printed", "-o", "c.json"]);
    let (c, v) = run(d.path(), &["extend", "--module", "c.json", "--side", "gt", "--method", "generic"]);
    assert_eq!(c, 3);
    assert_eq!(v["result"]["certificate"]["stage"], "Boundary");
    assert_eq!(v["result"]["certificate"]["replays"], true);
}

#[test]
fn glue_mixed_branches_fails() {
    let d = tempfile::tempdir().unwrap();
    run(d.path(), &["module", "--kind", "dense", "--anchor", "1/2", "--tau", "9", "--kmin", "-12", "--kmax", "12", "-o", "m.json"]);
    run(d.path(), &["extend", "--module", "m.json", "--side", "lt", "--branch", "+", "-o", "lt.json"]);
    run(d.path(), &["extend", "--module", "m.json", "--side", "gt", "--branch", "-", "-o", "gt.json"]);
    let (c, v) = run(d.path(), &["glue", "--lt", "lt.json", "--gt", "gt.json", "--vir"]);
    assert_eq!(c, 3);
    assert_eq!(v["result"]["kind"], "CentralityFailure");
    run(d.path(), &["extend", "--module", "m.json", "--side", "gt", "--branch", "+", "-o", "gt.json"]);
    let (c, v) = run(d.path(), &["glue", "--lt", "lt.json", "--gt", "gt.json"]);
    assert_eq!(c, 0, "{v}");
}

#[test]
fn freelie_commands() {
    let d = tempfile::tempdir().unwrap();
    let (_, v) = run(d.path(), &["freelie", "member", "--target", "r2", "--gens", "r1", "--max", "9"]);
    assert_eq!(v["result"]["member"], false);
    assert_eq!(v["result"]["stable"], true);
    let (_, v) = run(d.path(), &["freelie", "member", "--target", "r1", "--gens", "r2", "--max", "9"]);
    assert_eq!(v["result"]["member"], true);
    let (c, v) = run(d.path(), &["freelie", "dims", "--max", "13"]);
    assert_eq!(c, 0);
    for r in v["result"]["relation_spaces"].as_array().unwrap() {
        assert_eq!(r["dim"], r["expected"]);
    }
    let (c, _) = run(d.path(), &["freelie", "maps", "--max", "10"]);
    assert_eq!(c, 0);
}

#[test]
fn usage_and_io_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(run(d.path(), &["nonsense"]).0, 1);
    assert_eq!(run(d.path(), &["module", "--kind", "dense", "--bogus", "1"]).0, 1);
    assert_eq!(run(d.path(), &["module", "--kind", "dense", "--tau", "9"]).0, 1);
    assert_eq!(run(d.path(), &["verify", "--action", "missing.json"]).0, 2);
}

#[test]
fn reports_are_deterministic() {
    let d = tempfile::tempdir().unwrap();
    run(d.path(), &["module", "--kind", "verma", "--lambda", "1/2", "-o", "v.json"]);
    let (_, mut a) = run(d.path(), &["extend", "--module", "v.json", "--side", "gt"]);
    let (_, mut b) = run(d.path(), &["extend", "--module", "v.json", "--side", "gt"]);
    a["timing_ms"] = Value::Null;
    b["timing_ms"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn depth_from_environment() {
    let d = tempfile::tempdir().unwrap();
    run(d.path(), &["module", "--kind", "dense", "--anchor", "1/2", "--tau", "9", "--kmin", "-12", "--kmax", "12", "-o", "m.json"]);
    let out = Command::new(env!("CARGO_BIN_EXE_wittext"))
        .args(["extend", "--module", "m.json"])
        .env("WITTEXT_DEPTH", "3")
        .current_dir(d.path())
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["depth"], 3);
}
