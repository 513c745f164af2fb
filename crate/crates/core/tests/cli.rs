use std::process::Command;

fn lozenge(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lozenge")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn count_prints_exact_integer() {
    assert_eq!(lozenge(&["count", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "2"]).1, "3\n");
    assert_eq!(lozenge(&["count", "--family", "holed", "--a", "8", "--b", "2", "--ks", "2,4"]).0, 0);
}

#[test]
fn symmetric_count() {
    let (code, out, _) = lozenge(&["count-sym", "--family", "holed", "--a", "8", "--b", "2", "--ks", "2,4", "--sym", "rot180,reflv"]);
    assert_eq!((code, out.as_str()), (0, "504\n"));
    let (_, out, _) = lozenge(&["count-sym", "--family", "hexagon", "--a", "2", "--b", "2", "--c", "2", "--sym", "rot120", "--method", "enumerate"]);
    assert_eq!(out, "5\n");
}

#[test]
fn verify_prints_sides_and_verdict() {
    assert_eq!(lozenge(&["verify", "--id", "I1_9", "--a", "1", "--b", "1"]), (0, "3 = 3 × 1 OK\n".into(), String::new()));
    let (code, out, _) = lozenge(&["verify", "--id", "T2_1_even", "--a", "2", "--b", "1", "--ks", "1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("OK\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lozenge(&["count", "--family", "holed", "--a", "3"]).0, 2);
    assert_eq!(lozenge(&["verify", "--id", "nope", "--a", "1"]).0, 2);
    assert_eq!(lozenge(&["count", "--family", "holed", "--a", "4", "--b", "1", "--ks", "3"]).0, 2);
    assert_eq!(lozenge(&[]).0, 2);
}

#[test]
fn sweep_writes_csv() {
    let (code, out, _) = lozenge(&["sweep", "--id", "I1_9,E3_5", "--grid", "a=1..2,b=1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "identity,params,lhs,rhs,verdict");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.ends_with(",OK")));
    let (code, out, _) = lozenge(&["sweep", "--id", "E3_5", "--grid", ""]);
    assert_eq!((code, out.as_str()), (0, "identity,params,lhs,rhs,verdict\n"));
}

#[test]
fn json_envelope() {
    let (_, out, _) = lozenge(&["--json", "count", "--family", "hexagon", "--a", "2", "--b", "2", "--c", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "count");
    assert_eq!(v["result"], "20");
    assert_eq!(v["params"]["params"]["a"], 2);
}

#[test]
fn render_is_deterministic() {
    let args = ["render", "--family", "holed", "--a", "6", "--b", "2", "--ks", "2", "--tiling", "3", "--overlay", "dual"];
    let (code, a, _) = lozenge(&args);
    assert_eq!(code, 0);
    assert!(a.starts_with("<svg"));
    assert_eq!(a, lozenge(&args).1);
}

#[test]
fn graph_exports() {
    let (_, out, _) = lozenge(&["quotient", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--sym", "rot120"]);
    assert_eq!(out, "# vertices 2\n0 1 1\n0 1 1\n");
    let (code, out, _) = lozenge(&["split", "--family", "holed", "--a", "4", "--b", "1", "--ks", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# multiplier 2^1\n"));
}
