use std::process::Command;

fn capelli(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).env_remove("CAPELLI_JOBS").output().unwrap();
    (output.status.code().unwrap(), String::from_utf8(output.stdout).unwrap(), String::from_utf8(output.stderr).unwrap())
}

#[test]
fn fusion_and_symmetrizer_agree() {
    let (code, fusion, _) = capelli(&["fusion", "--shape", "2,1"]);
    assert_eq!(code, 0);
    let (_, closed, _) = capelli(&["symmetrizer", "--shape", "2,1"]);
    assert_eq!(fusion, closed);
    let value: serde_json::Value = serde_json::from_str(&fusion).unwrap();
    assert_eq!(value[0]["perm"], serde_json::json!([1, 2, 3]));
    assert_eq!(value[0]["coeff"], "1");
}

#[test]
fn output_is_deterministic() {
    let args = ["phi-pair", "--lambda", "2", "--mu", "1"];
    assert_eq!(capelli(&args).1, capelli(&args).1);
}

#[test]
fn pole_order() {
    let (code, out, _) = capelli(&["phi-pair", "--lambda", "1", "--mu", "1", "--pole-order"]);
    assert_eq!((code, out.trim()), (0, "1"));
}

#[test]
fn text_format() {
    let (code, out, _) = capelli(&["--format", "text", "elambda", "--shape", "1", "--N", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "E11 + E22");
    let (_, out, _) = capelli(&["qdet", "--N", "1", "--format", "text"]);
    assert_eq!(out.trim(), "D_1 = -E11");
}

#[test]
fn capelli_formulas_agree() {
    let run = |f: &str| capelli(&["capelli", "--shape", "2,1", "--N", "2", "--M", "2", "--formula", f]);
    let (code, character, _) = run("character");
    assert_eq!(code, 0);
    assert_eq!(character, run("1.3").1);
    assert_eq!(character, run("image").1);
}

#[test]
fn verify_small_suite() {
    let (code, out, _) = capelli(&["verify", "--suite", "all", "--max-n", "4", "--max-pair", "2,2", "--gl-n", "2", "--gl-m", "2", "--jobs", "1"]);
    assert_eq!(code, 0, "{out}");
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["passed"], true);
}

#[test]
fn verify_default_fusion_suite_in_text() {
    let (code, out, _) = capelli(&["verify", "--suite", "fusion", "--max-n", "4", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("ok")), "{out}");
}

#[test]
fn enlarged_ranges_warn_on_stderr() {
    let (code, _, err) = capelli(&["verify", "--suite", "pole", "--max-pair", "1,1", "--gl-n", "4"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(capelli(&["fusion", "--shape", "1,2"]).0, 2);
    assert_eq!(capelli(&["fusion"]).0, 2);
    assert_eq!(capelli(&["verify", "--max-n", "50"]).0, 2);
    assert_eq!(capelli(&["capelli", "--shape", "1", "--N", "2", "--M", "2", "--formula", "2.7"]).0, 2);
    assert_eq!(capelli(&["verify", "--jobs", "0"]).0, 2);
}
