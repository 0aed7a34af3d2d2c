use std::process::Command;

fn qc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qc")).args(args).env_remove("QC_PARALLELISM").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn cyclotomic_and_qbinom() {
    let (code, out, _) = qc(&["cyclotomic", "--n", "12"]);
    assert_eq!((code, out.trim()), (0, "1 - q^2 + q^4"));
    let (code, out, _) = qc(&["qbinom", "--n", "4", "--k", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"offset":0,"coeffs":["1/1","1/1","2/1","1/1","1/1"]}"#);
    assert_eq!(qc(&["cyclotomic", "--n", "0"]).0, 2);
}

#[test]
fn verify_subcommands_emit_json_lines() {
    let (code, out, _) = qc(&["verify", "theorem", "--id", "thm_1_1", "--n-list", "3,5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.contains("\"pass\":true")));

    let (code, out, _) = qc(&["verify", "wz", "--n-max", "2", "--k-min", "-1", "--k-max", "1"]);
    assert_eq!((code, out.lines().count()), (0, 9));

    let (code, _, err) = qc(&["verify", "theorem", "--id", "thm_1_1", "--n-list", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("odd"));
}

#[test]
fn check_subcommands() {
    let (code, out, _) = qc(&["check", "super", "--id", "guo1", "--p", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"p\":5"));
    let (code, out, _) = qc(&["check", "divisibility", "--id", "strong", "--n-max", "20", "--format", "text-table"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("1 checks: 1 passed, 0 failed\n"));
    assert_eq!(qc(&["check", "conjecture", "--n-max", "3"]).0, 0);
}

#[test]
fn suite_with_fixture_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.json");
    let detail = dir.path().join("witnesses");
    std::fs::write(
        &cfg,
        serde_json::json!({
            "selected_checks": ["fixture.corrupted_thm_1_1"],
            "fail_fast": true,
            "detail_dir": detail,
        })
        .to_string(),
    )
    .unwrap();
    let (code, out, _) = qc(&["suite", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("\"pass\":false"));
    assert_eq!(std::fs::read_dir(&detail).unwrap().count(), 1);
}

#[test]
fn parallelism_env_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.json");
    std::fs::write(&cfg, r#"{"selected_checks":["lemma.fermat"]}"#).unwrap();
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_qc"))
            .args(["suite", "--config", cfg.to_str().unwrap()])
            .env("QC_PARALLELISM", v)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(run("2"), 0);
    assert_eq!(run("lots"), 2);
}

#[test]
fn missing_config_is_a_usage_error() {
    assert_eq!(qc(&["suite", "--config", "/nonexistent/suite.json"]).0, 2);
}
