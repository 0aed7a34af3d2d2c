use qc_cli::{format_report, run_suite, CheckReport, OutputFormat, Overrides, Selection, SuiteConfig, SuiteError, FIXTURE_ID};

fn config(ids: &[&str], detail: &std::path::Path) -> SuiteConfig {
    SuiteConfig {
        selected_checks: Selection::Many(ids.iter().map(|s| s.to_string()).collect()),
        detail_dir: detail.to_path_buf(),
        ..SuiteConfig::default()
    }
}

fn without_timing(reports: &[CheckReport]) -> String {
    let zeroed: Vec<CheckReport> = reports.iter().cloned().map(|r| CheckReport { elapsed_ms: 0, ..r }).collect();
    format_report(&zeroed, OutputFormat::JsonLines)
}

#[test]
fn full_default_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = SuiteConfig { detail_dir: dir.path().to_path_buf(), ..SuiteConfig::default() };
    let run = run_suite(&cfg);
    let failing: Vec<_> = run.reports.iter().filter(|r| !r.pass).map(|r| (&r.check_id, &r.params)).collect();
    assert!(failing.is_empty(), "{failing:?}");
    assert_eq!(run.exit_code, 0);
    assert!(run.reports.len() > 200);
    assert!(run.reports.iter().all(|r| r.detail_path.is_none() && r.warnings.is_empty()));
    assert!(run.reports.iter().all(|r| !r.check_id.starts_with("fixture.")));
}

#[test]
fn even_n_is_rejected_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&["theorem.thm_1_1"], dir.path());
    cfg.overrides = Overrides { n_list: Some(vec![4]), ..Overrides::default() };
    let run = run_suite(&cfg);
    assert_eq!(run.exit_code, 2);
    assert!(run.reports.is_empty());
    assert!(matches!(run.error, Some(SuiteError::Precondition(_))));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let run = run_suite(&config(&["theorem.thm_9_9"], dir.path()));
    assert_eq!(run.exit_code, 2);
    assert_eq!(run.error, Some(SuiteError::UnknownCheck("theorem.thm_9_9".into())));
}

#[test]
fn fault_injection_fails_with_remainder_witness() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&[FIXTURE_ID, "theorem.thm_1_1"], dir.path());
    cfg.fail_fast = true;
    let run = run_suite(&cfg);
    assert_eq!(run.exit_code, 1);
    assert_eq!(run.reports.len(), 1, "fail_fast stops after the first failure");
    let r = &run.reports[0];
    assert!(!r.pass);
    let path = r.detail_path.as_ref().expect("failing reports carry a witness file");
    let body: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let coeffs = body["witness"]["remainder_or_quotient"]["coeffs"].as_array().unwrap();
    assert!(!coeffs.is_empty());
}

#[test]
fn reports_are_deterministic_across_parallelism() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&["wz.pair", "theorem.thm_5_1", "boundary.g_m_neg1", "super.wang", FIXTURE_ID], dir.path());
    cfg.overrides = Overrides { n_max: Some(4), ..Overrides::default() };
    cfg.parallelism = 1;
    let a = run_suite(&cfg);
    cfg.parallelism = 3;
    let b = run_suite(&cfg);
    let c = run_suite(&cfg);
    assert_eq!(a.exit_code, 1);
    assert_eq!(without_timing(&a.reports), without_timing(&b.reports));
    assert_eq!(without_timing(&b.reports), without_timing(&c.reports));
}

#[test]
fn suite_bounds_need_unsafe_extended() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&["conjecture.laurent"], dir.path());
    cfg.overrides = Overrides { n_max: Some(31), ..Overrides::default() };
    let run = run_suite(&cfg);
    assert_eq!(run.exit_code, 2);
    assert!(matches!(run.error, Some(SuiteError::OutOfBounds(_))));

    let mut cfg = config(&["super.guo1_pr"], dir.path());
    cfg.overrides = Overrides { primes: Some(vec![23]), r: Some(2), ..Overrides::default() };
    assert_eq!(run_suite(&cfg).exit_code, 2);
    cfg.unsafe_extended = true;
    assert_eq!(run_suite(&cfg).exit_code, 0);
}

#[test]
fn overrides_reach_the_tasks() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(&["wz.telescope", "super.guo1_pr", "divisibility.strong"], dir.path());
    cfg.overrides = Overrides { m_max: Some(2), k_min: Some(0), k_max: Some(1), primes: Some(vec![5]), n_max: Some(10), ..Overrides::default() };
    let run = run_suite(&cfg);
    assert_eq!(run.exit_code, 0);
    let labels: Vec<String> = run.reports.iter().map(|r| format!("{} {}", r.check_id, qc_cli::params_label(&r.params))).collect();
    assert_eq!(
        labels,
        [
            "wz.telescope k=0 m=1",
            "wz.telescope k=1 m=1",
            "wz.telescope k=0 m=2",
            "wz.telescope k=1 m=2",
            "super.guo1_pr p=5 r=2",
            "divisibility.strong n_max=10 n_min=2",
        ]
    );
}

#[test]
fn config_parsing() {
    let cfg = SuiteConfig::from_json(r#"{"selected_checks":"all","output_format":"text_table","parallelism":2}"#).unwrap();
    assert_eq!(cfg.output_format, OutputFormat::TextTable);
    assert_eq!(cfg.parallelism, 2);
    let cfg = SuiteConfig::from_json(r#"{"selected_checks":["lemma.fermat"],"overrides":{"n_list":[3,5]}}"#).unwrap();
    assert_eq!(cfg.overrides.n_list, Some(vec![3, 5]));
    assert!(SuiteConfig::from_json(r#"{"selected_checks":"all","bogus":1}"#).is_err());
    assert!(SuiteConfig::from_json(r#"{"overrides":{"n_lst":[3]}}"#).is_err());
}

#[test]
fn empty_or_mixed_selection_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_suite(&config(&[], dir.path())).exit_code, 2);
    assert_eq!(run_suite(&config(&["all", "wz.pair"], dir.path())).exit_code, 2);
}
