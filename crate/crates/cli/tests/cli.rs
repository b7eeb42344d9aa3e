use std::process::{Command, Output};

fn kitaev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kitaev"))
        .args(args)
        .env_remove("KITAEV_WORKERS")
        .output()
        .expect("spawn kitaev")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

#[test]
fn singular_spectrum_to_stdout() {
    let o = kitaev(&["spectrum", "-L", "2", "--t", "1", "--delta", "0.5", "--mu", "0"]);
    assert!(o.status.success());
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(lines[0], "zeta,value");
    for (line, want) in lines[1..].iter().zip([(1, 1.5), (2, 0.5)]) {
        let (zeta, value) = line.split_once(',').unwrap();
        assert_eq!(zeta.parse::<usize>().unwrap(), want.0);
        assert!((value.parse::<f64>().unwrap() - want.1).abs() < 1e-14);
    }
}

#[test]
fn writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mus.csv");
    let o = kitaev(&[
        "zero-mode-mus",
        "-L",
        "3",
        "--t",
        "1",
        "--delta",
        "0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().nth(2).unwrap(), "2,0.0000000000000000e0");
}

#[test]
fn zero_modes_report_summary_on_stderr() {
    let o = kitaev(&["zero-modes", "--eta", "0.5", "--mu-tilde", "0", "--method", "svd"]);
    assert!(o.status.success());
    let keys: Vec<&str> = stderr(&o).lines().map(|l| l.split('=').next().unwrap()).collect();
    assert_eq!(
        keys,
        ["d0", "residual_left", "residual_right", "xi_A", "r2_A", "xi_B", "r2_B"]
    );
    assert!(stdout(&o).starts_with("index,phiA,phiB,psiA,psiB\n"));
    assert_eq!(stdout(&o).lines().count(), 52);
}

#[test]
fn trivial_phase_fails_with_one_line() {
    let o = kitaev(&["zero-modes", "--eta", "0.5", "--mu-tilde", "2.5"]);
    assert!(!o.status.success());
    assert_eq!(stderr(&o).lines().count(), 1);
    assert!(stderr(&o).starts_with("error: "));
}

#[test]
fn invalid_inputs_fail() {
    for args in [
        &["pbc-gap", "--mu-steps", "1"][..],
        &["spectrum", "--kind", "perturbative", "--t", "0"],
        &["spectrum", "--kind", "bogus"],
        &["phase-diagram", "--eta-max", "1.5"],
        &["phase-diagram", "--threshold", "-1"],
        &["zero-mode-mus", "--t", "0"],
        &["spectrum", "-L", "0"],
    ] {
        let o = kitaev(args);
        assert!(!o.status.success(), "{args:?} should fail");
    }
}

#[test]
fn unwritable_output_fails() {
    let o = kitaev(&["zero-mode-mus", "-o", "/nonexistent-dir/x.csv"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("/nonexistent-dir/x.csv"));
}

#[test]
fn worker_env_is_honoured_and_flag_wins() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_kitaev"));
        cmd.args(["phase-diagram", "-L", "11", "--eta-steps", "5", "--mu-steps", "7"]);
        cmd.env_remove("KITAEV_WORKERS");
        if let Some(e) = env {
            cmd.env("KITAEV_WORKERS", e);
        }
        if let Some(f) = flag {
            cmd.args(["--workers", f]);
        }
        cmd.output().unwrap()
    };
    // an invalid env value is rejected unless the flag overrides it
    assert!(!run(Some("zero"), None).status.success());
    let a = run(Some("zero"), Some("2"));
    let b = run(Some("3"), None);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn help_mentions_worker_variable() {
    let o = kitaev(&["phase-diagram", "--help"]);
    assert!(stdout(&o).contains("KITAEV_WORKERS"));
}
