//! The binary's contract: exit codes, formats and flag precedence.

use std::process::Command;

fn qtheta(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qtheta")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn json_rows_all_match() {
    let (code, stdout, stderr) = qtheta(&["--suite", "volumes", "--format", "json", "--n-max", "3"]);
    assert_eq!(code, 0, "{stderr}");
    // One JSON object per line.
    let rows: Vec<serde_json::Value> = stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["equal"] == true && r["suite"] == "volumes"));
    assert!(stderr.contains(&format!("{} comparisons, 0 mismatches", rows.len())));
}

#[test]
fn csv_respects_grid_flags() {
    let (code, stdout, _) =
        qtheta(&["--suite", "alpha1", "--format", "csv", "--n-max", "2", "--ord2", "1", "--gram-range", "-1..1"]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(stdout.as_bytes());
    let mut count = 0;
    for rec in reader.records() {
        let params = rec.unwrap()[1].to_string();
        assert!(params.contains("e=1"), "{params}");
        count += 1;
    }
    assert!(count > 0);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = std::env::temp_dir().join(format!("qtheta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("grid.conf");
    std::fs::write(&cfg, "n_max = 1\ne = 0\n").unwrap();
    let out = dir.join("out.csv");
    let args = ["--suite", "alpha1", "--format", "csv", "--config", cfg.to_str().unwrap(), "--ord2", "2"];
    let (code, _, _) = qtheta(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().skip(1).all(|l| l.contains("e=2") && !l.contains("n=2")), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(qtheta(&["--suite", "nope"]).0, 2);
    assert_eq!(qtheta(&["--ord2", "7"]).0, 2);
    assert_eq!(qtheta(&["--gram-range", "3"]).0, 2);
    assert_eq!(qtheta(&["--numeric-q", "1"]).0, 2);
}
