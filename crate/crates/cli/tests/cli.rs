use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reflgreen")).args(args).output().expect("spawn reflgreen")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn symmetric_group_character_table() {
    let o = run(&["chartable", "--e", "1", "--n", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(3).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 3);
    let mut degrees: Vec<&str> = rows.iter().map(|r| *r.last().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, ["1", "1", "2"]);
    assert!(rows.iter().any(|r| r == &["(21)", "-1", ".", "2"]));
}

#[test]
fn verify_exits_zero_on_small_coset() {
    let o = run(&["verify", "--e", "2", "--p", "2", "--n", "2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn outputs_are_deterministic() {
    for cmd in ["symbols", "kostka", "green", "fake-degrees", "coset-chartable", "hall-littlewood"] {
        for fmt in ["pretty", "csv", "json"] {
            let args = [cmd, "--e", "3", "--p", "3", "--n", "2", "--format", fmt];
            let a = run(&args);
            let b = run(&args);
            assert!(a.status.success(), "{} {}: {}", cmd, fmt, stderr(&a));
            assert_eq!(a.stdout, b.stdout, "{} {}", cmd, fmt);
        }
    }
}

#[test]
fn json_round_trips() {
    for cmd in ["green", "kostka", "coset-chartable", "symbols", "verify"] {
        let o = run(&[cmd, "--e", "2", "--p", "2", "--n", "2", "--q", "1", "--format", "json"]);
        assert!(o.status.success(), "{}: {}", cmd, stderr(&o));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v, "{}", cmd);
    }
    let o = run(&["green", "--e", "2", "--p", "2", "--n", "2", "--format", "json"]);
    let suite: reflgreen::gepn::GreenSuite = serde_json::from_slice(&o.stdout).unwrap();
    assert!(suite.residual_is_zero());
}

#[test]
fn invalid_parameters_name_the_constraint() {
    let o = run(&["kostka", "--e", "4", "--p", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p = 3 does not divide e = 4"), "{}", stderr(&o));
    let o = run(&["green", "--e", "4", "--p", "2", "--n", "2", "--q", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid parameter"), "{}", stderr(&o));
}

#[test]
fn size_caps_are_reported_before_work() {
    let o = run(&["green", "--e", "5", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n*e = 25 exceeds 24"), "{}", stderr(&o));
    let o = run(&["verify", "--e", "6", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds 1000000"), "{}", stderr(&o));
}

#[test]
fn green_layout_for_g333() {
    let o = run(&["green", "--e", "3", "--p", "3", "--n", "3", "--q", "0", "--r", "2", "--format", "pretty"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "K~- for G(3,3,3) q=0 (r = 2)");
    assert!(lines[1].contains("(1^3;-;-) | (1^2;1;-)  (1;1^2;-) | (1;1;1)  (1;1;1)'  (1;1;1)'' | (21;-;-) | (2;1;-)  (1;2;-) | (3;-;-)"));
    assert!(lines[3].starts_with("(1^3;-;-)") && lines[3].contains("t^9"));
    assert!(text.contains("residual is zero: yes"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("reflgreen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fd.csv");
    let o = run(&["fake-degrees", "--e", "2", "--n", "2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("label,fake_degree\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
