use std::path::Path;
use std::process::{Command, Output};

fn kzd(dir: Option<&Path>, env: &[(&str, &str)], args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kzd"));
    for var in ["KZD_MAX_N", "KZD_MAX_WEIGHT", "KZD_THREADS", "KZD_WINDOW_CAP", "KZD_CONFIG"] {
        cmd.env_remove(var);
    }
    cmd.envs(env.iter().copied()).args(args);
    if let Some(d) = dir {
        cmd.current_dir(d);
    }
    cmd.output().expect("kzd runs")
}

fn run(args: &[&str]) -> Output {
    kzd(None, &[], args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn asep_polynomial_json() {
    let o = run(&["fmu", "--n", "2", "--mu", "0,2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["exp"], serde_json::json!([0, 2]));
    // (1 − t)/(1 − qt), normalized to a positive leading denominator term
    assert_eq!(terms[1]["exp"], serde_json::json!([1, 1]));
    assert_eq!(terms[1]["num"], serde_json::json!([[-1, 0, 0], [1, 0, 1]]));
    assert_eq!(terms[1]["den"], serde_json::json!([[-1, 0, 0], [1, 1, 1]]));
    let pretty = run(&["fmu", "--mu", "0,2", "--format", "pretty"]);
    assert_eq!(stdout(&pretty).trim(), "z2^2 + (1-t)/(1-q*t)*z1*z2");
}

#[test]
fn construction_paths_agree() {
    for method in ["recursion", "mpa", "closed"] {
        assert_eq!(run(&["fmu", "--mu", "0,1,2", "--method", method]).status.code(), Some(0), "{method}");
    }
    assert_eq!(run(&["fmu", "--mu", "0,0,3", "--method", "closed"]).status.code(), Some(0));
    assert_eq!(run(&["fmu", "--mu", "2,0,1", "--method", "closed"]).status.code(), Some(2));
}

#[test]
fn reduction_expansion() {
    let o = run(&["reduce", "--n", "2", "--mu", "0,2", "--m", "1", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"(1,1)":"1-t"}"#);
}

#[test]
fn local_duality_of_computed_table() {
    let o = run(&["verify", "local-duality", "--delta", "0,0,2", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""passed":true"#));
}

#[test]
fn observables_and_staircases() {
    assert_eq!(stdout(&run(&["h-eval", "--nu", "1,0,1", "--mu", "0,2,1"])).trim(), r#"{"exponent":2,"value":"t^2"}"#);
    assert_eq!(stdout(&run(&["staircase", "--mu", "0,2,1", "--m", "2"])).trim(), "[3,5,4]");
    let g = run(&["verify", "global-duality", "--nu", "1,1", "--mu", "2,0,1", "--shift", "-1"]);
    assert_eq!(g.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["psi-table", "--delta", "0,1,2", "--m", "2"];
    let a = run(&args);
    let b = kzd(None, &[("KZD_THREADS", "1")], &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let h1 = run(&["verify", "hecke", "--seed", "3"]);
    let h2 = run(&["verify", "hecke", "--seed", "3"]);
    assert_eq!(h1.stdout, h2.stdout);
}

#[test]
fn failed_check_exits_one_with_witness() {
    let o = run(&["verify", "hecke", "--n", "3", "--degree", "2", "--corrupted"]);
    assert_eq!(o.status.code(), Some(1));
    let witness: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(witness.is_object());
}

#[test]
fn invalid_requests_exit_two() {
    assert_eq!(run(&["fmu", "--n", "3", "--mu", "0,2"]).status.code(), Some(2));
    assert_eq!(run(&["fmu", "--mu", "0,x"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--criterion", "11"]).status.code(), Some(2));
    assert_eq!(run(&["h-eval", "--nu", "2,0", "--mu", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["emu"]).status.code(), Some(2));
}

#[test]
fn settings_precedence() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("kzduality.toml"), "max_weight = 2\n").unwrap();
    let emu = ["emu", "--mu", "2,1"];
    let code = |env: &[(&str, &str)], extra: &[&str]| {
        let args: Vec<&str> = extra.iter().chain(emu.iter()).copied().collect();
        kzd(Some(dir.path()), env, &args).status.code()
    };
    assert_eq!(code(&[], &[]), Some(2));
    assert_eq!(code(&[("KZD_MAX_WEIGHT", "3")], &[]), Some(0));
    assert_eq!(code(&[("KZD_MAX_WEIGHT", "2")], &["--max-weight", "3"]), Some(0));
    assert_eq!(code(&[("KZD_MAX_WEIGHT", "3")], &["--max-weight", "2"]), Some(2));
    std::fs::write(dir.path().join("kzduality.toml"), "max_wieght = 2\n").unwrap();
    assert_eq!(code(&[], &[]), Some(2));
}

#[test]
fn suite_subset() {
    let o = run(&["suite", "--criterion", "1,8", "--format", "pretty"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("criterion 1 PASS") && text.contains("criterion 8 PASS"));
}
