use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bialg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn normalize_bialgebra_law() {
    let o = run(&["normalize", "delta . mu", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("p = (2,2)"), "{text}");
    assert!(text.contains("sigma = [1, 3, 2, 4] = (23)"), "{text}");
    assert!(text.contains("q = (2,2)"), "{text}");
    assert!(text.contains("x⊗y ↦ x_(1)y_(1) ⊗ x_(2)y_(2)"), "{text}");
}

#[test]
fn normalize_identity_and_notation_term() {
    let o = run(&["normalize", "id", "--json"]);
    assert_eq!(stdout(&o).trim(), r#"{"p":[1],"sigma":[1],"q":[1]}"#);
    let o = run(&[
        "normalize",
        "(eps * id * eta * mu) . P(1 2 3 4) . (delta * delta)",
        "--verify",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x⊗y ↦ y_(1) ⊗ 1 ⊗ y_(2)x"));
}

#[test]
fn json_output_is_stable_under_reserialization() {
    let o = run(&["normalize", "(mu * id) . (id * delta) . swap", "--json"]);
    let text = stdout(&o);
    let nf: bialg::NormalForm = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(serde_json::to_string(&nf).unwrap(), text.trim());
    let o = run(&["eval-matrix", "delta", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), stdout(&o).trim());
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["normalize", "mu . mu"][..],
        &["normalize", "mu . (mu"],
        &["normalize", "frobnicate"],
        &["eval-matrix", "P(1 2 3 4 5 6 7)"],
        &["compose", "{\"hom\":[[1]],\"perms\":[[1]]}", "{\"hom\":[[1,2]],\"perms\":[[1],[1]]}"],
        &["compose", "/nonexistent/arrow.json", "{}"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["normalize", "mu . (mu"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 8"));
}

#[test]
fn equal_exit_codes() {
    let o = run(&[
        "equal",
        "delta . mu",
        "(mu * mu) . (id * P(1 2) * id) . (delta * delta)",
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "equal");
    let o = run(&["equal", "mu", "mu . P(1 2)", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], false);
    assert!(v["witness"].as_str().unwrap().starts_with("sigma"));
}

#[test]
fn compose_first_worked_example() {
    let dir = std::env::temp_dir().join(format!("bialg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let inner = dir.join("f.json");
    std::fs::write(&inner, r#"{"hom":[[1,1,2,1,2]],"perms":[[3,1,2],[2,1]]}"#).unwrap();
    let o = run(&[
        "compose",
        r#"{"hom":[[1],[1,1]],"perms":[[1,2,3]]}"#,
        inner.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"hom":[[1,1,1,1,1,1,1]],"perms":[[5,1,2,6,3,7,4]]}"#
    );
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn check_passes_and_is_deterministic() {
    let a = run(&["check", "--seed", "4", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["check", "--seed", "4", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 7);
}

#[test]
fn eval_matrix_grid() {
    let o = run(&["eval-matrix", "eps . eta"]);
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["eval-matrix", "P(1 2 3)", "--dim-bound", "16"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval-matrix", "mu . swap", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn tiny_step_budget_is_reported() {
    let o = run(&["normalize", "delta . mu . delta . mu", "--verify", "--max-steps", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}
