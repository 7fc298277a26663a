use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forestalg"))
        .args(args)
        .env_remove("FOREST_BIALG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coproduct_of_grafted_leaf() {
    let out = run(&["coproduct", "a[x]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "(m) 1 ⊗ a\n(-l) 1 ⊗ a[x]\n(-l) a[x] ⊗ 1\n(m) x ⊗ 1\n(-l) x ⊗ a\n"
    );
}

#[test]
fn counit_of_point() {
    let out = run(&["counit", "x"]);
    assert_eq!(stdout(&out), "-m*l^-2\n");
}

#[test]
fn star_has_six_terms() {
    let out = run(&["star", "a b", "c[d]", "--omega", "a,b,c,d"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 6);
}

#[test]
fn coproduct_json_shape() {
    let out = run(&["coproduct", "x", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let terms = v.as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["legs"], serde_json::json!(["1", "1"]));
    assert_eq!(terms[0]["coeff"], serde_json::json!([{"q": "1/1", "l": 0, "m": 1, "n": 0}]));
}

#[test]
fn enumerate_counts() {
    for (n, total) in [("0", 1), ("1", 3), ("2", 9)] {
        let out = run(&["enumerate", "--max-vertices", n, "--omega", "a", "--xset", "x"]);
        let text = stdout(&out);
        let last = text.lines().last().unwrap();
        assert!(last.ends_with(&format!("total {total}")), "{last}");
        assert_eq!(text.lines().count(), total + 1);
    }
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = run(&["verify", "coassoc", "--max-vertices", "4", "--omega", "a", "--xset", "x"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
    let out = run(&["verify", "examples-golden"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_json_is_deterministic_across_workers() {
    let strip = |out: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    let args = ["verify", "prelie", "--max-vertices", "4", "--omega", "a", "--json"];
    let one = run(&[&args[..], &["--workers", "1"]].concat());
    let four = run(&[&args[..], &["--workers", "4"]].concat());
    let v = strip(&one);
    assert_eq!(v, strip(&four));
    assert_eq!(v["ok"], serde_json::json!(true));
    assert_eq!(v["suite"], serde_json::json!("prelie"));
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn pole_is_a_usage_error() {
    let out = run(&["verify", "counit", "--eval-lambda", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["counit", "x", "--eval-lambda", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exits_two_with_position() {
    let out = run(&["coproduct", "a[x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 3"));
    assert_eq!(run(&["coproduct", "q"]).status.code(), Some(2));
    assert_eq!(run(&["coproduct", "x[a]"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["graft", "x", "a"]).status.code(), Some(2));
}

#[test]
fn evaluation_flags() {
    let out = run(&["phi", "a[b]", "--eval-nu", "1/2"]);
    assert_eq!(stdout(&out), "(1/4) 1\n(1/2) a\n(1) a[b]\n(1/2) b\n");
    let out = run(&["counit", "a[x] b", "--eval-lambda", "-1"]);
    assert_eq!(stdout(&out), "-m^3\n");
}

#[test]
fn remaining_commands() {
    assert_eq!(stdout(&run(&["concat", "x", "a[x]"])), "(1) x a[x]\n");
    assert_eq!(stdout(&run(&["graft", "b", "x a"])), "(1) b[x a]\n");
    assert_eq!(stdout(&run(&["theta", "a[x]"])), "(n^2) a[x]\n");
    assert_eq!(stdout(&run(&["bracket", "a", "a"])), "0\n");
    let out = run(&["prelie", "a[b]", "x"]);
    assert_eq!(stdout(&out), "(m) a[b]\n(-l) a[b] x\n(-l) x a[b]\n");
    let out = run(&["star-weighted", "1", "1", "--omega", "a", "--xset", "x"]);
    assert_eq!(stdout(&out), "(-l) 1\n(m) a\n(m) x\n");
}
