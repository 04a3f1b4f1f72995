use std::process::{Command, Output};

use cremona::eval::{EvalError, EvalOptions, Value};
use cremona::expr::{parse, Expr};
use cremona::json::report_json;
use cremona::suites::{build, run};
use cremona::{eval_str, SyntaxError};
use proptest::prelude::*;

fn ev(src: &str) -> Value {
    eval_str(src, EvalOptions::default()).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn same(a: &str, b: &str) -> bool {
    ev(a).same_map(&ev(b)).unwrap()
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona")).args(args).env("CREMONA_WIDTH", "1000").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sigma_squared_is_identity() {
    assert!(matches!(parse("sigma . sigma").unwrap(), Expr::Compose(ref t) if t.len() == 2));
    assert!(same("sigma . sigma", "id"));
}

#[test]
fn sigma_literal() {
    assert!(same("[x1*x2 : x0*x2 : x0*x1]", "sigma"));
    assert_eq!(ev("[x1*x2 : x0*x2 : x0*x1]").render().unwrap(), "[x1*x2 : x0*x2 : x0*x1]");
}

#[test]
fn phi_sigma_cubed_is_phi_sigma() {
    assert!(matches!(parse("phi(sigma)^3").unwrap(), Expr::Power { exp: 3, .. }));
    assert!(same("phi(sigma)^3", "phi(sigma)"));
    assert!(!same("phi(sigma)^2", "phi(sigma)"));
}

#[test]
fn veronese_rendering() {
    assert_eq!(ev("veronese").render().unwrap(), "[x0^2 : x1^2 : x2^2 : x1*x2 : x0*x2 : x0*x1]");
}

#[test]
fn adjugate_conjugates_phi_to_phi_dual() {
    assert!(same("ad . phi(sigma) . ad", "phi_dual(sigma)"));
}

#[test]
fn chi1_degree_sequence_increases() {
    let o = cli(&["eval", "--degree-seq", "10", "chi1(fword)"]);
    assert!(o.status.success());
    let d: Vec<u32> = stdout(&o).split_whitespace().map(|t| t.parse().unwrap()).collect();
    assert_eq!(d.len(), 10);
    assert!(d.windows(2).all(|w| w[0] < w[1]), "{d:?}");
}

#[test]
fn negative_powers_use_known_inverses() {
    assert!(same("phi(sigma)^-1", "phi(sigma)"));
    assert!(same("phi(h)^-1 . phi(h)", "phi(id)"));
    assert!(same("(tau2 . h)^-2 . (tau2 . h)^2", "id"));
    assert!(same("mat(1, 2, 0; 0, 1, 0; 0, 0, 1)^-1", "mat(1, -2, 0; 0, 1, 0; 0, 0, 1)"));
    assert!(same("mono(1, 1; 0, 1)^-1 . mono(1, 1; 0, 1)", "(x1, x2)"));
    assert!(same("Aprime^-1 . Aprime", "[y0 : y1 : y2]"));
}

#[test]
fn no_inverse_for_veronese() {
    let e = eval_str("veronese^-1", EvalOptions::default()).unwrap_err();
    assert!(matches!(e, EvalError::Type { position: 0, .. }), "{e}");
}

#[test]
fn pipeline_reverses_composition() {
    let piped = eval_str("tau1 . h", EvalOptions { pipeline: true }).unwrap();
    assert!(piped.same_map(&ev("h . tau1")).unwrap());
    assert!(!piped.same_map(&ev("tau1 . h")).unwrap());
    let o = cli(&["--pipeline", "eval", "tau1 . h"]);
    assert_eq!(stdout(&o), ev("h . tau1").render().unwrap() + "\n");
}

#[test]
fn codim1_functions() {
    assert!(same("psil(1, (1/x1, 1/x2))", "(1/x1, 1/x2, x1^2*x2^2*x3)"));
    assert_eq!(ev("crossratio(1, 2, 3, 4; 1, 1, 1, 1)").render().unwrap(), "4/3");
    assert!(same("psib(sigma)", "psib((1/x1, 1/x2))"));
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse("sigma . ").unwrap_err();
    assert_eq!(e.position, 8);
    let e = parse("phi(sigma").unwrap_err();
    assert_eq!(e, SyntaxError { position: 3, message: "unbalanced bracket".into() });
    let e = parse("sigma ^ x").unwrap_err();
    assert_eq!(e.position, 8);
    let e = parse("tau1 . frob(sigma)").unwrap_err();
    assert_eq!(e.position, 7);
    assert_eq!(e.to_string(), "at column 8: unknown function `frob`");
}

#[test]
fn unknown_names_carry_positions() {
    let e = eval_str("sigma . tau3", EvalOptions::default()).unwrap_err();
    assert!(matches!(e, EvalError::Type { position: 8, .. }), "{e}");
}

#[test]
fn type_errors_name_both_spaces() {
    let e = eval_str("(x1, x2) . sigma", EvalOptions::default()).unwrap_err().to_string();
    assert!(e.contains("A^2 -> A^2") && e.contains("P^2"), "{e}");
    let e = eval_str("sigma . veronese", EvalOptions::default()).unwrap_err().to_string();
    assert!(e.contains("P^2") && e.contains("P^5"), "{e}");
    let o = cli(&["eval", "sigma . veronese"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chart_option() {
    let o = cli(&["eval", "--chart", "x0", "sigma"]);
    assert_eq!(stdout(&o), "(1/x1, 1/x2)\n");
    let o = cli(&["eval", "--degree", "phi_dual(sigma)"]);
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn json_key_order() {
    let o = cli(&["--json", "verify", "crossratio-action"]);
    let s = stdout(&o);
    let at = |k: &str| s.find(&format!("\"{k}\"")).unwrap_or_else(|| panic!("{k} missing"));
    assert!(at("suite") < at("seed") && at("seed") < at("entries") && at("entries") < at("summary"));
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    let failing = v["entries"].as_array().unwrap().iter().find(|e| e["status"] == "fail").unwrap();
    let keys: Vec<&str> = failing.as_object().unwrap().keys().map(String::as_str).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(sorted, ["anchor", "id", "ms", "status", "witness"]);
    let entry = &s[s.find("\"tau1-fixes-cr\"").unwrap() - 10..];
    let pos = |k: &str| entry.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("id") < pos("anchor") && pos("anchor") < pos("status") && pos("status") < pos("witness"));
    assert!(pos("witness") < pos("ms"));
    let passing = v["entries"].as_array().unwrap().iter().find(|e| e["status"] == "pass").unwrap();
    assert!(passing.get("witness").is_none());
}

#[test]
fn exit_status_matches_failures() {
    for suite in ["gl3z", "crossratio-action", "codim1-relations"] {
        let o = cli(&["--json", "verify", suite]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let fail = v["summary"]["fail"].as_u64().unwrap();
        assert_eq!(o.status.code(), Some(if fail == 0 { 0 } else { 1 }), "{suite}");
    }
    assert_eq!(cli(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn seed_is_recorded() {
    let o = cli(&["--json", "--seed", "7", "verify", "homomorphism"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn reports_do_not_depend_on_scheduling() {
    for name in ["relations", "gl3z", "crossratio-action"] {
        let s = build(name, 3).unwrap();
        assert_eq!(report_json(&run(&s, 1), false), report_json(&run(&s, 4), false), "{name}");
    }
}

#[test]
fn list_names_everything() {
    let s = stdout(&cli(&["list"]));
    for n in ["sigma", "phi_dual(sigma)", "psil", "crossratio", "gl3z", "all"] {
        assert!(s.contains(n), "{n}");
    }
}

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("sigma".to_string()),
        Just("tau1".to_string()),
        Just("tau2".to_string()),
        Just("h".to_string()),
        Just("g0".to_string()),
        Just("[x1*x2 : x0*x2 : x0*x1]".to_string()),
        (-2i64..=2, -2i64..=2).prop_map(|(a, b)| format!("mat(1, {a}, 0; 0, 1, {b}; 0, 0, 1)")),
    ]
}

fn expr() -> impl Strategy<Value = String> {
    let term = (atom(), prop_oneof![Just(None), (-2i32..=3).prop_map(Some)])
        .prop_map(|(a, e)| e.map_or(a.clone(), |e| format!("{a}^{e}")));
    let leaf = prop::collection::vec(term, 1..4).prop_map(|ts| ts.join(" . "));
    leaf.prop_recursive(2, 8, 3, |inner| {
        prop::collection::vec(inner.prop_map(|e| format!("({e})")), 1..3).prop_map(|ts| ts.join(" . "))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn render_round_trip(src in expr()) {
        let e = parse(&src).unwrap();
        let back = parse(&e.render()).unwrap();
        prop_assert_eq!(back.strip_positions(), e.strip_positions());
        let (a, b) = (cremona::evaluate(&e, EvalOptions::default()), cremona::evaluate(&back, EvalOptions::default()));
        prop_assert!(a.unwrap().same_map(&b.unwrap()).unwrap());
    }
}
