//! End-to-end command tests: exit codes, format handling, determinism,
//! and the worked invocations from the interface contract.

use ttlattice::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("ttlat".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data(name: &str) -> String {
    format!("{}/examples/data/{}", env!("CARGO_MANIFEST_DIR"), name)
}

// -------------------------------------------------------------------
// verdicts exit zero

#[test]
fn non_distributive_lattice_is_a_verdict_not_a_failure() {
    let (code, out, _) = run(&["lattice", "check", &data("m3.poset"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["distributive"], serde_json::json!(false));
    assert_eq!(v["witness"].as_array().expect("witness triple").len(), 3);
    assert_eq!(v["forbidden"]["kind"], serde_json::json!("M3"));
}

#[test]
fn distributive_lattice_reports_the_round_trip() {
    let (code, out, _) = run(&["lattice", "check", &data("chain3.poset"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["distributive"], serde_json::json!(true));
    assert_eq!(v["irreducible_round_trip"], serde_json::json!(true));
}

#[test]
fn cb_rank_undefined_is_a_verdict() {
    let (code, out, _) = run(&["big", "cb-rank", &data("indiscrete2.space")]);
    assert_eq!(code, 0);
    assert!(out.contains("undefined"), "{}", out);
}

#[test]
fn ltg_inapplicable_is_a_verdict() {
    let (code, out, _) = run(&["big", "ltg", &data("indiscrete2.space"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["verdict"], serde_json::json!("inapplicable"));
}

#[test]
fn non_coherent_dual_is_a_verdict() {
    let (code, out, _) = run(&["stone", "dual", &data("indiscrete2.space"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["coherent"], serde_json::json!(false));
}

#[test]
fn unrealizable_support_is_a_verdict() {
    let (code, out, _) =
        run(&["ttspec", "object-for", "closed", "mod", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["realizable"], serde_json::json!(false));
}

// -------------------------------------------------------------------
// worked invocations

#[test]
fn rad_join_of_coprime_ideals() {
    let (code, out, _) = run(&["rad", "f5", "join", "x", "x+1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["result"]["kind"], serde_json::json!("unit"));
}

#[test]
fn tensor_of_torsion_objects() {
    let (code, out, _) = run(&[
        "ttspec", "tensor", "k[x]/(x)", "k[x]/(x^2)", "mod", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["result"], serde_json::json!("k[x]/(x) + S^1 k[x]/(x)"));
}

#[test]
fn stone_roundtrip_on_both_carriers() {
    let (code, out, _) =
        run(&["stone", "roundtrip", &data("sierpinski.space"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["carrier"], serde_json::json!("space"));
    assert_eq!(v["unit_homeomorphism"], serde_json::json!(true));

    let (code, out, _) = run(&["stone", "roundtrip", &data("m3.poset"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["carrier"], serde_json::json!("poset"));
    assert_eq!(v["counit_isomorphism"], serde_json::json!(true));
}

#[test]
fn big_supp_round_trips_a_subset() {
    let (code, out, _) = run(&[
        "big", "supp", &data("threept.space"), "g", "c2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["support"], serde_json::json!(["g", "c2"]));
}

// -------------------------------------------------------------------
// formats

#[test]
fn dot_renders_the_three_chain_with_two_edges() {
    let (code, out, _) = run(&["lattice", "check", &data("chain3.poset"), "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("label=").count(), 3, "{}", out);
    assert_eq!(out.matches("->").count(), 2, "{}", out);
}

#[test]
fn dot_is_rejected_where_no_diagram_exists() {
    let (code, _, err) = run(&["rad", "f5", "join", "x", "x+1", "--format", "dot"]);
    assert_eq!(code, 2);
    assert!(err.contains("no DOT rendering"));
}

#[test]
fn text_format_reports_timing_and_json_does_not() {
    let (_, text, _) = run(&["rad", "f5", "meet", "x", "x^2"]);
    assert!(text.contains("elapsed_ms:"));
    let (_, json, _) = run(&["rad", "f5", "meet", "x", "x^2", "--format", "json"]);
    assert!(!json.contains("elapsed_ms"));
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["version"], serde_json::json!(env!("CARGO_PKG_VERSION")));
}

#[test]
fn json_runs_are_byte_identical() {
    for args in [
        vec!["big", "ltg", &data("threept.space"), "--seed", "5", "--format", "json"],
        vec!["fuzz", "sigma", "--seed", "11", "--samples", "30", "--format", "json"],
        vec!["stone", "points", &data("m3.poset"), "--format", "json"],
    ] {
        let (c1, out1, _) = run(&args);
        let (c2, out2, _) = run(&args);
        assert_eq!(c1, 0);
        assert_eq!(c2, 0);
        assert_eq!(out1, out2, "reruns must agree for {:?}", args);
    }
}

// -------------------------------------------------------------------
// usage errors exit two

#[test]
fn malformed_file_is_a_usage_error() {
    let dir = std::env::temp_dir().join("ttlat_cli_io_test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("broken.poset");
    std::fs::write(&path, "elements: a b\nnot a relation line\n").expect("write");
    let (code, _, err) = run(&["lattice", "check", path.to_str().expect("utf8 path")]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());

    let missing = dir.join("missing.poset");
    let (code, _, _) = run(&["lattice", "check", missing.to_str().expect("utf8 path")]);
    assert_eq!(code, 2);
}

#[test]
fn headerless_file_is_a_usage_error() {
    let dir = std::env::temp_dir().join("ttlat_cli_io_test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("headerless.txt");
    std::fs::write(&path, "just some text\n").expect("write");
    let (code, _, err) = run(&["stone", "dual", path.to_str().expect("utf8 path")]);
    assert_eq!(code, 2);
    assert!(err.contains("header"));
}

#[test]
fn unknown_operations_are_usage_errors() {
    assert_eq!(run(&["lattice", "frobnicate", &data("m3.poset")]).0, 2);
    assert_eq!(run(&["stone", "sideways", &data("m3.poset")]).0, 2);
    assert_eq!(run(&["rad", "f5", "divide", "x"]).0, 2);
    assert_eq!(run(&["ttspec", "cohomology", "k[x]"]).0, 2);
    assert_eq!(run(&["big", "shrink", &data("threept.space")]).0, 2);
    assert_eq!(run(&["fuzz", "everything"]).0, 2);
}

#[test]
fn bad_polynomials_and_fields_are_usage_errors() {
    assert_eq!(run(&["rad", "f4", "meet", "x", "x"]).0, 2);
    assert_eq!(run(&["rad", "f5", "meet", "x$", "x"]).0, 2);
    assert_eq!(run(&["ttspec", "support", "k[x]/(x^2+x)", "mod", "2"]).0, 2);
    assert_eq!(run(&["ttspec", "rho", "x^4+x+1", "over", "Q"]).0, 2);
}

#[test]
fn unknown_point_label_is_a_usage_error() {
    let (code, _, err) = run(&["big", "supp", &data("threept.space"), "nosuch"]);
    assert_eq!(code, 2);
    assert!(err.contains("nosuch"));
}

// -------------------------------------------------------------------
// field resolution through the environment

#[test]
fn env_var_supplies_the_default_field() {
    // Sequential on purpose: the variable is process global.
    std::env::remove_var("TTLAT_FIELD");
    let (code, _, err) = run(&["ttspec", "support", "k[x]/(x)"]);
    assert_eq!(code, 2, "no field anywhere must be a usage error");
    assert!(err.contains("field"));

    std::env::set_var("TTLAT_FIELD", "f7");
    let (code, out, _) = run(&["ttspec", "support", "k[x]/(x)", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["support"], serde_json::json!("{(x)}"));

    std::env::set_var("TTLAT_FIELD", "f6");
    let (code, _, _) = run(&["ttspec", "support", "k[x]/(x)"]);
    assert_eq!(code, 2, "a bad field spec in the environment is a usage error");
    std::env::remove_var("TTLAT_FIELD");
}
