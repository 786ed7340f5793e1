use knit::laurent::{JsonTerm, LaurentPoly};
use knit::qsim::approx_jones;
use knit::BraidWord;
use knit_cli::run;
use serde_json::Value;

fn knit(args: &[&str]) -> knit_cli::CommandResult {
    run(std::iter::once("knit").chain(args.iter().copied()))
}

fn poly(payload: &Value) -> LaurentPoly {
    let terms: Vec<JsonTerm> = serde_json::from_value(payload["terms"].clone()).unwrap();
    LaurentPoly::from_json_terms(&terms).unwrap()
}

#[test]
fn trefoil_jones() {
    let r = knit(&["jones", "s1^3", "-n", "2", "--closure", "trace"]);
    assert_eq!(r.exit_code, 0);
    let want = LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)]);
    assert_eq!(poly(&r.payload), want);
    assert_eq!(r.payload["polynomial"], "-t^4 + t^3 + t");
}

#[test]
fn braid_relation_is_equal() {
    let r = knit(&["--json", "eq", "s1 s2 s1", "s2 s1 s2", "-n", "3"]);
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.payload["equal"], true);
    let back: Value = serde_json::from_str(&r.text).unwrap();
    assert_eq!(back, r.payload);
    assert_eq!(knit(&["eq", "s1 s2", "s2 s1"]).payload["equal"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(knit(&["jones", "s2", "-n", "2"]).exit_code, 2);
    assert_eq!(knit(&["jones", "s1", "--frobnicate"]).exit_code, 2);
    assert_eq!(knit(&["nonsense"]).exit_code, 2);
    assert_eq!(knit(&["parse", "s1 x2"]).exit_code, 2);
    assert_eq!(knit(&["closure-info", "s1", "-n", "3", "--closure", "plat"]).exit_code, 1);
    assert_eq!(knit(&["approx", "s2^3", "-n", "4", "-r", "5", "--delta", "0"]).exit_code, 1);
    assert_eq!(knit(&["colored", "s2^2", "-n", "4", "--colors", "1", "-r", "7"]).exit_code, 1);
    assert_eq!(knit(&["colored", "s2^2", "-n", "4", "--colors", "1,one", "-r", "7"]).exit_code, 2);
    assert_eq!(knit(&["--help"]).exit_code, 0);
}

#[test]
fn usage_text_on_bad_flags() {
    let r = knit(&["jones", "s1", "--bogus"]);
    assert!(r.text.contains("Usage"));
}

#[test]
fn polynomial_payloads_round_trip() {
    for (word, n, closure) in [("s1 s2^-1 s1 s2^-1", "3", "trace"), ("s2^2", "4", "plat"), ("", "3", "trace")] {
        let r = knit(&["jones", word, "-n", n, "--closure", closure]);
        assert_eq!(r.exit_code, 0, "{word}");
        let p = poly(&r.payload);
        let terms = serde_json::to_value(p.to_json_terms()).unwrap();
        assert_eq!(terms, r.payload["terms"]);
    }
}

#[test]
fn evaluation_at_a_root() {
    let r = knit(&["jones", "s1^3", "-n", "2", "--at-root", "5"]);
    let exact = LaurentPoly::from_terms([(4, 1), (12, 1), (16, -1)]).evaluate_at_root(5).unwrap();
    assert_eq!(r.payload["value_re"].as_f64().unwrap(), exact.re);
    assert_eq!(r.payload["value_im"].as_f64().unwrap(), exact.im);
}

#[test]
fn closure_info() {
    let r = knit(&["closure-info", "s2 s4^-1 s3 s4^-1 s3 s1 s2^-1 s4^-1", "--closure", "plat"]);
    assert_eq!(r.payload["components"], 3);
    assert_eq!(r.payload["crossings"], 8);
    assert!(r.diagnostics.iter().any(|d| d.contains("inferred as 6")));
    let r = knit(&["closure-info", "s1^2", "-n", "2"]);
    assert_eq!(r.payload["components"], 2);
    assert_eq!(r.payload["writhe"], 2);
}

#[test]
fn parse_and_normal_form() {
    let r = knit(&["parse", "s3^-1 s2 s3^-1 s2 s1^3 s2^-1 s1 s2^-2", "-n", "4"]);
    assert_eq!(r.payload["length"], 11);
    assert_eq!(r.payload["exponent_sum"], 1);
    let a = knit(&["nf", "s1 s2 s1", "-n", "3"]);
    let b = knit(&["nf", "s2 s1 s2", "-n", "3"]);
    assert_eq!(a.payload, b.payload);
    assert_eq!(knit(&["nf", "s1 s1^-1", "-n", "3"]).payload["trivial"], true);
}

#[test]
fn colored_invariants() {
    let r = knit(&["colored", "s2^3", "-n", "4", "--colors", "1", "-r", "7"]);
    assert_eq!(r.exit_code, 0);
    let w = BraidWord::parse("s2^3", 4).unwrap();
    let z = knit::colored_invariant(&w, &[knit::ColorLabel::half()], 7).unwrap();
    assert_eq!(r.payload["value_re"].as_f64().unwrap(), z.re);
    let amb = knit(&["colored", "s2^3", "-n", "4", "--colors", "1", "-r", "7", "--normalize", "ambient"]);
    assert_eq!(amb.payload["normalize"], "ambient");
    let borromean = knit(&["colored", "s2 s4^-1 s3 s4^-1 s3 s1 s2^-1 s4^-1", "--colors", "1,2,1", "-r", "7"]);
    assert_eq!(borromean.exit_code, 0);
}

#[test]
fn approx_matches_library_bit_for_bit() {
    let args = ["approx", "s2^3", "-n", "4", "-r", "5", "--delta", "0.2", "--seed", "9"];
    let a = knit(&args);
    let b = knit(&args);
    assert_eq!(a.exit_code, 0);
    assert_eq!(a.payload, b.payload);
    let lib = approx_jones(&BraidWord::parse("s2^3", 4).unwrap(), 5, 0.2, 0.75, 9).unwrap();
    assert_eq!(a.payload, lib.to_json());
    assert_eq!(a.payload["rng"], "ChaCha8");
    assert_eq!(a.payload["steps"], 3);
}

#[test]
fn tractable_roots_are_flagged() {
    let r = knit(&["approx", "s2^3", "-n", "4", "-r", "6", "--delta", "0.5"]);
    assert_eq!(r.payload["tractable"], true);
    assert!(r.diagnostics.iter().any(|d| d.contains("tractable")));
}

#[test]
fn threads_do_not_change_results() {
    let one = knit(&["jones", "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2 s1 s2", "-n", "3", "--threads", "1"]);
    let four = knit(&["jones", "s1 s2^-1 s1 s2^-1 s1 s2^-1 s1 s2 s1 s2", "-n", "3", "--threads", "4"]);
    assert_eq!(one.payload, four.payload);
}

#[test]
fn invariance_test_reports_counts() {
    let r = knit(&["--json", "invariance-test", "--trials", "4", "--seed", "2"]);
    assert_eq!(r.exit_code, 0);
    let checks = r.payload["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    for c in checks {
        assert_eq!(c["passed"], 4);
    }
}
