use hopfdouble::io::*;
use hopfdouble::modcats::{YdFlavor, YdModule};
use hopfdouble::registry::{build_hopf_named, build_pairing};
use hopfdouble::{FieldSpec, HopfError, Matrix};

const KC3: &str = include_str!("data/kc3-f7.json");
const KC3_BAD_ANTIPODE: &str = include_str!("data/kc3-bad-antipode.json");
const KC3_BAD_SCALAR: &str = include_str!("data/kc3-bad-scalar.json");
const SWEEDLER: &str = include_str!("data/sweedler4.json");

#[test]
fn hand_written_kc3_over_f7() {
    let Parsed::Hopf(h) = parse_input(KC3).unwrap() else { panic!("not a hopf document") };
    assert_eq!(h.field, FieldSpec::Prime(7));
    assert_eq!(h.dim, 3);
    // S(g) = g² and g·g² = 1
    assert_eq!(h.antipode.get(1, 2), h.field.one());
    assert_eq!(h.mult.get(5, 0), h.field.one());
    assert!(hopfdouble::hopf::verify_hopf(&h).overall());
    assert_eq!(parse_input(&emit_hopf(&h)).unwrap(), Parsed::Hopf(h));
}

#[test]
fn wrong_antipode_is_a_validation_error() {
    match parse_input(KC3_BAD_ANTIPODE) {
        Err(HopfError::Validation(r)) => {
            assert_eq!(r.failing(), vec!["antipode-left", "antipode-right"]);
            let w = r.get("antipode-left").unwrap().witness.clone().unwrap();
            assert_eq!(w.indices, vec![1, 0]);
        }
        other => panic!("{:?}", other),
    }
}

#[test]
fn bad_scalar_is_located() {
    match parse_input(KC3_BAD_SCALAR) {
        Err(HopfError::Parse { line, col, msg }) => {
            assert_eq!((line, col), (13, 3));
            assert!(msg.contains("counit"));
        }
        other => panic!("{:?}", other),
    }
}

#[test]
fn malformed_json_is_located() {
    let text = "{\n  \"kind\": \"hopf\",\n  \"dim\": [\n}";
    match parse_input(text) {
        Err(HopfError::Parse { line, .. }) => assert!(line >= 3),
        other => panic!("{:?}", other),
    }
    assert!(matches!(parse_input("{\"kind\": \"ring\"}"), Err(HopfError::Parse { .. })));
}

#[test]
fn sweedler_document_is_stable() {
    let h = build_hopf_named("sweedler4").unwrap();
    assert_eq!(emit_hopf(&h), SWEEDLER);
    assert_eq!(parse_input(SWEEDLER).unwrap(), Parsed::Hopf(h));
}

#[test]
fn fractions_survive_a_round_trip() {
    let h = build_hopf_named("c2").unwrap();
    let half = h.field.ratio(1, 2).unwrap();
    let mut doc = hopf_doc(&h);
    doc.counit = vec![half.render(), "-3/4".into()];
    let text = emit_document(&Document::Hopf(doc));
    assert!(text.contains("\"1/2\"") && text.contains("\"-3/4\""));
    match parse_input(&text) {
        Err(HopfError::Validation(r)) => assert!(!r.passed("counit")),
        other => panic!("{:?}", other),
    }
}

#[test]
fn yd_document_round_trip_and_rejection() {
    let p = build_pairing("eval-c2").unwrap();
    let f = p.h_alg.field;
    let good = YdModule::new(YdFlavor::HModKComod, &p, Matrix::from_i64(f, &[&[1], &[-1]]), Matrix::from_i64(f, &[&[0, 1]]));
    assert_eq!(parse_input(&emit_yd(&good)).unwrap(), Parsed::Yd(good.clone()));
    // g acting by 2 is not an action
    let bad = YdModule::new(YdFlavor::HModKComod, &p, Matrix::from_i64(f, &[&[1], &[2]]), Matrix::from_i64(f, &[&[0, 1]]));
    assert!(matches!(parse_input(&emit_yd(&bad)), Err(HopfError::Validation(_))));
    let text = emit_yd(&good).replace("h-mod-k-comod", "left-right");
    assert!(matches!(parse_input(&text), Err(HopfError::Parse { .. })));
}

#[test]
fn report_formats() {
    let r = run_suite("axioms", "sweedler4").unwrap();
    let text = emit_report(&r, ReportFormat::Text);
    assert!(text.starts_with("report: "));
    assert!(text.trim_end().ends_with("overall: PASS (9 checks, 0 failing)"));
    let v: serde_json::Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json)).unwrap();
    assert_eq!(v["overall"], true);
    assert_eq!(v["checks"], 9);
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
}

#[test]
fn failing_report_carries_numeric_witnesses() {
    let r = run_suite("pams", "mutant-trivial-pi").unwrap();
    assert!(!r.overall());
    let v: serde_json::Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json)).unwrap();
    let bad: Vec<&serde_json::Value> = v["entries"].as_array().unwrap().iter().filter(|e| e["pass"] == false).collect();
    assert!(!bad.is_empty());
    let w = bad.iter().find_map(|e| e.get("witness")).unwrap();
    assert!(w["indices"].is_array());
}

#[test]
fn unknown_names_are_errors() {
    assert!(matches!(run_suite("axioms", "klein4"), Err(HopfError::UnknownExample(_))));
    assert!(matches!(run_suite("everything", "c2"), Err(HopfError::UnknownSuite(_))));
    assert!(matches!(resolve_pairing("eval-c9"), Err(HopfError::UnknownExample(_))));
    assert!(run_suite("axioms", "c7").unwrap().overall());
}
