//! Text documents for algebras, pairings and Yetter-Drinfeld modules,
//! report rendering, and the named verification suites.
//!
//! Documents are JSON objects tagged by `kind`. Matrices are flat row-major
//! lists of scalar strings (`"p/q"` or an integer) in the row convention of
//! [`crate::exactmath`], so `mult` has `dim³` entries.
//!
//! ```json
//! { "kind": "hopf", "name": "c2", "field": { "type": "Q" }, "dim": 2,
//!   "mult": [...], "unit": [...], "comult": [...], "counit": [...],
//!   "antipode": [...] }
//! ```
//!
//! A pairing holds two nested `hopf` documents `k` and `h` and a `form`
//! of shape `(dim K, dim H)`; a `yd` document holds a `pairing`, a
//! `flavor` and the `action` and `coaction` of one module.

use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};
use crate::exactmath::{FieldSpec, Matrix};
use crate::hopf::{verify_hopf, HopfAlgebraData};
use crate::pairing::{verify_pairing, verify_sigma_bar, HopfPairing};
use crate::report::VerificationReport;
use crate::modcats::{YdFlavor, YdModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfDoc {
    pub name: String,
    pub field: FieldDoc,
    pub dim: usize,
    pub mult: Vec<String>,
    pub unit: Vec<String>,
    pub comult: Vec<String>,
    pub counit: Vec<String>,
    pub antipode: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingDoc {
    pub name: String,
    pub k: HopfDoc,
    pub h: HopfDoc,
    pub form: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YdDoc {
    pub flavor: String,
    pub pairing: PairingDoc,
    pub dim: usize,
    pub action: Vec<String>,
    pub coaction: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Hopf(HopfDoc),
    Pairing(PairingDoc),
    Yd(YdDoc),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Hopf(HopfAlgebraData),
    Pairing(HopfPairing),
    Yd(YdModule),
}

fn field_doc(f: FieldSpec) -> FieldDoc {
    match f {
        FieldSpec::Rationals => FieldDoc { kind: "Q".into(), p: None },
        FieldSpec::Prime(p) => FieldDoc { kind: "Fp".into(), p: Some(p) },
    }
}

fn flat(m: &Matrix) -> Vec<String> {
    m.to_dense().iter().map(|x| x.render()).collect()
}

pub fn hopf_doc(h: &HopfAlgebraData) -> HopfDoc {
    HopfDoc {
        name: h.name.clone(),
        field: field_doc(h.field),
        dim: h.dim,
        mult: flat(&h.mult),
        unit: flat(&h.unit),
        comult: flat(&h.comult),
        counit: flat(&h.counit),
        antipode: flat(&h.antipode),
    }
}

pub fn pairing_doc(p: &HopfPairing) -> PairingDoc {
    PairingDoc { name: p.name.clone(), k: hopf_doc(&p.k_alg), h: hopf_doc(&p.h_alg), form: flat(&p.form) }
}

pub fn yd_doc(v: &YdModule) -> YdDoc {
    let flavor = match v.flavor {
        YdFlavor::HModKComod => "h-mod-k-comod",
        YdFlavor::KComodHMod => "k-comod-h-mod",
    };
    YdDoc { flavor: flavor.into(), pairing: pairing_doc(&v.pairing), dim: v.dim, action: flat(&v.action), coaction: flat(&v.coaction) }
}

pub fn emit_hopf(h: &HopfAlgebraData) -> String {
    emit_document(&Document::Hopf(hopf_doc(h)))
}

pub fn emit_pairing(p: &HopfPairing) -> String {
    emit_document(&Document::Pairing(pairing_doc(p)))
}

pub fn emit_yd(v: &YdModule) -> String {
    emit_document(&Document::Yd(yd_doc(v)))
}

pub fn emit_document(d: &Document) -> String {
    let mut s = serde_json::to_string_pretty(d).expect("documents serialize");
    s.push('\n');
    s
}

/// Position of the `occurrence`-th `"key":` in the text, 1-based.
fn locate(text: &str, key: &str, occurrence: usize) -> (usize, usize) {
    let needle = format!("\"{}\"", key);
    let mut from = 0;
    let mut found = None;
    for _ in 0..=occurrence {
        match text[from..].find(&needle) {
            Some(i) => {
                found = Some(from + i);
                from += i + needle.len();
            }
            None => break,
        }
    }
    match found {
        None => (1, 1),
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let col = before.len() - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
            (line, col)
        }
    }
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, key: &str, occurrence: usize, msg: String) -> HopfError {
        let (line, col) = locate(self.text, key, occurrence);
        HopfError::Parse { line, col, msg }
    }

    fn field(&self, d: &FieldDoc, occurrence: usize) -> Result<FieldSpec> {
        match (d.kind.as_str(), d.p) {
            ("Q", None) => Ok(FieldSpec::Rationals),
            ("Fp", Some(p)) => FieldSpec::prime(p).map_err(|e| self.err("field", occurrence, e.to_string())),
            _ => Err(self.err("field", occurrence, format!("unsupported field {:?}", d))),
        }
    }

    fn matrix(&self, f: FieldSpec, key: &str, occurrence: usize, v: &[String], rows: usize, cols: usize) -> Result<Matrix> {
        if v.len() != rows * cols {
            return Err(self.err(key, occurrence, format!("`{}` has {} entries, expected {}", key, v.len(), rows * cols)));
        }
        let mut out = Vec::with_capacity(v.len());
        for (i, s) in v.iter().enumerate() {
            out.push(f.parse_scalar(s).ok_or_else(|| self.err(key, occurrence, format!("entry {} of `{}` is not a scalar: {:?}", i, key, s)))?);
        }
        Matrix::from_dense(f, rows, cols, out)
    }

    fn hopf(&self, d: &HopfDoc, occ: usize) -> Result<HopfAlgebraData> {
        let f = self.field(&d.field, occ)?;
        let n = d.dim;
        let h = HopfAlgebraData::new(
            d.name.clone(),
            f,
            self.matrix(f, "mult", occ, &d.mult, n * n, n)?,
            self.matrix(f, "unit", occ, &d.unit, 1, n)?,
            self.matrix(f, "comult", occ, &d.comult, n, n * n)?,
            self.matrix(f, "counit", occ, &d.counit, n, 1)?,
            self.matrix(f, "antipode", occ, &d.antipode, n, n)?,
        )?;
        let r = verify_hopf(&h);
        if !r.overall() {
            return Err(HopfError::Validation(Box::new(r)));
        }
        Ok(h)
    }

    fn pairing(&self, d: &PairingDoc, occ: usize) -> Result<HopfPairing> {
        let k = self.hopf(&d.k, 2 * occ)?;
        let h = self.hopf(&d.h, 2 * occ + 1)?;
        if k.field != h.field {
            return Err(HopfError::FieldMismatch);
        }
        let form = self.matrix(k.field, "form", occ, &d.form, k.dim, h.dim)?;
        let p = HopfPairing::new(d.name.clone(), k, h, form)?;
        let r = verify_pairing(&p);
        if !r.overall() {
            return Err(HopfError::Validation(Box::new(r)));
        }
        Ok(p)
    }
}

/// Parses and validates a document.
pub fn parse_input(text: &str) -> Result<Parsed> {
    let doc: Document = serde_json::from_str(text).map_err(|e| HopfError::Parse { line: e.line(), col: e.column(), msg: e.to_string() })?;
    let c = Ctx { text };
    match doc {
        Document::Hopf(d) => Ok(Parsed::Hopf(c.hopf(&d, 0)?)),
        Document::Pairing(d) => Ok(Parsed::Pairing(c.pairing(&d, 0)?)),
        Document::Yd(d) => {
            let p = c.pairing(&d.pairing, 0)?;
            let (nh, nk, n) = (p.h_alg.dim, p.k_alg.dim, d.dim);
            let f = p.h_alg.field;
            let (flavor, ashape, cshape) = match d.flavor.as_str() {
                "h-mod-k-comod" => (YdFlavor::HModKComod, (nh * n, n), (n, n * nk)),
                "k-comod-h-mod" => (YdFlavor::KComodHMod, (n * nh, n), (n, nk * n)),
                other => return Err(c.err("flavor", 0, format!("unknown flavor {:?}", other))),
            };
            let action = c.matrix(f, "action", 0, &d.action, ashape.0, ashape.1)?;
            let coaction = c.matrix(f, "coaction", 0, &d.coaction, cshape.0, cshape.1)?;
            let v = YdModule::new(flavor, &p, action, coaction);
            let r = v.verify()?;
            if !r.overall() {
                return Err(HopfError::Validation(Box::new(r)));
            }
            Ok(Parsed::Yd(v))
        }
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct WitnessOut {
    indices: Vec<usize>,
    lhs: serde_json::Value,
    rhs: serde_json::Value,
}

#[derive(Serialize)]
struct EntryOut<'a> {
    id: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    subject: &'a str,
    overall: bool,
    checks: usize,
    failing: usize,
    entries: Vec<EntryOut<'a>>,
}

/// Integers become numbers; fractions and flags stay strings.
fn scalar_value(s: &str) -> serde_json::Value {
    match s.parse::<i64>() {
        Ok(n) => serde_json::Value::from(n),
        Err(_) => serde_json::Value::from(s),
    }
}

pub fn emit_report(r: &VerificationReport, format: ReportFormat) -> String {
    let failing = r.entries.iter().filter(|e| !e.pass).count();
    match format {
        ReportFormat::Text => {
            let mut s = format!("report: {}\n", r.subject);
            for e in &r.entries {
                if e.pass {
                    s.push_str(&format!("PASS {}\n", e.id));
                } else {
                    match &e.witness {
                        Some(w) => {
                            let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
                            s.push_str(&format!("FAIL {} at ({}): lhs = {}, rhs = {}\n", e.id, idx.join(", "), w.lhs, w.rhs));
                        }
                        None => s.push_str(&format!("FAIL {}\n", e.id)),
                    }
                }
            }
            let verdict = if failing == 0 { "PASS" } else { "FAIL" };
            s.push_str(&format!("overall: {} ({} checks, {} failing)\n", verdict, r.entries.len(), failing));
            s
        }
        ReportFormat::Json => {
            let out = ReportOut {
                subject: &r.subject,
                overall: failing == 0,
                checks: r.entries.len(),
                failing,
                entries: r
                    .entries
                    .iter()
                    .map(|e| EntryOut {
                        id: &e.id,
                        pass: e.pass,
                        witness: e.witness.as_ref().map(|w| WitnessOut {
                            indices: w.indices.clone(),
                            lhs: scalar_value(&w.lhs),
                            rhs: scalar_value(&w.rhs),
                        }),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&out).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

// ---------------------------------------------------------------------------
// suites

/// Largest `dim V · dim W` for which module maps are enumerated.
pub const NATURALITY_LIMIT: usize = 256;

pub const SUITES: [&str; 8] = ["axioms", "pairing", "pams", "realization", "yd-rep", "phi-psi", "theorem-1-2", "schauenburg"];

fn read_target(target: &str) -> Result<Option<Parsed>> {
    let path = std::path::Path::new(target);
    if path.is_file() {
        Ok(Some(parse_input(&std::fs::read_to_string(path)?)?))
    } else {
        Ok(None)
    }
}

/// A registry algebra name or a `hopf` document path.
pub fn resolve_hopf(target: &str) -> Result<HopfAlgebraData> {
    match read_target(target)? {
        Some(Parsed::Hopf(h)) => Ok(h),
        Some(_) => Err(HopfError::BadParams(format!("{} is not a hopf document", target))),
        None => crate::registry::build_hopf_named(target),
    }
}

/// A registry pairing name or a `pairing` document path.
pub fn resolve_pairing(target: &str) -> Result<HopfPairing> {
    match read_target(target)? {
        Some(Parsed::Pairing(p)) => Ok(p),
        Some(_) => Err(HopfError::BadParams(format!("{} is not a pairing document", target))),
        None => crate::registry::build_pairing(target),
    }
}

pub fn run_suite(suite: &str, target: &str) -> Result<VerificationReport> {
    use crate::functors::*;
    use crate::modcats::DoiContext;
    use crate::partialdual::{check_double_realization, verify_pams};
    use crate::registry::{build_pams, build_test_modules, two_sided_fixtures};

    if !SUITES.contains(&suite) {
        return Err(HopfError::UnknownSuite(suite.to_string()));
    }
    let mut r = VerificationReport::new(format!("{} {}", suite, target));
    match suite {
        "axioms" => r.absorb("", verify_hopf(&resolve_hopf(target)?)),
        "pairing" => {
            let p = resolve_pairing(target)?;
            r.absorb("", verify_pairing(&p));
            r.absorb("sigma-bar.", verify_sigma_bar(&p));
        }
        "pams" => {
            let s = if std::path::Path::new(target).is_file() {
                crate::partialdual::canonical_pams(&resolve_pairing(target)?)?
            } else {
                build_pams(target)?
            };
            r.absorb("", verify_pams(&s));
        }
        "realization" => r.absorb("", check_double_realization(&resolve_pairing(target)?)),
        _ => {
            let p = resolve_pairing(target)?;
            let d = crate::doubles::quantum_double(&p)?;
            let mods = build_test_modules(&p)?;
            match suite {
                "yd-rep" => {
                    for (i, v) in mods.iter().enumerate() {
                        r.absorb(&format!("fixture-{}.", i), check_round_trip(v, &d)?);
                        r.absorb(&format!("fixture-{}.theta.", i), check_theta_triangle(v, &d)?);
                        for (j, w) in mods.iter().enumerate() {
                            r.absorb(&format!("pair-{}-{}.", i, j), check_monoidal(v, w, &d)?);
                            if v.dim * w.dim <= NATURALITY_LIMIT {
                                r.absorb(&format!("pair-{}-{}.", i, j), check_naturality(v, w, &d)?);
                            }
                        }
                    }
                }
                "phi-psi" => {
                    let ctx = DoiContext::canonical(&p)?;
                    for (i, v) in mods.iter().enumerate() {
                        r.absorb(&format!("fixture-{}.", i), check_phi_psi(&yd_to_rep(v, &d)?, &p, &ctx)?);
                    }
                }
                "theorem-1-2" => {
                    let ctx = DoiContext::canonical(&p)?;
                    for (i, v) in mods.iter().enumerate() {
                        r.absorb(&format!("fixture-{}.", i), theorem_chain(v, &ctx, &d)?);
                        r.absorb(&format!("fixture-{}.yd-dual.", i), check_yd_dualize(v, &mods[0])?);
                    }
                    let objs = two_sided_fixtures(&p)?;
                    for (i, a) in objs.iter().enumerate() {
                        r.flag(format!("two-sided-{}.involution", i), two_sided_dualize(&two_sided_dualize(a)) == *a);
                        r.absorb(&format!("two-sided-{}.", i), a.verify()?);
                        for (j, b) in objs.iter().enumerate() {
                            r.absorb(&format!("J-{}-{}.", i, j), check_j(a, b)?);
                            for (k, c) in objs.iter().enumerate() {
                                r.absorb(&format!("coherence-{}-{}-{}.", i, j, k), check_coherence(a, b, c)?);
                            }
                        }
                    }
                }
                "schauenburg" => {
                    for (i, v) in mods.iter().enumerate() {
                        r.absorb(&format!("fixture-{}.", i), schauenburg_check(&v_star_tensor_k(v)?)?);
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{build_hopf_named, build_pairing, hopf_names};

    #[test]
    fn kc2_document_round_trip() {
        let h = build_hopf_named("c2").unwrap();
        let text = emit_hopf(&h);
        assert_eq!(parse_input(&text).unwrap(), Parsed::Hopf(h));
    }

    #[test]
    fn wrong_length_mult_is_a_parse_error() {
        let h = build_hopf_named("c2").unwrap();
        let mut d = hopf_doc(&h);
        d.mult.pop();
        let text = emit_document(&Document::Hopf(d));
        match parse_input(&text) {
            Err(HopfError::Parse { line, col, .. }) => {
                assert_eq!((line, col), locate(&text, "mult", 0));
                assert!(line > 1);
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_input("{\n  \"kind\": \"hopf\",\n  \"name\": }") {
            Err(HopfError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn corrupted_antipode_fails_validation() {
        let h = build_hopf_named("c3").unwrap();
        let mut d = hopf_doc(&h);
        d.antipode = flat(&h.id());
        assert!(matches!(parse_input(&emit_document(&Document::Hopf(d))), Err(HopfError::Validation(_))));
    }

    #[test]
    fn registry_round_trips() {
        for n in hopf_names() {
            let h = build_hopf_named(n).unwrap();
            assert_eq!(parse_input(&emit_hopf(&h)).unwrap(), Parsed::Hopf(h), "{}", n);
        }
        let p = build_pairing("sign-s3-c2").unwrap();
        assert_eq!(parse_input(&emit_pairing(&p)).unwrap(), Parsed::Pairing(p));
    }

    #[test]
    fn empty_report_is_header_and_pass() {
        let r = VerificationReport::new("nothing");
        assert_eq!(emit_report(&r, ReportFormat::Text), "report: nothing\noverall: PASS (0 checks, 0 failing)\n");
    }

    #[test]
    fn failing_entry_shows_witness() {
        let f = FieldSpec::Rationals;
        let mut r = VerificationReport::new("one");
        r.fail("x", vec![1, 2], &f.ratio(1, 2).unwrap(), &f.from_i64(3));
        let t = emit_report(&r, ReportFormat::Text);
        assert!(t.contains("FAIL x at (1, 2): lhs = 1/2, rhs = 3"));
        let j = emit_report(&r, ReportFormat::Json);
        assert!(j.contains("\"lhs\": \"1/2\"") && j.contains("\"rhs\": 3"));
    }

    #[test]
    fn unknown_suite_and_example() {
        assert!(matches!(run_suite("nope", "c2"), Err(HopfError::UnknownSuite(_))));
        assert!(matches!(run_suite("axioms", "c99x"), Err(HopfError::UnknownExample(_))));
    }

    #[test]
    fn mutant_pams_suite_fails() {
        let r = run_suite("pams", "mutant-trivial-pi").unwrap();
        assert!(!r.overall());
        assert!(run_suite("pams", "eval-c2").unwrap().overall());
    }
}
