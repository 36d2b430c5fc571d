//! JSON, CSV and plain-text renderings.
//!
//! JSON objects use `serde_json`'s default `BTreeMap` backing, so keys come
//! out sorted and identical inputs give byte-identical output.

use std::fmt::Display;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::classical::{CommutativePoly, XMonomial};
use crate::envalg::UMonomial;
use crate::error::{Error, Result};
use crate::funalg::FMonomial;
use crate::qplane::{Family, PlaneMonomial, PochKey};
use crate::report::VerificationReport;
use crate::scalar::{rational_text, ParamScalar};
use crate::schrodinger::PwKey;
use crate::sparse::Sparse;

use super::suites::SuiteResult;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidArgument(format!("unknown format `{s}`"))),
        }
    }
}

/// Integer coordinates of a basis key, as `(column, value)` pairs.
pub trait BasisKey: Ord + Clone + Display {
    fn fields(&self) -> Vec<(&'static str, Value)>;
}

impl BasisKey for FMonomial {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        vec![("l", json!(self.l)), ("m", json!(self.m)), ("n", json!(self.n))]
    }
}

impl BasisKey for UMonomial {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        vec![("a", json!(self.a)), ("b", json!(self.b)), ("c", json!(self.c)), ("d", json!(self.d))]
    }
}

impl BasisKey for PlaneMonomial {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        vec![("p", json!(self.p)), ("q", json!(self.q))]
    }
}

impl BasisKey for PochKey {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        let family = match self.family {
            Family::Chi => "chi",
            Family::ChiBar => "chibar",
        };
        vec![("family", json!(family)), ("ell", json!(self.ell)), ("r", json!(self.r))]
    }
}

impl BasisKey for PwKey {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        vec![("m", json!(self.m)), ("n", json!(self.n))]
    }
}

impl BasisKey for XMonomial {
    fn fields(&self) -> Vec<(&'static str, Value)> {
        vec![("x", json!(self.a)), ("xbar", json!(self.b))]
    }
}

/// `[{"re","im","z","hp","hm","k"}, ...]`; zero is the empty list.
pub fn scalar_json(s: &ParamScalar) -> Value {
    Value::Array(
        s.terms()
            .map(|(key, c)| {
                json!({
                    "re": rational_text(&c.re),
                    "im": rational_text(&c.im),
                    "z": key.z,
                    "hp": key.hp,
                    "hm": key.hm,
                    "k": key.k,
                })
            })
            .collect(),
    )
}

pub fn element_json<K: BasisKey>(e: &Sparse<K>) -> Value {
    Value::Array(
        e.iter()
            .map(|(key, c)| {
                let mut obj: Map<String, Value> = key.fields().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                obj.insert("coeff".into(), scalar_json(c));
                Value::Object(obj)
            })
            .collect(),
    )
}

pub fn report_json(r: &VerificationReport) -> Value {
    let discrepancies: Vec<Value> = r
        .discrepancies
        .iter()
        .map(|d| {
            json!({
                "case": d.case,
                "key": d.key,
                "expected": scalar_json(&d.expected),
                "actual": scalar_json(&d.actual),
                "delta": scalar_json(&d.delta()),
            })
        })
        .collect();
    json!({
        "identity": r.identity,
        "window": r.window,
        "pass": r.pass(),
        "required": r.required,
        "cases": r.cases,
        "notes": r.notes,
        "eigenvalue": r.eigenvalue.as_ref().map(scalar_json),
        "discrepancies": discrepancies,
    })
}

pub fn suite_json(s: &SuiteResult) -> Value {
    json!({
        "suite": s.suite.name(),
        "pass": s.pass(),
        "reports": s.reports.iter().map(report_json).collect::<Vec<_>>(),
    })
}

/// A single suite renders as its own object; several as `{pass, suites}`.
pub fn results_json(results: &[SuiteResult]) -> Value {
    match results {
        [one] => suite_json(one),
        many => json!({
            "pass": many.iter().all(SuiteResult::pass),
            "suites": many.iter().map(suite_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn emit_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    rows(&mut w).expect("writing CSV to memory");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV fields are UTF-8")
}

fn field_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One row per basis key: the key's coordinates, its display form and the coefficient.
pub fn element_csv<K: BasisKey>(e: &Sparse<K>) -> String {
    let cols: Vec<&str> = match e.keys().next() {
        Some(k) => k.fields().into_iter().map(|(c, _)| c).collect(),
        None => Vec::new(),
    };
    csv_string(|w| {
        let mut header: Vec<&str> = cols.clone();
        header.extend(["key", "coeff"]);
        w.write_record(&header)?;
        for (key, c) in e.iter() {
            let mut row: Vec<String> = key.fields().iter().map(|(_, v)| field_text(v)).collect();
            row.push(key.to_string());
            row.push(c.to_string());
            w.write_record(&row)?;
        }
        Ok(())
    })
}

/// One row per offending basis key; passing reports get a single row with empty key.
pub fn results_csv(results: &[SuiteResult]) -> String {
    csv_string(|w| {
        w.write_record(["suite", "identity", "required", "pass", "case", "key", "expected", "actual"])?;
        for s in results {
            for r in &s.reports {
                let head = [s.suite.name().to_string(), r.identity.clone(), r.required.to_string(), r.pass().to_string()];
                if r.discrepancies.is_empty() {
                    w.write_record(head.iter().cloned().chain(["".into(), "".into(), "".into(), "".into()]))?;
                }
                for d in &r.discrepancies {
                    let tail = [d.case.clone(), d.key.clone(), d.expected.to_string(), d.actual.to_string()];
                    w.write_record(head.iter().cloned().chain(tail))?;
                }
            }
        }
        Ok(())
    })
}

/// `c1*k1 + c2*k2 + ...`, or `0`.
pub fn element_text<K: Ord + Clone + Display>(e: &Sparse<K>) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = e
        .iter()
        .map(|(k, c)| {
            let key = k.to_string();
            match (c.is_one(), key.as_str()) {
                (true, _) => key,
                (false, "1") => format!("({c})"),
                (false, _) => format!("({c})*{key}"),
            }
        })
        .collect();
    terms.join(" + ")
}

const TEXT_DISCREPANCY_LIMIT: usize = 5;

pub fn report_text(r: &VerificationReport) -> String {
    let status = match (r.pass(), r.required) {
        (true, _) => "PASS",
        (false, true) => "FAIL",
        (false, false) => "INFO",
    };
    let window: Vec<String> = r.window.iter().map(|(k, v)| format!("{k}<={v}")).collect();
    let mut out = format!("  {status} {} [{}] cases={}\n", r.identity, window.join(", "), r.cases);
    if let Some(e) = &r.eigenvalue {
        out += &format!("       eigenvalue: {e}\n");
    }
    for d in r.discrepancies.iter().take(TEXT_DISCREPANCY_LIMIT) {
        out += &format!("       {} @ {}: expected {}, got {}\n", d.case, d.key, d.expected, d.actual);
    }
    if r.discrepancies.len() > TEXT_DISCREPANCY_LIMIT {
        out += &format!("       ... {} more\n", r.discrepancies.len() - TEXT_DISCREPANCY_LIMIT);
    }
    for n in &r.notes {
        out += &format!("       note: {n}\n");
    }
    out
}

pub fn results_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for s in results {
        out += &format!("{} {}\n", if s.pass() { "PASS" } else { "FAIL" }, s.suite);
        for r in &s.reports {
            out += &report_text(r);
        }
    }
    if results.len() > 1 {
        let pass = results.iter().all(SuiteResult::pass);
        out += &format!("{}\n", if pass { "ALL PASS" } else { "FAILURES" });
    }
    out
}

pub fn render_results(results: &[SuiteResult], format: Format) -> String {
    match format {
        Format::Json => emit_json(&results_json(results)),
        Format::Csv => results_csv(results),
        Format::Text => results_text(results),
    }
}

pub fn render_element<K: BasisKey>(e: &Sparse<K>, format: Format) -> String {
    match format {
        Format::Json => emit_json(&element_json(e)),
        Format::Csv => element_csv(e),
        Format::Text => element_text(e) + "\n",
    }
}

pub fn render_scalar(s: &ParamScalar, format: Format) -> String {
    match format {
        Format::Json => emit_json(&scalar_json(s)),
        Format::Csv => csv_string(|w| {
            w.write_record(["re", "im", "z", "hp", "hm", "k"])?;
            for (key, c) in s.terms() {
                w.write_record([
                    rational_text(&c.re),
                    rational_text(&c.im),
                    key.z.to_string(),
                    key.hp.to_string(),
                    key.hm.to_string(),
                    key.k.to_string(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => format!("{s}\n"),
    }
}

/// A classical limit together with its oracle comparison.
pub fn render_limit(lim: &CommutativePoly, rep: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => emit_json(&json!({ "limit": element_json(lim), "report": report_json(rep) })),
        Format::Csv => element_csv(lim),
        Format::Text => format!("{}\n{}", element_text(lim), report_text(rep)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funalg::{a1, FElement};

    #[test]
    fn scalar_one() {
        let s = serde_json::to_string(&scalar_json(&ParamScalar::one())).unwrap();
        assert_eq!(s, r#"[{"hm":0,"hp":0,"im":"0","k":0,"re":"1","z":0}]"#);
    }

    #[test]
    fn f_element_a1() {
        let s = serde_json::to_string(&element_json(&a1())).unwrap();
        assert_eq!(s, r#"[{"coeff":[{"hm":0,"hp":0,"im":"0","k":0,"re":"1","z":0}],"l":0,"m":1,"n":0}]"#);
        assert_eq!(element_json(&FElement::zero()), json!([]));
    }

    #[test]
    fn passing_report() {
        let v = report_json(&VerificationReport::new("x", &[("n", 2)]));
        assert_eq!(v["pass"], json!(true));
        assert_eq!(v["discrepancies"], json!([]));
        assert_eq!(v["window"], json!({"n": 2}));
    }

    #[test]
    fn csv_rows_per_key() {
        let e = &a1() + &FElement::scalar(ParamScalar::ratio(-3, 4));
        let text = element_csv(&e);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, ["l,m,n,key,coeff", "0,0,0,1,-(3/4)", "0,1,0,a1,1"]);
    }

    #[test]
    fn text_rendering() {
        let e = &a1() + &FElement::scalar(ParamScalar::ratio(-3, 4));
        assert_eq!(element_text(&e), "(-(3/4)) + a1");
    }
}
