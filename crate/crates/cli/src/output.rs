//! Serialized command output.
//!
//! Every integer leaves as a decimal string. Struct fields are declared in
//! alphabetical order so a generic JSON value re-serializes to the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub method: String,
    pub parameters: BTreeMap<String, String>,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Coefficients(Vec<String>),
    Integral(Box<IntegralPayload>),
    Report(ReportPayload),
    Rows(Vec<Vec<String>>),
    Scalar(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralPayload {
    pub a: String,
    pub b: String,
    pub closed_form: String,
    pub exact_integral: String,
    pub m: String,
    pub n: String,
    pub panels: String,
    pub passed: bool,
    pub quadrature: String,
    pub quadrature_hat: String,
    pub residual: String,
    pub residual_hat: String,
    pub tol: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportPayload {
    pub cases: Vec<CaseEntry>,
    pub identities: Vec<IdentityEntry>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub checked: String,
    pub failed: String,
    pub identity: String,
    pub suite: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseEntry {
    pub case: String,
    pub detail: Option<String>,
    pub identity: String,
    pub passed: bool,
    pub suite: String,
}

impl OutputRecord {
    pub fn new(command: &str, method: &str, parameters: &[(&str, String)], payload: Payload) -> Self {
        OutputRecord {
            command: command.to_string(),
            method: method.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            payload,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(self).expect("record serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Bfile => self.render_bfile(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Rows(rows) => {
                for row in rows {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            Payload::Coefficients(c) => {
                out.push_str(&c.join(","));
                out.push('\n');
            }
            Payload::Scalar(v) => {
                out.push_str(v);
                out.push('\n');
            }
            Payload::Integral(p) => render_integral(&mut out, p),
            Payload::Report(r) => render_report(&mut out, r),
        }
        out
    }

    fn render_bfile(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!("# eulerian-forge {} {}\n", self.command, params.join(" "));
        let values: Vec<&String> = match &self.payload {
            Payload::Rows(rows) => {
                out.push_str("# T(m;n,k) row-major over n>=1, 0<=k<n; T(m;1,0)=1; descents at interior positions\n");
                rows.iter().flatten().collect()
            }
            Payload::Coefficients(c) => {
                out.push_str("# coefficient of t^i at index i\n");
                c.iter().collect()
            }
            Payload::Scalar(v) => vec![v],
            // reports have no sequence form
            Payload::Integral(p) => {
                render_integral(&mut out, p);
                return out;
            }
            Payload::Report(r) => {
                render_report(&mut out, r);
                return out;
            }
        };
        for (i, v) in values.into_iter().enumerate() {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }
}

fn render_integral(out: &mut String, p: &IntegralPayload) {
    let _ = writeln!(out, "case m={} n={} a={} b={} tol={}", p.m, p.n, p.a, p.b, p.tol);
    let _ = writeln!(out, "closed_form {}", p.closed_form);
    let _ = writeln!(out, "exact_integral {}", p.exact_integral);
    let _ = writeln!(out, "quadrature {}", p.quadrature);
    let _ = writeln!(out, "quadrature_hat {}", p.quadrature_hat);
    let _ = writeln!(out, "residual {}", p.residual);
    let _ = writeln!(out, "residual_hat {}", p.residual_hat);
    let _ = writeln!(out, "panels {}", p.panels);
    let _ = writeln!(out, "{}", if p.passed { "PASS" } else { "FAIL" });
}

fn render_report(out: &mut String, r: &ReportPayload) {
    for id in &r.identities {
        let status = if id.failed == "0" { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {}: {} ({} checked, {} failed)",
            id.suite, id.identity, id.checked, id.failed
        );
    }
    for c in &r.cases {
        let status = if c.passed { "ok" } else { "FAILED" };
        let _ = write!(out, "  {status} {}: {} [{}]", c.suite, c.identity, c.case);
        if let Some(d) = &c.detail {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    let failed = r.identities.iter().filter(|i| i.failed != "0").count();
    if r.passed {
        let _ = writeln!(out, "verify: all {} identities passed", r.identities.len());
    } else {
        let _ = writeln!(out, "verify: {failed} of {} identities failed", r.identities.len());
    }
}
