//! Report documents and their pretty rendering.

use std::fmt::Write;

use bsynth_core::behavior::IoPartition;
use bsynth_core::{Behavior, Certificate, Poly, PolyMatrix, Unsolvable};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::{ProblemFile, EXIT_LIMIT, EXIT_OK, EXIT_ORACLE, EXIT_UNSOLVABLE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Unsolvable,
    /// A supplied controller failed its certificate.
    Rejected,
    LimitExceeded,
    OracleDisagreement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ControllerOut {
    pub vars: Vec<String>,
    pub rep: PolyMatrix,
    pub outputs: usize,
}

impl From<&Behavior> for ControllerOut {
    fn from(b: &Behavior) -> Self {
        ControllerOut {
            vars: b.vars().to_vec(),
            rep: b.rep().clone(),
            outputs: b.outputs(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOut {
    /// Deepest successful search string, `ε` when nothing was nullified.
    pub best: String,
    pub zero_columns: Vec<String>,
    pub bound: usize,
    pub nodes_visited: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleOut {
    pub max_nullifiable: usize,
    pub witness: Vec<String>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Check {
        implementable: bool,
        regularly_implementable: bool,
    },
    Canonical {
        implementable: bool,
        controller: ControllerOut,
    },
    Controller {
        controller: ControllerOut,
    },
    MinInteraction {
        irrelevant: Vec<String>,
        v: PolyMatrix,
        bootstrap: ControllerOut,
        control_manifest: PolyMatrix,
        controller: ControllerOut,
        search: SearchOut,
        #[serde(skip_serializing_if = "Option::is_none")]
        oracle: Option<OracleOut>,
    },
    IoPartition {
        v: PolyMatrix,
        controller: ControllerOut,
        partition: Option<IoPartition>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cause: Option<Unsolvable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub problem: ProblemFile,
    pub result: Option<Outcome>,
    pub certificate: Option<Certificate>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Unsolvable | Status::Rejected => EXIT_UNSOLVABLE,
            Status::LimitExceeded => EXIT_LIMIT,
            Status::OracleDisagreement => EXIT_ORACLE,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

/// `coeff·var` with the sign pulled out when the coefficient is a single term.
fn term(p: &Poly, var: &str) -> (bool, String) {
    let terms = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if terms > 1 {
        return (false, format!("({})·{var}", p.display_with("x")));
    }
    let neg = p.lead().is_negative();
    let mag = if neg { -p } else { p.clone() };
    if mag.is_one() {
        (neg, var.to_string())
    } else {
        (neg, format!("{}·{var}", mag.display_with("x")))
    }
}

/// One kernel row as an equation, e.g. `(x - 1)·u + d = 0`.
pub fn equation(row: &[Poly], vars: &[String]) -> String {
    let mut out = String::new();
    for (p, v) in row.iter().zip(vars) {
        if p.is_zero() {
            continue;
        }
        let (neg, body) = term(p, v);
        match (out.is_empty(), neg) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" = 0");
    out
}

fn equations(out: &mut String, m: &PolyMatrix, vars: &[String]) {
    if m.rows() == 0 {
        out.push_str("  (no equations)\n");
    }
    for i in 0..m.rows() {
        let _ = writeln!(out, "  {}", equation(m.row(i), vars));
    }
}

fn matrix(out: &mut String, m: &PolyMatrix) {
    for line in m.display_with("x").lines() {
        let _ = writeln!(out, "  {line}");
    }
}

fn controller(out: &mut String, title: &str, c: &ControllerOut) {
    let _ = writeln!(out, "{title} ({} outputs):", c.outputs);
    equations(out, &c.rep, &c.vars);
}

fn names(v: &[String]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}

/// Human-readable rendering with `x` as the indeterminate.
pub fn render_pretty(r: &Report) -> String {
    let mut out = String::new();
    let p = &r.problem;
    let _ = writeln!(out, "command: {}", r.command);
    let status = serde_json::to_value(r.status).expect("status serializes");
    let _ = writeln!(out, "status: {}", status.as_str().unwrap_or_default());
    if let Some(m) = &r.message {
        let _ = writeln!(out, "message: {m}");
    }
    let all: Vec<String> = p.w_vars.iter().chain(&p.c_vars).cloned().collect();
    out.push_str("plant:\n");
    equations(&mut out, &p.r.hstack(&p.m), &all);
    out.push_str("specification:\n");
    equations(&mut out, &p.s, &p.w_vars);
    if let Some(y) = &p.declared_outputs {
        let _ = writeln!(out, "declared outputs: {}", names(y));
    }
    match &r.result {
        None => {}
        Some(Outcome::Check {
            implementable,
            regularly_implementable,
        }) => {
            let _ = writeln!(out, "implementable: {implementable}");
            let _ = writeln!(out, "regularly implementable: {regularly_implementable}");
        }
        Some(Outcome::Canonical {
            implementable,
            controller: c,
        }) => {
            let _ = writeln!(out, "implementable: {implementable}");
            controller(&mut out, "canonical controller", c);
        }
        Some(Outcome::Controller { controller: c }) => controller(&mut out, "controller", c),
        Some(Outcome::MinInteraction {
            irrelevant,
            v,
            bootstrap,
            control_manifest,
            controller: c,
            search,
            oracle,
        }) => {
            controller(&mut out, "bootstrap controller", bootstrap);
            out.push_str("control manifest behavior:\n");
            equations(&mut out, control_manifest, &bootstrap.vars);
            out.push_str("V:\n");
            matrix(&mut out, v);
            controller(&mut out, "controller", c);
            let _ = writeln!(out, "irrelevant variables: {}", names(irrelevant));
            let _ = writeln!(
                out,
                "search: best {}, bound {}, {} nodes",
                search.best, search.bound, search.nodes_visited
            );
            if let Some(o) = oracle {
                let _ = writeln!(
                    out,
                    "oracle: {} nullifiable ({}), agrees: {}",
                    o.max_nullifiable,
                    names(&o.witness),
                    o.agrees
                );
            }
        }
        Some(Outcome::IoPartition {
            v,
            controller: c,
            partition,
        }) => {
            out.push_str("V:\n");
            matrix(&mut out, v);
            controller(&mut out, "controller", c);
            if let Some(part) = partition {
                let _ = writeln!(out, "controller outputs: {}", names(&part.outputs));
                let _ = writeln!(out, "controller inputs: {}", names(&part.inputs));
            }
        }
    }
    if let Some(c) = &r.certificate {
        out.push_str("certificate:\n");
        let _ = writeln!(out, "  implementable: {}", c.implementable);
        let _ = writeln!(
            out,
            "  regularly implementable: {}",
            c.regularly_implementable
        );
        let _ = writeln!(out, "  regular: {}", c.regular);
        let _ = writeln!(out, "  implements specification: {}", c.implements_spec);
        let _ = writeln!(
            out,
            "  equivalent to canonical: {}",
            c.equivalent_to_canonical
        );
        if let Some(s) = c.input_selectable {
            let _ = writeln!(out, "  declared outputs free: {s}");
        }
        let _ = writeln!(out, "  passed: {}", c.passed());
    }
    out
}
