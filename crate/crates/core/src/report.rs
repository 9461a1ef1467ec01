//! Plain-text and JSON renderings shared by the CLI and the FFI layer.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::semantics::{LawReport, LogicSystem, TruthTable};
use crate::square::case_study::{CaseVerdict, Evidence, PnpReport, StateTable};
use crate::square::{Form, SquareVerdict};
use crate::zeta::{BoseCheck, ComplexValue, SeriesResult};

/// One line naming what the third value means in `logic`.
pub fn legend(logic: &LogicSystem) -> String {
    let designated: Vec<String> = logic.designated().iter().map(|v| v.to_string()).collect();
    format!("legend ({}): T = true, F = false, {}; designated {{{}}}", logic.name(), logic.gloss(), designated.join(","))
}

pub fn render_truth_table(t: &TruthTable) -> String {
    let headers: Vec<&str> = t.atoms.iter().map(|a| a.name()).collect();
    let widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(1)).collect();
    let mut out = String::new();
    for (h, w) in headers.iter().zip(&widths) {
        write!(out, "{h:<w$} ").unwrap();
    }
    writeln!(out, "| {}", t.formula).unwrap();
    for row in &t.rows {
        for ((_, v), w) in row.assignment.iter().zip(&widths) {
            write!(out, "{v:<w$} ").unwrap();
        }
        writeln!(out, "| {}{}", row.value, if row.designated { "" } else { "  (undesignated)" }).unwrap();
    }
    write!(out, "tautology: {}", t.designated_ok).unwrap();
    out
}

pub fn render_laws(r: &LawReport) -> String {
    let mut out = format!("laws of {}\n", r.logic);
    for law in &r.laws {
        match &law.witness {
            None => writeln!(out, "{}: holds   [{}]", law.law.label(), law.statement).unwrap(),
            Some(w) => writeln!(out, "{}: fails (witness {w})   [{}]", law.law.label(), law.statement).unwrap(),
        }
    }
    out.pop();
    out
}

pub fn render_square(v: &SquareVerdict) -> String {
    let mut out = String::new();
    for form in Form::ALL {
        writeln!(out, "{form}: {:<5}  {}", v.value(form), form.gloss(&v.subject, &v.predicate)).unwrap();
    }
    let r = &v.relations;
    writeln!(out, "vacuous_subject={}", v.vacuous_subject).unwrap();
    writeln!(
        out,
        "contradictories: {}, contraries: {}, subcontraries: {}, subalternation: {}",
        r.contradictories, r.contraries, r.subcontraries, r.subalternation
    )
    .unwrap();
    write!(out, "paradox_flag={}", v.paradox_flag).unwrap();
    out
}

pub fn render_case(v: &CaseVerdict) -> String {
    let mut out = format!("{}\ncode: {}\n{}", v.status, v.code, v.justification);
    for e in &v.evidence {
        out.push('\n');
        match e {
            Evidence::Square(s) => write!(
                out,
                "  square {} / {}: A={} E={} I={} O={} paradox_flag={}",
                s.subject,
                s.predicate,
                s.value(Form::A),
                s.value(Form::E),
                s.value(Form::I),
                s.value(Form::O),
                s.paradox_flag
            ),
            Evidence::Laws(r) => {
                let summary: Vec<String> = r
                    .laws
                    .iter()
                    .map(|l| format!("{}={}", l.law.label(), if l.holds { "holds" } else { "fails" }))
                    .collect();
                write!(out, "  laws of {}: {}", r.logic, summary.join(" "))
            }
            Evidence::Eval { logic, formula, assignment, value } => {
                write!(out, "  {logic}: {formula} = {value} at {assignment}")
            }
            Evidence::Entailment { logic, premises, conclusion, holds } => {
                write!(out, "  {logic}: {} |= {conclusion} is {holds}", premises.join(", "))
            }
            Evidence::Note { text } => write!(out, "  note: {text}"),
        }
        .unwrap();
    }
    out
}

pub fn render_pnp(r: &PnpReport) -> String {
    let mut out = String::new();
    for (i, chunk) in r.propositions.chunks(4).enumerate() {
        let cells: Vec<String> = chunk.iter().map(|p| format!("{}={}", p.id, p.value)).collect();
        let head = &chunk[0];
        writeln!(out, "square {} ({} / {}): {}", i + 1, head.subject, head.predicate, cells.join(" ")).unwrap();
    }
    for p in &r.paradoxes {
        writeln!(out, "paradox: {p}").unwrap();
    }
    write!(out, "conclusion: {}", r.conclusion).unwrap();
    out
}

pub fn render_state_table(t: &StateTable) -> String {
    let mut out = String::from("continuation  non-contradiction  state\n");
    for c in &t.cells {
        let marker = c.marker.map(String::from).unwrap_or_default();
        writeln!(out, "{:<13} {:<18} {}{marker}", c.analytic_continuation, c.non_contradiction, c.state).unwrap();
    }
    let p = &t.probe;
    write!(
        out,
        "probe s={}: series {}, continuation {} (value {})",
        fmt_complex(p.s),
        p.series_status,
        p.continuation_status,
        fmt_complex(p.continuation_value)
    )
    .unwrap();
    out
}

pub fn fmt_complex(z: ComplexValue) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

pub fn render_series(s: ComplexValue, method: &str, r: &SeriesResult) -> String {
    let mut out = format!(
        "zeta({}) ~ {}\nmethod: {method}\nerror_bound: {:e}\nterms: {}\nstatus: {}",
        fmt_complex(s),
        fmt_complex(r.value),
        r.error_bound,
        r.terms_used,
        r.status
    );
    if let Some(n) = &r.note {
        write!(out, "\nnote: {n}").unwrap();
    }
    out
}

/// `{s, method, value, error_bound, terms, status}`; non-finite numbers become null.
pub fn series_json(s: ComplexValue, method: &str, r: &SeriesResult) -> Value {
    let mut v = json!({
        "s": [s.re, s.im],
        "method": method,
        "value": [r.value.re, r.value.im],
        "error_bound": r.error_bound,
        "terms": r.terms_used,
        "status": r.status,
    });
    if let Some(n) = &r.note {
        v["note"] = json!(n);
    }
    v
}

pub fn render_bose(b: &BoseCheck) -> String {
    format!(
        "s = {}\nintegral        = {:.15} (+/- {:.1e}, cutoff {:.1})\ngamma * zeta    = {:.15} (+/- {:.1e})\ndifference      = {:.3e}",
        b.s, b.integral, b.integral_error, b.cutoff, b.gamma_times_zeta, b.gamma_times_zeta_error, b.difference
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::semantics::{classify_laws, truth_table};

    #[test]
    fn law_lines() {
        let lp = LogicSystem::builtin("lp").unwrap();
        let text = render_laws(&classify_laws(&lp));
        assert!(text.contains("ECQ: fails (witness p=X, q=F)"), "{text}");
        assert!(text.contains("LNC: holds"));
    }

    #[test]
    fn table_layout() {
        let k3 = LogicSystem::builtin("k3").unwrap();
        let text = render_truth_table(&truth_table(&parse("!p").unwrap(), &k3).unwrap());
        assert_eq!(text, "p | !p\nT | F  (undesignated)\nX | X  (undesignated)\nF | T\ntautology: false");
    }

    #[test]
    fn json_nulls_non_finite() {
        let r = SeriesResult {
            value: ComplexValue::new(2.0, 0.0),
            error_bound: f64::INFINITY,
            terms_used: 3,
            status: crate::zeta::SeriesStatus::Diverged,
            note: None,
        };
        let v = series_json(ComplexValue::new(0.5, 0.0), "dirichlet", &r);
        assert!(v["error_bound"].is_null());
        assert_eq!(v["status"], "Diverged");
        assert_eq!(v["value"][0], 2.0);
    }
}
