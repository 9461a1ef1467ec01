//! Rule tables for the two worked arguments: the hypothesis about zeta's
//! zeros under several logics, and the four P/NP squares.
//!
//! Verdicts are keyed on fixed premises; each one carries the square, law
//! report, or evaluation that backs it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::{square_report, Form, FiniteModel, SquareVerdict};
use crate::formula::{parse, Formula};
use crate::semantics::{classify_laws, entails, eval, LawReport, LogicSystem, TruthValue, Valuation};
use crate::zeta::{dirichlet_partial, em_zeta, ComplexValue, EMParams, SeriesStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("unknown case-study logic {0:?}; expected one of classical, intuitionistic, lp, bochvar")]
    UnknownLogic(String),
}

/// Logic classes of the hypothesis table. Intuitionistic logic has no finite
/// matrix, so its cells are fixed by rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLogic {
    Classical,
    Intuitionistic,
    Lp,
    Bochvar,
}

impl CaseLogic {
    pub const ALL: [CaseLogic; 4] = [CaseLogic::Classical, CaseLogic::Intuitionistic, CaseLogic::Lp, CaseLogic::Bochvar];

    pub fn name(self) -> &'static str {
        match self {
            CaseLogic::Classical => "classical",
            CaseLogic::Intuitionistic => "intuitionistic",
            CaseLogic::Lp => "lp",
            CaseLogic::Bochvar => "bochvar",
        }
    }

    fn matrix(self) -> Option<LogicSystem> {
        let name = match self {
            CaseLogic::Classical => "classical",
            CaseLogic::Intuitionistic => return None,
            CaseLogic::Lp => "lp",
            CaseLogic::Bochvar => "bochvar",
        };
        Some(LogicSystem::builtin(name).expect("builtin"))
    }
}

impl FromStr for CaseLogic {
    type Err = CaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "classical" | "classical2" => Ok(CaseLogic::Classical),
            "intuitionistic" | "int" => Ok(CaseLogic::Intuitionistic),
            "lp" | "priest" | "priestlp" => Ok(CaseLogic::Lp),
            "bochvar" | "bochvarinternal" => Ok(CaseLogic::Bochvar),
            _ => Err(CaseError::UnknownLogic(s.to_string())),
        }
    }
}

impl fmt::Display for CaseLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How "all zeros lie on the line" is phrased: as a universal conditional
/// (the default) or as "there are zeros, and all of them lie on the line".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    #[default]
    Conditional,
    Conjunction,
}

impl FromStr for Reading {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "conditional" => Ok(Reading::Conditional),
            "conjunction" => Ok(Reading::Conjunction),
            other => Err(format!("unknown reading {other:?} (expected conditional or conjunction)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    True,
    False,
    Paradox,
    ThirdValue,
    NoValue,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictStatus::True => "true",
            VerdictStatus::False => "false",
            VerdictStatus::Paradox => "paradox",
            VerdictStatus::ThirdValue => "third-value",
            VerdictStatus::NoValue => "no-value",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Evidence {
    Square(SquareVerdict),
    Laws(LawReport),
    Eval { logic: String, formula: String, assignment: Valuation, value: TruthValue },
    Entailment { logic: String, premises: Vec<String>, conclusion: String, holds: bool },
    Note { text: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseVerdict {
    pub status: VerdictStatus,
    /// Short machine-readable label, e.g. `trivially-true-by-ECQ`.
    pub code: String,
    pub justification: String,
    pub evidence: Vec<Evidence>,
}

fn formula(text: &str) -> Formula {
    parse(text).expect("case-study formula literal parses")
}

fn eval_evidence(logic: &LogicSystem, text: &str, assignment: Valuation) -> Evidence {
    let value = eval(&formula(text), &assignment, logic).expect("assignment covers the formula");
    Evidence::Eval { logic: logic.name().to_string(), formula: text.to_string(), assignment, value }
}

fn entailment_evidence(logic: &LogicSystem, premises: &[&str], conclusion: &str) -> Evidence {
    let ps: Vec<Formula> = premises.iter().map(|p| formula(p)).collect();
    let holds = entails(&ps, &formula(conclusion), logic).expect("few atoms");
    Evidence::Entailment {
        logic: logic.name().to_string(),
        premises: premises.iter().map(|p| p.to_string()).collect(),
        conclusion: conclusion.to_string(),
        holds,
    }
}

/// Points of the half-plane `Re(s) <= 1`, with the zero predicate empty:
/// the Dirichlet series alone has no zeros there.
pub fn vacuous_zeros_model() -> FiniteModel {
    FiniteModel::new(["s_a", "s_b", "s_c"])
        .and_then(|m| m.with_predicate("zero", Vec::<String>::new()))
        .and_then(|m| m.with_predicate("on_critical_line", ["s_b"]))
        .expect("fixed model is well-formed")
}

fn vacuous_square() -> SquareVerdict {
    square_report("zero", "on_critical_line", &vacuous_zeros_model()).expect("predicates exist")
}

/// Verdict for one cell of the hypothesis table under the conditional reading.
pub fn case_study_rh(ac_of_zeta_true: bool, logic_name: &str) -> Result<CaseVerdict, CaseError> {
    Ok(rh_verdict(ac_of_zeta_true, logic_name.parse()?, Reading::Conditional))
}

/// Hypothesis verdict under an explicit reading.
pub fn rh_verdict(ac_of_zeta_true: bool, logic: CaseLogic, reading: Reading) -> CaseVerdict {
    // z: "zeta converges here", r: the hypothesis, c: "the zeros lie on the line"
    let matrix = logic.matrix();
    let mut evidence = Vec::new();
    if ac_of_zeta_true {
        return match logic {
            CaseLogic::Classical | CaseLogic::Intuitionistic => {
                if let Some(m) = &matrix {
                    evidence.push(Evidence::Laws(classify_laws(m)));
                    evidence.push(entailment_evidence(m, &["z", "!z"], "r"));
                } else {
                    evidence.push(Evidence::Note {
                        text: "intuitionistic logic keeps non-contradiction and explosion; no finite matrix, fixed by rule"
                            .into(),
                    });
                }
                CaseVerdict {
                    status: VerdictStatus::True,
                    code: "trivially-true-by-ECQ".into(),
                    justification: "zeta is both convergent and divergent on Re(s) <= 1; the contradiction explodes"
                        .into(),
                    evidence,
                }
            }
            CaseLogic::Lp | CaseLogic::Bochvar => {
                let m = matrix.expect("three-valued logics have matrices");
                evidence.push(eval_evidence(&m, "z & !z", Valuation::new().with("z", TruthValue::X)));
                if logic == CaseLogic::Bochvar {
                    evidence.push(eval_evidence(
                        &m,
                        "(z & !z) -> r",
                        Valuation::new().with("z", TruthValue::X).with("r", TruthValue::T),
                    ));
                } else {
                    evidence.push(Evidence::Laws(classify_laws(&m)));
                }
                CaseVerdict {
                    status: VerdictStatus::ThirdValue,
                    code: "third-value".into(),
                    justification: "the paradoxical zeta carries the third value into the hypothesis".into(),
                    evidence,
                }
            }
        };
    }

    let square = vacuous_square();
    if reading == Reading::Conjunction {
        let classical = LogicSystem::builtin("classical").expect("builtin");
        let no_zeros = || Valuation::new().with("z", TruthValue::F).with("c", TruthValue::T);
        evidence.push(eval_evidence(&classical, "z & c", no_zeros()));
        evidence.push(eval_evidence(&classical, "z & !c", no_zeros()));
        evidence.push(Evidence::Square(square));
        return CaseVerdict {
            status: VerdictStatus::False,
            code: "false".into(),
            justification: "\"there are zeros and ...\" is false, and so is its rival, since there are no zeros".into(),
            evidence,
        };
    }
    match logic {
        CaseLogic::Classical => {
            let m = matrix.expect("classical matrix");
            evidence.push(Evidence::Square(square));
            evidence.push(Evidence::Laws(classify_laws(&m)));
            CaseVerdict {
                status: VerdictStatus::Paradox,
                code: "paradox".into(),
                justification: "no zeros: the hypothesis and its rival are both vacuously true, which explodes".into(),
                evidence,
            }
        }
        CaseLogic::Intuitionistic => {
            evidence.push(Evidence::Square(square));
            evidence.push(Evidence::Note { text: "the zeros cannot be constructed, so the claim about them fails".into() });
            CaseVerdict {
                status: VerdictStatus::False,
                code: "false".into(),
                justification: "no zeros exist to witness the claim".into(),
                evidence,
            }
        }
        CaseLogic::Lp | CaseLogic::Bochvar => {
            let m = matrix.expect("three-valued logics have matrices");
            evidence.push(Evidence::Square(square));
            evidence.push(eval_evidence(
                &m,
                "(z -> c) & (z -> !c)",
                Valuation::new().with("z", TruthValue::F).with("c", TruthValue::T),
            ));
            CaseVerdict {
                status: VerdictStatus::ThirdValue,
                code: "third-value".into(),
                justification: "a false antecedent makes the hypothesis and its rival both true; the paradox gets the third value"
                    .into(),
                evidence,
            }
        }
    }
}

/// One cell of the state table of zeta on `Re(s) <= 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateCell {
    pub analytic_continuation: bool,
    pub non_contradiction: bool,
    pub state: String,
    /// `*` where the paradox violates non-contradiction, `†` where it is
    /// given a third value instead.
    pub marker: Option<char>,
}

/// Numerical backing for the state table at a probe point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateProbe {
    pub s: ComplexValue,
    pub series_status: SeriesStatus,
    pub continuation_status: SeriesStatus,
    pub continuation_value: ComplexValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateTable {
    pub cells: Vec<StateCell>,
    pub probe: StateProbe,
}

pub fn zeta_state_table() -> StateTable {
    let mut cells = Vec::new();
    for ac in [true, false] {
        for lnc in [true, false] {
            let (state, marker) = if ac {
                ("Divergent & Convergent (Paradox)", Some(if lnc { '*' } else { '†' }))
            } else {
                ("Divergent", None)
            };
            cells.push(StateCell { analytic_continuation: ac, non_contradiction: lnc, state: state.into(), marker });
        }
    }
    let s = ComplexValue::new(-1.0, 0.0);
    let series = dirichlet_partial(s, 1000).expect("N >= 1");
    let continued = em_zeta(s, EMParams { m: 5, n: 20 }).expect("in domain");
    StateTable {
        cells,
        probe: StateProbe {
            s,
            series_status: series.status,
            continuation_status: continued.status,
            continuation_value: continued.value,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PnpProposition {
    pub id: String,
    pub form: Form,
    pub subject: String,
    pub predicate: String,
    pub value: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PnpReport {
    pub model: FiniteModel,
    pub propositions: Vec<PnpProposition>,
    pub squares: Vec<SquareVerdict>,
    /// Square numbers whose A and E are both (vacuously) true.
    pub paradoxes: Vec<String>,
    pub conclusion: String,
}

impl PnpReport {
    /// `(id, value)` pairs in square order, A/E/I/O within each square.
    pub fn verdicts(&self) -> Vec<(String, bool)> {
        self.propositions.iter().map(|p| (p.id.clone(), p.value)).collect()
    }

    pub fn value(&self, id: &str) -> Option<bool> {
        self.propositions.iter().find(|p| p.id == id).map(|p| p.value)
    }
}

pub const PNP_CONCLUSION: &str = "P != NP under the paper's premises";

/// Two witness problems; every problem is in NP, so `notNP` is empty.
pub fn pnp_model() -> FiniteModel {
    FiniteModel::new(["CVP", "TSP"])
        .and_then(|m| m.with_predicate("P", ["CVP"]))
        .and_then(|m| m.with_predicate("NP", ["CVP", "TSP"]))
        .and_then(|m| m.with_complement("notP", "P"))
        .and_then(|m| m.with_complement("notNP", "NP"))
        .expect("fixed model is well-formed")
}

pub fn case_study_pnp() -> PnpReport {
    let model = pnp_model();
    let pairs = [("P", "NP"), ("NP", "P"), ("notP", "notNP"), ("notNP", "notP")];
    let mut propositions = Vec::new();
    let mut squares = Vec::new();
    let mut paradoxes = Vec::new();
    for (i, (subject, predicate)) in pairs.iter().enumerate() {
        let v = square_report(subject, predicate, &model).expect("predicates exist");
        for form in Form::ALL {
            propositions.push(PnpProposition {
                id: format!("{form}{}", i + 1),
                form,
                subject: subject.to_string(),
                predicate: predicate.to_string(),
                value: v.value(form),
            });
        }
        if v.paradox_flag {
            paradoxes.push(format!("A{n}/E{n}", n = i + 1));
        }
        squares.push(v);
    }
    // equality needs both directions in one of the two pairs
    let p_eq_np = (propositions[0].value && propositions[4].value) || (propositions[8].value && propositions[12].value);
    let conclusion = if p_eq_np { "P = NP under the paper's premises".to_string() } else { PNP_CONCLUSION.to_string() };
    PnpReport { model, propositions, squares, paradoxes, conclusion }
}
