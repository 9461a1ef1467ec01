//! Truth-functional three-valued logics: connective tables, evaluation,
//! truth tables, tautology and designated-value consequence.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::formula::{Atom, Formula};

/// Shared three-value carrier. `X` is the system-relative third value: a gap
/// for Frege, unknown for Kleene and Łukasiewicz, a glut for Priest, and
/// meaningless for Bochvar. Declaration order gives `T < X < F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue {
    T,
    X,
    F,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::T, TruthValue::X, TruthValue::F];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            TruthValue::T => 'T',
            TruthValue::X => 'X',
            TruthValue::F => 'F',
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_char(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown truth value {0:?} (expected T, X, or F)")]
pub struct UnknownTruthValue(pub String);

impl FromStr for TruthValue {
    type Err = UnknownTruthValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "T" | "t" | "1" => Ok(TruthValue::T),
            "X" | "x" | "U" | "u" | "B" | "b" => Ok(TruthValue::X),
            "F" | "f" | "0" => Ok(TruthValue::F),
            other => Err(UnknownTruthValue(other.to_string())),
        }
    }
}

use TruthValue::{F, T, X};

pub type UnaryTable = [TruthValue; 3];
pub type BinaryTable = [[TruthValue; 3]; 3];

/// The six connectives of the formula language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    Not,
    Assert,
    And,
    Or,
    Implies,
    Iff,
}

/// Connective tables indexed by `TruthValue` (row = left operand).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectiveTables {
    pub not: UnaryTable,
    pub assert: UnaryTable,
    pub and: BinaryTable,
    pub or: BinaryTable,
    pub implies: BinaryTable,
    pub iff: BinaryTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("logic {0:?}: designated set is empty")]
    NoDesignated(String),
    #[error("logic {0:?}: T must be designated")]
    TrueNotDesignated(String),
    #[error("logic {0:?}: designated value {1} is not in the value set")]
    DesignatedOutsideValues(String, TruthValue),
    #[error("logic {logic:?}: {connective:?} maps into {value}, which is outside the value set")]
    TableNotClosed { logic: String, connective: Connective, value: TruthValue },
    #[error("unknown logic {0:?}; builtin logics: {names}", names = builtin_names().join(", "))]
    UnknownLogic(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicSystem {
    name: String,
    values: Vec<TruthValue>,
    designated: Vec<TruthValue>,
    tables: ConnectiveTables,
    gap_semantics: bool,
    gloss: String,
}

impl LogicSystem {
    /// Validates and builds a logic. Tables must close over `values`.
    pub fn new(
        name: impl Into<String>,
        values: &[TruthValue],
        designated: &[TruthValue],
        tables: ConnectiveTables,
        gap_semantics: bool,
        gloss: impl Into<String>,
    ) -> Result<Self, LogicError> {
        let name = name.into();
        let mut values = values.to_vec();
        values.sort();
        values.dedup();
        let mut designated = designated.to_vec();
        designated.sort();
        designated.dedup();
        if designated.is_empty() {
            return Err(LogicError::NoDesignated(name));
        }
        if !designated.contains(&T) {
            return Err(LogicError::TrueNotDesignated(name));
        }
        if let Some(d) = designated.iter().find(|d| !values.contains(d)) {
            return Err(LogicError::DesignatedOutsideValues(name, *d));
        }
        let closed = |connective, value: TruthValue| {
            if values.contains(&value) {
                Ok(())
            } else {
                Err(LogicError::TableNotClosed { logic: name.clone(), connective, value })
            }
        };
        for &a in &values {
            closed(Connective::Not, tables.not[a.index()])?;
            closed(Connective::Assert, tables.assert[a.index()])?;
            for &b in &values {
                let (i, j) = (a.index(), b.index());
                closed(Connective::And, tables.and[i][j])?;
                closed(Connective::Or, tables.or[i][j])?;
                closed(Connective::Implies, tables.implies[i][j])?;
                closed(Connective::Iff, tables.iff[i][j])?;
            }
        }
        Ok(LogicSystem { name, values, designated, tables, gap_semantics, gloss: gloss.into() })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Values in `T < X < F` order.
    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn designated(&self) -> &[TruthValue] {
        &self.designated
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated.contains(&v)
    }

    pub fn contains(&self, v: TruthValue) -> bool {
        self.values.contains(&v)
    }

    pub fn tables(&self) -> &ConnectiveTables {
        &self.tables
    }

    /// When set, `X` is reported as the absence of a truth value.
    pub fn gap_semantics(&self) -> bool {
        self.gap_semantics
    }

    /// What `X` means in this logic, for legends.
    pub fn gloss(&self) -> &str {
        &self.gloss
    }

    pub fn unary(&self, c: Connective, a: TruthValue) -> TruthValue {
        match c {
            Connective::Not => self.tables.not[a.index()],
            Connective::Assert => self.tables.assert[a.index()],
            _ => panic!("{c:?} is not unary"),
        }
    }

    pub fn binary(&self, c: Connective, a: TruthValue, b: TruthValue) -> TruthValue {
        let table = match c {
            Connective::And => &self.tables.and,
            Connective::Or => &self.tables.or,
            Connective::Implies => &self.tables.implies,
            Connective::Iff => &self.tables.iff,
            _ => panic!("{c:?} is not binary"),
        };
        table[a.index()][b.index()]
    }

    /// Looks up a builtin logic by name or alias (case-insensitive).
    pub fn builtin(name: &str) -> Result<LogicSystem, LogicError> {
        let key = name.trim().to_ascii_lowercase().replace(['-', '_'], "");
        let canonical = match key.as_str() {
            "classical" | "classical2" | "cl" | "boolean" => "Classical2",
            "frege" | "fregegap" => "FregeGap",
            "k3" | "kleene" | "kleenek3" | "strongkleene" => "KleeneK3",
            "lp" | "priest" | "priestlp" => "PriestLP",
            "l3" | "ł3" | "lukasiewicz" | "lukasiewicz3" | "łukasiewicz" => "Lukasiewicz3",
            "bochvar" | "bochvarinternal" | "b3" => "BochvarInternal",
            _ => return Err(LogicError::UnknownLogic(name.to_string())),
        };
        Ok(builtin_logics()
            .into_iter()
            .find(|l| l.name == canonical)
            .expect("canonical builtin exists"))
    }
}

pub fn builtin_names() -> Vec<&'static str> {
    vec!["classical", "frege", "k3", "lp", "l3", "bochvar"]
}

const CLASSICAL_NOT: UnaryTable = [F, X, T];
const IDENTITY: UnaryTable = [T, X, F];
// Bochvar's T column: only T is asserted true.
const BOCHVAR_ASSERT: UnaryTable = [T, F, F];

// Kleene's strong tables, rows and columns in T, X, F order.
const K3_AND: BinaryTable = [[T, X, F], [X, X, F], [F, F, F]];
const K3_OR: BinaryTable = [[T, T, T], [T, X, X], [T, X, F]];
const K3_IMPLIES: BinaryTable = [[T, X, F], [T, X, X], [T, T, T]];
// "means the same as": true exactly on the diagonal.
const K3_IFF: BinaryTable = [[T, F, F], [F, T, F], [F, F, T]];

const L3_IMPLIES: BinaryTable = [[T, X, F], [T, T, X], [T, T, T]];

const fn v(b: bool) -> TruthValue {
    if b {
        T
    } else {
        F
    }
}

const fn infectious(classical: [[bool; 2]; 2]) -> BinaryTable {
    [
        [v(classical[0][0]), X, v(classical[0][1])],
        [X, X, X],
        [v(classical[1][0]), X, v(classical[1][1])],
    ]
}

// classical[a][b] with index 0 = true, 1 = false
const INF_AND: BinaryTable = infectious([[true, false], [false, false]]);
const INF_OR: BinaryTable = infectious([[true, true], [true, false]]);
const INF_IMPLIES: BinaryTable = infectious([[true, false], [true, true]]);
const INF_IFF: BinaryTable = infectious([[true, false], [false, true]]);

fn l3_iff() -> BinaryTable {
    let mut t = [[T; 3]; 3];
    for a in TruthValue::ALL {
        for b in TruthValue::ALL {
            let ab = L3_IMPLIES[a.index()][b.index()];
            let ba = L3_IMPLIES[b.index()][a.index()];
            t[a.index()][b.index()] = K3_AND[ab.index()][ba.index()];
        }
    }
    t
}

/// The six builtin logics, in a fixed order.
pub fn builtin_logics() -> Vec<LogicSystem> {
    let two = [T, F];
    let three = [T, X, F];
    let kleene = ConnectiveTables {
        not: CLASSICAL_NOT,
        assert: BOCHVAR_ASSERT,
        and: K3_AND,
        or: K3_OR,
        implies: K3_IMPLIES,
        iff: K3_IFF,
    };
    let infectious_tables = |assert| ConnectiveTables {
        not: CLASSICAL_NOT,
        assert,
        and: INF_AND,
        or: INF_OR,
        implies: INF_IMPLIES,
        iff: INF_IFF,
    };
    let build = |name, values: &[TruthValue], designated: &[TruthValue], tables, gap, gloss| {
        LogicSystem::new(name, values, designated, tables, gap, gloss).expect("builtin logic is well-formed")
    };
    vec![
        build(
            "Classical2",
            &two,
            &[T],
            ConnectiveTables { assert: IDENTITY, ..infectious_tables(IDENTITY) },
            false,
            "no third value",
        ),
        build("FregeGap", &three, &[T], infectious_tables(IDENTITY), true, "X = no truth value (gap)"),
        build("KleeneK3", &three, &[T], kleene.clone(), false, "X = unknown"),
        build("PriestLP", &three, &[T, X], kleene.clone(), false, "X = both true and false (glut)"),
        build(
            "Lukasiewicz3",
            &three,
            &[T],
            ConnectiveTables { implies: L3_IMPLIES, iff: l3_iff(), ..kleene },
            false,
            "X = possible / not yet determined",
        ),
        build(
            "BochvarInternal",
            &three,
            &[T],
            infectious_tables(BOCHVAR_ASSERT),
            false,
            "X = meaningless (paradoxical)",
        ),
    ]
}

/// A total assignment over an ordered atom list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Valuation {
    entries: Vec<(Atom, TruthValue)>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets `atom`, replacing any previous value.
    pub fn set(&mut self, atom: Atom, value: TruthValue) {
        match self.entries.iter_mut().find(|(a, _)| *a == atom) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((atom, value)),
        }
    }

    pub fn with(mut self, atom: &str, value: TruthValue) -> Self {
        self.set(Atom::new(atom).expect("valid atom literal"), value);
        self
    }

    pub fn get(&self, atom: &Atom) -> Option<TruthValue> {
        self.entries.iter().find(|(a, _)| a == atom).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, TruthValue)> {
        self.entries.iter().map(|(a, v)| (a, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (a, v) in &self.entries {
            map.serialize_entry(a.name(), v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no value assigned to atom `{0}`")]
    MissingAtom(String),
    #[error("atom `{atom}` has value {value}, which is not a value of {logic}")]
    ValueOutsideSystem { atom: String, value: TruthValue, logic: String },
    #[error("{0} atoms exceed the limit of {MAX_ATOMS} for exhaustive enumeration")]
    TooManyAtoms(usize),
}

/// Row-explosion guard for enumeration.
pub const MAX_ATOMS: usize = 12;

/// Bottom-up table evaluation.
pub fn eval(f: &Formula, v: &Valuation, logic: &LogicSystem) -> Result<TruthValue, EvalError> {
    Ok(match f {
        Formula::Atom(a) => {
            let value = v.get(a).ok_or_else(|| EvalError::MissingAtom(a.name().to_string()))?;
            if !logic.contains(value) {
                return Err(EvalError::ValueOutsideSystem {
                    atom: a.name().to_string(),
                    value,
                    logic: logic.name().to_string(),
                });
            }
            value
        }
        Formula::Not(x) => logic.unary(Connective::Not, eval(x, v, logic)?),
        Formula::Assert(x) => logic.unary(Connective::Assert, eval(x, v, logic)?),
        Formula::And(a, b) => logic.binary(Connective::And, eval(a, v, logic)?, eval(b, v, logic)?),
        Formula::Or(a, b) => logic.binary(Connective::Or, eval(a, v, logic)?, eval(b, v, logic)?),
        Formula::Implies(a, b) => {
            logic.binary(Connective::Implies, eval(a, v, logic)?, eval(b, v, logic)?)
        }
        Formula::Iff(a, b) => logic.binary(Connective::Iff, eval(a, v, logic)?, eval(b, v, logic)?),
    })
}

/// All valuations of `atoms` over the logic's values, first atom most significant.
pub fn valuations(atoms: &[Atom], logic: &LogicSystem) -> Result<Vec<Valuation>, EvalError> {
    if atoms.len() > MAX_ATOMS {
        return Err(EvalError::TooManyAtoms(atoms.len()));
    }
    let base = logic.values().len();
    let rows = base.pow(atoms.len() as u32);
    let mut out = Vec::with_capacity(rows);
    let mut digits = vec![0usize; atoms.len()];
    for _ in 0..rows {
        let mut v = Valuation::new();
        for (a, &d) in atoms.iter().zip(&digits) {
            v.set(a.clone(), logic.values()[d]);
        }
        out.push(v);
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < base {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruthTableRow {
    pub assignment: Valuation,
    pub value: TruthValue,
    pub designated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruthTable {
    pub formula: String,
    pub logic: String,
    pub atoms: Vec<Atom>,
    pub rows: Vec<TruthTableRow>,
    /// Every row designated, i.e. the formula is a tautology of the logic.
    pub designated_ok: bool,
}

pub fn truth_table(f: &Formula, logic: &LogicSystem) -> Result<TruthTable, EvalError> {
    let atoms = f.atoms();
    let rows = valuations(&atoms, logic)?
        .into_iter()
        .map(|assignment| {
            let value = eval(f, &assignment, logic)?;
            Ok(TruthTableRow { designated: logic.is_designated(value), assignment, value })
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(TruthTable {
        formula: f.render(),
        logic: logic.name().to_string(),
        designated_ok: rows.iter().all(|r| r.designated),
        atoms,
        rows,
    })
}

/// First valuation (in table order) that fails to designate `f`.
pub fn tautology_countermodel(f: &Formula, logic: &LogicSystem) -> Result<Option<Valuation>, EvalError> {
    for v in valuations(&f.atoms(), logic)? {
        if !logic.is_designated(eval(f, &v, logic)?) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// True iff every valuation yields a designated value.
pub fn is_tautology(f: &Formula, logic: &LogicSystem) -> Result<bool, EvalError> {
    Ok(tautology_countermodel(f, logic)?.is_none())
}

fn joint_atoms(premises: &[Formula], conclusion: &Formula) -> Vec<Atom> {
    let mut atoms: Vec<Atom> = Vec::new();
    for f in premises.iter().chain(std::iter::once(conclusion)) {
        for a in f.atoms() {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    }
    atoms
}

/// First valuation designating every premise but not the conclusion.
pub fn entailment_countermodel(
    premises: &[Formula],
    conclusion: &Formula,
    logic: &LogicSystem,
) -> Result<Option<Valuation>, EvalError> {
    'rows: for v in valuations(&joint_atoms(premises, conclusion), logic)? {
        for p in premises {
            if !logic.is_designated(eval(p, &v, logic)?) {
                continue 'rows;
            }
        }
        if !logic.is_designated(eval(conclusion, &v, logic)?) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Designated-value consequence.
pub fn entails(premises: &[Formula], conclusion: &Formula, logic: &LogicSystem) -> Result<bool, EvalError> {
    Ok(entailment_countermodel(premises, conclusion, logic)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    #[serde(rename = "LOI")]
    Identity,
    #[serde(rename = "LEM")]
    ExcludedMiddle,
    #[serde(rename = "LNC")]
    NonContradiction,
    #[serde(rename = "DoubleNegation")]
    DoubleNegation,
    #[serde(rename = "ECQ")]
    Explosion,
    #[serde(rename = "DeMorganAnd")]
    DeMorganAnd,
    #[serde(rename = "DeMorganOr")]
    DeMorganOr,
}

impl Law {
    pub const ALL: [Law; 7] = [
        Law::Identity,
        Law::ExcludedMiddle,
        Law::NonContradiction,
        Law::DoubleNegation,
        Law::Explosion,
        Law::DeMorganAnd,
        Law::DeMorganOr,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Law::Identity => "LOI",
            Law::ExcludedMiddle => "LEM",
            Law::NonContradiction => "LNC",
            Law::DoubleNegation => "DoubleNegation",
            Law::Explosion => "ECQ",
            Law::DeMorganAnd => "DeMorganAnd",
            Law::DeMorganOr => "DeMorganOr",
        }
    }

    /// Human-readable statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            Law::Identity => "|= p <-> p",
            Law::ExcludedMiddle => "|= p | !p",
            Law::NonContradiction => "|= !(p & !p)",
            Law::DoubleNegation => "|= !!p <-> p",
            Law::Explosion => "p, !p |= q",
            Law::DeMorganAnd => "!(p & q) =||= !p | !q",
            Law::DeMorganOr => "!(p | q) =||= !p & !q",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawResult {
    pub law: Law,
    pub statement: &'static str,
    pub holds: bool,
    pub witness: Option<Valuation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub logic: String,
    pub laws: Vec<LawResult>,
}

impl LawReport {
    pub fn get(&self, law: Law) -> &LawResult {
        self.laws.iter().find(|r| r.law == law).expect("every law is reported")
    }

    pub fn holds(&self, law: Law) -> bool {
        self.get(law).holds
    }
}

fn parsed(s: &str) -> Formula {
    crate::formula::parse(s).expect("law formula literal parses")
}

/// Checks the classical laws via `is_tautology` / `entails`, with witnesses on failure.
pub fn classify_laws(logic: &LogicSystem) -> LawReport {
    let taut = |s: &str| tautology_countermodel(&parsed(s), logic).expect("law formulas have few atoms");
    let ent = |premises: &[&str], conclusion: &str| {
        let ps: Vec<Formula> = premises.iter().map(|p| parsed(p)).collect();
        entailment_countermodel(&ps, &parsed(conclusion), logic).expect("law formulas have few atoms")
    };
    let both_ways = |a: &str, b: &str| ent(&[a], b).or_else(|| ent(&[b], a));
    let laws = Law::ALL
        .iter()
        .map(|&law| {
            let witness = match law {
                Law::Identity => taut("p <-> p"),
                Law::ExcludedMiddle => taut("p | !p"),
                Law::NonContradiction => taut("!(p & !p)"),
                Law::DoubleNegation => taut("!!p <-> p"),
                Law::Explosion => ent(&["p", "!p"], "q"),
                Law::DeMorganAnd => both_ways("!(p & q)", "!p | !q"),
                Law::DeMorganOr => both_ways("!(p | q)", "!p & !q"),
            };
            LawResult { law, statement: law.statement(), holds: witness.is_none(), witness }
        })
        .collect();
    LawReport { logic: logic.name().to_string(), laws }
}
