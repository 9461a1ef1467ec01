//! Categorical A/E/I/O propositions over finite models, read the modern
//! (Boolean) way, with the traditional square's relations checked on top.

pub mod case_study;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("duplicate element `{0}` in domain")]
    DuplicateElement(String),
    #[error("predicate `{predicate}` contains `{element}`, which is not in the domain")]
    ElementOutsideDomain { predicate: String, element: String },
    #[error("model line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// A finite domain with named unary-predicate extensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteModel {
    domain: Vec<String>,
    predicates: BTreeMap<String, BTreeSet<String>>,
}

impl FiniteModel {
    pub fn new<I, S>(domain: I) -> Result<Self, SquareError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in domain {
            let e = e.into();
            if !seen.insert(e.clone()) {
                return Err(SquareError::DuplicateElement(e));
            }
            out.push(e);
        }
        Ok(FiniteModel { domain: out, predicates: BTreeMap::new() })
    }

    /// Adds or replaces a predicate extension.
    pub fn with_predicate<I, S>(mut self, name: &str, extension: I) -> Result<Self, SquareError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut ext = BTreeSet::new();
        for e in extension {
            let e = e.into();
            if !self.domain.contains(&e) {
                return Err(SquareError::ElementOutsideDomain { predicate: name.to_string(), element: e });
            }
            ext.insert(e);
        }
        self.predicates.insert(name.to_string(), ext);
        Ok(self)
    }

    /// Adds `name` as the domain-complement of `of`.
    pub fn with_complement(self, name: &str, of: &str) -> Result<Self, SquareError> {
        let ext = self.extension(of)?.clone();
        let complement: Vec<String> = self.domain.iter().filter(|e| !ext.contains(*e)).cloned().collect();
        self.with_predicate(name, complement)
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn predicate_names(&self) -> impl Iterator<Item = &str> {
        self.predicates.keys().map(String::as_str)
    }

    pub fn extension(&self, predicate: &str) -> Result<&BTreeSet<String>, SquareError> {
        self.predicates
            .get(predicate)
            .ok_or_else(|| SquareError::UnknownPredicate(predicate.to_string()))
    }

    /// Parses the line format:
    ///
    /// ```text
    /// # comment
    /// domain: a, b, c
    /// unicorn:
    /// horned: a
    /// ```
    pub fn parse(text: &str) -> Result<Self, SquareError> {
        let mut model: Option<FiniteModel> = None;
        let mut pending: Vec<(usize, String, Vec<String>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| SquareError::Syntax {
                line: line_no,
                message: format!("expected `name: e1,e2,...`, got {line:?}"),
            })?;
            let key = key.trim();
            if key.is_empty() || key.contains(char::is_whitespace) {
                return Err(SquareError::Syntax { line: line_no, message: format!("bad name {key:?}") });
            }
            let items: Vec<String> =
                rest.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect();
            if key == "domain" {
                if model.is_some() {
                    return Err(SquareError::Syntax { line: line_no, message: "duplicate domain line".into() });
                }
                model = Some(FiniteModel::new(items)?);
            } else {
                if pending.iter().any(|(_, k, _)| k == key) {
                    return Err(SquareError::Syntax {
                        line: line_no,
                        message: format!("predicate `{key}` defined twice"),
                    });
                }
                pending.push((line_no, key.to_string(), items));
            }
        }
        let mut model = model.ok_or(SquareError::Syntax { line: 0, message: "missing `domain:` line".into() })?;
        for (_, name, items) in pending {
            model = model.with_predicate(&name, items)?;
        }
        Ok(model)
    }

    /// Inverse of [`FiniteModel::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("domain: {}\n", self.domain.join(","));
        for (name, ext) in &self.predicates {
            let items: Vec<&str> = self.domain.iter().filter(|e| ext.contains(*e)).map(String::as_str).collect();
            out.push_str(&format!("{name}: {}\n", items.join(",")));
        }
        out
    }
}

impl FromStr for FiniteModel {
    type Err = SquareError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FiniteModel::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Form {
    /// All S are P.
    A,
    /// No S are P.
    E,
    /// Some S are P.
    I,
    /// Some S are not P.
    O,
}

impl Form {
    pub const ALL: [Form; 4] = [Form::A, Form::E, Form::I, Form::O];

    pub fn contradictory(self) -> Form {
        match self {
            Form::A => Form::O,
            Form::O => Form::A,
            Form::E => Form::I,
            Form::I => Form::E,
        }
    }

    pub fn gloss(self, subject: &str, predicate: &str) -> String {
        match self {
            Form::A => format!("All {subject} are {predicate}"),
            Form::E => format!("No {subject} are {predicate}"),
            Form::I => format!("Some {subject} are {predicate}"),
            Form::O => format!("Some {subject} are not {predicate}"),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoricalProposition {
    pub form: Form,
    pub subject: String,
    pub predicate: String,
}

impl CategoricalProposition {
    pub fn new(form: Form, subject: &str, predicate: &str) -> Self {
        CategoricalProposition { form, subject: subject.to_string(), predicate: predicate.to_string() }
    }
}

/// Modern truth conditions: A and E are vacuously true on an empty subject.
pub fn eval_categorical(p: &CategoricalProposition, m: &FiniteModel) -> Result<bool, SquareError> {
    let subject = m.extension(&p.subject)?;
    let predicate = m.extension(&p.predicate)?;
    Ok(match p.form {
        Form::A => subject.iter().all(|e| predicate.contains(e)),
        Form::E => subject.iter().all(|e| !predicate.contains(e)),
        Form::I => subject.iter().any(|e| predicate.contains(e)),
        Form::O => subject.iter().any(|e| !predicate.contains(e)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationStatus {
    Holds,
    Fails,
}

impl RelationStatus {
    fn from_bool(b: bool) -> Self {
        if b {
            RelationStatus::Holds
        } else {
            RelationStatus::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == RelationStatus::Holds
    }
}

impl fmt::Display for RelationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds() { "holds" } else { "fails" })
    }
}

/// Traditional square relations, checked against the modern truth values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Relations {
    /// A/O and E/I differ in truth value.
    pub contradictories: RelationStatus,
    /// A and E are not both true.
    pub contraries: RelationStatus,
    /// I and O are not both false.
    pub subcontraries: RelationStatus,
    /// A implies I and E implies O.
    pub subalternation: RelationStatus,
}

impl Relations {
    pub fn all_hold(&self) -> bool {
        [self.contradictories, self.contraries, self.subcontraries, self.subalternation]
            .iter()
            .all(|r| r.holds())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareVerdict {
    pub subject: String,
    pub predicate: String,
    pub truth: BTreeMap<Form, bool>,
    pub vacuous_subject: bool,
    pub relations: Relations,
    /// Empty subject with A and E both true.
    pub paradox_flag: bool,
}

impl SquareVerdict {
    pub fn value(&self, form: Form) -> bool {
        self.truth[&form]
    }
}

pub fn square_report(subject: &str, predicate: &str, m: &FiniteModel) -> Result<SquareVerdict, SquareError> {
    let mut truth = BTreeMap::new();
    for form in Form::ALL {
        truth.insert(form, eval_categorical(&CategoricalProposition::new(form, subject, predicate), m)?);
    }
    let (a, e, i, o) = (truth[&Form::A], truth[&Form::E], truth[&Form::I], truth[&Form::O]);
    let vacuous_subject = m.extension(subject)?.is_empty();
    let relations = Relations {
        contradictories: RelationStatus::from_bool(a != o && e != i),
        contraries: RelationStatus::from_bool(!(a && e)),
        subcontraries: RelationStatus::from_bool(i || o),
        subalternation: RelationStatus::from_bool((!a || i) && (!e || o)),
    };
    Ok(SquareVerdict {
        subject: subject.to_string(),
        predicate: predicate.to_string(),
        truth,
        vacuous_subject,
        relations,
        paradox_flag: vacuous_subject && a && e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unicorns() -> FiniteModel {
        FiniteModel::new(["goat", "rhino"])
            .unwrap()
            .with_predicate("unicorn", Vec::<String>::new())
            .unwrap()
            .with_predicate("horned", ["goat", "rhino"])
            .unwrap()
    }

    #[test]
    fn vacuous_universal_claims() {
        let m = unicorns();
        let eval = |form| eval_categorical(&CategoricalProposition::new(form, "unicorn", "horned"), &m).unwrap();
        assert!(eval(Form::A));
        assert!(eval(Form::E));
        assert!(!eval(Form::I));
        assert!(!eval(Form::O));
    }

    #[test]
    fn empty_subject_square() {
        let v = square_report("unicorn", "horned", &unicorns()).unwrap();
        assert!(v.vacuous_subject && v.paradox_flag);
        assert_eq!(v.relations.contradictories, RelationStatus::Holds);
        assert_eq!(v.relations.contraries, RelationStatus::Fails);
        assert_eq!(v.relations.subcontraries, RelationStatus::Fails);
        assert_eq!(v.relations.subalternation, RelationStatus::Fails);
    }

    #[test]
    fn proper_subset_square() {
        let m = FiniteModel::new(["a", "b"])
            .unwrap()
            .with_predicate("s", ["a", "b"])
            .unwrap()
            .with_predicate("p", ["a"])
            .unwrap();
        let v = square_report("s", "p", &m).unwrap();
        assert!(!v.value(Form::A) && v.value(Form::O));
        assert!(v.relations.all_hold());
        assert!(!v.paradox_flag);
    }

    #[test]
    fn equal_extensions_square() {
        let m = FiniteModel::new(["a", "b", "c"])
            .unwrap()
            .with_predicate("s", ["a", "b"])
            .unwrap()
            .with_predicate("p", ["b", "a"])
            .unwrap();
        let v = square_report("s", "p", &m).unwrap();
        assert_eq!(
            Form::ALL.map(|f| v.value(f)),
            [true, false, true, false]
        );
    }

    #[test]
    fn unknown_predicate() {
        let err = square_report("unicorn", "winged", &unicorns()).unwrap_err();
        assert_eq!(err, SquareError::UnknownPredicate("winged".into()));
    }

    #[test]
    fn model_text_format() {
        let m = FiniteModel::parse("# beasts\ndomain: goat, rhino\nunicorn:\nhorned: goat,rhino\n").unwrap();
        assert_eq!(m, unicorns());
        assert_eq!(FiniteModel::parse(&m.to_text()).unwrap(), m);

        assert!(matches!(FiniteModel::parse("horned: goat"), Err(SquareError::Syntax { .. })));
        assert!(matches!(
            FiniteModel::parse("domain: a\np: b"),
            Err(SquareError::ElementOutsideDomain { .. })
        ));
        assert!(matches!(FiniteModel::parse("domain: a, a"), Err(SquareError::DuplicateElement(_))));
        assert!(matches!(FiniteModel::parse("domain: a\nnonsense"), Err(SquareError::Syntax { line: 2, .. })));
        assert!(matches!(FiniteModel::parse("domain: a\np: a\np:"), Err(SquareError::Syntax { line: 3, .. })));
        // predicates may precede the domain line
        assert!(FiniteModel::parse("p: a\ndomain: a").is_ok());
    }

    #[test]
    fn complements() {
        let m = FiniteModel::new(["x", "y"]).unwrap().with_predicate("p", ["x"]).unwrap();
        let m = m.with_complement("notp", "p").unwrap();
        assert_eq!(m.extension("notp").unwrap().iter().collect::<Vec<_>>(), ["y"]);
    }
}
