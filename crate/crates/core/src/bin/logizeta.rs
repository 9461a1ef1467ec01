//! `logizeta`: three-valued logic, categorical squares, and zeta evaluation.
//!
//! Exit codes: 0 success, 2 parse or file error, 3 semantic error,
//! 4 out of domain or pole.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use logizeta::formula::{parse, Formula};
use logizeta::report;
use logizeta::semantics::{
    classify_laws, entailment_countermodel, eval, tautology_countermodel, truth_table, LogicSystem, TruthValue,
    Valuation,
};
use logizeta::square::case_study::{case_study_pnp, rh_verdict, zeta_state_table, CaseLogic, Reading};
use logizeta::square::{square_report, FiniteModel};
use logizeta::zeta::{
    bernoulli, bose_integral_check, parse_complex, region_map, EMParams, GridStep, Method, MethodKind, ZetaError,
};

#[derive(Parser)]
#[command(name = "logizeta", version, about = "Three-valued logic, squares of opposition, and zeta evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate formulas, print truth tables, check tautologies and laws.
    Logic {
        #[command(subcommand)]
        command: LogicCommand,
    },
    /// Categorical A/E/I/O square over a model file or a builtin case study.
    Square(SquareArgs),
    /// Evaluate the Riemann zeta function.
    Zeta {
        #[command(subcommand)]
        command: ZetaCommand,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct LogicOpts {
    /// classical, frege, k3, lp, l3, or bochvar.
    #[arg(long, default_value = "classical")]
    logic: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum LogicCommand {
    Eval {
        formula: String,
        /// Atom values such as `p=T q=X`.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        assign: Vec<String>,
        #[command(flatten)]
        opts: LogicOpts,
    },
    Table {
        formula: String,
        #[command(flatten)]
        opts: LogicOpts,
    },
    Taut {
        formula: String,
        #[command(flatten)]
        opts: LogicOpts,
    },
    Entails {
        conclusion: String,
        #[arg(long)]
        premise: Vec<String>,
        #[command(flatten)]
        opts: LogicOpts,
    },
    Laws {
        #[command(flatten)]
        opts: LogicOpts,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builtin {
    Pnp,
    Rh,
    ZetaState,
}

#[derive(Args)]
struct SquareArgs {
    /// Model file (`domain: a,b` plus `predicate: a` lines).
    #[arg(long, conflicts_with = "builtin")]
    model: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    subject: Option<String>,
    predicate: Option<String>,
    /// For `--builtin rh`: whether zeta's continuation is taken as true.
    #[arg(long)]
    ac: Option<bool>,
    /// For `--builtin rh`: classical, intuitionistic, lp, or bochvar.
    #[arg(long)]
    logic: Option<String>,
    /// For `--builtin rh`: conditional (default) or conjunction.
    #[arg(long, default_value = "conditional")]
    reading: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct MethodOpts {
    /// em, dirichlet, eta, euler-product, or functional.
    #[arg(long, default_value = "em")]
    method: String,
    /// Euler-Maclaurin correction terms.
    #[arg(long)]
    m: Option<u32>,
    /// Euler-Maclaurin cutoff.
    #[arg(long)]
    n: Option<u64>,
    /// Dirichlet term count.
    #[arg(short = 'N', long = "terms")]
    terms: Option<u64>,
    /// Euler product prime bound.
    #[arg(long)]
    bound: Option<u64>,
    /// Eta tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

impl MethodOpts {
    fn method(&self, im: f64) -> Result<Method, CliError> {
        let kind: MethodKind = self.method.parse().map_err(CliError::from)?;
        Ok(match kind {
            MethodKind::Dirichlet => Method::Dirichlet { terms: self.terms.unwrap_or(1000) },
            MethodKind::EulerProduct => Method::EulerProduct { prime_bound: self.bound.unwrap_or(100_000) },
            MethodKind::Eta => Method::Eta { tol: self.tol.unwrap_or(1e-12) },
            MethodKind::EulerMaclaurin => {
                let n = self.n.unwrap_or_else(|| 20u64.max(im.abs().ceil() as u64));
                Method::EulerMaclaurin(EMParams::new(self.m.unwrap_or(10), n)?)
            }
            MethodKind::Functional => Method::Functional,
        })
    }
}

#[derive(Subcommand)]
enum ZetaCommand {
    Value {
        /// The point, as "re,im".
        #[arg(short = 's', allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        method: MethodOpts,
        #[command(flatten)]
        common: Common,
    },
    /// Status of a method on a grid; CSV `re,im,status`.
    Map {
        #[arg(long, allow_hyphen_values = true, default_value = "-3,3")]
        re: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-10,10")]
        im: String,
        /// Grid step, or "re_step,im_step".
        #[arg(long, default_value = "0.1")]
        step: String,
        #[command(flatten)]
        method: MethodOpts,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the integral of x^(s-1)/(e^x - 1) with gamma(s) zeta(s).
    VerifyDerivation {
        #[arg(short = 's', allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Exact Bernoulli number B_k.
    Bernoulli {
        k: usize,
        #[command(flatten)]
        common: Common,
    },
}

enum CliError {
    Parse(String),
    Semantic(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Domain(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Semantic(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::InvalidArgument(_) => CliError::Semantic(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

fn semantic(e: impl ToString) -> CliError {
    CliError::Semantic(e.to_string())
}

fn parse_formula(text: &str) -> Result<Formula, CliError> {
    parse(text).map_err(|e| CliError::Parse(format!("{text:?}: {e}")))
}

fn logic(name: &str) -> Result<LogicSystem, CliError> {
    LogicSystem::builtin(name).map_err(semantic)
}

fn emit(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("JSON values serialize"),
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn parse_assignment(pairs: &[String]) -> Result<Valuation, CliError> {
    let mut v = Valuation::new();
    for pair in pairs.iter().flat_map(|p| p.split_whitespace()) {
        let (atom, value) =
            pair.split_once('=').ok_or_else(|| CliError::Parse(format!("expected atom=value, got {pair:?}")))?;
        let atom = logizeta::formula::Atom::new(atom.trim()).map_err(|e| CliError::Parse(e.to_string()))?;
        let value: TruthValue = value.parse().map_err(|e: logizeta::semantics::UnknownTruthValue| {
            CliError::Parse(e.to_string())
        })?;
        v.set(atom, value);
    }
    Ok(v)
}

fn witness_text(w: &Option<Valuation>) -> String {
    match w {
        None => "true".into(),
        Some(v) => format!("false (witness {v})"),
    }
}

fn run_logic(cmd: LogicCommand) -> Result<String, CliError> {
    match cmd {
        LogicCommand::Eval { formula, assign, opts } => {
            let f = parse_formula(&formula)?;
            let l = logic(&opts.logic)?;
            let v = parse_assignment(&assign)?;
            let value = eval(&f, &v, &l).map_err(semantic)?;
            let json = json!({"formula": f.render(), "logic": l.name(), "assignment": v, "value": value});
            Ok(emit(opts.common.format, format!("{value}\n{}", report::legend(&l)), json))
        }
        LogicCommand::Table { formula, opts } => {
            let f = parse_formula(&formula)?;
            let l = logic(&opts.logic)?;
            let t = truth_table(&f, &l).map_err(semantic)?;
            let text = format!("{}\n{}", report::render_truth_table(&t), report::legend(&l));
            Ok(emit(opts.common.format, text, to_json(&t)))
        }
        LogicCommand::Taut { formula, opts } => {
            let f = parse_formula(&formula)?;
            let l = logic(&opts.logic)?;
            let w = tautology_countermodel(&f, &l).map_err(semantic)?;
            let json = json!({"formula": f.render(), "logic": l.name(), "tautology": w.is_none(), "witness": w});
            Ok(emit(opts.common.format, format!("{}\n{}", witness_text(&w), report::legend(&l)), json))
        }
        LogicCommand::Entails { conclusion, premise, opts } => {
            let c = parse_formula(&conclusion)?;
            let ps = premise.iter().map(|p| parse_formula(p)).collect::<Result<Vec<_>, _>>()?;
            let l = logic(&opts.logic)?;
            let w = entailment_countermodel(&ps, &c, &l).map_err(semantic)?;
            let json = json!({
                "premises": ps.iter().map(Formula::render).collect::<Vec<_>>(),
                "conclusion": c.render(),
                "logic": l.name(),
                "entails": w.is_none(),
                "witness": w,
            });
            Ok(emit(opts.common.format, format!("{}\n{}", witness_text(&w), report::legend(&l)), json))
        }
        LogicCommand::Laws { opts } => {
            let l = logic(&opts.logic)?;
            let r = classify_laws(&l);
            let text = format!("{}\n{}", report::render_laws(&r), report::legend(&l));
            Ok(emit(opts.common.format, text, to_json(&r)))
        }
    }
}

fn run_square(a: SquareArgs) -> Result<String, CliError> {
    let format = a.common.format;
    match a.builtin {
        Some(Builtin::Pnp) => {
            let r = case_study_pnp();
            Ok(emit(format, report::render_pnp(&r), to_json(&r)))
        }
        Some(Builtin::ZetaState) => {
            let t = zeta_state_table();
            Ok(emit(format, report::render_state_table(&t), to_json(&t)))
        }
        Some(Builtin::Rh) => {
            let ac = a.ac.ok_or_else(|| CliError::Parse("--builtin rh needs --ac true|false".into()))?;
            let name = a.logic.ok_or_else(|| CliError::Parse("--builtin rh needs --logic".into()))?;
            let case_logic: CaseLogic = name.parse().map_err(semantic)?;
            let reading: Reading = a.reading.parse().map_err(CliError::Parse)?;
            let v = rh_verdict(ac, case_logic, reading);
            let json = json!({"ac": ac, "logic": case_logic, "reading": reading, "verdict": v});
            Ok(emit(format, report::render_case(&v), json))
        }
        None => {
            let path = a.model.ok_or_else(|| CliError::Parse("give --model FILE or --builtin".into()))?;
            let (subject, predicate) = match (a.subject, a.predicate) {
                (Some(s), Some(p)) => (s, p),
                _ => return Err(CliError::Parse("--model needs SUBJECT and PREDICATE".into())),
            };
            let text = fs::read_to_string(&path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let m = FiniteModel::parse(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            let v = square_report(&subject, &predicate, &m).map_err(semantic)?;
            Ok(emit(format, report::render_square(&v), to_json(&v)))
        }
    }
}

fn parse_range(text: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Parse(format!("expected \"min,max\", got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_step(text: &str) -> Result<GridStep, CliError> {
    let bad = || CliError::Parse(format!("expected \"step\" or \"re_step,im_step\", got {text:?}"));
    match text.split_once(',') {
        Some((a, b)) => {
            Ok(GridStep { re: a.trim().parse().map_err(|_| bad())?, im: b.trim().parse().map_err(|_| bad())? })
        }
        None => Ok(GridStep::uniform(text.trim().parse().map_err(|_| bad())?)),
    }
}

fn parse_point(text: &str) -> Result<logizeta::zeta::ComplexValue, CliError> {
    parse_complex(text).map_err(|e| CliError::Parse(e.to_string()))
}

fn run_zeta(cmd: ZetaCommand) -> Result<String, CliError> {
    match cmd {
        ZetaCommand::Value { s, method, common } => {
            let s = parse_point(&s)?;
            let m = method.method(s.im)?;
            let r = m.evaluate(s)?;
            Ok(emit(common.format, report::render_series(s, m.name(), &r), report::series_json(s, m.name(), &r)))
        }
        ZetaCommand::Map { re, im, step, method, out, common } => {
            let (re, im, step) = (parse_range(&re)?, parse_range(&im)?, parse_step(&step)?);
            let m = method.method(im.0.abs().max(im.1.abs()))?;
            let grid = region_map(re, im, step, m)?;
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for s in &grid.statuses {
                *counts.entry(s.to_string()).or_default() += 1;
            }
            let csv = grid.to_csv();
            let summary = json!({
                "method": grid.method,
                "columns": grid.re_values.len(),
                "rows": grid.im_values.len(),
                "counts": counts,
                "out": out.as_ref().map(|p| p.display().to_string()),
            });
            match out {
                Some(path) => {
                    fs::write(&path, csv).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                    let counts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let text = format!(
                        "{} grid {}x{} written to {}\n{}",
                        grid.method,
                        grid.re_values.len(),
                        grid.im_values.len(),
                        path.display(),
                        counts.join(" ")
                    );
                    Ok(emit(common.format, text, summary))
                }
                None if common.format == Format::Json => Ok(emit(common.format, String::new(), to_json(&grid))),
                None => Ok(csv.trim_end().to_string()),
            }
        }
        ZetaCommand::VerifyDerivation { s, tol, common } => {
            let s = parse_point(&s)?;
            if s.im != 0.0 {
                return Err(CliError::Domain(format!("out of domain: the identity is checked for real s only (got {s})")));
            }
            let b = bose_integral_check(s.re, tol)?;
            Ok(emit(common.format, report::render_bose(&b), to_json(&b)))
        }
        ZetaCommand::Bernoulli { k, common } => {
            let b = bernoulli(k)?;
            let json = json!({
                "k": k,
                "value": b.to_string(),
                "numerator": b.numer().to_string(),
                "denominator": b.denom().to_string(),
            });
            Ok(emit(common.format, b.to_string(), json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Logic { command } => run_logic(command),
        Command::Square(a) => run_square(a),
        Command::Zeta { command } => run_zeta(command),
    };
    match result {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
