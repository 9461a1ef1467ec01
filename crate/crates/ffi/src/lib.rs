//! C ABI over the logizeta library.
//!
//! Every fallible call returns an [`LzStatus`]; on failure a message is
//! available from [`lz_last_error_message`] on the same thread. Strings
//! handed out by the library are freed with [`lz_string_free`], handles with
//! their own `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use logizeta::formula::{parse, Atom, Formula};
use logizeta::semantics::{classify_laws, eval, is_tautology, LogicSystem, TruthValue, Valuation};
use logizeta::square::case_study::case_study_rh;
use logizeta::zeta::{bernoulli, ComplexValue, EMParams, Method, SeriesStatus, ZetaError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    SemanticError = 4,
    OutOfDomain = 5,
    Pole = 6,
    InvalidArgument = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzTruthValue {
    True = 0,
    Third = 1,
    False = 2,
}

impl From<TruthValue> for LzTruthValue {
    fn from(v: TruthValue) -> Self {
        match v {
            TruthValue::T => LzTruthValue::True,
            TruthValue::X => LzTruthValue::Third,
            TruthValue::F => LzTruthValue::False,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzSeriesStatus {
    Converged = 0,
    Diverged = 1,
    Oscillating = 2,
    Pole = 3,
    OutOfDomain = 4,
}

impl From<SeriesStatus> for LzSeriesStatus {
    fn from(s: SeriesStatus) -> Self {
        match s {
            SeriesStatus::Converged => LzSeriesStatus::Converged,
            SeriesStatus::Diverged => LzSeriesStatus::Diverged,
            SeriesStatus::Oscillating => LzSeriesStatus::Oscillating,
            SeriesStatus::Pole => LzSeriesStatus::Pole,
            SeriesStatus::OutOfDomain => LzSeriesStatus::OutOfDomain,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LzMethodKind {
    Dirichlet = 0,
    EulerProduct = 1,
    Eta = 2,
    EulerMaclaurin = 3,
    Functional = 4,
}

/// Method plus parameters. Fields a method does not use are ignored:
/// `terms` (dirichlet), `prime_bound` (euler product), `tol` (eta),
/// `m` and `n` (euler-maclaurin).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LzMethod {
    pub kind: LzMethodKind,
    pub terms: u64,
    pub prime_bound: u64,
    pub tol: f64,
    pub m: u32,
    pub n: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LzZetaResult {
    pub re: f64,
    pub im: f64,
    /// Infinite unless `status` is converged.
    pub error_bound: f64,
    pub terms_used: u64,
    pub status: LzSeriesStatus,
}

/// Parsed formula.
pub struct LzFormula(Formula);

/// Builtin logic.
pub struct LzLogic(LogicSystem);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(LzStatus, String);

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        let status = match e {
            ZetaError::OutOfDomain { .. } => LzStatus::OutOfDomain,
            ZetaError::Pole => LzStatus::Pole,
            ZetaError::InvalidArgument(_) => LzStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LzStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LzStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LzStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(LzStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(LzStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn reference<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(LzStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LzStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(LzStatus::InvalidArgument, "string contains NUL".into()))?;
    write(out, c.into_raw())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_formula_parse(text: *const c_char, out: *mut *mut LzFormula) -> LzStatus {
    guard(|| {
        let src = c_str(text, "formula text")?;
        let f = parse(src).map_err(|e| Failure(LzStatus::ParseError, e.to_string()))?;
        write(out, Box::into_raw(Box::new(LzFormula(f))))
    })
}

/// # Safety
/// `f` must be null or a handle from [`lz_formula_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lz_formula_free(f: *mut LzFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Canonical text of the formula; `unicode` selects ¬ ∧ ∨ → ↔.
///
/// # Safety
/// `f` must be a live formula handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_formula_render(f: *const LzFormula, unicode: bool, out: *mut *mut c_char) -> LzStatus {
    guard(|| {
        let f = &reference(f, "formula")?.0;
        write_string(out, if unicode { f.render_unicode() } else { f.render() })
    })
}

/// Looks up a builtin logic (classical, frege, k3, lp, l3, bochvar).
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_logic_by_name(name: *const c_char, out: *mut *mut LzLogic) -> LzStatus {
    guard(|| {
        let name = c_str(name, "logic name")?;
        let logic = LogicSystem::builtin(name).map_err(|e| Failure(LzStatus::SemanticError, e.to_string()))?;
        write(out, Box::into_raw(Box::new(LzLogic(logic))))
    })
}

/// # Safety
/// `l` must be null or a handle from [`lz_logic_by_name`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lz_logic_free(l: *mut LzLogic) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

fn parse_assignment(text: &str) -> Result<Valuation, Failure> {
    let mut v = Valuation::new();
    for pair in text.split([',', ' ']).map(str::trim).filter(|p| !p.is_empty()) {
        let bad = |msg: String| Failure(LzStatus::ParseError, msg);
        let (atom, value) = pair.split_once('=').ok_or_else(|| bad(format!("expected atom=value, got {pair:?}")))?;
        let atom = Atom::new(atom.trim()).map_err(|e| bad(e.to_string()))?;
        let value: TruthValue = value.parse().map_err(|e: logizeta::semantics::UnknownTruthValue| bad(e.to_string()))?;
        v.set(atom, value);
    }
    Ok(v)
}

/// Evaluates `f` under `assignment` ("p=T,q=X").
///
/// # Safety
/// Handles must be live; `assignment` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lz_eval(
    f: *const LzFormula,
    logic: *const LzLogic,
    assignment: *const c_char,
    out: *mut LzTruthValue,
) -> LzStatus {
    guard(|| {
        let f = &reference(f, "formula")?.0;
        let logic = &reference(logic, "logic")?.0;
        let v = parse_assignment(c_str(assignment, "assignment")?)?;
        let value = eval(f, &v, logic).map_err(|e| Failure(LzStatus::SemanticError, e.to_string()))?;
        write(out, value.into())
    })
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lz_is_tautology(f: *const LzFormula, logic: *const LzLogic, out: *mut bool) -> LzStatus {
    guard(|| {
        let f = &reference(f, "formula")?.0;
        let logic = &reference(logic, "logic")?.0;
        let holds = is_tautology(f, logic).map_err(|e| Failure(LzStatus::SemanticError, e.to_string()))?;
        write(out, holds)
    })
}

fn method(spec: &LzMethod) -> Result<Method, Failure> {
    Ok(match spec.kind {
        LzMethodKind::Dirichlet => Method::Dirichlet { terms: spec.terms },
        LzMethodKind::EulerProduct => Method::EulerProduct { prime_bound: spec.prime_bound },
        LzMethodKind::Eta => Method::Eta { tol: spec.tol },
        LzMethodKind::EulerMaclaurin => Method::EulerMaclaurin(EMParams::new(spec.m, spec.n)?),
        LzMethodKind::Functional => Method::Functional,
    })
}

/// ζ(re + i·im) by the chosen method. A divergent request still fills `out`
/// (with a non-converged status); domain violations and the pole return an
/// error code instead.
///
/// # Safety
/// `spec` must point to a valid [`LzMethod`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_zeta(re: f64, im: f64, spec: *const LzMethod, out: *mut LzZetaResult) -> LzStatus {
    guard(|| {
        let spec = reference(spec, "method")?;
        let r = method(spec)?.evaluate(ComplexValue::new(re, im))?;
        write(
            out,
            LzZetaResult {
                re: r.value.re,
                im: r.value.im,
                error_bound: r.error_bound,
                terms_used: r.terms_used,
                status: r.status.into(),
            },
        )
    })
}

/// Exact `B_k` as "numerator/denominator" (or an integer).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lz_bernoulli(k: u32, out: *mut *mut c_char) -> LzStatus {
    guard(|| write_string(out, bernoulli(k as usize)?.to_string()))
}

/// Law report for a builtin logic as JSON.
///
/// # Safety
/// `logic` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lz_laws_json(logic: *const LzLogic, out: *mut *mut c_char) -> LzStatus {
    guard(|| {
        let logic = &reference(logic, "logic")?.0;
        let json = serde_json::to_string(&classify_laws(logic)).expect("law report serializes");
        write_string(out, json)
    })
}

/// One cell of the zeta-hypothesis case study as JSON.
///
/// # Safety
/// `logic` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lz_case_rh_json(ac_true: bool, logic: *const c_char, out: *mut *mut c_char) -> LzStatus {
    guard(|| {
        let name = c_str(logic, "logic name")?;
        let verdict = case_study_rh(ac_true, name).map_err(|e| Failure(LzStatus::SemanticError, e.to_string()))?;
        write_string(out, serde_json::to_string(&verdict).expect("verdict serializes"))
    })
}
