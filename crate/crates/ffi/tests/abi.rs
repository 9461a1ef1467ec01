use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use logizeta_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lz_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = lz_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

#[test]
fn formula_round_trip_and_eval() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(lz_formula_parse(cs("p | !p").as_ptr(), &mut f), LzStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(lz_formula_render(f, true, &mut text), LzStatus::Ok);
        assert_eq!(take(text), "p ∨ ¬p");

        let mut k3 = ptr::null_mut();
        assert_eq!(lz_logic_by_name(cs("k3").as_ptr(), &mut k3), LzStatus::Ok);
        let mut v = LzTruthValue::True;
        assert_eq!(lz_eval(f, k3, cs("p=X").as_ptr(), &mut v), LzStatus::Ok);
        assert_eq!(v, LzTruthValue::Third);
        let mut taut = true;
        assert_eq!(lz_is_tautology(f, k3, &mut taut), LzStatus::Ok);
        assert!(!taut);

        let mut json = ptr::null_mut();
        assert_eq!(lz_laws_json(k3, &mut json), LzStatus::Ok);
        let laws: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(laws["logic"], "KleeneK3");

        assert_eq!(lz_eval(f, k3, cs("q=T").as_ptr(), &mut v), LzStatus::SemanticError);
        assert!(last_error().contains('p'));
        lz_logic_free(k3);
        lz_formula_free(f);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(lz_formula_parse(cs("p &").as_ptr(), &mut f), LzStatus::ParseError);
        assert!(f.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(lz_formula_parse(ptr::null(), &mut f), LzStatus::NullPointer);
        let mut l = ptr::null_mut();
        assert_eq!(lz_logic_by_name(cs("nope").as_ptr(), &mut l), LzStatus::SemanticError);
        let bad = [0xffu8, 0];
        assert_eq!(lz_logic_by_name(bad.as_ptr().cast(), &mut l), LzStatus::InvalidUtf8);
        let mut s = ptr::null_mut();
        assert_eq!(lz_bernoulli(3, &mut s), LzStatus::InvalidArgument);
        assert_eq!(lz_bernoulli(4, &mut s), LzStatus::Ok);
        assert_eq!(take(s), "-1/30");
        assert!(lz_last_error_message().is_null());
        // freeing null is a no-op
        lz_formula_free(ptr::null_mut());
        lz_logic_free(ptr::null_mut());
        lz_string_free(ptr::null_mut());
    }
}

#[test]
fn zeta_calls() {
    let em = LzMethod { kind: LzMethodKind::EulerMaclaurin, terms: 0, prime_bound: 0, tol: 0.0, m: 5, n: 20 };
    let mut out = LzZetaResult { re: 0.0, im: 0.0, error_bound: 0.0, terms_used: 0, status: LzSeriesStatus::Pole };
    unsafe {
        assert_eq!(lz_zeta(-1.0, 0.0, &em, &mut out), LzStatus::Ok);
        assert!((out.re + 1.0 / 12.0).abs() < 1e-12);
        assert_eq!(out.status, LzSeriesStatus::Converged);
        assert_eq!(lz_zeta(1.0, 0.0, &em, &mut out), LzStatus::Pole);

        let dirichlet = LzMethod { kind: LzMethodKind::Dirichlet, terms: 1000, ..em };
        assert_eq!(lz_zeta(0.5, 0.0, &dirichlet, &mut out), LzStatus::Ok);
        assert_eq!(out.status, LzSeriesStatus::Diverged);
        assert!(out.error_bound.is_infinite());

        let product = LzMethod { kind: LzMethodKind::EulerProduct, prime_bound: 1000, ..em };
        assert_eq!(lz_zeta(0.5, 0.0, &product, &mut out), LzStatus::OutOfDomain);
        assert!(last_error().contains("Re(s)"));
        assert_eq!(lz_zeta(2.0, 0.0, ptr::null(), &mut out), LzStatus::NullPointer);
    }
}

#[test]
fn case_study_json() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(lz_case_rh_json(false, cs("classical").as_ptr(), &mut s), LzStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["code"], "paradox");
        assert_eq!(lz_case_rh_json(true, cs("k3").as_ptr(), &mut s), LzStatus::SemanticError);
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/logizeta.h")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header()).unwrap();
    for symbol in [
        "lz_last_error_message",
        "lz_string_free",
        "lz_formula_parse",
        "lz_formula_free",
        "lz_formula_render",
        "lz_logic_by_name",
        "lz_logic_free",
        "lz_eval",
        "lz_is_tautology",
        "lz_zeta",
        "lz_bernoulli",
        "lz_laws_json",
        "lz_case_rh_json",
        "typedef struct LzFormula LzFormula",
        "typedef struct LzLogic LzLogic",
        "LZ_STATUS_OUT_OF_DOMAIN = 5",
    ] {
        assert!(text.contains(symbol), "header lacks {symbol}");
    }
}

const C_PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include <string.h>
#include "logizeta.h"

int main(void) {
    LzFormula *f = NULL;
    LzLogic *lp = NULL;
    bool taut = false;
    if (lz_formula_parse("!(p & !p)", &f) != LZ_STATUS_OK) return 1;
    if (lz_logic_by_name("lp", &lp) != LZ_STATUS_OK) return 2;
    if (lz_is_tautology(f, lp, &taut) != LZ_STATUS_OK || !taut) return 3;
    LzMethod em = { LZ_METHOD_KIND_EULER_MACLAURIN, 0, 0, 0.0, 5, 20 };
    LzZetaResult r;
    if (lz_zeta(-1.0, 0.0, &em, &r) != LZ_STATUS_OK) return 4;
    if (fabs(r.re + 1.0 / 12.0) > 1e-12) return 5;
    lz_formula_free(f);
    if (lz_formula_parse("p &", &f) != LZ_STATUS_PARSE_ERROR) return 6;
    if (strlen(lz_last_error_message()) == 0) return 7;
    printf("ok\n");
    lz_logic_free(lp);
    return 0;
}
"#;

#[test]
fn c_program_links_against_static_library() {
    let Ok(compiler) = which_cc() else {
        eprintln!("no C compiler found; skipping link test");
        return;
    };
    // target/tmp -> target/<profile>
    let tmp = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("liblogizeta_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let src = tmp.join("abi_smoke.c");
    let exe = tmp.join("abi_smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new(compiler)
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "C program exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
