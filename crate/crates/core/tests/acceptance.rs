//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use logizeta::semantics::{builtin_logics, classify_laws, Law, LogicSystem, TruthValue};
use logizeta::square::case_study::{case_study_pnp, case_study_rh};
use logizeta::square::{square_report, FiniteModel, Form};
use logizeta::zeta::{
    bose_integral_check, dirichlet_partial, em_zeta, eta_zeta, euler_product_partial, functional_eq_zeta,
    region_map, ComplexValue, EMParams, GridStep, Method, SeriesStatus, ZetaError,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);
type StatusRule = Box<dyn Fn(ComplexValue) -> SeriesStatus>;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// Tables transcribed from the source figures: filled circle = T, dash or
// crossed box = X, empty circle = F. Rows and columns in T, X, F order.
fn glyphs(rows: &str) -> Vec<TruthValue> {
    rows.chars()
        .filter(|ch| !ch.is_whitespace())
        .map(|ch| match ch {
            '●' => TruthValue::T,
            '-' | '☒' => TruthValue::X,
            '○' => TruthValue::F,
            other => panic!("unexpected glyph {other}"),
        })
        .collect()
}

struct Golden {
    logic: &'static str,
    not: Option<&'static str>,
    and: Option<&'static str>,
    or: Option<&'static str>,
    implies: Option<&'static str>,
    iff: Option<&'static str>,
    assert: Option<&'static str>,
}

const GOLDENS: [Golden; 4] = [
    Golden {
        logic: "frege",
        not: Some("○ - ●"),
        and: Some("● - ○  - - -  ○ - ○"),
        or: Some("● - ●  - - -  ● - ○"),
        implies: Some("● - ○  - - -  ● - ●"),
        iff: Some("● - ○  - - -  ○ - ●"),
        assert: None,
    },
    Golden {
        logic: "k3",
        not: Some("○ ☒ ●"),
        and: Some("● ☒ ○  ☒ ☒ ○  ○ ○ ○"),
        or: Some("● ● ●  ● ☒ ☒  ● ☒ ○"),
        implies: Some("● ☒ ○  ● ☒ ☒  ● ● ●"),
        iff: Some("● ○ ○  ○ ● ○  ○ ○ ●"),
        assert: None,
    },
    Golden {
        logic: "bochvar",
        not: Some("○ ☒ ●"),
        and: Some("● ☒ ○  ☒ ☒ ☒  ○ ☒ ○"),
        or: Some("● ☒ ●  ☒ ☒ ☒  ● ☒ ○"),
        implies: Some("● ☒ ○  ☒ ☒ ☒  ● ☒ ●"),
        iff: None,
        assert: Some("● ○ ○"),
    },
    Golden {
        logic: "l3",
        // other operators as in the Kleene table
        not: Some("○ ☒ ●"),
        and: Some("● ☒ ○  ☒ ☒ ○  ○ ○ ○"),
        or: Some("● ● ●  ● ☒ ☒  ● ☒ ○"),
        implies: Some("● ☒ ○  ● ● ☒  ● ● ●"),
        iff: None,
        assert: None,
    },
];

fn criterion_1() -> Outcome {
    let mut entries = 0;
    let order = [TruthValue::T, TruthValue::X, TruthValue::F];
    for g in &GOLDENS {
        let logic = LogicSystem::builtin(g.logic).map_err(|e| e.to_string())?;
        let t = logic.tables();
        let unary = [("not", g.not, t.not), ("T", g.assert, t.assert)];
        for (name, golden, table) in unary {
            let Some(golden) = golden else { continue };
            let expect = glyphs(golden);
            for (i, _) in order.iter().enumerate() {
                check(table[i] == expect[i], format!("{} {name} row {i}", logic.name()))?;
                entries += 1;
            }
        }
        let binary = [("and", g.and, t.and), ("or", g.or, t.or), ("implies", g.implies, t.implies), ("iff", g.iff, t.iff)];
        for (name, golden, table) in binary {
            let Some(golden) = golden else { continue };
            let expect = glyphs(golden);
            for i in 0..3 {
                for j in 0..3 {
                    check(
                        table[i][j] == expect[3 * i + j],
                        format!("{} {name}[{:?}][{:?}]", logic.name(), order[i], order[j]),
                    )?;
                    entries += 1;
                }
            }
        }
    }
    // LP shares Kleene's tables
    let k3 = LogicSystem::builtin("k3").unwrap();
    let lp = LogicSystem::builtin("lp").unwrap();
    check(k3.tables() == lp.tables(), "LP tables differ from K3")?;
    check(builtin_logics().len() == 6, "expected six builtin logics")?;
    Ok(format!("{entries} table entries match"))
}

fn criterion_2() -> Outcome {
    let report = |name: &str| classify_laws(&LogicSystem::builtin(name).unwrap());
    let classical = report("classical");
    for law in Law::ALL {
        check(classical.holds(law), format!("Classical2 {} fails", law.label()))?;
    }
    let k3 = report("k3");
    check(!k3.holds(Law::ExcludedMiddle), "K3 LEM holds")?;
    check(!k3.holds(Law::NonContradiction), "K3 LNC holds")?;
    check(k3.holds(Law::Explosion), "K3 ECQ fails")?;
    let lp = report("lp");
    check(lp.holds(Law::NonContradiction), "LP LNC fails")?;
    let ecq = lp.get(Law::Explosion);
    check(!ecq.holds, "LP ECQ holds")?;
    let witness = ecq.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    check(witness == "p=X, q=F", format!("LP ECQ witness {witness}"))?;
    let l3 = LogicSystem::builtin("l3").unwrap();
    check(l3.tables().implies[1][1] == TruthValue::T, "L3 X->X is not T")?;
    Ok("law matrix reproduced".into())
}

fn random_model(rng: &mut StdRng) -> FiniteModel {
    let size = rng.gen_range(0..=8);
    let domain: Vec<String> = (0..size).map(|i| format!("e{i}")).collect();
    let pick = |rng: &mut StdRng| -> Vec<String> { domain.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect() };
    let s = pick(rng);
    let p = pick(rng);
    FiniteModel::new(domain.clone())
        .and_then(|m| m.with_predicate("S", s))
        .and_then(|m| m.with_predicate("P", p))
        .expect("generated model is well-formed")
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let (mut nonempty, mut empty) = (0, 0);
    for _ in 0..1000 {
        let m = random_model(&mut rng);
        let v = square_report("S", "P", &m).map_err(|e| e.to_string())?;
        let val = |f| v.value(f);
        check(val(Form::A) != val(Form::O) && val(Form::E) != val(Form::I), "contradictories broken")?;
        if v.vacuous_subject {
            empty += 1;
            check(val(Form::A) && val(Form::E) && v.paradox_flag, "empty subject without A, E and the flag")?;
        } else {
            nonempty += 1;
            check(v.relations.all_hold(), format!("traditional relations fail on {}", m.to_text()))?;
        }
    }
    Ok(format!("{nonempty} nonempty and {empty} empty subjects"))
}

fn criterion_4() -> Outcome {
    let cells = [
        (true, "classical", "trivially-true-by-ECQ"),
        (true, "intuitionistic", "trivially-true-by-ECQ"),
        (true, "lp", "third-value"),
        (true, "bochvar", "third-value"),
        (false, "classical", "paradox"),
        (false, "intuitionistic", "false"),
        (false, "lp", "third-value"),
        (false, "bochvar", "third-value"),
    ];
    for (ac, logic, code) in cells {
        let v = case_study_rh(ac, logic).map_err(|e| e.to_string())?;
        check(v.code == code, format!("ac={ac} {logic}: {} (expected {code})", v.code))?;
    }
    let r = case_study_pnp();
    #[rustfmt::skip]
    let expect = [
        ("A1", true), ("E1", false), ("I1", true), ("O1", false),
        ("A2", false), ("E2", false), ("I2", true), ("O2", true),
        ("A3", false), ("E3", true), ("I3", false), ("O3", true),
        ("A4", true), ("E4", true),
    ];
    for (id, value) in expect {
        check(r.value(id) == Some(value), format!("{id} = {:?}", r.value(id)))?;
    }
    check(r.paradoxes == ["A4/E4"], format!("paradoxes {:?}", r.paradoxes))?;
    check(r.conclusion == "P != NP under the paper's premises", r.conclusion.clone())?;
    Ok("6 table cells (8 with the split third-value column), 14 stated verdicts, A4/E4 paradox".into())
}

fn criterion_5() -> Outcome {
    let r = em_zeta(c(-1.0, 0.0), EMParams { m: 5, n: 20 }).map_err(|e| e.to_string())?;
    let err = (r.value - c(-1.0 / 12.0, 0.0)).norm();
    check(err < 1e-12, format!("|error| = {err:e}"))?;
    Ok(format!("|error| = {err:.1e}"))
}

fn criterion_6() -> Outcome {
    let exact = PI * PI / 6.0;
    // tail-bounded direct sum: 1/(N+1) < Σ_{n>N} 1/n^2 < 1/N
    let n = 1_000_000u64;
    let head: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
    let (lo, hi) = (head + 1.0 / (n as f64 + 1.0), head + 1.0 / n as f64);
    let em = em_zeta(c(2.0, 0.0), EMParams { m: 10, n: 20 }).map_err(|e| e.to_string())?;
    let eta = eta_zeta(c(2.0, 0.0), 1e-14).map_err(|e| e.to_string())?;
    for (name, v) in [("em", em.value.re), ("eta", eta.value.re)] {
        check((v - exact).abs() < 1e-10, format!("{name} off by {:e}", (v - exact).abs()))?;
        check(v > lo - 1e-10 && v < hi + 1e-10, format!("{name} outside the oracle interval"))?;
    }
    let gap = (em.value - eta.value).norm();
    check(gap <= em.error_bound + eta.error_bound, format!("em/eta gap {gap:e} exceeds bounds"))?;
    Ok(format!("em/eta gap {gap:.1e} <= {:.1e}", em.error_bound + eta.error_bound))
}

fn spurious_eta_zero(s: ComplexValue) -> bool {
    (1.0 - (std::f64::consts::LN_2 * (1.0 - s)).exp()).norm() < 1e-9 && s != c(1.0, 0.0)
}

fn criterion_7() -> Outcome {
    let step = GridStep { re: 0.015, im: 0.1 };
    let m = 3;
    let methods: [(Method, StatusRule); 4] = [
        (
            Method::Dirichlet { terms: 100 },
            Box::new(|s| {
                if s.re > 1.0 {
                    SeriesStatus::Converged
                } else if s.re == 1.0 && s.im == 0.0 {
                    SeriesStatus::Pole
                } else if s.re == 1.0 {
                    SeriesStatus::Oscillating
                } else {
                    SeriesStatus::Diverged
                }
            }),
        ),
        (
            Method::EulerProduct { prime_bound: 1000 },
            Box::new(|s| if s.re > 1.0 { SeriesStatus::Converged } else { SeriesStatus::OutOfDomain }),
        ),
        (
            Method::Eta { tol: 1e-10 },
            Box::new(|s| {
                if s == c(1.0, 0.0) {
                    SeriesStatus::Pole
                } else if s.re > 0.0 && !spurious_eta_zero(s) {
                    SeriesStatus::Converged
                } else {
                    SeriesStatus::OutOfDomain
                }
            }),
        ),
        (
            Method::EulerMaclaurin(EMParams { m, n: 10 }),
            Box::new(move |s| {
                if s == c(1.0, 0.0) {
                    SeriesStatus::Pole
                } else if s.re > -(2.0 * m as f64 + 1.0) {
                    SeriesStatus::Converged
                } else {
                    SeriesStatus::OutOfDomain
                }
            }),
        ),
    ];
    let mut points = 0;
    for (method, rule) in &methods {
        let g = region_map((-3.0, 3.0), (-10.0, 10.0), step, *method).map_err(|e| e.to_string())?;
        check(g.re_values.len() == 400 && g.im_values.len() == 200, "grid is not 400x200")?;
        for (s, status) in g.points() {
            check(status == rule(s), format!("{} at {s}: {status} vs rule {}", method.name(), rule(s)))?;
            points += 1;
        }
    }
    Ok(format!("{points} grid points across 4 methods"))
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    for s in [1.5, 2.0, 3.0, 4.0] {
        let b = bose_integral_check(s, 1e-10).map_err(|e| e.to_string())?;
        check(b.difference < 1e-6, format!("s={s}: difference {:e}", b.difference))?;
        worst = worst.max(b.difference);
    }
    Ok(format!("worst difference {worst:.1e}"))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0009);
    let (mut honest, mut unqualified) = (0, 0);
    while honest < 100 {
        let m: u32 = rng.gen_range(1..=10);
        let n: u64 = rng.gen_range(5..=40);
        let floor = -(2.0 * m as f64 + 1.0) + 0.25;
        let s = c(rng.gen_range(floor..4.0), rng.gen_range(-20.0..20.0));
        if (s - 1.0).norm() < 0.1 {
            continue;
        }
        let low = em_zeta(s, EMParams { m, n }).map_err(|e| e.to_string())?;
        let high = em_zeta(s, EMParams { m: m + 4, n: 4 * n }).map_err(|e| e.to_string())?;
        // far left of the axis the longer sum cancels catastrophically; it is
        // only an oracle where its own bound is the tighter one
        if high.error_bound > low.error_bound {
            unqualified += 1;
            continue;
        }
        let gap = (low.value - high.value).norm();
        check(gap <= low.error_bound, format!("s={s} m={m} n={n}: gap {gap:e} > bound {:e}", low.error_bound))?;
        honest += 1;
    }
    let mut symmetric = 0;
    while symmetric < 100 {
        let s = c(rng.gen_range(-6.0..6.0), rng.gen_range(-25.0..25.0));
        let methods: Vec<Result<_, ZetaError>> = vec![
            dirichlet_partial(s, 500),
            euler_product_partial(s, 2000),
            eta_zeta(s, 1e-12),
            em_zeta(s, EMParams { m: 8, n: 30 }),
            functional_eq_zeta(s),
        ];
        let mirrored: Vec<Result<_, ZetaError>> = vec![
            dirichlet_partial(s.conj(), 500),
            euler_product_partial(s.conj(), 2000),
            eta_zeta(s.conj(), 1e-12),
            em_zeta(s.conj(), EMParams { m: 8, n: 30 }),
            functional_eq_zeta(s.conj()),
        ];
        for (a, b) in methods.iter().zip(&mirrored) {
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    let diff = (b.value - a.value.conj()).norm();
                    check(diff <= 1e-12 * a.value.norm().max(1.0), format!("conjugate asymmetry {diff:e} at {s}"))?;
                }
                (Err(_), Err(_)) => {}
                _ => return Err(format!("domain differs between {s} and its conjugate")),
            }
        }
        symmetric += 1;
    }
    Ok(format!("100 error-bound points ({unqualified} draws without a qualified oracle), 100 conjugate points"))
}

fn criterion_10() -> Outcome {
    let product = euler_product_partial(c(3.0, 0.0), 10_000).map_err(|e| e.to_string())?;
    let series = dirichlet_partial(c(3.0, 0.0), 10_000_000).map_err(|e| e.to_string())?;
    let gap = (product.value - series.value).norm();
    check(gap < 1e-5, format!("gap {gap:e}"))?;
    Ok(format!("gap {gap:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 truth-table goldens", criterion_1, Duration::from_secs(1)),
        ("2 law matrix", criterion_2, Duration::from_secs(1)),
        ("3 square of opposition", criterion_3, Duration::from_secs(5)),
        ("4 case-study goldens", criterion_4, Duration::from_secs(1)),
        ("5 zeta(-1) by Euler-Maclaurin", criterion_5, Duration::from_millis(100)),
        ("6 zeta(2) by two methods", criterion_6, Duration::from_secs(1)),
        ("7 region map", criterion_7, Duration::from_secs(10)),
        ("8 integral identity", criterion_8, Duration::from_secs(5)),
        ("9 error bounds and conjugate symmetry", criterion_9, Duration::from_secs(10)),
        ("10 Euler product vs Dirichlet", criterion_10, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed < limit => (true, d),
            Ok(d) => (false, format!("{d}; too slow ({elapsed:.2?} >= {limit:?})")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!("{} criterion {name}: {detail} [{elapsed:.2?}]", if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
