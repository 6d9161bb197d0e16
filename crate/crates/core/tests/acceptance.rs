//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the pass/fail lines are always
//! printed. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use faulhaber::bernoulli::{bernoulli_number, BernoulliCache};
use faulhaber::cli;
use faulhaber::faulhaber::{
    expand_to_monomial, faulhaber_form, faulhaber_forms_inductive, verify_constant_term_bernoulli,
    verify_lemma,
};
use faulhaber::poly::{int, rat, Rational};
use faulhaber::powersum::{oracle_sum, powersum_monomial};
use faulhaber::recurrence::verify_recurrence_consistency;
use faulhaber::render::parse_rational;
use faulhaber::shifted::{shifted_closed_form, shifted_form, shifted_to_monomial};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn json_coefficients(line: &str) -> Result<Vec<Rational>, String> {
    let out = cli::run(std::iter::once("faulhaber").chain(line.split_whitespace()));
    if out.code != cli::EXIT_OK {
        return Err(format!("`{line}` exited {}: {}", out.code, out.stderr));
    }
    let doc: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    doc["coefficients"]
        .as_array()
        .ok_or("missing coefficients")?
        .iter()
        .map(|v| {
            let s = v.as_str().ok_or("coefficient is not a string")?;
            parse_rational(s).map_err(|e| e.to_string())
        })
        .collect()
}

fn r(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

fn ac1_paper_values() -> Outcome {
    let monomial = [
        r(&[(1, 2), (1, 2)]),
        r(&[(1, 3), (1, 2), (1, 6)]),
        r(&[(1, 4), (1, 2), (1, 4), (0, 1)]),
        r(&[(1, 5), (1, 2), (1, 3), (0, 1), (-1, 30)]),
        r(&[(1, 6), (1, 2), (5, 12), (0, 1), (-1, 12), (0, 1)]),
    ];
    for (power, want) in (1..).zip(&monomial) {
        let mut got =
            json_coefficients(&format!("powersum {power} --basis monomial --format json"))?;
        // ascending with the constant first; compare n^{m+1}..n^1
        ensure(got[0].is_zero(), || {
            format!("power {power}: nonzero constant")
        })?;
        got.remove(0);
        got.reverse();
        ensure(&got == want, || format!("monomial power {power}: {got:?}"))?;
    }
    let triangular = [
        r(&[(1, 1)]),
        r(&[(1, 1)]),
        r(&[(6, 5), (-1, 5)]),
        r(&[(4, 3), (-1, 3)]),
    ];
    for (power, want) in (2..).zip(&triangular) {
        for method in ["direct", "inductive"] {
            let got = json_coefficients(&format!(
                "powersum {power} --basis triangular --method {method} --format json"
            ))?;
            ensure(&got == want, || {
                format!("triangular power {power} ({method}): {got:?}")
            })?;
        }
    }
    Ok("5 monomial and 4 triangular coefficient lists exact".into())
}

fn ac2_shifted_values() -> Outcome {
    for method in ["direct", "closed"] {
        let e = json_coefficients(&format!(
            "powersum 1 --basis shifted --method {method} --format json"
        ))?;
        ensure(e == r(&[(1, 2), (-1, 8)]), || {
            format!("power 1 ({method}): {e:?}")
        })?;
        let d = json_coefficients(&format!(
            "powersum 2 --basis shifted --method {method} --format json"
        ))?;
        ensure(d == r(&[(1, 3), (-1, 12)]), || {
            format!("power 2 ({method}): {d:?}")
        })?;
    }
    Ok("e = [1/2, -1/8], d = [1/3, -1/12]".into())
}

fn ac3_oracle_equivalence() -> Outcome {
    let mut checks = 0;
    for m in 1..=30 {
        let p = powersum_monomial(m).map_err(|e| e.to_string())?;
        for n in 1..=200u64 {
            let want = Rational::from_integer(BigInt::from(oracle_sum(m, n)));
            ensure(p.eval(&int(n as i64)) == want, || {
                format!("m = {m}, n = {n}")
            })?;
            checks += 1;
        }
    }
    ensure(checks == 6000, || format!("ran {checks} checks"))?;
    Ok(format!("{checks} exact checks"))
}

fn ac4_odd_bernoulli() -> Outcome {
    let cache = BernoulliCache::new();
    for m in 1..=100 {
        let b = cache.get(2 * m + 1);
        ensure(b.is_zero(), || format!("B_{} = {b}", 2 * m + 1))?;
    }
    Ok("B_3..B_201 (odd) all zero".into())
}

fn ac5_round_trips() -> Outcome {
    for power in 2..=100 {
        let form = faulhaber_form(power).map_err(|e| e.to_string())?;
        let want = powersum_monomial(power).map_err(|e| e.to_string())?;
        ensure(expand_to_monomial(&form) == want, || {
            format!("triangular power {power}")
        })?;
    }
    for power in 1..=60 {
        let form = shifted_form(power).map_err(|e| e.to_string())?;
        let want = powersum_monomial(power).map_err(|e| e.to_string())?;
        ensure(shifted_to_monomial(&form) == want, || {
            format!("shifted power {power}")
        })?;
    }
    Ok("triangular 2..=100, shifted 1..=60".into())
}

fn ac6_algorithm_agreement() -> Outcome {
    let derivation = faulhaber_forms_inductive(40).map_err(|e| e.to_string())?;
    for power in 2..=40 {
        let direct = faulhaber_form(power).map_err(|e| e.to_string())?;
        let inductive = derivation.form(power).ok_or("missing inductive form")?;
        ensure(inductive == &direct, || format!("power {power}"))?;
    }
    let odd_steps: Vec<usize> = derivation.cancellations.iter().map(|c| c.power).collect();
    let expected: Vec<usize> = (5..=40).step_by(2).collect();
    ensure(odd_steps == expected, || format!("odd steps {odd_steps:?}"))?;
    for c in &derivation.cancellations {
        ensure(c.residual().is_zero(), || {
            format!("power {}: residual {}", c.power, c.residual())
        })?;
    }
    Ok(format!(
        "powers 2..=40 agree; {} odd-step cancellations leave zero residual",
        derivation.cancellations.len()
    ))
}

fn ac7_closed_forms() -> Outcome {
    for power in 1..=60 {
        let closed = shifted_closed_form(power).map_err(|e| e.to_string())?;
        let converted = shifted_form(power).map_err(|e| e.to_string())?;
        ensure(closed == converted, || format!("power {power}"))?;
    }
    Ok("powers 1..=60".into())
}

fn ac8_lemma() -> Outcome {
    let report = verify_lemma(100);
    ensure(report.passed() && report.len() == 4, || report.to_string())?;
    Ok("both identities, polynomial and n <= 100".into())
}

fn ac9_recurrences() -> Outcome {
    let report = verify_recurrence_consistency(40).map_err(|e| e.to_string())?;
    ensure(report.passed(), || {
        format!("counterexample at m = {:?}", report.counterexample)
    })?;
    Ok("both recurrences exact for m <= 40".into())
}

fn ac10_constant_term() -> Outcome {
    let report = verify_constant_term_bernoulli(30).map_err(|e| e.to_string())?;
    ensure(report.passed() && report.len() == 29, || report.to_string())?;
    Ok("c/6 = B_2m for 2 <= m <= 30".into())
}

fn ac11_performance() -> Outcome {
    let t = Instant::now();
    let b = BernoulliCache::new().get(200);
    let t_b = t.elapsed();
    ensure(b == bernoulli_number(200), || {
        "cache disagreement at B_200".into()
    })?;
    ensure(t_b < Duration::from_secs(10), || {
        format!("B_200 took {t_b:?}")
    })?;
    let t = Instant::now();
    let form = faulhaber_form(200).map_err(|e| e.to_string())?;
    let t_f = t.elapsed();
    ensure(form.coefficients().len() == 100, || {
        "wrong coefficient count".into()
    })?;
    ensure(t_f < Duration::from_secs(10), || {
        format!("faulhaber_form(200) took {t_f:?}")
    })?;
    Ok(format!(
        "B_200 in {t_b:.2?}, faulhaber_form(200) in {t_f:.2?}"
    ))
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    // The performance criterion goes first so it runs against a cold
    // process-wide Bernoulli cache.
    let criteria = [
        Criterion {
            id: "AC11",
            title: "performance envelope at power 200",
            budget: None,
            run: ac11_performance,
        },
        Criterion {
            id: "AC1",
            title: "worked-example coefficients, powers 1-5",
            budget: secs(1),
            run: ac1_paper_values,
        },
        Criterion {
            id: "AC2",
            title: "shifted forms, powers 1-2",
            budget: secs(1),
            run: ac2_shifted_values,
        },
        Criterion {
            id: "AC3",
            title: "polynomial vs brute force, m <= 30, n <= 200",
            budget: secs(30),
            run: ac3_oracle_equivalence,
        },
        Criterion {
            id: "AC4",
            title: "odd Bernoulli numbers vanish, m <= 100",
            budget: secs(10),
            run: ac4_odd_bernoulli,
        },
        Criterion {
            id: "AC5",
            title: "triangular and shifted round trips",
            budget: secs(60),
            run: ac5_round_trips,
        },
        Criterion {
            id: "AC6",
            title: "inductive derivation = direct decomposition, m <= 40",
            budget: secs(60),
            run: ac6_algorithm_agreement,
        },
        Criterion {
            id: "AC7",
            title: "closed-form shifted coefficients, powers <= 60",
            budget: secs(30),
            run: ac7_closed_forms,
        },
        Criterion {
            id: "AC8",
            title: "(n + 1/2) identities",
            budget: None,
            run: ac8_lemma,
        },
        Criterion {
            id: "AC9",
            title: "Bernoulli and power-sum recurrences, m <= 40",
            budget: secs(30),
            run: ac9_recurrences,
        },
        Criterion {
            id: "AC10",
            title: "last even coefficient / 6 = B_2m, m <= 30",
            budget: None,
            run: ac10_constant_term,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match (result, c.budget) {
            (Ok(_), Some(budget)) if elapsed >= budget => {
                Err(format!("exceeded time budget {budget:?}"))
            }
            (r, _) => r,
        };
        match result {
            Ok(note) => println!("[PASS] {:<4} {} ({elapsed:.2?}): {note}", c.id, c.title),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {:<4} {} ({elapsed:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
