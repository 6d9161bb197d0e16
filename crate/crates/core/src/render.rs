//! Text renderings of polynomials and forms: plain, LaTeX and JSON.

use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::faulhaber::{FaulhaberForm, Multiplier, Parity};
use crate::poly::{Polynomial, Rational};
use crate::shifted::ShiftedForm;

const SHIFT_NOTE_PLAIN: &str = "  where N = n + 1/2";
const SHIFT_NOTE_LATEX: &str = r", \quad N = n + \frac{1}{2}";

/// Reads a rational written as `p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim())
        .map_err(|_| Error::InvalidArgument(format!("not a rational number: {text:?}")))
}

/// `1/3*n^3 + 1/2*n^2 + 1/6*n`; zero terms are omitted.
pub fn plain_polynomial(p: &Polynomial, var: &str) -> String {
    let mut out = String::new();
    for (deg, c) in p.terms_descending() {
        push_sign(&mut out, c);
        let mag = c.abs();
        let power = match deg {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{deg}"),
        };
        if deg == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `\frac{1}{3} n^{3} + \frac{1}{2} n^{2} + \frac{1}{6} n`.
pub fn latex_polynomial(p: &Polynomial, var: &str) -> String {
    let mut out = String::new();
    for (deg, c) in p.terms_descending() {
        push_sign(&mut out, c);
        let mag = c.abs();
        let power = match deg {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{deg}}}"),
        };
        if deg == 0 {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{} {power}", latex_rational(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn push_sign(out: &mut String, c: &Rational) {
    match (out.is_empty(), c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

pub fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        return c.to_string();
    }
    let sign = if c.is_negative() { "-" } else { "" };
    format!(r"{sign}\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
}

fn multiplier_plain(m: Multiplier) -> &'static str {
    match m {
        Multiplier::SumOfSquares => "Sum(k^2)",
        Multiplier::SquareOfSum => "Sum(k)^2",
    }
}

fn multiplier_latex(m: Multiplier) -> &'static str {
    match m {
        Multiplier::SumOfSquares => r"\sum k^{2}",
        Multiplier::SquareOfSum => r"\left(\sum k\right)^{2}",
    }
}

/// `(6/5*S1 - 1/5) * Sum(k^2)`.
pub fn faulhaber_plain(form: &FaulhaberForm) -> String {
    let u = form.u_polynomial();
    let inner = plain_polynomial(&u, "S1");
    let inner = if u.terms_descending().count() > 1 {
        format!("({inner})")
    } else {
        inner
    };
    format!("{inner} * {}", multiplier_plain(form.multiplier()))
}

pub fn faulhaber_latex(form: &FaulhaberForm) -> String {
    let u = form.u_polynomial();
    let inner = latex_polynomial(&u, "S_1");
    let inner = if u.terms_descending().count() > 1 {
        format!(r"\left({inner}\right) ")
    } else {
        format!(r"{inner} \cdot ")
    };
    format!("{inner}{}", multiplier_latex(form.multiplier()))
}

/// For even powers the odd polynomial in `N` is shown with `N` factored out.
fn shifted_body(form: &ShiftedForm) -> (bool, Polynomial) {
    let p = form.n_polynomial();
    match form.parity() {
        Parity::Even => {
            let (q, _) = p.div_rem(&Polynomial::x()).expect("x is nonzero");
            (true, q)
        }
        Parity::Odd => (false, p),
    }
}

/// `N*(1/3*N^2 - 1/12)  where N = n + 1/2`.
pub fn shifted_plain(form: &ShiftedForm) -> String {
    match shifted_body(form) {
        (true, q) => format!("N*({}){SHIFT_NOTE_PLAIN}", plain_polynomial(&q, "N")),
        (false, p) => format!("{}{SHIFT_NOTE_PLAIN}", plain_polynomial(&p, "N")),
    }
}

pub fn shifted_latex(form: &ShiftedForm) -> String {
    match shifted_body(form) {
        (true, q) => format!(
            r"N \left({}\right){SHIFT_NOTE_LATEX}",
            latex_polynomial(&q, "N")
        ),
        (false, p) => format!("{}{SHIFT_NOTE_LATEX}", latex_polynomial(&p, "N")),
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn json_doc(
    power: usize,
    basis: &str,
    multiplier: Option<&str>,
    coefficients: &[Rational],
    ordering: &str,
) -> String {
    let doc: Value = json!({
        "power": power,
        "basis": basis,
        "multiplier": multiplier,
        "coefficients": strings(coefficients),
        "ordering": ordering,
    });
    doc.to_string()
}

/// Monomial coefficients are listed by ascending degree, zeros included,
/// from `n^0` up to `n^{power+1}`.
pub fn monomial_json(power: usize, p: &Polynomial) -> String {
    let coeffs: Vec<Rational> = (0..=power + 1).map(|i| p.coeff(i)).collect();
    json_doc(power, "monomial", None, &coeffs, "ascending-degree")
}

pub fn faulhaber_json(form: &FaulhaberForm) -> String {
    json_doc(
        form.power(),
        "triangular",
        Some(multiplier_plain(form.multiplier())),
        form.coefficients(),
        "paper-descending",
    )
}

/// Power 1 is `S1` itself: coefficients `[1, 0]` in `S1`, no multiplier.
pub fn triangular_power_one_json() -> String {
    json_doc(
        1,
        "triangular",
        None,
        &[Rational::one(), Rational::zero()],
        "paper-descending",
    )
}

pub fn shifted_json(form: &ShiftedForm) -> String {
    json_doc(
        form.power(),
        "shifted",
        None,
        form.coefficients(),
        "paper-descending",
    )
}
