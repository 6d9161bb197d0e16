//! Power sums in the triangular variable `u = n(n+1)/2`.
//!
//! Even powers are written `S_{2m} = P(u) * S_2` and odd powers
//! `S_{2m+1} = P(u) * S_1^2`, with `deg P = m - 1`. Two independent routes
//! produce `P`:
//!
//! * [`faulhaber_form`] divides the monomial polynomial by the multiplier and
//!   strips leading terms until the quotient is written in `u`;
//! * [`faulhaber_forms_inductive`] never touches the monomial basis for the
//!   target power. It runs the partial-sums induction entirely on polynomials
//!   in `u`, using the two `(n + 1/2)` identities as rewrite rules and
//!   assuming only that odd Bernoulli numbers past `B_1` vanish.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_number, bernoulli_numbers, binomial};
use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial, Rational};
use crate::powersum::{oracle_sum, powersum_monomial};
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(power: usize) -> Self {
        if power.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The fixed factor of a Faulhaber form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multiplier {
    /// `S_2 = (2n^3 + 3n^2 + n) / 6`, used for even powers.
    SumOfSquares,
    /// `S_1^2 = u^2`, used for odd powers.
    SquareOfSum,
}

impl Multiplier {
    /// The multiplier as a polynomial in `n`.
    pub fn polynomial(self) -> Polynomial {
        match self {
            Multiplier::SumOfSquares => {
                Polynomial::from_coeffs(vec![Rational::zero(), rat(1, 6), rat(1, 2), rat(1, 3)])
            }
            Multiplier::SquareOfSum => triangular_variable().pow(2),
        }
    }
}

/// `u(n) = (n^2 + n) / 2` as a polynomial in `n`.
pub fn triangular_variable() -> Polynomial {
    Polynomial::from_coeffs(vec![Rational::zero(), rat(1, 2), rat(1, 2)])
}

/// Rewrites `p(n)` as `q(u)` with `u = n(n+1)/2`.
///
/// Strips the leading term each round: a degree `2d` term with coefficient
/// `L` becomes `L * 2^d * u^d`. Any odd-degree remainder means `p` is not
/// invariant under `n -> -1 - n`.
pub fn triangular_decompose(p: &Polynomial) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if deg % 2 == 1 {
        return Err(Error::NotTriangular(format!("odd degree {deg}")));
    }
    let top = deg / 2;
    let u = triangular_variable();
    let mut u_pows = Vec::with_capacity(top + 1);
    u_pows.push(Polynomial::one());
    for d in 1..=top {
        let next = &u_pows[d - 1] * &u;
        u_pows.push(next);
    }

    let mut rem = p.clone();
    let mut out = vec![Rational::zero(); top + 1];
    while let Some(deg) = rem.degree() {
        if deg % 2 == 1 {
            return Err(Error::NotTriangular(format!(
                "remainder of odd degree {deg} after stripping even terms"
            )));
        }
        let d = deg / 2;
        let lead = rem.leading_coefficient().expect("nonzero remainder");
        let c = lead * Rational::from_integer(BigInt::one() << d);
        rem = &rem - &u_pows[d].scale(&c);
        out[d] = c;
    }
    Ok(Polynomial::from_coeffs(out))
}

/// `S_power` as a polynomial in `u` times its [`Multiplier`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaulhaberForm {
    power: usize,
    // c_0.. / a_0..: index 0 multiplies the highest power of u.
    coefficients: Vec<Rational>,
}

impl FaulhaberForm {
    /// `coefficients` are highest power of `u` first; there must be exactly
    /// `m` of them for `power` in `{2m, 2m+1}`.
    pub fn new(power: usize, coefficients: Vec<Rational>) -> Result<Self> {
        if power < 2 {
            return Err(Error::InvalidArgument(format!(
                "Faulhaber forms start at power 2, got {power}"
            )));
        }
        let m = power / 2;
        if coefficients.len() != m {
            return Err(Error::InvalidArgument(format!(
                "power {power} needs {m} coefficients, got {}",
                coefficients.len()
            )));
        }
        Ok(Self {
            power,
            coefficients,
        })
    }

    fn from_u_polynomial(power: usize, p: &Polynomial) -> Result<Self> {
        let m = power / 2;
        if p.degree() != Some(m - 1) {
            return Err(Error::Consistency(format!(
                "power {power}: polynomial in u has degree {:?}, expected {}",
                p.degree(),
                m - 1
            )));
        }
        let coefficients = (0..m).rev().map(|i| p.coeff(i)).collect();
        Self::new(power, coefficients)
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.power)
    }

    pub fn multiplier(&self) -> Multiplier {
        match self.parity() {
            Parity::Even => Multiplier::SumOfSquares,
            Parity::Odd => Multiplier::SquareOfSum,
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `u^0` (`c_{m-1}` or `a_{m-1}`).
    pub fn last_coefficient(&self) -> &Rational {
        self.coefficients
            .last()
            .expect("forms have m >= 1 coefficients")
    }

    /// The coefficient list as a polynomial in `u` (low-to-high).
    pub fn u_polynomial(&self) -> Polynomial {
        Polynomial::from_descending(&self.coefficients)
    }
}

/// Faulhaber form by exact division and triangular decomposition.
pub fn faulhaber_form(power: usize) -> Result<FaulhaberForm> {
    if power < 2 {
        return Err(Error::InvalidArgument(format!(
            "Faulhaber forms start at power 2, got {power}"
        )));
    }
    let sum = powersum_monomial(power)?;
    let multiplier = match Parity::of(power) {
        Parity::Even => Multiplier::SumOfSquares,
        Parity::Odd => Multiplier::SquareOfSum,
    };
    let (quot, rem) = sum
        .div_rem(&multiplier.polynomial())
        .expect("multiplier is nonzero");
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "S_{power} is not divisible by {multiplier:?}; remainder {rem:?}"
        )));
    }
    let q = triangular_decompose(&quot)
        .map_err(|e| Error::Consistency(format!("quotient of S_{power} is not symmetric: {e}")))?;
    FaulhaberForm::from_u_polynomial(power, &q)
}

/// The odd step's cancellation: the constant of `(n + 1/2) S_{p-1}` after
/// the second identity, against `B_{p-1}` coming from the double sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cancellation {
    /// The odd power being built.
    pub power: usize,
    /// `c/6`, where `c` is the last coefficient of the even form `p - 1`.
    pub constant_over_six: Rational,
    /// `B_{p-1}` from the recurrence.
    pub bernoulli: Rational,
}

impl Cancellation {
    pub fn residual(&self) -> Rational {
        &self.constant_over_six - &self.bernoulli
    }
}

/// Output of the inductive derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductiveDerivation {
    /// Forms for powers `2..=max_power`, in order.
    pub forms: Vec<FaulhaberForm>,
    /// One entry per odd power `>= 5`.
    pub cancellations: Vec<Cancellation>,
}

impl InductiveDerivation {
    pub fn form(&self, power: usize) -> Option<&FaulhaberForm> {
        power.checked_sub(2).and_then(|i| self.forms.get(i))
    }
}

/// Builds every Faulhaber form up to `max_power` by partial sums.
///
/// For power `p`, the double sum `sum_{k<=n} S_{p-1}(k)` is expanded with
/// the signed Bernoulli formula, giving
///
/// `(p+1)/p * S_p = (n + 1/2) S_{p-1} - sum_{j even, 2<=j<=p-1} b_j S_{p-j}`
///
/// with `b_j = C(p, j) B_j / p`. Odd `j >= 3` would contribute `B_j`, which
/// must vanish. For even `p` every `S_{p-j}` is an even form and
/// `(n + 1/2) S_1^2 = 3/2 u S_2` turns the first term into `G(u) S_2`. For
/// odd `p` the `j = p - 1` term is `B_{p-1} S_1`, and
/// `(n + 1/2) S_2 = (4/3 u + 1/6) S_1` turns the first term into
/// `Q(u) S_1`. The constant `Q(0)` must equal `B_{p-1}` so that everything
/// left carries a factor `S_1^2`.
pub fn faulhaber_forms_inductive(max_power: usize) -> Result<InductiveDerivation> {
    if max_power < 2 {
        return Err(Error::InvalidArgument(format!(
            "Faulhaber forms start at power 2, got {max_power}"
        )));
    }
    let b = bernoulli_numbers(max_power);
    // u_forms[p] is the polynomial in u for S_p; slots 0 and 1 unused.
    let mut u_forms: Vec<Polynomial> = vec![Polynomial::zero(), Polynomial::zero()];
    u_forms.push(Polynomial::one());
    if max_power >= 3 {
        u_forms.push(Polynomial::one());
    }
    let mut cancellations = Vec::new();

    let three_halves_u = Polynomial::monomial(rat(3, 2), 1);
    let four_thirds_u_plus_sixth = Polynomial::from_coeffs(vec![rat(1, 6), rat(4, 3)]);

    for p in 4..=max_power {
        let p_rat = Rational::from_integer(BigInt::from(p));
        // F: the b_j-weighted lower forms sharing the target multiplier.
        let mut f = Polynomial::zero();
        for j in 2..p {
            if j % 2 == 1 {
                if !b[j].is_zero() {
                    return Err(Error::Consistency(format!(
                        "B_{j} = {} is nonzero; the induction needs it to vanish",
                        b[j]
                    )));
                }
                continue;
            }
            if p - j == 1 {
                // B_{p-1} S_1: handled by the cancellation below.
                continue;
            }
            let bj = Rational::from_integer(binomial(p, j)) * &b[j] / &p_rat;
            f = &f + &u_forms[p - j].scale(&bj);
        }

        let g = if p % 2 == 0 {
            &three_halves_u * &u_forms[p - 1]
        } else {
            let q = &four_thirds_u_plus_sixth * &u_forms[p - 1];
            let cancel = Cancellation {
                power: p,
                constant_over_six: q.coeff(0),
                bernoulli: b[p - 1].clone(),
            };
            if !cancel.residual().is_zero() {
                return Err(Error::Consistency(format!(
                    "power {p}: residual S_1 term {} survives the cancellation",
                    cancel.residual()
                )));
            }
            cancellations.push(cancel);
            // Q(u) - Q(0) = u * G'(u); the extra u joins S_1 to make S_1^2.
            Polynomial::from_coeffs(q.coeffs().iter().skip(1).cloned().collect())
        };

        let scale = Rational::new(BigInt::from(p), BigInt::from(p + 1));
        u_forms.push((&g - &f).scale(&scale));
    }

    let forms = (2..=max_power)
        .map(|p| FaulhaberForm::from_u_polynomial(p, &u_forms[p]))
        .collect::<Result<Vec<_>>>()?;
    Ok(InductiveDerivation {
        forms,
        cancellations,
    })
}

/// The inductive form for a single power.
pub fn faulhaber_form_inductive(power: usize) -> Result<FaulhaberForm> {
    let derivation = faulhaber_forms_inductive(power)?;
    Ok(derivation.forms.last().expect("at least power 2").clone())
}

/// Substitutes `u = n(n+1)/2` and multiplies by the multiplier.
pub fn expand_to_monomial(form: &FaulhaberForm) -> Polynomial {
    let in_n = form.u_polynomial().compose(&triangular_variable());
    &in_n * &form.multiplier().polynomial()
}

/// `(S_power)^2` written as a polynomial in `u`.
pub fn square_in_triangular(power: usize) -> Result<Polynomial> {
    if power < 2 || power % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "squares are decomposed for even powers >= 2, got {power}"
        )));
    }
    let s = powersum_monomial(power)?;
    triangular_decompose(&(&s * &s))
}

/// Checks `(n + 1/2) S_1^2 = 3/2 u S_2` and `(n + 1/2) S_2 = (4/3 u + 1/6) S_1`
/// symbolically in `n` and numerically against literal sums for
/// `1 <= n <= max_n`.
pub fn verify_lemma(max_n: u64) -> VerificationReport {
    let mut report = VerificationReport::new("lemma");
    let n_plus_half = Polynomial::from_coeffs(vec![rat(1, 2), Rational::one()]);
    let u = triangular_variable();
    let s1 = powersum_monomial(1).expect("m >= 1");
    let s2 = powersum_monomial(2).expect("m >= 1");

    let lhs1 = &(&n_plus_half * &s1) * &s1;
    let rhs1 = &u.scale(&rat(3, 2)) * &s2;
    report.record(
        "identity 1 (polynomial)",
        lhs1 == rhs1,
        format!("{lhs1:?} vs {rhs1:?}"),
    );
    let lhs2 = &n_plus_half * &s2;
    let rhs2 = &(&u.scale(&rat(4, 3)) + &Polynomial::constant(rat(1, 6))) * &s1;
    report.record(
        "identity 2 (polynomial)",
        lhs2 == rhs2,
        format!("{lhs2:?} vs {rhs2:?}"),
    );

    let to_rat = |v: num_bigint::BigUint| Rational::from_integer(BigInt::from(v));
    let mut fail1 = None;
    let mut fail2 = None;
    for n in 1..=max_n {
        let nh = Rational::new(BigInt::from(2 * n + 1), BigInt::from(2));
        let un = to_rat(num_bigint::BigUint::from(n) * (n + 1) / 2u32);
        let s1 = to_rat(oracle_sum(1, n));
        let s2 = to_rat(oracle_sum(2, n));
        if fail1.is_none() && &nh * &s1 * &s1 != rat(3, 2) * &un * &s2 {
            fail1 = Some(n);
        }
        if fail2.is_none() && &nh * &s2 != (rat(4, 3) * &un + rat(1, 6)) * &s1 {
            fail2 = Some(n);
        }
    }
    for (label, fail) in [
        ("identity 1 (numeric)", fail1),
        ("identity 2 (numeric)", fail2),
    ] {
        let detail = match fail {
            Some(n) => format!("fails at n = {n}"),
            None => format!("holds for 1 <= n <= {max_n}"),
        };
        report.record(label, fail.is_none(), detail);
    }
    report
}

/// Checks `(last coefficient of the form for 2m) / 6 = B_{2m}` for
/// `2 <= m <= max_m`.
pub fn verify_constant_term_bernoulli(max_m: usize) -> Result<VerificationReport> {
    if max_m < 2 {
        return Err(Error::InvalidArgument(format!(
            "max_m must be at least 2, got {max_m}"
        )));
    }
    let mut report = VerificationReport::new("constant-term");
    for m in 2..=max_m {
        let form = faulhaber_form(2 * m)?;
        let lhs = form.last_coefficient() / Rational::from_integer(BigInt::from(6));
        let bern = bernoulli_number(2 * m);
        report.record(
            format!("c/6 = B_{} (power {})", 2 * m, 2 * m),
            lhs == bern,
            format!("c/6 = {lhs}, B = {bern}"),
        );
    }
    Ok(report)
}
