//! Power sums in the shifted variable `N = n + 1/2`.
//!
//! Since `N^2 = 2u + 1/4`, a Faulhaber form becomes a polynomial in `N`
//! with a single parity: `S_{2m}` is odd in `N`, `S_{2m+1}` is even.
//!
//! Coefficient lists follow the descending layout:
//!
//! * power `2m`: `d_0..=d_m` multiply `N^{2m+1}, N^{2m-1}, ..., N`
//!   (so `d_i` sits on `N^{2(m-i)+1}`, one longer than the `c` list);
//! * power `2m+1`: `e_0..=e_m` multiply `N^{2m+2}, ..., N^2` and `e_{m+1}`
//!   is the constant.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_at_half, binomial};
use crate::error::{Error, Result};
use crate::faulhaber::{faulhaber_form, Parity};
use crate::poly::{rat, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedForm {
    power: usize,
    coefficients: Vec<Rational>,
}

impl ShiftedForm {
    /// `coefficients` in the layout described in the module docs; the count
    /// is `m + 1` for power `2m` and `m + 2` for power `2m + 1`.
    pub fn new(power: usize, coefficients: Vec<Rational>) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let expected = Self::slot_count(power);
        if coefficients.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "power {power} needs {expected} shifted coefficients, got {}",
                coefficients.len()
            )));
        }
        Ok(Self {
            power,
            coefficients,
        })
    }

    fn slot_count(power: usize) -> usize {
        match Parity::of(power) {
            Parity::Even => power / 2 + 1,
            Parity::Odd => power / 2 + 2,
        }
    }

    /// Exponent of `N` carried by slot `i`.
    fn slot_degree(power: usize, i: usize) -> usize {
        let m = power / 2;
        match Parity::of(power) {
            Parity::Even => 2 * (m - i) + 1,
            Parity::Odd if i == m + 1 => 0,
            Parity::Odd => 2 * (m - i) + 2,
        }
    }

    /// Reads the coefficients off a polynomial in `N`, failing if any
    /// coefficient of the wrong parity is nonzero.
    pub fn from_polynomial(power: usize, p: &Polynomial) -> Result<Self> {
        if power == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let wanted = power.is_multiple_of(2);
        for (deg, c) in p.terms_descending() {
            if (deg % 2 == 1) != wanted {
                return Err(Error::Consistency(format!(
                    "power {power}: N^{deg} has coefficient {c} but the polynomial must be {}",
                    if wanted { "odd" } else { "even" }
                )));
            }
        }
        if p.degree().is_some_and(|d| d > power + 1) {
            return Err(Error::Consistency(format!(
                "power {power}: degree {:?} exceeds {}",
                p.degree(),
                power + 1
            )));
        }
        let coefficients = (0..Self::slot_count(power))
            .map(|i| p.coeff(Self::slot_degree(power, i)))
            .collect();
        Self::new(power, coefficients)
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.power)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// The form as a polynomial in `N`.
    pub fn n_polynomial(&self) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); self.power + 2];
        for (i, c) in self.coefficients.iter().enumerate() {
            coeffs[Self::slot_degree(self.power, i)] = c.clone();
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// `u = N^2/2 - 1/8` as a polynomial in `N`.
fn triangular_in_shifted() -> Polynomial {
    Polynomial::from_coeffs(vec![rat(-1, 8), Rational::zero(), rat(1, 2)])
}

/// `S_2 = N (N^2/3 - 1/12)` as a polynomial in `N`.
fn sum_of_squares_in_shifted() -> Polynomial {
    Polynomial::from_coeffs(vec![
        Rational::zero(),
        rat(-1, 12),
        Rational::zero(),
        rat(1, 3),
    ])
}

/// Shifted form obtained by substituting `u = N^2/2 - 1/8` into the
/// Faulhaber form and rewriting its multiplier in `N`.
pub fn shifted_form(power: usize) -> Result<ShiftedForm> {
    let u = triangular_in_shifted();
    let poly = match power {
        0 => return Err(Error::InvalidArgument("power must be at least 1".into())),
        1 => u,
        _ => {
            let form = faulhaber_form(power)?;
            let multiplier = match form.parity() {
                Parity::Even => sum_of_squares_in_shifted(),
                Parity::Odd => u.pow(2),
            };
            &form.u_polynomial().compose(&u) * &multiplier
        }
    };
    ShiftedForm::from_polynomial(power, &poly)
}

/// Shifted coefficients from the Bernoulli closed forms:
///
/// * `d_i = C(2m, 2i) B_{2i}(1/2) / (2(m-i) + 1)`;
/// * `e_i = C(2m+1, 2i) B_{2i}(1/2) / (2(m-i) + 2)` for `i <= m`;
/// * `e_{m+1} = -sum_{i<=m} e_i / 4^{m-i+1}`.
pub fn shifted_closed_form(power: usize) -> Result<ShiftedForm> {
    if power == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    let m = power / 2;
    let frac = |num: BigInt, den: usize| Rational::new(num, BigInt::from(den));
    let coefficients = match Parity::of(power) {
        Parity::Even => (0..=m)
            .map(|i| frac(binomial(2 * m, 2 * i), 2 * (m - i) + 1) * bernoulli_at_half(2 * i))
            .collect(),
        Parity::Odd => {
            let mut e: Vec<Rational> = (0..=m)
                .map(|i| {
                    frac(binomial(2 * m + 1, 2 * i), 2 * (m - i) + 2) * bernoulli_at_half(2 * i)
                })
                .collect();
            let constant: Rational = e
                .iter()
                .enumerate()
                .map(|(i, ei)| ei / Rational::from_integer(BigInt::one() << (2 * (m - i + 1))))
                .sum();
            e.push(-constant);
            e
        }
    };
    ShiftedForm::new(power, coefficients)
}

/// Substitutes `N = x + 1/2`, returning the monomial power-sum polynomial.
pub fn shifted_to_monomial(form: &ShiftedForm) -> Polynomial {
    let shift = Polynomial::from_coeffs(vec![rat(1, 2), Rational::one()]);
    form.n_polynomial().compose(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::powersum::powersum_monomial;

    fn coeffs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| rat(n, d)).collect()
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(
            shifted_form(1).unwrap().coefficients(),
            &coeffs(&[(1, 2), (-1, 8)])[..]
        );
        assert_eq!(
            shifted_form(2).unwrap().coefficients(),
            &coeffs(&[(1, 3), (-1, 12)])[..]
        );
        assert_eq!(
            shifted_form(3).unwrap().coefficients(),
            &coeffs(&[(1, 4), (-1, 8), (1, 64)])[..]
        );
        assert!(shifted_form(0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            shifted_closed_form(1).unwrap().coefficients(),
            &coeffs(&[(1, 2), (-1, 8)])[..]
        );
        assert_eq!(
            shifted_closed_form(2).unwrap().coefficients(),
            &coeffs(&[(1, 3), (-1, 12)])[..]
        );
        assert_eq!(
            shifted_closed_form(3).unwrap().coefficients(),
            &coeffs(&[(1, 4), (-1, 8), (1, 64)])[..]
        );
    }

    #[test]
    fn closed_form_matches_conversion() {
        for power in 1..=60 {
            assert_eq!(
                shifted_closed_form(power).unwrap(),
                shifted_form(power).unwrap(),
                "power {power}"
            );
        }
    }

    #[test]
    fn to_monomial_examples() {
        assert_eq!(
            shifted_to_monomial(&shifted_form(1).unwrap()),
            powersum_monomial(1).unwrap()
        );
        assert_eq!(
            shifted_to_monomial(&shifted_form(2).unwrap()),
            Polynomial::from_descending(&coeffs(&[(1, 3), (1, 2), (1, 6), (0, 1)]))
        );
        assert_eq!(
            shifted_to_monomial(&shifted_form(9).unwrap()),
            powersum_monomial(9).unwrap()
        );
    }

    #[test]
    fn parity_and_vanishing_at_half() {
        for power in 1..=40 {
            let p = shifted_form(power).unwrap().n_polynomial();
            let want_odd = power % 2 == 0;
            for (deg, _) in p.terms_descending() {
                assert_eq!(deg % 2 == 1, want_odd, "power {power}, N^{deg}");
            }
            // N = 1/2 is n = 0, where every power sum is empty.
            assert_eq!(p.eval(&rat(1, 2)), int(0));
        }
    }

    #[test]
    fn wrong_parity_rejected() {
        let even_in_n = Polynomial::monomial(int(1), 2);
        assert!(matches!(
            ShiftedForm::from_polynomial(2, &even_in_n),
            Err(Error::Consistency(_))
        ));
        assert!(ShiftedForm::new(2, coeffs(&[(1, 3)])).is_err());
        assert!(ShiftedForm::new(3, coeffs(&[(1, 3), (0, 1), (1, 1)])).is_ok());
    }
}
