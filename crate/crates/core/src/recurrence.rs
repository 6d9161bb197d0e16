//! Two recurrences that build the polynomials from their predecessors:
//!
//! * `B_m(x) = (x - 1/2) B_{m-1}(x) - 1/m sum_{r=0}^{m-2} C(m, r) B_{m-r} B_r(x)`
//! * `S_m(x) = 1/(m+1) (m (x + 1/2) S_{m-1}(x) - sum_{r=1}^{m-2} C(m, r) B_{m-r} S_r(x))`
//!
//! The second uses Bernoulli numbers without the alternating sign. Its sum
//! only reaches `B_2..=B_{m-1}`, so the sign of `B_1` never enters.

use num_bigint::BigInt;
use num_traits::One;

use crate::bernoulli::{bernoulli_numbers, bernoulli_polynomial, binomial};
use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial, Rational};
use crate::powersum::powersum_monomial;

/// `B_0(x)..=B_max(x)` by the Bernoulli polynomial recurrence.
pub fn he_ricci_polynomials(max: usize) -> Vec<Polynomial> {
    let b = bernoulli_numbers(max);
    let x_minus_half = Polynomial::from_coeffs(vec![rat(-1, 2), Rational::one()]);
    let mut polys = vec![Polynomial::one()];
    for m in 1..=max {
        let mut sum = Polynomial::zero();
        for (r, br) in polys.iter().enumerate().take(m.saturating_sub(1)) {
            let idx = m - r;
            assert!(idx >= 2, "only B_2 and above enter the sum");
            let c = Rational::from_integer(binomial(m, r)) * &b[idx];
            sum = &sum + &br.scale(&c);
        }
        let head = &x_minus_half * &polys[m - 1];
        let inv_m = Rational::new(BigInt::one(), BigInt::from(m));
        polys.push(&head - &sum.scale(&inv_m));
    }
    polys
}

pub fn he_ricci_polynomial(m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    Ok(he_ricci_polynomials(m).pop().expect("nonempty"))
}

/// `S_1(x)..=S_max(x)` (index 0 holds `S_1`) by the partial-sums recurrence.
pub fn partial_sum_polynomials(max: usize) -> Vec<Polynomial> {
    let b = bernoulli_numbers(max.max(1));
    let x_plus_half = Polynomial::from_coeffs(vec![rat(1, 2), Rational::one()]);
    let mut s = vec![Polynomial::from_coeffs(vec![
        Rational::from_integer(BigInt::from(0)),
        rat(1, 2),
        rat(1, 2),
    ])];
    for m in 2..=max {
        let mut sum = Polynomial::zero();
        for r in 1..=m.saturating_sub(2) {
            let idx = m - r;
            assert!(idx >= 2, "only B_2 and above enter the sum");
            let c = Rational::from_integer(binomial(m, r)) * &b[idx];
            sum = &sum + &s[r - 1].scale(&c);
        }
        let head = (&x_plus_half * &s[m - 2]).scale(&Rational::from_integer(BigInt::from(m)));
        let inv = Rational::new(BigInt::one(), BigInt::from(m + 1));
        s.push((&head - &sum).scale(&inv));
    }
    s
}

pub fn partial_sum_polynomial(m: usize) -> Result<Polynomial> {
    if m < 2 {
        return Err(Error::InvalidArgument("m must be at least 2".into()));
    }
    Ok(partial_sum_polynomials(m).pop().expect("nonempty"))
}

/// Result of checking both recurrences against their references.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub max_index: usize,
    /// `(m, Bernoulli recurrence ok, power-sum recurrence ok)` for `m` in
    /// `1..=max_index`; at `m = 1` the power-sum entry checks the seed.
    pub per_index: Vec<(usize, bool, bool)>,
    pub counterexample: Option<usize>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares the recurrences with `bernoulli_polynomial` and
/// `powersum_monomial` for every index up to `max_m`.
pub fn verify_recurrence_consistency(max_m: usize) -> Result<RecurrenceReport> {
    if max_m < 2 {
        return Err(Error::InvalidArgument(format!(
            "max_m must be at least 2, got {max_m}"
        )));
    }
    let bp = he_ricci_polynomials(max_m);
    let sp = partial_sum_polynomials(max_m);
    let per_index: Vec<_> = (1..=max_m)
        .map(|m| {
            let ok_b = bp[m] == bernoulli_polynomial(m);
            let ok_s = Ok(&sp[m - 1]) == powersum_monomial(m).as_ref();
            (m, ok_b, ok_s)
        })
        .collect();
    let counterexample = per_index
        .iter()
        .find(|(_, a, b)| !(*a && *b))
        .map(|(m, _, _)| *m);
    Ok(RecurrenceReport {
        max_index: max_m,
        per_index,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::powersum::oracle_sum;

    #[test]
    fn bernoulli_recurrence_examples() {
        assert_eq!(
            he_ricci_polynomial(1).unwrap(),
            Polynomial::from_coeffs(vec![rat(-1, 2), int(1)])
        );
        assert_eq!(
            he_ricci_polynomial(2).unwrap(),
            Polynomial::from_coeffs(vec![rat(1, 6), int(-1), int(1)])
        );
        assert_eq!(he_ricci_polynomial(12).unwrap(), bernoulli_polynomial(12));
        assert!(he_ricci_polynomial(0).is_err());
    }

    #[test]
    fn power_sum_recurrence_examples() {
        assert_eq!(
            partial_sum_polynomial(2).unwrap(),
            Polynomial::from_descending(&[rat(1, 3), rat(1, 2), rat(1, 6), int(0)])
        );
        assert_eq!(
            partial_sum_polynomial(3).unwrap(),
            Polynomial::from_descending(&[rat(1, 4), rat(1, 2), rat(1, 4), int(0), int(0)])
        );
        let s6 = partial_sum_polynomial(6).unwrap();
        assert_eq!(s6, powersum_monomial(6).unwrap());
        assert_eq!(s6.eval(&int(3)), int(794));
        assert!(partial_sum_polynomial(1).is_err());
    }

    #[test]
    fn consistency_reports() {
        for max in [2, 3, 40] {
            let report = verify_recurrence_consistency(max).unwrap();
            assert!(report.passed(), "max {max}: {report:?}");
            assert_eq!(report.per_index.len(), max);
        }
        assert!(verify_recurrence_consistency(1).is_err());
    }

    #[test]
    fn power_sum_recurrence_matches_literal_sums() {
        let polys = partial_sum_polynomials(10);
        for m in 1..=10 {
            for n in 1..=50u64 {
                let want = Rational::from_integer(BigInt::from(oracle_sum(m, n)));
                assert_eq!(polys[m - 1].eval(&int(n as i64)), want, "m {m}, n {n}");
            }
        }
    }
}
