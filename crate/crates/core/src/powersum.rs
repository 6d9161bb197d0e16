//! Power sums `S_m(n) = 1^m + 2^m + ... + n^m` in the monomial basis.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_numbers, bernoulli_polynomial, binomial};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// `S_m(n) = 1/(m+1) sum_{j=0}^{m} (-1)^j C(m+1, j) B_j n^{m+1-j}`.
///
/// The cache stores `B_1 = -1/2`; the `(-1)^j` factor is applied here. Since
/// `B_j` vanishes for odd `j >= 3`, only the `j = 1` term actually changes
/// sign. The recurrence module uses the unsigned form and must not share
/// this helper.
pub fn powersum_monomial(m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "power-sum polynomials need an exponent of at least 1".into(),
        ));
    }
    let b = bernoulli_numbers(m);
    let scale = Rational::new(BigInt::one(), BigInt::from(m + 1));
    let mut coeffs = vec![Rational::zero(); m + 2];
    for (j, bj) in b.iter().enumerate() {
        let mut term = bj * Rational::from_integer(binomial(m + 1, j)) * &scale;
        if j % 2 == 1 {
            term = -term;
        }
        coeffs[m + 1 - j] = term;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// `(B_{m+1}(x+1) - B_{m+1}) / (m+1)`, an independent route to `S_m(x)`.
pub fn powersum_via_bernoulli_poly(m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "power-sum polynomials need an exponent of at least 1".into(),
        ));
    }
    let bp = bernoulli_polynomial(m + 1);
    let x_plus_one = Polynomial::from_coeffs(vec![Rational::one(), Rational::one()]);
    let diff = &bp.compose(&x_plus_one) - &Polynomial::constant(bp.coeff(0));
    Ok(diff.scale(&Rational::new(BigInt::one(), BigInt::from(m + 1))))
}

/// Literal summation `1^m + ... + n^m` in exact integers.
///
/// Deliberately naive: this is the ground truth the polynomial code is
/// checked against, so it shares nothing with it.
pub fn oracle_sum(m: usize, n: u64) -> BigUint {
    let mut total = BigUint::zero();
    for k in 1..=n {
        let base = BigUint::from(k);
        let mut power = BigUint::one();
        for _ in 0..m {
            power *= &base;
        }
        total += power;
    }
    total
}

/// One instance of `S_{m+1}(n) + sum_{k=1}^{n} S_m(k) = (n+1) S_m(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumIdentityReport {
    pub exponent: usize,
    pub upper: u64,
    pub left: BigUint,
    pub right: BigUint,
    pub pass: bool,
}

/// Evaluates both sides of the partial-sums identity by literal summation.
pub fn check_partial_sum_identity(m: usize, n: u64) -> Result<SumIdentityReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let double_sum: BigUint = (1..=n).map(|k| oracle_sum(m, k)).sum();
    let left = oracle_sum(m + 1, n) + double_sum;
    let right = oracle_sum(m, n) * BigUint::from(n + 1);
    Ok(SumIdentityReport {
        exponent: m,
        upper: n,
        pass: left == right,
        left,
        right,
    })
}
