//! Bernoulli numbers from the recurrence `sum_{k=0}^{n} C(n+1, k) B_k = 0`,
//! Bernoulli polynomials and their values at one half.
//!
//! The convention is the one the recurrence forces: `B_1 = -1/2`. Any sign
//! flip needed by a power-sum formula happens where the number is consumed.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::report::VerificationReport;

/// Exact binomial coefficient by the multiplicative formula.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Growable table of Bernoulli numbers, `values[j] = B_j`.
///
/// Readers share the lock; extension takes the write lock, so no reader
/// ever sees a partially filled entry.
#[derive(Debug)]
pub struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self {
            values: RwLock::new(vec![Rational::one()]),
        }
    }

    /// Largest index computed so far.
    pub fn high_water(&self) -> usize {
        self.values.read().expect("bernoulli cache poisoned").len() - 1
    }

    pub fn get(&self, m: usize) -> Rational {
        self.with_prefix(m, |values| values[m].clone())
    }

    /// `B_0..=B_max`, extending the table if needed.
    pub fn prefix(&self, max: usize) -> Vec<Rational> {
        self.with_prefix(max, |values| values[..=max].to_vec())
    }

    fn with_prefix<T>(&self, max: usize, read: impl FnOnce(&[Rational]) -> T) -> T {
        {
            let values = self.values.read().expect("bernoulli cache poisoned");
            if max < values.len() {
                return read(&values);
            }
        }
        let mut values = self.values.write().expect("bernoulli cache poisoned");
        while values.len() <= max {
            let n = values.len();
            let next = next_bernoulli(&values);
            values.push(next);
            debug_assert!(recurrence_residual(&values, n).is_zero());
        }
        read(&values)
    }
}

/// Solves the recurrence at index `n = known.len()` for `B_n`:
/// `(n+1) B_n = -sum_{k<n} C(n+1, k) B_k`.
fn next_bernoulli(known: &[Rational]) -> Rational {
    let n = known.len();
    let mut acc = Rational::zero();
    let mut c = BigInt::one(); // C(n+1, k)
    for (k, b) in known.iter().enumerate() {
        if !b.is_zero() {
            acc += b * Rational::from_integer(c.clone());
        }
        c = c * (n + 1 - k) / (k + 1);
    }
    -acc / Rational::from_integer(BigInt::from(n + 1))
}

/// `sum_{k=0}^{n} C(n+1, k) B_k`; zero for every `n >= 1` of a correct table.
pub fn recurrence_residual(values: &[Rational], n: usize) -> Rational {
    values[..=n]
        .iter()
        .enumerate()
        .map(|(k, b)| b * Rational::from_integer(binomial(n + 1, k)))
        .sum()
}

fn global() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// `B_m` with `B_1 = -1/2`, from the process-wide cache.
pub fn bernoulli_number(m: usize) -> Rational {
    global().get(m)
}

/// `B_0..=B_max` from the process-wide cache.
pub fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    global().prefix(max)
}

/// `B_m(x) = sum_{j=0}^{m} C(m, j) B_j x^{m-j}`.
pub fn bernoulli_polynomial(m: usize) -> Polynomial {
    let b = bernoulli_numbers(m);
    let coeffs = (0..=m)
        .map(|deg| {
            let j = m - deg;
            &b[j] * Rational::from_integer(binomial(m, j))
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// `B_r(1/2) = (2^{1-r} - 1) B_r`.
pub fn bernoulli_at_half(r: usize) -> Rational {
    let b = bernoulli_number(r);
    let factor = if r == 0 {
        Rational::one()
    } else {
        let pow = BigInt::one() << (r - 1);
        Rational::new(BigInt::one() - &pow, pow)
    };
    factor * b
}

/// Checks `B_{2m+1} = 0` for every `m` in `1..=max_m`.
pub fn verify_odd_zero(max_m: usize) -> Result<VerificationReport> {
    if max_m == 0 {
        return Err(Error::InvalidArgument("max_m must be at least 1".into()));
    }
    let b = bernoulli_numbers(2 * max_m + 1);
    let mut report = VerificationReport::new("odd-bernoulli");
    for m in 1..=max_m {
        let value = &b[2 * m + 1];
        report.record(
            format!("B_{} = 0", 2 * m + 1),
            value.is_zero(),
            format!("B_{} = {}", 2 * m + 1, value),
        );
    }
    Ok(report)
}
