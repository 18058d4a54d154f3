//! Bernoulli numbers and polynomials.
//!
//! Values come from the recurrence `Σ_{m<n} C(n,m) B_m = 0` (n ≥ 2) solved
//! for its top term, memoized in a table that only ever grows.

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::arith::combinatorics::pascal_row;
use crate::arith::rational::{parity_sign, rat, Rational, RationalSum};
use crate::error::{out_of_range, Result};
use crate::identities::IdentityCheckResult;

static SHARED: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `B_0 ..= B_max`, odd indices ≥ 3 stored as explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Compute from scratch, without touching the shared memo.
    pub fn compute(max: usize) -> Self {
        let mut values = Vec::with_capacity(max + 1);
        extend_values(&mut values, max);
        Self { values }
    }

    /// Prefix of the process-wide memo table, growing it if needed.
    pub fn shared(max: usize) -> Self {
        {
            let memo = SHARED.read().unwrap();
            if memo.len() > max {
                return Self {
                    values: memo[..=max].to_vec(),
                };
            }
        }
        let mut memo = SHARED.write().unwrap();
        extend_values(&mut memo, max);
        Self {
            values: memo[..=max].to_vec(),
        }
    }

    /// Copy with one entry replaced. Only meaningful for exercising the
    /// failure paths of the identity checks.
    pub fn perturbed(&self, m: usize, value: Rational) -> Self {
        let mut values = self.values.clone();
        values[m] = value;
        Self { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_m`. Panics if `m` is beyond the table.
    pub fn get(&self, m: usize) -> &Rational {
        self.values
            .get(m)
            .unwrap_or_else(|| panic!("B_{m} requested from a table ending at B_{}", self.max_index()))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn extend_values(values: &mut Vec<Rational>, max: usize) {
    while values.len() <= max {
        let m = values.len();
        let next = match m {
            0 => Rational::one(),
            _ if m >= 3 && m % 2 == 1 => Rational::zero(),
            _ => {
                // B_m = -1/(m+1) Σ_{j<m} C(m+1, j) B_j
                let row = pascal_row(m + 1);
                let mut acc = RationalSum::new();
                for (j, b) in values.iter().enumerate() {
                    acc.add_scaled(b, &row[j]);
                }
                -acc.finish() / Rational::from_integer((m + 1).into())
            }
        };
        values.push(next);
    }
}

/// Exact `B_m`.
pub fn bernoulli_number(m: usize) -> Rational {
    if let Some(b) = SHARED.read().unwrap().get(m) {
        return b.clone();
    }
    BernoulliTable::shared(m).get(m).clone()
}

/// `B_n(x) = Σ_ℓ C(n,ℓ) B_ℓ x^{n−ℓ}`; `coefficients()[ℓ]` multiplies
/// `x^{n−ℓ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliPolynomial {
    coefficients: Vec<Rational>,
}

impl BernoulliPolynomial {
    pub fn new(n: usize) -> Self {
        Self::from_table(&BernoulliTable::shared(n), n)
    }

    pub fn from_table(table: &BernoulliTable, n: usize) -> Self {
        let row = pascal_row(n);
        let coefficients = (0..=n).map(|l| table.get(l) * &row[l]).collect();
        Self { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

pub fn bernoulli_poly_eval(n: usize, x: &Rational) -> Rational {
    BernoulliPolynomial::new(n).eval(x)
}

/// `Σ_{m=0}^{n-1} C(n,m) B_m = 0` for `n ≥ 2`.
pub fn check_eq3(n: usize) -> Result<IdentityCheckResult> {
    check_eq3_with(&BernoulliTable::shared(n), n)
}

pub fn check_eq3_with(table: &BernoulliTable, n: usize) -> Result<IdentityCheckResult> {
    if n < 2 {
        return Err(out_of_range("n", n, "n >= 2"));
    }
    let row = pascal_row(n);
    let mut lhs = RationalSum::new();
    for m in 0..n {
        lhs.add_scaled(table.get(m), &row[m]);
    }
    let lhs = lhs.finish();
    Ok(IdentityCheckResult::new("bernoulli_recurrence", vec![("n", n.to_string())], lhs, Rational::zero()))
}

/// `Σ_{m=0}^{n} 2^m C(n,m) B_m = 0` for odd `n`.
pub fn check_eq4(n: usize) -> Result<IdentityCheckResult> {
    check_eq4_with(&BernoulliTable::shared(n), n)
}

pub fn check_eq4_with(table: &BernoulliTable, n: usize) -> Result<IdentityCheckResult> {
    if n % 2 == 0 {
        return Err(out_of_range("n", n, "odd n >= 1"));
    }
    let row = pascal_row(n);
    let mut pow2 = num_bigint::BigInt::one();
    let mut lhs = RationalSum::new();
    for m in 0..=n {
        lhs.add_scaled(table.get(m), &(&row[m] * &pow2));
        pow2 <<= 1;
    }
    let lhs = lhs.finish();
    Ok(IdentityCheckResult::new("bernoulli_doubled", vec![("n", n.to_string())], lhs, Rational::zero()))
}

/// `B_n(x) = (−1)^n B_n(1 − x)`.
pub fn check_reflection(n: usize, x: &Rational) -> IdentityCheckResult {
    check_reflection_with(&BernoulliTable::shared(n), n, x)
}

pub fn check_reflection_with(table: &BernoulliTable, n: usize, x: &Rational) -> IdentityCheckResult {
    let poly = BernoulliPolynomial::from_table(table, n);
    let lhs = poly.eval(x);
    let rhs = poly.eval(&(Rational::one() - x)) * rat(parity_sign(n as i64).into(), 1);
    IdentityCheckResult::new(
        "bernoulli_reflection",
        vec![("n", n.to_string()), ("x", crate::arith::format_rational(x))],
        lhs,
        rhs,
    )
}
