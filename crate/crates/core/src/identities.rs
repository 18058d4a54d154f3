//! Exact certification of the summation identities behind the induction:
//! the trinomial-weighted Bernoulli sums (the lemma and its full/upper
//! range companions) and the two sums that close the induction step.
//!
//! Every left-hand side is a brute-force loop over Bernoulli numbers,
//! binomials and trinomials; the right-hand sides are closed forms. The two
//! are compared as exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::combinatorics::{binomial, factorial, trinomial};
use crate::arith::rational::{format_rational, int, parity_sign, rat, Rational, RationalSum};
use crate::bernoulli::{check_eq3_with, check_eq4_with, check_reflection_with, BernoulliTable};
use crate::error::{out_of_range, Result};

/// One instance of an identity with both sides evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheckResult {
    name: &'static str,
    params: Vec<(&'static str, String)>,
    lhs: Rational,
    rhs: Rational,
    pass: bool,
}

impl IdentityCheckResult {
    pub fn new(name: &'static str, params: Vec<(&'static str, String)>, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        Self {
            name,
            params,
            lhs,
            rhs,
            pass,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn params(&self) -> &[(&'static str, String)] {
        &self.params
    }

    pub fn lhs(&self) -> &Rational {
        &self.lhs
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    pub fn pass(&self) -> bool {
        self.pass
    }
}

impl fmt::Display for IdentityCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} {}({}): {} == {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            params.join(", "),
            format_rational(&self.lhs),
            format_rational(&self.rhs)
        )
    }
}

fn k_param(k: usize) -> Vec<(&'static str, String)> {
    vec![("k", k.to_string())]
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// `Σ B_{2t} 2^{2t} C(2k+2; 2t, 2i+1, 2k−2t−2i+1)` over `lo < i+t ≤ hi`
/// (`lo = None` for no lower bound).
fn trinomial_block(table: &BernoulliTable, k: usize, lo: Option<usize>, hi: usize) -> Rational {
    let n = 2 * k as i64 + 2;
    let mut total = RationalSum::new();
    for t in 0..=hi {
        let b = table.get(2 * t);
        if b.is_zero() {
            continue;
        }
        let i_start = lo.map_or(0, |lo| (lo + 1).saturating_sub(t));
        let mut inner = BigInt::zero();
        for i in i_start..=(hi - t) {
            let (r1, r2) = (2 * t as i64, 2 * i as i64 + 1);
            inner += trinomial(n, r1, r2, n - r1 - r2).expect("valid partition");
        }
        total.add_scaled(b, &(inner * pow2(2 * t)));
    }
    total.finish()
}

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(out_of_range("k", k, "k >= 1"))
    } else {
        Ok(())
    }
}

/// `Σ_{i+t ≤ ⌊k/2⌋} B_{2t}2^{2t} C(2k+2; 2t, 2i+1, 2k−2t−2i+1)
///  = (k+1)(2^{2k} + (−1)^k C(2k,k))`.
pub fn lemma1_check(k: usize) -> Result<IdentityCheckResult> {
    lemma1_check_with(&BernoulliTable::shared(2 * k), k)
}

pub fn lemma1_check_with(table: &BernoulliTable, k: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let lhs = trinomial_block(table, k, None, k / 2);
    let central = binomial(2 * k as u32, k as i64) * parity_sign(k as i64);
    let rhs = int((pow2(2 * k) + central) * (k + 1));
    Ok(IdentityCheckResult::new("trinomial_lemma", k_param(k), lhs, rhs))
}

/// Full range `i + t ≤ k`: the sum is `2^{2k+1}(k+1)`.
pub fn eq5_check(k: usize) -> Result<IdentityCheckResult> {
    eq5_check_with(&BernoulliTable::shared(2 * k), k)
}

pub fn eq5_check_with(table: &BernoulliTable, k: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let lhs = trinomial_block(table, k, None, k);
    let rhs = int(pow2(2 * k + 1) * (k + 1));
    Ok(IdentityCheckResult::new("trinomial_full_range", k_param(k), lhs, rhs))
}

/// Upper range `⌊k/2⌋ < i + t ≤ k`: the sum is
/// `(k+1)(2^{2k} − (−1)^k C(2k,k))`.
pub fn eq6_check(k: usize) -> Result<IdentityCheckResult> {
    eq6_check_with(&BernoulliTable::shared(2 * k), k)
}

pub fn eq6_check_with(table: &BernoulliTable, k: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let lhs = trinomial_block(table, k, Some(k / 2), k);
    let central = binomial(2 * k as u32, k as i64) * parity_sign(k as i64);
    let rhs = int((pow2(2 * k) - central) * (k + 1));
    Ok(IdentityCheckResult::new("trinomial_upper_range", k_param(k), lhs, rhs))
}

/// `2(2k)! Σ_{j=1}^{k−1} B_{2k−2j} / ((2j+2)!(2k−2j)!) = 2k/((2k+1)(2k+2)) − B_{2k}`.
pub fn eq15_check(k: usize) -> Result<IdentityCheckResult> {
    eq15_check_with(&BernoulliTable::shared(2 * k), k)
}

pub fn eq15_check_with(table: &BernoulliTable, k: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let mut sum = RationalSum::new();
    for j in 1..k {
        let den = factorial(2 * j as u32 + 2) * factorial(2 * (k - j) as u32);
        sum.add(&(table.get(2 * k - 2 * j) / int(den)));
    }
    let lhs = sum.finish() * int(factorial(2 * k as u32) * 2);
    let kk = k as i64;
    let rhs = rat(2 * kk, (2 * kk + 1) * (2 * kk + 2)) - table.get(2 * k);
    Ok(IdentityCheckResult::new("bernoulli_convolution", k_param(k), lhs, rhs))
}

/// The clipped-tail sum, evaluated through the lemma:
/// `2(2k)! Σ_{j=⌊(k−1)/2⌋+1}^{k−1} B_{2k−2j} (Σ_{i<j−⌊(k−1)/2⌋} C(2j+2,2i+1))
///  / (2^{2j}(2j+2)!(2k−2j)!)`
/// equals `2^{1−2k}/((2k+1)(2k+2)) · [(k+1)(2^{2k} + (−1)^k C(2k,k)) − (2^{2k} + C(2k+1,k) e_k)]`.
pub fn eq16_check(k: usize) -> Result<IdentityCheckResult> {
    eq16_check_with(&BernoulliTable::shared(2 * k), k)
}

pub fn eq16_check_with(table: &BernoulliTable, k: usize) -> Result<IdentityCheckResult> {
    require_k(k)?;
    let half = (k - 1) / 2;
    let mut sum = RationalSum::new();
    for j in (half + 1)..k {
        let inner: BigInt = (0..(j - half))
            .map(|i| binomial(2 * j as u32 + 2, 2 * i as i64 + 1))
            .sum();
        let den = pow2(2 * j) * factorial(2 * j as u32 + 2) * factorial(2 * (k - j) as u32);
        sum.add(&(table.get(2 * k - 2 * j) * Rational::new(inner, den)));
    }
    let lhs = sum.finish() * int(factorial(2 * k as u32) * 2);

    let e_k = if k % 2 == 0 { 1 } else { 0 };
    let central = binomial(2 * k as u32, k as i64) * parity_sign(k as i64);
    let bracket = (pow2(2 * k) + central) * (k + 1) - (pow2(2 * k) + binomial(2 * k as u32 + 1, k as i64) * e_k);
    let kk = k as i64;
    let prefactor = Rational::new(BigInt::from(2), pow2(2 * k) * ((2 * kk + 1) * (2 * kk + 2)));
    let rhs = prefactor * int(bracket);
    Ok(IdentityCheckResult::new("clipped_tail", k_param(k), lhs, rhs))
}

/// Rational sample points for the reflection sweep.
pub fn reflection_points() -> [Rational; 5] {
    [rat(0, 1), rat(1, 2), rat(1, 3), rat(2, 5), rat(-1, 1)]
}

/// Outcome of [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySweep {
    pub results: Vec<IdentityCheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl IdentitySweep {
    fn from_results(results: Vec<IdentityCheckResult>) -> Self {
        let passed = results.iter().filter(|r| r.pass()).count();
        let failed = results.len() - passed;
        Self {
            results,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Distinct identity names, in first-appearance order.
    pub fn names(&self) -> Vec<&'static str> {
        let mut names: Vec<&'static str> = Vec::new();
        for r in &self.results {
            if !names.contains(&r.name()) {
                names.push(r.name());
            }
        }
        names
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheckResult> {
        self.results.iter().filter(|r| !r.pass())
    }
}

/// Every identity for `k = 1..=k_max`, plus the Bernoulli recurrence for
/// `n = 2..=2k_max+2`, the doubled sum for odd `n ≤ 2k_max+1` and
/// reflection for `n ≤ 2k_max` at [`reflection_points`]. These ranges cover
/// every Bernoulli number the `k`-indexed checks read. Failures are
/// collected, never short-circuited.
pub fn run_all(k_max: usize) -> Result<IdentitySweep> {
    run_all_with(&BernoulliTable::shared(2 * k_max + 2), k_max)
}

pub fn run_all_with(table: &BernoulliTable, k_max: usize) -> Result<IdentitySweep> {
    if k_max == 0 {
        return Err(out_of_range("k_max", k_max, "k_max >= 1"));
    }
    let mut results = Vec::new();
    for n in 2..=(2 * k_max + 2) {
        results.push(check_eq3_with(table, n)?);
    }
    for n in (1..=(2 * k_max + 1)).step_by(2) {
        results.push(check_eq4_with(table, n)?);
    }
    for n in 0..=(2 * k_max) {
        for x in reflection_points() {
            results.push(check_reflection_with(table, n, &x));
        }
    }
    let checks: [fn(&BernoulliTable, usize) -> Result<IdentityCheckResult>; 5] = [
        lemma1_check_with,
        eq5_check_with,
        eq6_check_with,
        eq15_check_with,
        eq16_check_with,
    ];
    for check in checks {
        for k in 1..=k_max {
            results.push(check(table, k)?);
        }
    }
    Ok(IdentitySweep::from_results(results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_anchors() {
        let r = lemma1_check(1).unwrap();
        assert_eq!((r.lhs(), r.rhs()), (&int(4), &int(4)));
        let r = lemma1_check(2).unwrap();
        assert_eq!((r.lhs(), r.rhs()), (&int(66), &int(66)));
        assert!(lemma1_check(3).unwrap().pass());
        assert!(lemma1_check(0).is_err());
    }

    #[test]
    fn lemma_by_hand_at_two() {
        // (i,t) = (0,0), (1,0), (0,1)
        let terms = int(trinomial(6, 0, 1, 5).unwrap())
            + int(trinomial(6, 0, 3, 3).unwrap())
            + rat(1, 6) * int(4) * int(trinomial(6, 2, 1, 3).unwrap());
        assert_eq!(terms, int(66));
    }

    #[test]
    fn full_and_upper_ranges() {
        let r = eq5_check(1).unwrap();
        assert_eq!(r.lhs(), &int(16));
        assert!(r.pass());
        let r = eq5_check(2).unwrap();
        assert_eq!(r.lhs(), &int(96));
        assert!(eq5_check(5).unwrap().pass());

        assert_eq!(eq6_check(1).unwrap().lhs(), &int(12));
        assert_eq!(eq6_check(2).unwrap().lhs(), &int(30));
        assert!(eq6_check(4).unwrap().pass());
    }

    #[test]
    fn ranges_are_additive() {
        for k in 1..=40 {
            let full = eq5_check(k).unwrap();
            let lower = lemma1_check(k).unwrap();
            let upper = eq6_check(k).unwrap();
            assert_eq!(full.lhs(), &(lower.lhs() + upper.lhs()), "k = {k}");
        }
    }

    #[test]
    fn closing_sums() {
        let r = eq15_check(1).unwrap();
        assert!(r.lhs().is_zero() && r.pass());
        assert!(eq15_check(2).unwrap().pass());
        assert!(eq15_check(6).unwrap().pass());

        let r = eq16_check(1).unwrap();
        assert!(r.lhs().is_zero() && r.rhs().is_zero());
        assert!(eq16_check(2).unwrap().pass());
        assert!(eq16_check(7).unwrap().pass());
    }

    #[test]
    fn run_all_small() {
        let sweep = run_all(1).unwrap();
        assert!(sweep.all_passed());
        assert_eq!(
            sweep.names(),
            vec![
                "bernoulli_recurrence",
                "bernoulli_doubled",
                "bernoulli_reflection",
                "trinomial_lemma",
                "trinomial_full_range",
                "trinomial_upper_range",
                "bernoulli_convolution",
                "clipped_tail"
            ]
        );
        assert_eq!(sweep.passed, sweep.results.len());
        assert!(run_all(0).is_err());
        assert!(run_all(20).unwrap().all_passed());
    }

    #[test]
    fn perturbation_is_detected_and_reported() {
        let table = BernoulliTable::shared(12).perturbed(4, rat(1, 30));
        let sweep = run_all_with(&table, 5).unwrap();
        assert!(sweep.failed > 0);
        assert_eq!(sweep.passed + sweep.failed, sweep.results.len());
        assert!(sweep.failures().all(|r| r.lhs() != r.rhs()));
    }
}
