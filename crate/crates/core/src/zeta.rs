//! `ζ(2k) = q_k π^{2k}` computed two independent ways: from Bernoulli
//! numbers in closed form, and by replaying Parseval's identity for `x^k`
//! as an induction on `k` that only ever reads earlier inductive values.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::combinatorics::{binomial, factorial};
use crate::arith::decimal::BoundedDecimal;
use crate::arith::pi::pi_series_eval;
use crate::arith::pi_series::PiSeries;
use crate::arith::rational::{int, parity_sign, rat, Rational};
use crate::bernoulli::BernoulliTable;
use crate::error::{out_of_range, Result};
use crate::fourier::{a_zero, fourier_closed_form};
use crate::scalar::{NeumaierSum, Real};

/// `ζ(2k) = q · π^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEvenValue {
    pub k: u32,
    pub q: Rational,
}

impl ZetaEvenValue {
    pub fn as_pi_series(&self) -> PiSeries {
        PiSeries::monomial(self.k, self.q.clone())
    }
}

fn require_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(out_of_range("k", k, "k >= 1"))
    } else {
        Ok(())
    }
}

/// `q_k = (−1)^{k+1} B_{2k} 2^{2k} / (2·(2k)!)`.
pub fn zeta_closed_form(k: u32) -> Result<ZetaEvenValue> {
    zeta_closed_form_with(&BernoulliTable::shared(2 * k as usize), k)
}

pub fn zeta_closed_form_with(table: &BernoulliTable, k: u32) -> Result<ZetaEvenValue> {
    require_k(k)?;
    let b = table.get(2 * k as usize);
    let num = BigInt::one() << (2 * k);
    let q = b * Rational::new(num * parity_sign(i64::from(k) + 1), factorial(2 * k) * 2);
    Ok(ZetaEvenValue { k, q })
}

/// `⌊(k−1)/2⌋`, the top index in the coefficient expansion.
fn half(k: u32) -> u32 {
    (k - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuValue {
    pub k: u32,
    pub j: u32,
    pub value: BigInt,
}

/// `μ_j(k) = Σ_{i=max(0, j−⌊(k−1)/2⌋)}^{min(⌊(k−1)/2⌋, j)} C(2j+2, 2i+1)`
/// for `0 ≤ j ≤ k−1`.
pub fn mu(k: u32, j: u32) -> Result<MuValue> {
    require_k(k)?;
    if j >= k {
        return Err(out_of_range("j", j, "0 <= j <= k-1"));
    }
    let h = half(k);
    let lo = j.saturating_sub(h);
    let hi = h.min(j);
    let value = (lo..=hi)
        .map(|i| binomial(2 * j + 2, 2 * i64::from(i) + 1))
        .sum();
    Ok(MuValue { k, j, value })
}

/// `r(k,j) = Σ_i c_n(k,i) c_n(k,j−i)`, which does not depend on `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCoeff {
    pub k: u32,
    pub j: u32,
    pub value: Rational,
}

/// Closed form `4(−1)^j (k!)² μ_j(k) / (2j+2)!` for `0 ≤ j ≤ 2⌊(k−1)/2⌋`.
pub fn r_coeff(k: u32, j: u32) -> Result<RCoeff> {
    require_k(k)?;
    if j > 2 * half(k) {
        return Err(out_of_range("j", j, "0 <= j <= 2*floor((k-1)/2)"));
    }
    let kf = factorial(k);
    let m = mu(k, j)?.value;
    let value = Rational::new(&kf * &kf * m * 4 * parity_sign(i64::from(j)), factorial(2 * j + 2));
    Ok(RCoeff { k, j, value })
}

/// Direct convolution of the coefficient signs and magnitudes at a given `n`.
pub fn r_coeff_convolution(k: u32, j: u32, n: u64) -> Result<Rational> {
    let closed = fourier_closed_form(k)?;
    let j = i64::from(j);
    Ok((0..=j).map(|i| closed.c(n, i) * closed.c(n, j - i)).sum())
}

/// `e_k = 1` iff `k` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityFlag {
    pub e: u8,
}

impl ParityFlag {
    pub fn of(k: u32) -> Self {
        Self { e: u8::from(k % 2 == 0) }
    }
}

static INDUCTIVE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// One induction step, given `q_1 ..= q_{k-1}` in `earlier`.
///
/// Parseval divided through by `π^{2k}`:
/// `2/(2k+1) − 2α_k² = Σ_{j=0}^{2⌊(k−1)/2⌋} r(k,j) q_{k−j}` with
/// `a_0(k) = α_k π^k`, solved for `q_k` using `r(k,0) = 4(k!)²`.
fn induction_step(k: u32, earlier: &[Rational]) -> Result<Rational> {
    debug_assert_eq!(earlier.len(), k as usize - 1);
    let alpha = a_zero(k)?.alpha();
    let mut rest = rat(2, 2 * i64::from(k) + 1) - &alpha * &alpha * int(2);
    for j in 1..=2 * half(k) {
        let r = r_coeff(k, j)?.value;
        rest -= r * &earlier[(k - j) as usize - 1];
    }
    let lead = r_coeff(k, 0)?.value;
    Ok(rest / lead)
}

/// `q_k` by the Parseval induction. Never consults Bernoulli numbers or the
/// closed form; intermediate values are memoized process-wide.
pub fn zeta_inductive(k: u32) -> Result<ZetaEvenValue> {
    require_k(k)?;
    if let Some(q) = INDUCTIVE.read().unwrap().get(k as usize - 1) {
        return Ok(ZetaEvenValue { k, q: q.clone() });
    }
    let mut memo = INDUCTIVE.write().unwrap();
    while memo.len() < k as usize {
        let next = induction_step(memo.len() as u32 + 1, &memo)?;
        memo.push(next);
    }
    Ok(ZetaEvenValue {
        k,
        q: memo[k as usize - 1].clone(),
    })
}

/// `q_1 ..= q_k` by the induction, computed without the shared memo.
pub fn zeta_inductive_sequence(k: u32) -> Result<Vec<ZetaEvenValue>> {
    let mut qs: Vec<Rational> = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let q = induction_step(m, &qs)?;
        qs.push(q);
    }
    Ok(qs
        .into_iter()
        .enumerate()
        .map(|(i, q)| ZetaEvenValue { k: i as u32 + 1, q })
        .collect())
}

/// `ζ(2k)` to `digits` places from the closed form.
pub fn zeta_decimal(k: u32, digits: u32) -> Result<BoundedDecimal> {
    let z = zeta_closed_form(k)?;
    Ok(pi_series_eval(&z.as_pi_series(), digits))
}

/// Partial Dirichlet sum with its integral-test tail and a floating-point
/// rounding allowance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSeries<T> {
    pub k: u32,
    pub terms: u64,
    pub partial_sum: T,
    /// `Σ_{n>N} n^{−2k} ≤ N^{1−2k}/(2k−1)`.
    pub tail_bound: T,
    /// First-order bound on the rounding error in `partial_sum`.
    pub rounding_bound: T,
}

impl<T: Real> DirectSeries<T> {
    /// Whether `x` lies in `[S − ρ, S + tail + ρ]`.
    pub fn brackets(&self, x: T) -> bool {
        let lo = self.partial_sum - self.rounding_bound;
        let hi = self.partial_sum + self.tail_bound + self.rounding_bound;
        lo <= x && x <= hi
    }
}

/// `S = Σ_{n=1}^{N} n^{−2k}`, summed smallest term first with compensation.
pub fn zeta_direct_series<T: Real>(k: u32, terms: u64) -> Result<DirectSeries<T>> {
    require_k(k)?;
    if terms == 0 {
        return Err(out_of_range("N", terms, "N >= 1"));
    }
    let mut sum = NeumaierSum::new();
    for n in (1..=terms).rev() {
        let inv = T::one() / T::from_u64(n);
        sum.add(inv.powu(2 * k));
    }
    let partial_sum = sum.value();
    let inv_n = T::one() / T::from_u64(terms);
    let tail_bound = inv_n.powu(2 * k - 1) / T::from_u64(2 * u64::from(k) - 1);
    // each term carries at most (2k + 1) roundings, the sum two more
    let u = T::from_rational(&Rational::from_float(T::unit_roundoff()).expect("finite"));
    let rounding_bound = u * T::from_u64(2 * u64::from(k) + 4) * partial_sum;
    Ok(DirectSeries {
        k,
        terms,
        partial_sum,
        tail_bound,
        rounding_bound,
    })
}
