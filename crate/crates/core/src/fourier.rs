//! Fourier coefficients of the 2π-periodic extension of `x^k` on `(−π, π]`.
//!
//! Coefficients are kept symbolic in `n`: a sum of terms
//! `c · (−1)^n · π^{2ℓ} / n^{e}`. The integration-by-parts recurrence and
//! the closed form both produce this shape, so they can be compared term by
//! term and the `n`-dependence never has to be sampled.

use std::fmt;

use num_traits::Zero;

use crate::arith::combinatorics::factorial;
use crate::arith::pi_series::PiSeries;
use crate::arith::rational::{int, parity_sign, rat, Rational};
use crate::error::{out_of_range, Result};

/// `coeff · (−1)^n · π^{2·pi_exp} / n^{n_exp}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierTerm {
    pub pi_exp: u32,
    pub coeff: Rational,
    pub n_exp: u32,
}

/// Sum of [`FourierTerm`]s, ordered by `pi_exp`, zero coefficients dropped.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FourierExpansion {
    terms: Vec<FourierTerm>,
}

impl FourierExpansion {
    fn from_terms(mut terms: Vec<FourierTerm>) -> Self {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by_key(|t| t.pi_exp);
        Self { terms }
    }

    pub fn terms(&self) -> &[FourierTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at a concrete `n ≥ 1`.
    pub fn evaluate(&self, n: u64) -> PiSeries {
        let sign = int(parity_sign(n as i64));
        PiSeries::from_terms(self.terms.iter().map(|t| {
            let scale = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(n), t.n_exp as usize));
            (t.pi_exp, &t.coeff * &sign * scale)
        }))
    }

    /// `x ↦ (k/n)·x`, with the given sign on `k`.
    fn shifted(&self, factor: i64) -> Vec<FourierTerm> {
        self.terms
            .iter()
            .map(|t| FourierTerm {
                pi_exp: t.pi_exp,
                coeff: &t.coeff * int(factor),
                n_exp: t.n_exp + 1,
            })
            .collect()
    }
}

impl fmt::Display for FourierExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let pi = match t.pi_exp {
                    0 => String::new(),
                    e => format!("*pi^{}", 2 * e),
                };
                format!("({})*(-1)^n{}/n^{}", crate::arith::format_rational(&t.coeff), pi, t.n_exp)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Which step of the recurrence produced a coefficient pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrencePath {
    /// `b_n(1) = 2(−1)^{n+1}/n`.
    Base,
    /// Even `k`: `a_n(k) = −(k/n) b_n(k−1)`.
    CosineFromSine,
    /// Odd `k ≥ 3`: `b_n(k) = 2(−1)^{n+1}π^{k−1}/n + (k/n) a_n(k−1)`.
    SineFromCosine,
}

impl fmt::Display for RecurrencePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecurrencePath::Base => "base case (k = 1)",
            RecurrencePath::CosineFromSine => "cosine from sine (even k)",
            RecurrencePath::SineFromCosine => "sine from cosine (odd k)",
        })
    }
}

/// `a_n(k)` and `b_n(k)` as built by the recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCoefficientPair {
    pub k: u32,
    pub n: u64,
    pub a: FourierExpansion,
    pub b: FourierExpansion,
    pub path: RecurrencePath,
}

impl FourierCoefficientPair {
    pub fn a_value(&self) -> PiSeries {
        self.a.evaluate(self.n)
    }

    pub fn b_value(&self) -> PiSeries {
        self.b.evaluate(self.n)
    }

    /// `a_n(k) + b_n(k)`; one of the two is always zero.
    pub fn combined(&self) -> &FourierExpansion {
        if self.a.is_zero() {
            &self.b
        } else {
            &self.a
        }
    }
}

/// Symbolic `(a(k), b(k))` from the recurrence, starting at `k = 1`.
pub fn recurrence_expansions(k: u32) -> Result<(FourierExpansion, FourierExpansion)> {
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    let mut a = FourierExpansion::default();
    let mut b = FourierExpansion::from_terms(vec![FourierTerm {
        pi_exp: 0,
        coeff: int(-2),
        n_exp: 1,
    }]);
    for step in 2..=k {
        if step % 2 == 0 {
            a = FourierExpansion::from_terms(b.shifted(-i64::from(step)));
            b = FourierExpansion::default();
        } else {
            let mut terms = a.shifted(i64::from(step));
            terms.push(FourierTerm {
                pi_exp: (step - 1) / 2,
                coeff: int(-2),
                n_exp: 1,
            });
            b = FourierExpansion::from_terms(terms);
            a = FourierExpansion::default();
        }
    }
    Ok((a, b))
}

pub fn fourier_recurrence(k: u32, n: u64) -> Result<FourierCoefficientPair> {
    if n == 0 {
        return Err(out_of_range("n", n, "n >= 1"));
    }
    let (a, b) = recurrence_expansions(k)?;
    let path = match k {
        1 => RecurrencePath::Base,
        _ if k % 2 == 0 => RecurrencePath::CosineFromSine,
        _ => RecurrencePath::SineFromCosine,
    };
    Ok(FourierCoefficientPair { k, n, a, b, path })
}

/// `a_n(k) + b_n(k) = Σ_ℓ γ(k,ℓ) (−1)^n π^{2ℓ} / n^{k−2ℓ}` with
/// `γ(k,ℓ) = (2·k!/(2ℓ+1)!) (−1)^{⌊k/2⌋+ℓ+1}` for `0 ≤ ℓ ≤ ⌊(k−1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierClosedForm {
    k: u32,
    gamma: Vec<Rational>,
}

impl FourierClosedForm {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Largest `ℓ` with a nonzero coefficient, `⌊(k−1)/2⌋`.
    pub fn max_ell(&self) -> u32 {
        (self.k - 1) / 2
    }

    /// `γ(k,ℓ)`; zero outside `0..=⌊(k−1)/2⌋`.
    pub fn gamma(&self, ell: i64) -> Rational {
        usize::try_from(ell)
            .ok()
            .and_then(|l| self.gamma.get(l))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gamma
    }

    /// `c_n(k,ℓ) = γ(k,ℓ)·(−1)^n`.
    pub fn c(&self, n: u64, ell: i64) -> Rational {
        self.gamma(ell) * int(parity_sign(n as i64))
    }

    pub fn expansion(&self) -> FourierExpansion {
        FourierExpansion::from_terms(
            self.gamma
                .iter()
                .enumerate()
                .map(|(l, g)| FourierTerm {
                    pi_exp: l as u32,
                    coeff: g.clone(),
                    n_exp: self.k - 2 * l as u32,
                })
                .collect(),
        )
    }

    pub fn evaluate(&self, n: u64) -> PiSeries {
        self.expansion().evaluate(n)
    }

    /// `Σ_ℓ |γ(k,ℓ)| π^{2ℓ}`, the constant in `|a_n + b_n| ≤ C_k / n`.
    pub fn magnitude_series(&self) -> PiSeries {
        PiSeries::from_terms(
            self.gamma
                .iter()
                .enumerate()
                .map(|(l, g)| (l as u32, num_traits::Signed::abs(g))),
        )
    }
}

pub fn fourier_closed_form(k: u32) -> Result<FourierClosedForm> {
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    let twice_kf = factorial(k) * 2;
    let gamma = (0..=(k - 1) / 2)
        .map(|l| {
            let sign = parity_sign(i64::from(k / 2 + l + 1));
            Rational::new(&twice_kf * sign, factorial(2 * l + 1))
        })
        .collect();
    Ok(FourierClosedForm { k, gamma })
}

/// `a_0(k) = (1/2π)∫x^k dx`: zero for odd `k`, `π^k/(k+1)` for even `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AZero {
    pub k: u32,
    pub value: PiSeries,
}

impl AZero {
    /// `α` with `a_0(k) = α π^k`, i.e. `e_k/(k+1)`.
    pub fn alpha(&self) -> Rational {
        if self.k % 2 == 0 {
            rat(1, i64::from(self.k) + 1)
        } else {
            Rational::zero()
        }
    }
}

pub fn a_zero(k: u32) -> Result<AZero> {
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    let value = if k % 2 == 0 {
        PiSeries::monomial(k / 2, rat(1, i64::from(k) + 1))
    } else {
        PiSeries::zero()
    };
    Ok(AZero { k, value })
}
