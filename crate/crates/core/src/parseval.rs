//! Floating-point check of Parseval's identity for `x^k`:
//! `(1/π)∫x^{2k} = 2a_0(k)² + Σ_n (a_n(k) + b_n(k))²`.
//!
//! Per-`n` terms come from the exact closed form, with the `π`-dependent
//! constants rounded once into the working scalar. The tail past `N` is
//! bounded by `C_k²/N`, where `|a_n + b_n| ≤ C_k/n`.

use crate::arith::pi::pi_series_eval;
use crate::arith::pi_series::PiSeries;
use crate::arith::rational::{rat, Rational};
use crate::error::{out_of_range, Result};
use crate::fourier::{a_zero, fourier_closed_form};
use crate::scalar::{NeumaierSum, Real};

/// Decimal places used when rounding exact constants into `T`.
const CONSTANT_DIGITS: u32 = 45;
/// Relative slack on the tail bound in the pass criterion.
const BOUND_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalReport<T> {
    pub k: u32,
    pub terms: u64,
    pub partial_sum: T,
    pub target: T,
    /// `target − partial_sum`, computed in `T`.
    pub gap: T,
    pub tail_bound: T,
    pub pass: bool,
}

fn to_real<T: Real>(series: &PiSeries) -> T {
    T::from_rational(&pi_series_eval(series, CONSTANT_DIGITS).value())
}

fn check_args(k: u32, terms: u64) -> Result<()> {
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    if terms == 0 {
        return Err(out_of_range("N", terms, "N >= 1"));
    }
    Ok(())
}

/// `2π^{2k}/(2k+1)`.
pub fn parseval_target<T: Real>(k: u32) -> Result<T> {
    check_args(k, 1)?;
    Ok(to_real(&PiSeries::monomial(k, rat(2, 2 * i64::from(k) + 1))))
}

/// `2a_0(k)² + Σ_{n=1}^{N} (a_n(k) + b_n(k))²`, ascending `n`, compensated.
pub fn parseval_partial_sum<T: Real>(k: u32, terms: u64) -> Result<T> {
    check_args(k, terms)?;
    let closed = fourier_closed_form(k)?;
    // a_n + b_n = ± x^{e} Σ_ℓ g_ℓ (x²)^{L−ℓ}, x = 1/n, e = k − 2L
    let g: Vec<T> = closed
        .gammas()
        .iter()
        .enumerate()
        .map(|(l, gamma)| to_real(&PiSeries::monomial(l as u32, gamma.clone())))
        .collect();
    let lowest_exp = k - 2 * closed.max_ell();

    let a0 = a_zero(k)?.value;
    let mut sum = NeumaierSum::new();
    sum.add(to_real::<T>(&(&a0 * &a0).scale(&Rational::from_integer(2.into()))));
    for n in 1..=terms {
        let x = T::one() / T::from_u64(n);
        let y = x * x;
        let mut p = g[0];
        for &gl in &g[1..] {
            p = p * y + gl;
        }
        let c = p * x.powu(lowest_exp);
        sum.add(c * c);
    }
    Ok(sum.value())
}

/// `C_k²/N` with `C_k = Σ_ℓ |γ(k,ℓ)| π^{2ℓ}`.
pub fn parseval_tail_bound<T: Real>(k: u32, terms: u64) -> Result<T> {
    check_args(k, terms)?;
    let c: T = to_real(&fourier_closed_form(k)?.magnitude_series());
    Ok(c * c / T::from_u64(terms))
}

pub fn parseval_report<T: Real>(k: u32, terms: u64) -> Result<ParsevalReport<T>> {
    let partial_sum = parseval_partial_sum::<T>(k, terms)?;
    let target = parseval_target::<T>(k)?;
    let tail_bound = parseval_tail_bound::<T>(k, terms)?;
    let gap = target - partial_sum;
    let slack = T::one() + T::from_rational(&Rational::from_float(BOUND_SLACK).unwrap());
    let pass = gap >= T::zero() && gap <= tail_bound * slack;
    Ok(ParsevalReport {
        k,
        terms,
        partial_sum,
        target,
        gap,
        tail_bound,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleF64;
    use std::f64::consts::PI;

    #[test]
    fn single_term_and_small_sums() {
        assert_eq!(parseval_partial_sum::<f64>(1, 1).unwrap(), 4.0);
        let direct: f64 = (1..=10).map(|n| 4.0 / (n * n) as f64).sum();
        let s = parseval_partial_sum::<f64>(1, 10).unwrap();
        assert!((s - direct).abs() < 1e-14);
        assert!((s - 6.1990).abs() < 1e-4);
        assert!(parseval_partial_sum::<f64>(2, 0).is_err());
    }

    #[test]
    fn targets() {
        assert!((parseval_target::<f64>(1).unwrap() - 2.0 * PI * PI / 3.0).abs() < 1e-14);
        assert!((parseval_target::<f64>(1).unwrap() - 6.5797362674).abs() < 1e-10);
        assert!((parseval_target::<f64>(2).unwrap() - 2.0 * PI.powi(4) / 5.0).abs() < 1e-12);
        assert!((parseval_target::<f64>(3).unwrap() - 2.0 * PI.powi(6) / 7.0).abs() < 1e-10);
    }

    #[test]
    fn tail_bounds() {
        assert_eq!(parseval_tail_bound::<f64>(1, 8).unwrap(), 0.5);
        let c3 = 12.0 + 2.0 * PI * PI;
        assert!((parseval_tail_bound::<f64>(3, 10).unwrap() - c3 * c3 / 10.0).abs() < 1e-10);
        let bounds: Vec<f64> = [1, 10, 100, 1000]
            .iter()
            .map(|&n| parseval_tail_bound::<f64>(4, n).unwrap())
            .collect();
        assert!(bounds.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn reports_pass() {
        let r = parseval_report::<DoubleF64>(1, 100_000).unwrap();
        assert!(r.pass);
        let gap = r.gap.to_f64();
        assert!(gap > 0.0 && gap < 4.1 / 100_000.0);
        for k in [2, 6] {
            assert!(parseval_report::<DoubleF64>(k, 1000).unwrap().pass, "k = {k}");
        }
        assert!(parseval_report::<f64>(1, 1000).unwrap().pass);
    }

    #[test]
    fn partial_sums_are_monotone() {
        for k in 1..=6 {
            let mut prev = 0.0f64;
            for n in [1u64, 2, 3, 10, 11, 500, 501, 10_000] {
                let s = parseval_partial_sum::<f64>(k, n).unwrap();
                assert!(s >= prev - prev * f64::EPSILON, "k={k} n={n}");
                prev = s;
            }
        }
    }
}
