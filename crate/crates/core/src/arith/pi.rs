//! Rigorous rational enclosures of π from Machin-type arctangent formulas.
//!
//! `arctan(1/x)` is an alternating series with decreasing terms, so
//! consecutive partial sums bracket its value; each formula combines those
//! brackets into an enclosure of π.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::decimal::BoundedDecimal;
use super::pi_series::PiSeries;
use super::rational::{format_scaled, pow10, round_half_even_scaled, Rational};
use crate::error::{out_of_range, Result};

/// `π/4` as an integer combination of `arctan(1/x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MachinFormula {
    /// `4·arctan(1/5) − arctan(1/239)`
    Machin,
    /// `12·arctan(1/18) + 8·arctan(1/57) − 5·arctan(1/239)`
    Gauss,
}

impl MachinFormula {
    fn terms(self) -> &'static [(i64, u64)] {
        match self {
            MachinFormula::Machin => &[(4, 5), (-1, 239)],
            MachinFormula::Gauss => &[(12, 18), (8, 57), (-5, 239)],
        }
    }
}

/// Closed rational interval known to contain π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiEnclosure {
    pub lower: Rational,
    pub upper: Rational,
}

impl PiEnclosure {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn contains(&self, other: &PiEnclosure) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }
}

/// Bracket `arctan(1/x)` to within `tol`.
fn arctan_inv(x: u64, tol: &Rational) -> (Rational, Rational) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone(); // x^{2i+1}
    let mut sum = Rational::zero();
    let mut i: u64 = 0;
    loop {
        let term = Rational::new(BigInt::one(), &power * (2 * i + 1));
        let next = if i.is_even() { &sum + &term } else { &sum - &term };
        if term <= *tol {
            // `sum` and `next` are consecutive partial sums.
            return if next < sum { (next, sum) } else { (sum, next) };
        }
        sum = next;
        power *= &x2;
        i += 1;
    }
}

/// Enclosure of π of width at most `10^-precision`, with endpoints rounded
/// outward onto the decimal grid `10^-(precision + 2)`.
pub fn pi_enclosure(formula: MachinFormula, precision: u32) -> PiEnclosure {
    let terms = formula.terms();
    let weight: i64 = terms.iter().map(|(c, _)| 4 * c.abs()).sum();
    let tol = Rational::new(BigInt::one(), pow10(precision + 1) * weight);
    let mut lower = Rational::zero();
    let mut upper = Rational::zero();
    for &(c, x) in terms {
        let (lo, hi) = arctan_inv(x, &tol);
        let c = Rational::from_integer(BigInt::from(4 * c));
        if c.is_positive() {
            lower += &c * lo;
            upper += &c * hi;
        } else {
            lower += &c * hi;
            upper += &c * lo;
        }
    }
    let grid = Rational::from_integer(pow10(precision + 2));
    PiEnclosure {
        lower: (lower * &grid).floor() / &grid,
        upper: (upper * &grid).ceil() / &grid,
    }
}

/// π rounded to a number of decimal places, with a guaranteed error bound
/// of one unit in the last place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiApprox {
    digits: u32,
    mantissa: BigInt,
    enclosure: PiEnclosure,
}

impl PiApprox {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.digits))
    }

    /// Always `10^-digits`; dominates rounding plus enclosure width.
    pub fn error_bound(&self) -> Rational {
        Rational::new(BigInt::one(), pow10(self.digits))
    }

    /// `[value − bound, value + bound]`.
    pub fn interval(&self) -> PiEnclosure {
        let v = self.value();
        let e = self.error_bound();
        PiEnclosure {
            lower: &v - &e,
            upper: &v + &e,
        }
    }

    /// The tighter enclosure the rounded value was derived from.
    pub fn enclosure(&self) -> &PiEnclosure {
        &self.enclosure
    }

    pub fn to_decimal_string(&self) -> String {
        format_scaled(&self.mantissa, self.digits)
    }
}

pub fn pi_approx(digits: u32) -> Result<PiApprox> {
    pi_approx_with(MachinFormula::Machin, digits)
}

pub fn pi_approx_with(formula: MachinFormula, digits: u32) -> Result<PiApprox> {
    if digits == 0 {
        return Err(out_of_range("digits", digits, "at least 1"));
    }
    let enclosure = pi_enclosure(formula, digits + 5);
    let mid = (&enclosure.lower + &enclosure.upper) / Rational::from_integer(2.into());
    Ok(PiApprox {
        digits,
        mantissa: round_half_even_scaled(&mid, digits),
        enclosure,
    })
}

/// Evaluate `Σ q_ℓ π^{2ℓ}` to `digits` decimal places by interval arithmetic
/// over a π enclosure, refining π until the result is resolved to well
/// below the last place.
pub fn pi_series_eval(series: &PiSeries, digits: u32) -> BoundedDecimal {
    let constant = series.coeff(0).cloned().unwrap_or_else(Rational::zero);
    let Some(top) = series.degree().filter(|&d| d > 0) else {
        return BoundedDecimal::exact(constant, digits);
    };
    let target = Rational::new(BigInt::one(), pow10(digits + 3));
    let mut precision = digits + 10 + 2 * top;
    loop {
        let pi = pi_enclosure(MachinFormula::Machin, precision);
        let lo2 = &pi.lower * &pi.lower;
        let hi2 = &pi.upper * &pi.upper;
        let mut lower = constant.clone();
        let mut upper = constant.clone();
        let mut lo_pow = Rational::one();
        let mut hi_pow = Rational::one();
        for ell in 1..=top {
            lo_pow *= &lo2;
            hi_pow *= &hi2;
            if let Some(q) = series.coeff(ell) {
                if q.is_positive() {
                    lower += q * &lo_pow;
                    upper += q * &hi_pow;
                } else {
                    lower += q * &hi_pow;
                    upper += q * &lo_pow;
                }
            }
        }
        if &upper - &lower <= target {
            return BoundedDecimal::from_enclosure(lower, upper, digits);
        }
        precision *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, to_f64};

    const PI_100: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680";

    #[test]
    fn twenty_digits() {
        let p = pi_approx(20).unwrap();
        assert_eq!(p.to_decimal_string(), "3.14159265358979323846");
        assert_eq!(p.error_bound(), Rational::new(1.into(), pow10(20)));
        assert!(p.interval().contains(p.enclosure()));
    }

    #[test]
    fn one_digit_brackets_pi() {
        let p = pi_approx(1).unwrap();
        assert_eq!(p.to_decimal_string(), "3.1");
        let i = p.interval();
        assert!(i.lower <= rat(314, 100) && rat(315, 100) <= i.upper);
        assert!(pi_approx(0).is_err());
    }

    #[test]
    fn formulas_agree_at_100_digits() {
        let a = pi_approx_with(MachinFormula::Machin, 100).unwrap();
        let b = pi_approx_with(MachinFormula::Gauss, 100).unwrap();
        assert_eq!(a.to_decimal_string(), b.to_decimal_string());
        assert_eq!(a.to_decimal_string(), PI_100);
    }

    #[test]
    fn squared_value_sanity() {
        for d in [5, 12, 40] {
            let v = to_f64(&pi_approx(d).unwrap().value());
            assert!(v * v > 9.8695 && v * v < 9.8697);
        }
    }

    #[test]
    fn refinement_is_nested() {
        for d in 1..=60 {
            let coarse = pi_approx(d).unwrap().interval();
            let fine = pi_approx(d + 10).unwrap().interval();
            assert!(coarse.contains(&fine), "d = {d}");
        }
    }

    #[test]
    fn series_eval_constant_and_empty() {
        let s = PiSeries::constant(rat(5, 7));
        let d = pi_series_eval(&s, 8);
        assert!(d.enclosure_width().is_zero());
        assert_eq!(d.lower(), &rat(5, 7));
        assert_eq!(pi_series_eval(&PiSeries::zero(), 5).value(), Rational::zero());
    }

    #[test]
    fn series_eval_basel() {
        let d = pi_series_eval(&PiSeries::monomial(1, rat(1, 6)), 12);
        assert_eq!(d.value_string(), "1.644934066848");
        assert!(d.error_bound() <= Rational::new(1.into(), pow10(12)));
    }

    #[test]
    fn series_eval_negative_coefficients() {
        // 2π² − 12 ≈ 7.7392088022
        let d = pi_series_eval(&PiSeries::from_terms([(1, rat(2, 1)), (0, rat(-12, 1))]), 10);
        assert_eq!(d.value_string(), "7.7392088022");
    }
}
