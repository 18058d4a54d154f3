//! Canonical rationals: construction, arithmetic dispatch and the `p/q`
//! text form.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Build `num/den` in lowest terms with a positive denominator.
pub fn normalize(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Apply `op` to `a` and `b`. `Neg` ignores `b`.
pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => checked_div(a, b)?,
        RatOp::Neg => -a,
    })
}

pub fn rat_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// `(-1)^e` as a small integer.
pub fn parity_sign(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Canonical text: `p/q`, or `p` when `q = 1`; a sign appears only on `p`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse the canonical form (non-canonical inputs such as `2/4` are
/// accepted and reduced).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse { input: s.to_owned() };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.trim().parse().map_err(|_| err())?;
    let den: BigInt = den.trim().parse().map_err(|_| err())?;
    if den.is_negative() {
        return Err(err());
    }
    normalize(num, den).map_err(|_| err())
}

pub(crate) fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// Round `q * 10^digits` to the nearest integer, ties to even.
pub fn round_half_even_scaled(q: &Rational, digits: u32) -> BigInt {
    let scaled = q * Rational::from_integer(pow10(digits));
    let (floor, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let twice = rem * 2u32;
    match twice.cmp(scaled.denom()) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal if floor.is_even() => floor,
        Ordering::Equal => floor + 1,
    }
}

/// Fixed-point text for an integer already scaled by `10^digits`.
pub(crate) fn format_scaled(mantissa: &BigInt, digits: u32) -> String {
    let neg = mantissa.is_negative();
    let mut s = mantissa.abs().to_string();
    if digits > 0 {
        let d = digits as usize;
        if s.len() <= d {
            s = "0".repeat(d + 1 - s.len()) + &s;
        }
        s.insert(s.len() - d, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Running sum of rationals that defers reduction to the end. Each addend's
/// denominator is merged into a common denominator, so the per-term cost is
/// a small-divisor check instead of a big gcd.
#[derive(Debug, Clone)]
pub struct RationalSum {
    num: BigInt,
    den: BigInt,
}

impl Default for RationalSum {
    fn default() -> Self {
        Self::new()
    }
}

impl RationalSum {
    pub fn new() -> Self {
        Self {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn add(&mut self, q: &Rational) {
        self.add_scaled(q, &BigInt::one());
    }

    /// Add `q · m`.
    pub fn add_scaled(&mut self, q: &Rational, m: &BigInt) {
        if q.is_zero() || m.is_zero() {
            return;
        }
        let (qn, qd) = (q.numer(), q.denom());
        if (&self.den % qd).is_zero() {
            self.num += qn * m * (&self.den / qd);
        } else {
            let g = self.den.gcd(qd);
            let lift = qd / &g;
            self.num = &self.num * &lift + qn * m * (&self.den / &g);
            self.den *= lift;
        }
    }

    pub fn finish(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

impl<'a> FromIterator<&'a Rational> for RationalSum {
    fn from_iter<I: IntoIterator<Item = &'a Rational>>(iter: I) -> Self {
        let mut s = Self::new();
        for q in iter {
            s.add(q);
        }
        s
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn addition_matches_cross_multiplication() {
        let a = rat(1, 6);
        let b = rat(-1, 2);
        // (1*2 + (-1)*6) / 12
        let expected = normalize(BigInt::from(1 * 2 - 6), BigInt::from(12)).unwrap();
        assert_eq!(rat_arith(&a, &b, RatOp::Add).unwrap(), expected);
        assert_eq!(expected, rat(-1, 3));
    }

    #[test]
    fn identities_and_normal_form() {
        let x = rat(7, 9);
        assert_eq!(rat_arith(&x, &Rational::zero(), RatOp::Add).unwrap(), x);
        let half = normalize(2.into(), 4.into()).unwrap();
        assert_eq!(format_rational(&half), "1/2");
        let neg = normalize(3.into(), (-6).into()).unwrap();
        assert_eq!(format_rational(&neg), "-1/2");
        assert_eq!(format_rational(&Rational::zero()), "0");
        assert_eq!(rat_arith(&x, &x, RatOp::Neg).unwrap(), rat(-7, 9));
        assert_eq!(rat_cmp(&rat(1, 3), &rat(1, 2)), Ordering::Less);
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(
            rat_arith(&rat(1, 2), &Rational::zero(), RatOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(normalize(1.into(), 0.into()), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-1/30").unwrap(), rat(-1, 30));
        assert_eq!(parse_rational("5").unwrap(), rat(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn half_even_rounding() {
        assert_eq!(round_half_even_scaled(&rat(5, 2), 0), BigInt::from(2));
        assert_eq!(round_half_even_scaled(&rat(7, 2), 0), BigInt::from(4));
        assert_eq!(round_half_even_scaled(&rat(-5, 2), 0), BigInt::from(-2));
        assert_eq!(round_half_even_scaled(&rat(1, 3), 3), BigInt::from(333));
        assert_eq!(round_half_even_scaled(&rat(2, 3), 3), BigInt::from(667));
        assert_eq!(format_scaled(&BigInt::from(31), 1), "3.1");
        assert_eq!(format_scaled(&BigInt::from(-5), 3), "-0.005");
        assert_eq!(format_scaled(&BigInt::from(12), 0), "12");
    }

    #[test]
    fn deferred_sum_matches_eager_sum() {
        let terms = [rat(1, 6), rat(-1, 30), rat(1, 42), rat(5, 66), rat(-691, 2730), rat(3, 1)];
        let eager: Rational = terms.iter().sum();
        let lazy: RationalSum = terms.iter().collect();
        assert_eq!(lazy.finish(), eager);
        let mut scaled = RationalSum::new();
        scaled.add_scaled(&rat(1, 6), &BigInt::from(12));
        scaled.add_scaled(&rat(-1, 4), &BigInt::from(2));
        assert_eq!(scaled.finish(), rat(3, 2));
        assert_eq!(RationalSum::new().finish(), Rational::zero());
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000, m in 1i64..50) {
            let once = normalize(BigInt::from(n * m), BigInt::from(d * m)).unwrap();
            let twice = normalize(once.numer().clone(), once.denom().clone()).unwrap();
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.denom().is_positive());
            prop_assert_eq!(parse_rational(&format_rational(&once)).unwrap(), once);
        }
    }
}
