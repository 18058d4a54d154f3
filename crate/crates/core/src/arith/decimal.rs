use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{format_scaled, pow10, round_half_even_scaled, to_f64, Rational};

/// A decimal rounded (half-even) to a fixed number of fractional digits,
/// together with the exact rational interval known to contain the true
/// value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedDecimal {
    digits: u32,
    mantissa: BigInt,
    lower: Rational,
    upper: Rational,
}

impl BoundedDecimal {
    /// Round the midpoint of `[lower, upper]` to `digits` places.
    pub fn from_enclosure(lower: Rational, upper: Rational, digits: u32) -> Self {
        debug_assert!(lower <= upper);
        let mid = (&lower + &upper) / Rational::from_integer(2.into());
        Self {
            digits,
            mantissa: round_half_even_scaled(&mid, digits),
            lower,
            upper,
        }
    }

    pub fn exact(value: Rational, digits: u32) -> Self {
        Self::from_enclosure(value.clone(), value, digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// The rounded value as an exact rational.
    pub fn value(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.digits))
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    /// Width of the enclosure; zero when the input carried no π-dependence.
    pub fn enclosure_width(&self) -> Rational {
        &self.upper - &self.lower
    }

    /// Largest distance from the rounded value to any point of the enclosure.
    pub fn error_bound(&self) -> Rational {
        let v = self.value();
        let below = (&v - &self.lower).abs();
        let above = (&self.upper - &v).abs();
        below.max(above)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let v = self.value();
        let e = self.error_bound();
        &(&v - &e) <= x && x <= &(&v + &e)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.value())
    }

    pub fn value_string(&self) -> String {
        format_scaled(&self.mantissa, self.digits)
    }

    pub fn error_string(&self) -> String {
        format_error(&self.error_bound())
    }
}

impl fmt::Display for BoundedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.value_string(), self.error_string())
    }
}

/// Two significant digits, rounded up: `1.3e-11`. Zero prints as `0`.
pub fn format_error(err: &Rational) -> String {
    if err.is_zero() {
        return "0".into();
    }
    let err = err.abs();
    let ten = Rational::from_integer(10.into());
    // Find e with 10^e <= err < 10^(e+1).
    let mut e: i32 = 0;
    let mut scale = Rational::from_integer(1.into());
    while err < scale {
        scale /= &ten;
        e -= 1;
    }
    while err >= &scale * &ten {
        scale *= &ten;
        e += 1;
    }
    let mut m = (&err / &scale * &ten).ceil().to_integer();
    if m >= BigInt::from(100) {
        m = BigInt::from(10);
        e += 1;
    }
    let m = m.to_string();
    format!("{}.{}e{}", &m[..1], &m[1..], e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn exact_values_round_and_report() {
        let d = BoundedDecimal::exact(rat(5, 7), 6);
        assert_eq!(d.value_string(), "0.714286");
        assert!(d.enclosure_width().is_zero());
        assert!(d.contains(&rat(5, 7)));
        assert!(d.error_bound() <= rat(1, 2_000_000));
    }

    #[test]
    fn error_formatting() {
        assert_eq!(format_error(&rat(1, 10_000_000_000)), "1.0e-10");
        assert_eq!(format_error(&rat(123, 10_000)), "1.3e-2");
        assert_eq!(format_error(&rat(999, 1000)), "1.0e0");
        assert_eq!(format_error(&Rational::zero()), "0");
    }
}
