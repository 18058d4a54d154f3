//! Scalar abstraction for the floating-point layers.
//!
//! The exact modules work over [`Rational`]; numerical checks are generic
//! over [`Real`], implemented for `f32`, `f64` and the double-double
//! [`DoubleF64`] (about 32 significant digits), which is what lets Parseval
//! partial sums resolve gaps far below one `f64` ulp of the target.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::rational::{to_f64, Rational};

pub trait Real:
    Copy
    + Debug
    + Display
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Nearest representable value (to within a unit roundoff).
    fn from_rational(q: &Rational) -> Self;
    fn from_u64(n: u64) -> Self;
    fn to_f64(self) -> f64;
    /// Relative error committed by one basic operation.
    fn unit_roundoff() -> f64;

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn powu(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

macro_rules! impl_real_for_float {
    ($t:ty) => {
        impl Real for $t {
            fn from_rational(q: &Rational) -> Self {
                to_f64(q) as $t
            }
            fn from_u64(n: u64) -> Self {
                n as $t
            }
            fn to_f64(self) -> f64 {
                self as f64
            }
            fn unit_roundoff() -> f64 {
                <$t>::EPSILON as f64 / 2.0
            }
            fn abs(self) -> Self {
                <$t>::abs(self)
            }
        }
    };
}

impl_real_for_float!(f32);
impl_real_for_float!(f64);

/// Unevaluated sum `hi + lo` of two `f64` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleF64 {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleF64 {
    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    /// Exact rational value of the pair.
    pub fn to_rational(self) -> Option<Rational> {
        Some(Rational::from_float(self.hi)? + Rational::from_float(self.lo)?)
    }
}

impl Add for DoubleF64 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, mut e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        e += t;
        let (s, mut e) = quick_two_sum(s, e);
        e += f;
        Self::renorm(s, e)
    }
}

impl Neg for DoubleF64 {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleF64 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleF64 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, mut e) = two_prod(self.hi, rhs.hi);
        e += self.hi * rhs.lo + self.lo * rhs.hi;
        Self::renorm(p, e)
    }
}

impl Div for DoubleF64 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Self::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Self::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self { hi: q1, lo: q2 } + Self::from_f64(q3)
    }
}

impl PartialOrd for DoubleF64 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            ord => Some(ord),
        }
    }
}

impl Zero for DoubleF64 {
    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for DoubleF64 {
    fn one() -> Self {
        Self::from_f64(1.0)
    }
}

impl Display for DoubleF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.hi, f)
    }
}

impl Real for DoubleF64 {
    fn from_rational(q: &Rational) -> Self {
        let hi = to_f64(q);
        if !hi.is_finite() {
            return Self::from_f64(hi);
        }
        let rest = q - Rational::from_float(hi).expect("finite");
        Self::renorm(hi, to_f64(&rest))
    }

    fn from_u64(n: u64) -> Self {
        let hi = n as f64;
        // n - hi is exact in i128
        let lo = (n as i128 - hi as i128) as f64;
        Self::renorm(hi, lo)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn unit_roundoff() -> f64 {
        // Double-double operations are not correctly rounded; a few units of
        // 2^-106 is the usual bound.
        2f64.powi(-104)
    }
}

/// Neumaier's compensated summation.
#[derive(Debug, Clone, Copy)]
pub struct NeumaierSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Real> Default for NeumaierSum<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> NeumaierSum<T> {
    pub fn new() -> Self {
        Self {
            sum: T::zero(),
            compensation: T::zero(),
        }
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation = self.compensation + ((self.sum - t) + x);
        } else {
            self.compensation = self.compensation + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }
}

impl<T: Real> Extend<T> for NeumaierSum<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl<T: Real> FromIterator<T> for NeumaierSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}
