//! Finite sums `Σ q_ℓ · π^{2ℓ}`: the ring `K[π²]` over a coefficient
//! field `K`, usually [`Rational`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, One, Signed};

use super::rational::{format_rational, Rational};

/// Polynomial in `π²`. Key `ℓ` stands for `π^{2ℓ}`; zero coefficients are
/// never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiSeries<T = Rational> {
    terms: BTreeMap<u32, T>,
}

impl<T: Num + Clone> Default for PiSeries<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Num + Clone> PiSeries<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(q: T) -> Self {
        Self::monomial(0, q)
    }

    /// `q · π^{2ℓ}`.
    pub fn monomial(ell: u32, q: T) -> Self {
        let mut s = Self::zero();
        s.add_term(ell, q);
        s
    }

    /// `π^{2ℓ}` with unit coefficient.
    pub fn pi_pow2(ell: u32) -> Self {
        Self::monomial(ell, T::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, T)>) -> Self {
        let mut s = Self::zero();
        for (ell, q) in terms {
            s.add_term(ell, q);
        }
        s
    }

    pub fn add_term(&mut self, ell: u32, q: T) {
        if q.is_zero() {
            return;
        }
        match self.terms.remove(&ell) {
            Some(prev) => {
                let sum = prev + q;
                if !sum.is_zero() {
                    self.terms.insert(ell, sum);
                }
            }
            None => {
                self.terms.insert(ell, q);
            }
        }
    }

    pub fn coeff(&self, ell: u32) -> Option<&T> {
        self.terms.get(&ell)
    }

    /// Terms in ascending powers of `π²`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &T)> + '_ {
        self.terms.iter().map(|(&ell, q)| (ell, q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest `ℓ` present.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms().map(|(ell, q)| (ell, q.clone() * c.clone())))
    }

    pub fn map<U: Num + Clone>(&self, mut f: impl FnMut(&T) -> U) -> PiSeries<U> {
        PiSeries::from_terms(self.terms().map(|(ell, q)| (ell, f(q))))
    }

    /// Evaluate at a given value of `π²` by Horner's rule.
    pub fn evaluate_at(&self, pi_squared: &T) -> T {
        let Some(top) = self.degree() else {
            return T::zero();
        };
        let mut acc = T::zero();
        for ell in (0..=top).rev() {
            acc = acc * pi_squared.clone();
            if let Some(q) = self.terms.get(&ell) {
                acc = acc + q.clone();
            }
        }
        acc
    }
}

impl<T: Num + Clone> Add for &PiSeries<T> {
    type Output = PiSeries<T>;
    fn add(self, rhs: Self) -> PiSeries<T> {
        let mut out = self.clone();
        for (ell, q) in rhs.terms() {
            out.add_term(ell, q.clone());
        }
        out
    }
}

impl<T: Num + Clone> Add for PiSeries<T> {
    type Output = PiSeries<T>;
    fn add(self, rhs: Self) -> PiSeries<T> {
        &self + &rhs
    }
}

impl<T: Num + Clone> Neg for &PiSeries<T> {
    type Output = PiSeries<T>;
    fn neg(self) -> PiSeries<T> {
        self.map(|q| T::zero() - q.clone())
    }
}

impl<T: Num + Clone> Neg for PiSeries<T> {
    type Output = PiSeries<T>;
    fn neg(self) -> PiSeries<T> {
        -&self
    }
}

impl<T: Num + Clone> Sub for &PiSeries<T> {
    type Output = PiSeries<T>;
    fn sub(self, rhs: Self) -> PiSeries<T> {
        self + &(-rhs)
    }
}

impl<T: Num + Clone> Sub for PiSeries<T> {
    type Output = PiSeries<T>;
    fn sub(self, rhs: Self) -> PiSeries<T> {
        &self - &rhs
    }
}

impl<T: Num + Clone> Mul for &PiSeries<T> {
    type Output = PiSeries<T>;
    fn mul(self, rhs: Self) -> PiSeries<T> {
        let mut out = PiSeries::zero();
        for (i, p) in self.terms() {
            for (j, q) in rhs.terms() {
                out.add_term(i + j, p.clone() * q.clone());
            }
        }
        out
    }
}

impl<T: Num + Clone> Mul for PiSeries<T> {
    type Output = PiSeries<T>;
    fn mul(self, rhs: Self) -> PiSeries<T> {
        &self * &rhs
    }
}

/// Highest power first: `2*pi^2 - 12`, `1/6*pi^2`, `-pi^4 + 1/3`.
impl fmt::Display for PiSeries<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (ell, q)) in self.terms().rev().enumerate() {
            let mag = q.abs();
            if i == 0 {
                if q.is_negative() {
                    f.write_str("-")?;
                }
            } else if q.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (ell, mag.is_one()) {
                (0, _) => f.write_str(&format_rational(&mag))?,
                (_, true) => write!(f, "pi^{}", 2 * ell)?,
                (_, false) => write!(f, "{}*pi^{}", format_rational(&mag), 2 * ell)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut s = PiSeries::monomial(1, rat(1, 2));
        s.add_term(1, rat(-1, 2));
        assert!(s.is_zero());
        assert_eq!(s, PiSeries::zero());
        assert!(PiSeries::monomial(3, Rational::zero()).is_empty());
    }

    #[test]
    fn display_forms() {
        let b = PiSeries::from_terms([(1, rat(2, 1)), (0, rat(-12, 1))]);
        assert_eq!(b.to_string(), "2*pi^2 - 12");
        assert_eq!(PiSeries::monomial(1, rat(1, 6)).to_string(), "1/6*pi^2");
        assert_eq!(PiSeries::<Rational>::zero().to_string(), "0");
        let c = PiSeries::from_terms([(2, rat(-1, 1)), (0, rat(1, 3))]);
        assert_eq!(c.to_string(), "-pi^4 + 1/3");
    }

    #[test]
    fn evaluation_generic_over_scalar() {
        let s = PiSeries::from_terms([(1, 2.0f64), (0, -12.0)]);
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((s.evaluate_at(&pi2) - (2.0 * pi2 - 12.0)).abs() < 1e-12);
        let exact = PiSeries::from_terms([(2, rat(1, 1)), (0, rat(1, 2))]);
        assert_eq!(exact.evaluate_at(&rat(3, 1)), rat(19, 2));
    }

    fn small_series() -> impl Strategy<Value = PiSeries> {
        proptest::collection::vec((0u32..4, -6i64..6, 1i64..5), 0..4).prop_map(|ts| {
            PiSeries::from_terms(ts.into_iter().map(|(e, n, d)| (e, rat(n, d))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_series(), b in small_series(), c in small_series()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }
    }
}
