//! Exact values of the Riemann zeta function at positive even integers.
//!
//! `ζ(2k)` is produced as a rational multiple of `π^{2k}` twice: from
//! Bernoulli numbers in closed form ([`zeta::zeta_closed_form`]) and by an
//! induction on Parseval's identity for the Fourier coefficients of `x^k`
//! ([`zeta::zeta_inductive`]). The summation identities the induction rests
//! on are certified exactly in [`identities`]; [`parseval`] and
//! [`quadrature`] check the analytic side numerically.
//!
//! Exact quantities use [`Rational`]. The numerical layers are generic over
//! [`scalar::Real`] (`f32`, `f64`, [`DoubleF64`]) or `num_traits::Float`.

pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod fourier;
pub mod identities;
pub mod parseval;
pub mod quadrature;
pub mod scalar;
pub mod zeta;

pub use arith::{BoundedDecimal, PiApprox, PiSeries, Rational};
pub use error::{Error, Result};
pub use scalar::{DoubleF64, NeumaierSum, Real};

pub use num_bigint::BigInt;

/// Polynomial in `π²` with exact coefficients.
pub type ExactPiSeries = PiSeries<Rational>;
/// Polynomial in `π²` with `f64` coefficients.
pub type PiSeriesF64 = PiSeries<f64>;

pub type ParsevalReportF64 = parseval::ParsevalReport<f64>;
pub type ParsevalReportDd = parseval::ParsevalReport<DoubleF64>;

pub type DirectSeriesF64 = zeta::DirectSeries<f64>;
pub type DirectSeriesF32 = zeta::DirectSeries<f32>;
pub type DirectSeriesDd = zeta::DirectSeries<DoubleF64>;
