//! Exact arithmetic: unbounded integers and rationals, combinatorial
//! coefficients, polynomials in π², and π itself.

pub mod combinatorics;
pub mod decimal;
pub mod pi;
pub mod pi_series;
pub mod rational;

pub use combinatorics::{binomial, factorial, trinomial};
pub use decimal::BoundedDecimal;
pub use pi::{pi_approx, pi_approx_with, pi_enclosure, pi_series_eval, MachinFormula, PiApprox, PiEnclosure};
pub use pi_series::PiSeries;
pub use rational::{format_rational, normalize, parse_rational, rat_arith, RatOp, Rational};
