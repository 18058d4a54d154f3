//! Composite Simpson estimates of the Fourier integrals, used as an
//! independent floating-point check on the exact coefficients.

use num_traits::{Float, FromPrimitive};

use crate::error::{out_of_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    /// `(1/π)∫x^k cos(nx) dx`
    Cos,
    /// `(1/π)∫x^k sin(nx) dx`
    Sin,
    /// `(1/2π)∫x^k dx`
    Constant,
}

pub const MAX_K: u32 = 12;
pub const MAX_N: u32 = 32;
const MAX_DOUBLINGS: u32 = 20;
const TOLERANCE: f64 = 1e-12;

fn simpson<T: Float + FromPrimitive>(f: impl Fn(T) -> T, a: T, b: T, panels: usize) -> T {
    let h = (b - a) / T::from_usize(panels).unwrap();
    let two = T::from_f64(2.0).unwrap();
    let four = T::from_f64(4.0).unwrap();
    // Neumaier-compensated interior sum.
    let (mut sum, mut comp) = (f(a) + f(b), T::zero());
    for i in 1..panels {
        let w = if i % 2 == 1 { four } else { two };
        let x = w * f(a + h * T::from_usize(i).unwrap());
        let t = sum + x;
        comp = comp + if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
    }
    (sum + comp) * h / T::from_f64(3.0).unwrap()
}

/// Simpson estimate with panels doubled until successive estimates agree to
/// `1e-12` relative to `max(1, π^k)` (or a few ulps of `T`, if coarser).
pub fn quadrature_oracle<T: Float + FromPrimitive>(k: u32, n: u32, which: TrigKind) -> Result<T> {
    if k > MAX_K {
        return Err(out_of_range("k", k, "k <= 12"));
    }
    if n > MAX_N || (n == 0 && which != TrigKind::Constant) {
        return Err(out_of_range("n", n, "1 <= n <= 32"));
    }
    let pi = T::from_f64(std::f64::consts::PI).unwrap();
    let nn = T::from_u32(n).unwrap();
    let kk = k as i32;
    let f = |x: T| match which {
        TrigKind::Cos => x.powi(kk) * (nn * x).cos(),
        TrigKind::Sin => x.powi(kk) * (nn * x).sin(),
        TrigKind::Constant => x.powi(kk),
    };
    let norm = match which {
        TrigKind::Constant => T::one() / (pi + pi),
        _ => T::one() / pi,
    };
    let scale = pi.powi(kk).max(T::one());
    let tol = T::from_f64(TOLERANCE).unwrap().max(T::epsilon() * T::from_f64(64.0).unwrap()) * scale;

    let mut panels = 64usize.max(16 * n as usize);
    let mut prev = simpson(f, -pi, pi, panels) * norm;
    let mut last_diff = T::infinity();
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let next = simpson(f, -pi, pi, panels) * norm;
        last_diff = (next - prev).abs();
        if last_diff < tol {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NonConvergence {
        doublings: MAX_DOUBLINGS,
        last_diff: last_diff.to_f64().unwrap_or(f64::NAN),
    })
}
