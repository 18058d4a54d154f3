//! Factorials, binomial and trinomial coefficients over unbounded integers.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rows of Pascal's triangle above this index are not memoized; the
/// triangle is quadratic in memory.
const PASCAL_CACHE_ROWS: usize = 640;

static PASCAL: RwLock<Vec<Arc<[BigInt]>>> = RwLock::new(Vec::new());
static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// Exact `n!`.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    if let Some(v) = FACTORIALS.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * table.len();
        table.push(next);
    }
    table[n].clone()
}

/// Row `n` of Pascal's triangle, shared. Only rows up to the cache limit
/// are stored; larger rows are built on demand and not retained.
pub(crate) fn pascal_row(n: usize) -> Arc<[BigInt]> {
    if let Some(row) = PASCAL.read().unwrap().get(n) {
        return Arc::clone(row);
    }
    if n > PASCAL_CACHE_ROWS {
        return multiplicative_row(n).into();
    }
    let mut rows = PASCAL.write().unwrap();
    if rows.is_empty() {
        rows.push(Arc::from(vec![BigInt::one()]));
    }
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for pair in prev.windows(2) {
            next.push(&pair[0] + &pair[1]);
        }
        next.push(BigInt::one());
        rows.push(next.into());
    }
    Arc::clone(&rows[n])
}

fn multiplicative_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for r in 1..=n {
        c = c * (n + 1 - r) / r;
        row.push(c.clone());
    }
    row
}

/// Exact `C(n, r)`; zero when `r < 0` or `r > n`.
pub fn binomial(n: u32, r: i64) -> BigInt {
    if r < 0 || r > i64::from(n) {
        return BigInt::zero();
    }
    pascal_row(n as usize)[r as usize].clone()
}

/// Exact `n! / (r1! r2! r3!)`, rejecting partitions that do not sum to `n`
/// or have a negative part.
pub fn trinomial(n: i64, r1: i64, r2: i64, r3: i64) -> Result<BigInt> {
    if r1 < 0 || r2 < 0 || r3 < 0 || r1 + r2 + r3 != n {
        return Err(Error::InvalidPartition { n, r1, r2, r3 });
    }
    let outer = pascal_row(n as usize);
    let inner = pascal_row((n - r1) as usize);
    Ok(&outer[r1 as usize] * &inner[r2 as usize])
}
