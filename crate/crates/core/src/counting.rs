//! Exact combinatorics over a generic integer count type.
//!
//! Binomial coefficients are total: any out-of-range argument yields 0 and
//! `binom(n, 0) = 1` for every `n >= 0`. Sums that run over boundary indices
//! therefore lose their vanishing terms without special casing.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};
use thiserror::Error;

/// An exact signed integer usable for counting.
///
/// `num_bigint::BigInt` never overflows; fixed-width types such as `i128`
/// are accepted for small parameters where the caller knows the counts fit.
pub trait Count: Clone + Debug + Display + Ord + Signed + FromPrimitive + Send + Sync {}

impl<T> Count for T where T: Clone + Debug + Display + Ord + Signed + FromPrimitive + Send + Sync {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("b must be at least {min}, got {b}")]
    InvalidB { b: usize, min: usize },
}

pub(crate) fn count_of<T: Count>(v: u64) -> T {
    T::from_u64(v).expect("count type cannot represent a small integer")
}

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binom<T: Count>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * count_of::<T>((n - i) as u64) / count_of::<T>((i + 1) as u64);
    }
    acc
}

/// Number of compositions of `total` into `parts` positive parts.
pub fn n_infty<T: Count>(parts: i64, total: i64) -> T {
    binom(total - 1, parts - 1)
}

/// Number of compositions of `total` into `parts` parts, each in `[1, b-2]`.
///
/// `n_b(b, 0, 0) = 1`. Evaluated by inclusion-exclusion over the parts that
/// exceed `b-2`.
pub fn n_b<T: Count>(b: usize, parts: i64, total: i64) -> Result<T, CountingError> {
    if b < 3 {
        return Err(CountingError::InvalidB { b, min: 3 });
    }
    if parts < 0 || total < 0 {
        return Ok(T::zero());
    }
    if parts == 0 {
        return Ok(if total == 0 { T::one() } else { T::zero() });
    }
    let cap = (b - 2) as i64;
    let mut acc = T::zero();
    for j in 0..=parts {
        let term = binom::<T>(parts, j) * binom::<T>(total - j * cap - 1, parts - 1);
        if j % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    Ok(acc)
}

/// An ordered tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

/// Lexicographic stream of the compositions of a total into a fixed number
/// of positive parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

/// All compositions of `total` into `parts` positive parts, in lexicographic
/// order. Empty when `parts == 0` or `parts > total`.
pub fn compositions(total: usize, parts: usize) -> Compositions {
    let current = if parts == 0 || parts > total {
        None
    } else {
        let mut first = vec![1; parts];
        first[parts - 1] = total - (parts - 1);
        Some(first)
    };
    Compositions { current }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        let r = out.len();
        let mut next = out.clone();
        // rightmost i whose suffix can give up one unit
        let mut suffix = 0usize;
        let mut found = None;
        for i in (0..r.saturating_sub(1)).rev() {
            suffix += next[i + 1];
            if suffix > r - 1 - i {
                found = Some((i, suffix));
                break;
            }
        }
        if let Some((i, suffix)) = found {
            next[i] += 1;
            let rest = suffix - 1;
            let tail = r - 1 - i;
            for slot in next[i + 1..r - 1].iter_mut() {
                *slot = 1;
            }
            next[r - 1] = rest - (tail - 1);
            self.current = Some(next);
        }
        Some(Composition { parts: out })
    }
}
