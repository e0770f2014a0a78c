//! The cyclic b-symbol metric.
//!
//! Window `i` of a length-n vector is `(x_i, ..., x_{i+b-1})` with indices
//! taken modulo n, for every `i` including the trailing ones.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::gf::{FieldElement, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("vector is empty")]
    EmptyVector,
    #[error("vector is zero")]
    ZeroVector,
    #[error("vectors have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("vectors belong to different fields")]
    FieldMismatch,
    #[error("invalid window length b = {0}")]
    InvalidB(usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

/// Anything with a distinguished zero, so the metric works on field
/// elements and on raw element reps alike.
pub trait Symbol {
    fn is_zero_symbol(&self) -> bool;
}

impl Symbol for FieldElement {
    fn is_zero_symbol(&self) -> bool {
        self.is_zero()
    }
}

macro_rules! int_symbol {
    ($($t:ty),*) => {$(
        impl Symbol for $t {
            fn is_zero_symbol(&self) -> bool {
                *self == 0
            }
        }
    )*};
}

int_symbol!(u8, u16, u32, u64, usize, i32, i64);

/// The b-symbol read vector: n cyclic windows of b consecutive symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadVector<S> {
    windows: Vec<Vec<S>>,
}

impl<S: Symbol> ReadVector<S> {
    pub fn windows(&self) -> &[Vec<S>] {
        &self.windows
    }

    pub fn nonzero_windows(&self) -> usize {
        self.windows
            .iter()
            .filter(|w| w.iter().any(|s| !s.is_zero_symbol()))
            .count()
    }
}

pub fn read_vector<S: Symbol + Clone>(v: &[S], b: usize) -> Result<ReadVector<S>, MetricError> {
    let n = v.len();
    if n == 0 {
        return Err(MetricError::EmptyVector);
    }
    if b == 0 {
        return Err(MetricError::InvalidB(b));
    }
    let windows = (0..n)
        .map(|i| (0..b).map(|j| v[(i + j) % n].clone()).collect())
        .collect();
    Ok(ReadVector { windows })
}

/// Number of nonzero cyclic windows of length `b`.
pub fn b_weight<S: Symbol>(v: &[S], b: usize) -> Result<usize, MetricError> {
    let n = v.len();
    if n == 0 {
        return Err(MetricError::EmptyVector);
    }
    if b == 0 {
        return Err(MetricError::InvalidB(b));
    }
    Ok((0..n)
        .filter(|&i| (0..b).any(|j| !v[(i + j) % n].is_zero_symbol()))
        .count())
}

/// `b_weight(x - y, b)`.
pub fn b_distance(x: &[FieldElement], y: &[FieldElement], b: usize) -> Result<usize, MetricError> {
    if x.len() != y.len() {
        return Err(MetricError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let diff = x
        .iter()
        .zip(y)
        .map(|(a, c)| a.checked_sub(c))
        .collect::<Result<Vec<_>, GfError>>()
        .map_err(|_| MetricError::FieldMismatch)?;
    b_weight(&diff, b)
}

/// Cyclic zero-run length starting at each position (n for the zero vector).
pub fn zero_runs<S: Symbol>(v: &[S]) -> Vec<usize> {
    let n = v.len();
    let mut runs = vec![0; n];
    let Some(anchor) = v.iter().position(|s| !s.is_zero_symbol()) else {
        return vec![n; n];
    };
    // walk backwards around the cycle starting just before a nonzero symbol
    let mut next_run = 0;
    for step in 1..=n {
        let i = (anchor + n - step) % n;
        next_run = if v[i].is_zero_symbol() { next_run + 1 } else { 0 };
        runs[i] = next_run;
    }
    runs
}

/// `b_weight(v, b)` for every `b` in `1..=n`, in that order.
///
/// A window of length b starting at i is zero exactly when the zero run
/// starting at i has length at least b.
pub fn b_weight_profile<S: Symbol>(v: &[S]) -> Vec<usize> {
    let n = v.len();
    let mut at_least = vec![0usize; n + 2];
    for r in zero_runs(v) {
        at_least[r.min(n)] += 1;
    }
    for r in (0..=n).rev() {
        at_least[r] += at_least[r + 1];
    }
    (1..=n).map(|b| n - at_least[b]).collect()
}

/// Block sizes `(n_0, n_1, ..., n_l, n_{l+1})` of a nonzero vector's b-shape.
///
/// `n_0` and `n_{l+1}` are the leading and trailing zero runs. Odd interior
/// blocks start and end with nonzero symbols and contain no zero run of
/// length `b-1` or more; even interior blocks are zero runs of length at
/// least `b-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeDecomposition {
    b: usize,
    sizes: Vec<usize>,
}

impl ShapeDecomposition {
    /// Builds a shape from block sizes, checking the structural rules only.
    pub fn from_sizes(b: usize, sizes: Vec<usize>) -> Result<Self, MetricError> {
        if b < 2 {
            return Err(MetricError::InvalidB(b));
        }
        if sizes.len() < 3 || sizes.len().is_multiple_of(2) {
            return Err(MetricError::InvalidShape(format!(
                "need an odd number of interior blocks, got {} sizes",
                sizes.len()
            )));
        }
        let l = sizes.len() - 2;
        for (i, &size) in sizes.iter().enumerate().take(l + 1).skip(1) {
            let min = if i % 2 == 1 { 1 } else { b - 1 };
            if size < min {
                return Err(MetricError::InvalidShape(format!("block {i} has size {size} < {min}")));
            }
        }
        Ok(ShapeDecomposition { b, sizes })
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of interior blocks (always odd).
    pub fn l(&self) -> usize {
        self.sizes.len() - 2
    }

    /// Combined length of the leading and trailing zero runs.
    pub fn t(&self) -> usize {
        self.sizes[0] + self.sizes[self.sizes.len() - 1]
    }

    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Sizes of the odd interior blocks `n_1, n_3, ..., n_l`.
    pub fn odd_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.sizes[1..self.sizes.len() - 1].iter().step_by(2).copied()
    }

    /// Blocks as 1-indexed half-open ranges; empty end blocks are empty ranges.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 1;
        self.sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    /// Checks conditions (C1)-(C4) against the vector this shape claims to describe.
    pub fn check<S: Symbol>(&self, v: &[S]) -> Result<(), MetricError> {
        let fail = |msg: String| Err(MetricError::InvalidShape(msg));
        if self.n() != v.len() {
            return fail(format!(
                "sizes sum to {} but the vector has length {}",
                self.n(),
                v.len()
            ));
        }
        let Some(first) = v.iter().position(|s| !s.is_zero_symbol()) else {
            return Err(MetricError::ZeroVector);
        };
        let last = v.iter().rposition(|s| !s.is_zero_symbol()).unwrap();
        if self.sizes[0] != first {
            return fail("leading block is not the leading zero run".into());
        }
        if self.sizes[self.sizes.len() - 1] != v.len() - 1 - last {
            return fail("trailing block is not the trailing zero run".into());
        }
        let blocks = self.blocks();
        for (i, r) in blocks.iter().enumerate().take(self.l() + 1).skip(1) {
            let block = &v[r.start - 1..r.end - 1];
            if i % 2 == 1 {
                let ends_nonzero = !block[0].is_zero_symbol() && !block[block.len() - 1].is_zero_symbol();
                if !ends_nonzero || b_weight(block, self.b - 1)? != block.len() {
                    return fail(format!("odd block {i} violates the full (b-1)-weight rule"));
                }
            } else if block.len() < self.b - 1 || block.iter().any(|s| !s.is_zero_symbol()) {
                return fail(format!("even block {i} is not a zero run of length >= b-1"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ShapeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.sizes.len() - 1;
        let interior: Vec<String> = self.sizes[1..last].iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "({} | {} | {})",
            self.sizes[0],
            interior.join(", "),
            self.sizes[last]
        )
    }
}

/// The b-shape of a nonzero vector.
pub fn shape_decompose<S: Symbol>(v: &[S], b: usize) -> Result<ShapeDecomposition, MetricError> {
    if b < 2 {
        return Err(MetricError::InvalidB(b));
    }
    let n = v.len();
    if n == 0 {
        return Err(MetricError::EmptyVector);
    }
    let Some(first) = v.iter().position(|s| !s.is_zero_symbol()) else {
        return Err(MetricError::ZeroVector);
    };
    let last = v.iter().rposition(|s| !s.is_zero_symbol()).unwrap();

    let mut sizes = vec![first];
    let mut odd_start = first;
    let mut i = first;
    while i <= last {
        if !v[i].is_zero_symbol() {
            i += 1;
            continue;
        }
        let run_start = i;
        while v[i].is_zero_symbol() {
            i += 1;
        }
        let run = i - run_start;
        if run >= b - 1 {
            sizes.push(run_start - odd_start);
            sizes.push(run);
            odd_start = i;
        }
    }
    sizes.push(last + 1 - odd_start);
    sizes.push(n - 1 - last);

    let shape = ShapeDecomposition { b, sizes };
    shape.check(v)?;
    Ok(shape)
}

/// The b-weight of any vector with shape `s`, from the block sizes alone.
pub fn weight_from_shape(s: &ShapeDecomposition, n: usize, b: usize) -> Result<usize, MetricError> {
    if s.b() != b {
        return Err(MetricError::InvalidShape(format!(
            "shape was built for b = {}, not {b}",
            s.b()
        )));
    }
    let checked = ShapeDecomposition::from_sizes(b, s.sizes().to_vec())?;
    if checked.n() != n {
        return Err(MetricError::InvalidShape(format!(
            "block sizes sum to {}, expected {n}",
            checked.n()
        )));
    }
    let t = s.t();
    let l = s.l();
    let odd: usize = s.odd_sizes().sum();
    let w = match (t + 2 <= b, l == 1) {
        (true, true) => n,
        (true, false) => t + odd + (l - 1) * (b - 1) / 2,
        (false, true) => n - (t + 1 - b),
        (false, false) => odd + (l + 1) * (b - 1) / 2,
    };
    Ok(w)
}
