//! Ground truth by exhaustive enumeration.
//!
//! Nothing here calls into the closed forms in [`crate::distribution`]; the
//! only shared pieces are field arithmetic, code enumeration and the b-weight
//! definition itself.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::bsymbol::{b_weight, b_weight_profile};
use crate::distribution::{DistributionQuery, FProfile, Mode, WeightDistribution};
use crate::gf::FieldSpec;
use crate::linear_code::{rs_code, CodeError, LinearCode, DEFAULT_ENUMERATION_BOUND};

/// Largest `parts`/`total` accepted by [`brute_compositions`].
pub const COMPOSITION_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("field of order {q} is too small for a length-{needed} Reed–Solomon code")]
    FieldTooSmall { needed: usize, q: u32 },
    #[error("composition parameters exceed the enumeration bound {bound}")]
    BoundExceeded { bound: usize },
    #[error("b must be at least {min}, got {b}")]
    InvalidB { b: usize, min: usize },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

impl OracleError {
    pub fn is_enumeration_too_large(&self) -> bool {
        matches!(self, OracleError::Code(CodeError::EnumerationTooLarge { .. }))
    }
}

/// How a scan is split across workers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub workers: usize,
    /// Messages per chunk; `None` splits the range evenly across workers.
    pub chunk: Option<u128>,
    pub bound: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            chunk: None,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl ScanConfig {
    fn chunks(&self, total: u128) -> Vec<(u128, u128)> {
        let workers = self.workers.max(1) as u128;
        let size = self.chunk.unwrap_or_else(|| total.div_ceil(workers)).max(1);
        let mut out = Vec::new();
        let mut start = 0;
        while start < total {
            let end = (start + size).min(total);
            out.push((start, end));
            start = end;
        }
        out
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> Result<R, OracleError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .map_err(|e| OracleError::Pool(e.to_string()))?;
        Ok(pool.install(job))
    }
}

/// The result of a scan together with its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport<R> {
    pub description: String,
    pub result: R,
    pub elapsed: Duration,
    /// Number of codewords visited.
    pub enumerated: u128,
}

fn add_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

/// Histogram of b-weights over every codeword of `code`.
pub fn brute_distribution(code: &LinearCode, b: usize) -> Result<WeightDistribution<BigInt>, OracleError> {
    Ok(brute_distribution_with(code, b, &ScanConfig::default())?.result)
}

pub fn brute_distribution_with(
    code: &LinearCode,
    b: usize,
    config: &ScanConfig,
) -> Result<OracleReport<WeightDistribution<BigInt>>, OracleError> {
    if b == 0 {
        return Err(OracleError::InvalidB { b, min: 1 });
    }
    let start = Instant::now();
    let total = code.check_enumerable(config.bound)?;
    let n = code.params().n;
    let chunks = config.chunks(total);
    let hist = config.run(|| {
        chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut h = vec![0u64; n + 1];
                let mut scan = code.scanner(lo, hi);
                while let Some(c) = scan.next_reps() {
                    h[b_weight(c, b).expect("nonempty codeword")] += 1;
                }
                h
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, h| {
                    add_into(&mut a, &h);
                    a
                },
            )
    })?;
    let query = DistributionQuery::for_code(code.params(), b);
    let dist = WeightDistribution::new(query, Mode::BruteForce, hist.into_iter().map(BigInt::from).collect())
        .expect("histogram has n + 1 entries");
    Ok(OracleReport {
        description: format!("b = {b} histogram of {:?}", code.params()),
        result: dist,
        elapsed: start.elapsed(),
        enumerated: total,
    })
}

/// Histograms for every `b` in `1..=n` from a single pass.
pub fn brute_distributions_all_b(
    code: &LinearCode,
    config: &ScanConfig,
) -> Result<OracleReport<Vec<WeightDistribution<BigInt>>>, OracleError> {
    let start = Instant::now();
    let total = code.check_enumerable(config.bound)?;
    let n = code.params().n;
    let width = n + 1;
    let chunks = config.chunks(total);
    // row b-1 holds the histogram for window length b
    let hist = config.run(|| {
        chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut h = vec![0u64; n * width];
                let mut scan = code.scanner(lo, hi);
                while let Some(c) = scan.next_reps() {
                    for (row, w) in b_weight_profile(c).into_iter().enumerate() {
                        h[row * width + w] += 1;
                    }
                }
                h
            })
            .reduce(
                || vec![0u64; n * width],
                |mut a, h| {
                    add_into(&mut a, &h);
                    a
                },
            )
    })?;
    let dists = (1..=n)
        .map(|b| {
            let row = &hist[(b - 1) * width..b * width];
            let query = DistributionQuery::for_code(code.params(), b);
            WeightDistribution::new(query, Mode::BruteForce, row.iter().map(|&c| BigInt::from(c)).collect())
                .expect("histogram has n + 1 entries")
        })
        .collect();
    Ok(OracleReport {
        description: format!("all-b histograms of {:?}", code.params()),
        result: dists,
        elapsed: start.elapsed(),
        enumerated: total,
    })
}

/// Counts codewords of the Reed–Solomon code `[L, L-d+1, d]` over
/// `eval_field` whose blocks (of the profile's lengths) start and end with
/// nonzero symbols and whose cyclic (b-1)-weight is `L`.
pub fn brute_f(profile: &FProfile, eval_field: &FieldSpec) -> Result<BigInt, OracleError> {
    let len = profile.total_length();
    if len < profile.d {
        // the only codeword of an [L, <=0] code is zero, which has zero ends
        return Ok(BigInt::from(0));
    }
    if len > eval_field.order() as usize {
        return Err(OracleError::FieldTooSmall {
            needed: len,
            q: eval_field.order(),
        });
    }
    let code = rs_code(eval_field, len, len - profile.d + 1, None)?;
    brute_f_on_code(profile, &code, &ScanConfig::default())
}

/// [`brute_f`] on a caller-supplied MDS code of length `L` and distance `d`.
pub fn brute_f_on_code(profile: &FProfile, code: &LinearCode, config: &ScanConfig) -> Result<BigInt, OracleError> {
    if profile.b < 2 {
        return Err(OracleError::InvalidB { b: profile.b, min: 2 });
    }
    let len = profile.total_length();
    assert_eq!(code.params().n, len, "code length must match the profile");
    let total = code.check_enumerable(config.bound)?;
    // 0-based first and last coordinate of every block
    let mut ends = Vec::with_capacity(profile.lengths.len());
    let mut start = 0;
    for &l in &profile.lengths {
        ends.push((start, start + l - 1));
        start += l;
    }
    let window = profile.b - 1;
    let chunks = config.chunks(total);
    let count = config.run(|| {
        chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut hits = 0u64;
                let mut scan = code.scanner(lo, hi);
                while let Some(c) = scan.next_reps() {
                    let ends_ok = ends.iter().all(|&(a, z)| c[a] != 0 && c[z] != 0);
                    if ends_ok && b_weight(c, window).expect("nonempty") == len {
                        hits += 1;
                    }
                }
                hits
            })
            .sum::<u64>()
    })?;
    Ok(BigInt::from(count))
}

/// Longest coordinate count supported by [`FHistogram`].
pub const F_HISTOGRAM_MAX_LEN: usize = 16;

/// Codewords of one code bucketed by nonzero support and longest cyclic
/// zero run, so that [`brute_f_on_code`] can be answered for every block
/// profile and every b after a single scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FHistogram {
    len: usize,
    // index: support_mask * (len + 1) + longest_zero_run
    buckets: Vec<u64>,
}

impl FHistogram {
    pub fn scan(code: &LinearCode, config: &ScanConfig) -> Result<OracleReport<FHistogram>, OracleError> {
        let start = Instant::now();
        let len = code.params().n;
        if len > F_HISTOGRAM_MAX_LEN {
            return Err(OracleError::BoundExceeded {
                bound: F_HISTOGRAM_MAX_LEN,
            });
        }
        let total = code.check_enumerable(config.bound)?;
        let width = len + 1;
        let size = (1usize << len) * width;
        let chunks = config.chunks(total);
        let buckets = config.run(|| {
            chunks
                .par_iter()
                .map(|&(lo, hi)| {
                    let mut h = vec![0u64; size];
                    let mut scan = code.scanner(lo, hi);
                    while let Some(c) = scan.next_reps() {
                        let mut mask = 0usize;
                        for (i, &x) in c.iter().enumerate() {
                            if x != 0 {
                                mask |= 1 << i;
                            }
                        }
                        h[mask * width + longest_cyclic_zero_run(c)] += 1;
                    }
                    h
                })
                .reduce(
                    || vec![0u64; size],
                    |mut a, h| {
                        add_into(&mut a, &h);
                        a
                    },
                )
        })?;
        Ok(OracleReport {
            description: format!("support/zero-run histogram of {:?}", code.params()),
            result: FHistogram { len, buckets },
            elapsed: start.elapsed(),
            enumerated: total,
        })
    }

    /// Codewords whose blocks (of the given lengths) start and end nonzero
    /// and whose cyclic (b-1)-weight is the full length.
    pub fn count(&self, lengths: &[usize], b: usize) -> Result<BigInt, OracleError> {
        if b < 2 {
            return Err(OracleError::InvalidB { b, min: 2 });
        }
        assert_eq!(
            lengths.iter().sum::<usize>(),
            self.len,
            "profile length must match the code"
        );
        let mut required = 0usize;
        let mut start = 0;
        for &l in lengths {
            required |= 1 << start;
            required |= 1 << (start + l - 1);
            start += l;
        }
        // full (b-1)-weight means no zero run reaches b-1
        let width = self.len + 1;
        let mut hits = 0u64;
        for mask in 0..1usize << self.len {
            if mask & required == required {
                hits += self.buckets[mask * width..mask * width + (b - 1).min(width)]
                    .iter()
                    .sum::<u64>();
            }
        }
        Ok(BigInt::from(hits))
    }
}

fn longest_cyclic_zero_run(c: &[u32]) -> usize {
    let n = c.len();
    let Some(anchor) = c.iter().position(|&x| x != 0) else {
        return n;
    };
    let (mut best, mut run) = (0, 0);
    for step in 1..=n {
        if c[(anchor + step) % n] == 0 {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Number of `parts`-tuples of integers in `[1, b-2]` summing to `total`,
/// by direct enumeration.
pub fn brute_compositions(b: usize, parts: usize, total: usize) -> Result<BigInt, OracleError> {
    if b < 3 {
        return Err(OracleError::InvalidB { b, min: 3 });
    }
    if parts > COMPOSITION_BOUND || total > COMPOSITION_BOUND {
        return Err(OracleError::BoundExceeded {
            bound: COMPOSITION_BOUND,
        });
    }
    fn walk(left_parts: usize, left_total: usize, cap: usize) -> u64 {
        if left_parts == 0 {
            return u64::from(left_total == 0);
        }
        (1..=cap.min(left_total))
            .map(|x| walk(left_parts - 1, left_total - x, cap))
            .sum()
    }
    Ok(BigInt::from(walk(parts, total, b - 2)))
}
