//! Closed-form b-weight distributions of MDS codes.
//!
//! For an `[n, k, d]` MDS code and `d + b - 1 < n`, the number of codewords
//! of b-weight `w` is assembled from shape classes: every nonzero codeword
//! splits into a leading/trailing zero run of combined length `t`, odd
//! blocks of full (b-1)-weight and long interior zero runs. Shortening on
//! the zero blocks leaves an MDS code of distance `d`, so each class count
//! is an `F` value depending only on `(b, d, q)` and the odd block lengths.
//!
//! Outside that range the distribution is either the Hamming one (b = 1)
//! or trivial: when `d + b - 1 >= n` every nonzero codeword has full b-weight,
//! since its longest cyclic zero run has length at most `n - d < b`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::pow;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::counting::{binom, compositions, count_of, n_b, Count, CountingError};
use crate::linear_code::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error("query is not MDS: d = {d} but n - k + 1 = {expected}")]
    NotMdsQuery { d: usize, expected: usize },
    #[error("b must be at least {min}, got {b}")]
    InvalidB { b: usize, min: usize },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
}

impl From<CountingError> for DistributionError {
    fn from(e: CountingError) -> Self {
        match e {
            CountingError::InvalidB { b, min } => DistributionError::InvalidB { b, min },
        }
    }
}

/// Parameters of a b-weight distribution request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistributionQuery {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub b: usize,
}

impl DistributionQuery {
    /// An MDS query; `d` is derived as `n - k + 1`.
    pub fn mds(q: u64, n: usize, k: usize, b: usize) -> Result<Self, DistributionError> {
        if q < 2 {
            return Err(DistributionError::InvalidQuery(format!("field order {q} < 2")));
        }
        if k == 0 || k > n {
            return Err(DistributionError::InvalidQuery(format!(
                "dimension {k} invalid for length {n}"
            )));
        }
        if b == 0 {
            return Err(DistributionError::InvalidB { b, min: 1 });
        }
        Ok(DistributionQuery {
            q,
            n,
            k,
            d: n - k + 1,
            b,
        })
    }

    /// Describes an arbitrary linear code; `d` is taken as given.
    pub fn for_code(params: CodeParams, b: usize) -> Self {
        DistributionQuery {
            q: params.q as u64,
            n: params.n,
            k: params.k,
            d: params.d,
            b,
        }
    }

    pub fn is_mds(&self) -> bool {
        self.k >= 1 && self.k <= self.n && self.d == self.n + 1 - self.k
    }

    pub fn with_b(self, b: usize) -> Self {
        DistributionQuery { b, ..self }
    }

    /// `q^k`, the number of codewords.
    pub fn code_size<T: Count>(&self) -> T {
        pow(count_of::<T>(self.q), self.k)
    }
}

/// How a distribution was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ClosedForm,
    BruteForce,
    SpecialCase,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::ClosedForm => "closed-form",
            Mode::BruteForce => "brute-force",
            Mode::SpecialCase => "special-case",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "closed-form" => Ok(Mode::ClosedForm),
            "brute-force" => Ok(Mode::BruteForce),
            "special-case" => Ok(Mode::SpecialCase),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Counts of codewords for every weight `w` in `[0, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution<T> {
    query: DistributionQuery,
    mode: Mode,
    counts: Vec<T>,
}

impl<T: Count> WeightDistribution<T> {
    /// `counts[w]` for `w = 0..=n`.
    pub fn new(query: DistributionQuery, mode: Mode, counts: Vec<T>) -> Result<Self, DistributionError> {
        if counts.len() != query.n + 1 {
            return Err(DistributionError::InvalidQuery(format!(
                "expected {} counts, got {}",
                query.n + 1,
                counts.len()
            )));
        }
        if counts.iter().any(|c| c.is_negative()) {
            return Err(DistributionError::InvalidQuery("negative count".into()));
        }
        Ok(WeightDistribution { query, mode, counts })
    }

    pub fn query(&self) -> &DistributionQuery {
        &self.query
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn counts(&self) -> &[T] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> T {
        self.counts.get(w).cloned().unwrap_or_else(T::zero)
    }

    pub fn total(&self) -> T {
        self.counts.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Smallest positive weight with a nonzero count.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| !self.counts[w].is_zero())
    }

    /// First weight where the two distributions disagree.
    pub fn first_difference(&self, other: &WeightDistribution<T>) -> Option<(usize, T, T)> {
        let len = self.counts.len().max(other.counts.len());
        (0..len)
            .map(|w| (w, self.count(w), other.count(w)))
            .find(|(_, a, b)| a != b)
    }

    pub fn same_counts(&self, other: &WeightDistribution<T>) -> bool {
        self.counts == other.counts
    }
}

/// Number of codewords of full weight `m` in an `[m, m-d+1, d]` MDS code
/// over GF(q); zero when `m < d`.
pub fn hamming_count<T: Count>(m: usize, d: usize, q: u64) -> T {
    if m < d || m == 0 {
        return T::zero();
    }
    let q = count_of::<T>(q);
    let mut acc = T::zero();
    for j in 0..=m - d {
        let term = binom::<T>(m as i64, j as i64) * (pow(q.clone(), m + 1 - d - j) - T::one());
        if j % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Hamming weight distribution of an `[n, k, d]` MDS code.
pub fn hamming_distribution<T: Count>(q: u64, n: usize, d: usize) -> Vec<T> {
    let mut counts = vec![T::zero(); n + 1];
    counts[0] = T::one();
    for (i, slot) in counts.iter_mut().enumerate().skip(d.max(1)) {
        *slot = binom::<T>(n as i64, i as i64) * hamming_count::<T>(i, d, q);
    }
    counts
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Number of zero/nonzero patterns of length `block` with `nonzero` nonzero
/// positions, nonzero first and last position, and no zero run of length
/// `b-1` or more.
pub fn f_weight<T: Count>(b: usize, block: usize, nonzero: usize) -> Result<T, DistributionError> {
    if b < 3 {
        return Err(DistributionError::InvalidB { b, min: 3 });
    }
    if nonzero == 0 || nonzero > block {
        return Ok(T::zero());
    }
    if nonzero < ceil_div(block + b - 2, b - 1) {
        return Ok(T::zero());
    }
    let zeros = block - nonzero;
    let lo = ceil_div(zeros, b - 2);
    let hi = (nonzero - 1).min(zeros);
    let mut acc = T::zero();
    for gaps in lo..=hi {
        acc = acc + binom::<T>(nonzero as i64 - 1, gaps as i64) * n_b::<T>(b, gaps as i64, zeros as i64)?;
    }
    Ok(acc)
}

/// Arguments of the F counting function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FProfile {
    pub b: usize,
    pub d: usize,
    pub q: u64,
    pub lengths: Vec<usize>,
}

impl FProfile {
    pub fn new(b: usize, d: usize, q: u64, lengths: Vec<usize>) -> Result<Self, DistributionError> {
        if b < 2 {
            return Err(DistributionError::InvalidB { b, min: 2 });
        }
        if d == 0 {
            return Err(DistributionError::InvalidProfile("d must be positive".into()));
        }
        if lengths.is_empty() || lengths.contains(&0) {
            return Err(DistributionError::InvalidProfile(
                "lengths must be a nonempty list of positive integers".into(),
            ));
        }
        Ok(FProfile { b, d, q, lengths })
    }

    pub fn total_length(&self) -> usize {
        self.lengths.iter().sum()
    }
}

/// Evaluates F for fixed `(b, d, q)`, memoizing on the sorted lengths.
///
/// F counts the codewords of an `[L, L-d+1, d]` MDS code (`L = sum of
/// lengths`) whose blocks start and end with nonzero symbols and whose cyclic
/// (b-1)-weight is `L`.
#[derive(Debug, Clone)]
pub struct FCalculator<T> {
    b: usize,
    d: usize,
    q: u64,
    memo: HashMap<Vec<usize>, T>,
    // block length -> f_weight(b, L, m) for m = 0..=L
    block_weights: HashMap<usize, Vec<T>>,
    hamming: Vec<T>,
}

impl<T: Count> FCalculator<T> {
    pub fn new(b: usize, d: usize, q: u64) -> Result<Self, DistributionError> {
        if b < 2 {
            return Err(DistributionError::InvalidB { b, min: 2 });
        }
        Ok(FCalculator {
            b,
            d,
            q,
            memo: HashMap::new(),
            block_weights: HashMap::new(),
            hamming: Vec::new(),
        })
    }

    fn hamming(&mut self, m: usize) -> T {
        while self.hamming.len() <= m {
            let next = hamming_count(self.hamming.len(), self.d, self.q);
            self.hamming.push(next);
        }
        self.hamming[m].clone()
    }

    fn block_weights(&mut self, len: usize) -> &[T] {
        let b = self.b;
        self.block_weights.entry(len).or_insert_with(|| {
            (0..=len)
                .map(|m| f_weight(b, len, m).expect("b >= 3 checked by caller"))
                .collect()
        })
    }

    pub fn value(&mut self, lengths: &[usize]) -> T {
        let mut key = lengths.to_vec();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let total: usize = key.iter().sum();
        let value = if self.b == 2 {
            self.hamming(total)
        } else {
            // by_nonzero[s] = sum over (m_1..m_I) with sum s of prod_i f(L_i, m_i)
            let mut by_nonzero = vec![T::one()];
            for &len in &key {
                let weights = self.block_weights(len).to_vec();
                let mut next = vec![T::zero(); by_nonzero.len() + len];
                for (s, acc) in by_nonzero.iter().enumerate() {
                    if acc.is_zero() {
                        continue;
                    }
                    for (m, w) in weights.iter().enumerate() {
                        if !w.is_zero() {
                            next[s + m] = next[s + m].clone() + acc.clone() * w.clone();
                        }
                    }
                }
                by_nonzero = next;
            }
            let mut acc = T::zero();
            for (s, ways) in by_nonzero.into_iter().enumerate() {
                if !ways.is_zero() {
                    acc = acc + ways * self.hamming(s);
                }
            }
            acc
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// F for a single profile.
pub fn f_count<T: Count>(profile: &FProfile) -> Result<T, DistributionError> {
    let profile = FProfile::new(profile.b, profile.d, profile.q, profile.lengths.clone())?;
    let mut calc = FCalculator::new(profile.b, profile.d, profile.q)?;
    Ok(calc.value(&profile.lengths))
}

/// Upper limits of the two composition sums at weight `w`, kept exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SummationBounds {
    /// `min{(w-t-1)/b, (w-t-d)/(b-1)}`
    pub m1: Ratio<i64>,
    /// `min{(w-b)/b, (w-d)/(b-1) - 1}`
    pub m2: Ratio<i64>,
    pub delta_n: bool,
}

impl SummationBounds {
    pub fn new(w: usize, t: usize, b: usize, d: usize, n: usize) -> Self {
        let (w, t, b, d) = (w as i64, t as i64, b as i64, d as i64);
        let m1 = Ratio::new(w - t - 1, b).min(Ratio::new(w - t - d, b - 1));
        let m2 = Ratio::new(w - b, b).min(Ratio::new(w - d, b - 1) - Ratio::from_integer(1));
        SummationBounds {
            m1,
            m2,
            delta_n: w == n as i64,
        }
    }

    pub fn m1_floor(&self) -> i64 {
        self.m1.floor().to_integer()
    }

    pub fn m2_floor(&self) -> i64 {
        self.m2.floor().to_integer()
    }
}

fn composition_sum<T: Count>(calc: &mut FCalculator<T>, total: i64, parts: usize) -> T {
    if total < parts as i64 {
        return T::zero();
    }
    let mut acc = T::zero();
    for c in compositions(total as usize, parts) {
        acc = acc + calc.value(c.parts());
    }
    acc
}

fn closed_form_count<T: Count>(calc: &mut FCalculator<T>, q: &DistributionQuery, w: usize) -> T {
    let DistributionQuery { n, d, b, .. } = *q;
    let (ni, wi, bi) = (n as i64, w as i64, b as i64);
    let mut acc = T::zero();

    // single interior block, end runs shorter than b-1
    if w == n {
        for t in 0..=b - 2 {
            acc = acc + count_of::<T>(t as u64 + 1) * calc.value(&[n - t]);
        }
    }
    // single interior block, end runs of length >= b-1
    acc = acc + count_of::<T>((n - w + b) as u64) * calc.value(&[w + 1 - b]);

    for t in 0..=b - 2 {
        let bounds = SummationBounds::new(w, t, b, d, n);
        for i in 1..=bounds.m1_floor() {
            let gaps = binom::<T>(ni - wi + i - 1, i - 1);
            if gaps.is_zero() {
                continue;
            }
            let odd = composition_sum(calc, wi - t as i64 - i * (bi - 1), i as usize + 1);
            acc = acc + count_of::<T>(t as u64 + 1) * gaps * odd;
        }
    }

    let bounds = SummationBounds::new(w, 0, b, d, n);
    for t in (b - 1)..=(n - w + b - 1) {
        let ti = t as i64;
        for i in 1..=bounds.m2_floor() {
            let gaps = binom::<T>(ni - wi - ti + bi + i - 2, i - 1);
            if gaps.is_zero() {
                continue;
            }
            let odd = composition_sum(calc, wi - (i + 1) * (bi - 1), i as usize + 1);
            acc = acc + count_of::<T>(t as u64 + 1) * gaps * odd;
        }
    }
    acc
}

/// Which formula [`b_distribution`] uses for a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// b = 1: the MDS Hamming weight distribution.
    Hamming,
    /// `d + b - 1 >= n`: every nonzero codeword has b-weight n.
    FullWeight,
    /// `d + b - 1 < n`: the shape-class sum.
    ShapeSum,
}

impl Regime {
    pub fn of(query: &DistributionQuery) -> Regime {
        if query.b == 1 {
            Regime::Hamming
        } else if query.d + query.b > query.n {
            Regime::FullWeight
        } else {
            Regime::ShapeSum
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Regime::FullWeight => Mode::SpecialCase,
            _ => Mode::ClosedForm,
        }
    }
}

/// The b-weight distribution of any `[n, k, n-k+1]` MDS code over GF(q).
pub fn b_distribution<T: Count>(query: &DistributionQuery) -> Result<WeightDistribution<T>, DistributionError> {
    if !query.is_mds() {
        return Err(DistributionError::NotMdsQuery {
            d: query.d,
            expected: (query.n + 1).saturating_sub(query.k),
        });
    }
    if query.b == 0 {
        return Err(DistributionError::InvalidB { b: 0, min: 1 });
    }
    let DistributionQuery { q, n, d, b, .. } = *query;
    let regime = Regime::of(query);
    let counts = match regime {
        Regime::Hamming => hamming_distribution(q, n, d),
        Regime::FullWeight => {
            let mut counts = vec![T::zero(); n + 1];
            counts[0] = T::one();
            counts[n] = query.code_size::<T>() - T::one();
            counts
        }
        Regime::ShapeSum => {
            let mut calc = FCalculator::new(b, d, q)?;
            let mut counts = vec![T::zero(); n + 1];
            counts[0] = T::one();
            for (w, slot) in counts.iter_mut().enumerate().skip(d + b - 1) {
                *slot = closed_form_count(&mut calc, query, w);
            }
            counts
        }
    };
    WeightDistribution::new(*query, regime.mode(), counts)
}

/// The symbol-pair (b = 2) distribution of an MDS code in its classical
/// closed form, coded independently of the general shape sum.
pub fn symbol_pair_distribution<T: Count>(q: u64, n: usize, k: usize) -> Vec<T> {
    let d = n + 1 - k;
    let (ni, di) = (n as i64, d as i64);
    let a = |m: i64| -> T {
        if m < 0 {
            T::zero()
        } else {
            hamming_count(m as usize, d, q)
        }
    };
    let mut counts = vec![T::zero(); n + 1];
    counts[0] = T::one();
    for (w, slot) in counts.iter_mut().enumerate().skip(d + 1) {
        let wi = w as i64;
        let mut acc = if w == n { a(ni) } else { T::zero() };
        let m1 = ((wi - 1).div_euclid(2)).min(wi - di);
        for i in 1..=m1 {
            acc = acc + binom::<T>(ni - wi + i - 1, i - 1) * binom::<T>(wi - i - 1, i) * a(wi - i);
        }
        let m2 = ((wi - 2).div_euclid(2)).min(wi - di - 1);
        for i in 1..=m2 + 1 {
            let outer = count_of::<T>(2) * binom::<T>(ni - wi + i - 1, i - 1) + binom::<T>(ni - wi + i - 1, i);
            acc = acc + outer * binom::<T>(wi - i - 1, i - 1) * a(wi - i);
        }
        *slot = acc;
    }
    counts
}

/// Outcome of one identity in a [`CorollaryReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Pass { value: T },
    Fail { expected: T, actual: T },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck<T> {
    pub name: &'static str,
    pub outcome: Outcome<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport<T> {
    pub query: DistributionQuery,
    pub checks: Vec<IdentityCheck<T>>,
}

impl<T: Count> CorollaryReport<T> {
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(|c| matches!(c.outcome, Outcome::Fail { .. }))
    }

    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Pass { .. }))
            .count()
    }

    pub fn get(&self, name: &str) -> Option<&Outcome<T>> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }
}

impl<T: Count> fmt::Display for CorollaryReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.outcome {
                Outcome::Pass { value } => writeln!(f, "  PASS {}: {}", check.name, value)?,
                Outcome::Fail { expected, actual } => {
                    writeln!(f, "  FAIL {}: expected {}, got {}", check.name, expected, actual)?
                }
                Outcome::Skipped { reason } => writeln!(f, "  SKIP {}: {}", check.name, reason)?,
            }
        }
        Ok(())
    }
}

fn compare<T: Count>(name: &'static str, expected: T, actual: T) -> IdentityCheck<T> {
    let outcome = if expected == actual {
        Outcome::Pass { value: actual }
    } else {
        Outcome::Fail { expected, actual }
    };
    IdentityCheck { name, outcome }
}

fn skipped<T>(name: &'static str, reason: impl Into<String>) -> IdentityCheck<T> {
    IdentityCheck {
        name,
        outcome: Outcome::Skipped { reason: reason.into() },
    }
}

pub const COMPLETENESS: &str = "completeness";
pub const MIN_B_DISTANCE: &str = "min-b-distance";
pub const SYMBOL_PAIR: &str = "symbol-pair-closed-form";
pub const FIRST_NONZERO: &str = "first-nonzero-weight";
pub const FULL_WEIGHT_GENERAL: &str = "full-weight-d-plus-b";
pub const FULL_WEIGHT_B3: &str = "full-weight-b3-k4";

/// Evaluates every corollary identity that applies to `query` and compares
/// it with [`b_distribution`].
pub fn corollary_check<T: Count>(query: &DistributionQuery) -> CorollaryReport<T> {
    let DistributionQuery { q, n, k, d, b } = *query;
    let names = [
        COMPLETENESS,
        MIN_B_DISTANCE,
        SYMBOL_PAIR,
        FIRST_NONZERO,
        FULL_WEIGHT_GENERAL,
        FULL_WEIGHT_B3,
    ];
    let dist = match b_distribution::<T>(query) {
        Ok(dist) => dist,
        Err(e) => {
            let reason = e.to_string();
            return CorollaryReport {
                query: *query,
                checks: names.iter().map(|&name| skipped(name, reason.clone())).collect(),
            };
        }
    };
    let qt = count_of::<T>(q);
    let nt = count_of::<T>(n as u64);
    let dt = count_of::<T>(d as u64);
    let mut checks = Vec::new();

    checks.push(compare(COMPLETENESS, query.code_size::<T>(), dist.total()));

    checks.push(if d + b - 1 <= n {
        let expected = count_of::<T>((d + b - 1) as u64);
        let actual = dist
            .min_positive_weight()
            .map_or_else(T::zero, |w| count_of::<T>(w as u64));
        compare(MIN_B_DISTANCE, expected, actual)
    } else {
        skipped(MIN_B_DISTANCE, "d + b - 1 > n")
    });

    checks.push(if b != 2 {
        skipped(SYMBOL_PAIR, "applies to b = 2 only")
    } else if k < 2 {
        skipped(SYMBOL_PAIR, "needs d + 1 <= n")
    } else {
        let independent = symbol_pair_distribution::<T>(q, n, k);
        match (0..=n).find(|&w| independent[w] != dist.count(w)) {
            None => compare(
                SYMBOL_PAIR,
                dist.total(),
                independent.iter().fold(T::zero(), |a, c| a + c.clone()),
            ),
            Some(w) => compare(SYMBOL_PAIR, independent[w].clone(), dist.count(w)),
        }
    });

    checks.push(if b >= 2 && d + b - 1 < n {
        let expected = nt.clone() * (qt.clone() - T::one());
        compare(FIRST_NONZERO, expected, dist.count(d + b - 1))
    } else {
        skipped(FIRST_NONZERO, "needs b >= 2 and d + b - 1 < n")
    });

    checks.push(if b >= 3 && d >= 3 && n == d + b && k == b + 1 {
        match FCalculator::<T>::new(b, d, q) {
            Ok(mut calc) => {
                let mut expected = T::zero();
                for t in 0..b {
                    expected = expected + count_of::<T>(t as u64 + 1) * calc.value(&[n - t]);
                }
                expected = expected
                    + dt.clone() * hamming_count::<T>(d + 1, d, q)
                    + count_of::<T>(((d - 1) * d) as u64) * hamming_count::<T>(d, d, q);
                compare(FULL_WEIGHT_GENERAL, expected, dist.count(n))
            }
            Err(e) => skipped(FULL_WEIGHT_GENERAL, e.to_string()),
        }
    } else {
        skipped(FULL_WEIGHT_GENERAL, "needs b >= 3, d >= 3 and an [d+b, b+1, d] code")
    });

    checks.push(if b == 3 && d >= 3 && n == d + 3 && k == 4 {
        let expected = pow(qt.clone(), 4) - count_of::<T>((d + 3) as u64) * qt + dt + count_of::<T>(2);
        compare(FULL_WEIGHT_B3, expected, dist.count(n))
    } else {
        skipped(FULL_WEIGHT_B3, "needs b = 3, d >= 3 and a [d+3, 4, d] code")
    });

    CorollaryReport { query: *query, checks }
}
