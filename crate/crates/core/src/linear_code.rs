//! Linear codes over GF(q): Reed–Solomon construction, encoding,
//! exhaustive enumeration, shortening and brute-force minimum distance.
//!
//! Coordinates are 1-indexed wherever they cross the public API.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldDescriptor, FieldElement, FieldSpec, GfError};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("n exceeds field order (n = {n}, q = {q})")]
    LengthExceedsField { n: usize, q: u32 },
    #[error("evaluation points must be distinct")]
    DuplicateEvalPoints,
    #[error("invalid dimension k = {k} for length n = {n}")]
    InvalidDimension { n: usize, k: usize },
    #[error("expected {expected} symbols, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("enumeration of {count} codewords exceeds the bound {bound}")]
    EnumerationTooLarge { count: u128, bound: u64 },
    #[error("cannot shorten on {s} coordinates of a dimension-{k} code")]
    ShortenTooLarge { s: usize, k: usize },
    #[error("operation requires an MDS code")]
    NotMds,
    #[error("invalid coordinate set: {0}")]
    InvalidCoordinates(String),
    #[error("generator rows are linearly dependent (rank {rank} < k = {k})")]
    RankDeficient { rank: usize, k: usize },
    #[error("malformed generator matrix: {0}")]
    Malformed(String),
    #[error("cannot read generator file: {0}")]
    Io(String),
}

/// `[n, k, d]_q` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
}

impl CodeParams {
    pub fn is_mds(&self) -> bool {
        self.d == self.n + 1 - self.k
    }
}

/// A strictly increasing set of 1-indexed coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoordinateSet {
    indices: Vec<usize>,
}

impl CoordinateSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self, CodeError> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(CodeError::InvalidCoordinates(format!("{bad} is outside [1, {n}]")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CodeError::InvalidCoordinates(
                "indices must be strictly increasing".into(),
            ));
        }
        Ok(CoordinateSet { indices })
    }

    pub fn empty() -> Self {
        CoordinateSet::default()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// A codeword of some [`LinearCode`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    coords: Vec<FieldElement>,
}

impl Codeword {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn reps(&self) -> Vec<u32> {
        self.coords.iter().map(FieldElement::rep).collect()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn hamming_weight(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }
}

/// A linear code given by a full-rank `k x n` generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    generator: Vec<Vec<u32>>,
    params: CodeParams,
    mds: bool,
}

/// JSON form of a generator-matrix file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub rows: Vec<Vec<u64>>,
    #[serde(default)]
    pub assert_mds: bool,
}

/// Builds the Reed–Solomon code `{(f(a_1), ..., f(a_n)) : deg f < k}`.
///
/// Without explicit points the first `n` field elements in rep order are
/// used, starting with zero.
pub fn rs_code(
    field: &FieldSpec,
    n: usize,
    k: usize,
    eval_points: Option<&[FieldElement]>,
) -> Result<LinearCode, CodeError> {
    let q = field.order();
    if n as u64 > q as u64 {
        return Err(CodeError::LengthExceedsField { n, q });
    }
    if k == 0 || k > n {
        return Err(CodeError::InvalidDimension { n, k });
    }
    let points: Vec<u32> = match eval_points {
        Some(pts) => {
            if pts.len() != n {
                return Err(CodeError::DimensionMismatch {
                    expected: n,
                    got: pts.len(),
                });
            }
            if pts.iter().any(|p| p.field() != field) {
                return Err(GfError::FieldMismatch.into());
            }
            let mut reps: Vec<u32> = pts.iter().map(FieldElement::rep).collect();
            reps.sort_unstable();
            if reps.windows(2).any(|w| w[0] == w[1]) {
                return Err(CodeError::DuplicateEvalPoints);
            }
            pts.iter().map(FieldElement::rep).collect()
        }
        None => (0..n as u32).collect(),
    };
    let generator = (0..k)
        .map(|i| points.iter().map(|&a| field.pow_rep(a, i as u64)).collect())
        .collect();
    Ok(LinearCode {
        field: field.clone(),
        generator,
        params: CodeParams { n, k, d: n - k + 1, q },
        mds: true,
    })
}

/// Row-reduces `rows` in place and returns the pivot column of each
/// pivot row, in order. Rows without pivots end up zero at the bottom.
fn row_reduce(field: &FieldSpec, rows: &mut [Vec<u32>], columns: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for &col in columns {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(next, found);
        let inv = field.inv_rep(rows[next][col]).expect("nonzero pivot");
        for v in rows[next].iter_mut() {
            *v = field.mul_reps(*v, inv);
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col] == 0 {
                continue;
            }
            let factor = field.neg_rep(row[col]);
            for (v, &p) in row.iter_mut().zip(&pivot_row) {
                *v = field.add_reps(*v, field.mul_reps(factor, p));
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Rank of a set of vectors over `field`.
pub fn rank(field: &FieldSpec, rows: &[Vec<u32>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut work = rows.to_vec();
    let cols: Vec<usize> = (0..rows[0].len()).collect();
    row_reduce(field, &mut work, &cols).len()
}

impl LinearCode {
    /// Builds a code from generator reps, checking rank and computing the
    /// minimum distance by enumeration (bounded by `bound` codewords).
    pub fn from_generator(field: &FieldSpec, rows: Vec<Vec<u32>>, bound: u64) -> Result<LinearCode, CodeError> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if k == 0 || n == 0 || k > n {
            return Err(CodeError::InvalidDimension { n, k });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(CodeError::Malformed("rows have different lengths".into()));
        }
        let q = field.order();
        if let Some(&bad) = rows.iter().flatten().find(|&&v| v >= q) {
            return Err(GfError::InvalidRep {
                rep: bad as u64,
                order: q as u64,
            }
            .into());
        }
        let r = rank(field, &rows);
        if r < k {
            return Err(CodeError::RankDeficient { rank: r, k });
        }
        let mut code = LinearCode {
            field: field.clone(),
            generator: rows,
            params: CodeParams { n, k, d: 0, q },
            mds: false,
        };
        let d = code.min_distance_with_bound(bound)?;
        code.params.d = d;
        code.mds = code.params.is_mds();
        Ok(code)
    }

    /// Parses a generator-matrix JSON document.
    pub fn from_json_str(json: &str, bound: u64) -> Result<LinearCode, CodeError> {
        let file: GeneratorFile = serde_json::from_str(json).map_err(|e| CodeError::Malformed(e.to_string()))?;
        Self::from_generator_file(&file, bound)
    }

    pub fn from_generator_file(file: &GeneratorFile, bound: u64) -> Result<LinearCode, CodeError> {
        let field = FieldSpec::from_descriptor(&file.field)?;
        if file.rows.len() != file.k {
            return Err(CodeError::Malformed(format!(
                "k = {} but {} rows given",
                file.k,
                file.rows.len()
            )));
        }
        if file.rows.iter().any(|r| r.len() != file.n) {
            return Err(CodeError::Malformed(format!(
                "every row must have n = {} entries",
                file.n
            )));
        }
        let q = field.order() as u64;
        let rows = file
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        if v < q {
                            Ok(v as u32)
                        } else {
                            Err(CodeError::Field(GfError::InvalidRep { rep: v, order: q }))
                        }
                    })
                    .collect::<Result<Vec<u32>, CodeError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let code = Self::from_generator(&field, rows, bound)?;
        if file.assert_mds && !code.mds {
            return Err(CodeError::NotMds);
        }
        Ok(code)
    }

    pub fn load(path: impl AsRef<Path>, bound: u64) -> Result<LinearCode, CodeError> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| CodeError::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json_str(&text, bound)
    }

    pub fn to_generator_file(&self) -> GeneratorFile {
        GeneratorFile {
            field: self.field.descriptor(),
            n: self.params.n,
            k: self.params.k,
            rows: self
                .generator
                .iter()
                .map(|r| r.iter().map(|&v| v as u64).collect())
                .collect(),
            assert_mds: self.mds,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn params(&self) -> CodeParams {
        self.params
    }

    pub fn is_mds(&self) -> bool {
        self.mds
    }

    pub fn generator(&self) -> &[Vec<u32>] {
        &self.generator
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        (self.params.q as u128).saturating_pow(self.params.k as u32)
    }

    pub fn check_enumerable(&self, bound: u64) -> Result<u128, CodeError> {
        let count = self.size();
        if count > bound as u128 {
            Err(CodeError::EnumerationTooLarge { count, bound })
        } else {
            Ok(count)
        }
    }

    /// Encodes reps of a message; the caller guarantees length and range.
    pub fn encode_reps(&self, message: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.params.n];
        for (row, &m) in self.generator.iter().zip(message) {
            if m == 0 {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = self.field.add_reps(*o, self.field.mul_reps(m, g));
            }
        }
        out
    }

    /// `message x generator`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Codeword, CodeError> {
        if message.len() != self.params.k {
            return Err(CodeError::DimensionMismatch {
                expected: self.params.k,
                got: message.len(),
            });
        }
        if message.iter().any(|m| m.field() != &self.field) {
            return Err(GfError::FieldMismatch.into());
        }
        let reps: Vec<u32> = message.iter().map(FieldElement::rep).collect();
        Ok(self.codeword_from_reps(&self.encode_reps(&reps)))
    }

    fn codeword_from_reps(&self, reps: &[u32]) -> Codeword {
        Codeword {
            coords: reps
                .iter()
                .map(|&r| self.field.element(r as u64).expect("rep in range"))
                .collect(),
        }
    }

    /// A rep-level scanner over the message range `[start, end)`.
    ///
    /// Message index `i` is the base-q number whose most significant digit
    /// is the first message symbol, so index order is lexicographic order.
    pub fn scanner(&self, start: u128, end: u128) -> Scanner<'_> {
        Scanner::new(self, start, end.min(self.size()))
    }

    /// All codewords in message-index order, zero first.
    pub fn codewords(&self) -> Result<Codewords<'_>, CodeError> {
        self.codewords_from(0, DEFAULT_ENUMERATION_BOUND)
    }

    /// Codewords starting at message index `start`.
    pub fn codewords_from(&self, start: u128, bound: u64) -> Result<Codewords<'_>, CodeError> {
        let total = self.check_enumerable(bound)?;
        Ok(Codewords {
            scanner: self.scanner(start, total),
        })
    }

    /// Shortens an MDS code on the coordinates `s`.
    ///
    /// Keeps the codewords vanishing on `s` and deletes those coordinates.
    pub fn shorten(&self, s: &CoordinateSet) -> Result<LinearCode, CodeError> {
        let CodeParams { n, k, d, q } = self.params;
        if !self.mds {
            return Err(CodeError::NotMds);
        }
        if s.len() >= k {
            return Err(CodeError::ShortenTooLarge { s: s.len(), k });
        }
        if s.indices().iter().any(|&i| i == 0 || i > n) {
            return Err(CodeError::InvalidCoordinates(format!(
                "coordinates must lie in [1, {n}]"
            )));
        }
        let cols: Vec<usize> = s.indices().iter().map(|&i| i - 1).collect();
        let mut rows = self.generator.clone();
        let pivots = row_reduce(&self.field, &mut rows, &cols);
        if pivots.len() != cols.len() {
            // any k columns of an MDS generator are independent
            return Err(CodeError::NotMds);
        }
        let generator: Vec<Vec<u32>> = rows
            .into_iter()
            .skip(pivots.len())
            .map(|row| {
                row.into_iter()
                    .enumerate()
                    .filter(|(j, _)| !s.contains(j + 1))
                    .map(|(_, v)| v)
                    .collect()
            })
            .collect();
        Ok(LinearCode {
            field: self.field.clone(),
            generator,
            params: CodeParams {
                n: n - s.len(),
                k: k - s.len(),
                d,
                q,
            },
            mds: true,
        })
    }

    /// Minimum Hamming weight over nonzero codewords, by enumeration.
    pub fn min_distance_bruteforce(&self) -> Result<usize, CodeError> {
        self.min_distance_with_bound(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn min_distance_with_bound(&self, bound: u64) -> Result<usize, CodeError> {
        let total = self.check_enumerable(bound)?;
        let mut scan = self.scanner(1, total);
        let mut best = self.params.n;
        while let Some(c) = scan.next_reps() {
            let w = c.iter().filter(|&&x| x != 0).count();
            best = best.min(w);
        }
        Ok(best)
    }

    /// Checks that every set of k generator columns is independent.
    pub fn all_k_columns_independent(&self) -> bool {
        let CodeParams { n, k, .. } = self.params;
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let sub: Vec<Vec<u32>> = self
                .generator
                .iter()
                .map(|row| pick.iter().map(|&j| row[j]).collect())
                .collect();
            if rank(&self.field, &sub) < k {
                return false;
            }
            // next k-subset of [0, n)
            let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
                return true;
            };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
}

// Add/multiply tables are built only when they stay small.
const TABLE_LIMIT: usize = 1 << 22;

/// Lending scanner over a range of message indices, producing codeword reps.
pub struct Scanner<'a> {
    code: &'a LinearCode,
    next_index: u128,
    end: u128,
    digits: Vec<u32>,
    // partial[j] = sum_{i<j} digits[i] * g_i
    partial: Vec<Vec<u32>>,
    // multiples[j][a * n + c] = (a * g_j)_c
    multiples: Option<Vec<Vec<u32>>>,
    add_table: Option<Vec<u32>>,
    started: bool,
}

impl<'a> Scanner<'a> {
    fn new(code: &'a LinearCode, start: u128, end: u128) -> Self {
        let CodeParams { n, k, q, .. } = code.params;
        let q_us = q as usize;
        let multiples = (k * q_us * n <= TABLE_LIMIT).then(|| {
            code.generator
                .iter()
                .map(|row| {
                    let mut t = Vec::with_capacity(q_us * n);
                    for a in 0..q {
                        t.extend(row.iter().map(|&g| code.field.mul_reps(a, g)));
                    }
                    t
                })
                .collect()
        });
        let add_table = (q_us * q_us <= TABLE_LIMIT && code.field.degree() > 1).then(|| {
            let mut t = Vec::with_capacity(q_us * q_us);
            for a in 0..q {
                for b in 0..q {
                    t.push(code.field.add_reps(a, b));
                }
            }
            t
        });
        Scanner {
            code,
            next_index: start,
            end,
            digits: vec![0; k],
            partial: vec![vec![0; n]; k + 1],
            multiples,
            add_table,
            started: false,
        }
    }

    /// Message index of the codeword the next call returns.
    pub fn position(&self) -> u128 {
        self.next_index
    }

    /// Digits of the message most recently returned.
    pub fn message(&self) -> &[u32] {
        &self.digits
    }

    fn refresh_from(&mut self, level: usize) {
        let n = self.code.params.n;
        let field = &self.code.field;
        for j in level..self.digits.len() {
            let a = self.digits[j];
            let (head, tail) = self.partial.split_at_mut(j + 1);
            let src = &head[j];
            let dst = &mut tail[0];
            if a == 0 {
                dst.copy_from_slice(src);
                continue;
            }
            match &self.multiples {
                Some(m) => {
                    let mult = &m[j][a as usize * n..(a as usize + 1) * n];
                    for c in 0..n {
                        dst[c] = add(field, self.add_table.as_deref(), src[c], mult[c]);
                    }
                }
                None => {
                    let row = &self.code.generator[j];
                    for c in 0..n {
                        let prod = field.mul_reps(a, row[c]);
                        dst[c] = add(field, self.add_table.as_deref(), src[c], prod);
                    }
                }
            }
        }
    }

    /// Reps of the next codeword, or `None` once the range is exhausted.
    pub fn next_reps(&mut self) -> Option<&[u32]> {
        if self.next_index >= self.end {
            return None;
        }
        let q = self.code.params.q;
        let k = self.digits.len();
        if !self.started {
            let mut idx = self.next_index;
            for d in self.digits.iter_mut().rev() {
                *d = (idx % q as u128) as u32;
                idx /= q as u128;
            }
            self.refresh_from(0);
            self.started = true;
        } else {
            // odometer increment; the least significant digit is last
            let mut j = k;
            while j > 0 {
                j -= 1;
                self.digits[j] += 1;
                if self.digits[j] < q {
                    break;
                }
                self.digits[j] = 0;
            }
            self.refresh_from(j);
        }
        self.next_index += 1;
        Some(&self.partial[k])
    }
}

#[inline]
fn add(field: &FieldSpec, table: Option<&[u32]>, a: u32, b: u32) -> u32 {
    match table {
        Some(t) => t[a as usize * field.order() as usize + b as usize],
        None => field.add_reps(a, b),
    }
}

/// Iterator over codewords as owned [`Codeword`] values.
pub struct Codewords<'a> {
    scanner: Scanner<'a>,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        let code = self.scanner.code;
        let reps = self.scanner.next_reps()?.to_vec();
        Some(code.codeword_from_reps(&reps))
    }
}
