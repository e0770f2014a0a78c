//! Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
//!
//! Runs with its own `main` (no libtest harness) so the report is printed in
//! order. Exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use mds_bweight::distribution::{hamming_distribution, symbol_pair_distribution};
use mds_bweight::oracle::{brute_compositions, brute_distributions_all_b, brute_f, FHistogram, ScanConfig};
use mds_bweight::{
    b_distribution, b_weight, compositions, f_count, n_b, n_infty, rs_code, shape_decompose, weight_from_shape,
    BigCount, BigDistribution, DistributionQuery, FProfile, FieldSpec,
};
use num_bigint::BigInt;

const GRID_FIELDS: [u64; 6] = [5, 7, 8, 9, 11, 13];
const ENUMERATION_CAP: u128 = 10_000_000;

/// One `(q, n, k)` code of the grid with its closed forms for every b and,
/// when within the enumeration cap, the exhaustive histograms.
struct GridCase {
    q: u64,
    n: usize,
    k: usize,
    closed: Vec<BigDistribution>,
    brute: Option<Vec<BigDistribution>>,
}

impl GridCase {
    fn d(&self) -> usize {
        self.n - self.k + 1
    }

    fn label(&self, b: usize) -> String {
        format!("[{},{},{}]_{} b={b}", self.n, self.k, self.d(), self.q)
    }
}

fn grid_shape() -> Vec<(u64, usize, usize)> {
    let mut out = Vec::new();
    for q in GRID_FIELDS {
        for n in 3..=(q as usize).min(8) {
            for k in 2..n {
                out.push((q, n, k));
            }
        }
    }
    out
}

fn within_cap(q: u64, k: usize) -> bool {
    (q as u128).pow(k as u32) <= ENUMERATION_CAP
}

fn scan_config() -> ScanConfig {
    ScanConfig {
        bound: ENUMERATION_CAP as u64,
        ..ScanConfig::default()
    }
}

fn build_grid() -> Vec<GridCase> {
    let cfg = scan_config();
    grid_shape()
        .into_iter()
        .map(|(q, n, k)| {
            let closed = (1..=n)
                .map(|b| b_distribution::<BigCount>(&DistributionQuery::mds(q, n, k, b).unwrap()).unwrap())
                .collect();
            let brute = within_cap(q, k).then(|| {
                let code = rs_code(&FieldSpec::of_order(q).unwrap(), n, k, None).unwrap();
                brute_distributions_all_b(&code, &cfg).unwrap().result
            });
            GridCase { q, n, k, closed, brute }
        })
        .collect()
}

struct Report {
    failures: usize,
}

impl Report {
    fn record(&mut self, id: u32, name: &str, tolerance: &str, started: Instant, errors: &[String], detail: String) {
        let secs = started.elapsed().as_secs_f64();
        if errors.is_empty() {
            println!("PASS  [{id:>2}] {name} ({tolerance}; {detail}; {secs:.2}s)");
        } else {
            self.failures += 1;
            println!(
                "FAIL  [{id:>2}] {name} ({tolerance}; {} problems, first: {}; {secs:.2}s)",
                errors.len(),
                errors[0]
            );
        }
    }
}

fn counts_i128(d: &BigDistribution) -> Vec<i128> {
    d.counts().iter().map(|c| i128::try_from(c).unwrap()).collect()
}

fn example_reproduction(report: &mut Report) {
    let started = Instant::now();
    let expected = vec![1i128, 0, 0, 0, 0, 60, 14580];
    let query = DistributionQuery::mds(11, 6, 4, 3).unwrap();
    let closed = b_distribution::<BigCount>(&query).unwrap();
    let code = rs_code(&FieldSpec::of_order(11).unwrap(), 6, 4, None).unwrap();
    let brute = &brute_distributions_all_b(&code, &scan_config()).unwrap().result[2];
    let mut errors = Vec::new();
    if counts_i128(&closed) != expected {
        errors.push(format!("closed form gave {:?}", counts_i128(&closed)));
    }
    if counts_i128(brute) != expected {
        errors.push(format!("enumeration gave {:?}", counts_i128(brute)));
    }
    report.record(
        1,
        "worked example [6,4,3]_11 b=3",
        "exact",
        started,
        &errors,
        format!("{expected:?}"),
    );
}

fn grid_equivalence(report: &mut Report, grid: &[GridCase], started: Instant) {
    let mut errors = Vec::new();
    let (mut compared, mut skipped, mut codewords) = (0usize, 0usize, 0u128);
    for case in grid {
        let Some(brute) = &case.brute else {
            skipped += 1;
            continue;
        };
        codewords += (case.q as u128).pow(case.k as u32);
        for (b, (c, r)) in (1..).zip(case.closed.iter().zip(brute)) {
            compared += 1;
            if let Some((w, x, y)) = c.first_difference(r) {
                errors.push(format!("{} w={w}: closed {x} vs enumerated {y}", case.label(b)));
            }
        }
    }
    let detail = format!(
        "{compared} (q,n,k,b) cases, {codewords} codewords enumerated, {skipped} codes with q^k > 10^7 skipped"
    );
    report.record(
        2,
        "grid closed form vs enumeration",
        "exact, every weight",
        started,
        &errors,
        detail,
    );
}

/// Applies `check` to the closed form of every grid case and to the
/// enumerated distribution where available.
fn over_grid(
    grid: &[GridCase],
    mut check: impl FnMut(&GridCase, usize, &BigDistribution) -> Option<String>,
) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut errors = Vec::new();
    for case in grid {
        let brute = case.brute.iter().flatten().map(Some).chain(std::iter::repeat(None));
        for (b, (c, r)) in (1..).zip(case.closed.iter().zip(brute)) {
            for dist in std::iter::once(c).chain(r) {
                if let Some(problem) = check(case, b, dist) {
                    errors.push(format!("{} ({}): {problem}", case.label(b), dist.mode()));
                } else {
                    checked += 1;
                }
            }
        }
    }
    (checked, errors)
}

fn first_nonzero_count(report: &mut Report, grid: &[GridCase]) {
    let started = Instant::now();
    let mut applicable = 0;
    let (_, errors) = over_grid(grid, |case, b, dist| {
        let w = case.d() + b - 1;
        // the identity is stated for b >= 2; at b = 1 the count is C(n,d)(q-1)
        if b < 2 || w >= case.n {
            return None;
        }
        applicable += 1;
        let expected = BigInt::from(case.n as u64 * (case.q - 1));
        (dist.count(w) != expected).then(|| format!("count({w}) = {} != {expected}", dist.count(w)))
    });
    report.record(
        3,
        "count(d+b-1) = n(q-1) when b >= 2 and d+b-1 < n",
        "exact",
        started,
        &errors,
        format!("{applicable} distributions"),
    );
}

fn full_weight_b3(report: &mut Report) {
    let started = Instant::now();
    let mut errors = Vec::new();
    let mut checked = Vec::new();
    for q in [7u64, 11, 13] {
        let field = FieldSpec::of_order(q).unwrap();
        for d in [3usize, 4, 5] {
            let n = d + 3;
            if n as u64 > q {
                continue;
            }
            let expected = BigInt::from(q.pow(4)) - BigInt::from((d as u64 + 3) * q) + BigInt::from(d as u64 + 2);
            let closed = b_distribution::<BigCount>(&DistributionQuery::mds(q, n, 4, 3).unwrap()).unwrap();
            let code = rs_code(&field, n, 4, None).unwrap();
            let brute = &brute_distributions_all_b(&code, &scan_config()).unwrap().result[2];
            for dist in [&closed, brute] {
                if dist.count(n) != expected {
                    errors.push(format!(
                        "q={q} d={d} ({}): {} != {expected}",
                        dist.mode(),
                        dist.count(n)
                    ));
                }
            }
            checked.push(format!("q={q},d={d}"));
        }
    }
    report.record(
        4,
        "b=3, k=4, n=d+3: count(n) = q^4-(d+3)q+d+2",
        "exact",
        started,
        &errors,
        checked.join(" "),
    );
}

fn reductions(report: &mut Report, grid: &[GridCase]) {
    let started = Instant::now();
    let (mut hamming, mut pairs) = (0, 0);
    let (_, errors) = over_grid(grid, |case, b, dist| {
        let reference: Vec<BigInt> = match b {
            1 => {
                hamming += 1;
                hamming_distribution(case.q, case.n, case.d())
            }
            2 => {
                pairs += 1;
                symbol_pair_distribution(case.q, case.n, case.k)
            }
            _ => return None,
        };
        (dist.counts() != reference.as_slice()).then(|| format!("{:?} != reference {:?}", dist.counts(), reference))
    });
    let detail = format!("{hamming} b=1 vs MDS Hamming distribution, {pairs} b=2 vs symbol-pair closed form");
    report.record(5, "b=1 and b=2 reductions", "exact", started, &errors, detail);
}

fn completeness(report: &mut Report, grid: &[GridCase]) {
    let started = Instant::now();
    let (checked, errors) = over_grid(grid, |case, _, dist| {
        let size = BigInt::from(case.q).pow(case.k as u32);
        (dist.total() != size).then(|| format!("total {} != q^k = {size}", dist.total()))
    });
    report.record(
        6,
        "sum of counts = q^k",
        "exact",
        started,
        &errors,
        format!("{checked} distributions"),
    );
}

fn f_oracle(report: &mut Report) {
    let started = Instant::now();
    // no cap here: the largest code is [8,7,2] over GF(13)
    let cfg = ScanConfig {
        bound: 100_000_000,
        ..ScanConfig::default()
    };
    let mut errors = Vec::new();
    let (mut profiles, mut codewords) = (0usize, 0u128);
    for q in [11u64, 13] {
        let field = FieldSpec::of_order(q).unwrap();
        for d in [2usize, 3, 4] {
            for len in 1..=8usize {
                let hist = (len >= d).then(|| {
                    let code = rs_code(&field, len, len + 1 - d, None).unwrap();
                    let scan = FHistogram::scan(&code, &cfg).unwrap();
                    codewords += scan.enumerated;
                    scan.result
                });
                for parts in 1..=3usize {
                    for comp in compositions(len, parts) {
                        for b in 2..=5usize {
                            let profile = FProfile::new(b, d, q, comp.parts().to_vec()).unwrap();
                            let closed: BigInt = f_count(&profile).unwrap();
                            let oracle = match &hist {
                                Some(h) => h.count(comp.parts(), b).unwrap(),
                                None => brute_f(&profile, &field).unwrap(),
                            };
                            profiles += 1;
                            if closed != oracle {
                                errors.push(format!(
                                    "q={q} d={d} b={b} lengths={:?}: {closed} vs {oracle}",
                                    comp.parts()
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    let detail = format!("{profiles} profiles, {codewords} codewords enumerated");
    report.record(7, "F closed form vs enumeration", "exact", started, &errors, detail);
}

fn composition_counts(report: &mut Report) {
    let started = Instant::now();
    let mut errors = Vec::new();
    let mut checked = 0;
    for b in 3..=8usize {
        for r in 0..=8usize {
            for total in 0..=16usize {
                let formula: BigInt = n_b(b, r as i64, total as i64).unwrap();
                let direct = brute_compositions(b, r, total).unwrap();
                checked += 1;
                if formula != direct {
                    errors.push(format!("b={b} r={r} L={total}: {formula} vs {direct}"));
                }
            }
        }
    }
    let unbounded: BigInt = n_infty(2, 5);
    if unbounded != BigInt::from(4) {
        errors.push(format!("unbounded compositions of 5 into 2 parts gave {unbounded}"));
    }
    report.record(
        8,
        "bounded composition counts",
        "exact",
        started,
        &errors,
        format!("{checked} (b,r,L) triples plus N(2,5)=4"),
    );
}

fn shape_consistency(report: &mut Report) {
    let started = Instant::now();
    let mut errors = Vec::new();
    let mut checked = 0u64;
    for q in 2..=5u32 {
        for n in 2..=8usize {
            let mut v = vec![0u32; n];
            loop {
                // odometer over [0, q)^n
                let mut i = 0;
                while i < n {
                    v[i] += 1;
                    if v[i] < q {
                        break;
                    }
                    v[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                for b in 2..=n {
                    let shape = shape_decompose(&v, b).unwrap();
                    let from_shape = weight_from_shape(&shape, n, b).unwrap();
                    let direct = b_weight(&v, b).unwrap();
                    checked += 1;
                    if from_shape != direct && errors.len() < 10 {
                        errors.push(format!("q={q} v={v:?} b={b} shape {shape}: {from_shape} vs {direct}"));
                    }
                }
            }
        }
    }
    report.record(
        9,
        "weight from b-shape = b-weight",
        "exact, exhaustive q<=5, n<=8",
        started,
        &errors,
        format!("{checked} (vector, b) pairs"),
    );
}

fn minimum_distance(report: &mut Report, grid: &[GridCase]) {
    let started = Instant::now();
    let mut applicable = 0;
    let (_, errors) = over_grid(grid, |case, b, dist| {
        let expected = case.d() + b - 1;
        if expected > case.n {
            return None;
        }
        applicable += 1;
        let found = dist.min_positive_weight();
        (found != Some(expected)).then(|| format!("smallest positive weight {found:?} != {expected}"))
    });
    report.record(
        10,
        "minimum b-distance = d+b-1",
        "exact",
        started,
        &errors,
        format!("{applicable} distributions"),
    );
}

fn representation_independence(report: &mut Report, grid: &[GridCase]) {
    let started = Instant::now();
    let alternates: BTreeMap<u64, (u64, u32, Vec<u64>)> = [(8, (2, 3, vec![1, 0, 1, 1])), (9, (3, 2, vec![1, 0, 1]))]
        .into_iter()
        .collect();
    let cfg = scan_config();
    let mut errors = Vec::new();
    let mut compared = 0;
    for (&q, (p, m, modulus)) in &alternates {
        let alt = FieldSpec::new(*p, *m, Some(modulus)).unwrap();
        let default = FieldSpec::of_order(q).unwrap();
        assert_ne!(alt.modulus(), default.modulus(), "moduli must differ");
        for case in grid.iter().filter(|c| c.q == q) {
            let Some(reference) = &case.brute else { continue };
            let code = rs_code(&alt, case.n, case.k, None).unwrap();
            let other = brute_distributions_all_b(&code, &cfg).unwrap().result;
            for (b, (x, y)) in (1..).zip(reference.iter().zip(&other)) {
                compared += 1;
                if let Some((w, a, c)) = x.first_difference(y) {
                    errors.push(format!("{} w={w}: {a} vs {c} with modulus {modulus:?}", case.label(b)));
                }
            }
        }
    }
    report.record(
        11,
        "distributions independent of the field modulus (q=8, 9)",
        "exact",
        started,
        &errors,
        format!("{compared} (q,n,k,b) cases"),
    );
}

fn main() {
    let mut report = Report { failures: 0 };
    println!("acceptance: exact comparisons, grid q in {GRID_FIELDS:?}, 3 <= n <= min(q,8), 2 <= k < n, 1 <= b <= n");

    example_reproduction(&mut report);
    let started = Instant::now();
    let grid = build_grid();
    grid_equivalence(&mut report, &grid, started);
    first_nonzero_count(&mut report, &grid);
    full_weight_b3(&mut report);
    reductions(&mut report, &grid);
    completeness(&mut report, &grid);
    f_oracle(&mut report);
    composition_counts(&mut report);
    shape_consistency(&mut report);
    minimum_distance(&mut report, &grid);
    representation_independence(&mut report, &grid);

    if report.failures == 0 {
        println!("acceptance: all 11 criteria passed");
    } else {
        println!("acceptance: {} of 11 criteria failed", report.failures);
        std::process::exit(1);
    }
}
