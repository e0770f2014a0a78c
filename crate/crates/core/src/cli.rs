//! Command-line front end.
//!
//! Exit codes: 0 success or match, 1 verification mismatch, 2 invalid input,
//! 3 enumeration bound exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::distribution::{
    b_distribution, corollary_check, f_count, DistributionError, DistributionQuery, FProfile, Mode, WeightDistribution,
};
use crate::gf::{prime_power, FieldSpec, GfError};
use crate::linear_code::{rs_code, CodeError, LinearCode, DEFAULT_ENUMERATION_BOUND};
use crate::oracle::{self, OracleError, ScanConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mds-bweight",
    version,
    about = "Exact b-symbol weight distributions of MDS codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the b-weight distribution of an MDS code.
    Dist {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Compare the closed form against exhaustive enumeration.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Print A^b(w) for every b in 1..=n.
    Table {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Closed)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Evaluate the F counting function for a list of block lengths.
    FValue {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        /// Also count by enumeration and compare.
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Field order (a prime power).
    #[arg(long)]
    pub q: Option<u64>,
    /// Field characteristic, with --m.
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree, with --p.
    #[arg(long)]
    pub m: Option<u32>,
    /// Irreducible modulus coefficients, constant term first.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Minimum distance; alternative to --k.
    #[arg(long)]
    pub d: Option<usize>,
    /// Generator-matrix JSON file instead of a Reed–Solomon code.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Largest number of codewords an enumeration may visit.
    #[arg(long = "max-enum", default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub max_enum: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Closed,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        let code = match e {
            CodeError::EnumerationTooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Code(c) => c.into(),
            other => CliError::invalid(other.to_string()),
        }
    }
}

impl From<DistributionError> for CliError {
    fn from(e: DistributionError) -> Self {
        CliError::invalid(e.to_string())
    }
}

/// A field choice validated without constructing the field.
#[derive(Debug, Clone)]
struct FieldChoice {
    p: u64,
    m: u32,
    modulus: Option<Vec<u64>>,
}

impl FieldChoice {
    fn from_args(args: &FieldArgs) -> Result<Self, CliError> {
        let (p, m) = match (args.q, args.p, args.m) {
            (Some(q), None, None) => {
                prime_power(q).map_err(|_| CliError::invalid(format!("q = {q} is not a prime power")))?
            }
            (None, Some(p), Some(m)) => {
                if !crate::gf::is_prime(p) {
                    return Err(CliError::invalid(format!("p = {p} is not prime")));
                }
                if m == 0 {
                    return Err(CliError::invalid("m must be at least 1"));
                }
                (p, m)
            }
            (None, None, None) => return Err(CliError::invalid("a field is required: --q or --p with --m")),
            _ => return Err(CliError::invalid("give either --q or both --p and --m")),
        };
        let q = p
            .checked_pow(m)
            .ok_or_else(|| CliError::invalid("field order overflows"))?;
        if q > crate::gf::DEFAULT_ORDER_BOUND {
            return Err(CliError::invalid(format!(
                "field order {q} exceeds the bound {}",
                crate::gf::DEFAULT_ORDER_BOUND
            )));
        }
        Ok(FieldChoice {
            p,
            m,
            modulus: args.modulus.clone(),
        })
    }

    fn q(&self) -> u64 {
        self.p.pow(self.m)
    }

    fn build(&self) -> Result<FieldSpec, CliError> {
        Ok(FieldSpec::new(self.p, self.m, self.modulus.as_deref())?)
    }
}

/// Either an RS code described by parameters or a loaded generator matrix.
enum CodeSource {
    Rs { field: FieldChoice, n: usize, k: usize },
    Loaded(LinearCode),
}

impl CodeSource {
    fn from_args(args: &CodeArgs, bound: u64) -> Result<Self, CliError> {
        if let Some(path) = &args.input {
            let f = &args.field;
            if f.q.is_some()
                || f.p.is_some()
                || f.m.is_some()
                || f.modulus.is_some()
                || args.n.is_some()
                || args.k.is_some()
                || args.d.is_some()
            {
                return Err(CliError::invalid(
                    "--input cannot be combined with field or code parameters",
                ));
            }
            return Ok(CodeSource::Loaded(LinearCode::load(path, bound)?));
        }
        let field = FieldChoice::from_args(&args.field)?;
        let n = args.n.ok_or_else(|| CliError::invalid("--n is required"))?;
        if n == 0 {
            return Err(CliError::invalid("n must be positive"));
        }
        let k = match (args.k, args.d) {
            (Some(k), None) => k,
            (None, Some(d)) => {
                if d == 0 || d > n {
                    return Err(CliError::invalid(format!("d = {d} invalid for n = {n}")));
                }
                n + 1 - d
            }
            (Some(k), Some(d)) => {
                if k > n || d != n + 1 - k {
                    return Err(CliError::invalid(format!(
                        "--k {k} and --d {d} disagree: an MDS code has d = n - k + 1"
                    )));
                }
                k
            }
            (None, None) => return Err(CliError::invalid("--k or --d is required")),
        };
        if k == 0 || k > n {
            return Err(CliError::invalid(format!("k = {k} invalid for n = {n}")));
        }
        if n as u64 > field.q() {
            return Err(CliError::invalid(format!(
                "n exceeds field order (n = {n}, q = {})",
                field.q()
            )));
        }
        Ok(CodeSource::Rs { field, n, k })
    }

    fn query(&self, b: usize) -> DistributionQuery {
        match self {
            CodeSource::Rs { field, n, k } => DistributionQuery {
                q: field.q(),
                n: *n,
                k: *k,
                d: n + 1 - k,
                b,
            },
            CodeSource::Loaded(code) => DistributionQuery::for_code(code.params(), b),
        }
    }

    fn code(&self) -> Result<LinearCode, CliError> {
        match self {
            CodeSource::Rs { field, n, k } => Ok(rs_code(&field.build()?, *n, *k, None)?),
            CodeSource::Loaded(code) => Ok(code.clone()),
        }
    }

    /// Builds the field when a modulus was supplied, so bad moduli are
    /// reported even when only closed forms are computed.
    fn validate_field(&self) -> Result<(), CliError> {
        if let CodeSource::Rs { field, .. } = self {
            if field.modulus.is_some() {
                field.build()?;
            }
        }
        Ok(())
    }
}

fn scan_config(args: &ScanArgs) -> Result<ScanConfig, CliError> {
    let mut cfg = ScanConfig {
        bound: args.max_enum,
        ..ScanConfig::default()
    };
    if let Some(w) = args.workers {
        if w == 0 {
            return Err(CliError::invalid("--workers must be at least 1"));
        }
        cfg.workers = w;
    }
    Ok(cfg)
}

fn closed_form(source: &CodeSource, b: usize) -> Result<WeightDistribution<BigInt>, CliError> {
    let query = source.query(b);
    if !query.is_mds() {
        return Err(CliError::invalid("the closed form requires an MDS code"));
    }
    Ok(b_distribution(&query)?)
}

fn check_b(b: usize) -> Result<(), CliError> {
    if b == 0 {
        Err(CliError::invalid("b must be at least 1"))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------- rendering

fn query_json(q: &DistributionQuery) -> Value {
    json!({"q": q.q, "n": q.n, "k": q.k, "d": q.d, "b": q.b})
}

fn counts_json(dist: &WeightDistribution<BigInt>) -> Value {
    let mut counts = Map::new();
    for (w, c) in dist.counts().iter().enumerate() {
        counts.insert(w.to_string(), Value::String(c.to_string()));
    }
    Value::Object(counts)
}

/// The JSON document for one distribution; counts are decimal strings.
pub fn distribution_to_json(dist: &WeightDistribution<BigInt>) -> Value {
    json!({
        "query": query_json(dist.query()),
        "mode": dist.mode().as_str(),
        "counts": counts_json(dist),
        "total": dist.total().to_string(),
    })
}

/// Parses a document produced by [`distribution_to_json`].
pub fn distribution_from_json(text: &str) -> Result<WeightDistribution<BigInt>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let query: DistributionQuery =
        serde_json::from_value(v.get("query").cloned().ok_or("missing query")?).map_err(|e| e.to_string())?;
    let mode: Mode = v.get("mode").and_then(Value::as_str).ok_or("missing mode")?.parse()?;
    let counts = v.get("counts").and_then(Value::as_object).ok_or("missing counts")?;
    let mut out = vec![BigInt::from(0); query.n + 1];
    for (w, c) in counts {
        let w: usize = w.parse().map_err(|_| format!("bad weight {w:?}"))?;
        let slot = out.get_mut(w).ok_or_else(|| format!("weight {w} exceeds n"))?;
        *slot = c
            .as_str()
            .ok_or("counts must be strings")?
            .parse()
            .map_err(|_| format!("bad count {c}"))?;
    }
    let dist = WeightDistribution::new(query, mode, out).map_err(|e| e.to_string())?;
    if let Some(total) = v.get("total").and_then(Value::as_str) {
        if total != dist.total().to_string() {
            return Err(format!("total {total} does not match the counts"));
        }
    }
    Ok(dist)
}

fn describe(q: &DistributionQuery) -> String {
    format!("[{},{},{}]_{}", q.n, q.k, q.d, q.q)
}

fn render(dist: &WeightDistribution<BigInt>, format: Format) -> String {
    match format {
        Format::Json => format!("{:#}\n", distribution_to_json(dist)),
        Format::Csv => {
            let mut s = String::from("w,count,mode\n");
            for (w, c) in dist.counts().iter().enumerate() {
                let _ = writeln!(s, "{w},{c},{}", dist.mode());
            }
            s
        }
        Format::Text => {
            let q = dist.query();
            let mut s = format!(
                "b-weight distribution of {}, b = {} ({})\n",
                describe(q),
                q.b,
                dist.mode()
            );
            let width = dist
                .counts()
                .iter()
                .map(|c| c.to_string().len())
                .max()
                .unwrap_or(1)
                .max(5);
            let _ = writeln!(s, "{:>3}  {:>width$}", "w", "count");
            for (w, c) in dist.counts().iter().enumerate() {
                let _ = writeln!(s, "{w:>3}  {:>width$}", c.to_string());
            }
            let _ = writeln!(s, "total {}", dist.total());
            s
        }
    }
}

fn render_table(rows: &[WeightDistribution<BigInt>], format: Format) -> String {
    let Some(first) = rows.first() else {
        return String::new();
    };
    let n = first.query().n;
    match format {
        Format::Json => {
            let q = first.query();
            let rows: Vec<Value> = rows
                .iter()
                .map(|d| {
                    json!({
                        "b": d.query().b,
                        "mode": d.mode().as_str(),
                        "counts": counts_json(d),
                        "total": d.total().to_string(),
                    })
                })
                .collect();
            let doc = json!({"query": {"q": q.q, "n": q.n, "k": q.k, "d": q.d}, "rows": rows});
            format!("{doc:#}\n")
        }
        Format::Csv => {
            let mut s = String::from("b,mode");
            for w in 0..=n {
                let _ = write!(s, ",{w}");
            }
            s.push('\n');
            for d in rows {
                let _ = write!(s, "{},{}", d.query().b, d.mode());
                for c in d.counts() {
                    let _ = write!(s, ",{c}");
                }
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let width = rows
                .iter()
                .flat_map(|d| d.counts().iter().map(|c| c.to_string().len()))
                .max()
                .unwrap_or(1)
                .max(3);
            let mut s = format!("b-weight distributions of {}\n", describe(first.query()));
            let _ = write!(s, "{:>3}  {:<12}", "b", "mode");
            for w in 0..=n {
                let _ = write!(s, " {:>width$}", format!("w{w}"));
            }
            s.push('\n');
            for d in rows {
                let _ = write!(s, "{:>3}  {:<12}", d.query().b, d.mode().as_str());
                for c in d.counts() {
                    let _ = write!(s, " {:>width$}", c.to_string());
                }
                s.push('\n');
            }
            s
        }
    }
}

// ---------------------------------------------------------------- commands

struct Outcome {
    code: i32,
    stdout: String,
}

fn cmd_dist(code: &CodeArgs, b: usize, mode: ModeArg, format: Format, scan: &ScanArgs) -> Result<Outcome, CliError> {
    check_b(b)?;
    let cfg = scan_config(scan)?;
    let source = CodeSource::from_args(code, cfg.bound)?;
    source.validate_field()?;
    let closed = match mode {
        ModeArg::Closed | ModeArg::Both => Some(closed_form(&source, b)?),
        ModeArg::Brute => None,
    };
    let brute = match mode {
        ModeArg::Brute | ModeArg::Both => Some(oracle::brute_distribution_with(&source.code()?, b, &cfg)?.result),
        ModeArg::Closed => None,
    };
    let mut stdout = String::new();
    if format == Format::Json && mode == ModeArg::Both {
        let docs: Vec<Value> = closed.iter().chain(brute.iter()).map(distribution_to_json).collect();
        stdout = format!("{:#}\n", Value::Array(docs));
    } else {
        for dist in closed.iter().chain(brute.iter()) {
            stdout.push_str(&render(dist, format));
        }
    }
    let code = match (&closed, &brute) {
        (Some(c), Some(r)) if !c.same_counts(r) => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    Ok(Outcome { code, stdout })
}

fn cmd_verify(code: &CodeArgs, b: usize, scan: &ScanArgs) -> Result<Outcome, CliError> {
    check_b(b)?;
    let cfg = scan_config(scan)?;
    let source = CodeSource::from_args(code, cfg.bound)?;
    source.validate_field()?;
    let closed = closed_form(&source, b)?;
    let report = oracle::brute_distribution_with(&source.code()?, b, &cfg)?;
    let brute = &report.result;
    let query = closed.query();

    let mut out = format!(
        "verify {} b = {} ({} vs brute-force)\n",
        describe(query),
        b,
        closed.mode()
    );
    for w in 0..=query.n {
        let (c, r) = (closed.count(w), brute.count(w));
        let tag = if c == r { "ok" } else { "DIFF" };
        let _ = writeln!(out, "  w={w:<3} closed={c} brute={r} {tag}");
    }
    let code = match closed.first_difference(brute) {
        None => {
            let _ = writeln!(out, "MATCH ({} weights, {} codewords)", query.n + 1, report.enumerated);
            EXIT_OK
        }
        Some((w, c, r)) => {
            let _ = writeln!(out, "MISMATCH at w={w}: closed={c} brute={r}");
            EXIT_MISMATCH
        }
    };
    let identities = corollary_check::<BigInt>(query);
    let _ = write!(out, "identities:\n{identities}");
    Ok(Outcome { code, stdout: out })
}

fn cmd_table(code: &CodeArgs, mode: ModeArg, format: Format, scan: &ScanArgs) -> Result<Outcome, CliError> {
    let cfg = scan_config(scan)?;
    let source = CodeSource::from_args(code, cfg.bound)?;
    source.validate_field()?;
    let n = source.query(1).n;
    let closed = match mode {
        ModeArg::Closed | ModeArg::Both => Some(
            (1..=n)
                .map(|b| closed_form(&source, b))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        ModeArg::Brute => None,
    };
    let brute = match mode {
        ModeArg::Brute | ModeArg::Both => Some(oracle::brute_distributions_all_b(&source.code()?, &cfg)?.result),
        ModeArg::Closed => None,
    };
    let mut stdout = String::new();
    for rows in closed.iter().chain(brute.iter()) {
        stdout.push_str(&render_table(rows, format));
    }
    let code = match (&closed, &brute) {
        (Some(c), Some(r)) if c.iter().zip(r).any(|(a, b)| !a.same_counts(b)) => EXIT_MISMATCH,
        _ => EXIT_OK,
    };
    Ok(Outcome { code, stdout })
}

#[allow(clippy::too_many_arguments)]
fn cmd_f_value(
    field: &FieldArgs,
    d: usize,
    b: usize,
    lengths: &[usize],
    brute: bool,
    format: Format,
    scan: &ScanArgs,
) -> Result<Outcome, CliError> {
    let choice = FieldChoice::from_args(field)?;
    let cfg = scan_config(scan)?;
    let profile = FProfile::new(b, d, choice.q(), lengths.to_vec())?;
    if brute && profile.total_length() as u64 > choice.q() && profile.total_length() >= d {
        return Err(CliError::invalid(format!(
            "brute force needs q >= sum of lengths ({} > {})",
            profile.total_length(),
            choice.q()
        )));
    }
    if choice.modulus.is_some() {
        choice.build()?;
    }
    let value: BigInt = f_count(&profile)?;
    let oracle_value = if brute {
        let f = choice.build()?;
        let len = profile.total_length();
        Some(if len < d {
            oracle::brute_f(&profile, &f)?
        } else {
            let code = rs_code(&f, len, len + 1 - d, None)?;
            oracle::brute_f_on_code(&profile, &code, &cfg)?
        })
    } else {
        None
    };
    let matched = oracle_value.as_ref().map(|v| v == &value);
    let code = if matched == Some(false) { EXIT_MISMATCH } else { EXIT_OK };
    let stdout = match format {
        Format::Json => {
            let mut doc = json!({
                "profile": {"b": b, "d": d, "q": choice.q(), "lengths": lengths},
                "value": value.to_string(),
            });
            if let (Some(v), Some(m)) = (&oracle_value, matched) {
                doc["brute"] = Value::String(v.to_string());
                doc["match"] = Value::Bool(m);
            }
            format!("{doc:#}\n")
        }
        Format::Csv => {
            let mut s = String::from("value,brute,match\n");
            let brute_s = oracle_value.as_ref().map(ToString::to_string).unwrap_or_default();
            let match_s = matched.map(|m| m.to_string()).unwrap_or_default();
            let _ = writeln!(s, "{value},{brute_s},{match_s}");
            s
        }
        Format::Text => match (&oracle_value, matched) {
            (Some(v), Some(m)) => {
                format!("F = {value}\nbrute = {v}\n{}\n", if m { "MATCH" } else { "MISMATCH" })
            }
            _ => format!("{value}\n"),
        },
    };
    Ok(Outcome { code, stdout })
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Dist {
            code,
            b,
            mode,
            format,
            scan,
        } => cmd_dist(code, *b, *mode, *format, scan),
        Command::Verify { code, b, scan } => cmd_verify(code, *b, scan),
        Command::Table {
            code,
            mode,
            format,
            scan,
        } => cmd_table(code, *mode, *format, scan),
        Command::FValue {
            field,
            d,
            b,
            lengths,
            brute,
            format,
            scan,
        } => cmd_f_value(field, *d, *b, lengths, *brute, *format, scan),
    };
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
