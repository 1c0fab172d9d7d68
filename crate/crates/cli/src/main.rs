//! `semicov`: batch computations on numerical semigroups and covarieties.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 I/O error.

mod output;

use std::collections::BTreeSet;
use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use semicov::frobenius::{self, af_rank};
use semicov::oracle::{brute_enumerate, MAX_BRUTE_F};
use semicov::record::{csv_row, tree_to_dot, CovarietyRecord, SemigroupRecord, TreeRecord};
use semicov::{
    chain_cad, generated_covariety, Covariety, EnumerateOptions, NumericalSemigroup, MAX_FROBENIUS,
};
use serde::Serialize;

use output::{record_line, Format, RecordStream, Sink};

#[derive(Parser, Debug)]
#[command(
    name = "semicov",
    version,
    about = "Numerical semigroups, covarieties and A(F)"
)]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Worker threads for enumeration.
    #[arg(
        long,
        env = "SEMICOV_THREADS",
        default_value_t = 1,
        value_parser = clap::value_parser!(u32).range(1..),
        global = true
    )]
    parallel: u32,

    /// Allow enumeration output in any order (faster with several workers).
    #[arg(long, global = true)]
    order_insensitive: bool,

    /// Rebuild Apery tables per level instead of keeping them in the frontier.
    #[arg(long, global = true)]
    low_memory: bool,

    /// Write to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Frob {
    /// Frobenius number.
    #[arg(short = 'F', long = "frobenius", allow_negative_numbers = true)]
    f: i64,
}

#[derive(Args, Debug)]
struct SemigroupInput {
    /// Generators, with gcd 1.
    #[arg(conflicts_with = "gaps")]
    generators: Vec<u32>,

    /// Explicit gap list instead of generators; empty means the naturals.
    #[arg(long, num_args = 0.., value_delimiter = ',')]
    gaps: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every numerical semigroup with Frobenius number F.
    Enumerate(Frob),
    /// Invariants of a single semigroup.
    Analyze(SemigroupInput),
    /// Least semigroup with Frobenius number F containing the given elements.
    Closure {
        #[command(flatten)]
        frob: Frob,
        elements: Vec<u32>,
    },
    /// The multiplicity-removal chain of a semigroup.
    Chain {
        #[command(flatten)]
        input: SemigroupInput,
        /// Stop at {0, F + 1, ->}; defaults to the semigroup's own Frobenius number.
        #[arg(short = 'F', long = "frobenius", allow_negative_numbers = true)]
        f: Option<i64>,
    },
    /// Covariety generated by the semigroup records in the given files.
    CovGenerate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Number of rank-one semigroups with Frobenius number F.
    CountRank1(Frob),
    /// Semigroups with Frobenius number F of maximal rank m - 1.
    MaxRank(Frob),
    /// Compare the enumeration against an exhaustive subset scan.
    Verify(Frob),
    /// The enumeration tree of A(F).
    Tree(Frob),
}

#[derive(Debug)]
enum CliError {
    BadInput(String),
    Mismatch,
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::BadInput(msg) => write!(f, "invalid input: {msg}"),
            CliError::Mismatch => write!(f, "verification mismatch"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn bad(e: impl fmt::Display) -> CliError {
    CliError::BadInput(e.to_string())
}

type Result<T, E = CliError> = std::result::Result<T, E>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("semicov: {e}");
            ExitCode::from(match e {
                CliError::Mismatch => 1,
                CliError::BadInput(_) => 2,
                CliError::Io(_) => 3,
            })
        }
    }
}

fn frobenius_arg(f: i64) -> Result<u32> {
    if (1..=MAX_FROBENIUS as i64).contains(&f) {
        Ok(f as u32)
    } else {
        Err(CliError::BadInput(format!(
            "F must lie in 1..={MAX_FROBENIUS}, got {f}"
        )))
    }
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let format = cli.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(CliError::BadInput(
            format!("format {format:?} is not available here").to_lowercase(),
        ))
    }
}

fn enumerate_options(cli: &Cli) -> EnumerateOptions {
    EnumerateOptions {
        workers: cli.parallel as usize,
        low_memory: cli.low_memory,
    }
}

const RECORD_FORMATS: [Format; 4] = [Format::Jsonl, Format::Json, Format::Csv, Format::Plain];

fn run(cli: &Cli) -> Result<()> {
    let mut sink = Sink::open(cli.output.as_deref())?;
    match &cli.command {
        Command::Enumerate(frob) => cmd_enumerate(cli, &mut sink, frobenius_arg(frob.f)?)?,
        Command::Analyze(input) => cmd_analyze(cli, &mut sink, input)?,
        Command::Closure { frob, elements } => {
            cmd_closure(cli, &mut sink, frobenius_arg(frob.f)?, elements)?
        }
        Command::Chain { input, f } => cmd_chain(cli, &mut sink, input, *f)?,
        Command::CovGenerate { files } => cmd_cov_generate(cli, &mut sink, files)?,
        Command::CountRank1(frob) => cmd_count_rank1(cli, &mut sink, frobenius_arg(frob.f)?)?,
        Command::MaxRank(frob) => cmd_max_rank(cli, &mut sink, frobenius_arg(frob.f)?)?,
        Command::Verify(frob) => {
            let outcome = cmd_verify(cli, &mut sink, frobenius_arg(frob.f)?);
            sink.finish()?;
            return outcome;
        }
        Command::Tree(frob) => cmd_tree(cli, &mut sink, frobenius_arg(frob.f)?)?,
    }
    sink.finish()?;
    Ok(())
}

fn af_rank_of(f: u32, s: &NumericalSemigroup) -> usize {
    af_rank(f, s).expect("members of A(F) have an A(F) rank")
}

fn cmd_enumerate(cli: &Cli, sink: &mut Sink, f: u32) -> Result<()> {
    let format = format_or(
        cli,
        Format::Jsonl,
        &[
            Format::Jsonl,
            Format::Json,
            Format::Csv,
            Format::Plain,
            Format::Dot,
        ],
    )?;
    if format == Format::Dot {
        return write_tree(sink, &frobenius::af_covariety(f).map_err(bad)?, format);
    }
    let opts = enumerate_options(cli);
    let mut stream = RecordStream::start(sink, format, Some(f))?;
    if cli.order_insensitive && format != Format::Json {
        let shared = Mutex::new((&mut stream, None::<io::Error>));
        frobenius::enumerate_unordered(f, &opts, |node| {
            let s = &node.semigroup;
            let line = match format {
                Format::Csv => csv_row(s, af_rank_of(f, s)),
                Format::Plain => s.to_string(),
                _ => record_line(s),
            };
            let mut guard = shared.lock().expect("writer lock");
            let (stream, err) = &mut *guard;
            if err.is_none() {
                if let Err(e) = stream.push_line(&line) {
                    *err = Some(e);
                }
            }
        })
        .map_err(bad)?;
        if let Some(e) = shared.into_inner().expect("writer lock").1 {
            return Err(e.into());
        }
    } else {
        let mut err = None;
        frobenius::enumerate(f, &opts, |node| {
            if err.is_none() {
                let s = &node.semigroup;
                if let Err(e) = stream.push(s, af_rank_of(f, s)) {
                    err = Some(e);
                }
            }
        })
        .map_err(bad)?;
        if let Some(e) = err {
            return Err(e.into());
        }
    }
    stream.end()?;
    Ok(())
}

fn read_semigroup(input: &SemigroupInput) -> Result<NumericalSemigroup> {
    match &input.gaps {
        Some(gaps) => NumericalSemigroup::from_gaps(gaps).map_err(bad),
        None if input.generators.is_empty() => {
            Err(CliError::BadInput("give generators or --gaps".into()))
        }
        None => NumericalSemigroup::from_generators(&input.generators).map_err(bad),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    #[serde(flatten)]
    record: SemigroupRecord,
    embedding_dimension: usize,
    pseudo_frobenius: Vec<u32>,
    special_gaps: Vec<u32>,
    med: bool,
    irreducible: bool,
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_analyze(cli: &Cli, sink: &mut Sink, input: &SemigroupInput) -> Result<()> {
    let format = format_or(
        cli,
        Format::Plain,
        &[Format::Plain, Format::Json, Format::Jsonl],
    )?;
    let s = read_semigroup(input)?;
    let report = AnalyzeReport {
        record: (&s).into(),
        embedding_dimension: s.embedding_dimension(),
        pseudo_frobenius: s
            .pseudo_frobenius()
            .map(<[u32]>::to_vec)
            .unwrap_or_default(),
        special_gaps: s.special_gaps().unwrap_or_default(),
        med: s.is_med(),
        // maximal in A(F) exactly when irreducible
        irreducible: s.is_irreducible(),
    };
    match format {
        Format::Json => sink.json_pretty(&report)?,
        Format::Jsonl => sink.json(&report)?,
        _ => {
            let r = &report.record;
            sink.line(&format!("semigroup: {s}"))?;
            sink.line(&format!("frobenius: {}", r.frobenius))?;
            sink.line(&format!("multiplicity: {}", r.multiplicity))?;
            sink.line(&format!("genus: {}", r.genus))?;
            sink.line(&format!(
                "embedding_dimension: {}",
                report.embedding_dimension
            ))?;
            sink.line(&format!("type: {}", r.type_))?;
            sink.line(&format!("msg: {}", join(&r.msg)))?;
            sink.line(&format!("gaps: {}", join(&r.gaps)))?;
            sink.line(&format!(
                "pseudo_frobenius: {}",
                join(&report.pseudo_frobenius)
            ))?;
            sink.line(&format!("special_gaps: {}", join(&report.special_gaps)))?;
            sink.line(&format!("med: {}", report.med))?;
            sink.line(&format!("irreducible: {}", report.irreducible))?;
        }
    }
    Ok(())
}

fn cmd_closure(cli: &Cli, sink: &mut Sink, f: u32, elements: &[u32]) -> Result<()> {
    let format = format_or(cli, Format::Jsonl, &RECORD_FORMATS)?;
    let s = frobenius::af_closure(f, elements).map_err(bad)?;
    let rank = frobenius::af_rank(f, &s).map_err(bad)?;
    match format {
        Format::Json => sink.json_pretty(&SemigroupRecord::from(&s))?,
        _ => {
            let mut stream = RecordStream::start(sink, format, None)?;
            stream.push(&s, rank)?;
        }
    }
    Ok(())
}

fn cmd_chain(cli: &Cli, sink: &mut Sink, input: &SemigroupInput, f: Option<i64>) -> Result<()> {
    let format = format_or(cli, Format::Jsonl, &RECORD_FORMATS)?;
    let s = read_semigroup(input)?;
    let bound = match f {
        Some(f) => i32::try_from(f).map_err(bad)?,
        None => s.frobenius(),
    };
    let chain = chain_cad(&s, bound).map_err(bad)?;
    let frame = u32::try_from(bound).ok().filter(|&b| b >= 1);
    let mut stream = RecordStream::start(sink, format, frame)?;
    let last = chain.len() - 1;
    for (i, link) in chain.links.iter().enumerate() {
        // in a chain every link but the last is the closure of its multiplicity
        stream.push(link, usize::from(i != last))?;
    }
    stream.end()?;
    Ok(())
}

fn read_records(path: &PathBuf) -> Result<Vec<NumericalSemigroup>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    let where_ = |e: &dyn fmt::Display| CliError::BadInput(format!("{}: {e}", path.display()));
    for value in serde_json::Deserializer::from_str(&text).into_iter::<serde_json::Value>() {
        let value = value.map_err(|e| where_(&e))?;
        collect_records(value, &mut out).map_err(|e| where_(&e))?;
    }
    Ok(out)
}

/// Accepts single records, arrays of records, covariety records and
/// enumeration streams; stream framing lines are skipped.
fn collect_records(
    value: serde_json::Value,
    out: &mut Vec<NumericalSemigroup>,
) -> Result<(), String> {
    use serde_json::Value;
    match value {
        Value::Array(items) => items.into_iter().try_for_each(|v| collect_records(v, out)),
        Value::Object(map) if map.contains_key("gaps") => {
            let r: SemigroupRecord =
                serde_json::from_value(Value::Object(map)).map_err(|e| e.to_string())?;
            out.push(r.to_semigroup().map_err(|e| e.to_string())?);
            Ok(())
        }
        Value::Object(mut map) if map.contains_key("members") => {
            collect_records(map.remove("members").expect("checked"), out)
        }
        Value::Object(map) if map.keys().all(|k| k == "F" || k == "count") => Ok(()),
        other => Err(format!("not a semigroup record: {other}")),
    }
}

fn cmd_cov_generate(cli: &Cli, sink: &mut Sink, files: &[PathBuf]) -> Result<()> {
    let format = format_or(
        cli,
        Format::Json,
        &[
            Format::Json,
            Format::Jsonl,
            Format::Csv,
            Format::Plain,
            Format::Dot,
        ],
    )?;
    let mut family = Vec::new();
    for path in files {
        family.extend(read_records(path)?);
    }
    let c = generated_covariety(&family).map_err(bad)?;
    match format {
        Format::Json => sink.json_pretty(&CovarietyRecord::from(&c))?,
        Format::Dot => write_tree(sink, &c, format)?,
        _ => {
            let frame = u32::try_from(c.delta().frobenius())
                .ok()
                .filter(|&b| b >= 1);
            let mut stream = RecordStream::start(sink, format, frame)?;
            for s in c.members() {
                let rank = if format == Format::Csv {
                    c.rank(s).map_err(bad)?
                } else {
                    0
                };
                stream.push(s, rank)?;
            }
            stream.end()?;
        }
    }
    Ok(())
}

fn cmd_count_rank1(cli: &Cli, sink: &mut Sink, f: u32) -> Result<()> {
    let format = format_or(
        cli,
        Format::Plain,
        &[Format::Plain, Format::Json, Format::Jsonl],
    )?;
    let n = frobenius::rank1_count(f).map_err(bad)?;
    match format {
        Format::Plain => sink.line(&n.to_string())?,
        _ => sink.line(&format!("{{\"F\":{f},\"count\":{n}}}"))?,
    }
    Ok(())
}

fn cmd_max_rank(cli: &Cli, sink: &mut Sink, f: u32) -> Result<()> {
    let format = format_or(cli, Format::Jsonl, &RECORD_FORMATS)?;
    let members = frobenius::max_rank_members(f).map_err(bad)?;
    let mut stream = RecordStream::start(sink, format, Some(f))?;
    for s in &members {
        stream.push(s, s.multiplicity() as usize - 1)?;
    }
    stream.end()?;
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(rename = "F")]
    frobenius: u32,
    status: &'static str,
    enumerated: usize,
    oracle: usize,
    duplicates: usize,
    missing: Vec<SemigroupRecord>,
    unexpected: Vec<SemigroupRecord>,
}

fn cmd_verify(cli: &Cli, sink: &mut Sink, f: u32) -> Result<()> {
    let format = format_or(
        cli,
        Format::Plain,
        &[Format::Plain, Format::Json, Format::Jsonl],
    )?;
    if f > MAX_BRUTE_F {
        return Err(CliError::BadInput(format!(
            "verify supports F up to {MAX_BRUTE_F}"
        )));
    }
    let oracle = brute_enumerate(f).map_err(bad)?;
    let mut listed = Vec::new();
    frobenius::enumerate(f, &enumerate_options(cli), |n| {
        listed.push(n.semigroup.clone())
    })
    .map_err(bad)?;
    let found: BTreeSet<_> = listed.iter().cloned().collect();
    let report = VerifyReport {
        frobenius: f,
        status: if found == oracle && found.len() == listed.len() {
            "match"
        } else {
            "mismatch"
        },
        enumerated: listed.len(),
        oracle: oracle.len(),
        duplicates: listed.len() - found.len(),
        missing: oracle.difference(&found).map(Into::into).collect(),
        unexpected: found.difference(&oracle).map(Into::into).collect(),
    };
    let matched = report.status == "match";
    match format {
        Format::Jsonl => {
            // the oracle's own stream, framed like `enumerate`
            let mut stream = RecordStream::start(sink, Format::Jsonl, Some(f))?;
            for s in &oracle {
                stream.push(s, 0)?;
            }
            stream.end()?;
            eprintln!("verify F={f}: {}", report.status);
        }
        Format::Plain if matched => {
            sink.line(&format!("match: F={f}, {} semigroups", report.oracle))?;
        }
        _ => sink.json_pretty(&report)?,
    }
    if matched {
        Ok(())
    } else {
        Err(CliError::Mismatch)
    }
}

fn write_tree(sink: &mut Sink, c: &Covariety, format: Format) -> Result<()> {
    let tree = c.tree();
    match format {
        Format::Dot => sink.line(tree_to_dot(&tree).trim_end())?,
        _ => sink.json_pretty(&TreeRecord::from(&tree))?,
    }
    Ok(())
}

fn cmd_tree(cli: &Cli, sink: &mut Sink, f: u32) -> Result<()> {
    let format = format_or(cli, Format::Dot, &[Format::Dot, Format::Json])?;
    write_tree(sink, &frobenius::af_covariety(f).map_err(bad)?, format)
}
