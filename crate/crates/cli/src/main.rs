use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tableau_sign::harness::{Harness, CLAIMS};
use tableau_sign::imbalance::imbalance_table;
use tableau_sign::rs::rs;
use tableau_sign::{Error, ImbalanceRecord, Permutation, Shape, Sign};

mod render;

const DEFAULT_MAX_N: usize = 18;

#[derive(Parser, Debug)]
#[command(name = "tableau-sign", version, about = "Sign-imbalance of Young tableaux and Robinson-Schensted sign checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Number of worker threads (default: all available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Imbalance and domino statistics of one shape, e.g. `5,4,2,1`.
    Imbalance {
        #[arg(allow_hyphen_values = true)]
        shape: String,
    },
    /// One row per partition of n, in decreasing lexicographic order.
    Table {
        n: usize,
        /// Keep rows matching key=value; keys: fb, vs, hs, v, h, d. Repeatable.
        #[arg(long = "filter", value_name = "KEY=VALUE")]
        filters: Vec<String>,
    },
    /// Run a verification sweep over an inclusive range such as `0..12`.
    Verify {
        /// One of the claim ids, or `all`.
        claim: String,
        range: String,
    },
    /// Robinson-Schensted images of a permutation and the sign relation.
    Rs { perm: String },
}

enum Failure {
    Usage(String),
    Overflow(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Overflow(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

enum Filter {
    Body(Shape),
    Vs(usize),
    Hs(usize),
    V(usize),
    H(usize),
    D(usize),
}

impl Filter {
    fn parse(text: &str) -> Result<Self, Failure> {
        let (key, value) = text
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("filter {text:?} is not key=value")))?;
        let count = || {
            value
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("filter {key}: {value:?} is not a count")))
        };
        Ok(match key.trim() {
            "fb" => Filter::Body(value.parse()?),
            "vs" => Filter::Vs(count()?),
            "hs" => Filter::Hs(count()?),
            "v" => Filter::V(count()?),
            "h" => Filter::H(count()?),
            "d" => Filter::D(count()?),
            other => return Err(Failure::Usage(format!("unknown filter key {other:?}"))),
        })
    }

    fn matches(&self, r: &ImbalanceRecord) -> bool {
        match self {
            Filter::Body(body) => &r.shape.fourling_body() == body,
            Filter::Vs(x) => r.vs == *x,
            Filter::Hs(x) => r.hs == *x,
            Filter::V(x) => r.v == *x,
            Filter::H(x) => r.h == *x,
            Filter::D(x) => r.d == *x,
        }
    }
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("TABLEAU_MAX_N") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("TABLEAU_MAX_N={text:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(n: usize) -> Result<(), Failure> {
    let cap = max_n()?;
    if n > cap {
        return Err(Failure::Usage(format!("n = {n} exceeds TABLEAU_MAX_N = {cap}")));
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("range {text:?} is not of the form a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Imbalance { shape } => {
            let shape: Shape = shape.parse()?;
            let record = ImbalanceRecord::compute(shape)?;
            render::record(out, cli.format, &record)?;
            Ok(true)
        }
        Command::Table { n, filters } => {
            let filters = filters.iter().map(|f| Filter::parse(f)).collect::<Result<Vec<_>, _>>()?;
            check_cap(n)?;
            let rows: Vec<ImbalanceRecord> = imbalance_table(n)?
                .into_iter()
                .filter(|r| filters.iter().all(|f| f.matches(r)))
                .collect();
            render::table(out, cli.format, &rows)?;
            Ok(true)
        }
        Command::Verify { claim, range } => {
            if claim != "all" && !CLAIMS.contains(&claim.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown claim {claim:?}; expected one of {} or all",
                    CLAIMS.join(", ")
                )));
            }
            let range = parse_range(&range)?;
            check_cap(*range.end())?;
            let reports = Harness::new().sweep(&claim, range)?;
            render::reports(out, cli.format, &reports)?;
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::Rs { perm } => {
            let pi: Permutation = perm.parse()?;
            let (p, q) = rs(&pi);
            let v = p.shape().v_count();
            let holds = pi.sign() == Sign::from_parity(v) * p.sign() * q.sign();
            render::rs(out, cli.format, &render::RsSummary { pi: &pi, p: &p, q: &q, v, holds })?;
            Ok(holds)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Overflow(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
