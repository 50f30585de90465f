//! Argument handling and report rendering for the `wilfkit` binary.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wilfkit::{
    board_of, compare_sequences, count_sequence, egge_check, map_bijection, motzkin, s_bivariate,
    schroeder_gf, search_unbalanced, simples_in_class, simples_in_class_including_degenerate,
    verify_functional_equation, CountFilter, CountReport, Direction, EquivalenceVerdict,
    FilledBoard, Frame, PatternSet, Permutation, SearchConfig, SearchError, TruncatedSeries,
    DEFAULT_NODE_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "wilfkit",
    version,
    about = "Pattern-avoidance counts, board bijection and series checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true, env = "WILFKIT_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Involutions,
    SumDecomposable,
    SkewDecomposable,
    Simple,
}

impl From<FilterArg> for CountFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => CountFilter::All,
            FilterArg::Involutions => CountFilter::Involutions,
            FilterArg::SumDecomposable => CountFilter::SumDecomposable,
            FilterArg::SkewDecomposable => CountFilter::SkewDecomposable,
            FilterArg::Simple => CountFilter::Simple,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    /// From Av(1234) to Av(1324, 3416725).
    #[value(name = "to-1324-class")]
    To1324Class,
    /// From Av(1324, 3416725) to Av(1234).
    #[value(name = "to-1234-class")]
    To1234Class,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::To1324Class => Direction::To1324Class,
            DirectionArg::To1234Class => Direction::To1234Class,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count avoiders of a pattern set for n = 1..=max-n.
    Count(CountArgs),
    /// Compare the counts of two pattern sets.
    Equiv(EquivArgs),
    /// Send a permutation across the board bijection.
    Map(MapArgs),
    /// List the simple permutations of length n in a class.
    Simples(SimplesArgs),
    /// Series expansions and the functional-equation check.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Search for unbalanced Wilf-equivalences between pattern-length shapes.
    Search(SearchArgs),
    /// Compare Egge's eight sets {2143, 3142, p} with the separable permutations.
    EggeCheck(MaxN<9>),
    /// Count involutions avoiding a pattern set.
    Involutions(InvolutionArgs),
}

#[derive(Debug, Args)]
pub struct MaxN<const D: u64> {
    #[arg(long, default_value_t = D, value_parser = clap::value_parser!(u64).range(1..=wilfkit::MAX_COUNT_LEN as u64))]
    pub max_n: u64,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Comma-separated patterns, e.g. 1324,3416725.
    #[arg(long, value_parser = parse_patterns)]
    pub patterns: PatternSet,
    #[command(flatten)]
    pub max_n: MaxN<9>,
    #[arg(long, value_enum, default_value_t = FilterArg::All)]
    pub filter: FilterArg,
}

#[derive(Debug, Args)]
pub struct InvolutionArgs {
    #[arg(long, value_parser = parse_patterns)]
    pub patterns: PatternSet,
    #[command(flatten)]
    pub max_n: MaxN<9>,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    #[arg(long, value_parser = parse_patterns)]
    pub left: PatternSet,
    #[arg(long, value_parser = parse_patterns)]
    pub right: PatternSet,
    #[command(flatten)]
    pub max_n: MaxN<9>,
    #[arg(long, value_enum, default_value_t = FilterArg::All)]
    pub filter: FilterArg,
    /// Exit with status 1 if the counts diverge.
    #[arg(long)]
    pub expect_equal: bool,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, value_parser = parse_perm)]
    pub perm: Permutation,
    #[arg(long, value_enum, default_value_t = DirectionArg::To1324Class)]
    pub direction: DirectionArg,
}

#[derive(Debug, Args)]
pub struct SimplesArgs {
    #[arg(long, value_parser = parse_patterns)]
    pub patterns: PatternSet,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=wilfkit::MAX_COUNT_LEN as u64))]
    pub n: u64,
    /// Also report lengths 1 and 2.
    #[arg(long)]
    pub include_degenerate: bool,
}

#[derive(Debug, Args)]
pub struct OrderArg<const D: usize> {
    #[arg(long, default_value_t = D)]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Large Schröder numbers from the closed form.
    Schroeder(OrderArg<10>),
    /// Motzkin numbers.
    Motzkin(OrderArg<10>),
    /// Residual of the functional equation at the Schröder series.
    VerifyEq1(OrderArg<20>),
    /// Coefficients of s(u, v) up to total degree `order`.
    SCoeffs(OrderArg<10>),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub left_lengths: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub right_lengths: Vec<usize>,
    #[command(flatten)]
    pub max_n: MaxN<8>,
    /// Largest estimated node count to accept.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
}

fn parse_patterns(text: &str) -> Result<PatternSet, String> {
    let set = PatternSet::parse(text).map_err(|e| e.to_string())?;
    if set.is_empty() {
        return Err("at least one pattern is required".into());
    }
    Ok(set)
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse().map_err(|e: wilfkit::PermError| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Exit status for a completed command: success or a failed verification.
type Status = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    run(&cli, out, err)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = cli.threads {
        pool = pool.num_threads(usize::from(threads));
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let status = pool.install(|| dispatch(cli, &mut buffer));
    if let Err(e) = out.write_all(&buffer).and_then(|()| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match status {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Status {
    let format = cli.format;
    match &cli.command {
        Command::Count(a) => {
            let report = count_sequence(a.max_n.max_n as usize, &a.patterns, a.filter.into());
            write_counts(out, format, &report)
        }
        Command::Involutions(a) => {
            let report = count_sequence(
                a.max_n.max_n as usize,
                &a.patterns,
                CountFilter::Involutions,
            );
            write_counts(out, format, &report)
        }
        Command::Equiv(a) => equiv(out, format, a),
        Command::Map(a) => map(out, format, a),
        Command::Simples(a) => simples(out, format, a),
        Command::Series(s) => series(out, format, s),
        Command::Search(a) => search(out, format, a),
        Command::EggeCheck(a) => egge(out, format, a.max_n as usize),
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Status {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn write_counts(out: &mut dyn Write, format: Format, report: &CountReport) -> Status {
    match format {
        Format::Json => json_line(out, report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "count"])?;
            for (i, c) in report.counts.iter().enumerate() {
                w.write_record([(i + 1).to_string(), c.to_string()])?;
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Format::Text => {
            writeln!(out, "basis {} filter {}", report.basis, report.filter)?;
            writeln!(out, "n\tcount")?;
            for (i, c) in report.counts.iter().enumerate() {
                writeln!(out, "{}\t{c}", i + 1)?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct EquivReport {
    left: CountReport,
    right: CountReport,
    verdict: EquivalenceVerdict,
}

fn equiv(out: &mut dyn Write, format: Format, a: &EquivArgs) -> Status {
    let n_max = a.max_n.max_n as usize;
    let left = count_sequence(n_max, &a.left, a.filter.into());
    let right = count_sequence(n_max, &a.right, a.filter.into());
    let verdict = compare_sequences(&left.counts, &right.counts);
    let report = EquivReport {
        left,
        right,
        verdict,
    };
    match format {
        Format::Json => {
            json_line(out, &report)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "left", "right"])?;
            for (i, (l, r)) in report
                .left
                .counts
                .iter()
                .zip(&report.right.counts)
                .enumerate()
            {
                w.write_record([(i + 1).to_string(), l.to_string(), r.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "n\t{}\t{}", report.left.basis, report.right.basis)?;
            for (i, (l, r)) in report
                .left
                .counts
                .iter()
                .zip(&report.right.counts)
                .enumerate()
            {
                writeln!(out, "{}\t{l}\t{r}", i + 1)?;
            }
            match verdict.first_divergence {
                None => writeln!(out, "equal through n={}", verdict.agrees_up_to)?,
                Some(d) => writeln!(out, "diverge at n={}: {} vs {}", d.n, d.left, d.right)?,
            }
        }
    }
    if a.expect_equal && !verdict.is_equal() {
        return Ok(EXIT_VERIFICATION_FAILED);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MapReport {
    input: Permutation,
    output: Permutation,
    direction: Direction,
    frame: Frame,
    input_board: FilledBoard,
    output_board: FilledBoard,
}

fn map(out: &mut dyn Write, format: Format, a: &MapArgs) -> Status {
    let direction: Direction = a.direction.into();
    let output = map_bijection(&a.perm, direction).map_err(|e| Failure::Usage(e.to_string()))?;
    let before = board_of(&a.perm).map_err(|e| Failure::Usage(e.to_string()))?;
    let after = board_of(&output).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = MapReport {
        input: a.perm.clone(),
        output,
        direction,
        frame: before.frame,
        input_board: before.filled,
        output_board: after.filled,
    };
    match format {
        Format::Json => json_line(out, &report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["input", "output"])?;
            w.write_record([report.input.to_string(), report.output.to_string()])?;
            w.flush()?;
            Ok(EXIT_OK)
        }
        Format::Text => {
            writeln!(out, "{} -> {}", report.input, report.output)?;
            writeln!(out, "input board:\n{}", report.input_board.render_ascii())?;
            writeln!(out, "output board:\n{}", report.output_board.render_ascii())?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct SimplesReport<'a> {
    basis: &'a PatternSet,
    n: usize,
    simples: Vec<Permutation>,
}

fn simples(out: &mut dyn Write, format: Format, a: &SimplesArgs) -> Status {
    let n = a.n as usize;
    let simples = if a.include_degenerate {
        simples_in_class_including_degenerate(n, &a.patterns)
    } else {
        simples_in_class(n, &a.patterns)
    };
    let report = SimplesReport {
        basis: &a.patterns,
        n,
        simples,
    };
    match format {
        Format::Json => json_line(out, &report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["permutation"])?;
            for p in &report.simples {
                w.write_record([p.to_string()])?;
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Format::Text => {
            for p in &report.simples {
                writeln!(out, "{p}")?;
            }
            writeln!(
                out,
                "{} simple permutations of length {n}",
                report.simples.len()
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn write_series(out: &mut dyn Write, format: Format, s: &TruncatedSeries) -> Status {
    match format {
        Format::Json => json_line(out, s),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "coefficient"])?;
            for (k, c) in s.coeffs().iter().enumerate() {
                w.write_record([k.to_string(), c.to_string()])?;
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Format::Text => {
            writeln!(out, "n\tcoefficient")?;
            for (k, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{k}\t{c}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct ResidualReport {
    order: usize,
    zero: bool,
    first_nonzero: Option<usize>,
    residual: TruncatedSeries,
}

fn series(out: &mut dyn Write, format: Format, command: &SeriesCommand) -> Status {
    match command {
        SeriesCommand::Schroeder(o) => write_series(out, format, &schroeder_gf(o.order)),
        SeriesCommand::Motzkin(o) => write_series(out, format, &motzkin(o.order)),
        SeriesCommand::VerifyEq1(o) => {
            let report =
                verify_functional_equation(o.order).map_err(|e| Failure::Usage(e.to_string()))?;
            let summary = ResidualReport {
                order: report.order,
                zero: report.is_zero(),
                first_nonzero: report.first_nonzero(),
                residual: report.residual,
            };
            match format {
                Format::Json => {
                    json_line(out, &summary)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["n", "residual"])?;
                    for (k, c) in summary.residual.coeffs().iter().enumerate() {
                        w.write_record([k.to_string(), c.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Text => match summary.first_nonzero {
                    None => writeln!(out, "residual = 0 through x^{}", summary.order)?,
                    Some(k) => writeln!(out, "residual nonzero from x^{k}: {}", summary.residual)?,
                },
            }
            Ok(if summary.zero {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        SeriesCommand::SCoeffs(o) => {
            let s = s_bivariate(o.order);
            match format {
                Format::Json => json_line(out, &s),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["a", "b", "coefficient"])?;
                    for ((a, b), c) in s.terms() {
                        w.write_record([a.to_string(), b.to_string(), c.to_string()])?;
                    }
                    w.flush()?;
                    Ok(EXIT_OK)
                }
                Format::Text => {
                    writeln!(out, "a\tb\tcoefficient")?;
                    for ((a, b), c) in s.terms() {
                        writeln!(out, "{a}\t{b}\t{c}")?;
                    }
                    Ok(EXIT_OK)
                }
            }
        }
    }
}

fn search(out: &mut dyn Write, format: Format, a: &SearchArgs) -> Status {
    let config = SearchConfig {
        node_budget: a.budget,
    };
    let report = search_unbalanced(
        &a.left_lengths,
        &a.right_lengths,
        a.max_n.max_n as usize,
        config,
    )
    .map_err(|e| match e {
        SearchError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        SearchError::InvalidLengths(_) => Failure::Usage(e.to_string()),
    })?;
    match format {
        Format::Json => json_line(out, &report),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["left", "right", "counts"])?;
            for c in &report.survivors {
                let counts: Vec<String> = c.counts.iter().map(u64::to_string).collect();
                w.write_record([c.left.to_string(), c.right.to_string(), counts.join(" ")])?;
            }
            w.flush()?;
            Ok(EXIT_OK)
        }
        Format::Text => {
            writeln!(
                out,
                "{} left sets, {} right classes ({} reducible), n <= {}",
                report.left_sets,
                report.right_classes,
                report.reducible.len(),
                report.n_max
            )?;
            writeln!(out, "{} candidates", report.survivors.len())?;
            for c in &report.survivors {
                writeln!(out, "{} ~ {}", c.left, c.right)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn egge(out: &mut dyn Write, format: Format, n_max: usize) -> Status {
    let rows = egge_check(n_max);
    let all_equal = rows.iter().all(|r| r.verdict.is_equal());
    match format {
        Format::Json => {
            json_line(out, &rows)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["pattern", "agrees_up_to", "diverges_at"])?;
            for r in &rows {
                let diverges = r
                    .verdict
                    .first_divergence
                    .map_or(String::new(), |d| d.n.to_string());
                w.write_record([
                    r.pattern.to_string(),
                    r.verdict.agrees_up_to.to_string(),
                    diverges,
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in &rows {
                match r.verdict.first_divergence {
                    None => writeln!(
                        out,
                        "{}\tequal through n={}",
                        r.basis, r.verdict.agrees_up_to
                    )?,
                    Some(d) => writeln!(
                        out,
                        "{}\tdiverges at n={}: {} vs {}",
                        r.basis, d.n, d.left, d.right
                    )?,
                }
            }
        }
    }
    Ok(if all_equal {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    })
}
