//! The `isk4` command line.
//!
//! Exit codes: 0 on success, 1 when a pattern or ISK4 is not found or a
//! strict run hits a class violation, 2 on usage, input or parse errors.

use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use isk4::colorers::{
    color_c1, color_c2, color_c3, color_general, color_greedy, color_triangle_free, ColoringResult, Mode,
};
use isk4::io::{parse_graph, serialize_coloring, to_graph6, Format, JsonReport};
use isk4::oracle::{
    contains_isk4, contains_isk4_unbounded, enumerate_graphs, optimal_coloring, parse_filters, run_suite,
    EnumOptions, SuiteOptions, MAX_ENUM_N, SUITES,
};
use isk4::patterns::{find, find_triangle, PatternKind};
use isk4::{Error, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "isk4", version, about = "Colorings and structure detection for ISK4-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look for an induced pattern and print a witness.
    Detect {
        #[arg(long, value_parser = parse_kind)]
        pattern: PatternKind,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Color a graph with one of the constructive procedures.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Stop at the first class violation (default).
        #[arg(long, conflicts_with = "tolerant")]
        strict: bool,
        /// Record class violations and fall back to greedy on the piece.
        #[arg(long)]
        tolerant: bool,
        /// Run the brute-force ISK4 check before coloring.
        #[arg(long)]
        verify_input: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force ground truth.
    Oracle {
        #[arg(value_enum)]
        query: OracleQuery,
        #[command(flatten)]
        input: Input,
        /// Lift the vertex limit of the ISK4 sweep.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate graphs up to isomorphism, optionally running a suite.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    file: PathBuf,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// Vertex count `k` or range `a..b` (inclusive).
    #[arg(long = "n", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long)]
    connected: bool,
    /// Comma-separated filters, e.g. `isk4-free,triangle-free`.
    #[arg(long)]
    filter: Option<String>,
    /// Suite to run over the enumerated graphs.
    #[arg(long)]
    check: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in suite reports.
    #[arg(long)]
    timing: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Auto,
    TriangleFree,
    General,
    C1,
    C2,
    C3,
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleQuery {
    Chi,
    Isk4,
}

fn parse_kind(s: &str) -> Result<PatternKind, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a vertex count"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    if b > MAX_ENUM_N {
        return Err(format!("enumeration is limited to n <= {MAX_ENUM_N}"));
    }
    Ok(a..=b)
}

/// A failure that ends the command with an exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ClassViolation(_) | Error::ContainsTriangle(_) | Error::ContainsK4(_) => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
    styled: bool,
    argv: Vec<String>,
}

/// Runs the CLI with `args` (program name first). Nothing is read from the
/// environment; `styled` turns on ANSI color in error messages.
pub fn run_with(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write, styled: bool) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = if styled { e.render().ansi().to_string() } else { e.render().to_string() };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        out,
        err,
        stdin,
        styled,
        argv: args.iter().skip(1).cloned().collect(),
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let prefix = if io.styled { "\x1b[31merror\x1b[0m" } else { "error" };
            let _ = writeln!(io.err, "{prefix}: {}", f.message);
            f.code
        }
    }
}

/// [`run_with`] on plain, unstyled streams with an empty standard input.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with(args, &mut std::io::empty(), out, err, false)
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Failure> {
    match cmd {
        Command::Detect { pattern, input, json } => detect(io, pattern, &input, json),
        Command::Color {
            input,
            algorithm,
            strict: _,
            tolerant,
            verify_input,
            json,
            seed,
        } => {
            let mode = if tolerant { Mode::Tolerant } else { Mode::Strict };
            color(io, &input, algorithm, mode, verify_input, json, seed)
        }
        Command::Oracle {
            query,
            input,
            force,
            json,
        } => oracle(io, query, &input, force, json),
        Command::Enumerate(args) => enumerate(io, &args),
    }
}

fn load(io: &mut Io, input: &Input) -> Result<(Graph, Vec<u8>), Failure> {
    let (bytes, path) = if input.file == Path::new("-") {
        let mut b = Vec::new();
        io.stdin.read_to_end(&mut b)?;
        (b, None)
    } else {
        let b = std::fs::read(&input.file)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.file.display())))?;
        (b, Some(input.file.as_path()))
    };
    let text = std::str::from_utf8(&bytes).map_err(|_| Failure::usage("input is not UTF-8 text"))?;
    let format = Format::resolve(input.format, path, text);
    let g = parse_graph(text, format).map_err(|e| Failure::usage(format!("{format}: {e}")))?;
    Ok((g, bytes))
}

fn emit_json(io: &mut Io, input: &[u8], result: Value) -> Result<(), Failure> {
    let report = JsonReport::new(io.argv.clone(), Some(input), result);
    io.out.write_all(report.to_json().as_bytes())?;
    Ok(())
}

fn detect(io: &mut Io, kind: PatternKind, input: &Input, json: bool) -> Result<i32, Failure> {
    let (g, bytes) = load(io, input)?;
    let w = find(&g, kind);
    if json {
        emit_json(io, &bytes, json!({ "pattern": kind.name(), "witness": w }))?;
    } else {
        match &w {
            Some(w) => writeln!(io.out, "found {kind}: {:?}", w.vertices)?,
            None => writeln!(io.out, "no {kind}")?,
        }
    }
    Ok(if w.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn color(
    io: &mut Io,
    input: &Input,
    algorithm: Algorithm,
    mode: Mode,
    verify_input: bool,
    json: bool,
    seed: u64,
) -> Result<i32, Failure> {
    let (g, bytes) = load(io, input)?;
    if verify_input {
        if let Some(w) = contains_isk4(&g)? {
            let msg = format!("input contains an ISK4 on {:?}", w.vertices);
            if mode == Mode::Strict {
                return Err(Failure {
                    code: EXIT_NEGATIVE,
                    message: msg,
                });
            }
            writeln!(io.err, "warning: {msg}")?;
        }
    }
    let algorithm = match algorithm {
        Algorithm::Auto if find_triangle(&g).is_none() => Algorithm::TriangleFree,
        Algorithm::Auto => Algorithm::General,
        a => a,
    };
    let result: ColoringResult = match algorithm {
        Algorithm::TriangleFree => color_triangle_free(&g, mode)?,
        Algorithm::General | Algorithm::Auto => color_general(&g, mode)?,
        Algorithm::C1 => color_c1(&g, mode)?,
        Algorithm::C2 => color_c2(&g, mode)?,
        Algorithm::C3 => color_c3(&g, mode)?,
        Algorithm::Greedy => color_greedy(&g, seed),
    };
    let text = serialize_coloring(&result, json.then(|| (io.argv.clone(), bytes.as_slice())));
    io.out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn oracle(io: &mut Io, query: OracleQuery, input: &Input, force: bool, json: bool) -> Result<i32, Failure> {
    let (g, bytes) = load(io, input)?;
    match query {
        OracleQuery::Chi => {
            let c = optimal_coloring(&g)?;
            if json {
                emit_json(io, &bytes, json!({ "chi": c.palette_size(), "coloring": c.colors() }))?;
            } else {
                writeln!(io.out, "chi={}", c.palette_size())?;
            }
            Ok(EXIT_OK)
        }
        OracleQuery::Isk4 => {
            let w = if force { contains_isk4_unbounded(&g)? } else { contains_isk4(&g)? };
            if json {
                emit_json(io, &bytes, json!({ "isk4": w }))?;
            } else {
                match &w {
                    Some(w) => writeln!(io.out, "isk4 branch={:?} vertices={:?}", w.branch, w.vertices)?,
                    None => writeln!(io.out, "isk4-free")?,
                }
            }
            Ok(if w.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn enumerate(io: &mut Io, args: &EnumerateArgs) -> Result<i32, Failure> {
    let pool = match args.jobs {
        Some(k) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Failure::usage(e.to_string()))?,
        ),
        None => None,
    };
    let argv = io.argv.clone();
    let mut buf = Vec::new();
    let code = match pool {
        Some(p) => p.install(|| enumerate_in_pool(&mut buf, &argv, args)),
        None => enumerate_in_pool(&mut buf, &argv, args),
    }?;
    io.out.write_all(&buf)?;
    Ok(code)
}

struct Sink<'a> {
    out: &'a mut Vec<u8>,
    argv: &'a [String],
}

fn enumerate_in_pool(out: &mut Vec<u8>, argv: &[String], args: &EnumerateArgs) -> Result<i32, Failure> {
    let io = &mut Sink { out, argv };
    let filters = match &args.filter {
        Some(list) => parse_filters(list)?,
        None => Vec::new(),
    };
    if let Some(name) = &args.check {
        if !filters.is_empty() {
            return Err(Failure::usage("--filter cannot be combined with --check; suites fix their own filters"));
        }
        if !SUITES.contains(&name.as_str()) {
            return Err(Failure::usage(format!("unknown suite `{name}`; known: {}", SUITES.join(", "))));
        }
        let opts = SuiteOptions {
            seed: args.seed,
            connected: args.connected,
            ..SuiteOptions::default()
        };
        let start = Instant::now();
        let mut report = run_suite(name, args.n.clone(), &opts)?;
        if args.timing {
            report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        if args.json {
            let r = JsonReport::new(io.argv.to_vec(), None, &report);
            io.out.write_all(r.to_json().as_bytes())?;
        } else {
            writeln!(io.out, "suite {}: {} graphs, {} checks", report.suite, report.graphs, report.checks)?;
            for c in &report.counts {
                let max = c.max_value.map_or("-".to_string(), |m| m.to_string());
                writeln!(io.out, "n={} graphs={} checks={} max={max}", c.n, c.graphs, c.checks)?;
            }
            if let Some(m) = report.max_value {
                writeln!(io.out, "max {}={m}", report.parameters.statistic)?;
            }
            for e in &report.extremal {
                let tag = if e.exceeds_threshold { " over threshold" } else { "" };
                writeln!(io.out, "extremal {} value={}{tag}", e.graph6, e.value)?;
            }
            for v in &report.violations {
                writeln!(io.out, "violation {}: {}", v.graph6, v.message)?;
            }
            if let Some(t) = report.wall_time_ms {
                writeln!(io.out, "wall_time_ms={t}")?;
            }
            writeln!(io.out, "{}", if report.passed() { "ok" } else { "FAILED" })?;
        }
        return Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE });
    }
    let mut opts = EnumOptions {
        connected: args.connected,
        ..EnumOptions::default()
    };
    for f in filters {
        opts = opts.with(f);
    }
    let mut per_n = Vec::new();
    for n in args.n.clone() {
        let graphs = enumerate_graphs(n, &opts)?;
        per_n.push((n, graphs.iter().map(to_graph6).collect::<Vec<_>>()));
    }
    if args.json {
        let counts: Vec<Value> = per_n.iter().map(|(n, gs)| json!({ "n": n, "graphs": gs.len() })).collect();
        let all: Vec<&String> = per_n.iter().flat_map(|(_, gs)| gs).collect();
        let r = JsonReport::new(io.argv.to_vec(), None, json!({ "counts": counts, "graph6": all }));
        io.out.write_all(r.to_json().as_bytes())?;
    } else {
        for (_, gs) in &per_n {
            for g in gs {
                writeln!(io.out, "{g}")?;
            }
        }
    }
    Ok(EXIT_OK)
}
