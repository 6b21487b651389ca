//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `verify` finds a disagreement, 2 on any
//! input or usage error (with a one-line diagnostic on stderr).

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{count_short_cycles, CycleCensusReport};
use crate::generators::GeneratorSpec;
use crate::graph::{girth, parse_alist, parse_edge_list, to_alist, to_edge_list, BipartiteGraph, Girth};
use crate::oracle::{brute_count_cycles, Guard};
use crate::report;
use crate::series::build_series;
use crate::trace::eigen_traces;

/// Relative tolerance of the eigen diagnostic.
pub const EIGEN_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "short-cycles", version, about = "Exact short-cycle counts for biregular bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Alist,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Exact integer traces only.
    Trace,
    /// Also report floating spectral traces next to the exact ones.
    Eigen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    EvenCycle,
    Heawood,
    SubdivisionK4,
    RandomBiregular,
}

#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Graph file, or '-' for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    /// Input format. Defaults to alist for '*.alist' files and standard
    /// input, edge list otherwise.
    #[arg(long, value_enum)]
    pub format: Option<GraphFormat>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count cycles of every even length g..=2g-2.
    Count {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
        #[arg(long, value_enum, default_value = "trace")]
        method: Method,
    },
    /// Compare the census against exhaustive cycle enumeration.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
        /// Raise the enumeration vertex limit (default 32).
        #[arg(long)]
        max_vertices_override: Option<usize>,
    },
    /// Print the walk-count series for degrees (c, d).
    Series {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 10)]
        kmax: usize,
    },
    /// Print the girth.
    Girth {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Generate a graph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Left class size; the first side of `complete`, half-length of
        /// `even-cycle`.
        #[arg(long)]
        n: Option<usize>,
        /// Right class size; the second side of `complete`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        attempts: usize,
        /// Output graph format.
        #[arg(long, value_enum, default_value = "alist")]
        format: GraphFormat,
    },
}

/// An error that ends the run with a diagnostic line.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(Failure(message)) => {
            let first = message.lines().next().unwrap_or_default();
            let _ = writeln!(stderr, "error: {first}");
            2
        }
    }
}

fn read_graph(input: &InputArgs, stdin: &mut dyn Read) -> Result<BipartiteGraph, Failure> {
    let (bytes, default_format) = if input.input == "-" {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        (buf, GraphFormat::Alist)
    } else {
        let path = Path::new(&input.input);
        let bytes = std::fs::read(path).map_err(|e| Failure(format!("{}: {e}", input.input)))?;
        let format = match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("alist") => GraphFormat::Alist,
            _ => GraphFormat::Edges,
        };
        (bytes, format)
    };
    let text = String::from_utf8(bytes).map_err(|_| Failure("input is not valid UTF-8".into()))?;
    let graph = match input.format.unwrap_or(default_format) {
        GraphFormat::Alist => parse_alist(&text)?,
        GraphFormat::Edges => parse_edge_list(&text)?,
    };
    Ok(graph)
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<(String, i32), Failure> {
    match command {
        Command::Count { input, output, method } => {
            let graph = read_graph(&input, stdin)?;
            let mut census = count_short_cycles(&graph)?;
            if method == Method::Eigen {
                attach_eigen(&graph, &mut census)?;
            }
            Ok((render_report(&census, output), 0))
        }
        Command::Verify {
            input,
            output,
            max_vertices_override,
        } => {
            let graph = read_graph(&input, stdin)?;
            let guard = match max_vertices_override {
                Some(limit) => Guard {
                    max_vertices: limit,
                    max_length: usize::MAX,
                },
                None => Guard::default(),
            };
            let outcome = verify(&graph, guard)?;
            let code = if outcome.pass { 0 } else { 1 };
            Ok((render_verify(&outcome, output), code))
        }
        Command::Series { c, d, kmax } => {
            if c == 0 || d == 0 {
                return Err(Failure("degrees must be positive".into()));
            }
            let table = build_series(c, d, kmax);
            Ok((serde_json::to_string_pretty(&table)? + "\n", 0))
        }
        Command::Girth { input, output } => {
            let graph = read_graph(&input, stdin)?;
            let g = girth(&graph);
            let text = match output {
                OutputFormat::Json => serde_json::to_string(&serde_json::json!({ "girth": g }))? + "\n",
                OutputFormat::Csv => format!("girth\n{g}\n"),
                OutputFormat::Human => format!("{g}\n"),
            };
            Ok((text, 0))
        }
        Command::Gen {
            family,
            n,
            m,
            c,
            d,
            seed,
            attempts,
            format,
        } => {
            let need = |value: Option<usize>, flag: &str| {
                value.ok_or_else(|| Failure(format!("--{flag} is required for this family")))
            };
            let spec = match family {
                Family::Complete => GeneratorSpec::Complete {
                    a: need(n, "n")?,
                    b: need(m, "m")?,
                },
                Family::EvenCycle => GeneratorSpec::EvenCycle { half: need(n, "n")? },
                Family::Heawood => GeneratorSpec::Heawood,
                Family::SubdivisionK4 => GeneratorSpec::SubdivisionK4,
                Family::RandomBiregular => GeneratorSpec::RandomBiregular {
                    n: need(n, "n")?,
                    m: need(m, "m")?,
                    c: need(c, "c")?,
                    d: need(d, "d")?,
                    seed,
                    max_attempts: attempts,
                },
            };
            let graph = spec.build()?;
            let text = match format {
                GraphFormat::Alist => to_alist(&graph),
                GraphFormat::Edges => to_edge_list(&graph),
            };
            Ok((text, 0))
        }
    }
}

fn attach_eigen(graph: &BipartiteGraph, census: &mut CycleCensusReport) -> Result<(), Failure> {
    let max_length = match census.graph.girth {
        Girth::Finite(g) => 2 * g - 2,
        Girth::Infinite => return Ok(()),
    };
    census.eigen_diagnostic = Some(eigen_traces(graph, max_length, EIGEN_TOLERANCE)?);
    Ok(())
}

fn render_report(census: &CycleCensusReport, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => report::to_json(census) + "\n",
        OutputFormat::Csv => report::to_csv(census),
        OutputFormat::Human => report::to_human(census),
    }
}

#[derive(Debug, Serialize)]
struct VerifyRow {
    length: usize,
    #[serde(with = "crate::bigjson")]
    census: num_bigint::BigUint,
    oracle: u64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct VerifyOutcome {
    girth: Girth,
    pass: bool,
    lengths: Vec<VerifyRow>,
}

fn verify(graph: &BipartiteGraph, guard: Guard) -> Result<VerifyOutcome, Failure> {
    let census = count_short_cycles(graph)?;
    let mut lengths = Vec::new();
    for entry in &census.census {
        let oracle = brute_count_cycles(graph, entry.length, guard)?;
        lengths.push(VerifyRow {
            length: entry.length,
            census: entry.count.clone(),
            oracle,
            pass: entry.count == oracle.into(),
        });
    }
    Ok(VerifyOutcome {
        girth: census.graph.girth,
        pass: lengths.iter().all(|r| r.pass),
        lengths,
    })
}

fn render_verify(outcome: &VerifyOutcome, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => serde_json::to_string_pretty(outcome).expect("serializes") + "\n",
        OutputFormat::Csv => {
            let mut out = String::from("length,census,oracle,pass\n");
            for r in &outcome.lengths {
                let _ = writeln!(out, "{},{},{},{}", r.length, r.census, r.oracle, r.pass);
            }
            out
        }
        OutputFormat::Human => {
            let mut out = format!("girth = {}\n", outcome.girth);
            let _ = writeln!(out, "{:>4}  {:>12}  {:>12}  result", "L", "census", "oracle");
            for r in &outcome.lengths {
                let verdict = if r.pass { "pass" } else { "FAIL" };
                let _ = writeln!(out, "{:>4}  {:>12}  {:>12}  {verdict}", r.length, r.census, r.oracle);
            }
            let _ = writeln!(out, "{}", if outcome.pass { "all lengths agree" } else { "MISMATCH" });
            out
        }
    }
}
