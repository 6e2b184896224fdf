//! `comb`: recognize, decompose and validate combs from the command line.
//!
//! Reports are JSON objects with sorted keys. Exit codes: 0 for a comb (or a
//! valid decomposition, or success), 1 for a non-comb (or an invalid
//! decomposition), 2 for unreadable or malformed input.

mod input;
mod report;

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use comb_core::corpus::{census, census_csv, generate_comb, CombParams};
use comb_core::{comb_decompose, validate_comb, write_edgelist, write_graph6, RecognitionResult};
use serde_json::{json, Value};

use crate::input::{read_graph, read_source, Format};
use crate::report::Report;

#[derive(Parser)]
#[command(name = "comb", version, about = "Recognize split graphs with no induced chair or co-chair")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a graph is a comb.
    Recognize(GraphArgs),
    /// Print a comb decomposition or a forbidden-pattern witness.
    Decompose(GraphArgs),
    /// Check a decomposition against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        /// A bare decomposition or a `decompose` report.
        #[arg(long)]
        decomposition: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Build a comb from size parameters.
    Generate {
        #[arg(long)]
        params: PathBuf,
        /// Overrides the seed in the parameter file.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Count isomorphism classes per order as CSV.
    Census {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Print the complement in the input's format.
    Complement {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Input file, or `-` for one graph6 string per line on stdin.
    file: PathBuf,
    /// Defaults to detection from the file contents.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("comb: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    let mut out = io::stdout().lock();
    match command {
        Command::Recognize(args) => recognize(&args, "recognize", &mut out),
        Command::Decompose(args) => recognize(&args, "decompose", &mut out),
        Command::Validate { graph, decomposition, format } => validate(&graph, &decomposition, format, &mut out),
        Command::Generate { params, seed, emit } => generate(&params, seed, emit, &mut out),
        Command::Census { max_n } => {
            out.write_all(census_csv(&census(max_n)?).as_bytes())?;
            Ok(0)
        }
        Command::Complement { file, format } => {
            let (text, _) = read_source(&file)?;
            let (g, format) = read_graph(&text, format)?;
            let c = g.complement();
            match format {
                Format::Graph6 => writeln!(out, "{}", write_graph6(&c))?,
                Format::Edgelist => out.write_all(write_edgelist(&c).as_bytes())?,
            }
            Ok(0)
        }
    }
}

fn recognition_result(result: &RecognitionResult, full: bool, vertex_count: usize) -> Value {
    match result {
        RecognitionResult::Decomposition(d) if full => json!({ "comb": d }),
        RecognitionResult::Decomposition(d) => {
            json!({ "comb": { "vertex_count": vertex_count, "n": d.n, "l": d.l, "k0": d.k0 } })
        }
        RecognitionResult::Witness(w) => json!({ "not_comb": w }),
    }
}

fn recognize(args: &GraphArgs, command: &str, out: &mut impl Write) -> Result<u8> {
    let full = command == "decompose";
    if args.file.as_os_str() == "-" && args.format != Some(Format::Edgelist) {
        return recognize_lines(command, full, out);
    }
    let start = Instant::now();
    let (text, bytes) = read_source(&args.file)?;
    let (g, _) = read_graph(&text, args.format)?;
    let result = comb_decompose(&g)?;
    let report = Report::new(command, &bytes, recognition_result(&result, full, g.vertex_count()), start);
    writeln!(out, "{}", report.to_json())?;
    Ok(if result.is_comb() { 0 } else { 1 })
}

/// One JSON line per graph6 line of stdin. Malformed lines are reported on
/// stderr and make the exit code 2.
fn recognize_lines(command: &str, full: bool, out: &mut impl Write) -> Result<u8> {
    let mut code = 0;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.context("reading stdin")?;
        if line.trim().is_empty() {
            continue;
        }
        let start = Instant::now();
        let parsed = comb_core::parse_graph6(&line).and_then(|g| comb_decompose(&g).map(|r| (g, r)));
        match parsed {
            Ok((g, result)) => {
                let report =
                    Report::new(command, line.trim().as_bytes(), recognition_result(&result, full, g.vertex_count()), start);
                writeln!(out, "{}", report.to_json())?;
                if !result.is_comb() && code == 0 {
                    code = 1;
                }
            }
            Err(e) => {
                eprintln!("comb: line {}: {e}", i + 1);
                code = 2;
            }
        }
    }
    Ok(code)
}

fn validate(graph: &PathBuf, decomposition: &PathBuf, format: Option<Format>, out: &mut impl Write) -> Result<u8> {
    let start = Instant::now();
    let (text, mut bytes) = read_source(graph)?;
    let (g, _) = read_graph(&text, format)?;
    let (dec_text, dec_bytes) = read_source(decomposition)?;
    bytes.extend_from_slice(&dec_bytes);
    let value: Value = serde_json::from_str(&dec_text)
        .with_context(|| format!("{}: not valid JSON", decomposition.display()))?;
    let dec_value = match value.pointer("/result/comb") {
        Some(inner) => inner.clone(),
        None if value.pointer("/result").is_some() => {
            bail!("{}: report does not contain a decomposition", decomposition.display())
        }
        None => value,
    };
    let dec = serde_json::from_value(dec_value)
        .with_context(|| format!("{}: not a comb decomposition", decomposition.display()))?;
    let violations = validate_comb(&g, &dec);
    let result = if violations.is_empty() {
        json!({ "valid": true })
    } else {
        json!({ "invalid": violations })
    };
    writeln!(out, "{}", Report::new("validate", &bytes, result, start).to_json())?;
    Ok(if violations.is_empty() { 0 } else { 1 })
}

fn generate(params: &PathBuf, seed: Option<u64>, emit: Emit, out: &mut impl Write) -> Result<u8> {
    let start = Instant::now();
    let (text, bytes) = read_source(params)?;
    let mut p: CombParams =
        serde_json::from_str(&text).with_context(|| format!("{}: not valid comb parameters", params.display()))?;
    if let Some(seed) = seed {
        p.seed = seed;
    }
    let (g, dec) = generate_comb(&p)?;
    let dec_json = serde_json::to_string(&dec)?;
    match emit {
        Emit::Graph6 => writeln!(out, "{}\n{dec_json}", write_graph6(&g))?,
        Emit::Edgelist => write!(out, "{}# decomposition: {dec_json}\n", write_edgelist(&g))?,
        Emit::Json => {
            let result = json!({ "generated": {
                "graph6": write_graph6(&g),
                "vertex_count": g.vertex_count(),
                "edges": g.edges(),
                "decomposition": dec,
                "params": p,
            }});
            writeln!(out, "{}", Report::new("generate", &bytes, result, start).to_json())?;
        }
    }
    Ok(0)
}
