//! The `chd` command line.
//!
//! Exit codes: 0 affirmative or success, 1 negative decision or failed
//! check, 2 usage or validation error, 3 capacity error.

use std::io::{BufRead, Write};

use anyhow::Context;
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::analysis::{exact_count, lemma_lower_report};
use crate::error::Error;
use crate::oracle::enumerate_chd;
use crate::ranges::{range_of, range_size};
use crate::recognizer::{recognize, DegreeSequence};
use crate::verify::run_suites;
use crate::witness::{build_witness, verify_witness, Witness};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

pub const DEFAULT_MAX_EDGES: u64 = 4096;

#[derive(Debug, Parser)]
#[command(
    name = "chd",
    version,
    about = "Recognize cyclic hyper degree sequences and build hypergraphs realizing them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a degree sequence is a cyclic hyper degree
    Recognize {
        /// Comma-separated decimal degrees; read from stdin when omitted
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print a certificate (and optionally the edges) for an accepted sequence
    Witness {
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long)]
        json: bool,
        /// Include the explicit edge list
        #[arg(long)]
        edges: bool,
        /// Omit the edge list when the window is longer than this
        #[arg(long = "max-edges", default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: u64,
    },
    /// Range of window sums of column i for window length N at order n
    Ranges {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
        #[arg(long = "N")]
        window: String,
        #[arg(long)]
        json: bool,
    },
    /// List every cyclic hyper degree of order n <= 4, one per line
    Enumerate {
        #[arg(long)]
        n: u32,
    },
    /// Lower-bound report for order n
    Count {
        #[arg(long)]
        n: u32,
        /// Also count exactly by enumeration (n <= 4)
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the self-check suites at order n
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Structured output of `recognize` and `witness`. Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionDocument {
    pub n: u32,
    pub degrees: Vec<String>,
    pub is_cyclic_hyper_degree: bool,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none", default)]
    pub window: Option<String>,
    /// `permutation[i - 1]` is the 1-based vertex carried by column `i`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub permutation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub starts: Option<Vec<String>>,
    /// Each edge as sorted 1-based vertices.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub contains_empty_edge: Option<bool>,
    /// Set when edges were requested but the window exceeded `--max-edges`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edges_omitted: Option<bool>,
}

impl DecisionDocument {
    fn rejected(w: &DegreeSequence) -> Self {
        DecisionDocument {
            n: w.order(),
            degrees: w.entries().iter().map(ToString::to_string).collect(),
            is_cyclic_hyper_degree: false,
            window: None,
            permutation: None,
            starts: None,
            edges: None,
            contains_empty_edge: None,
            edges_omitted: None,
        }
    }

    pub fn from_witness(w: &DegreeSequence, wit: &Witness, include_starts: bool) -> Self {
        DecisionDocument {
            is_cyclic_hyper_degree: true,
            window: Some(wit.window().to_string()),
            permutation: Some(wit.perm().iter().map(|j| j + 1).collect()),
            starts: include_starts.then(|| wit.starts().iter().map(ToString::to_string).collect()),
            ..Self::rejected(w)
        }
    }

    /// Reconstructs the sequence and certificate from a parsed document.
    pub fn to_witness(&self) -> anyhow::Result<(DegreeSequence, Witness)> {
        let parse = |s: &String| s.parse::<BigUint>().with_context(|| format!("bad integer {s:?}"));
        let w = DegreeSequence::new(self.degrees.iter().map(parse).collect::<anyhow::Result<_>>()?)?;
        let window = parse(self.window.as_ref().context("document has no N")?)?;
        let perm = self
            .permutation
            .as_ref()
            .context("document has no permutation")?
            .iter()
            .map(|&v| v.checked_sub(1).context("permutation entries are 1-based"))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let starts = self
            .starts
            .as_ref()
            .context("document has no starts")?
            .iter()
            .map(parse)
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok((w.clone(), Witness::new(self.n, window, perm, starts)))
    }
}

#[derive(Debug, Serialize)]
struct RangeDocument {
    n: u32,
    i: u32,
    #[serde(rename = "N")]
    window: String,
    lo: String,
    hi: String,
    size: String,
}

#[derive(Debug, Serialize)]
struct CountDocument {
    #[serde(flatten)]
    report: crate::analysis::LowerBoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_count: Option<String>,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Validation(_) => EXIT_USAGE,
        Error::Capacity { .. } => EXIT_CAPACITY,
        Error::Inconsistent(_) => EXIT_NO,
    }
}

fn read_degrees(arg: Option<String>, input: &mut dyn BufRead) -> Result<DegreeSequence, Error> {
    let text = match arg {
        Some(s) => s,
        None => {
            let mut buf = String::new();
            input
                .read_to_string(&mut buf)
                .map_err(|e| Error::Validation(format!("reading degrees from stdin: {e}")))?;
            buf
        }
    };
    text.trim().parse()
}

fn write_json<T: Serialize>(out: &mut dyn Write, doc: &T) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

/// Runs one command. Results go to `out`, diagnostics to `err`.
pub fn run(cli: Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, input, out) {
        Ok(code) => code,
        Err(e) => {
            let code = e.downcast_ref::<Error>().map_or(EXIT_USAGE, exit_code_for);
            let _ = writeln!(err, "chd: {e:#}");
            code
        }
    }
}

fn dispatch(command: Command, input: &mut dyn BufRead, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Recognize { degrees, json } => {
            let w = read_degrees(degrees, input)?;
            let doc = match recognize(&w) {
                Some(a) => {
                    let wit = build_witness(&w, &a)?;
                    DecisionDocument::from_witness(&w, &wit, false)
                }
                None => DecisionDocument::rejected(&w),
            };
            if json {
                write_json(out, &doc)?;
            } else {
                print_decision(out, &doc)?;
            }
            Ok(decision_code(&doc))
        }
        Command::Witness {
            degrees,
            json,
            edges,
            max_edges,
        } => {
            let w = read_degrees(degrees, input)?;
            let doc = match recognize(&w) {
                Some(a) => {
                    let wit = build_witness(&w, &a)?;
                    if !verify_witness(&w, &wit) {
                        return Err(Error::Inconsistent(format!("witness for {w} failed to verify")).into());
                    }
                    let mut doc = DecisionDocument::from_witness(&w, &wit, true);
                    if edges {
                        if *wit.window() <= BigUint::from(max_edges) {
                            let list: Vec<_> = wit.edges()?.collect();
                            doc.contains_empty_edge = Some(list.iter().any(|e| e.is_empty()));
                            doc.edges = Some(list.iter().map(|e| e.vertices()).collect());
                        } else {
                            doc.edges_omitted = Some(true);
                        }
                    }
                    doc
                }
                None => DecisionDocument::rejected(&w),
            };
            if json {
                write_json(out, &doc)?;
            } else {
                print_decision(out, &doc)?;
            }
            Ok(decision_code(&doc))
        }
        Command::Ranges { n, i, window, json } => {
            let len: BigUint = window
                .trim()
                .parse()
                .map_err(|_| Error::Validation(format!("malformed window length {window:?}")))?;
            let range = range_of(i, &len, n)?;
            let size = range_size(i, &len)?;
            if json {
                write_json(
                    out,
                    &RangeDocument {
                        n,
                        i,
                        window: len.to_string(),
                        lo: range.lo.to_string(),
                        hi: range.hi.to_string(),
                        size: size.to_string(),
                    },
                )?;
            } else {
                writeln!(
                    out,
                    "range(i={i}, N={len}, n={n}) = [{}, {}] ({size} values)",
                    range.lo, range.hi
                )?;
            }
            Ok(EXIT_YES)
        }
        Command::Enumerate { n } => {
            for w in enumerate_chd(n)? {
                writeln!(out, "{w}")?;
            }
            Ok(EXIT_YES)
        }
        Command::Count { n, exact, json } => {
            let report = lemma_lower_report(n)?;
            let exact_count = if exact { Some(exact_count(n)?.to_string()) } else { None };
            let satisfied = report.satisfied;
            if json {
                write_json(out, &CountDocument { report, exact_count })?;
            } else {
                let sizes: Vec<String> = report.sizes.iter().map(ToString::to_string).collect();
                writeln!(out, "n          {}", report.n)?;
                writeln!(out, "M          {}", report.window)?;
                writeln!(out, "B          {}", sizes.join(" "))?;
                writeln!(out, "product    {}", report.product)?;
                writeln!(out, "bound      {}", report.bound)?;
                writeln!(out, "satisfied  {}", report.satisfied)?;
                if let Some(c) = exact_count {
                    writeln!(out, "exact      {c}")?;
                }
            }
            Ok(if satisfied { EXIT_YES } else { EXIT_NO })
        }
        Command::Verify { n, samples, seed, json } => {
            let reports = run_suites(n, samples, seed)?;
            let all_passed = reports.iter().all(|r| r.passed());
            if json {
                write_json(out, &reports)?;
            } else {
                for r in &reports {
                    let tag = if r.passed() { "PASS" } else { "FAIL" };
                    writeln!(out, "{tag}  {}: {} checked, {} failed", r.name, r.checked, r.failed)?;
                    if let Some(f) = &r.first_failure {
                        writeln!(out, "      first failure: {f}")?;
                    }
                }
                let passed = reports.iter().filter(|r| r.passed()).count();
                writeln!(out, "{passed}/{} suites passed", reports.len())?;
            }
            Ok(if all_passed { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn decision_code(doc: &DecisionDocument) -> i32 {
    if doc.is_cyclic_hyper_degree {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn print_decision(out: &mut dyn Write, doc: &DecisionDocument) -> std::io::Result<()> {
    writeln!(out, "degrees: {}", doc.degrees.join(","))?;
    if !doc.is_cyclic_hyper_degree {
        return writeln!(out, "cyclic hyper degree: no");
    }
    writeln!(out, "cyclic hyper degree: yes")?;
    if let Some(n) = &doc.window {
        writeln!(out, "N: {n}")?;
    }
    if let Some(p) = &doc.permutation {
        let p: Vec<String> = p.iter().map(ToString::to_string).collect();
        writeln!(out, "permutation: {}", p.join(" "))?;
    }
    if let Some(s) = &doc.starts {
        writeln!(out, "starts: {}", s.join(" "))?;
    }
    if let Some(edges) = &doc.edges {
        writeln!(out, "edges:")?;
        for e in edges {
            let e: Vec<String> = e.iter().map(ToString::to_string).collect();
            writeln!(out, "  {{{}}}", e.join(","))?;
        }
    }
    if doc.edges_omitted == Some(true) {
        writeln!(out, "edges: omitted (N exceeds --max-edges)")?;
    }
    Ok(())
}
