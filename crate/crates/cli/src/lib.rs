//! The `gk` command-line tool.
//!
//! Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 success,
//! 1 a verification failure was found, 2 bad input, 3 the question is
//! undecided.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use gk_core::families::{bundled_spectra, load_spectrum_file, FamilyKind, GroupDescriptor, PrimePower};
use gk_core::graph::GkGraph;
use gk_core::spectrum::Spectrum;
use gk_core::theorems::{
    analyze, check_tau_union_of_cliques, classify_srg, multipartite_realizability, Realizability, SrgVerdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

pub const DEFAULT_SWEEP: &str = "alt:5..100,sym:5..100,psl2:3..2000,pgl2:3..2000,bundled";
pub const DATA_DIR_ENV: &str = "GK_DATA_DIR";

#[derive(Debug, Parser)]
#[command(name = "gk", version, about = "Prime graphs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Spectrum,
    Graph,
    Report,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the spectrum, prime graph or report of a built-in group.
    Family {
        #[arg(long)]
        kind: String,
        /// Degree for alt/sym.
        #[arg(long)]
        n: Option<u64>,
        /// Field order for psl2/pgl2.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, default_value = "report")]
        emit: Emit,
    },
    /// Analyze a spectrum or graph JSON file.
    Analyze { file: PathBuf },
    /// Print only the strongly-regular verdict for a spectrum or graph file.
    SrgClassify { file: PathBuf },
    /// Check that the non-neighbours of 2 form a union of cliques across a corpus.
    VerifyCorpus {
        /// Directory of spectrum JSON files.
        dir: Option<PathBuf>,
        /// Built-in sweep, e.g. `alt:5..100,psl2:..2000,bundled`.
        #[arg(long, num_args = 0..=1, default_missing_value = DEFAULT_SWEEP)]
        builtin: Option<String>,
        /// Also check the SRG and multipartite consequences.
        #[arg(long)]
        extra: bool,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Decide whether a complete multipartite graph can be a prime graph.
    RealizableMultipartite {
        /// Part sizes, comma separated.
        parts: String,
    },
}

/// Error carrying the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl ToString) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Family { kind, n, q, emit } => cmd_family(&kind, n, q, emit, out),
        Command::Analyze { file } => cmd_analyze(&file, out),
        Command::SrgClassify { file } => cmd_srg_classify(&file, out),
        Command::VerifyCorpus {
            dir,
            builtin,
            extra,
            jobs,
        } => cmd_verify_corpus(dir.as_deref(), builtin.as_deref(), extra, jobs, out, err),
        Command::RealizableMultipartite { parts } => cmd_realizable_multipartite(&parts, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn emit_line(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|e| CliError::input(format!("cannot write output: {e}")))
}

fn graph_of(spectrum: &Spectrum) -> Result<GkGraph, CliError> {
    spectrum.gk_graph().map_err(CliError::input)
}

pub fn cmd_family(kind: &str, n: Option<u64>, q: Option<u64>, emit: Emit, out: &mut dyn Write) -> Result<i32, CliError> {
    let kind: FamilyKind = kind.parse().map_err(CliError::input)?;
    let param = match kind {
        FamilyKind::Alt | FamilyKind::Sym => n.ok_or_else(|| CliError::input(format!("--n is required for {kind}")))?,
        FamilyKind::Psl2 | FamilyKind::Pgl2 => q.ok_or_else(|| CliError::input(format!("--q is required for {kind}")))?,
    };
    let descriptor = GroupDescriptor::family(kind, param).map_err(CliError::input)?;
    let spectrum = descriptor.spectrum().map_err(CliError::input)?;
    let text = match emit {
        Emit::Spectrum => spectrum.to_json(),
        Emit::Graph => serde_json::to_string(&graph_of(&spectrum)?).expect("graph serializes"),
        Emit::Report => analyze(&graph_of(&spectrum)?, spectrum.name()).to_json(),
    };
    emit_line(out, &text)?;
    Ok(EXIT_OK)
}

/// Reads a file holding either a spectrum (`maximal_orders`) or a graph
/// (`vertices`), returning a display name and the graph.
pub fn load_graph_file(path: &Path) -> Result<(String, GkGraph), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let fields = value
        .as_object()
        .ok_or_else(|| CliError::input(format!("{}: expected a JSON object", path.display())))?;
    if fields.contains_key("maximal_orders") {
        let spectrum: Spectrum =
            serde_json::from_value(value).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let g = graph_of(&spectrum)?;
        Ok((spectrum.name().to_string(), g))
    } else if fields.contains_key("vertices") {
        let g: GkGraph =
            serde_json::from_value(value).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Ok((name, g))
    } else {
        Err(CliError::input(format!(
            "{}: neither a spectrum (maximal_orders) nor a graph (vertices)",
            path.display()
        )))
    }
}

pub fn cmd_analyze(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let (name, g) = load_graph_file(path)?;
    emit_line(out, &analyze(&g, &name).to_json())?;
    Ok(EXIT_OK)
}

pub fn cmd_srg_classify(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let (_, g) = load_graph_file(path)?;
    emit_line(out, &serde_json::to_string(&classify_srg(&g)).expect("verdict serializes"))?;
    Ok(EXIT_OK)
}

pub fn cmd_realizable_multipartite(parts: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let sizes = parts
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::input(format!("cannot parse `{parts}`: {e}")))?;
    let verdict = multipartite_realizability(&sizes).map_err(CliError::input)?;
    emit_line(out, &serde_json::to_string(&verdict).expect("verdict serializes"))?;
    Ok(if verdict.verdict == Realizability::Open {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    })
}

/// One item of a corpus sweep.
#[derive(Debug, Clone)]
pub enum CorpusItem {
    Family(GroupDescriptor),
    Spectrum(Spectrum),
}

impl CorpusItem {
    fn resolve(&self) -> Result<Spectrum, String> {
        match self {
            CorpusItem::Family(d) => d.spectrum().map_err(|e| e.to_string()),
            CorpusItem::Spectrum(s) => Ok(s.clone()),
        }
    }
}

/// Parses a sweep description such as `alt:5..100,psl2:..2000,bundled`.
pub fn parse_sweep(spec: &str) -> Result<Vec<CorpusItem>, CliError> {
    let mut items = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token == "bundled" {
            items.extend(bundled_corpus()?.into_iter().map(CorpusItem::Spectrum));
            continue;
        }
        let (kind, range) = token
            .split_once(':')
            .ok_or_else(|| CliError::input(format!("sweep entry `{token}` is not kind:range")))?;
        let kind: FamilyKind = kind.parse().map_err(CliError::input)?;
        let (lo, hi) = range
            .split_once("..")
            .ok_or_else(|| CliError::input(format!("range `{range}` is not lo..hi")))?;
        let default_lo = match kind {
            FamilyKind::Alt | FamilyKind::Sym => 2,
            FamilyKind::Psl2 | FamilyKind::Pgl2 => 3,
        };
        let parse = |s: &str, default: u64| -> Result<u64, CliError> {
            if s.is_empty() {
                Ok(default)
            } else {
                s.parse().map_err(|e| CliError::input(format!("bad bound `{s}`: {e}")))
            }
        };
        let lo = parse(lo, default_lo)?;
        let hi = parse(hi.trim_start_matches('='), 0)?;
        for param in lo..=hi {
            let prime_power = matches!(kind, FamilyKind::Psl2 | FamilyKind::Pgl2);
            if prime_power && PrimePower::new(param).is_err() {
                continue;
            }
            items.push(CorpusItem::Family(GroupDescriptor::family(kind, param).map_err(CliError::input)?));
        }
    }
    Ok(items)
}

/// The bundled spectra, or the directory named by `GK_DATA_DIR`.
pub fn bundled_corpus() -> Result<Vec<Spectrum>, CliError> {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => load_corpus_dir(Path::new(&dir)),
        None => Ok(bundled_spectra()),
    }
}

/// Loads every `*.json` spectrum file in a directory, sorted by file name.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<Spectrum>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::input(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?.path();
        if path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    if paths.is_empty() {
        return Err(CliError::input(format!("{} holds no spectrum files", dir.display())));
    }
    paths.sort();
    paths
        .iter()
        .map(|p| load_spectrum_file(p).map_err(CliError::input))
        .collect()
}

pub const CHECK_TAU: &str = "tau_union_of_cliques";
pub const CHECK_SRG: &str = "srg_not_ruled_out";
pub const CHECK_MULTIPARTITE: &str = "multipartite_not_excluded";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub check: String,
    pub processed: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFailure {
    pub name: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRunSummary {
    pub graphs: usize,
    pub checks: Vec<CheckCounts>,
    pub failures: Vec<CorpusFailure>,
    pub duration_ms: u128,
}

impl CorpusRunSummary {
    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

struct ItemOutcome {
    // (check, failure detail) per check that ran
    results: Vec<(&'static str, Option<String>)>,
    name: String,
}

fn check_item(item: &CorpusItem, extra: bool) -> Result<ItemOutcome, String> {
    let spectrum = item.resolve()?;
    let g = spectrum.gk_graph().map_err(|e| format!("{}: {e}", spectrum.name()))?;
    let mut results = Vec::new();
    // Odd order: the statement is vacuous and counts as passed.
    let tau = match check_tau_union_of_cliques(&g) {
        Ok(check) => check.witness.map(|[a, b, c]| format!("induced path {a}-{b}-{c} in tau {:?}", check.tau)),
        Err(_) => None,
    };
    results.push((CHECK_TAU, tau));
    if extra {
        let srg = match classify_srg(&g) {
            SrgVerdict::RuledOut { witness, .. } => Some(format!("strongly regular but ruled out: {witness:?}")),
            _ => None,
        };
        results.push((CHECK_SRG, srg));
        let multi = g
            .complete_multipartite_parts()
            .filter(|p| !p.is_empty())
            .and_then(|p| {
                let v = multipartite_realizability(&p).ok()?;
                (v.verdict == Realizability::NotRealizable).then(|| format!("complete multipartite {:?} excluded by {:?}", v.parts, v.rule))
            });
        results.push((CHECK_MULTIPARTITE, multi));
    }
    Ok(ItemOutcome {
        results,
        name: spectrum.name().to_string(),
    })
}

/// Runs the checks over every item. Results are in item order regardless of
/// the worker count.
pub fn verify_items(items: &[CorpusItem], extra: bool, jobs: Option<usize>) -> Result<CorpusRunSummary, CliError> {
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(CliError::input)?;
    let outcomes: Vec<Result<ItemOutcome, String>> =
        pool.install(|| items.par_iter().map(|item| check_item(item, extra)).collect());
    let mut names = vec![CHECK_TAU];
    if extra {
        names.extend([CHECK_SRG, CHECK_MULTIPARTITE]);
    }
    let mut checks: Vec<CheckCounts> = names
        .iter()
        .map(|c| CheckCounts {
            check: c.to_string(),
            ..Default::default()
        })
        .collect();
    let mut failures = Vec::new();
    for outcome in outcomes {
        let outcome = outcome.map_err(CliError::input)?;
        for (check, failure) in outcome.results {
            let counts = checks.iter_mut().find(|c| c.check == check).expect("known check");
            counts.processed += 1;
            match failure {
                None => counts.passed += 1,
                Some(detail) => {
                    counts.failed += 1;
                    failures.push(CorpusFailure {
                        name: outcome.name.clone(),
                        check: check.to_string(),
                        detail,
                    });
                }
            }
        }
    }
    Ok(CorpusRunSummary {
        graphs: items.len(),
        checks,
        failures,
        duration_ms: start.elapsed().as_millis(),
    })
}

pub fn cmd_verify_corpus(
    dir: Option<&Path>,
    builtin: Option<&str>,
    extra: bool,
    jobs: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let mut items = Vec::new();
    if let Some(dir) = dir {
        items.extend(load_corpus_dir(dir)?.into_iter().map(CorpusItem::Spectrum));
    }
    if let Some(spec) = builtin {
        items.extend(parse_sweep(spec)?);
    }
    if dir.is_none() && builtin.is_none() {
        return Err(CliError::input("give a corpus directory or --builtin"));
    }
    if items.is_empty() {
        return Err(CliError::input("the corpus is empty"));
    }
    let summary = verify_items(&items, extra, jobs)?;
    for f in &summary.failures {
        let _ = writeln!(err, "FAIL {} [{}]: {}", f.name, f.check, f.detail);
    }
    emit_line(out, &serde_json::to_string_pretty(&summary).expect("summary serializes"))?;
    Ok(if summary.failed() { EXIT_FAILURE } else { EXIT_OK })
}
