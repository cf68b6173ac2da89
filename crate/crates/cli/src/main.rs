//! Batch front-end: reads a group config, runs a pipeline and writes JSON.
//!
//! Exit status: 0 when every check holds, 1 on a verification failure,
//! 2 on usage, config or hypothesis errors.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use freeprod::covering::{build_cover, free_basis, summarize_cover, CoverSummary};
use freeprod::embedding::{embed_report, out_wn_report, verify_splitting, w3_into_out_f4};
use freeprod::relations::{enumerate_relations, summarize, verify_all, Level, RelationReport, RelationSummary};
use freeprod::{GroupSpec, SubgroupSpec};
use serde::Serialize;

use config::Config;

#[derive(Parser)]
#[command(name = "freeprod", version, about = "Verify presentations, covers and free representations of Out(G)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate and verify the relation instances of the presentation.
    Relations {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        level: Option<LevelArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the covering graph of N and its free basis.
    Cover {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the splitting and embed the standard generators into Aut(N).
    Embed {
        #[arg(long)]
        config: PathBuf,
        /// Length of the injectivity probe.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The universal Coxeter group W_n with N = G'G^2 (n even).
    Wn {
        #[arg(long, short)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The explicit map Out(W_3) -> Out(F_4).
    W3f4 {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    /// Each instance at its own level in Aut(G).
    Exact,
    /// Every instance modulo Inn(G).
    Inn,
    /// Corrected lifts modulo Inn(N).
    #[value(name = "innN")]
    InnN,
}

impl LevelArg {
    fn parse(s: &str) -> Result<Self, String> {
        <LevelArg as ValueEnum>::from_str(s, false).map_err(|_| format!("unknown level {s:?}"))
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Outcome {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn load(path: &Path) -> Result<(Config, GroupSpec, SubgroupSpec), Failure> {
    let cfg = Config::load(path).map_err(Failure::Usage)?;
    let (g, n) = cfg.build().map_err(Failure::Usage)?;
    Ok((cfg, g, n))
}

#[derive(Serialize)]
struct RelationsOutput {
    group: GroupSpec,
    #[serde(rename = "N")]
    subgroup: SubgroupSpec,
    level: &'static str,
    summary: RelationSummary,
    failures: Vec<RelationReport>,
}

fn cmd_relations(config: &Path, level: Option<LevelArg>, out: Option<PathBuf>) -> Outcome {
    let (cfg, g, n) = load(config)?;
    let level = match (level, &cfg.options.level) {
        (Some(l), _) => l,
        (None, Some(s)) => LevelArg::parse(s).map_err(Failure::Usage)?,
        (None, None) => LevelArg::Exact,
    };
    let out = out.or(cfg.options.out.clone());
    let suite = enumerate_relations(&g);
    let (name, summary, failures) = match level {
        LevelArg::Exact | LevelArg::Inn => {
            let mut instances = suite.instances;
            if level == LevelArg::Inn {
                instances.iter_mut().for_each(|i| i.level = Level::ModInn);
            }
            let reports = verify_all(&g, &instances, &n);
            let summary = summarize(&reports, &suite.skipped);
            let name = if level == LevelArg::Exact { "exact" } else { "inn" };
            (name, summary, reports.into_iter().filter(|r| !r.passed).collect::<Vec<_>>())
        }
        LevelArg::InnN => {
            let rep = verify_splitting(&g, &n, &suite.instances, &suite.skipped)?;
            ("innN", rep.summary, rep.failures)
        }
    };
    let ok = failures.is_empty();
    emit(&RelationsOutput { group: g, subgroup: n, level: name, summary, failures }, out.as_deref())?;
    verdict(ok)
}

#[derive(Serialize)]
struct CoverOutput {
    #[serde(flatten)]
    summary: CoverSummary,
    dot: Option<PathBuf>,
}

fn cmd_cover(config: &Path, emit_dot: Option<PathBuf>, out: Option<PathBuf>) -> Outcome {
    let (cfg, g, n) = load(config)?;
    let emit_dot = emit_dot.or(cfg.options.emit_dot.clone());
    let out = out.or(cfg.options.out.clone());
    let cover = build_cover(&g, &n)?;
    if let Some(path) = &emit_dot {
        let basis = free_basis(&cover).ok();
        std::fs::write(path, cover.to_dot(basis.as_ref()))?;
    }
    emit(&CoverOutput { summary: summarize_cover(&cover), dot: emit_dot }, out.as_deref())
}

fn cmd_embed(config: &Path, max_len: Option<usize>, out: Option<PathBuf>) -> Outcome {
    let (cfg, g, n) = load(config)?;
    let probe = max_len.or(cfg.options.max_len).unwrap_or(1);
    let out = out.or(cfg.options.out.clone());
    let rep = embed_report(&g, &n, Some(probe))?;
    emit(&rep, out.as_deref())?;
    verdict(rep.passed())
}

fn cmd_wn(n: usize, out: Option<PathBuf>) -> Outcome {
    let rep = out_wn_report(n)?;
    emit(&rep, out.as_deref())?;
    verdict(rep.passed())
}

fn cmd_w3f4(max_len: usize, out: Option<PathBuf>) -> Outcome {
    let rep = w3_into_out_f4(max_len);
    emit(&rep, out.as_deref())?;
    verdict(rep.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Relations { config, level, out } => cmd_relations(&config, level, out),
        Command::Cover { config, emit_dot, out } => cmd_cover(&config, emit_dot, out),
        Command::Embed { config, max_len, out } => cmd_embed(&config, max_len, out),
        Command::Wn { n, out } => cmd_wn(n, out),
        Command::W3f4 { max_len, out } => cmd_w3f4(max_len, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
