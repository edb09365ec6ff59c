//! Argument parsing and command dispatch.

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ghilb_core::analysis::{self, AnalysisError, Options};
use ghilb_core::ggraph::{self, GGraph};
use ghilb_core::group::{self, GroupError, GroupParams};

use crate::render::{self, Mode};
use crate::report::{self, AnalysisReport, GraphVerdict, GroupInfo, OracleInfo, SweepReport, VerificationReport, SCHEMA_VERSION};
use crate::text;

#[derive(Debug, Parser)]
#[command(name = "ghilb", version, about = "G-graphs, G-Hilb and special representations of small binary dihedral groups BD_2n(a)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum RenderMode {
    #[default]
    None,
    Ascii,
    Svg,
}

impl RenderMode {
    fn mode(self) -> Option<Mode> {
        match self {
            RenderMode::None => None,
            RenderMode::Ascii => Some(Mode::Ascii),
            RenderMode::Svg => Some(Mode::Svg),
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct Sampling {
    /// Random points checked on each walking family.
    #[arg(long, default_value_t = 5)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: G-graphs, oracle verdicts, Dynkin diagram, specials.
    Analyze {
        two_n: u64,
        a: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, value_enum, default_value_t)]
        render: RenderMode,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Oracle checks of every graph ideal and sampled family points.
    Verify {
        two_n: u64,
        a: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[command(flatten)]
        sampling: Sampling,
        /// Drop a generator from the first graph ideal before checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Catalogue of all small groups up to a bound.
    Sweep {
        #[arg(long, default_value_t = 60)]
        max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Staircase drawings of the G-graphs.
    Render {
        two_n: u64,
        a: u64,
        /// Graph index in walking order, or a kind such as `B2` or `C+`.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value_t = RenderMode::Ascii)]
        render: RenderMode,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid group: {0}")]
    InvalidGroup(GroupError),
    #[error("BD_{two_n}({a}) is not small: alpha^i*beta is a quasireflection for i in {quasireflections:?}")]
    NotSmall { two_n: u64, a: u64, quasireflections: Vec<u64> },
    #[error("BD_{0}(1) is abelian; its resolution is the cyclic type-A chain [-2, -(n+1), -2]")]
    Abelian(u64),
    #[error("no graph {0:?}")]
    UnknownGraph(String),
    #[error("--render none draws nothing")]
    NothingToRender,
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("serialisation failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidGroup(_) | CliError::Abelian(_) | CliError::UnknownGraph(_) | CliError::NothingToRender => 2,
            CliError::NotSmall { .. } => 3,
            CliError::Analysis(_) | CliError::Json(_) => 4,
        }
    }
}

pub const EXIT_VERIFICATION_FAILED: i32 = 4;

/// What a command printed and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn small_group(two_n: u64, a: u64) -> Result<GroupParams, CliError> {
    let g = group::make_group(two_n, a).map_err(CliError::InvalidGroup)?;
    if !g.is_small() {
        return Err(CliError::NotSmall { two_n, a, quasireflections: group::quasireflections(&g) });
    }
    if g.is_abelian() {
        return Err(CliError::Abelian(two_n));
    }
    Ok(g)
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text => text(value),
    })
}

fn status(passed: bool) -> i32 {
    if passed {
        0
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

pub fn analysis_report(two_n: u64, a: u64, sampling: &Sampling, render: RenderMode) -> Result<AnalysisReport, CliError> {
    let g = small_group(two_n, a)?;
    let opts = Options { samples: sampling.samples, seed: sampling.seed, ..Options::default() };
    let analysis = analysis::analyze(&g, &opts)?;
    let mut report = AnalysisReport::of(&analysis, sampling.samples, sampling.seed);
    if let Some(mode) = render.mode() {
        report.renders = analysis.graphs.iter().map(|r| render::render(&r.graph, &r.basis, mode)).collect();
    }
    Ok(report)
}

pub fn verification_report(two_n: u64, a: u64, sampling: &Sampling, inject_fault: bool) -> Result<VerificationReport, CliError> {
    let g = small_group(two_n, a)?;
    let mut graphs = ggraph::enumerate_ggraphs(&g).map_err(AnalysisError::from)?;
    if inject_fault {
        if let Some(first) = graphs.first_mut() {
            first.generators.pop();
        }
    }
    let opts = Options { samples: sampling.samples, seed: sampling.seed, ..Options::default() };
    let verification = analysis::verify_graphs(&g, &graphs, &opts)?;
    let verdicts = graphs
        .iter()
        .zip(&verification.graphs)
        .map(|(graph, oracle)| GraphVerdict {
            kind: graph.kind.to_string(),
            generators: graph.generators.iter().map(ToString::to_string).collect(),
            oracle: OracleInfo::of(oracle),
        })
        .collect();
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        group: GroupInfo::of(&g),
        graphs: verdicts,
        families: report::family_summary(&verification, sampling.samples, sampling.seed),
        samples_checked: verification.samples_checked(),
        passed: verification.passed(),
    })
}

pub fn sweep_report(max: u64, sampling: &Sampling) -> Result<SweepReport, CliError> {
    let opts = Options { samples: sampling.samples, seed: sampling.seed, ..Options::default() };
    Ok(SweepReport::of(&analysis::sweep(max, &opts)?))
}

fn select<'a>(graphs: &'a [GGraph], selector: &str) -> Result<Vec<&'a GGraph>, CliError> {
    let unknown = || CliError::UnknownGraph(selector.to_owned());
    match selector.parse::<usize>() {
        Ok(i) => graphs.get(i).map(|g| vec![g]).ok_or_else(unknown),
        Err(_) => {
            let chosen: Vec<&GGraph> = graphs.iter().filter(|g| g.kind.to_string().eq_ignore_ascii_case(selector)).collect();
            if chosen.is_empty() {
                Err(unknown())
            } else {
                Ok(chosen)
            }
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze { two_n, a, format, render, sampling } => {
            let report = analysis_report(two_n, a, &sampling, render)?;
            Ok(Outcome { code: status(report.passed), stdout: emit(format, &report, text::analysis)? })
        }
        Command::Verify { two_n, a, format, sampling, inject_fault } => {
            let report = verification_report(two_n, a, &sampling, inject_fault)?;
            Ok(Outcome { code: status(report.passed), stdout: emit(format, &report, text::verification)? })
        }
        Command::Sweep { max, format, sampling } => {
            let report = sweep_report(max, &sampling)?;
            Ok(Outcome { code: status(report.passed), stdout: emit(format, &report, text::sweep)? })
        }
        Command::Render { two_n, a, graph, render } => {
            let mode = render.mode().ok_or(CliError::NothingToRender)?;
            let g = small_group(two_n, a)?;
            let graphs = ggraph::enumerate_ggraphs(&g).map_err(AnalysisError::from)?;
            let chosen = match &graph {
                Some(selector) => select(&graphs, selector)?,
                None => graphs.iter().collect(),
            };
            let drawings: Vec<String> = chosen.iter().map(|gr| render::render(gr, &ggraph::basis_with_twins(gr), mode)).collect();
            Ok(Outcome { code: 0, stdout: drawings.join("\n") })
        }
    }
}
