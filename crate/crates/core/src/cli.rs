//! Command-line front end: subcommands map onto the classification
//! reports, rendered as text or as a JSON document.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::{
    classify_index2, classify_index3, exclude_by_lattice_with, exclude_index4, exclude_index6, indices_report,
    labelings_report, lefschetz_report, main_theorem_with, uniqueness_data_with, verify_construction, CaseReport,
    Verdict,
};
use crate::dynkin::DynkinType;
use crate::lattice::SearchOptions;

pub const HSQ_BOUND_VAR: &str = "ALV_HSQ_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "alv", version, about = "Exact lattice and Dynkin checks for extremal log Enriques surfaces")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orders that can act faithfully on a rank-2 transcendental lattice.
    Indices,
    /// Local fixed-point terms and eigenvalue multiplicities for order 6.
    Lefschetz,
    /// Admissible f/s labelings of each component of a Dynkin type.
    Labelings {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        order: u32,
        #[arg(long = "type", value_name = "TYPE")]
        ty: DynkinType,
    },
    /// Case analysis for canonical index 2 or 3.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        index: u32,
    },
    /// Exclusion of canonical index 4 or 6.
    Exclude {
        #[arg(long, value_parser = ["4", "6"])]
        index: String,
    },
    /// Search for a Picard lattice of discriminant 3 containing the type.
    LatticeExclude {
        #[arg(long = "type", value_name = "TYPE")]
        ty: DynkinType,
    },
    /// H^2, glue data and the Z-basis of Pic for a surviving type.
    Basis {
        #[arg(long = "type", value_name = "TYPE")]
        ty: DynkinType,
    },
    /// Checks one of the seven explicit divisors.
    VerifyConfig {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=7))]
        case: u64,
    },
    /// The whole classification.
    MainTheorem,
}

/// What the tool prints: every case report plus the overall verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub cases: Vec<CaseReport>,
    pub summary: Verdict,
}

impl ReportDocument {
    pub fn new(cases: Vec<CaseReport>) -> Self {
        let summary = if !cases.is_empty() && cases.iter().all(CaseReport::is_confirmed) {
            Verdict::Confirmed
        } else {
            Verdict::Refuted
        };
        ReportDocument { version: env!("CARGO_PKG_VERSION").to_string(), cases, summary }
    }

    pub fn exit_code(&self) -> i32 {
        exit_code(self.summary)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            Format::Text => {
                let mut s = String::new();
                for c in &self.cases {
                    s.push_str(&c.to_string());
                    s.push('\n');
                }
                s.push_str(&format!("summary: {}\n", self.summary));
                s
            }
        }
    }
}

pub fn exit_code(summary: Verdict) -> i32 {
    if summary == Verdict::Confirmed {
        0
    } else {
        1
    }
}

/// Search options with `H^2` bound from `ALV_HSQ_BOUND` when set.
pub fn search_options() -> Result<SearchOptions, String> {
    let mut opts = SearchOptions::default();
    if let Ok(v) = std::env::var(HSQ_BOUND_VAR) {
        opts.hsq_bound = v.trim().parse().map_err(|_| format!("{HSQ_BOUND_VAR} must be a positive integer, got `{v}`"))?;
    }
    Ok(opts)
}

/// Case reports for one subcommand.
pub fn execute(cmd: &Command, opts: &SearchOptions) -> crate::Result<Vec<CaseReport>> {
    Ok(match cmd {
        Command::Indices => vec![indices_report()],
        Command::Lefschetz => vec![lefschetz_report()],
        Command::Labelings { order, ty } => vec![labelings_report(*order, ty)?],
        Command::Enumerate { index } => vec![if *index == 2 { classify_index2() } else { classify_index3() }],
        Command::Exclude { index } => vec![if index == "4" { exclude_index4() } else { exclude_index6() }],
        Command::LatticeExclude { ty } => vec![exclude_by_lattice_with(ty, opts)?],
        Command::Basis { ty } => {
            let (e, mut r) = uniqueness_data_with(ty, opts)?;
            r.value("extremal_type", &e);
            vec![r]
        }
        Command::VerifyConfig { case } => vec![verify_construction(*case as usize)?],
        Command::MainTheorem => match main_theorem_with(opts) {
            Ok(out) => {
                let mut reports = out.reports;
                if let Some(last) = reports.last_mut() {
                    last.value("extremal_types", &out.survivors);
                }
                reports
            }
            Err(fail) => {
                let mut reports = fail.reports;
                reports.push(fail.failing);
                reports
            }
        },
    })
}

/// Parses `args`, runs the subcommand and returns the exit code with the
/// text for stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    let opts = match search_options() {
        Ok(o) => o,
        Err(e) => return (2, String::new(), format!("error: {e}\n")),
    };
    match execute(&cli.command, &opts) {
        Ok(cases) => {
            let doc = ReportDocument::new(cases);
            (doc.exit_code(), doc.render(cli.format), String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
