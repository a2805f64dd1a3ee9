//! Command-line front end: reads a graph document, runs one of the
//! `enumerate`, `classify`, `verify` or `export` commands and prints a
//! report (text or JSON) or Graphviz DOT.

pub mod document;
pub mod dot;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcycle::{
    build_hom_skeleton_capped, enumerate_homs_capped, k_prime, report_all_components,
    report_component, verify_classification_capped, LatticeCover, DEFAULT_HOM_CAP,
};

pub use document::{GraphDocument, Instance};
pub use error::CliError;
pub use report::RunReport;

/// Exit status when every step succeeded.
pub const EXIT_OK: u8 = 0;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: u8 = 1;
/// Exit status when the oracle disagrees with the classification.
pub const EXIT_FAIL: u8 = 2;
/// Exit status when an enumeration cap is exceeded.
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "homcycle",
    version,
    about = "Homomorphisms into cycles and the homotopy types of their Hom complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (and optionally list) the homomorphisms G -> C_k.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Print every homomorphism.
        #[arg(long)]
        list: bool,
    },
    /// Homotopy type of every component, or of the component of --hom.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check each component's classification against its Betti numbers.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Write Graphviz DOT to stdout.
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = What::Skeleton)]
        what: What,
        /// Largest lattice norm drawn by `--what cover` (default 3k').
        #[arg(long)]
        truncate: Option<u64>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph document (JSON); `-` reads stdin.
    pub file: PathBuf,
    /// Cycle length; overrides the document's `k`.
    #[arg(long)]
    pub k: Option<u32>,
    /// Homomorphism as `name=value,...`; overrides the document's `hom`.
    #[arg(long)]
    pub hom: Option<String>,
    /// Maximum number of homomorphisms (or lattice points) to generate.
    #[arg(long, default_value_t = DEFAULT_HOM_CAP)]
    pub cap: usize,
    /// Machine-readable report.
    #[arg(long)]
    pub json: bool,
    /// Append the elapsed time to the report (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Skeleton,
    Orientation,
    Cover,
}

impl InputArgs {
    fn source(&self) -> String {
        self.file.display().to_string()
    }

    pub fn load(&self) -> Result<Instance, CliError> {
        let source = self.source();
        let io = |source_err| CliError::Io {
            path: source.clone(),
            source: source_err,
        };
        let text = if source == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io)?;
            s
        } else {
            std::fs::read_to_string(&self.file).map_err(io)?
        };
        GraphDocument::from_json(&text, &source)?.resolve(self.k, self.hom.as_deref())
    }

    fn render(&self, mut report: RunReport, started: Instant) -> String {
        if self.timing {
            report.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
        }
        if self.json {
            report.to_json()
        } else {
            report.to_text()
        }
    }
}

/// Runs a parsed command, returning the text for stdout and the exit code.
pub fn execute(command: &Command) -> Result<(String, u8), CliError> {
    let started = Instant::now();
    match command {
        Command::Enumerate { input, list } => {
            let inst = input.load()?;
            let homs = enumerate_homs_capped(&inst.graph, inst.k, input.cap)?;
            let mut report = RunReport::new("enumerate", &input.source(), &inst);
            report.homomorphisms = Some(homs.len());
            if *list {
                report.homs = Some(homs.iter().map(|f| f.label()).collect());
            }
            Ok((input.render(report, started), EXIT_OK))
        }
        Command::Classify { input } => {
            let inst = input.load()?;
            let reports = match &inst.hom {
                Some(f) => vec![report_component(&inst.graph, f, input.cap)?],
                None => report_all_components(&inst.graph, inst.k, input.cap)?,
            };
            let mut report = RunReport::new("classify", &input.source(), &inst);
            report.components = Some(
                reports
                    .iter()
                    .map(|r| report::ComponentEntry::new(r, &inst))
                    .collect(),
            );
            Ok((input.render(report, started), EXIT_OK))
        }
        Command::Verify { input } => {
            let inst = input.load()?;
            let verdicts = verify_classification_capped(&inst.graph, inst.k, input.cap)?;
            let mut report = RunReport::new("verify", &input.source(), &inst);
            report.verdicts = Some(verdicts.iter().map(Into::into).collect());
            let code = if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_FAIL
            };
            Ok((input.render(report, started), code))
        }
        Command::Export {
            input,
            what,
            truncate,
        } => {
            let inst = input.load()?;
            let text = match what {
                What::Skeleton => {
                    dot::skeleton_dot(&build_hom_skeleton_capped(&inst.graph, inst.k, input.cap)?)
                }
                What::Orientation => {
                    dot::orientation_dot(&inst.graph, &inst.labels, inst.require_hom()?)
                }
                What::Cover => {
                    let f = inst.require_hom()?;
                    let cover = LatticeCover::new(&inst.graph, f)?;
                    let limit = truncate.unwrap_or(3 * u64::from(k_prime(inst.k)?));
                    dot::cover_dot(&cover, limit, input.cap)?
                }
            };
            Ok((text, EXIT_OK))
        }
    }
}

/// Full entry point: parses `args`, runs, writes to the given streams and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
