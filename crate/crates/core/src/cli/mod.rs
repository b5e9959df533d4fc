//! The `splinedim` command line: classification, dimension tables,
//! cross-verification of the oracles and closed forms, spline bases, and
//! Hilbert data of the ideal `J`.
//!
//! Exit codes: 0 success, 2 input error, 3 inapplicable method or degree
//! cap, 4 verification mismatch.

mod commands;
pub mod document;
mod report;

use std::ffi::OsString;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

pub use document::{ComplexDocument, DocumentError, EdgeDocument};
pub use report::{ResultDocument, Row, Summary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

pub const DEFAULT_MAX_DEGREE: u32 = 40;
pub const MAX_DEGREE_VAR: &str = "SPLINEDIM_MAX_DEGREE";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// `a..b` and `a-b` (both inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let s = s.trim();
    let (lo, hi) = if let Some((a, b)) = s.split_once("..") {
        (a, b.strip_prefix('=').unwrap_or(b))
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("`{s}` is not an integer or range a..b"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

#[derive(Parser, Debug)]
#[command(name = "splinedim", version, about = "Exact spline dimensions around a single vertex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct CapArgs {
    /// Largest degree computed; defaults to $SPLINEDIM_MAX_DEGREE or 40.
    #[arg(long)]
    max_degree: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report the configuration (pencil, distinct tangents, other).
    Classify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Table of dim C^r_d by the requested methods.
    Table {
        file: PathBuf,
        #[arg(long, value_parser = parse_range)]
        r: Option<RangeInclusive<u32>>,
        #[arg(long, value_parser = parse_range, default_value = "0..13")]
        d: RangeInclusive<u32>,
        /// Linear-algebra kernel oracle.
        #[arg(long)]
        oracle: bool,
        /// Hilbert-function formula oracle (the default).
        #[arg(long)]
        formula: bool,
        /// Closed forms (pencil or distinct tangents).
        #[arg(long)]
        closed_form: bool,
        /// Evaluate closed forms even off their hypotheses.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Cross-check the formula against the kernel, and closed forms where they apply.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        r_max: u32,
        #[arg(long, default_value_t = 10)]
        d_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// A basis of C^r_d, one spline per line.
    Basis {
        file: PathBuf,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        d: u32,
        #[arg(long, alias = "out", value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Hilbert function, polynomial, postulation number and multiplicity.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        r: Option<u32>,
        /// Only the data of S/J, not of the spline module.
        #[arg(long)]
        ideal_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: stderr.into(),
        }
    }
}

fn cap(args: &CapArgs) -> Result<u32, Outcome> {
    if let Some(m) = args.max_degree {
        return Ok(m);
    }
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Outcome::fail(EXIT_INPUT, format!("{MAX_DEGREE_VAR}={v} is not an integer\n"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn load(path: &Path) -> Result<ComplexDocument, Outcome> {
    ComplexDocument::load(path).map_err(|e| Outcome::fail(EXIT_INPUT, format!("error: {e}\n")))
}

/// Runs the command line given by `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    match dispatch(cli.command) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Classify { file, format } => commands::classify(&load(&file)?, format),
        Command::Table {
            file,
            r,
            d,
            oracle,
            formula,
            closed_form,
            force,
            format,
            cap: c,
        } => {
            let doc = load(&file)?;
            let r = r.unwrap_or(doc.default_smoothness..=doc.default_smoothness);
            let opts = commands::TableOptions {
                rs: r.collect(),
                ds: d,
                formula: formula || !(oracle || closed_form),
                kernel: oracle,
                closed_form,
                force,
                max_degree: cap(&c)?,
            };
            commands::table(&doc, &opts, format)
        }
        Command::Verify {
            file,
            r_max,
            d_max,
            format,
            cap: c,
        } => commands::verify(&load(&file)?, r_max, d_max, cap(&c)?, format),
        Command::Basis {
            file,
            r,
            d,
            format,
            cap: c,
        } => {
            let doc = load(&file)?;
            let r = r.unwrap_or(doc.default_smoothness);
            commands::basis(&doc, r, d, cap(&c)?, format)
        }
        Command::Hilbert {
            file,
            r,
            ideal_only,
            format,
        } => {
            let doc = load(&file)?;
            let r = r.unwrap_or(doc.default_smoothness);
            commands::hilbert(&doc, r, ideal_only, format)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..13"), Ok(0..=13));
        assert_eq!(parse_range("2-5"), Ok(2..=5));
        assert_eq!(parse_range("0..=3"), Ok(0..=3));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a").is_err());
    }
}
