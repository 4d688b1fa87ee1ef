//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use n2sc_core::{
    canonicalize, classify, theta_from_subgroup, CurrentGroup, Error, ExceptionalId, Level, Rational,
    RawLabel, Theta,
};
use serde::Serialize;

use crate::dto::{self, Envelope};
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "n2sc",
    version,
    about = "Sectors, fusion rules and extensions of the N=2 superconformal minimal models"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Suppress warnings on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every sector with weight, charge, both phases and dimension.
    Spectrum { n: u32 },
    /// Fuse two labels (l1,m1) and (l2,m2).
    #[command(allow_negative_numbers = true)]
    Fuse { n: u32, l1: i64, m1: i64, l2: i64, m2: i64 },
    /// Local simple-current extensions plus the exceptional ones, with checks.
    Classify { n: u32 },
    /// Dimension-one sectors and the group of their written forms.
    SimpleCurrents { n: u32 },
    /// Maximal group of currents with trivial phase, with the case analysis.
    MaxCyclic { n: u32 },
    /// Multiplicity matrix and vacuum row of one extension.
    Invariant(InvariantArgs),
    /// Classify (c, h, q) into the unitarity regions NS1/NS2/NS3.
    #[command(allow_negative_numbers = true)]
    Unitarity {
        /// Rational as p/q or an integer.
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    pub n: u32,
    #[command(flatten)]
    pub source: Source,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Generators of the current group as l,m written forms.
    #[arg(long, num_args = 1.., value_name = "L,M", allow_negative_numbers = true)]
    pub subgroup: Option<Vec<String>>,
    /// One of the exceptional extensions a, b, c, d.
    #[arg(long, value_name = "ID")]
    pub exceptional: Option<char>,
}

/// What a run produced; `main` writes it out and exits with `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn level(n: u32) -> Result<Level, Error> {
    Level::new(n)
}

fn label(level: Level, l: i64, m: i64) -> Result<RawLabel, Error> {
    RawLabel::new(level, l, m)
}

struct Emitted {
    json: String,
    table: String,
    warnings: Vec<String>,
    failed: bool,
}

fn emit<P: Serialize>(
    n: Option<u32>,
    command: &str,
    payload: P,
    table: String,
    warnings: Vec<String>,
    failed: bool,
) -> Emitted {
    let env = Envelope::new(n, command, payload, warnings.clone());
    let mut json = serde_json::to_string_pretty(&env).expect("payloads serialize");
    json.push('\n');
    Emitted { json, table, warnings, failed }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let e = match &cli.command {
        Command::Spectrum { n } => {
            let lv = level(*n)?;
            let p = dto::spectrum_payload(lv);
            let t = render::spectrum(*n, &p);
            emit(Some(*n), "spectrum", p, t, vec![], false)
        }
        Command::Fuse { n, l1, m1, l2, m2 } => {
            let lv = level(*n)?;
            let a = canonicalize(lv, label(lv, *l1, *m1)?)?;
            let b = canonicalize(lv, label(lv, *l2, *m2)?)?;
            let p = dto::fuse_payload(lv, a, b);
            let t = render::fuse(*n, &p);
            emit(Some(*n), "fuse", p, t, vec![], false)
        }
        Command::Classify { n } => {
            let lv = level(*n)?;
            let c = classify(lv)?;
            let p = dto::classify_payload(&c);
            let mut warnings = c.max_cyclic.warnings.clone();
            for entry in &c.entries {
                for check in entry.report.failures() {
                    warnings.push(format!(
                        "{}: check {} failed",
                        dto::entry_id(&entry.id),
                        check.kind.name()
                    ));
                }
            }
            let t = render::classify(*n, &p);
            emit(Some(*n), "classify", p, t, warnings, !c.all_passed())
        }
        Command::SimpleCurrents { n } => {
            let lv = level(*n)?;
            let p = dto::simple_currents_payload(lv)?;
            let t = render::simple_currents(*n, &p);
            emit(Some(*n), "simple-currents", p, t, vec![], false)
        }
        Command::MaxCyclic { n } => {
            let lv = level(*n)?;
            let mc = n2sc_core::max_cyclic(lv)?;
            let p = dto::MaxCyclicPayload::from(&mc);
            let t = render::max_cyclic(*n, &p);
            emit(Some(*n), "max-cyclic", p, t, mc.warnings.clone(), false)
        }
        Command::Invariant(args) => return invariant(cli, args),
        Command::Unitarity { c, h, q } => {
            let (c, h, q) = (parse_rational(c)?, parse_rational(h)?, parse_rational(q)?);
            let p = dto::unitarity_payload(c, h, q);
            let t = render::unitarity(&p);
            emit(None, "unitarity", p, t, vec![], false)
        }
    };
    Ok(finish(cli, e))
}

fn invariant(cli: &Cli, args: &InvariantArgs) -> Result<Outcome, Error> {
    let lv = level(args.n)?;
    let theta = if let Some(id) = args.source.exceptional {
        let Some(id) = ExceptionalId::from_letter(id) else {
            return Ok(Outcome::usage(format!("unknown exceptional id '{id}', expected a, b, c or d")));
        };
        if id.level() != args.n {
            return Ok(Outcome::usage(format!(
                "exceptional ({id}) is defined at level {}, not {}",
                id.level(),
                args.n
            )));
        }
        Theta::exceptional(id)
    } else {
        let mut forms = Vec::new();
        for g in args.source.subgroup.as_deref().unwrap_or_default() {
            forms.push(parse_form(lv, g)?);
        }
        let h = CurrentGroup::generated_by(lv, &forms)?;
        match theta_from_subgroup(lv, &h) {
            Ok(t) => t,
            Err(e @ (Error::PhaseObstructed(_) | Error::DuplicateOrbit(_))) => {
                return Ok(Outcome {
                    code: EXIT_VERIFICATION,
                    stdout: String::new(),
                    stderr: format!("verification failed: {e}\n"),
                })
            }
            Err(e) => return Err(e),
        }
    };
    let p = dto::invariant_payload(lv, &theta);
    let failed = !p.report.passed;
    let warnings = p
        .report
        .checks
        .iter()
        .filter(|c| c.status == "fail")
        .map(|c| format!("check {} failed", c.name))
        .collect();
    let t = render::invariant(args.n, &p);
    Ok(finish(cli, emit(Some(args.n), "invariant", p, t, warnings, failed)))
}

fn finish(cli: &Cli, e: Emitted) -> Outcome {
    let stdout = match cli.format {
        Format::Json => e.json,
        Format::Table => e.table,
    };
    let stderr = if cli.quiet {
        String::new()
    } else {
        e.warnings.iter().map(|w| format!("warning: {w}\n")).collect()
    };
    Outcome { code: if e.failed { EXIT_VERIFICATION } else { EXIT_OK }, stdout, stderr }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: i64 = num.parse().map_err(|_| Error::BadRational)?;
    let den: i64 = den.parse().map_err(|_| Error::BadRational)?;
    if den == 0 {
        return Err(Error::BadRational);
    }
    Ok(Rational::new(num, den))
}

fn parse_form(lv: Level, s: &str) -> Result<RawLabel, Error> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (l, m) = s.split_once(',').ok_or(Error::BadRational)?;
    let l: i64 = l.trim().parse().map_err(|_| Error::BadRational)?;
    let m: i64 = m.trim().parse().map_err(|_| Error::BadRational)?;
    label(lv, l, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/6").unwrap(), Rational::new(1, 6));
        assert_eq!(parse_rational("-1/3").unwrap(), Rational::new(-1, 3));
        assert_eq!(parse_rational("17").unwrap(), Rational::from_integer(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("i").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn forms() {
        let lv = Level::new(10).unwrap();
        assert_eq!(parse_form(lv, "0,12").unwrap(), RawLabel { l: 0, m: 12 });
        assert_eq!(parse_form(lv, "(10,-2)").unwrap(), RawLabel { l: 10, m: 22 });
        assert!(parse_form(lv, "1,2").is_err());
        assert!(parse_form(lv, "3").is_err());
    }
}
