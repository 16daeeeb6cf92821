//! Command line front end. [`run`] does all the work and returns the exit
//! code with the text to print, so it can be tested without a process.
//!
//! Exit codes: 0 success, 1 validation or consistency failure, 2 parse or
//! usage error.

pub mod grammar;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::fibration::{
    abelianization, compute, family_spec, Family, FibrationError, FibrationSpec, InvariantReport,
};
use crate::locsig::{decomposition_check, sigma_loc, HContext, HWord, LocsigError};
use crate::meyer::{phi, tau, MeyerError};
use crate::ratlin::rational_string;
use crate::surface::{word_to_matrix, CurveDescriptor, CurveType, Genus, SurfaceError};
use crate::verify::{run_all, VerifyConfig, DEFAULT_SEED};
use grammar::{parse_word, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "blfsig", version, about = "Signatures of hyperelliptic directed broken Lefschetz fibrations")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Mgn,
    MgnTilde,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a spec file and compute all invariants ("-" reads stdin)
    Compute { spec: String },
    /// Meyer function of a word
    Phi {
        #[arg(short = 'g', long)]
        genus: u32,
        word: String,
    },
    /// Meyer cocycle of two words
    Tau {
        #[arg(short = 'g', long)]
        genus: u32,
        a: String,
        b: String,
    },
    /// h of a word in the stabilizer generators, with the decomposition check
    H {
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(long, value_parser = parse_cycle)]
        cycle: CurveType,
        word: String,
    },
    /// Local signature of a Lefschetz fiber
    SigmaLoc {
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(long, value_parser = parse_cycle)]
        cycle: CurveType,
    },
    /// Built-in example families
    Family {
        family: FamilyArg,
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(long, conflicts_with = "compute")]
        emit_spec: bool,
        #[arg(long)]
        compute: bool,
    },
    /// First homology of a curve stabilizer
    Abelianization {
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(long, value_parser = parse_cycle)]
        cycle: CurveType,
    },
    /// Run the randomized property suites
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        max_genus: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// `I`, `II:h` or `II_h`.
fn parse_cycle(s: &str) -> Result<CurveType, String> {
    let s = s.trim();
    if s == "I" {
        return Ok(CurveType::NonSeparating);
    }
    let h = s
        .strip_prefix("II:")
        .or_else(|| s.strip_prefix("II_"))
        .ok_or_else(|| format!("expected I or II:h, got {s:?}"))?;
    h.parse().map(|h| CurveType::Separating { h }).map_err(|_| format!("bad h in {s:?}"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<MeyerError> for CliError {
    fn from(e: MeyerError) -> Self {
        CliError { code: EXIT_FAILURE, message: e.to_string() }
    }
}

impl From<LocsigError> for CliError {
    fn from(e: LocsigError) -> Self {
        let code = match e {
            LocsigError::Surface(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<FibrationError> for CliError {
    fn from(e: FibrationError) -> Self {
        let code = match e {
            FibrationError::Parse(_)
            | FibrationError::Json(_)
            | FibrationError::Malformed(_)
            | FibrationError::Range(_)
            | FibrationError::Surface(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_USAGE, text) } else { Outcome::ok(text) };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::fail(e.code, format!("error: {}\n", e.message)),
    }
}

fn descriptor(genus: u32, cycle: CurveType) -> Result<CurveDescriptor, CliError> {
    CurveDescriptor::new(Genus(genus), cycle).map_err(|e| usage(e.to_string()))
}

fn positive(genus: u32) -> Result<Genus, CliError> {
    Genus(genus).require_positive().map_err(|e| usage(e.to_string()))
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Compute { spec } => {
            let text = if spec == "-" {
                std::io::read_to_string(std::io::stdin()).map_err(|e| usage(e.to_string()))?
            } else {
                std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?
            };
            let spec = FibrationSpec::from_json(&text)?;
            Ok(report_outcome(&compute(&spec)?, json))
        }
        Command::Phi { genus, word } => {
            let w = parse_word(word, positive(*genus)?)?;
            let v = rational_string(&phi(&w)?);
            Ok(Outcome::ok(if json {
                json!({ "genus": genus, "word": w.to_string(), "phi": v }).to_string() + "\n"
            } else {
                format!("{v}\n")
            }))
        }
        Command::Tau { genus, a, b } => {
            let g = positive(*genus)?;
            let (wa, wb) = (parse_word(a, g)?, parse_word(b, g)?);
            let t = tau(&word_to_matrix(&wa)?, &word_to_matrix(&wb)?)?;
            Ok(Outcome::ok(if json {
                json!({ "genus": genus, "a": wa.to_string(), "b": wb.to_string(), "tau": t }).to_string() + "\n"
            } else {
                format!("{t}\n")
            }))
        }
        Command::H { genus, cycle, word } => {
            let ctx = HContext::new(descriptor(*genus, *cycle)?);
            let w = HWord::new(ctx, parse_word(word, ctx.genus())?)?;
            let rep = decomposition_check(&w)?;
            let code = if rep.holds { EXIT_OK } else { EXIT_FAILURE };
            let stdout = if json {
                serde_json::to_string_pretty(&rep).expect("serializable") + "\n"
            } else {
                let mut s = format!("{}\n", rational_string(&rep.h));
                let cut: Vec<String> = rep.phi_cut.iter().map(rational_string).collect();
                let _ = writeln!(
                    s,
                    "check: s = {}, phi = {}, phi after cutting = [{}], s + phi - cut = {} ({})",
                    rep.s,
                    rational_string(&rep.phi),
                    cut.join(", "),
                    rational_string(&rep.rhs),
                    if rep.holds { "agrees" } else { "DISAGREES" }
                );
                s
            };
            Ok(Outcome { code, stdout, stderr: String::new() })
        }
        Command::SigmaLoc { genus, cycle } => {
            let v = rational_string(&sigma_loc(descriptor(*genus, *cycle)?)?);
            Ok(Outcome::ok(if json {
                json!({ "genus": genus, "cycle": cycle.to_string(), "sigma_loc": v }).to_string() + "\n"
            } else {
                format!("{v}\n")
            }))
        }
        Command::Family { family, genus, n, emit_spec, compute: _ } => {
            let fam = match family {
                FamilyArg::Mgn => Family::Mgn,
                FamilyArg::MgnTilde => Family::MgnTilde,
            };
            let spec = family_spec(fam, *genus, *n)?;
            if *emit_spec {
                return Ok(Outcome::ok(spec.to_json() + "\n"));
            }
            Ok(report_outcome(&compute(&spec)?, json))
        }
        Command::Abelianization { genus, cycle } => {
            let group = abelianization(descriptor(*genus, *cycle)?)?.to_string();
            Ok(Outcome::ok(if json {
                json!({ "genus": genus, "cycle": cycle.to_string(), "group": group }).to_string() + "\n"
            } else {
                format!("{group}\n")
            }))
        }
        Command::Verify { samples, max_genus, seed } => {
            let seed = match seed {
                Some(s) => *s,
                None => match std::env::var("BLFSIG_SEED") {
                    Ok(v) => v.trim().parse().map_err(|_| usage(format!("BLFSIG_SEED={v:?} is not an integer")))?,
                    Err(_) => DEFAULT_SEED,
                },
            };
            if *max_genus == 0 {
                return Err(usage("--max-genus must be at least 1"));
            }
            let cfg = VerifyConfig { samples: *samples, max_genus: *max_genus, seed };
            let results = run_all(&cfg);
            let ok = results.iter().all(|r| r.passed());
            let stdout = if json {
                serde_json::to_string_pretty(&json!({ "seed": seed, "passed": ok, "suites": results }))
                    .expect("serializable")
                    + "\n"
            } else {
                let mut s = format!("seed {seed}\n");
                for r in &results {
                    let _ = writeln!(
                        s,
                        "{} {} ({} cases, {} failures)",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.name,
                        r.cases,
                        r.failures
                    );
                    for e in &r.examples {
                        let _ = writeln!(s, "    {e}");
                    }
                }
                s
            };
            Ok(Outcome { code: if ok { EXIT_OK } else { EXIT_FAILURE }, stdout, stderr: String::new() })
        }
    }
}

fn report_outcome(rep: &InvariantReport, json: bool) -> Outcome {
    let code = if rep.ok() { EXIT_OK } else { EXIT_FAILURE };
    let stdout = if json { serde_json::to_string_pretty(rep).expect("serializable") + "\n" } else { report_text(rep) };
    Outcome { code, stdout, stderr: String::new() }
}

pub fn report_text(rep: &InvariantReport) -> String {
    let mut s = String::new();
    let opt = |x: Option<i64>| x.map_or_else(|| "n/a".to_string(), |v| v.to_string());
    let _ = writeln!(s, "signature: {}", opt(rep.signature));
    let _ = writeln!(s, "euler: {}", rep.euler);
    if let Some(h) = &rep.homeomorphism {
        let _ = writeln!(s, "homeomorphic to: {h}");
    }
    let _ = writeln!(
        s,
        "meyer path signature: {} ({})",
        opt(rep.meyer_path_signature),
        if rep.paths_agree { "agrees" } else { "DISAGREES" }
    );
    if let Some(sum) = &rep.signature_sum {
        let _ = writeln!(s, "sum of terms: {sum}");
    }
    for (i, t) in rep.round_terms.iter().enumerate() {
        let _ = writeln!(s, "  h(round {i}) = {t}");
    }
    let mut lef: Vec<(&String, usize)> = Vec::new();
    for t in &rep.lefschetz_terms {
        match lef.last_mut() {
            Some((prev, k)) if *prev == t => *k += 1,
            _ => lef.push((t, 1)),
        }
    }
    for (t, k) in lef {
        let _ = writeln!(s, "  sigma_loc = {t} (x{k})");
    }
    let _ = writeln!(
        s,
        "spin: {}, simply connected: {}",
        rep.flags.spin, rep.flags.simply_connected
    );
    let _ = writeln!(s, "validation: {}", if rep.validation.passed() { "passed" } else { "FAILED" });
    for c in rep.validation.failures() {
        let idx = c.index.map_or_else(String::new, |i| format!("[{i}]"));
        let _ = writeln!(s, "  {}{idx}: {}", c.name, c.detail);
    }
    for n in &rep.validation.notes {
        let _ = writeln!(s, "note: {n}");
    }
    for e in &rep.errors {
        let _ = writeln!(s, "error: {e}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("blfsig").chain(args.iter().copied()))
    }

    #[test]
    fn cycle_syntax() {
        assert_eq!(parse_cycle("I"), Ok(CurveType::NonSeparating));
        assert_eq!(parse_cycle("II:2"), Ok(CurveType::Separating { h: 2 }));
        assert_eq!(parse_cycle("II_1"), Ok(CurveType::Separating { h: 1 }));
        assert!(parse_cycle("III").is_err());
    }

    #[test]
    fn phi_command() {
        let o = run_args(&["phi", "-g", "2", "t5"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "3/5\n"));
        assert_eq!(run_args(&["phi", "-g", "2", "t9"]).code, 2);
        assert_eq!(run_args(&["phi", "-g", "0", "t1"]).code, 2);
    }

    #[test]
    fn family_command() {
        let o = run_args(&["family", "mgn", "-g", "1", "-n", "1", "--compute"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert!(o.stdout.contains("signature: -4"));
        assert!(o.stdout.contains("euler: 10"));
        assert!(o.stdout.contains("#2CP² # 6CP̄²"));
        assert_eq!(run_args(&["family", "mgn-tilde", "-g", "1", "-n", "1"]).code, 2);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["bogus"]).code, 2);
        assert_eq!(run_args(&["sigma-loc", "-g", "3", "--cycle", "II:0"]).code, 1);
        assert_eq!(run_args(&["--help"]).code, 0);
    }
}
