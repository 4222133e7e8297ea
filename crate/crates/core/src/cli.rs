//! The `tla` command line.
//!
//! Exit codes: 0 accept/ok, 1 reject/invalid, 2 inequivalent, 64 usage,
//! 66 unreadable or unparsable input file.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::automaton::{classify, validate, EMPTY_WORD};
use crate::constructions::{self, Construction, ConstructionError};
use crate::document::{parse, parse_unchecked, serialize};
use crate::exec::{render_trace, ExecError, Machine, SearchLimits, Verdict};
use crate::fast::{bench, FastMachine};
use crate::oracle::{builtin_language, enumerate, equivalent_up_to, OracleError, Source};
use crate::TlAutomaton;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_INEQUIVALENT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_FILE: i32 = 66;

#[derive(Parser, Debug)]
#[command(name = "tla", version, about = "Finite automata with translucent letters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a document and list every structural violation.
    Validate { file: PathBuf },
    /// Print the variant name, e.g. RDFAwtl.
    Classify { file: PathBuf },
    /// Decide membership of WORD ("" is the empty word).
    Run {
        file: PathBuf,
        word: String,
        /// Use position-queue membership (deterministic returning only).
        #[arg(long)]
        fast: bool,
        /// Print the computation (a shortest accepting one if nondeterministic).
        #[arg(long)]
        trace: bool,
    },
    /// Apply a construction: embed, nrnr-to-nfa, to-nonreturning,
    /// eliminate-loops, complete-reading, normalize, to-plain, complement,
    /// first-letter, quotient:WORD or shuffle:FILE2.
    Transform {
        construction: String,
        file: PathBuf,
        /// Output document; standard output if omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compare two sources (files or lang:NAME) on all words up to a length.
    Compare {
        a: String,
        b: String,
        #[arg(long)]
        max_len: usize,
    },
    /// List accepted words up to a length, length-lexicographically.
    Enumerate {
        source: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Time fast membership on cyclic words of the given lengths.
    Bench {
        file: PathBuf,
        /// Comma separated, e.g. 1024,2048 or 2^10,2^11.
        #[arg(long, value_delimiter = ',', value_parser = parse_length)]
        lengths: Vec<usize>,
    },
}

fn parse_length(s: &str) -> Result<usize, String> {
    let s = s.trim();
    if let Some((base, exp)) = s.split_once('^') {
        let base: usize = base.parse().map_err(|e| format!("{s}: {e}"))?;
        let exp: u32 = exp.parse().map_err(|e| format!("{s}: {e}"))?;
        return base.checked_pow(exp).ok_or_else(|| format!("{s}: too large"));
    }
    s.parse().map_err(|e| format!("{s}: {e}"))
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl ToString) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(EXIT_FILE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<TlAutomaton, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| fail(EXIT_FILE, format!("{}: {e}", path.display())))
}

fn source(spec: &str) -> Result<Source, Failure> {
    match spec.strip_prefix("lang:") {
        Some(name) => builtin_language(name)
            .map(Source::Language)
            .map_err(|e| fail(EXIT_USAGE, e)),
        None => load(Path::new(spec)).map(Source::Automaton),
    }
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::AlphabetMismatch { .. } => fail(EXIT_REJECT, e),
        _ => fail(EXIT_USAGE, e),
    }
}

fn exec_failure(e: ExecError) -> Failure {
    match e {
        ExecError::Invalid(_) => fail(EXIT_FILE, e),
        _ => fail(EXIT_USAGE, e),
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "tla: {}", f.message.trim_end());
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| fail(EXIT_FILE, e);
    match cmd {
        Command::Validate { file } => {
            let text = read(&file)?;
            let aut = match parse_unchecked(&text) {
                Ok(aut) => aut,
                Err(e) => {
                    writeln!(out, "{}: {e}", file.display()).map_err(io)?;
                    return Ok(EXIT_REJECT);
                }
            };
            let report = validate(&aut);
            if report.is_valid() {
                writeln!(out, "OK").map_err(io)?;
                Ok(EXIT_OK)
            } else {
                write!(out, "{report}").map_err(io)?;
                Ok(EXIT_REJECT)
            }
        }
        Command::Classify { file } => {
            let aut = load(&file)?;
            let d = classify(&aut).map_err(|e| fail(EXIT_FILE, e))?;
            writeln!(out, "{}", d.canonical_name).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Run { file, word, fast, trace } => run_word(&load(&file)?, &word, fast, trace, out, err),
        Command::Transform {
            construction,
            file,
            output,
        } => {
            let aut = load(&file)?;
            let built = transform(&construction, &aut)?;
            let text = serialize(&built.automaton);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| fail(EXIT_FILE, format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            write!(err, "{}", built.report).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Compare { a, b, max_len } => {
            let report = equivalent_up_to(&source(&a)?, &source(&b)?, max_len).map_err(oracle_failure)?;
            writeln!(out, "{report}").map_err(io)?;
            Ok(if report.is_equivalent() { EXIT_OK } else { EXIT_INEQUIVALENT })
        }
        Command::Enumerate { source: s, max_len } => {
            for w in enumerate(&source(&s)?, max_len).map_err(oracle_failure)? {
                writeln!(out, "{}", if w.is_empty() { EMPTY_WORD } else { &w }).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Bench { file, lengths } => {
            let aut = load(&file)?;
            let rows = bench(&aut, &lengths).map_err(|e| fail(EXIT_USAGE, e))?;
            writeln!(out, "{:>10}  {:>12}  {:>6}  verdict", "length", "time_us", "ratio").map_err(io)?;
            let mut prev: Option<f64> = None;
            for row in rows {
                let us = row.time.as_secs_f64() * 1e6;
                let ratio = prev.map_or("-".to_string(), |p| format!("{:.2}", us / p));
                let verdict = if row.accepted { "accept" } else { "reject" };
                writeln!(out, "{:>10}  {:>12.2}  {:>6}  {verdict}", row.length, us, ratio).map_err(io)?;
                prev = Some(us);
            }
            Ok(EXIT_OK)
        }
    }
}

fn run_word(aut: &TlAutomaton, word: &str, fast: bool, trace: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let io = |e: std::io::Error| fail(EXIT_FILE, e);
    let verdict_code = |accepted: bool| if accepted { EXIT_OK } else { EXIT_REJECT };
    if fast {
        let m = FastMachine::new(aut).map_err(|e| fail(EXIT_USAGE, e))?;
        let accepted = m.accepts(word).map_err(|e| fail(EXIT_USAGE, e))?;
        writeln!(out, "{}", if accepted { "accept" } else { "reject" }).map_err(io)?;
        return Ok(verdict_code(accepted));
    }
    let m = Machine::new(aut).map_err(exec_failure)?;
    if trace && m.is_deterministic() {
        let t = m.run_deterministic(word, None).map_err(exec_failure)?;
        write!(out, "{}", render_trace(&t)).map_err(io)?;
        if t.verdict == Verdict::StepLimit {
            writeln!(err, "warning: step limit reached (end-marker loop), reporting reject").map_err(io)?;
        }
        return Ok(verdict_code(t.verdict == Verdict::Accept));
    }
    if trace {
        let outcome = m.run_nondeterministic(word, SearchLimits::default()).map_err(exec_failure)?;
        match (&outcome.witness, outcome.verdict) {
            (Some(w), _) => write!(out, "{}", render_trace(w)).map_err(io)?,
            (None, Verdict::StepLimit) => {
                writeln!(err, "warning: search limit reached, reporting reject").map_err(io)?;
                writeln!(out, "reject").map_err(io)?;
            }
            (None, _) => writeln!(out, "reject").map_err(io)?,
        }
        return Ok(verdict_code(outcome.verdict == Verdict::Accept));
    }
    let accepted = match m.accepts(word) {
        Ok(a) => a,
        Err(ExecError::StepLimit) => {
            writeln!(err, "warning: search limit reached, reporting reject").map_err(io)?;
            false
        }
        Err(e) => return Err(exec_failure(e)),
    };
    writeln!(out, "{}", if accepted { "accept" } else { "reject" }).map_err(io)?;
    Ok(verdict_code(accepted))
}

fn transform(name: &str, aut: &TlAutomaton) -> Result<Construction, Failure> {
    let invalid = |e: ConstructionError| fail(EXIT_REJECT, e);
    if let Some(word) = name.strip_prefix("quotient:") {
        return constructions::left_quotient(aut, word).map_err(invalid);
    }
    if let Some(path) = name.strip_prefix("shuffle:") {
        let other = load(Path::new(path))?;
        return constructions::disjoint_shuffle(aut, &other).map_err(invalid);
    }
    let f = match name {
        "embed" => constructions::embed_repetitive,
        "nrnr-to-nfa" => constructions::nrnr_to_nfa,
        "to-nonreturning" => constructions::repetitive_to_nonreturning,
        "eliminate-loops" => constructions::eliminate_end_loops,
        "complete-reading" => constructions::complete_reading,
        "normalize" => constructions::normalize,
        "to-plain" => constructions::repetitive_to_plain,
        "complement" => constructions::complement_deterministic,
        "first-letter" => constructions::first_letter_normalize,
        _ => return Err(fail(EXIT_USAGE, format!("unknown construction {name:?}"))),
    };
    f(aut).map_err(invalid)
}

