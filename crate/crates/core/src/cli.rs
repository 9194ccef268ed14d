//! Command-line front end.
//!
//! Exit codes: 0 success or affirmative, 1 negative result, 2 invalid input,
//! 3 enumeration bound exceeded.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::classifier::{classify, is_mesosome_free};
use crate::counting::{count_by_runs, m_closed_form, m_enumerate, EnumerationCap};
use crate::detector::{find_mesosomes, first_mesosome};
use crate::error::Error;
use crate::infinite::is_infinitely_extendable;
use crate::minimal_forbidden::{generate_minimal_forbidden, is_minimal_forbidden};
use crate::word::{enumerate_words, BinaryWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mesolib",
    version,
    about = "Mesosome avoidance in binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the first mesosome factor, or "free"
    Check { word: String },
    /// Structural form of a mesosome-free word as JSON
    Classify { word: String },
    /// All mesosome occurrences as "start half" lines
    Find { word: String },
    /// Number of mesosome-free words of length n
    Count {
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// "n<TAB>m(n)" for n = 0..=n_max
    CountTable { n_max: u64 },
    /// OEIS b-file lines "n m(n)" for n = 0..=n_max
    Oeis { n_max: u64 },
    /// Minimal forbidden words of length n
    MinimalForbidden {
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Whether the word extends to an infinite mesosome-free word
    Extendable { word: String },
    /// All words of length n in lexicographic order
    Enumerate {
        n: usize,
        #[arg(long)]
        free_only: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Enumerate,
    Runs,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NEGATIVE
        }
    }
}

fn parse_word(text: &str, err: &mut dyn Write) -> io::Result<Option<BinaryWord>> {
    match BinaryWord::from_text(text) {
        Ok(w) => Ok(Some(w)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(None)
        }
    }
}

fn cap_from_env(err: &mut dyn Write) -> io::Result<Option<EnumerationCap>> {
    let cap = EnumerationCap::from_env();
    if cap.is_none() {
        writeln!(
            err,
            "error: {} must be a nonnegative integer",
            EnumerationCap::ENV_VAR
        )?;
    }
    Ok(cap)
}

fn report(e: &Error, err: &mut dyn Write) -> io::Result<i32> {
    writeln!(err, "error: {e}")?;
    Ok(match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_INVALID,
    })
}

macro_rules! word_or_exit {
    ($text:expr, $err:expr) => {
        match parse_word(&$text, $err)? {
            Some(w) => w,
            None => return Ok(EXIT_INVALID),
        }
    };
}

macro_rules! cap_or_exit {
    ($err:expr) => {
        match cap_from_env($err)? {
            Some(cap) => cap,
            None => return Ok(EXIT_INVALID),
        }
    };
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let mut out = io::BufWriter::new(out);
    let code = match command {
        Command::Check { word } => {
            let w = word_or_exit!(word, err);
            match first_mesosome(&w) {
                None => {
                    writeln!(out, "free")?;
                    EXIT_OK
                }
                Some(occ) => {
                    writeln!(
                        out,
                        "mesosome at start={} half={}",
                        occ.start, occ.half_length
                    )?;
                    EXIT_NEGATIVE
                }
            }
        }
        Command::Classify { word } => {
            let w = word_or_exit!(word, err);
            match classify(&w) {
                Ok(c) => {
                    let json = serde_json::to_string(&c.record()).map_err(io::Error::other)?;
                    writeln!(out, "{json}")?;
                    EXIT_OK
                }
                Err(e) => return report(&e, err),
            }
        }
        Command::Find { word } => {
            let w = word_or_exit!(word, err);
            for occ in find_mesosomes(&w) {
                writeln!(out, "{} {}", occ.start, occ.half_length)?;
            }
            EXIT_OK
        }
        Command::Count { n, method } => match method {
            Method::Closed => {
                writeln!(out, "{}", m_closed_form::<BigUint>(n))?;
                EXIT_OK
            }
            Method::Enumerate => {
                let cap = cap_or_exit!(err);
                let n = usize::try_from(n).unwrap_or(usize::MAX);
                match m_enumerate(n, cap) {
                    Ok(m) => {
                        writeln!(out, "{m}")?;
                        EXIT_OK
                    }
                    Err(e) => return report(&e, err),
                }
            }
            Method::Runs => {
                let json =
                    serde_json::to_string(&count_by_runs::<u64>(n)).map_err(io::Error::other)?;
                writeln!(out, "{json}")?;
                EXIT_OK
            }
        },
        Command::CountTable { n_max } => {
            for n in 0..=n_max {
                writeln!(out, "{n}\t{}", m_closed_form::<BigUint>(n))?;
            }
            EXIT_OK
        }
        Command::Oeis { n_max } => {
            for n in 0..=n_max {
                writeln!(out, "{n} {}", m_closed_form::<BigUint>(n))?;
            }
            EXIT_OK
        }
        Command::MinimalForbidden { n, verify } => {
            let mut code = EXIT_OK;
            for w in generate_minimal_forbidden(n) {
                writeln!(out, "{w}")?;
                if verify && !is_minimal_forbidden(&w) {
                    writeln!(err, "verification failed: {w} is not minimal forbidden")?;
                    code = EXIT_NEGATIVE;
                }
            }
            code
        }
        Command::Extendable { word } => {
            let w = word_or_exit!(word, err);
            if is_infinitely_extendable(&w) {
                writeln!(out, "yes")?;
                EXIT_OK
            } else {
                writeln!(out, "no")?;
                EXIT_NEGATIVE
            }
        }
        Command::Enumerate { n, free_only } => {
            let cap = cap_or_exit!(err);
            if let Err(e) = cap.check(n) {
                return report(&e, err);
            }
            for w in enumerate_words(n).filter(|w| !free_only || is_mesosome_free(w)) {
                writeln!(out, "{w}")?;
            }
            EXIT_OK
        }
    };
    out.flush()?;
    Ok(code)
}
