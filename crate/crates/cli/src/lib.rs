//! Command-line front end. Every subcommand parses its input, calls into
//! `mahonian`, and formats the result; no statistic is computed here.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 usage or parse error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use mahonian::distribution::{parse_schema, Statistic, ALL_COLUMNS, TABLE_COLUMNS};
use mahonian::record::{class_table, render_json, render_tsv, OutputRecord};
use mahonian::verify::{check, Bound, CheckId, CheckReport, DEFAULT_CAP};
use mahonian::{
    burstein_p, code, foata_j, phi, phi_on_class, rsk, Error, Multiset, Permutation,
    VincularPattern, Word,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mahonian",
    version,
    about = "MAJ/STAT statistics, involutions and equidistribution checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Phi,
    P,
    J,
    Code,
    Rc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All seven statistics of a word plus its D, Id and Sh sets.
    Stats {
        word: String,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Apply a map: phi (phi_R(w) on words), p, j, code, rc.
    Map {
        #[arg(value_enum)]
        name: MapName,
        input: String,
    },
    /// Count occurrences of a dash-notation vincular pattern, e.g. 31-4-2.
    Pattern { pattern: String, word: String },
    /// Insertion and recording tableaux of a permutation.
    Rsk { permutation: String },
    /// Statistics of every word in the rearrangement class of a word.
    Table {
        multiset: String,
        /// Comma-separated statistic names; defaults to Adj,des,ides,F,IMAJ,MAJ,STAT.
        #[arg(long)]
        schema: Option<String>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Exhaustively verify an identity: thm-1.1 thm-1.2 thm-1.3 cor-1.4 cor-1.5
    /// lemma-3.1 lemma-3.4 lemma-3.5 eq-2 prop-2.4, or all.
    Verify {
        check: String,
        /// Largest length checked (all lengths from 1 up).
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Largest alphabet for word and class domains.
        #[arg(long, default_value_t = 3)]
        alphabet: u32,
        /// Restrict class checks to the rearrangement class of this word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

/// Run a parsed command, writing data to `out`. Errors are usage errors.
pub fn execute(cmd: &Command, out: &mut impl Write) -> Result<u8, Error> {
    let text = match cmd {
        Command::Stats { word, format } => {
            let w: Word = word.parse()?;
            let record = OutputRecord::new(w, &ALL_COLUMNS)?;
            match format {
                Format::Tsv => render_tsv(std::slice::from_ref(&record), &ALL_COLUMNS),
                Format::Json => render_json(std::slice::from_ref(&record)),
            }
        }
        Command::Map { name, input } => format!("{}\n", apply_map(*name, input)?),
        Command::Pattern { pattern, word } => {
            let pat: VincularPattern = pattern.parse()?;
            let w: Word = word.parse()?;
            format!("{}\n", pat.count_in(&w))
        }
        Command::Rsk { permutation } => {
            let p: Permutation = permutation.parse()?;
            let (insertion, recording) = rsk(&p);
            format!("P:\n{insertion}\nQ:\n{recording}\n")
        }
        Command::Table {
            multiset,
            schema,
            format,
            cap,
        } => {
            let ms: Multiset = multiset.parse()?;
            let schema: Vec<Statistic> = match schema {
                Some(s) => parse_schema(s)?,
                None => TABLE_COLUMNS.to_vec(),
            };
            let rows = class_table(&ms, &schema, *cap)?;
            match format {
                Format::Tsv => render_tsv(&rows, &schema),
                Format::Json => render_json(&rows),
            }
        }
        Command::Verify {
            check: id,
            n,
            alphabet,
            word,
            cap,
            jobs,
            format,
        } => {
            let bound = Bound {
                n: *n,
                alphabet: *alphabet,
                word: word.as_deref().map(str::parse).transpose()?,
                cap: *cap,
                jobs: *jobs,
            };
            let ids: Vec<CheckId> = if id == "all" {
                CheckId::ALL.to_vec()
            } else {
                vec![id.parse()?]
            };
            let reports = ids
                .into_iter()
                .map(|c| check(c, &bound))
                .collect::<Result<Vec<CheckReport>, Error>>()?;
            let text = match format {
                Format::Tsv => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&r.to_string());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
                }
            };
            out.write_all(text.as_bytes()).map_err(io_error)?;
            return Ok(if reports.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            });
        }
    };
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}

fn io_error(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("write failed: {e}"))
}

pub fn apply_map(name: MapName, input: &str) -> Result<String, Error> {
    let w: Word = input.parse()?;
    let perm = || Permutation::try_from(w.clone());
    Ok(match name {
        MapName::Phi if w.is_permutation() => phi(&perm()?)?.to_string(),
        MapName::Phi => phi_on_class(&w)?.to_string(),
        MapName::P => burstein_p(&perm()?)?.to_string(),
        MapName::J => foata_j(&perm()?)?.to_string(),
        MapName::Rc => perm()?.reverse_complement().to_string(),
        MapName::Code => code(&w)?.to_string(),
    })
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
