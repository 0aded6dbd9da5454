//! Command dispatch for the `bifix` binary.
//!
//! [`run`] takes the argument list and output streams explicitly so the
//! whole command surface can be exercised in-process.
//!
//! Exit status: 0 on success (predicates print `true` or `false` and still
//! exit 0), 1 on domain errors with a one-line diagnostic on stderr, 2 on
//! usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bifix_core::automata::{self, Automaton};
use bifix_core::borders::{self, CountTable};
use bifix_core::crosscheck::crosscheck;
use bifix_core::palstars;
use bifix_core::{Alphabet, AutomatonError, BorderError, PalstarError, Word, WordError};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "bifix",
    version,
    about = "Borders, palstars and star roots of regular languages"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Alphabet for words: single characters (`01`) or comma-separated symbols (`a,b,cc`).
    #[arg(long, global = true, default_value = "01")]
    pub alphabet: String,
    /// Tab-separated output.
    #[arg(long, global = true)]
    pub tsv: bool,
    /// Maximum word length handed to brute-force oracles.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_bound: u64,
    /// Maximum number of words an enumeration prints.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Border arrays and unbordered words.
    #[command(subcommand)]
    Borders(BordersCmd),
    /// Palstars and prime palstars.
    #[command(subcommand)]
    Palstar(PalstarCmd),
    /// Regular languages given as automaton files.
    #[command(subcommand)]
    Lang(LangCmd),
    /// Compare the star root of the palstars with the prime-palstar recognizer on binary words.
    Crosscheck {
        #[arg(long, default_value_t = 6)]
        max_half_length: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum BordersCmd {
    /// Longest border of every prefix.
    Array { word: String },
    /// Is the word unbordered?
    Test { word: String },
    /// Unbordered words of a given length.
    Enum {
        #[arg(long)]
        length: usize,
    },
    /// Number of unbordered words of each length.
    Count {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        max_n: usize,
    },
    /// a_n / k^n as an estimate of the limiting constant.
    Ck {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        digits: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum PalstarCmd {
    /// Is the word a palstar?
    Test { word: String },
    /// Is the word a prime palstar?
    Prime { word: String },
    /// Prime palstar factorization.
    Factor { word: String },
    /// Unbordered z with w = z shuffled with its reverse, or `none`.
    Root { word: String },
    /// Shuffle an unbordered word with its reverse.
    Shuffle { word: String },
    /// Prime palstars of length 2n.
    Enum {
        #[arg(long)]
        half_length: usize,
    },
    /// Number of prime palstars of each half-length.
    Count {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum LangCmd {
    /// Is L = L*?
    Closed { file: PathBuf },
    /// Star root of a closed language, as a minimal DFA.
    Invstar {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Kleene star, as a minimal DFA (or the raw NFA with --nfa).
    Star {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        nfa: bool,
    },
    /// Do two automata accept the same language?
    Eq { first: PathBuf, second: PathBuf },
    /// Is the word accepted?
    Member { file: PathBuf, word: String },
    /// Check that the star of the star root gives back the language.
    VerifyRoot { file: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Border(#[from] BorderError),
    #[error(transparent)]
    Palstar(#[from] PalstarError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Domain(String),
}

type Result<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let mut buf = Vec::new();
    match execute(&cli, &mut buf) {
        Ok(()) => {
            let _ = out.write_all(&buf);
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<()> {
    let mut ctx = Context {
        config: &cli.config,
        alphabet: Alphabet::parse(&cli.config.alphabet)?,
        out,
    };
    match &cli.command {
        Command::Borders(cmd) => ctx.borders(cmd),
        Command::Palstar(cmd) => ctx.palstar(cmd),
        Command::Lang(cmd) => ctx.lang(cmd),
        Command::Crosscheck { max_half_length } => ctx.crosscheck(*max_half_length),
    }
}

struct Context<'a> {
    config: &'a CliConfig,
    alphabet: Alphabet,
    out: &'a mut Vec<u8>,
}

impl Context<'_> {
    fn line(&mut self, text: impl AsRef<str>) {
        self.out.extend_from_slice(text.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    fn word(&self, text: &str) -> Result<Word> {
        Ok(self.alphabet.parse_word(text)?)
    }

    fn render(&self, w: &Word) -> Result<String> {
        Ok(self.alphabet.render(w)?)
    }

    fn predicate(&mut self, value: bool) {
        self.line(if value { "true" } else { "false" });
    }

    fn words(&mut self, words: impl Iterator<Item = Word>) -> Result<()> {
        let cap = self.config.cap.unwrap_or(usize::MAX);
        for w in words.take(cap) {
            let text = self.render(&w)?;
            self.line(text);
        }
        Ok(())
    }

    fn counts(&mut self, table: &CountTable) {
        for (n, a) in table.iter() {
            self.line(format!("{n}\t{a}"));
        }
    }

    fn borders(&mut self, cmd: &BordersCmd) -> Result<()> {
        match cmd {
            BordersCmd::Array { word } => {
                let arr = borders::border_array(&self.word(word)?)?;
                if self.config.tsv {
                    for (i, b) in arr.as_slice().iter().enumerate() {
                        self.line(format!("{}\t{b}", i + 1));
                    }
                } else {
                    let cells: Vec<String> = arr.as_slice().iter().map(usize::to_string).collect();
                    self.line(cells.join(" "));
                }
            }
            BordersCmd::Test { word } => {
                let v = borders::is_unbordered(&self.word(word)?)?;
                self.predicate(v);
            }
            BordersCmd::Enum { length } => {
                let words = borders::enumerate_unbordered(&self.alphabet, *length)?;
                self.words(words)?;
            }
            BordersCmd::Count { k, max_n } => {
                let table = borders::count_unbordered(*k, *max_n)?;
                self.counts(&table);
            }
            BordersCmd::Ck { k, n, digits } => {
                let est = borders::estimate_ck(*k, *n)?;
                if self.config.tsv {
                    let line = format!(
                        "{k}\t{n}\t{}\t{}\t{}",
                        est.ratio.numer(),
                        est.ratio.denom(),
                        est.to_decimal(*digits)
                    );
                    self.line(line);
                } else {
                    self.line(est.to_decimal(*digits));
                }
            }
        }
        Ok(())
    }

    fn palstar(&mut self, cmd: &PalstarCmd) -> Result<()> {
        match cmd {
            PalstarCmd::Test { word } => {
                let v = palstars::is_palstar(&self.word(word)?);
                self.predicate(v);
            }
            PalstarCmd::Prime { word } => {
                let v = palstars::is_prime_palstar(&self.word(word)?);
                self.predicate(v);
            }
            PalstarCmd::Factor { word } => {
                let w = self.word(word)?;
                let f = palstars::factor_palstar(&w)
                    .ok_or_else(|| CliError::Domain(format!("{word:?} is not a palstar")))?;
                let parts = f
                    .factors()
                    .iter()
                    .map(|x| self.render(x))
                    .collect::<Result<Vec<_>>>()?;
                self.line(parts.join(" "));
            }
            PalstarCmd::Root { word } => match palstars::unbordered_root_of(&self.word(word)?) {
                Some(z) => {
                    let text = self.render(&z)?;
                    self.line(text);
                }
                None => self.line("none"),
            },
            PalstarCmd::Shuffle { word } => {
                let w = palstars::prime_palstar_of(&self.word(word)?)?;
                let text = self.render(&w)?;
                self.line(text);
            }
            PalstarCmd::Enum { half_length } => {
                // lexicographic order, so the stream is collected first
                let mut all: Vec<Word> =
                    palstars::enumerate_prime_palstars(&self.alphabet, *half_length)?.collect();
                all.sort();
                self.words(all.into_iter())?;
            }
            PalstarCmd::Count { k, max_n } => {
                let table = borders::count_unbordered(*k, *max_n)?;
                self.counts(&table);
            }
        }
        Ok(())
    }

    fn lang(&mut self, cmd: &LangCmd) -> Result<()> {
        match cmd {
            LangCmd::Closed { file } => {
                let d = load(file)?.into_dfa();
                self.predicate(automata::is_closed(&d));
            }
            LangCmd::Invstar { file, output } => {
                let d = load(file)?.into_dfa();
                let root = automata::inverse_star(&d)?;
                self.emit(output.as_deref(), &root.to_json())?;
            }
            LangCmd::Star { file, output, nfa } => {
                let d = load(file)?.into_dfa();
                let starred = automata::star(&d);
                let text = if *nfa {
                    starred.to_json()
                } else {
                    starred.determinize().minimize().to_json()
                };
                self.emit(output.as_deref(), &text)?;
            }
            LangCmd::Eq { first, second } => {
                let a = load(first)?.into_dfa();
                let b = load(second)?.into_dfa();
                self.predicate(automata::equivalent(&a, &b)?);
            }
            LangCmd::Member { file, word } => {
                let automaton = load(file)?;
                let w = automaton.alphabet().parse_word(word)?;
                let d = automaton.into_dfa();
                self.predicate(d.accepts(&w));
            }
            LangCmd::VerifyRoot { file } => {
                let d = load(file)?.into_dfa();
                self.predicate(automata::verify_star_root(&d)?);
            }
        }
        Ok(())
    }

    fn emit(&mut self, output: Option<&Path>, text: &str) -> Result<()> {
        match output {
            Some(path) => fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            }),
            None => {
                self.line(text);
                Ok(())
            }
        }
    }

    fn crosscheck(&mut self, n: usize) -> Result<()> {
        let bound = self.config.oracle_bound as usize;
        if 2 * n > bound {
            return Err(CliError::Domain(format!(
                "crosscheck over words of length {} exceeds the oracle bound {bound}",
                2 * n
            )));
        }
        let report = crosscheck(n)?;
        self.line(format!("agree\t{}", report.agrees()));
        self.line(format!("star_root\t{}", report.star_root.len()));
        self.line(format!("recognized\t{}", report.recognized.len()));
        self.line(format!("from_unbordered\t{}", report.from_unbordered.len()));
        for (i, (b, a)) in report.b.iter().zip(&report.a).enumerate() {
            self.line(format!("{}\t{b}\t{a}", i + 1));
        }
        Ok(())
    }
}

fn load(path: &Path) -> Result<Automaton> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Automaton::from_json(&text)?)
}
