use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use macaulay_cli::{
    cmd_bridge, cmd_corpus, cmd_hermitian, cmd_hilbert, cmd_lemma_scan, cmd_macrep, cmd_min_sos, cmd_shift, cmd_verify,
    CorpusKind, Report,
};
use macaulay_core::io::{parse_biform, parse_ideals};
use macaulay_core::oracle::CorpusSpec;
use macaulay_core::poly::RankMode;

/// Exact Macaulay-representation, Hilbert-function and Hermitian-rank calculations.
///
/// Exit status: 0 when every verdict is ok or not applicable, 1 when a bound
/// is violated, 2 on malformed input.
#[derive(Parser)]
#[command(name = "macaulay", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// How ideal dimensions are computed.
    #[arg(long, value_enum, global = true, default_value_t = Mode::Exact)]
    mode: Mode,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    ModularChecked,
}

impl From<Mode> for RankMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => RankMode::Exact,
            Mode::ModularChecked => RankMode::ModularChecked,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    Exhaustive,
}

#[derive(Subcommand)]
enum Command {
    /// The n-th Macaulay representation of A.
    Macrep { a: BigUint, n: u32 },
    /// A_(n)|_s^t.
    #[command(allow_negative_numbers = true)]
    Shift { a: BigUint, n: u32, s: i64, t: i64 },
    /// Exhaustive check of the binomial splitting identity.
    LemmaScan {
        #[arg(long, default_value_t = 6)]
        m_max: u32,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        #[arg(long, default_value_t = 3)]
        s_max: u32,
    },
    /// Hilbert function of each ideal in FILE for degrees 0..=d_max.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
    },
    /// Macaulay growth bounds for each ideal in FILE.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
    },
    /// Equivalence of the ideal and quotient forms of the growth bound.
    Bridge {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        d_max: u32,
    },
    /// Signature, ranks and rank intervals for the Hermitian form in FILE.
    Hermitian {
        file: PathBuf,
        /// Positive part of the signed norm; defaults to all variables.
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
        /// Exponent for the sum-of-squares bounds; 0 skips them.
        #[arg(long, default_value_t = 1)]
        l: u32,
    },
    /// Least l <= l_max with M ‖z‖^{2l} a sum of squared norms.
    MinSos {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        l_max: u32,
    },
    /// Generate a corpus of ideals and run the growth bounds on it.
    Corpus {
        #[arg(long, value_enum, default_value_t = Kind::Random)]
        kind: Kind,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        generators_max: usize,
        #[arg(long, default_value_t = 3)]
        degree_max: u32,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
        /// Write the corpus as an ideal file.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Also report how often lex-segment ideals meet the growth bound exactly.
        #[arg(long)]
        lex_probe: bool,
    },
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn input<T>(r: macaulay_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn run(cli: &Cli) -> Result<Report, String> {
    let mode = RankMode::from(cli.mode);
    Ok(match &cli.command {
        Command::Macrep { a, n } => cmd_macrep(a, *n),
        Command::Shift { a, n, s, t } => cmd_shift(a, *n, *s, *t),
        Command::LemmaScan { m_max, d_max, s_max } => cmd_lemma_scan(*m_max, *d_max, *s_max),
        Command::Hilbert { file, d_max } => cmd_hilbert(&input(parse_ideals(&read(file)?))?, *d_max, mode),
        Command::Verify { file, d_max } => input(cmd_verify(&input(parse_ideals(&read(file)?))?, *d_max, mode))?,
        Command::Bridge { n_max, d_max } => cmd_bridge(*n_max, *d_max),
        Command::Hermitian { file, s, t, l } => {
            let m = input(parse_biform(&read(file)?))?;
            input(cmd_hermitian(&m, s.zip(*t), *l))?
        }
        Command::MinSos { file, l_max } => cmd_min_sos(&input(parse_biform(&read(file)?))?, *l_max),
        Command::Corpus {
            kind,
            seed,
            count,
            n_max,
            generators_max,
            degree_max,
            d_max,
            emit,
            lex_probe,
        } => {
            let spec = CorpusSpec {
                n_vars: (2, *n_max),
                generators: (1, *generators_max),
                degrees: (1, *degree_max),
                count: *count,
                d_max: *d_max,
                seed: *seed,
                ..CorpusSpec::default()
            };
            let kind = match kind {
                Kind::Random => CorpusKind::Random,
                Kind::Exhaustive => CorpusKind::Exhaustive,
            };
            let (report, doc) = input(cmd_corpus(kind, &spec, mode, *lex_probe))?;
            if let Some(path) = emit {
                std::fs::write(path, doc).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            report
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(mut report) => {
            report.command = std::env::args().skip(1).collect();
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Structured => println!("{}", report.to_structured()),
            }
            if report.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
