use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wittkit::verify::{basis_for, VerifyOptions};
use wittkit::{Error, Suite};

mod emit;

/// Exact geometric algebra: Witt bases, spectral bases, coordinate matrices.
#[derive(Parser, Debug)]
#[command(name = "wittkit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a constructed object to standard output.
    Generate {
        #[arg(value_enum)]
        object: Object,
        /// Algebra preset: g11, g22, g33, g44, g13, g13new, g3.
        #[arg(long)]
        algebra: Option<String>,
        /// Level: 2^k points for omega and frame-map.
        #[arg(long)]
        k: Option<usize>,
        /// Number of local nilpotents for local-witt (2..=8).
        #[arg(long)]
        m: Option<usize>,
        /// Omega variant (plain, minus, complex-plain, complex-minus); `complex` selects
        /// the complex frame map.
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Convert JSON multivectors to coordinate matrices or back, one value per line.
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        algebra: String,
    },
    /// Run verification suites; exit status 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "WITTKIT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Object {
    GlobalWitt,
    LocalWitt,
    Spectral,
    Omega,
    DiracStandard,
    DiracNew,
    Pauli,
    FrameMap,
    C8Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Csv,
    /// Aligned text; c8-table only.
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Mv2mat,
    Mat2mv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

const EXIT_FAIL: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::ExtractorUnavailable(_) => EXIT_UNSUPPORTED,
        _ => EXIT_BAD_INPUT,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            object,
            algebra,
            k,
            m,
            variant,
            format,
        } => emit::generate(object, algebra.as_deref(), k, m, variant.as_deref(), format).map(|s| {
            print!("{s}");
            0
        }),
        Command::Convert { direction, algebra } => convert(direction, &algebra).map(|_| 0),
        Command::Verify {
            suite,
            seed,
            samples,
            format,
        } => verify(&suite, seed, samples, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("wittkit: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn convert(direction: Direction, algebra: &str) -> wittkit::Result<()> {
    let basis = basis_for(algebra)?;
    let mut input = String::new();
    io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| Error::Schema(format!("reading standard input: {e}")))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for value in serde_json::Deserializer::from_str(&input).into_iter::<serde_json::Value>() {
        let value = value.map_err(|e| Error::Schema(format!("invalid JSON: {e}")))?;
        let converted = match direction {
            Direction::Mv2mat => {
                let g = wittkit::Multivector::from_json(&value, Some(basis.signature()))?;
                if **g.signature() != **basis.signature() {
                    return Err(Error::SignatureMismatch {
                        left: g.signature().to_string(),
                        right: basis.signature().to_string(),
                    });
                }
                basis.to_matrix(&g)?.to_json()
            }
            Direction::Mat2mv => {
                let m = wittkit::MvMatrix::from_json(&value)?;
                basis.from_matrix(&m)?.to_json()
            }
        };
        writeln!(out, "{converted}").map_err(|e| Error::Schema(format!("writing output: {e}")))?;
    }
    Ok(())
}

fn verify(suite: &str, seed: u64, samples: usize, format: ReportFormat) -> wittkit::Result<u8> {
    let suite: Suite = suite.parse()?;
    let report = wittkit::run_suite(suite, &VerifyOptions { seed, samples })?;
    match format {
        ReportFormat::Text => print!("{report}"),
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable")),
    }
    Ok(if report.all_passed() { 0 } else { EXIT_FAIL })
}
