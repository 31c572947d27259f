use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mplcd::cli;
use mplcd::gf::Inner;
use mplcd::report::Report;

#[derive(Parser)]
#[command(name = "mplcd", version, about = "Matrix-product and cyclic LCD codes over small finite fields")]
struct Args {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InnerArg {
    Euclidean,
    Hermitian,
}

impl From<InnerArg> for Inner {
    fn from(v: InnerArg) -> Inner {
        match v {
            InnerArg::Euclidean => Inner::Euclidean,
            InnerArg::Hermitian => Inner::Hermitian,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Describe a finite field: modulus, primitive element, conjugation.
    FieldInfo { field: String },
    /// Factor a polynomial into irreducibles with reciprocal-pair annotations.
    Factor { field: String, poly: String },
    /// Decide the LCD property of a cyclic code structurally, with trace.
    CyclicLcd {
        field: String,
        n: usize,
        gen: String,
        #[arg(long, value_enum, default_value_t = InnerArg::Euclidean)]
        inner: InnerArg,
    },
    /// Build a matrix-product code from a JSON spec file.
    Mp {
        spec: PathBuf,
        /// Compute the distance bound from component distances.
        #[arg(long)]
        bound: bool,
        /// Run the LCD characterizations and the direct check.
        #[arg(long)]
        lcd: bool,
        /// Also compute the dual via component duals and cross-check it.
        #[arg(long)]
        dual: bool,
        /// Codeword-enumeration cap for exact distances.
        #[arg(long)]
        distance_budget: Option<u64>,
    },
    /// Minimum distance of a code given as a JSON file.
    Distance {
        code: PathBuf,
        #[arg(long, default_value_t = mplcd::code::DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
    /// Reproduce the bundled worked examples and grade every claim.
    VerifyPaper {
        /// Run a single example by id (e.g. 4.3).
        #[arg(long)]
        only: Option<String>,
        /// Treat discrepancies and not-desk-verifiable items as failures.
        #[arg(long)]
        strict: bool,
        /// Directory of example data files.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let strict = matches!(args.command, Command::VerifyPaper { strict: true, .. });
    match run(&args.command) {
        Ok(report) => {
            match args.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code(strict) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: &Command) -> mplcd::Result<Report> {
    match command {
        Command::FieldInfo { field } => cli::cmd_field_info(field),
        Command::Factor { field, poly } => cli::cmd_factor(field, poly),
        Command::CyclicLcd { field, n, gen, inner } => {
            cli::cmd_cyclic_lcd(field, *n, gen, (*inner).into())
        }
        Command::Mp {
            spec,
            bound,
            lcd,
            dual,
            distance_budget,
        } => cli::cmd_mp(
            spec,
            &cli::MpOptions {
                bound: *bound,
                lcd: *lcd,
                dual: *dual,
                distance_budget: *distance_budget,
            },
        ),
        Command::Distance { code, budget } => cli::cmd_distance(code, *budget),
        Command::VerifyPaper {
            only,
            strict: _,
            data_dir,
        } => {
            let dir = data_dir
                .clone()
                .unwrap_or_else(mplcd::verify::default_data_dir);
            cli::cmd_verify_paper(&dir, only.as_deref())
        }
    }
}
