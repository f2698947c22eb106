use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use signature_triangle::output::{self, Format};
use signature_triangle::verify::DEFAULT_VERIFY_C_MAX;
use signature_triangle::{Convention, Error, Normalization};

#[derive(Parser)]
#[command(name = "knotsig", version, about = "Signature distributions of 2-bridge knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Emit {
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// One row sigma -> s(c, sigma).
    Row {
        c: i64,
        #[command(flatten)]
        emit: Emit,
    },
    /// Rows 3..=c_max.
    Triangle {
        c_max: i64,
        #[command(flatten)]
        emit: Emit,
    },
    /// |T(c)|, |K(c)|, |T_p(c)| for a range of c.
    Counts {
        c_min: i64,
        c_max: i64,
        #[command(flatten)]
        emit: Emit,
    },
    /// Exact second moments per c.
    Variance {
        c_min: i64,
        c_max: i64,
        #[arg(long, value_enum, default_value_t = ConventionArg::PaperCenter)]
        convention: ConventionArg,
        #[command(flatten)]
        emit: Emit,
    },
    /// Normalized CDF against the standard normal.
    Clt {
        #[arg(required = true, value_delimiter = ',')]
        c: Vec<i64>,
        #[arg(long, value_enum, default_value_t = NormalizationArg::SqrtC)]
        normalization: NormalizationArg,
        #[command(flatten)]
        emit: Emit,
    },
    /// Run every self-check; exit 1 on any failure.
    Verify {
        #[arg(default_value_t = DEFAULT_VERIFY_C_MAX)]
        c_max: i64,
        #[command(flatten)]
        emit: Emit,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    PaperCenter,
    TrueCentral,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormalizationArg {
    SqrtC,
    Measured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, emit) = match cli.command {
        Command::Row { c, emit } => (output::cmd_row(c, format(&emit)).map(|s| (s, 0)), emit),
        Command::Triangle { c_max, emit } => (output::cmd_triangle(c_max, format(&emit)).map(|s| (s, 0)), emit),
        Command::Counts { c_min, c_max, emit } => {
            (output::cmd_counts(c_min, c_max, format(&emit)).map(|s| (s, 0)), emit)
        }
        Command::Variance { c_min, c_max, convention, emit } => {
            let convention = match convention {
                ConventionArg::PaperCenter => Convention::PaperCenter,
                ConventionArg::TrueCentral => Convention::TrueCentral,
            };
            (output::cmd_variance(c_min, c_max, convention, format(&emit)).map(|s| (s, 0)), emit)
        }
        Command::Clt { c, normalization, emit } => {
            let normalization = match normalization {
                NormalizationArg::SqrtC => Normalization::SqrtC,
                NormalizationArg::Measured => Normalization::Measured,
            };
            (output::cmd_clt(&c, normalization, format(&emit)).map(|s| (s, 0)), emit)
        }
        Command::Verify { c_max, emit } => (output::cmd_verify(c_max, format(&emit)), emit),
    };

    match result {
        Ok((text, code)) => {
            if let Some(path) = &emit.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("knotsig: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("knotsig: {e}");
            match e {
                Error::Integrity { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn format(emit: &Emit) -> Format {
    match emit.format {
        FormatArg::Table => Format::Table,
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    }
}
