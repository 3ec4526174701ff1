//! Command-line front end: minors, Plücker checks, reconstruction,
//! projection, and linear equivalence of 2×4 matrices.
//!
//! Results go to stdout as a single JSON document (or whitespace-separated
//! numbers with `--format plain`). Failures print `{"error": NAME,
//! "message": ...}` and exit 1 for domain errors or 2 for usage, parse, and
//! I/O errors.

mod error;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use plucker24::{
    are_equivalent, project, reconstruct_canonical, reconstruct_exact, recover_transform,
    select_pivot, Pivot, Tolerance,
};

use error::CliError;
use output::{
    json, plain_matrix, plain_numbers, plain_projection, plain_sextuple, CheckDoc, EquivalentDoc,
    ErrorDoc, MinorsDoc, PipelineDoc, ProjectDoc, ReconstructDoc,
};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Parser)]
#[command(
    name = "plucker24",
    version,
    about = "Minor sextuples of real 2x4 matrices: extraction, Plücker relation checks,\n\
             reconstruction, quadric projection, and linear equivalence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Relative tolerance for approximate comparisons
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_tol: f64,

    /// Absolute tolerance floor
    #[arg(long, global = true, default_value_t = 1e-12)]
    abs_tol: f64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the six column minors of a matrix
    Minors {
        /// JSON file with a "matrix" field, or - for stdin
        #[arg(long)]
        matrix: String,
    },
    /// Evaluate the Plücker defect of a minor sextuple
    Check {
        /// JSON file with a "minors" field, or - for stdin
        #[arg(long)]
        minors: String,
    },
    /// Build a matrix whose minors reproduce a consistent sextuple
    Reconstruct {
        /// JSON file with a "minors" field, or - for stdin
        #[arg(long)]
        minors: String,
        /// Pivot minor to normalize by (12|13|14|23|24|34); defaults to the
        /// largest in absolute value
        #[arg(long)]
        pivot: Option<Pivot>,
        /// Reproduce the input minors exactly
        #[arg(long, conflicts_with = "canonical")]
        exact: bool,
        /// Normalize the pivot minor to 1 (the default)
        #[arg(long)]
        canonical: bool,
    },
    /// Project a noisy sextuple onto the Plücker quadric
    Project {
        /// JSON file with a "minors" field, or - for stdin
        #[arg(long)]
        minors: String,
    },
    /// Decide linear equivalence of two matrices and recover S with B = S*A
    Equivalent {
        /// JSON file with a "matrix" field, or - for stdin
        #[arg(long)]
        matrix_a: String,
        /// JSON file with a "matrix" field, or - for stdin
        #[arg(long)]
        matrix_b: String,
    },
    /// project, then pick a pivot, then reconstruct exactly
    Pipeline {
        /// JSON file with a "minors" field, or - for stdin
        #[arg(long)]
        minors: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            // Errors are always JSON so scripts can match on the name.
            println!(
                "{}",
                json(&ErrorDoc {
                    error: err.name(),
                    message: err.message(),
                })
            );
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let tol = Tolerance::new(cli.rel_tol, cli.abs_tol)?;
    let format = cli.format;
    match &cli.command {
        Command::Minors { matrix } => {
            let a = input::load_matrix(matrix)?;
            let m = a.minors();
            if !m.is_finite() {
                return Err(CliError::non_finite(
                    "computed minors exceed the f64 range".to_string(),
                ));
            }
            Ok(match format {
                Format::Json => json(&MinorsDoc { minors: m.into() }),
                Format::Plain => plain_sextuple(&m),
            })
        }
        Command::Check { minors } => {
            let m = input::load_minors(minors)?;
            let satisfies = m.satisfies_plucker(tol);
            let defect = m.plucker_defect();
            Ok(match format {
                Format::Json => json(&CheckDoc {
                    satisfies_plucker: satisfies,
                    defect,
                }),
                Format::Plain => plain_numbers(&[f64::from(u8::from(satisfies)), defect]),
            })
        }
        Command::Reconstruct {
            minors,
            pivot,
            exact,
            canonical: _,
        } => {
            let m = input::load_minors(minors)?;
            let pivot = match pivot {
                Some(p) => *p,
                None => select_pivot(&m, tol)?,
            };
            let (matrix, mode, t) = if *exact {
                (reconstruct_exact(&m, pivot, tol)?, "exact", 1.0)
            } else {
                (
                    reconstruct_canonical(&m, pivot, tol)?,
                    "canonical",
                    1.0 / pivot.value_in(&m),
                )
            };
            Ok(match format {
                Format::Json => json(&ReconstructDoc {
                    matrix: matrix.rows(),
                    pivot: pivot.to_string(),
                    mode,
                    t,
                }),
                Format::Plain => plain_matrix(&matrix),
            })
        }
        Command::Project { minors } => {
            let m = input::load_minors(minors)?;
            let r = project(&m, tol)?;
            Ok(match format {
                Format::Json => json(&ProjectDoc {
                    corrected: r.corrected.into(),
                    p: r.p,
                    defect_before: r.defect_before,
                    defect_after: r.defect_after,
                }),
                Format::Plain => plain_projection(&r),
            })
        }
        Command::Equivalent { matrix_a, matrix_b } => {
            let a = input::load_matrix(matrix_a)?;
            let b = input::load_matrix(matrix_b)?;
            if !are_equivalent(&a, &b, tol)? {
                return Err(CliError::not_equivalent(
                    "matrices are not linearly equivalent: minor sextuples are not proportional"
                        .to_string(),
                ));
            }
            let s = recover_transform(&a, &b, tol)?;
            Ok(match format {
                Format::Json => json(&EquivalentDoc {
                    equivalent: true,
                    t: s.det(),
                    s: s.to_rows(),
                }),
                Format::Plain => plain_numbers(&[1.0, s.det(), s.s11, s.s12, s.s21, s.s22]),
            })
        }
        Command::Pipeline { minors } => {
            let m = input::load_minors(minors)?;
            let r = project(&m, tol)?;
            let pivot = select_pivot(&r.corrected, tol)?;
            let matrix = reconstruct_exact(&r.corrected, pivot, tol)?;
            Ok(match format {
                Format::Json => json(&PipelineDoc {
                    corrected: r.corrected.into(),
                    p: r.p,
                    defect_before: r.defect_before,
                    defect_after: r.defect_after,
                    pivot: pivot.to_string(),
                    matrix: matrix.rows(),
                }),
                Format::Plain => format!(
                    "{}\n{}\n{}",
                    plain_projection(&r),
                    pivot,
                    plain_matrix(&matrix)
                ),
            })
        }
    }
}
