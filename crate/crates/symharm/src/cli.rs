//! Argument parsing and subcommand dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use symharm_core::scale::continued_fraction_scale;
use symharm_core::{Chord, Error as CoreError, MeasureKind, Rational, Scale, ScaleId, Voicing};

use crate::render::{render, Format, Table};
use crate::report;
use crate::scale_file::{parse_scale, ScaleFileError};

#[derive(Debug, Parser)]
#[command(
    name = "symharm",
    version,
    about = "Consonance rankings of chords in twelve-note just scales"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frequency ratios of the built-in scales (plus --scale-file, if given)
    Scales,
    /// Symmetric harmonicity h1..h11 of every interval
    Intervals {
        /// One row per built-in scale
        #[arg(long)]
        all_scales: bool,
    },
    /// Rank the k-note classes by a measure
    Rank {
        /// Rank matrix over the built-in scales
        #[arg(long)]
        all_scales: bool,
    },
    /// Report on one chord (--notes) or one class (--class)
    Chord {
        /// With --class, add Brefeld and Stolzenburg values per member
        #[arg(long)]
        all_measures: bool,
    },
    /// Triad ranks against the listener rankings
    Compare,
    /// List the k-note classes with their members and sub-orbits
    Classes,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Built-in scale A..E (default A)
    #[arg(long, global = true, conflicts_with = "scale_file")]
    pub scale: Option<ScaleId>,
    /// Scale file: optional name line, then twelve ratios
    #[arg(long, global = true, value_name = "PATH")]
    pub scale_file: Option<PathBuf>,
    /// md, csv or json
    #[arg(long, global = true, default_value = "md")]
    pub format: Format,
    /// Chord size
    #[arg(short, global = true, default_value_t = 3)]
    pub k: usize,
    /// symm, brefeld, brefeld-mod, stolzenburg or stolzenburg-avg
    #[arg(long, global = true, default_value = "symm", value_parser = parse_measure)]
    pub measure: MeasureKind,
    /// Absolute note indices, e.g. 0,4,7
    #[arg(
        long,
        global = true,
        value_name = "LIST",
        value_delimiter = ',',
        conflicts_with = "class"
    )]
    pub notes: Option<Vec<usize>>,
    /// Class label or any member, e.g. 3,7
    #[arg(long, global = true, value_name = "LABEL")]
    pub class: Option<Chord>,
    /// Keep only classes with symmetric harmonicity below N
    #[arg(long, global = true, value_name = "N")]
    pub threshold: Option<BigUint>,
    /// Rebuild scale C from continued fractions at this relative tolerance
    #[arg(long, global = true, value_name = "R")]
    pub tolerance: Option<Rational>,
    /// Octave convention for averaged periodicity: closed, reduced or pitch-class
    #[arg(long, global = true, default_value = "closed")]
    pub voicing: Voicing,
}

/// Any measure that can be computed; the empirical ranks are reference data only.
fn parse_measure(s: &str) -> Result<MeasureKind, String> {
    match s.parse::<MeasureKind>() {
        Ok(MeasureKind::Empirical) | Err(_) => {
            Err("expected symm, brefeld, brefeld-mod, stolzenburg or stolzenburg-avg".to_string())
        }
        Ok(kind) => Ok(kind),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    ScaleFile {
        path: String,
        source: ScaleFileError,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.to_string())
}

/// Scale C, regenerated when a tolerance is given.
fn scale_c(tolerance: Option<&Rational>) -> Result<Scale, CliError> {
    match tolerance {
        Some(tol) => Ok(continued_fraction_scale(tol)?.with_name("C")),
        None => Ok(Scale::builtin(ScaleId::C)),
    }
}

fn builtins(opts: &Options) -> Result<Vec<Scale>, CliError> {
    ScaleId::ALL
        .iter()
        .map(|&id| {
            if id == ScaleId::C {
                scale_c(opts.tolerance.as_ref())
            } else {
                Ok(Scale::builtin(id))
            }
        })
        .collect()
}

fn read_scale_file(path: &PathBuf) -> Result<Scale, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_scale(&text).map_err(|source| CliError::ScaleFile {
        path: shown,
        source,
    })
}

/// The one scale an invocation works on; A unless told otherwise.
pub fn resolve_scale(opts: &Options) -> Result<Scale, CliError> {
    if let Some(path) = &opts.scale_file {
        if opts.tolerance.is_some() {
            return Err(usage("--tolerance only applies to scale C"));
        }
        return read_scale_file(path);
    }
    match (opts.scale.unwrap_or(ScaleId::A), &opts.tolerance) {
        (ScaleId::C, tol) => scale_c(tol.as_ref()),
        (_, Some(_)) => Err(usage("--tolerance only applies to scale C")),
        (id, None) => Ok(Scale::builtin(id)),
    }
}

fn table(cli: &Cli) -> Result<Table, CliError> {
    let opts = &cli.options;
    let table = match &cli.command {
        Command::Scales => {
            let mut scales = builtins(opts)?;
            if let Some(path) = &opts.scale_file {
                scales.push(read_scale_file(path)?);
            }
            report::scales_table(&scales)
        }
        Command::Intervals { all_scales: true } => report::intervals_table(&builtins(opts)?, true),
        Command::Intervals { all_scales: false } => {
            report::intervals_table(&[resolve_scale(opts)?], false)
        }
        Command::Rank { all_scales } => {
            if let Some(threshold) = &opts.threshold {
                if opts.measure != MeasureKind::SymmetricHarmonicity {
                    return Err(usage("--threshold applies to --measure symm only"));
                }
                if *all_scales {
                    return Err(usage("--threshold takes a single scale"));
                }
                report::threshold_report(&resolve_scale(opts)?, opts.k, threshold)?
            } else if *all_scales {
                report::rank_matrix(&builtins(opts)?, opts.k, opts.measure, opts.voicing)?
            } else {
                report::rank_table(&resolve_scale(opts)?, opts.k, opts.measure, opts.voicing)?
            }
        }
        Command::Chord { all_measures } => {
            let scale = resolve_scale(opts)?;
            match (&opts.notes, &opts.class) {
                (Some(notes), None) => report::notes_report(&scale, notes, opts.voicing)?,
                (None, Some(chord)) => {
                    let class = symharm_core::chord::class_of(chord);
                    let mut table = report::class_report(&scale, &class, *all_measures);
                    if class.label() != chord {
                        table.note(format!("{chord} belongs to class {}", class.label()));
                    }
                    table
                }
                _ => return Err(usage("chord needs --notes LIST or --class LABEL")),
            }
        }
        Command::Compare => {
            report::compare_table(&resolve_scale(opts)?, opts.measure, opts.voicing)
        }
        Command::Classes => report::classes_table(opts.k)?,
    };
    Ok(table)
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    Ok(render(
        std::slice::from_ref(&table(cli)?),
        cli.options.format,
    ))
}
