//! Command-line front end. Exit status: 0 success, 1 domain error (undefined
//! value, violated precondition), 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{check_similarity_axioms, classify_exhaustive, classify_measure};
use crate::diagnosis::{batch_diagnose, render_structured, render_table, DiagnosisReport, Profile};
use crate::error::SoftSetError;
use crate::exact::decimal6_trimmed;
use crate::fixtures;
use crate::io::{parse_soft_set_in, read_soft_set};
use crate::matrix::to_matrix;
use crate::measure::{MeasureId, MeasureKind};
use crate::similarity::{validate_steepness, SimilarityConfig};
use crate::softset::{complement_pair, ComplementConvention, SoftSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "softsim",
    version,
    about = "Distances and similarities between soft sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputMode {
    #[default]
    Human,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum ConventionArg {
    #[default]
    Same,
    Negated,
}

impl From<ConventionArg> for ComplementConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Same => ComplementConvention::SameAttributes,
            ConventionArg::Negated => ComplementConvention::NegatedAttributes,
        }
    }
}

fn parse_measure(s: &str) -> Result<MeasureId, String> {
    s.parse::<MeasureId>().map_err(|e| e.to_string())
}

fn parse_steepness(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    validate_steepness(v).map_err(|e| e.to_string())
}

fn parse_threshold(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    crate::similarity::validate_threshold(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, value_parser = parse_measure)]
    pub measure: MeasureId,
    /// First soft-set file.
    #[arg(long)]
    pub a: PathBuf,
    /// Second soft-set file; omit together with --complement to compare `a`
    /// with its complement.
    #[arg(long, required_unless_present = "complement")]
    pub b: Option<PathBuf>,
    /// Use the complement of `a` as the second operand.
    #[arg(long, conflicts_with = "b")]
    pub complement: bool,
    #[arg(long, value_enum, default_value_t)]
    pub complement_convention: ConventionArg,
    /// Print the exact form (`5/4`, `1+sqrt(3)`) instead of a decimal.
    #[arg(long)]
    pub exact: bool,
    /// Print both operands' indicator matrices first.
    #[arg(long)]
    pub show_matrix: bool,
    #[arg(long, value_parser = parse_steepness, default_value_t = 1.0)]
    pub steepness: f64,
    #[arg(long, value_enum, default_value_t)]
    pub output: OutputMode,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two soft sets.
    Dist(PairArgs),
    /// Similarity between two soft sets.
    Sim(PairArgs),
    /// Check the metric axioms M1-M5 for a distance on seeded samples.
    Classify {
        #[arg(long, value_parser = parse_measure)]
        measure: MeasureId,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Also check every pair and triple on a 2x2 space.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check the similarity axioms s1-s4 on seeded samples.
    CheckSimAxioms {
        #[arg(long, value_parser = parse_measure)]
        measure: MeasureId,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, value_parser = parse_steepness, default_value_t = 1.0)]
        steepness: f64,
    },
    /// Compare profile files against a model soft set.
    Diagnose {
        #[arg(long)]
        model: PathBuf,
        #[arg(required = true)]
        profiles: Vec<PathBuf>,
        #[arg(long, value_parser = parse_measure, default_value = "koczy-e")]
        measure: MeasureId,
        #[arg(long, value_parser = parse_threshold, default_value_t = 0.5)]
        threshold: f64,
        #[arg(long, value_parser = parse_steepness, default_value_t = 1.0)]
        steepness: f64,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
    /// Run the bundled firm-profile example end to end.
    DemoFinancial {
        #[arg(long, value_parser = parse_measure, default_value = "koczy-e")]
        measure: MeasureId,
        #[arg(long, value_enum, default_value_t)]
        output: OutputMode,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<SoftSetError> for Failure {
    fn from(e: SoftSetError) -> Self {
        Failure {
            code: if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            },
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Dist(args) => pair(args, MeasureKind::Distance, out),
        Command::Sim(args) => pair(args, MeasureKind::Similarity, out),
        Command::Classify {
            measure,
            seed,
            trials,
            exhaustive,
        } => {
            measure.expect_kind(MeasureKind::Distance)?;
            let mut report = classify_measure(measure, seed, trials)?;
            if exhaustive {
                report.merge(classify_exhaustive(measure, 2, 2)?);
            }
            writeln!(out, "measure {measure} seed {seed} trials {trials}")?;
            write!(out, "{report}")?;
            Ok(())
        }
        Command::CheckSimAxioms {
            measure,
            seed,
            trials,
            steepness,
        } => {
            measure.expect_kind(MeasureKind::Similarity)?;
            let report = check_similarity_axioms(measure, seed, trials, steepness)?;
            writeln!(out, "measure {measure} seed {seed} trials {trials}")?;
            write!(out, "{report}")?;
            Ok(())
        }
        Command::Diagnose {
            model,
            profiles,
            measure,
            threshold,
            steepness,
            output,
        } => {
            measure.expect_kind(MeasureKind::Similarity)?;
            let config = SimilarityConfig::with_steepness(steepness)?
                .with_significant_threshold(threshold)?;
            let model = load_profile(&model)?;
            let mut entries = Vec::with_capacity(profiles.len());
            for path in &profiles {
                let label = path.display().to_string();
                match load_profile_in(path, &model) {
                    Ok(p) => {
                        let mut r =
                            batch_diagnose(std::slice::from_ref(&p), &model, measure, &config);
                        entries.push((p.name.clone(), r.remove(0)));
                    }
                    Err(e) => entries.push((label, Err(e))),
                }
            }
            emit_reports(&entries, output, out)
        }
        Command::DemoFinancial { measure, output } => {
            measure.expect_kind(MeasureKind::Similarity)?;
            let [abc, xyz, model] = fixtures::financial();
            let config = SimilarityConfig::default();
            let profiles = [abc, xyz];
            let entries: Vec<(String, crate::Result<DiagnosisReport>)> = profiles
                .iter()
                .map(|p| p.name.clone())
                .zip(batch_diagnose(&profiles, &model, measure, &config))
                .collect();
            if output == OutputMode::Human {
                writeln!(out, "model: {} {}", model.name, model.softset)?;
                for p in &profiles {
                    writeln!(out, "profile: {} {}", p.name, p.softset)?;
                }
                writeln!(out)?;
            }
            emit_reports(&entries, output, out)
        }
    }
}

fn emit_reports(
    entries: &[(String, crate::Result<DiagnosisReport>)],
    output: OutputMode,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let text = match output {
        OutputMode::Human => render_table(entries),
        OutputMode::Structured => render_structured(entries),
    };
    out.write_all(text.as_bytes())?;
    match entries.iter().find_map(|(_, r)| r.as_ref().err()) {
        Some(e) => Err(Failure {
            code: if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            },
            message: format!("some profiles could not be diagnosed: {e}"),
        }),
        None => Ok(()),
    }
}

fn load_profile(path: &std::path::Path) -> crate::Result<Profile> {
    let parsed = read_soft_set(path)?;
    let name = parsed.name.unwrap_or_else(|| file_stem(path));
    Ok(Profile::new(name, parsed.softset))
}

fn load_profile_in(path: &std::path::Path, model: &Profile) -> crate::Result<Profile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SoftSetError::Parse(format!("{}: {e}", path.display())))?;
    let parsed = parse_soft_set_in(&text, model.softset.space())?;
    let name = parsed.name.unwrap_or_else(|| file_stem(path));
    Ok(Profile::new(name, parsed.softset))
}

fn file_stem(path: &std::path::Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn operands(args: &PairArgs) -> crate::Result<(SoftSet, SoftSet)> {
    let a = read_soft_set(&args.a)?.softset;
    match &args.b {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| SoftSetError::Parse(format!("{}: {e}", path.display())))?;
            let b = parse_soft_set_in(&text, a.space())?.softset;
            Ok((a, b))
        }
        None => Ok(complement_pair(&a, args.complement_convention.into())),
    }
}

fn pair(args: PairArgs, kind: MeasureKind, out: &mut dyn Write) -> Result<(), Failure> {
    let measure = args.measure.expect_kind(kind)?;
    let (a, b) = operands(&args)?;
    if args.show_matrix {
        write!(out, "a:\n{}b:\n{}", to_matrix(&a), to_matrix(&b))?;
    }
    let value = measure.evaluate(&a, &b, args.steepness)?;
    match args.output {
        OutputMode::Structured => {
            let doc = serde_json::json!({
                "measure": measure.as_str(),
                "defined": value.is_defined(),
                "value_exact": value.exact_value().map(ToString::to_string),
                "value_decimal": value.is_defined().then(|| value.render_decimal()),
            });
            writeln!(out, "{doc}")?;
            if !value.is_defined() {
                return Err(SoftSetError::Undefined(measure.as_str().to_owned()).into());
            }
        }
        OutputMode::Human => {
            let Some(decimal) = value.value() else {
                return Err(SoftSetError::Undefined(measure.as_str().to_owned()).into());
            };
            if args.exact {
                writeln!(out, "{}", value.render_exact())?;
            } else {
                writeln!(out, "{}", decimal6_trimmed(decimal))?;
            }
        }
    }
    Ok(())
}
