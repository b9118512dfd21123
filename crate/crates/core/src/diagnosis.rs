//! Similarity-based diagnosis: compare coded profiles against a model soft set
//! and flag the ones that are significantly similar to it.

use serde::{Deserialize, Serialize};

use crate::error::{Result, SoftSetError};
use crate::measure::{MeasureId, MeasureKind};
use crate::similarity::SimilarityConfig;
use crate::softset::SoftSet;

/// Measure used when none is given.
pub const DEFAULT_MEASURE: MeasureId = MeasureId::KoczyE;

/// A named soft set: linguistic labels as attributes, indicators as elements.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub name: String,
    pub softset: SoftSet,
}

impl Profile {
    pub fn new(name: impl Into<String>, softset: SoftSet) -> Self {
        Profile {
            name: name.into(),
            softset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosisReport {
    pub name: String,
    pub model: String,
    pub measure: String,
    /// Exact form such as `1/(4+sqrt(7))`; absent for transcendental values.
    pub value_exact: Option<String>,
    /// Six decimal places, ties to even.
    pub value_decimal: String,
    pub threshold: f64,
    pub significant: bool,
}

impl DiagnosisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| SoftSetError::Parse(e.to_string()))
    }
}

/// Similarity of `profile` to `model` and whether it reaches
/// `config.significant_threshold()` (inclusive).
pub fn diagnose(
    profile: &Profile,
    model: &Profile,
    measure: MeasureId,
    config: &SimilarityConfig,
) -> Result<DiagnosisReport> {
    measure.expect_kind(MeasureKind::Similarity)?;
    let value = measure.evaluate(&profile.softset, &model.softset, config.steepness())?;
    let decimal = value
        .value()
        .ok_or_else(|| SoftSetError::Undefined(measure.as_str().to_owned()))?;
    let threshold = config.significant_threshold();
    Ok(DiagnosisReport {
        name: profile.name.clone(),
        model: model.name.clone(),
        measure: measure.as_str().to_owned(),
        value_exact: value.exact_value().map(ToString::to_string),
        value_decimal: value.render_decimal(),
        threshold,
        significant: decimal >= threshold,
    })
}

/// [`diagnose`] for each profile, in input order. Failures are kept per entry.
pub fn batch_diagnose(
    profiles: &[Profile],
    model: &Profile,
    measure: MeasureId,
    config: &SimilarityConfig,
) -> Vec<Result<DiagnosisReport>> {
    profiles
        .iter()
        .map(|p| diagnose(p, model, measure, config))
        .collect()
}

/// Newline-separated JSON objects, one per entry. Failed entries become
/// `{"name": ..., "error": ...}`.
pub fn render_structured(entries: &[(String, Result<DiagnosisReport>)]) -> String {
    let mut out = String::new();
    for (name, entry) in entries {
        let line = match entry {
            Ok(report) => report.to_json(),
            Err(e) => serde_json::json!({ "name": name, "error": e.to_string() }).to_string(),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Aligned table for terminals.
pub fn render_table(entries: &[(String, Result<DiagnosisReport>)]) -> String {
    let header = [
        "profile",
        "model",
        "measure",
        "value",
        "exact",
        "significant",
    ];
    let mut rows: Vec<[String; 6]> = vec![header.map(str::to_owned)];
    for (name, entry) in entries {
        rows.push(match entry {
            Ok(r) => [
                r.name.clone(),
                r.model.clone(),
                r.measure.clone(),
                r.value_decimal.clone(),
                r.value_exact.clone().unwrap_or_else(|| "-".to_owned()),
                if r.significant { "yes" } else { "no" }.to_owned(),
            ],
            Err(e) => [
                name.clone(),
                "-".into(),
                "-".into(),
                "-".into(),
                "-".into(),
                format!("error: {e}"),
            ],
        });
    }
    let widths: Vec<usize> = (0..6)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (cell, &w))| {
                if i == 5 {
                    cell.clone()
                } else {
                    format!("{cell:<w$}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
