//! Similarity measures built from set operations and from the Euclidean
//! distances, plus α-similarity and significant similarity.

use crate::distance::{euclid_exact, euclid_norm_exact};
use crate::error::{Result, SoftSetError};
use crate::exact::{ratio, ExactValue, Rational};
use crate::measure::{MeasureId, MeasureKind};
use crate::softset::{check_space, SoftSet};
use crate::value::MeasureValue;

/// Threshold for significant similarity; comparisons are inclusive.
pub const SIGNIFICANT_THRESHOLD: f64 = 0.5;

/// Parameters for the similarity relations.
///
/// `steepness` is the Williams–Steele exponent scale; `alpha_threshold` is the
/// α-similarity level. They are unrelated despite sharing a symbol in the
/// literature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityConfig {
    steepness: f64,
    alpha_threshold: f64,
    significant_threshold: f64,
}

impl Default for SimilarityConfig {
    fn default() -> Self {
        SimilarityConfig {
            steepness: 1.0,
            alpha_threshold: SIGNIFICANT_THRESHOLD,
            significant_threshold: SIGNIFICANT_THRESHOLD,
        }
    }
}

impl SimilarityConfig {
    pub fn new(steepness: f64, alpha_threshold: f64) -> Result<Self> {
        Ok(SimilarityConfig {
            steepness: validate_steepness(steepness)?,
            alpha_threshold: validate_threshold(alpha_threshold)?,
            significant_threshold: SIGNIFICANT_THRESHOLD,
        })
    }

    pub fn with_steepness(steepness: f64) -> Result<Self> {
        SimilarityConfig::new(steepness, SIGNIFICANT_THRESHOLD)
    }

    /// Overrides the significance level used by diagnosis.
    pub fn with_significant_threshold(mut self, threshold: f64) -> Result<Self> {
        self.significant_threshold = validate_threshold(threshold)?;
        Ok(self)
    }

    pub fn steepness(&self) -> f64 {
        self.steepness
    }

    pub fn alpha_threshold(&self) -> f64 {
        self.alpha_threshold
    }

    pub fn significant_threshold(&self) -> f64 {
        self.significant_threshold
    }
}

pub fn validate_steepness(steepness: f64) -> Result<f64> {
    if steepness.is_finite() && steepness > 0.0 {
        Ok(steepness)
    } else {
        Err(SoftSetError::InvalidSteepness(steepness))
    }
}

pub fn validate_threshold(threshold: f64) -> Result<f64> {
    if threshold > 0.0 && threshold < 1.0 {
        Ok(threshold)
    } else {
        Err(SoftSetError::InvalidThreshold(threshold))
    }
}

/// Set-theoretic matching similarity. `raw` lies in `[0, 2]`, `normalized`
/// is `raw / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingValue {
    pub raw: MeasureValue,
    pub normalized: MeasureValue,
}

/// `‖A∩B‖ / max(‖A‖,‖B‖) + Σ‖F∩G‖ / Σ max(‖F‖,‖G‖)`, sums over `A∩B`.
///
/// The second term is 0 when `A∩B = ∅` and 1 when every value set on `A∩B`
/// is empty on both sides. Undefined when both domains are empty.
pub fn matching_similarity_exact(f: &SoftSet, g: &SoftSet) -> Result<Option<Rational>> {
    check_space(f, g)?;
    let (a, b) = (f.domain(), g.domain());
    let larger = a.len().max(b.len()) as i64;
    if larger == 0 {
        return Ok(None);
    }
    let shared: Vec<usize> = a.intersection(&b).copied().collect();
    let first = ratio(shared.len() as i64, larger);
    let second = if shared.is_empty() {
        ratio(0, 1)
    } else {
        let (num, den) = shared.iter().fold((0i64, 0i64), |(num, den), &e| {
            let (x, y) = (f.value(e).unwrap(), g.value(e).unwrap());
            (
                num + x.intersection(y).count() as i64,
                den + x.len().max(y.len()) as i64,
            )
        });
        if den == 0 {
            ratio(1, 1)
        } else {
            ratio(num, den)
        }
    };
    Ok(Some(first + second))
}

pub fn matching_similarity_m(f: &SoftSet, g: &SoftSet) -> Result<MatchingValue> {
    Ok(match matching_similarity_exact(f, g)? {
        Some(raw) => MatchingValue {
            raw: MeasureValue::exact(ExactValue::rational(raw)),
            normalized: MeasureValue::exact(ExactValue::rational(raw / 2)),
        },
        None => MatchingValue {
            raw: MeasureValue::undefined(),
            normalized: MeasureValue::undefined(),
        },
    })
}

/// `1 / (1 + e)`.
pub fn koczy_e(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    let d = euclid_exact(f, g)?;
    Ok(MeasureValue::exact(ExactValue::one_over_one_plus(&d)))
}

/// `1 / (1 + q)`.
pub fn koczy_q(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    let d = euclid_norm_exact(f, g)?;
    Ok(MeasureValue::exact(ExactValue::one_over_one_plus(&d)))
}

fn williams(distance: f64, steepness: f64) -> Result<MeasureValue> {
    let steepness = validate_steepness(steepness)?;
    if distance == 0.0 {
        return Ok(MeasureValue::exact(ExactValue::integer(1)));
    }
    Ok(MeasureValue::approx((-steepness * distance).exp()))
}

/// `exp(−steepness · e)`.
pub fn williams_e(f: &SoftSet, g: &SoftSet, steepness: f64) -> Result<MeasureValue> {
    validate_steepness(steepness)?;
    williams(euclid_exact(f, g)?.to_f64(), steepness)
}

/// `exp(−steepness · q)`.
pub fn williams_q(f: &SoftSet, g: &SoftSet, steepness: f64) -> Result<MeasureValue> {
    validate_steepness(steepness)?;
    williams(euclid_norm_exact(f, g)?.to_f64(), steepness)
}

fn similarity_value(f: &SoftSet, g: &SoftSet, measure: MeasureId, steepness: f64) -> Result<f64> {
    measure.expect_kind(MeasureKind::Similarity)?;
    measure
        .evaluate(f, g, steepness)?
        .value()
        .ok_or_else(|| SoftSetError::Undefined(measure.as_str().to_owned()))
}

/// `S(f, g) ≥ threshold`, inclusive.
pub fn meets_threshold(
    f: &SoftSet,
    g: &SoftSet,
    measure: MeasureId,
    threshold: f64,
    steepness: f64,
) -> Result<bool> {
    Ok(similarity_value(f, g, measure, steepness)? >= threshold)
}

/// α-similarity at `config.alpha_threshold()`.
pub fn is_alpha_similar(
    f: &SoftSet,
    g: &SoftSet,
    measure: MeasureId,
    config: &SimilarityConfig,
) -> Result<bool> {
    meets_threshold(f, g, measure, config.alpha_threshold, config.steepness)
}

/// Similarity at least one half.
pub fn is_significantly_similar(
    f: &SoftSet,
    g: &SoftSet,
    measure: MeasureId,
    config: &SimilarityConfig,
) -> Result<bool> {
    meets_threshold(
        f,
        g,
        measure,
        config.significant_threshold,
        config.steepness,
    )
}
