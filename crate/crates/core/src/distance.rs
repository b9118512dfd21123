//! Set-operation based distances between soft sets.
//!
//! | id | formula |
//! |----|---------|
//! | `d` | `‖AΔB‖ + Σ_{A∩B} ‖FΔG‖` |
//! | `l` | `‖AΔB‖/‖A∪B‖ + Σ_{A∩B} ‖FΔG‖/‖F∪G‖` |
//! | `c` | `|‖A‖−‖B‖| + Σ_{A∩B} |‖F‖−‖G‖|` |
//! | `p` | `|‖A‖−‖B‖|/‖E‖ + Σ_{A∩B} |‖F‖−‖G‖|/‖X‖` |
//! | `e` | `‖AΔB‖ + √(Σ_{A∩B} ‖FΔG‖)` |
//! | `q` | `‖AΔB‖/√‖A∪B‖ + √(Σ_{A∩B} ‖FΔG‖/‖F∪G‖)` |
//!
//! `e` and `q` sum the per-element squared indicator differences under the
//! radical, which for crisp sets is `‖FΔG‖`. The `*-literal` variants square
//! the cardinality instead. Ratios whose denominator `‖F∪G‖` is zero count
//! as zero.

use std::collections::BTreeSet;

use crate::error::{Result, SoftSetError};
use crate::exact::{ratio, ExactValue, Rational, Surd};
use crate::softset::{check_space, SoftSet, ValueSet};
use crate::value::MeasureValue;

struct Overlap<'a> {
    sym_diff: i64,
    union: i64,
    len_f: i64,
    len_g: i64,
    shared: Vec<(&'a ValueSet, &'a ValueSet)>,
}

fn overlap<'a>(f: &'a SoftSet, g: &'a SoftSet) -> Result<Overlap<'a>> {
    check_space(f, g)?;
    let a: BTreeSet<usize> = f.domain();
    let b: BTreeSet<usize> = g.domain();
    let shared = a
        .intersection(&b)
        .map(|&e| (f.value(e).unwrap(), g.value(e).unwrap()))
        .collect();
    Ok(Overlap {
        sym_diff: a.symmetric_difference(&b).count() as i64,
        union: a.union(&b).count() as i64,
        len_f: a.len() as i64,
        len_g: b.len() as i64,
        shared,
    })
}

fn require_domains(f: &SoftSet, g: &SoftSet, measure: &'static str) -> Result<()> {
    if f.domain_len() == 0 || g.domain_len() == 0 {
        Err(SoftSetError::EmptyDomain { measure })
    } else {
        Ok(())
    }
}

fn sym_diff_len(x: &ValueSet, y: &ValueSet) -> i64 {
    x.symmetric_difference(y).count() as i64
}

fn union_len(x: &ValueSet, y: &ValueSet) -> i64 {
    x.union(y).count() as i64
}

/// `‖FΔG‖^power / ‖F∪G‖`, zero when the union is empty.
fn chi(x: &ValueSet, y: &ValueSet, power: u32) -> Rational {
    let u = union_len(x, y);
    if u == 0 {
        ratio(0, 1)
    } else {
        ratio(sym_diff_len(x, y).pow(power), u)
    }
}

pub fn hamming_quasi_exact(f: &SoftSet, g: &SoftSet) -> Result<i64> {
    let o = overlap(f, g)?;
    require_domains(f, g, "d")?;
    Ok(o.sym_diff
        + o.shared
            .iter()
            .map(|(x, y)| sym_diff_len(x, y))
            .sum::<i64>())
}

pub fn hamming_quasi_norm_exact(f: &SoftSet, g: &SoftSet) -> Result<Rational> {
    let o = overlap(f, g)?;
    require_domains(f, g, "l")?;
    let head = ratio(o.sym_diff, o.union);
    Ok(o.shared.iter().fold(head, |acc, (x, y)| acc + chi(x, y, 1)))
}

pub fn cardinality_semi_exact(f: &SoftSet, g: &SoftSet) -> Result<i64> {
    let o = overlap(f, g)?;
    let tail: i64 = o
        .shared
        .iter()
        .map(|(x, y)| (x.len() as i64 - y.len() as i64).abs())
        .sum();
    Ok((o.len_f - o.len_g).abs() + tail)
}

pub fn cardinality_semi_norm_exact(f: &SoftSet, g: &SoftSet) -> Result<Rational> {
    let o = overlap(f, g)?;
    let m = f.space().attribute_count() as i64;
    let n = f.space().element_count() as i64;
    let head = ratio((o.len_f - o.len_g).abs(), m);
    Ok(o.shared.iter().fold(head, |acc, (x, y)| {
        acc + ratio((x.len() as i64 - y.len() as i64).abs(), n)
    }))
}

fn euclid_with_power(f: &SoftSet, g: &SoftSet, power: u32, id: &'static str) -> Result<Surd> {
    let o = overlap(f, g)?;
    require_domains(f, g, id)?;
    let inner: i64 = o
        .shared
        .iter()
        .map(|(x, y)| sym_diff_len(x, y).pow(power))
        .sum();
    Ok(Surd::from_integer(o.sym_diff) + Surd::sqrt(ratio(inner, 1)))
}

fn euclid_norm_with_power(f: &SoftSet, g: &SoftSet, power: u32, id: &'static str) -> Result<Surd> {
    let o = overlap(f, g)?;
    require_domains(f, g, id)?;
    // ‖AΔB‖ / √‖A∪B‖ = √(‖AΔB‖² / ‖A∪B‖)
    let head = Surd::sqrt(ratio(o.sym_diff * o.sym_diff, o.union));
    let inner = o
        .shared
        .iter()
        .fold(ratio(0, 1), |acc, (x, y)| acc + chi(x, y, power));
    Ok(head + Surd::sqrt(inner))
}

pub fn euclid_exact(f: &SoftSet, g: &SoftSet) -> Result<Surd> {
    euclid_with_power(f, g, 1, "e")
}

pub fn euclid_norm_exact(f: &SoftSet, g: &SoftSet) -> Result<Surd> {
    euclid_norm_with_power(f, g, 1, "q")
}

pub fn euclid_literal_exact(f: &SoftSet, g: &SoftSet) -> Result<Surd> {
    euclid_with_power(f, g, 2, "e-literal")
}

pub fn euclid_norm_literal_exact(f: &SoftSet, g: &SoftSet) -> Result<Surd> {
    euclid_norm_with_power(f, g, 2, "q-literal")
}

fn integer_value(k: i64) -> MeasureValue {
    MeasureValue::exact(ExactValue::integer(k))
}

fn rational_value(q: Rational) -> MeasureValue {
    MeasureValue::exact(ExactValue::rational(q))
}

fn surd_value(s: Surd) -> MeasureValue {
    MeasureValue::exact(s.into())
}

/// Hamming quasi-metric `d`.
pub fn hamming_quasi(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    hamming_quasi_exact(f, g).map(integer_value)
}

/// Normalized Hamming quasi-metric `l`. Not bounded by one.
pub fn hamming_quasi_norm(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    hamming_quasi_norm_exact(f, g).map(rational_value)
}

/// Cardinality semi-metric `c`.
pub fn cardinality_semi(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    cardinality_semi_exact(f, g).map(integer_value)
}

/// Normalized cardinality semi-metric `p`.
pub fn cardinality_semi_norm(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    cardinality_semi_norm_exact(f, g).map(rational_value)
}

/// Euclidean distance `e`.
pub fn euclid(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    euclid_exact(f, g).map(surd_value)
}

/// Normalized Euclidean distance `q`.
pub fn euclid_norm(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    euclid_norm_exact(f, g).map(surd_value)
}

pub fn euclid_literal(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    euclid_literal_exact(f, g).map(surd_value)
}

pub fn euclid_norm_literal(f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
    euclid_norm_literal_exact(f, g).map(surd_value)
}
