//! Matrix-based measures: the matching-function similarity and the mean /
//! normalized Hamming and Euclidean distances over indicator matrices.
//!
//! Every operand is totalized before evaluation, exactly as the matrix
//! representation demands. The two Euclidean distances are evaluated from
//! their own sums of squared differences; on 0/1 entries they coincide with
//! the square roots of the Hamming distances, which the tests check.

use crate::error::Result;
use crate::exact::{ratio, ExactValue, Rational, Surd};
use crate::matrix::{to_matrix, BinaryMatrix};
use crate::softset::{check_space, SoftSet};
use crate::value::MeasureValue;

fn matrices(f1: &SoftSet, f2: &SoftSet) -> Result<(BinaryMatrix, BinaryMatrix)> {
    check_space(f1, f2)?;
    Ok((to_matrix(f1), to_matrix(f2)))
}

fn entries<'a>(a: &'a BinaryMatrix, b: &'a BinaryMatrix) -> impl Iterator<Item = (i64, i64)> + 'a {
    a.rows().iter().zip(b.rows()).flat_map(|(ra, rb)| {
        ra.iter()
            .zip(rb)
            .map(|(&x, &y)| (i64::from(x), i64::from(y)))
    })
}

/// Dot products of indicator vectors over the component-wise maximum of
/// their squares. Undefined when both totalizations are all-empty.
pub fn ms_matching_similarity(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    let (a, b) = matrices(f1, f2)?;
    let (num, den) = entries(&a, &b).fold((0, 0), |(num, den), (x, y)| {
        (num + x * y, den + (x * x).max(y * y))
    });
    if den == 0 {
        return Ok(MeasureValue::undefined());
    }
    Ok(MeasureValue::exact(ExactValue::rational(ratio(num, den))))
}

/// Number of differing matrix entries, `k`.
pub fn differing_entries(f1: &SoftSet, f2: &SoftSet) -> Result<i64> {
    let (a, b) = matrices(f1, f2)?;
    Ok(entries(&a, &b).map(|(x, y)| (x - y).abs()).sum())
}

fn squared_sum(f1: &SoftSet, f2: &SoftSet) -> Result<i64> {
    let (a, b) = matrices(f1, f2)?;
    Ok(entries(&a, &b).map(|(x, y)| (x - y) * (x - y)).sum())
}

fn dims(f: &SoftSet) -> (i64, i64) {
    let s = f.space();
    (s.attribute_count() as i64, s.element_count() as i64)
}

/// `D^s`: mean Hamming distance, `k / m`.
pub fn ms_hamming_exact(f1: &SoftSet, f2: &SoftSet) -> Result<Rational> {
    let (m, _) = dims(f1);
    Ok(ratio(differing_entries(f1, f2)?, m))
}

/// `L^s`: normalized Hamming distance, `k / (m n)`.
pub fn ms_hamming_norm_exact(f1: &SoftSet, f2: &SoftSet) -> Result<Rational> {
    let (m, n) = dims(f1);
    Ok(ratio(differing_entries(f1, f2)?, m * n))
}

/// `E^s`: `√(Σ (F1 − F2)² / m)`.
pub fn ms_euclid_exact(f1: &SoftSet, f2: &SoftSet) -> Result<Surd> {
    let (m, _) = dims(f1);
    Ok(Surd::sqrt(ratio(squared_sum(f1, f2)?, m)))
}

/// `Q^s`: `√(Σ (F1 − F2)² / (m n))`.
pub fn ms_euclid_norm_exact(f1: &SoftSet, f2: &SoftSet) -> Result<Surd> {
    let (m, n) = dims(f1);
    Ok(Surd::sqrt(ratio(squared_sum(f1, f2)?, m * n)))
}

pub fn ms_hamming(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    ms_hamming_exact(f1, f2).map(|q| MeasureValue::exact(ExactValue::rational(q)))
}

pub fn ms_hamming_norm(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    ms_hamming_norm_exact(f1, f2).map(|q| MeasureValue::exact(ExactValue::rational(q)))
}

pub fn ms_euclid(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    ms_euclid_exact(f1, f2).map(|s| MeasureValue::exact(s.into()))
}

pub fn ms_euclid_norm(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    ms_euclid_norm_exact(f1, f2).map(|s| MeasureValue::exact(s.into()))
}

/// `S′ = 1 / (1 + E^s)`.
pub fn ms_similarity_prime(f1: &SoftSet, f2: &SoftSet) -> Result<MeasureValue> {
    let e = ms_euclid_exact(f1, f2)?;
    Ok(MeasureValue::exact(ExactValue::one_over_one_plus(&e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::softset::{null_soft_set, whole_soft_set, SoftSpace};
    use std::sync::Arc;

    fn ss(space: &Arc<SoftSpace>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_names(space, entries.iter().map(|(a, v)| (*a, v.iter().copied()))).unwrap()
    }

    /// Indicator-by-indicator evaluation of the matching similarity, written
    /// independently of the matrix helpers above.
    fn matching_oracle(f1: &SoftSet, f2: &SoftSet) -> Option<(i64, i64)> {
        let space = f1.space();
        let ind = |f: &SoftSet, a: usize, x: usize| -> i64 {
            i64::from(f.value(a).is_some_and(|v| v.contains(&x)))
        };
        let mut num = 0;
        let mut den = 0;
        for a in 0..space.attribute_count() {
            for x in 0..space.element_count() {
                let (p, q) = (ind(f1, a, x), ind(f2, a, x));
                num += p * q;
                den += if p == 1 || q == 1 { 1 } else { 0 };
            }
        }
        (den != 0).then_some((num, den))
    }

    #[test]
    fn matching_zero_over_zero() {
        let space = SoftSpace::new(["a", "b", "c"], ["e1", "e2", "e3"]).unwrap();
        let empty = null_soft_set(&space);
        let s = ms_matching_similarity(&empty, &empty).unwrap();
        assert!(!s.is_defined());
        assert_eq!(s.render_exact(), "undefined");
    }

    #[test]
    fn matching_worked_pair() {
        let space = SoftSpace::new(["a", "b"], ["e1", "e2"]).unwrap();
        let f1 = ss(&space, &[("e1", &["a"]), ("e2", &["a", "b"])]);
        let f2 = ss(&space, &[("e1", &["b"]), ("e2", &["b"])]);
        assert_eq!(matching_oracle(&f1, &f2), Some((1, 4)));
        let s = ms_matching_similarity(&f1, &f2).unwrap();
        assert_eq!(s.exact_value(), Some(&ExactValue::rational(ratio(1, 4))));
        let one = ms_matching_similarity(&f1, &f1).unwrap();
        assert_eq!(one.exact_value(), Some(&ExactValue::integer(1)));
    }

    #[test]
    fn extremes_of_hamming() {
        let space = SoftSpace::new(["a", "b", "c"], ["e1", "e2"]).unwrap();
        let (null, whole) = (null_soft_set(&space), whole_soft_set(&space));
        assert_eq!(ms_hamming_exact(&null, &null).unwrap(), ratio(0, 1));
        assert_eq!(ms_hamming_exact(&null, &whole).unwrap(), ratio(3, 1));
        assert_eq!(ms_hamming_norm_exact(&null, &whole).unwrap(), ratio(1, 1));
        assert_eq!(
            ms_euclid_exact(&null, &whole).unwrap().to_string(),
            "sqrt(3)"
        );
        assert_eq!(
            ms_euclid_norm_exact(&null, &whole).unwrap().to_string(),
            "1"
        );
    }

    #[test]
    fn superiority_example_values() {
        let space = SoftSpace::new(["a", "b", "c", "d"], ["e1", "e2", "e3"]).unwrap();
        let f = ss(&space, &[("e1", &[]), ("e2", &[])]);
        let g = ss(&space, &[("e2", &["b", "d"])]);
        let h = ss(&space, &[("e2", &["b", "c", "d"])]);
        assert_eq!(ms_hamming_exact(&f, &h).unwrap(), ratio(1, 1));
        assert_eq!(ms_hamming_norm_exact(&f, &h).unwrap(), ratio(1, 4));
        assert_eq!(ms_euclid_exact(&f, &h).unwrap().to_string(), "1");
        assert_eq!(ms_euclid_exact(&g, &h).unwrap().to_string(), "sqrt(3)/3");
        assert_eq!(
            ms_similarity_prime(&f, &h).unwrap().exact_value(),
            Some(&ExactValue::rational(ratio(1, 2)))
        );
        let s = ms_similarity_prime(&g, &h).unwrap();
        assert_eq!(s.render_exact(), "1/(1+sqrt(3)/3)");
        assert!((s.value().unwrap() - 0.633).abs() < 1e-3);
        assert_eq!(
            ms_similarity_prime(&h, &h).unwrap().exact_value(),
            Some(&ExactValue::integer(1))
        );
    }
}
