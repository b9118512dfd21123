//! Soft spaces, soft sets and the set-theoretic operations on them.
//!
//! A [`SoftSet`] is a partial map from attributes of its [`SoftSpace`] to
//! subsets of the universe. An attribute that is absent from the domain is a
//! different state from an attribute mapped to the empty set; every operation
//! here keeps that distinction.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, SoftSetError};

/// Prefix used to name the negated twin of an attribute.
pub const NEGATION_PREFIX: &str = "¬";

/// A finite ordered universe of elements together with a finite ordered
/// universe of attributes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SoftSpace {
    universe: Vec<String>,
    attributes: Vec<String>,
}

impl SoftSpace {
    pub fn new<U, A>(universe: U, attributes: A) -> Result<Arc<Self>>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        if universe.is_empty() {
            return Err(SoftSetError::EmptyUniverse);
        }
        if attributes.is_empty() {
            return Err(SoftSetError::EmptyAttributes);
        }
        if let Some(dup) = first_duplicate(&universe) {
            return Err(SoftSetError::DuplicateElement(dup.to_owned()));
        }
        if let Some(dup) = first_duplicate(&attributes) {
            return Err(SoftSetError::DuplicateAttribute(dup.to_owned()));
        }
        Ok(Arc::new(SoftSpace {
            universe,
            attributes,
        }))
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    /// Number of attributes, `m`.
    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    /// Number of elements, `n`.
    pub fn element_count(&self) -> usize {
        self.universe.len()
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.universe.iter().position(|x| x == name)
    }

    /// The space with the negated twin of every attribute appended, in
    /// original order. Twins that are already declared are not added again.
    pub fn with_negated_attributes(&self) -> Arc<SoftSpace> {
        let mut attributes = self.attributes.clone();
        for a in &self.attributes {
            let twin = negated_name(a);
            if !attributes.contains(&twin) {
                attributes.push(twin);
            }
        }
        Arc::new(SoftSpace {
            universe: self.universe.clone(),
            attributes,
        })
    }

    /// True when `other` has the same universe and extends this attribute list.
    pub fn is_extended_by(&self, other: &SoftSpace) -> bool {
        self.universe == other.universe && other.attributes.starts_with(&self.attributes)
    }
}

fn first_duplicate(items: &[String]) -> Option<&str> {
    let mut seen = HashSet::new();
    items
        .iter()
        .find(|item| !seen.insert(item.as_str()))
        .map(String::as_str)
}

/// Name of the negated twin of `attribute`; `¬¬e` collapses back to `e`.
pub fn negated_name(attribute: &str) -> String {
    match attribute.strip_prefix(NEGATION_PREFIX) {
        Some(original) => original.to_owned(),
        None => format!("{NEGATION_PREFIX}{attribute}"),
    }
}

/// Which complement to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ComplementConvention {
    /// Keep the attribute domain, complement each value set.
    #[default]
    SameAttributes,
    /// Replace each attribute by its negated twin and complement each value set.
    NegatedAttributes,
}

impl std::str::FromStr for ComplementConvention {
    type Err = SoftSetError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "same" => Ok(ComplementConvention::SameAttributes),
            "negated" => Ok(ComplementConvention::NegatedAttributes),
            other => Err(SoftSetError::Parse(format!(
                "unknown complement convention `{other}` (expected `same` or `negated`)"
            ))),
        }
    }
}

/// Value set of one attribute, as indices into the universe.
pub type ValueSet = BTreeSet<usize>;

/// A soft set `(F, A)` over a [`SoftSpace`].
///
/// Attributes and elements are stored by their index in the space, so
/// iteration follows declaration order.
#[derive(Debug, Clone)]
pub struct SoftSet {
    space: Arc<SoftSpace>,
    assignment: BTreeMap<usize, ValueSet>,
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.assignment == other.assignment
    }
}

impl Eq for SoftSet {}

pub(crate) fn same_space(a: &Arc<SoftSpace>, b: &Arc<SoftSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SoftSet {
    /// Builds a soft set from attribute and element names.
    pub fn from_names<'a, I, V>(space: &Arc<SoftSpace>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, V)>,
        V: IntoIterator<Item = &'a str>,
    {
        let mut assignment = BTreeMap::new();
        for (attr, values) in entries {
            let ai = space
                .attribute_index(attr)
                .ok_or_else(|| SoftSetError::UnknownAttribute(attr.to_owned()))?;
            if assignment.contains_key(&ai) {
                return Err(SoftSetError::DuplicateAttribute(attr.to_owned()));
            }
            let mut set = ValueSet::new();
            for x in values {
                let xi = space
                    .element_index(x)
                    .ok_or_else(|| SoftSetError::UnknownElement(x.to_owned()))?;
                if !set.insert(xi) {
                    return Err(SoftSetError::DuplicateValue {
                        attribute: attr.to_owned(),
                        element: x.to_owned(),
                    });
                }
            }
            assignment.insert(ai, set);
        }
        Ok(SoftSet {
            space: Arc::clone(space),
            assignment,
        })
    }

    /// Builds a soft set from attribute and element indices.
    pub fn from_indices<I>(space: &Arc<SoftSpace>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, ValueSet)>,
    {
        let mut assignment = BTreeMap::new();
        for (ai, set) in entries {
            if ai >= space.attribute_count() {
                return Err(SoftSetError::UnknownAttribute(format!("#{ai}")));
            }
            if let Some(&bad) = set.iter().find(|&&x| x >= space.element_count()) {
                return Err(SoftSetError::UnknownElement(format!("#{bad}")));
            }
            assignment.insert(ai, set);
        }
        Ok(SoftSet {
            space: Arc::clone(space),
            assignment,
        })
    }

    /// The soft set with an empty domain.
    pub fn empty(space: &Arc<SoftSpace>) -> Self {
        SoftSet {
            space: Arc::clone(space),
            assignment: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &Arc<SoftSpace> {
        &self.space
    }

    /// Attribute domain `A`, as indices in space order.
    pub fn domain(&self) -> BTreeSet<usize> {
        self.assignment.keys().copied().collect()
    }

    pub fn domain_len(&self) -> usize {
        self.assignment.len()
    }

    pub fn contains_attribute(&self, attribute: usize) -> bool {
        self.assignment.contains_key(&attribute)
    }

    /// `F(ε)` for an attribute index, or `None` when the attribute is absent.
    pub fn value(&self, attribute: usize) -> Option<&ValueSet> {
        self.assignment.get(&attribute)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &ValueSet)> {
        self.assignment.iter().map(|(&a, v)| (a, v))
    }

    /// True when the domain is all of `E`.
    pub fn is_total(&self) -> bool {
        self.assignment.len() == self.space.attribute_count()
    }

    /// True when every value set is empty (an empty domain counts).
    pub fn all_values_empty(&self) -> bool {
        self.assignment.values().all(BTreeSet::is_empty)
    }

    /// The same soft set seen inside a space whose attribute list extends this
    /// one's. Attribute indices are preserved.
    pub fn rehome(&self, space: &Arc<SoftSpace>) -> Result<SoftSet> {
        if !self.space.is_extended_by(space) {
            return Err(SoftSetError::SpaceMismatch);
        }
        Ok(SoftSet {
            space: Arc::clone(space),
            assignment: self.assignment.clone(),
        })
    }

    /// Attribute names with their value sets, in space order.
    pub fn named_entries(&self) -> Vec<(&str, Vec<&str>)> {
        self.assignment
            .iter()
            .map(|(&a, vals)| {
                (
                    self.space.attributes[a].as_str(),
                    vals.iter()
                        .map(|&x| self.space.universe[x].as_str())
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for SoftSet {
    /// `{e1={a,c}, e3={b,c}}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (attr, vals)) in self.named_entries().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{attr}={{{}}}", vals.join(","))?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_space(f: &SoftSet, g: &SoftSet) -> Result<()> {
    if same_space(&f.space, &g.space) {
        Ok(())
    } else {
        Err(SoftSetError::SpaceMismatch)
    }
}

/// `(F_φ, E)`: every attribute mapped to the empty set.
pub fn null_soft_set(space: &Arc<SoftSpace>) -> SoftSet {
    SoftSet {
        space: Arc::clone(space),
        assignment: (0..space.attribute_count())
            .map(|a| (a, ValueSet::new()))
            .collect(),
    }
}

/// `(F_X, E)`: every attribute mapped to the whole universe.
pub fn whole_soft_set(space: &Arc<SoftSpace>) -> SoftSet {
    let all: ValueSet = (0..space.element_count()).collect();
    SoftSet {
        space: Arc::clone(space),
        assignment: (0..space.attribute_count())
            .map(|a| (a, all.clone()))
            .collect(),
    }
}

/// `A ⊆ B` and `F(ε) ⊆ G(ε)` for every `ε ∈ A`.
pub fn is_soft_subset(f: &SoftSet, g: &SoftSet) -> Result<bool> {
    check_space(f, g)?;
    Ok(f.assignment
        .iter()
        .all(|(a, fv)| match g.assignment.get(a) {
            Some(gv) => fv.is_subset(gv),
            None => false,
        }))
}

/// Mutual soft inclusion: identical domains and identical value sets.
pub fn soft_equal(f: &SoftSet, g: &SoftSet) -> Result<bool> {
    check_space(f, g)?;
    Ok(f.assignment == g.assignment)
}

pub fn soft_union(f: &SoftSet, g: &SoftSet) -> Result<SoftSet> {
    check_space(f, g)?;
    let mut assignment = f.assignment.clone();
    for (&a, gv) in &g.assignment {
        assignment
            .entry(a)
            .and_modify(|fv| fv.extend(gv.iter().copied()))
            .or_insert_with(|| gv.clone());
    }
    Ok(SoftSet {
        space: Arc::clone(&f.space),
        assignment,
    })
}

/// Restricted intersection over `A ∩ B`, which must be non-empty.
pub fn soft_intersection_restricted(f: &SoftSet, g: &SoftSet) -> Result<SoftSet> {
    check_space(f, g)?;
    let assignment: BTreeMap<usize, ValueSet> = f
        .assignment
        .iter()
        .filter_map(|(a, fv)| {
            g.assignment
                .get(a)
                .map(|gv| (*a, fv.intersection(gv).copied().collect()))
        })
        .collect();
    if assignment.is_empty() {
        return Err(SoftSetError::EmptyIntersection);
    }
    Ok(SoftSet {
        space: Arc::clone(&f.space),
        assignment,
    })
}

/// Complement of `f`.
///
/// Under [`ComplementConvention::NegatedAttributes`] the result lives in
/// `f.space().with_negated_attributes()`; use [`complement_pair`] to get `f`
/// rehomed into that space as well.
pub fn soft_complement(f: &SoftSet, conv: ComplementConvention) -> SoftSet {
    let n = f.space.element_count();
    let complement = |v: &ValueSet| -> ValueSet { (0..n).filter(|x| !v.contains(x)).collect() };
    match conv {
        ComplementConvention::SameAttributes => SoftSet {
            space: Arc::clone(&f.space),
            assignment: f
                .assignment
                .iter()
                .map(|(&a, v)| (a, complement(v)))
                .collect(),
        },
        ComplementConvention::NegatedAttributes => {
            let space = f.space.with_negated_attributes();
            let assignment = f
                .assignment
                .iter()
                .map(|(&a, v)| {
                    let twin = negated_name(&f.space.attributes[a]);
                    let idx = space
                        .attribute_index(&twin)
                        .expect("negated space declares every twin");
                    (idx, complement(v))
                })
                .collect();
            SoftSet { space, assignment }
        }
    }
}

/// `f` and its complement, both in the space the complement lives in.
pub fn complement_pair(f: &SoftSet, conv: ComplementConvention) -> (SoftSet, SoftSet) {
    let c = soft_complement(f, conv);
    let lifted = f
        .rehome(c.space())
        .expect("complement space extends the operand space");
    (lifted, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc_space() -> Arc<SoftSpace> {
        SoftSpace::new(["a", "b", "c"], ["e1", "e2", "e3"]).unwrap()
    }

    fn ss(space: &Arc<SoftSpace>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_names(space, entries.iter().map(|(a, v)| (*a, v.iter().copied()))).unwrap()
    }

    #[test]
    fn space_rejects_duplicates_and_empties() {
        assert_eq!(
            SoftSpace::new(["a", "a"], ["e1"]).unwrap_err(),
            SoftSetError::DuplicateElement("a".into())
        );
        assert_eq!(
            SoftSpace::new(["a"], ["e1", "e1"]).unwrap_err(),
            SoftSetError::DuplicateAttribute("e1".into())
        );
        assert_eq!(
            SoftSpace::new(Vec::<String>::new(), ["e1"]).unwrap_err(),
            SoftSetError::EmptyUniverse
        );
        assert_eq!(
            SoftSpace::new(["a"], Vec::<String>::new()).unwrap_err(),
            SoftSetError::EmptyAttributes
        );
    }

    #[test]
    fn soft_set_validation_names_offending_token() {
        let s = abc_space();
        let err = SoftSet::from_names(&s, [("e9", vec!["a"])]).unwrap_err();
        assert_eq!(err, SoftSetError::UnknownAttribute("e9".into()));
        let err = SoftSet::from_names(&s, [("e1", vec!["z"])]).unwrap_err();
        assert_eq!(err, SoftSetError::UnknownElement("z".into()));
        let err = SoftSet::from_names(&s, [("e1", vec!["a", "a"])]).unwrap_err();
        assert!(matches!(err, SoftSetError::DuplicateValue { .. }));
    }

    #[test]
    fn null_and_whole() {
        let s = abc_space();
        let null = null_soft_set(&s);
        assert_eq!(null.domain_len(), 3);
        assert!(null.all_values_empty());
        assert_eq!(null.to_string(), "{e1={}, e2={}, e3={}}");
        assert!(soft_equal(&soft_union(&null, &null).unwrap(), &null).unwrap());

        let small = SoftSpace::new(["a", "b"], ["e1"]).unwrap();
        assert_eq!(whole_soft_set(&small).to_string(), "{e1={a,b}}");
        let whole = whole_soft_set(&s);
        let c = soft_complement(&whole, ComplementConvention::SameAttributes);
        assert!(soft_equal(&c, &null).unwrap());
    }

    #[test]
    fn subset_example_from_matrix_section() {
        let s = abc_space();
        let f = ss(&s, &[("e1", &["a", "c"]), ("e3", &["b", "c"])]);
        let g = ss(&s, &[("e1", &["a", "c"]), ("e2", &[]), ("e3", &["b", "c"])]);
        assert!(is_soft_subset(&f, &g).unwrap());
        assert!(!is_soft_subset(&g, &f).unwrap());
        assert!(is_soft_subset(&f, &f).unwrap());
        assert!(is_soft_subset(&null_soft_set(&s), &g).unwrap());
    }

    #[test]
    fn absent_attribute_differs_from_empty_value() {
        let s = abc_space();
        let f = ss(&s, &[("e1", &["a"])]);
        let g = ss(&s, &[("e1", &["a"]), ("e2", &[])]);
        assert!(!soft_equal(&f, &g).unwrap());
        let permuted = ss(&s, &[("e2", &[]), ("e1", &["a"])]);
        assert!(soft_equal(&g, &permuted).unwrap());
    }

    #[test]
    fn union_cases() {
        let s = abc_space();
        let u = soft_union(&ss(&s, &[("e1", &["a"])]), &ss(&s, &[("e2", &["b"])])).unwrap();
        assert_eq!(u.to_string(), "{e1={a}, e2={b}}");
        let u = soft_union(&ss(&s, &[("e1", &["a"])]), &ss(&s, &[("e1", &["b"])])).unwrap();
        assert_eq!(u.to_string(), "{e1={a,b}}");
    }

    #[test]
    fn restricted_intersection() {
        let s = SoftSpace::new(["a", "b", "c", "d"], ["e1", "e2", "e3"]).unwrap();
        let f = ss(&s, &[("e1", &["a", "b"]), ("e2", &["c"])]);
        let g = ss(&s, &[("e2", &["c", "d"]), ("e3", &["a"])]);
        let h = soft_intersection_restricted(&f, &g).unwrap();
        assert_eq!(h.to_string(), "{e2={c}}");
        assert!(soft_equal(&soft_intersection_restricted(&f, &f).unwrap(), &f).unwrap());
        let err =
            soft_intersection_restricted(&ss(&s, &[("e1", &["a"])]), &ss(&s, &[("e2", &["b"])]))
                .unwrap_err();
        assert_eq!(err, SoftSetError::EmptyIntersection);
    }

    #[test]
    fn complements() {
        let s = abc_space();
        let f = ss(&s, &[("e1", &["a", "c"])]);
        let c = soft_complement(&f, ComplementConvention::SameAttributes);
        assert_eq!(c.to_string(), "{e1={b}}");
        let back = soft_complement(&c, ComplementConvention::SameAttributes);
        assert!(soft_equal(&back, &f).unwrap());

        let s2 = SoftSpace::new(["a", "b"], ["e1"]).unwrap();
        let f = ss(&s2, &[("e1", &["a"])]);
        let (lifted, c) = complement_pair(&f, ComplementConvention::NegatedAttributes);
        assert_eq!(c.to_string(), "{¬e1={b}}");
        assert_eq!(
            c.space().attributes(),
            &["e1".to_string(), "¬e1".to_string()]
        );
        assert!(lifted.domain().is_disjoint(&c.domain()));
        let back = soft_complement(&c, ComplementConvention::NegatedAttributes);
        assert!(soft_equal(&back, &lifted).unwrap());
    }

    #[test]
    fn mismatched_spaces_rejected() {
        let f = null_soft_set(&abc_space());
        let g = null_soft_set(&SoftSpace::new(["a", "b"], ["e1", "e2", "e3"]).unwrap());
        assert_eq!(
            is_soft_subset(&f, &g).unwrap_err(),
            SoftSetError::SpaceMismatch
        );
        assert_eq!(soft_union(&f, &g).unwrap_err(), SoftSetError::SpaceMismatch);
        // structurally identical spaces built separately are comparable
        let h = null_soft_set(&abc_space());
        assert!(soft_equal(&f, &h).unwrap());
    }
}
