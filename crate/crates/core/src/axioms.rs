//! Sample-based checking of the metric axioms M1–M5 and the similarity
//! axioms s1–s4.
//!
//! Verdicts are "held on sample" or "violated"; a violated verdict carries
//! the first soft sets found to break the axiom. The worked counterexample
//! triples are always checked before the random draws, so when they break
//! an axiom they are the stored witness.

use std::fmt;

use crate::error::{Result, SoftSetError};
use crate::exact::Rational;
use crate::fixtures;
use crate::io::to_json;
use crate::measure::{MeasureId, MeasureKind};
use crate::sampler::{all_soft_sets, space_of, SoftSetSampler};
use crate::similarity::validate_steepness;
use crate::softset::{soft_equal, SoftSet};
use crate::value::MeasureValue;

/// Slack for comparisons that involve irrational values.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    M1,
    M2,
    M3,
    M4,
    M5,
    S1,
    S2,
    S3,
    S4,
}

impl Axiom {
    pub const METRIC: [Axiom; 5] = [Axiom::M1, Axiom::M2, Axiom::M3, Axiom::M4, Axiom::M5];
    pub const SIMILARITY: [Axiom; 4] = [Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::M1 => "M1",
            Axiom::M2 => "M2",
            Axiom::M3 => "M3",
            Axiom::M4 => "M4",
            Axiom::M5 => "M5",
            Axiom::S1 => "s1",
            Axiom::S2 => "s2",
            Axiom::S3 => "s3",
            Axiom::S4 => "s4",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Axiom::M1 => "non-negativity",
            Axiom::M2 => "symmetry",
            Axiom::M3 => "triangle inequality",
            Axiom::M4 => "equal sets at distance zero",
            Axiom::M5 => "distance zero only for equal sets",
            Axiom::S1 => "value within [0, 1]",
            Axiom::S2 => "equal sets have similarity one",
            Axiom::S3 => "symmetry",
            Axiom::S4 => "monotone along soft-subset chains",
        }
    }
}

/// Soft sets witnessing a violation, in the order the axiom reads them.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Single(SoftSet),
    Pair(SoftSet, SoftSet),
    Triple(SoftSet, SoftSet, SoftSet),
}

impl Witness {
    pub fn soft_sets(&self) -> Vec<&SoftSet> {
        match self {
            Witness::Single(f) => vec![f],
            Witness::Pair(f, g) => vec![f, g],
            Witness::Triple(f, g, h) => vec![f, g, h],
        }
    }

    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.soft_sets().into_iter().map(to_json).collect();
        format!("[{}]", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    /// Instances evaluated.
    pub checked: usize,
    /// Instances that broke the axiom.
    pub violations: usize,
    /// First violating instance.
    pub witness: Option<Witness>,
}

impl AxiomVerdict {
    fn new(axiom: Axiom) -> Self {
        AxiomVerdict {
            axiom,
            checked: 0,
            violations: 0,
            witness: None,
        }
    }

    pub fn held(&self) -> bool {
        self.violations == 0
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub measure: MeasureId,
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: Axiom) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn held(&self, axiom: Axiom) -> bool {
        self.verdict(axiom).is_some_and(AxiomVerdict::held)
    }

    pub fn violated(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| !v.held())
    }

    /// Folds `other` (same measure) into this report.
    pub fn merge(&mut self, other: AxiomReport) {
        for theirs in other.verdicts {
            match self.verdicts.iter_mut().find(|v| v.axiom == theirs.axiom) {
                Some(ours) => {
                    ours.checked += theirs.checked;
                    ours.violations += theirs.violations;
                    if ours.witness.is_none() {
                        ours.witness = theirs.witness;
                    }
                }
                None => self.verdicts.push(theirs),
            }
        }
    }
}

impl fmt::Display for AxiomReport {
    /// One line per axiom; witnesses follow the verdict as soft-set documents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            write!(f, "{} {}: ", v.axiom.label(), v.axiom.description())?;
            if v.held() {
                writeln!(f, "held-on-sample (checked {})", v.checked)?;
            } else {
                write!(f, "violated ({} of {})", v.violations, v.checked)?;
                match &v.witness {
                    Some(w) => writeln!(f, " witness {}", w.to_json())?,
                    None => writeln!(f)?,
                }
            }
        }
        Ok(())
    }
}

/// Compares measure values, exactly when both are rational.
fn cmp_values(a: &MeasureValue, b: &MeasureValue) -> Option<std::cmp::Ordering> {
    let (x, y) = (
        a.exact_value()?.as_rational(),
        b.exact_value()?.as_rational(),
    );
    match (x, y) {
        (Some(x), Some(y)) => Some(x.cmp(&y)),
        _ => None,
    }
}

fn rational(v: &MeasureValue) -> Option<Rational> {
    v.exact_value()?.as_rational()
}

fn approx_eq(a: &MeasureValue, b: &MeasureValue) -> bool {
    match cmp_values(a, b) {
        Some(ord) => ord.is_eq(),
        None => match (a.value(), b.value()) {
            (Some(x), Some(y)) => (x - y).abs() <= TOLERANCE,
            _ => false,
        },
    }
}

/// `a ≤ b`, with tolerance for irrational values.
fn approx_le(a: &MeasureValue, b: &MeasureValue) -> bool {
    match cmp_values(a, b) {
        Some(ord) => ord.is_le(),
        None => match (a.value(), b.value()) {
            (Some(x), Some(y)) => x <= y + TOLERANCE,
            _ => false,
        },
    }
}

fn is_zero(v: &MeasureValue) -> bool {
    match rational(v) {
        Some(q) => q == Rational::from_integer(0),
        None => v.value().is_some_and(|x| x.abs() <= TOLERANCE),
    }
}

/// `ab + bc ≥ ac`.
fn triangle_holds(ab: &MeasureValue, bc: &MeasureValue, ac: &MeasureValue) -> bool {
    if let (Some(x), Some(y), Some(z)) = (rational(ab), rational(bc), rational(ac)) {
        return x + y >= z;
    }
    match (ab.value(), bc.value(), ac.value()) {
        (Some(x), Some(y), Some(z)) => x + y + TOLERANCE >= z,
        _ => false,
    }
}

struct MetricChecker {
    measure: MeasureId,
    verdicts: [AxiomVerdict; 5],
}

impl MetricChecker {
    fn new(measure: MeasureId) -> Self {
        MetricChecker {
            measure,
            verdicts: Axiom::METRIC.map(AxiomVerdict::new),
        }
    }

    fn eval(&self, f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
        self.measure.evaluate(f, g, 1.0)
    }

    fn pair(&mut self, f: &SoftSet, g: &SoftSet) -> Result<()> {
        let fg = self.eval(f, g)?;
        let gf = self.eval(g, f)?;
        let pair = || Witness::Pair(f.clone(), g.clone());
        let non_negative = fg.value().is_some_and(|x| x >= 0.0);
        self.verdicts[0].record(non_negative, pair);
        self.verdicts[1].record(approx_eq(&fg, &gf), pair);
        if is_zero(&fg) {
            self.verdicts[4].record(soft_equal(f, g)?, pair);
        } else {
            self.verdicts[4].checked += 1;
        }
        Ok(())
    }

    fn identity(&mut self, f: &SoftSet) -> Result<()> {
        let ff = self.eval(f, &f.clone())?;
        self.verdicts[3].record(is_zero(&ff), || Witness::Pair(f.clone(), f.clone()));
        Ok(())
    }

    fn triple(&mut self, f: &SoftSet, g: &SoftSet, h: &SoftSet) -> Result<()> {
        let fg = self.eval(f, g)?;
        let gh = self.eval(g, h)?;
        let fh = self.eval(f, h)?;
        self.triangle(f, g, h, &fg, &gh, &fh);
        Ok(())
    }

    fn triangle(
        &mut self,
        f: &SoftSet,
        g: &SoftSet,
        h: &SoftSet,
        fg: &MeasureValue,
        gh: &MeasureValue,
        fh: &MeasureValue,
    ) {
        self.verdicts[2].record(triangle_holds(fg, gh, fh), || {
            Witness::Triple(f.clone(), g.clone(), h.clone())
        });
    }

    fn report(self) -> AxiomReport {
        AxiomReport {
            measure: self.measure,
            verdicts: self.verdicts.into(),
        }
    }
}

/// Checks M1–M5 for a distance on the worked counterexamples plus `trials`
/// seeded random draws (one pair per trial, one triple in three orders).
pub fn classify_measure(measure: MeasureId, seed: u64, trials: usize) -> Result<AxiomReport> {
    classify_with_sampler(measure, &mut SoftSetSampler::new(seed), trials)
}

pub fn classify_with_sampler(
    measure: MeasureId,
    sampler: &mut SoftSetSampler,
    trials: usize,
) -> Result<AxiomReport> {
    measure.expect_kind(MeasureKind::Distance)?;
    if trials == 0 {
        return Err(SoftSetError::NoTrials);
    }
    let mut checker = MetricChecker::new(measure);

    for [f, g, h] in [fixtures::hamming_triple(), fixtures::cardinality_triple()] {
        checker.triple(&f, &g, &h)?;
        for (x, y) in [(&f, &g), (&g, &h), (&f, &h)] {
            checker.pair(x, y)?;
        }
        for x in [&f, &g, &h] {
            checker.identity(x)?;
        }
    }
    let [a, b] = fixtures::cardinality_zero_pair();
    checker.pair(&a, &b)?;

    let nonempty = measure.needs_nonempty_domains();
    for _ in 0..trials {
        let space = sampler.space();
        let f = sampler.soft_set(&space, nonempty);
        let g = sampler.neighbour(&f, nonempty);
        let h = sampler.neighbour(&g, nonempty);
        checker.identity(&f)?;
        checker.pair(&f, &g)?;
        checker.triple(&f, &g, &h)?;
        checker.triple(&g, &h, &f)?;
        checker.triple(&h, &f, &g)?;
    }
    Ok(checker.report())
}

/// Checks M1–M5 over every pair and every ordered triple of soft sets on a
/// space with `n` elements and `m` attributes.
pub fn classify_exhaustive(measure: MeasureId, n: usize, m: usize) -> Result<AxiomReport> {
    measure.expect_kind(MeasureKind::Distance)?;
    let space = space_of(n, m);
    let sets = all_soft_sets(&space, measure.needs_nonempty_domains());
    let k = sets.len();
    let mut table = Vec::with_capacity(k * k);
    for f in &sets {
        for g in &sets {
            table.push(measure.evaluate(f, g, 1.0)?);
        }
    }
    let at = |i: usize, j: usize| &table[i * k + j];
    let mut checker = MetricChecker::new(measure);
    for i in 0..k {
        checker.identity(&sets[i])?;
        for j in 0..k {
            checker.pair(&sets[i], &sets[j])?;
            for l in 0..k {
                checker.triangle(&sets[i], &sets[j], &sets[l], at(i, j), at(j, l), at(i, l));
            }
        }
    }
    Ok(checker.report())
}

struct SimilarityChecker {
    measure: MeasureId,
    steepness: f64,
    verdicts: [AxiomVerdict; 4],
}

fn in_unit_range(v: &MeasureValue) -> bool {
    v.value()
        .is_some_and(|x| (-TOLERANCE..=1.0 + TOLERANCE).contains(&x))
}

impl SimilarityChecker {
    fn eval(&self, f: &SoftSet, g: &SoftSet) -> Result<MeasureValue> {
        self.measure.evaluate(f, g, self.steepness)
    }

    fn pair(&mut self, f: &SoftSet, g: &SoftSet) -> Result<()> {
        let fg = self.eval(f, g)?;
        let gf = self.eval(g, f)?;
        let pair = || Witness::Pair(f.clone(), g.clone());
        self.verdicts[0].record(in_unit_range(&fg), pair);
        self.verdicts[2].record(approx_eq(&fg, &gf), pair);
        Ok(())
    }

    fn identity(&mut self, f: &SoftSet) -> Result<()> {
        let copy = f.clone();
        let ff = self.eval(f, &copy)?;
        let one = match rational(&ff) {
            Some(q) => q == Rational::from_integer(1),
            None => ff.value().is_some_and(|x| (x - 1.0).abs() <= TOLERANCE),
        };
        self.verdicts[0].record(in_unit_range(&ff), || {
            Witness::Pair(f.clone(), copy.clone())
        });
        self.verdicts[1].record(one, || Witness::Single(f.clone()));
        Ok(())
    }

    fn chain(&mut self, f: &SoftSet, g: &SoftSet, h: &SoftSet) -> Result<()> {
        let fh = self.eval(f, h)?;
        let fg = self.eval(f, g)?;
        let gh = self.eval(g, h)?;
        let ok = approx_le(&fh, &fg) && approx_le(&fh, &gh);
        self.verdicts[3].record(ok, || Witness::Triple(f.clone(), g.clone(), h.clone()));
        Ok(())
    }
}

/// Checks s1–s4 for a similarity measure over `trials` seeded draws. Each
/// trial evaluates one identity, one random pair, and one nested chain
/// `F ⊆̃ G ⊆̃ H`. An undefined value counts as a violation of whichever axiom
/// needed it.
pub fn check_similarity_axioms(
    measure: MeasureId,
    seed: u64,
    trials: usize,
    steepness: f64,
) -> Result<AxiomReport> {
    measure.expect_kind(MeasureKind::Similarity)?;
    validate_steepness(steepness)?;
    if trials == 0 {
        return Err(SoftSetError::NoTrials);
    }
    let mut checker = SimilarityChecker {
        measure,
        steepness,
        verdicts: Axiom::SIMILARITY.map(AxiomVerdict::new),
    };
    let mut sampler = SoftSetSampler::new(seed);
    let nonempty = measure.needs_nonempty_domains();
    for _ in 0..trials {
        let space = sampler.space();
        let f = sampler.soft_set(&space, nonempty);
        let g = sampler.neighbour(&f, nonempty);
        checker.identity(&f)?;
        checker.pair(&f, &g)?;
        let [a, b, c] = sampler.chain(nonempty);
        checker.chain(&a, &b, &c)?;
    }
    Ok(AxiomReport {
        measure,
        verdicts: checker.verdicts.into(),
    })
}

/// Re-evaluates a stored witness and reports whether it still breaks `axiom`.
pub fn witness_violates(
    measure: MeasureId,
    axiom: Axiom,
    witness: &Witness,
    steepness: f64,
) -> Result<bool> {
    let eval = |f: &SoftSet, g: &SoftSet| measure.evaluate(f, g, steepness);
    Ok(match (axiom, witness) {
        (Axiom::M1, Witness::Pair(f, g)) => !eval(f, g)?.value().is_some_and(|x| x >= 0.0),
        (Axiom::M2 | Axiom::S3, Witness::Pair(f, g)) => !approx_eq(&eval(f, g)?, &eval(g, f)?),
        (Axiom::M3, Witness::Triple(f, g, h)) => {
            !triangle_holds(&eval(f, g)?, &eval(g, h)?, &eval(f, h)?)
        }
        (Axiom::M4, Witness::Pair(f, g)) => soft_equal(f, g)? && !is_zero(&eval(f, g)?),
        (Axiom::M5, Witness::Pair(f, g)) => is_zero(&eval(f, g)?) && !soft_equal(f, g)?,
        (Axiom::S1, Witness::Pair(f, g)) => !in_unit_range(&eval(f, g)?),
        (Axiom::S2, Witness::Single(f)) => !eval(f, f)?
            .value()
            .is_some_and(|x| (x - 1.0).abs() <= TOLERANCE),
        (Axiom::S4, Witness::Triple(f, g, h)) => {
            let fh = eval(f, h)?;
            !(approx_le(&fh, &eval(f, g)?) && approx_le(&fh, &eval(g, h)?))
        }
        _ => false,
    })
}
