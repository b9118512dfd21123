//! Exact values for measure results: rationals, sums of square roots of
//! rationals, and reciprocals of such sums.
//!
//! Square roots are kept in canonical form `c·√t` with `t` a square-free
//! integer greater than one, so structural equality is value equality for
//! the forms produced by the measures.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = Rational64;

/// `rational + Σ coeff·√radicand`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: Rational,
    terms: BTreeMap<u64, Rational>,
}

/// Splits `n` into `(s, t)` with `n = s²·t` and `t` square-free.
fn split_square(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut t = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        let mut k = 0;
        while n.is_multiple_of(d) {
            n /= d;
            k += 1;
        }
        s *= d.pow(k / 2);
        if k % 2 == 1 {
            t *= d;
        }
        d += 1;
    }
    (s, t * n)
}

impl Surd {
    pub fn zero() -> Self {
        Surd::from_rational(Rational::zero())
    }

    pub fn from_rational(q: Rational) -> Self {
        Surd {
            rational: q,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Surd::from_rational(Rational::from_integer(k))
    }

    /// `√q` for a non-negative rational.
    pub fn sqrt(q: Rational) -> Self {
        assert!(!q.is_negative(), "square root of a negative rational");
        if q.is_zero() {
            return Surd::zero();
        }
        // √(a/b) = √(ab) / b
        let a = *q.numer() as u64;
        let b = *q.denom() as u64;
        let (s, t) = split_square(a * b);
        let coeff = Rational::new(s as i64, b as i64);
        let mut out = Surd::zero();
        out.add_term(t, coeff);
        out
    }

    fn add_term(&mut self, radicand: u64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        if radicand == 1 {
            self.rational += coeff;
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn rational_part(&self) -> Rational {
        self.rational
    }

    /// `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, Rational)> + '_ {
        self.terms.iter().map(|(&t, &c)| (t, c))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.terms.is_empty().then_some(self.rational)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.rational.is_zero()
    }

    /// The square as a rational, when `self` is a plain rational or a
    /// single `c·√t` term.
    pub fn square_if_rational(&self) -> Option<Rational> {
        match (self.rational.is_zero(), self.terms.len()) {
            (_, 0) => Some(self.rational * self.rational),
            (true, 1) => {
                let (&t, &c) = self.terms.iter().next()?;
                Some(c * c * Rational::from_integer(t as i64))
            }
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut v = ratio_to_f64(self.rational);
        for (&t, &c) in &self.terms {
            v += ratio_to_f64(c) * (t as f64).sqrt();
        }
        v
    }
}

pub(crate) fn ratio_to_f64(q: Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

impl std::ops::Add for Surd {
    type Output = Surd;

    fn add(mut self, rhs: Surd) -> Surd {
        self.rational += rhs.rational;
        for (t, c) in rhs.terms {
            self.add_term(t, c);
        }
        self
    }
}

impl From<Rational> for Surd {
    fn from(q: Rational) -> Self {
        Surd::from_rational(q)
    }
}

fn fmt_rational(q: Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_term(radicand: u64, coeff: Rational) -> String {
    let root = format!("sqrt({radicand})");
    let numer = coeff.numer().abs();
    let denom = *coeff.denom();
    let head = if numer.is_one() {
        root
    } else {
        format!("{numer}*{root}")
    };
    if denom.is_one() {
        head
    } else {
        format!("{head}/{denom}")
    }
}

impl fmt::Display for Surd {
    /// Renders as `a+sqrt(r)`, e.g. `1+sqrt(3)`, `sqrt(3)/3`, `5/4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        if !self.rational.is_zero() || self.terms.is_empty() {
            out.push_str(&fmt_rational(self.rational));
        }
        for (&t, &c) in &self.terms {
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&fmt_term(t, c));
        }
        f.write_str(&out)
    }
}

/// An exactly known measure value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactValue {
    /// A rational or a sum of radicals.
    Surd(Surd),
    /// `1 / surd` where the surd is irrational.
    Reciprocal(Surd),
}

impl ExactValue {
    pub fn rational(q: Rational) -> Self {
        ExactValue::Surd(Surd::from_rational(q))
    }

    pub fn integer(k: i64) -> Self {
        ExactValue::rational(Rational::from_integer(k))
    }

    /// `1 / s`; collapses to a rational when `s` is rational and non-zero.
    pub fn reciprocal_of(s: Surd) -> Self {
        match s.as_rational() {
            Some(q) if !q.is_zero() => ExactValue::rational(q.recip()),
            _ => ExactValue::Reciprocal(s),
        }
    }

    /// `1 / (1 + s)`, the form taken by distance-to-similarity maps.
    pub fn one_over_one_plus(s: &Surd) -> Self {
        ExactValue::reciprocal_of(Surd::from_integer(1) + s.clone())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            ExactValue::Surd(s) => s.as_rational(),
            ExactValue::Reciprocal(_) => None,
        }
    }

    pub fn as_surd(&self) -> Option<&Surd> {
        match self {
            ExactValue::Surd(s) => Some(s),
            ExactValue::Reciprocal(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Surd(s) => s.to_f64(),
            ExactValue::Reciprocal(s) => 1.0 / s.to_f64(),
        }
    }
}

impl From<Surd> for ExactValue {
    fn from(s: Surd) -> Self {
        ExactValue::Surd(s)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Surd(s) => write!(f, "{s}"),
            ExactValue::Reciprocal(s) => write!(f, "1/({s})"),
        }
    }
}

/// Rounds a non-negative value to six decimal places, ties to even.
pub fn decimal6(value: f64) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    let scaled = (value.abs() * 1e6).round_ties_even() as u64;
    let sign = if value < 0.0 && scaled != 0 { "-" } else { "" };
    format!("{sign}{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

/// [`decimal6`] with trailing zeros (and a bare trailing point) removed.
pub fn decimal6_trimmed(value: f64) -> String {
    let s = decimal6(value);
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_owned()
}

/// Rational `a / b`; panics on a zero denominator.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}
