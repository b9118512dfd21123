//! Measure identifiers and uniform evaluation.

use std::fmt;
use std::str::FromStr;

use crate::distance;
use crate::error::{Result, SoftSetError};
use crate::matrix_measures;
use crate::similarity;
use crate::softset::SoftSet;
use crate::value::MeasureValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    Distance,
    Similarity,
}

impl MeasureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MeasureKind::Distance => "distance",
            MeasureKind::Similarity => "similarity",
        }
    }
}

macro_rules! measures {
    ($($variant:ident => $id:literal, $kind:ident;)*) => {
        /// Every distance and similarity measure, by CLI identifier.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum MeasureId {
            $($variant,)*
        }

        impl MeasureId {
            pub const ALL: &'static [MeasureId] = &[$(MeasureId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(MeasureId::$variant => $id,)*
                }
            }

            pub fn kind(self) -> MeasureKind {
                match self {
                    $(MeasureId::$variant => MeasureKind::$kind,)*
                }
            }
        }

        impl FromStr for MeasureId {
            type Err = SoftSetError;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($id => Ok(MeasureId::$variant),)*
                    other => Err(SoftSetError::UnknownMeasure(other.to_owned())),
                }
            }
        }
    };
}

measures! {
    MsMatching => "ms-matching", Similarity;
    Ds => "Ds", Distance;
    Ls => "Ls", Distance;
    Es => "Es", Distance;
    Qs => "Qs", Distance;
    MsPrime => "ms-prime", Similarity;
    D => "d", Distance;
    L => "l", Distance;
    C => "c", Distance;
    P => "p", Distance;
    E => "e", Distance;
    Q => "q", Distance;
    ELiteral => "e-literal", Distance;
    QLiteral => "q-literal", Distance;
    M => "M", Similarity;
    MNorm => "M-norm", Similarity;
    KoczyE => "koczy-e", Similarity;
    KoczyQ => "koczy-q", Similarity;
    WilliamsE => "williams-e", Similarity;
    WilliamsQ => "williams-q", Similarity;
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl MeasureId {
    pub fn distances() -> impl Iterator<Item = MeasureId> {
        MeasureId::ALL
            .iter()
            .copied()
            .filter(|m| m.kind() == MeasureKind::Distance)
    }

    pub fn similarities() -> impl Iterator<Item = MeasureId> {
        MeasureId::ALL
            .iter()
            .copied()
            .filter(|m| m.kind() == MeasureKind::Similarity)
    }

    /// Errors unless this measure is of `kind`.
    pub fn expect_kind(self, kind: MeasureKind) -> Result<Self> {
        if self.kind() == kind {
            Ok(self)
        } else {
            Err(SoftSetError::WrongMeasureKind {
                measure: self.as_str().to_owned(),
                expected: kind.as_str(),
                actual: self.kind().as_str(),
            })
        }
    }

    /// True when samplers should draw non-empty attribute domains: the
    /// measure either rejects void domains or is undefined on them.
    pub fn needs_nonempty_domains(self) -> bool {
        matches!(
            self,
            MeasureId::M
                | MeasureId::MNorm
                | MeasureId::D
                | MeasureId::L
                | MeasureId::E
                | MeasureId::Q
                | MeasureId::ELiteral
                | MeasureId::QLiteral
                | MeasureId::KoczyE
                | MeasureId::KoczyQ
                | MeasureId::WilliamsE
                | MeasureId::WilliamsQ
        )
    }

    /// Evaluates the measure. `steepness` is used only by the Williams–Steele
    /// similarities and must be positive.
    pub fn evaluate(self, f: &SoftSet, g: &SoftSet, steepness: f64) -> Result<MeasureValue> {
        match self {
            MeasureId::MsMatching => matrix_measures::ms_matching_similarity(f, g),
            MeasureId::Ds => matrix_measures::ms_hamming(f, g),
            MeasureId::Ls => matrix_measures::ms_hamming_norm(f, g),
            MeasureId::Es => matrix_measures::ms_euclid(f, g),
            MeasureId::Qs => matrix_measures::ms_euclid_norm(f, g),
            MeasureId::MsPrime => matrix_measures::ms_similarity_prime(f, g),
            MeasureId::D => distance::hamming_quasi(f, g),
            MeasureId::L => distance::hamming_quasi_norm(f, g),
            MeasureId::C => distance::cardinality_semi(f, g),
            MeasureId::P => distance::cardinality_semi_norm(f, g),
            MeasureId::E => distance::euclid(f, g),
            MeasureId::Q => distance::euclid_norm(f, g),
            MeasureId::ELiteral => distance::euclid_literal(f, g),
            MeasureId::QLiteral => distance::euclid_norm_literal(f, g),
            MeasureId::M => similarity::matching_similarity_m(f, g).map(|m| m.raw),
            MeasureId::MNorm => similarity::matching_similarity_m(f, g).map(|m| m.normalized),
            MeasureId::KoczyE => similarity::koczy_e(f, g),
            MeasureId::KoczyQ => similarity::koczy_q(f, g),
            MeasureId::WilliamsE => similarity::williams_e(f, g, steepness),
            MeasureId::WilliamsQ => similarity::williams_q(f, g, steepness),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifiers_round_trip() {
        for &m in MeasureId::ALL {
            assert_eq!(m.as_str().parse::<MeasureId>().unwrap(), m);
        }
        assert_eq!(MeasureId::ALL.len(), 20);
        assert_eq!(
            "cosine".parse::<MeasureId>().unwrap_err(),
            SoftSetError::UnknownMeasure("cosine".into())
        );
    }

    #[test]
    fn kinds() {
        assert_eq!(MeasureId::distances().count(), 12);
        assert!(MeasureId::KoczyE
            .expect_kind(MeasureKind::Distance)
            .is_err());
        assert!(MeasureId::D.expect_kind(MeasureKind::Distance).is_ok());
    }
}
