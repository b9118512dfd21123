//! Bundled worked-example soft sets, loaded from the files under `fixtures/`.

use std::sync::Arc;

use crate::diagnosis::Profile;
use crate::io::{parse_soft_set, parse_soft_set_in};
use crate::softset::{SoftSet, SoftSpace};

pub const HAMMING_F: &str = include_str!("../fixtures/triples/hamming_f.ss");
pub const HAMMING_G: &str = include_str!("../fixtures/triples/hamming_g.ss");
pub const HAMMING_H: &str = include_str!("../fixtures/triples/hamming_h.ss");
pub const CARDINALITY_F: &str = include_str!("../fixtures/triples/cardinality_f.ss");
pub const CARDINALITY_G: &str = include_str!("../fixtures/triples/cardinality_g.ss");
pub const CARDINALITY_H: &str = include_str!("../fixtures/triples/cardinality_h.ss");
pub const CARDINALITY_ZERO_A: &str = include_str!("../fixtures/triples/cardinality_zero_a.ss");
pub const CARDINALITY_ZERO_B: &str = include_str!("../fixtures/triples/cardinality_zero_b.ss");
pub const SUPERIORITY_F: &str = include_str!("../fixtures/triples/superiority_f.ss");
pub const SUPERIORITY_G: &str = include_str!("../fixtures/triples/superiority_g.ss");
pub const SUPERIORITY_H: &str = include_str!("../fixtures/triples/superiority_h.ss");
pub const FINANCIAL_ABC: &str = include_str!("../fixtures/financial/abc.ss");
pub const FINANCIAL_XYZ: &str = include_str!("../fixtures/financial/xyz.ss");
pub const FINANCIAL_MODEL: &str = include_str!("../fixtures/financial/model.ss");

fn load<const N: usize>(texts: [&str; N]) -> [SoftSet; N] {
    let first = parse_soft_set(texts[0])
        .expect("bundled fixture parses")
        .softset;
    let space: Arc<SoftSpace> = Arc::clone(first.space());
    texts.map(|t| {
        parse_soft_set_in(t, &space)
            .expect("bundled fixture parses")
            .softset
    })
}

/// Triple on which `d` and `l` break the triangle inequality.
pub fn hamming_triple() -> [SoftSet; 3] {
    load([HAMMING_F, HAMMING_G, HAMMING_H])
}

/// Triple on which `c` and `p` break the triangle inequality.
pub fn cardinality_triple() -> [SoftSet; 3] {
    load([CARDINALITY_F, CARDINALITY_G, CARDINALITY_H])
}

/// Two different soft sets at `c = p = 0`.
pub fn cardinality_zero_pair() -> [SoftSet; 2] {
    load([CARDINALITY_ZERO_A, CARDINALITY_ZERO_B])
}

/// `(F,A)`, `(G,B)`, `(H,C)` where matrix similarity misjudges `(F,A)` vs `(H,C)`.
pub fn superiority_triple() -> [SoftSet; 3] {
    load([SUPERIORITY_F, SUPERIORITY_G, SUPERIORITY_H])
}

/// Firm profiles ABC and XYZ, then the liquidity-problem model.
pub fn financial() -> [Profile; 3] {
    let texts = [FINANCIAL_ABC, FINANCIAL_XYZ, FINANCIAL_MODEL];
    let sets = load(texts);
    let mut out = sets.into_iter().zip(texts).map(|(softset, text)| {
        let name = parse_soft_set(text)
            .ok()
            .and_then(|n| n.name)
            .unwrap_or_default();
        Profile::new(name, softset)
    });
    [
        out.next().unwrap(),
        out.next().unwrap(),
        out.next().unwrap(),
    ]
}
