//! Seeded generators of small soft spaces and soft sets.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::softset::{SoftSet, SoftSpace, ValueSet};

/// Deterministic soft-set generator.
#[derive(Debug, Clone)]
pub struct SoftSetSampler {
    rng: ChaCha8Rng,
    max_elements: usize,
    max_attributes: usize,
}

impl SoftSetSampler {
    /// Spaces with up to four elements and four attributes.
    pub fn new(seed: u64) -> Self {
        SoftSetSampler::with_bounds(seed, 4, 4)
    }

    pub fn with_bounds(seed: u64, max_elements: usize, max_attributes: usize) -> Self {
        assert!(max_elements >= 1 && max_attributes >= 1);
        SoftSetSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_elements,
            max_attributes,
        }
    }

    pub fn space(&mut self) -> Arc<SoftSpace> {
        let n = self.rng.gen_range(1..=self.max_elements);
        let m = self.rng.gen_range(1..=self.max_attributes);
        space_of(n, m)
    }

    fn value_set(&mut self, n: usize) -> ValueSet {
        (0..n).filter(|_| self.rng.gen_bool(0.5)).collect()
    }

    /// A random soft set; with `nonempty_domain` at least one attribute is kept.
    pub fn soft_set(&mut self, space: &Arc<SoftSpace>, nonempty_domain: bool) -> SoftSet {
        let (m, n) = (space.attribute_count(), space.element_count());
        let mut domain: Vec<usize> = (0..m).filter(|_| self.rng.gen_bool(0.5)).collect();
        if domain.is_empty() && nonempty_domain {
            domain.push(self.rng.gen_range(0..m));
        }
        let entries: Vec<(usize, ValueSet)> =
            domain.into_iter().map(|a| (a, self.value_set(n))).collect();
        SoftSet::from_indices(space, entries).expect("indices drawn from the space")
    }

    /// A soft set related to `f`: an identical copy, a one-step mutation, or
    /// an independent draw.
    pub fn neighbour(&mut self, f: &SoftSet, nonempty_domain: bool) -> SoftSet {
        match self.rng.gen_range(0..10) {
            0..=1 => f.clone(),
            2..=4 => self.mutate(f, nonempty_domain),
            _ => self.soft_set(f.space(), nonempty_domain),
        }
    }

    fn mutate(&mut self, f: &SoftSet, nonempty_domain: bool) -> SoftSet {
        let space = f.space();
        let (m, n) = (space.attribute_count(), space.element_count());
        let mut entries: Vec<(usize, ValueSet)> =
            f.entries().map(|(a, v)| (a, v.clone())).collect();
        let attr = self.rng.gen_range(0..m);
        let pos = entries.iter().position(|(a, _)| *a == attr);
        match (pos, self.rng.gen_bool(0.5)) {
            (Some(i), true) => {
                let x = self.rng.gen_range(0..n);
                let set = &mut entries[i].1;
                if !set.remove(&x) {
                    set.insert(x);
                }
            }
            (Some(i), false) => {
                if entries.len() > 1 || !nonempty_domain {
                    entries.remove(i);
                }
            }
            (None, _) => entries.push((attr, self.value_set(n))),
        }
        SoftSet::from_indices(space, entries).expect("indices drawn from the space")
    }

    /// A soft subset of `h` obtained by dropping attributes and elements.
    pub fn shrink(&mut self, h: &SoftSet, nonempty_domain: bool) -> SoftSet {
        let mut entries: Vec<(usize, ValueSet)> = Vec::new();
        for (a, v) in h.entries() {
            if self.rng.gen_bool(0.7) {
                let kept = v
                    .iter()
                    .copied()
                    .filter(|_| self.rng.gen_bool(0.7))
                    .collect();
                entries.push((a, kept));
            }
        }
        if entries.is_empty() && nonempty_domain && h.domain_len() > 0 {
            let keep: Vec<usize> = h.domain().into_iter().collect();
            let a = *keep.choose(&mut self.rng).expect("non-empty domain");
            entries.push((a, ValueSet::new()));
        }
        SoftSet::from_indices(h.space(), entries).expect("indices drawn from the space")
    }

    /// `(F, G, H)` with `F ⊆̃ G ⊆̃ H` by construction.
    pub fn chain(&mut self, nonempty_domain: bool) -> [SoftSet; 3] {
        let space = self.space();
        let h = self.soft_set(&space, nonempty_domain);
        let g = self.shrink(&h, nonempty_domain);
        let f = self.shrink(&g, nonempty_domain);
        [f, g, h]
    }
}

/// Space with elements `x1..xn` and attributes `e1..em`.
pub fn space_of(n: usize, m: usize) -> Arc<SoftSpace> {
    SoftSpace::new(
        (1..=n).map(|i| format!("x{i}")),
        (1..=m).map(|i| format!("e{i}")),
    )
    .expect("generated identifiers are distinct")
}

/// Every soft set over `space`, optionally excluding the empty domain.
/// There are `(2^n + 1)^m` of them, so keep spaces tiny.
pub fn all_soft_sets(space: &Arc<SoftSpace>, nonempty_domain: bool) -> Vec<SoftSet> {
    let (m, n) = (space.attribute_count(), space.element_count());
    // per attribute: 0 = absent, k+1 = value set with bitmask k
    let choices = (1usize << n) + 1;
    let total = choices.pow(m as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut entries = Vec::new();
        for a in 0..m {
            let c = code % choices;
            code /= choices;
            if c > 0 {
                let mask = c - 1;
                entries.push((a, (0..n).filter(|x| mask >> x & 1 == 1).collect()));
            }
        }
        if nonempty_domain && entries.is_empty() {
            continue;
        }
        out.push(SoftSet::from_indices(space, entries).expect("indices within the space"));
    }
    out
}
