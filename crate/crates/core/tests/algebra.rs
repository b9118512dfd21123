use proptest::prelude::*;

use softsim::matrix::{from_matrix, to_matrix, totalize};
use softsim::sampler::{all_soft_sets, space_of, SoftSetSampler};
use softsim::softset::{
    complement_pair, is_soft_subset, null_soft_set, soft_complement, soft_equal,
    soft_intersection_restricted, soft_union, whole_soft_set,
};
use softsim::{ComplementConvention, SoftSet, SoftSetError, SoftSpace};

fn pairs(seed: u64) -> impl Iterator<Item = (SoftSet, SoftSet, SoftSet)> {
    let mut s = SoftSetSampler::new(seed);
    (0..600).map(move |_| {
        let space = s.space();
        let f = s.soft_set(&space, false);
        let g = s.neighbour(&f, false);
        let h = s.neighbour(&g, false);
        (f, g, h)
    })
}

#[test]
fn union_laws() {
    for (f, g, h) in pairs(1) {
        let fg = soft_union(&f, &g).unwrap();
        assert_eq!(fg, soft_union(&g, &f).unwrap());
        assert_eq!(soft_union(&f, &f).unwrap(), f);
        assert_eq!(
            soft_union(&fg, &h).unwrap(),
            soft_union(&f, &soft_union(&g, &h).unwrap()).unwrap()
        );
        assert!(is_soft_subset(&f, &fg).unwrap());
        assert!(is_soft_subset(&g, &fg).unwrap());
        assert_eq!(soft_union(&f, &SoftSet::empty(f.space())).unwrap(), f);
    }
}

#[test]
fn restricted_intersection_laws() {
    for (f, g, _) in pairs(2) {
        match soft_intersection_restricted(&f, &g) {
            Ok(i) => {
                assert_eq!(i, soft_intersection_restricted(&g, &f).unwrap());
                assert!(is_soft_subset(&i, &f).unwrap());
                assert!(is_soft_subset(&i, &g).unwrap());
            }
            Err(e) => {
                assert_eq!(e, SoftSetError::EmptyIntersection);
                assert!(f.domain().is_disjoint(&g.domain()));
            }
        }
    }
}

#[test]
fn subset_is_a_partial_order() {
    for (f, g, h) in pairs(3) {
        assert!(is_soft_subset(&f, &f).unwrap());
        if is_soft_subset(&f, &g).unwrap() && is_soft_subset(&g, &f).unwrap() {
            assert!(soft_equal(&f, &g).unwrap());
        }
        if is_soft_subset(&f, &g).unwrap() && is_soft_subset(&g, &h).unwrap() {
            assert!(is_soft_subset(&f, &h).unwrap());
        }
        assert!(is_soft_subset(&SoftSet::empty(f.space()), &f).unwrap());
    }
}

#[test]
fn complement_is_an_involution() {
    for (f, _, _) in pairs(4) {
        let same = ComplementConvention::SameAttributes;
        assert_eq!(soft_complement(&soft_complement(&f, same), same), f);

        let (lifted, c) = complement_pair(&f, ComplementConvention::NegatedAttributes);
        assert!(lifted.domain().is_disjoint(&c.domain()));
        assert_eq!(c.domain_len(), f.domain_len());
        let (c2, back) = complement_pair(&c, ComplementConvention::NegatedAttributes);
        assert_eq!(c2, c);
        assert!(soft_equal(&back, &lifted).unwrap());
    }
}

#[test]
fn extremes_bound_everything() {
    let space = space_of(2, 2);
    let (null, whole) = (null_soft_set(&space), whole_soft_set(&space));
    for f in all_soft_sets(&space, false) {
        assert!(is_soft_subset(&f, &whole).unwrap());
        assert_eq!(is_soft_subset(&null, &f).unwrap(), f.is_total());
    }
}

#[test]
fn space_mismatch_is_reported() {
    let a = SoftSet::empty(&space_of(2, 2));
    let b = SoftSet::empty(&space_of(2, 3));
    assert_eq!(soft_union(&a, &b).unwrap_err(), SoftSetError::SpaceMismatch);
    assert_eq!(
        is_soft_subset(&a, &b).unwrap_err(),
        SoftSetError::SpaceMismatch
    );
}

#[test]
fn matrix_round_trip_loses_partiality_exhaustively() {
    for n in 1..=3 {
        for m in 1..=3 {
            let space = space_of(n, m);
            for f in all_soft_sets(&space, false) {
                let back = from_matrix(&to_matrix(&f), &space).unwrap();
                assert!(back.is_total());
                assert_eq!(soft_equal(&back, &f).unwrap(), f.is_total());
                let t = totalize(&f);
                assert_eq!(from_matrix(&to_matrix(&t), &space).unwrap(), t);
            }
        }
    }
}

#[test]
fn matrix_layout_of_the_partial_example() {
    let space = SoftSpace::new(["a", "b", "c"], ["e1", "e2", "e3"]).unwrap();
    let f = SoftSet::from_names(&space, [("e1", vec!["a", "c"]), ("e3", vec!["b", "c"])]).unwrap();
    let mat = to_matrix(&f);
    assert_eq!(mat.rows(), &[vec![1, 0, 1], vec![0, 0, 0], vec![0, 1, 1]]);
    // the conventional display lists attributes as columns
    assert_eq!(
        mat.transpose(),
        vec![vec![1, 0, 0], vec![0, 0, 1], vec![1, 0, 1]]
    );
    assert_eq!(mat.to_string(), "e1 1 0 1\ne2 0 0 0\ne3 0 1 1\n");
    let g = totalize(&f);
    assert!(is_soft_subset(&f, &g).unwrap());
    assert!(!is_soft_subset(&g, &f).unwrap());
}

proptest! {
    #[test]
    fn sampler_is_seed_deterministic(seed in any::<u64>()) {
        let (mut a, mut b) = (SoftSetSampler::new(seed), SoftSetSampler::new(seed));
        for _ in 0..5 {
            prop_assert_eq!(a.chain(true), b.chain(true));
        }
    }

    #[test]
    fn union_with_whole_is_whole(seed in any::<u64>()) {
        let mut s = SoftSetSampler::new(seed);
        let space = s.space();
        let f = s.soft_set(&space, false);
        let whole = whole_soft_set(&space);
        prop_assert_eq!(soft_union(&f, &whole).unwrap(), whole);
    }
}
