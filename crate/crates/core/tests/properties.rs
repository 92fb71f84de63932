//! Randomized invariants over permutations, grids and series.

use proptest::prelude::*;

use permcores::grids::{BoundaryGrid, StaircaseEncoding};
use permcores::perm::Permutation;
use permcores::series::BiSeries;

fn arb_permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|values| Permutation::new(values).unwrap())
}

fn series_from(coeffs: &[i64], nx: usize, ny: usize) -> BiSeries {
    let mut s = BiSeries::zero(nx, ny);
    for (idx, &c) in coeffs.iter().enumerate() {
        let (i, j) = (idx / (ny + 1), idx % (ny + 1));
        if i <= nx {
            s = s.add(&BiSeries::monomial(nx, ny, i, j, c));
        }
    }
    s
}

proptest! {
    #[test]
    fn standardise_is_idempotent(q in arb_permutation(10)) {
        let word: Vec<i64> = q.values().iter().map(|&v| v as i64).collect();
        prop_assert_eq!(Permutation::standardise(&word).unwrap(), q);
    }

    #[test]
    fn containment_monotone_under_deletion(q in arb_permutation(9), skip in 0usize..9) {
        prop_assume!(!q.is_empty());
        let skip = skip % q.len();
        let word: Vec<i64> = q
            .values()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &v)| v as i64)
            .collect();
        let sub = Permutation::standardise(&word).unwrap();
        for pat in ["132", "213", "2143", "1324"] {
            let pat: Permutation = pat.parse().unwrap();
            if sub.contains(&pat) {
                prop_assert!(q.contains(&pat));
            }
        }
    }

    #[test]
    fn boundary_avoids_123(q in arb_permutation(10)) {
        let pat: Permutation = "123".parse().unwrap();
        prop_assert!(q.boundary().avoids(&pat));
    }

    #[test]
    fn skew_components_recompose(q in arb_permutation(10)) {
        let mut acc = Permutation::empty();
        for part in q.skew_components() {
            acc = acc.skew_sum(&part);
        }
        prop_assert_eq!(acc, q);
    }

    #[test]
    fn encoding_counts_non_minima(q in arb_permutation(10)) {
        let enc = StaircaseEncoding::of(&q);
        prop_assert_eq!(enc.total_points(), q.len() - q.lr_minima().len());
    }

    #[test]
    fn reflect_is_an_involution(q in arb_permutation(8)) {
        let pat: Permutation = "123".parse().unwrap();
        prop_assume!(q.avoids(&pat));
        let grid = BoundaryGrid::boundary_grid(&q).unwrap();
        let twice = grid.reflect().reflect();
        prop_assert_eq!(twice.box_set(), grid.box_set());
        prop_assert_eq!(grid.reflect().len(), grid.len());
    }

    #[test]
    fn series_ring_laws(ax in prop::collection::vec(-4i64..=4, 9), bx in prop::collection::vec(-4i64..=4, 9)) {
        let a = series_from(&ax, 2, 2);
        let b = series_from(&bx, 2, 2);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&b.add(&a)), a.mul(&b).add(&a.mul(&a)));
    }

    #[test]
    fn series_inverse_roundtrip(cs in prop::collection::vec(-3i64..=3, 7), unit in 1i64..=3) {
        let mut s = BiSeries::monomial(7, 0, 0, 0, unit);
        for (i, &c) in cs.iter().enumerate() {
            s = s.add(&BiSeries::monomial(7, 0, i + 1, 0, c));
        }
        let inv = s.inverse().unwrap();
        let product = s.mul(&inv);
        prop_assert_eq!(product, BiSeries::one(7, 0));
    }
}
