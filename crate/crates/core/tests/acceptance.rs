//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use permcores::comb::{binomial, catalan, central_12_pascal};
use permcores::cores::{core_d, core_u, verify_subcore_isomorphism};
use permcores::grids::StaircaseEncoding;
use permcores::oracle::{
    check_disjoint_union, check_purity, check_vincular, UnionFamily,
};
use permcores::perm::{avoiders, count_avoiders, PatternBasis};
use permcores::polygon::{count_noncrossing, verify_star};
use permcores::series::{
    closed_form_i, four_pattern_closed_counts, four_pattern_counts, rational_to_count,
    smooth_closed_counts, smooth_counts, smooth_family, solve_f, type_b_counter,
    updown_closed_counts, updown_counts,
};
use permcores::tables::{
    ind_set_reference_rows, ind_set_triangle, ind_set_triangle_from_series,
    narayana_reference_rows, narayana_table, narayana_table_series, rightmost_entry_report,
    rows_to_biguint,
};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn criterion_01_clique_counts() {
    for n in 1..=8usize {
        let d = core_d(n).graph().clique_profile();
        let u = core_u(n).graph().clique_profile();
        for k in 1..=(d.len().max(u.len()) + 1) {
            let want = binomial(n as u64 + 1, 2 * k as u64);
            assert_eq!(d.get(k).cloned().unwrap_or_default(), want, "D_{n}, k={k}");
            assert_eq!(u.get(k).cloned().unwrap_or_default(), want, "U_{n}, k={k}");
        }
    }
    println!("criterion 01 (clique counts match C(n+1,2k) for n <= 8): PASS");
}

#[test]
fn criterion_02_independent_set_counts() {
    let f = solve_f(7, 16);
    for n in 1..=7usize {
        let d = core_d(n).independent_set_profile();
        let u = core_u(n).independent_set_profile();
        let nc = permcores::polygon::noncrossing_profile(n);
        let kmax = d.len().max(u.len()).max(nc.len()) + 1;
        for k in 0..kmax {
            let dk = d.get(k).cloned().unwrap_or_default();
            assert_eq!(u.get(k).cloned().unwrap_or_default(), dk, "U vs D at ({n},{k})");
            assert_eq!(nc.get(k).cloned().unwrap_or_default(), dk, "noncrossing at ({n},{k})");
            if k <= 16 {
                assert_eq!(closed_form_i(n, k), dk, "closed form at ({n},{k})");
                assert_eq!(rational_to_count(&f.get(n, k)), dk, "series at ({n},{k})");
            }
        }
    }
    println!("criterion 02 (independent-set counts agree across all five routes, n <= 7): PASS");
}

#[test]
fn criterion_03_polygon_bijection() {
    for n in 1..=8 {
        assert!(verify_star(n), "star property fails at n={n}");
    }
    println!("criterion 03 (core adjacency = edge crossing under phi, n <= 8): PASS");
}

#[test]
fn criterion_04_isomorphism_verdicts() {
    for n in 0..=3usize {
        assert!(core_d(n).graph().is_isomorphic(core_u(n).graph()).unwrap());
    }
    for n in 4..=7usize {
        assert!(!core_d(n).graph().is_isomorphic(core_u(n).graph()).unwrap());
    }
    for n in 1..=6usize {
        for bits in 1u32..(1 << n) {
            let s: BTreeSet<usize> = (1..=n).filter(|&i| bits >> (i - 1) & 1 == 1).collect();
            assert!(
                verify_subcore_isomorphism(n, &s).unwrap(),
                "subcore isomorphism fails at n={n}, S={s:?}"
            );
        }
    }
    println!("criterion 04 (non-isomorphism for 4<=n<=7, subcore isomorphisms n <= 6): PASS");
}

#[test]
fn criterion_05_triangles_two_routes() {
    let nar_ref = rows_to_biguint(&narayana_reference_rows());
    assert_eq!(narayana_table(12).rows, nar_ref, "Narayana formula route");
    assert_eq!(narayana_table_series(12).rows, nar_ref, "Narayana series route");
    let ind_ref = rows_to_biguint(&ind_set_reference_rows());
    assert_eq!(ind_set_triangle(15).rows, ind_ref, "triangle formula route");
    assert_eq!(
        ind_set_triangle_from_series(15).rows,
        ind_ref,
        "triangle series route"
    );
    // brute force: group 132-avoiders by the size of their encoding support
    let b132 = PatternBasis::parse(&["132"]).unwrap();
    for l in 0..=10usize {
        let mut by_size: Vec<u64> = Vec::new();
        for q in avoiders(l, &b132) {
            let k = StaircaseEncoding::of(&q).support().count();
            if by_size.len() <= k {
                by_size.resize(k + 1, 0);
            }
            by_size[k] += 1;
        }
        let got: Vec<BigUint> = by_size.into_iter().map(big).collect();
        assert_eq!(got, ind_ref[l], "brute-force triangle row {l}");
    }
    println!("criterion 05 (both triangles, two routes each, brute force to length 10): PASS");
}

#[test]
fn criterion_06_rightmost_entries_to_row_24() {
    let report = rightmost_entry_report(24);
    assert!(report.agrees, "{:?}", report.first_failure);
    for (i, (_, got)) in report.catalan_rows.iter().enumerate() {
        assert_eq!(got, &catalan(i as u64));
    }
    for (i, (_, got)) in report.pascal_rows.iter().enumerate() {
        assert_eq!(got, &central_12_pascal(i as u64));
    }
    println!("criterion 06 (rightmost triangle entries through row 24): PASS");
}

#[test]
fn criterion_07_smooth_class() {
    let want: Vec<BigUint> = [1u64, 1, 2, 6, 22, 88, 366, 1552, 6652, 28696, 124310]
        .iter()
        .map(|&v| big(v))
        .collect();
    assert_eq!(smooth_counts(10), want, "substituted series");
    assert_eq!(smooth_closed_counts(10), want, "closed form");
    let basis = PatternBasis::parse(&["1324", "2143"]).unwrap();
    for (n, w) in want.iter().enumerate() {
        assert_eq!(big(count_avoiders(n, &basis)), *w, "brute force at {n}");
    }
    println!("criterion 07 (smooth class counts to length 10, three routes): PASS");
}

#[test]
fn criterion_08_updown_class() {
    let want: Vec<BigUint> = [
        1u64, 1, 2, 6, 21, 75, 268, 958, 3425, 12245, 43778, 156514, 559565,
    ]
    .iter()
    .map(|&v| big(v))
    .collect();
    assert_eq!(updown_counts(12), want, "substituted series");
    assert_eq!(updown_closed_counts(12), want, "closed form");
    let basis = PatternBasis::parse(&["1234", "1324", "2143"]).unwrap();
    for n in 0..=10usize {
        assert_eq!(big(count_avoiders(n, &basis)), want[n], "brute force at {n}");
    }
    println!("criterion 08 (triple class counts to index 12, brute force to 10): PASS");
}

#[test]
fn criterion_09_four_pattern_class() {
    let want: Vec<BigUint> = [
        1u64, 1, 2, 6, 20, 62, 172, 471, 1337, 3846, 11030, 31442, 89470, 254934,
    ]
    .iter()
    .map(|&v| big(v))
    .collect();
    assert_eq!(four_pattern_counts(13), want, "substituted series");
    assert_eq!(four_pattern_closed_counts(13), want, "closed form");
    let basis = PatternBasis::parse(&["1234", "1324", "1432", "3214"]).unwrap();
    for n in 0..=10usize {
        assert_eq!(big(count_avoiders(n, &basis)), want[n], "brute force at {n}");
    }
    println!("criterion 09 (four-pattern class counts to index 13, brute force to 10): PASS");
}

#[test]
fn criterion_10_nonintersecting_boundaries() {
    let want2: Vec<BigUint> = [
        0u64, 0, 1, 1, 4, 14, 49, 174, 626, 2276, 8346, 30821, 114495, 427481,
    ]
    .iter()
    .map(|&v| big(v))
    .collect();
    assert_eq!(type_b_counter(2, 13), want2, "type-(a,2) series");
    let want3: Vec<BigUint> = [
        0u64, 0, 0, 1, 1, 7, 33, 139, 566, 2279, 9132, 36488, 145500, 579318,
    ]
    .iter()
    .map(|&v| big(v))
    .collect();
    assert_eq!(type_b_counter(3, 13), want3, "type-(a,3) series");
    // the type-(a,1) machinery reduces to the single-staircase counts
    let c1 = type_b_counter(1, 12);
    for n in 1..=12usize {
        assert_eq!(c1[n], catalan(n as u64 - 1), "type-(a,1) at {n}");
    }
    // brute-force boundary-typed counts of the 1324-avoiders
    let report = permcores::oracle::check_nonintersecting_many(10, &[1, 2, 3]);
    assert!(report.passed, "{report}");
    println!("criterion 10 (non-intersecting boundary counts, series vs brute force): PASS");
}

#[test]
fn criterion_11_boundary_counts() {
    let fam = smooth_family(10, 4);
    let want = [1u64, 1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181];
    let basis = PatternBasis::parse(&["123", "2143"]).unwrap();
    for (a, w) in want.iter().enumerate() {
        assert_eq!(rational_to_count(&fam.p.get(a, 0)), big(*w), "series at {a}");
        assert_eq!(count_avoiders(a, &basis), *w, "brute force at {a}");
    }
    println!("criterion 11 (boundary class is the alternate Fibonacci numbers): PASS");
}

#[test]
fn criterion_12_disjoint_unions() {
    for family in [
        UnionFamily::Smooth,
        UnionFamily::Updown2143,
        UnionFamily::FourPattern,
    ] {
        let report = check_disjoint_union(9, family);
        assert!(report.passed, "{report}");
    }
    println!("criterion 12 (per-boundary disjoint unions for all three families, n <= 9): PASS");
}

#[test]
fn criterion_13_purity_conjecture() {
    let report = check_purity(6);
    assert!(report.passed, "{report}");
    assert_eq!(report.status(), "conjecture-consistent");
    println!("criterion 13 (purity iff 2143-free boundary, n <= 6): PASS");
}

#[test]
fn criterion_14_vincular_equality() {
    let report = check_vincular(9);
    assert!(report.passed, "{report}");
    println!("criterion 14 (bonded 1234 and 1324 classes are equinumerous, n <= 9): PASS");
}

#[test]
fn criterion_02_timebox_noncrossing_consistency() {
    // count_noncrossing is part of the criterion-02 equality chain; pin the
    // cited value separately so a regression names it directly
    assert_eq!(count_noncrossing(4, 2), big(40));
}
