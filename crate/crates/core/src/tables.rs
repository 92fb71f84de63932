//! Counting triangles and sequence tables with CSV and b-file export.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::comb::{binomial, binomial_signed, catalan, central_12_pascal};
use crate::series::{
    closed_form_i, narayana_closed_series, rational_to_count, triangle_series,
};

/// Rows of exact nonnegative integers with a label and a provenance note.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub label: String,
    pub provenance: String,
    pub rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn new(label: &str, provenance: &str, rows: Vec<Vec<BigUint>>) -> Self {
        CountTable {
            label: label.to_string(),
            provenance: provenance.to_string(),
            rows,
        }
    }

    /// Flattens the rows into a single sequence.
    pub fn flat(&self) -> Vec<BigUint> {
        self.rows.iter().flatten().cloned().collect()
    }

    /// CSV with a header row; values render in decimal.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{v}\n"));
            }
        }
        out
    }

    /// OEIS b-file text: "index value" per line over the flattened rows.
    pub fn to_bfile(&self, offset: i64) -> String {
        let mut out = String::new();
        for (i, v) in self.flat().iter().enumerate() {
            out.push_str(&format!("{} {v}\n", offset + i as i64));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Narayana number N(n, k) = (1/n) C(n,k) C(n,k-1): the number of
/// 132-avoiders of length n with k left-to-right minima.
pub fn narayana_number(n: u64, k: u64) -> BigUint {
    if n == 0 {
        return if k == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::zero()
        };
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n, k - 1) / BigUint::from(n)
}

/// The Narayana triangle from the closed formula; row n >= 1 lists k = 1..n,
/// row 0 is the singleton `[1]` for the empty permutation.
pub fn narayana_table(rows: usize) -> CountTable {
    let mut out = Vec::new();
    for n in 0..rows {
        if n == 0 {
            out.push(vec![BigUint::from(1u32)]);
        } else {
            out.push((1..=n as u64).map(|k| narayana_number(n as u64, k)).collect());
        }
    }
    CountTable::new("narayana", "closed formula", out)
}

/// The same triangle from the algebraic generating function.
pub fn narayana_table_series(rows: usize) -> CountTable {
    let order = rows.max(1) - 1;
    let e = narayana_closed_series(order, order);
    let mut out = Vec::new();
    for n in 0..rows {
        if n == 0 {
            out.push(vec![BigUint::from(1u32)]);
        } else {
            out.push(
                (1..=n)
                    .map(|k| rational_to_count(&e.get(k, n)))
                    .collect(),
            );
        }
    }
    CountTable::new("narayana", "generating function", out)
}

/// Number of 132-avoiders of length l built from an independent set of
/// size k: sum over the number of minima of I(n,k) C(l-n-1, k-1).
pub fn ind_set_triangle_entry(l: usize, k: usize) -> BigUint {
    if k == 0 {
        // only the decreasing permutation uses the empty set
        return BigUint::from(1u32);
    }
    let mut total = BigUint::zero();
    for n in 1..=l {
        let weights = binomial_signed(l as i64 - n as i64 - 1, k as i64 - 1);
        if weights.is_zero() {
            continue;
        }
        total += closed_form_i(n, k) * weights;
    }
    total
}

/// Triangle of 132-avoiders of length l by independent-set size, with the
/// zero tail trimmed; from the closed formula.
pub fn ind_set_triangle(rows: usize) -> CountTable {
    let mut out = Vec::new();
    for l in 0..rows {
        out.push(trim_row((0..=l).map(|k| ind_set_triangle_entry(l, k)).collect()));
    }
    CountTable::new("a262370", "closed formula", out)
}

/// The same triangle from the generating function F(x, y x/(1-x)).
pub fn ind_set_triangle_from_series(rows: usize) -> CountTable {
    let order = rows.max(1) - 1;
    let t = triangle_series(order, order);
    let mut out = Vec::new();
    for l in 0..rows {
        out.push(trim_row(
            (0..=l).map(|k| rational_to_count(&t.get(l, k))).collect(),
        ));
    }
    CountTable::new("a262370", "generating function", out)
}

fn trim_row(mut row: Vec<BigUint>) -> Vec<BigUint> {
    while row.len() > 1 && row.last().is_some_and(|v| v.is_zero()) {
        row.pop();
    }
    row
}

/// Outcome of comparing the rightmost triangle entries against the Catalan
/// numbers (rows 2+3i) and the central (1,2)-Pascal elements (rows 1+3i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightmostReport {
    pub max_row: usize,
    pub catalan_rows: Vec<(usize, BigUint)>,
    pub pascal_rows: Vec<(usize, BigUint)>,
    pub agrees: bool,
    pub first_failure: Option<String>,
}

/// Checks the rightmost-entry pattern of the independent-set triangle up to
/// `max_row` (inclusive).
pub fn rightmost_entry_report(max_row: usize) -> RightmostReport {
    let table = ind_set_triangle(max_row + 1);
    let mut catalan_rows = Vec::new();
    let mut pascal_rows = Vec::new();
    let mut first_failure = None;
    let mut i = 0;
    while 2 + 3 * i <= max_row {
        let row = 2 + 3 * i;
        let got = table.rows[row].last().unwrap().clone();
        let want = catalan(i as u64);
        if got != want && first_failure.is_none() {
            first_failure = Some(format!("row {row}: rightmost {got}, expected Catalan {want}"));
        }
        catalan_rows.push((row, got));
        i += 1;
    }
    let mut i = 0;
    while 1 + 3 * i <= max_row {
        let row = 1 + 3 * i;
        let got = table.rows[row].last().unwrap().clone();
        let want = central_12_pascal(i as u64);
        if got != want && first_failure.is_none() {
            first_failure = Some(format!(
                "row {row}: rightmost {got}, expected central element {want}"
            ));
        }
        pascal_rows.push((row, got));
        i += 1;
    }
    RightmostReport {
        max_row,
        agrees: first_failure.is_none(),
        catalan_rows,
        pascal_rows,
        first_failure,
    }
}

/// Reference rows of the Narayana triangle through row 11.
pub fn narayana_reference_rows() -> Vec<Vec<u64>> {
    vec![
        vec![1],
        vec![1],
        vec![1, 1],
        vec![1, 3, 1],
        vec![1, 6, 6, 1],
        vec![1, 10, 20, 10, 1],
        vec![1, 15, 50, 50, 15, 1],
        vec![1, 21, 105, 175, 105, 21, 1],
        vec![1, 28, 196, 490, 490, 196, 28, 1],
        vec![1, 36, 336, 1176, 1764, 1176, 336, 36, 1],
        vec![1, 45, 540, 2520, 5292, 5292, 2520, 540, 45, 1],
        vec![1, 55, 825, 4950, 13860, 19404, 13860, 4950, 825, 55, 1],
    ]
}

/// Reference rows of the independent-set triangle through row 14.
pub fn ind_set_reference_rows() -> Vec<Vec<u64>> {
    vec![
        vec![1],
        vec![1],
        vec![1, 1],
        vec![1, 4],
        vec![1, 10, 3],
        vec![1, 20, 20, 1],
        vec![1, 35, 77, 19],
        vec![1, 56, 224, 139, 9],
        vec![1, 84, 546, 656, 141, 2],
        vec![1, 120, 1176, 2375, 1104, 86],
        vec![1, 165, 2310, 7172, 5937, 1181, 30],
        vec![1, 220, 4224, 18953, 24959, 9594, 830, 5],
        vec![1, 286, 7293, 45188, 87893, 56358, 10613, 380],
        vec![1, 364, 12012, 99242, 270452, 264012, 88472, 8240, 105],
        vec![1, 455, 19019, 203775, 747877, 1044085, 554395, 100339, 4480, 14],
    ]
}

pub fn rows_to_biguint(rows: &[Vec<u64>]) -> Vec<Vec<BigUint>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigUint::from(v)).collect())
        .collect()
}

/// Flat sequence generators for b-file comparison.
pub fn sequence(name: &str, terms: usize) -> Option<Vec<BigUint>> {
    match name {
        "narayana" => {
            // triangle read by rows starting at row 1
            let mut out = Vec::new();
            let mut n = 1u64;
            while out.len() < terms {
                for k in 1..=n {
                    out.push(narayana_number(n, k));
                }
                n += 1;
            }
            out.truncate(terms);
            Some(out)
        }
        "a262370" => {
            let mut out = Vec::new();
            let mut rows = 1;
            while out.len() < terms {
                rows *= 2;
                out = ind_set_triangle(rows).flat();
            }
            out.truncate(terms);
            Some(out)
        }
        "altfib" => {
            let fam = crate::series::smooth_family(terms.max(1) - 1, 1);
            Some(
                (0..terms)
                    .map(|a| rational_to_count(&fam.p.get(a, 0)))
                    .collect(),
            )
        }
        "eq5" => {
            let mut v = crate::series::updown_counts(terms.max(1) - 1);
            v.truncate(terms);
            Some(v)
        }
        "eq6" => {
            let mut v = crate::series::four_pattern_counts(terms.max(1) - 1);
            v.truncate(terms);
            Some(v)
        }
        "pascal12" => Some((0..terms).map(|i| central_12_pascal(i as u64)).collect()),
        "catalan" => Some((0..terms).map(|i| catalan(i as u64)).collect()),
        "type-a2" => {
            let mut v = crate::series::type_b_counter(2, terms.max(1) - 1);
            v.truncate(terms);
            Some(v)
        }
        "type-a3" => {
            let mut v = crate::series::type_b_counter(3, terms.max(1) - 1);
            v.truncate(terms);
            Some(v)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narayana_matches_reference() {
        let want = rows_to_biguint(&narayana_reference_rows());
        assert_eq!(narayana_table(12).rows, want);
        assert_eq!(narayana_table_series(12).rows, want);
    }

    #[test]
    fn narayana_row_sums_are_catalan() {
        let table = narayana_table(12);
        for (n, row) in table.rows.iter().enumerate() {
            let sum: BigUint = row.iter().cloned().sum();
            assert_eq!(sum, catalan(n as u64));
        }
    }

    #[test]
    fn ind_set_triangle_matches_reference() {
        let want = rows_to_biguint(&ind_set_reference_rows());
        assert_eq!(ind_set_triangle(15).rows, want);
        assert_eq!(ind_set_triangle_from_series(15).rows, want);
    }

    #[test]
    fn ind_set_row_sums_are_catalan() {
        let table = ind_set_triangle(13);
        for (l, row) in table.rows.iter().enumerate() {
            let sum: BigUint = row.iter().cloned().sum();
            assert_eq!(sum, catalan(l as u64), "row {l}");
        }
    }

    #[test]
    fn rightmost_entries_through_row_14() {
        let report = rightmost_entry_report(14);
        assert!(report.agrees, "{:?}", report.first_failure);
        let cats: Vec<u64> = report
            .catalan_rows
            .iter()
            .map(|(_, v)| v.try_into().unwrap())
            .collect();
        assert_eq!(cats, vec![1, 1, 2, 5, 14]);
        let pasc: Vec<u64> = report
            .pascal_rows
            .iter()
            .map(|(_, v)| v.try_into().unwrap())
            .collect();
        assert_eq!(pasc, vec![1, 3, 9, 30, 105]);
    }

    #[test]
    fn export_formats() {
        let t = narayana_table(3);
        assert_eq!(t.to_csv(), "n,k,value\n0,0,1\n1,0,1\n2,0,1\n2,1,1\n");
        assert_eq!(t.to_bfile(1), "1 1\n2 1\n3 1\n4 1\n");
        assert_eq!(t.to_text(), "1\n1\n1 1\n");
    }

    #[test]
    fn sequence_generators() {
        let nar = sequence("narayana", 7).unwrap();
        let want: Vec<u64> = vec![1, 1, 1, 1, 3, 1, 1];
        assert_eq!(nar, want.iter().map(|&v| BigUint::from(v)).collect::<Vec<_>>());
        assert!(sequence("nope", 3).is_none());
        let alt = sequence("altfib", 6).unwrap();
        let wa: Vec<u64> = vec![1, 1, 2, 5, 13, 34];
        assert_eq!(alt, wa.iter().map(|&v| BigUint::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn sparse_f_solution_has_integer_coefficients() {
        let f = crate::series::solve_f(8, 8);
        for (_, _, c) in f.terms() {
            assert!(c.is_integer());
            assert!(!num_traits::Signed::is_negative(&c));
        }
    }
}
