//! Permutations, pattern containment and boundary statistics.
//!
//! Permutations are stored in one-line notation with 1-based values.
//! Containment search is a backtracking over positions with value-window
//! pruning; `for_each_avoider` generates a class by extending prefixes and
//! rejecting as soon as a pattern occurs among the placed values, which is
//! sound because containment (classical or vincular) is monotone under
//! appending on the right.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("entries must be distinct, {0} appears twice")]
    DuplicateEntry(i64),
    #[error("values must be a rearrangement of 1..={0}")]
    NotAPermutation(usize),
    #[error("bond position {0} must lie in 1..{1}")]
    BadBond(usize, usize),
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
}

/// A permutation of {1..n} in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation, checking that `values` rearranges 1..=n.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    /// The unique permutation order-isomorphic to a word of distinct integers.
    pub fn standardise(word: &[i64]) -> Result<Self, PermError> {
        let mut order: Vec<usize> = (0..word.len()).collect();
        order.sort_by_key(|&i| word[i]);
        for w in order.windows(2) {
            if word[w[0]] == word[w[1]] {
                return Err(PermError::DuplicateEntry(word[w[0]]));
            }
        }
        let mut values = vec![0; word.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Ok(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).unwrap() + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    /// 1-based positions of left-to-right minima.
    pub fn lr_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            if v < min {
                min = v;
                out.push(i + 1);
            }
        }
        out
    }

    pub fn lr_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate() {
            if v > max {
                max = v;
                out.push(i + 1);
            }
        }
        out
    }

    pub fn rl_maxima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut max = 0;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v > max {
                max = v;
                out.push(i + 1);
            }
        }
        out.reverse();
        out
    }

    pub fn rl_minima(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = usize::MAX;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v < min {
                min = v;
                out.push(i + 1);
            }
        }
        out.reverse();
        out
    }

    /// Standardisation of the subsequence of left-to-right minima and
    /// right-to-left maxima. Always avoids 123.
    pub fn boundary(&self) -> Permutation {
        let mut pos: BTreeSet<usize> = self.lr_minima().into_iter().collect();
        pos.extend(self.rl_maxima());
        let word: Vec<i64> = pos.iter().map(|&p| self.at(p) as i64).collect();
        Permutation::standardise(&word).unwrap()
    }

    /// True iff some subsequence of `self` standardises to `p`.
    pub fn contains(&self, p: &Permutation) -> bool {
        occurs(&self.values, &p.values, &[], None)
    }

    pub fn avoids(&self, p: &Permutation) -> bool {
        !self.contains(p)
    }

    /// All occurrences of `p`, as sorted lists of 1-based positions.
    pub fn occurrences(&self, p: &Permutation) -> Vec<Vec<usize>> {
        collect_occurrences(&self.values, &p.values, &[])
    }

    pub fn contains_vincular(&self, vp: &VincularPattern) -> bool {
        occurs(&self.values, &vp.pattern.values, &vp.bonds, None)
    }

    pub fn occurrences_vincular(&self, vp: &VincularPattern) -> Vec<Vec<usize>> {
        collect_occurrences(&self.values, &vp.pattern.values, &vp.bonds)
    }

    /// Maximal skew-sum decomposition; singletons are their own components.
    pub fn skew_components(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut out = Vec::new();
        let mut start = 0;
        let mut min = usize::MAX;
        for i in 0..n {
            min = min.min(self.values[i]);
            // a split after i means the prefix holds exactly the i+1 largest values
            if min == n - i {
                let word: Vec<i64> = self.values[start..=i].iter().map(|&v| v as i64).collect();
                out.push(Permutation::standardise(&word).unwrap());
                start = i + 1;
            }
        }
        out
    }

    /// By convention the empty permutation and the singleton count as
    /// skew-decomposable.
    pub fn is_skew_indecomposable(&self) -> bool {
        if self.len() <= 1 {
            return false;
        }
        self.skew_components().len() == 1
    }

    /// Skew sum: `self` placed above-left of `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let m = other.len();
        let mut values: Vec<usize> = self.values.iter().map(|&v| v + m).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    /// Non-intersecting boundary type (a, b): a left-to-right minima and b
    /// right-to-left maxima whose position sets are disjoint, with the
    /// smallest lrm left of the largest rlm and the first lrm below the last
    /// rlm. `None` when the boundary sequences intersect.
    pub fn boundary_type(&self) -> Option<(usize, usize)> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        let lrm = self.lr_minima();
        let rlm = self.rl_maxima();
        let lrm_set: BTreeSet<usize> = lrm.iter().copied().collect();
        if rlm.iter().any(|p| lrm_set.contains(p)) {
            return None;
        }
        if self.position_of(1) >= self.position_of(n) {
            return None;
        }
        if self.values[0] >= self.values[n - 1] {
            return None;
        }
        Some((lrm.len(), rlm.len()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts comma-free digit strings (length <= 9) and comma-separated
    /// integers.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| PermError::Parse(s.to_string()))?
        };
        Permutation::new(values)
    }
}

/// A classical pattern with adjacency bonds: bond `i` forces occurrence
/// positions i and i+1 to be adjacent in the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VincularPattern {
    pattern: Permutation,
    bonds: Vec<usize>,
}

impl VincularPattern {
    pub fn new(pattern: Permutation, bonds: Vec<usize>) -> Result<Self, PermError> {
        let m = pattern.len();
        let mut bonds: Vec<usize> = bonds;
        bonds.sort_unstable();
        bonds.dedup();
        for &b in &bonds {
            if b == 0 || b + 1 > m {
                return Err(PermError::BadBond(b, m));
            }
        }
        Ok(VincularPattern { pattern, bonds })
    }

    pub fn classical(pattern: Permutation) -> Self {
        VincularPattern {
            pattern,
            bonds: Vec::new(),
        }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn bonds(&self) -> &[usize] {
        &self.bonds
    }
}

impl FromStr for VincularPattern {
    type Err = PermError;

    /// Parses digit strings where a bracketed block marks bonded positions,
    /// e.g. `1[23]4` for the pattern 1234 with positions 2,3 adjacent.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let mut digits = Vec::new();
        let mut bonds = Vec::new();
        let mut block_start: Option<usize> = None;
        for c in s.trim().chars() {
            match c {
                '[' if block_start.is_none() => block_start = Some(digits.len() + 1),
                ']' if block_start.is_some() => {
                    let start = block_start.take().unwrap();
                    for b in start..digits.len() {
                        bonds.push(b);
                    }
                }
                _ => match c.to_digit(10) {
                    Some(d) if d > 0 => digits.push(d as usize),
                    _ => return Err(PermError::Parse(s.to_string())),
                },
            }
        }
        if block_start.is_some() {
            return Err(PermError::Parse(s.to_string()));
        }
        VincularPattern::new(Permutation::new(digits)?, bonds)
    }
}

/// A finite set of classical patterns defining a permutation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternBasis {
    patterns: Vec<Permutation>,
}

impl PatternBasis {
    pub fn new(mut patterns: Vec<Permutation>) -> Self {
        patterns.sort();
        patterns.dedup();
        PatternBasis { patterns }
    }

    pub fn parse(specs: &[&str]) -> Result<Self, PermError> {
        let patterns: Result<Vec<_>, _> = specs.iter().map(|s| s.parse()).collect();
        Ok(PatternBasis::new(patterns?))
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    /// Patterns that contain another basis element; such patterns are
    /// redundant for avoidance but are kept as given.
    pub fn redundant_patterns(&self) -> Vec<Permutation> {
        self.patterns
            .iter()
            .filter(|p| {
                self.patterns
                    .iter()
                    .any(|q| q != *p && p.contains(q))
            })
            .cloned()
            .collect()
    }
}

/// Backtracking occurrence search over host positions.
///
/// `bonds` holds 1-based indices i forcing chosen[i] == chosen[i-1] + 1.
/// `pinned_last` pins the final occurrence position (used for incremental
/// checks while extending prefixes). Calls `on_found` for every occurrence
/// until it returns `false`.
fn search(
    host: &[usize],
    pat: &[usize],
    bonds: &[usize],
    pinned_last: Option<usize>,
    on_found: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let m = pat.len();
    if m == 0 {
        return !on_found(&[]);
    }
    if host.len() < m {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    fn step(
        host: &[usize],
        pat: &[usize],
        bonds: &[usize],
        pinned_last: Option<usize>,
        chosen: &mut Vec<usize>,
        on_found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let t = chosen.len();
        let m = pat.len();
        if t == m {
            return !on_found(chosen);
        }
        // admissible value window from the already-chosen entries
        let mut lo = 0usize;
        let mut hi = usize::MAX;
        for (s, &q) in chosen.iter().enumerate() {
            if pat[s] < pat[t] {
                lo = lo.max(host[q]);
            } else {
                hi = hi.min(host[q]);
            }
        }
        let start = chosen.last().map_or(0, |&q| q + 1);
        // candidate positions form a contiguous range; bonds and a pinned
        // final position both collapse it to a single index
        let (from, to) = if t > 0 && bonds.contains(&t) {
            (start, start + 1)
        } else if t + 1 == m {
            match pinned_last {
                Some(p) if p >= start => (p, p + 1),
                Some(_) => (0, 0),
                None => (start, host.len()),
            }
        } else {
            (start, host.len())
        };
        for q in from..to.min(host.len()) {
            if host.len() - q < m - t {
                continue;
            }
            let v = host[q];
            if v <= lo || v >= hi {
                continue;
            }
            chosen.push(q);
            let stop = step(host, pat, bonds, pinned_last, chosen, on_found);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
    step(host, pat, bonds, pinned_last, &mut chosen, on_found)
}

fn occurs(host: &[usize], pat: &[usize], bonds: &[usize], pinned_last: Option<usize>) -> bool {
    let mut found = false;
    search(host, pat, bonds, pinned_last, &mut |_| {
        found = true;
        false
    });
    found
}

fn collect_occurrences(host: &[usize], pat: &[usize], bonds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(host, pat, bonds, None, &mut |occ| {
        out.push(occ.iter().map(|&q| q + 1).collect());
        true
    });
    out.sort();
    out
}

/// Streams Av_n(basis) in lexicographic order of one-line notation.
///
/// Prefixes are extended value by value; a branch dies as soon as the newly
/// placed entry completes an occurrence of any basis pattern.
pub fn for_each_avoider(n: usize, basis: &PatternBasis, f: &mut dyn FnMut(&Permutation)) {
    let vps: Vec<VincularPattern> = basis
        .patterns()
        .iter()
        .cloned()
        .map(VincularPattern::classical)
        .collect();
    for_each_vincular_avoider(n, &vps, f);
}

/// Streams the permutations of length n avoiding every vincular pattern.
pub fn for_each_vincular_avoider(
    n: usize,
    patterns: &[VincularPattern],
    f: &mut dyn FnMut(&Permutation),
) {
    // the empty pattern occurs in everything
    if patterns.iter().any(|vp| vp.pattern.is_empty()) {
        return;
    }
    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn extend(
        n: usize,
        patterns: &[VincularPattern],
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        f: &mut dyn FnMut(&Permutation),
    ) {
        if prefix.len() == n {
            f(&Permutation {
                values: prefix.clone(),
            });
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            prefix.push(v);
            used[v] = true;
            let last = prefix.len() - 1;
            let hit = patterns
                .iter()
                .any(|vp| occurs(prefix, &vp.pattern.values, &vp.bonds, Some(last)));
            if !hit {
                extend(n, patterns, prefix, used, f);
            }
            prefix.pop();
            used[v] = false;
        }
    }
    extend(n, patterns, &mut prefix, &mut used, f);
}

pub fn avoiders(n: usize, basis: &PatternBasis) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_avoider(n, basis, &mut |p| out.push(p.clone()));
    out
}

pub fn count_avoiders(n: usize, basis: &PatternBasis) -> u64 {
    let mut count = 0;
    for_each_avoider(n, basis, &mut |_| count += 1);
    count
}

pub fn count_vincular_avoiders(n: usize, patterns: &[VincularPattern]) -> u64 {
    let mut count = 0;
    for_each_vincular_avoider(n, patterns, &mut |_| count += 1);
    count
}

/// All n! permutations, for baseline comparisons in tests and checks.
pub fn for_each_permutation(n: usize, f: &mut dyn FnMut(&Permutation)) {
    let mut values: Vec<usize> = (1..=n).collect();
    fn heap(values: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&Permutation)) {
        if k <= 1 {
            f(&Permutation {
                values: values.clone(),
            });
            return;
        }
        for i in 0..k {
            heap(values, k - 1, f);
            if k % 2 == 0 {
                values.swap(i, k - 1);
            } else {
                values.swap(0, k - 1);
            }
        }
    }
    let k = values.len();
    heap(&mut values, k, f);
}
