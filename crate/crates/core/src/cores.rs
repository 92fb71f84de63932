//! Core graphs on boundary grids and exact counting on small graphs.
//!
//! A core has one vertex per grid box. With rows counted top-to-bottom, two
//! boxes are "aligned" when one is weakly below-right of the other and
//! "opposed" when one is strictly below-left of the other. Edges:
//!
//! - down-core: strictly aligned pairs whose spanning rectangle lies in the
//!   grid (these are the pairs whose points would force the pattern 132
//!   against a left-to-right minimum);
//! - up-core: opposed pairs with the rectangle in the grid (pairs forcing
//!   123 against a left-to-right minimum);
//! - updown-core: weakly aligned pairs with the rectangle in the grid, plus
//!   all opposed pairs. Opposed pairs need no rectangle: the boundary points
//!   witnessing the two boxes already complete an ascending chain of four.
//!
//! On the staircase of size n the down-core is the classical 132-core D_n
//! and the up-core the 123-core U_n.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::json;
use thiserror::Error;

use crate::comb::binomial;
use crate::grids::{BoundaryGrid, GridBox};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreError {
    #[error("graph on {0} vertices exceeds the supported size {1}")]
    TooLarge(usize, usize),
    #[error("subcore index {0} must lie in 1..={1}")]
    BadSubcoreIndex(usize, usize),
    #[error("box ({0},{1}) is not a vertex of the core")]
    NotAVertex(usize, usize),
    #[error("boxes ({0},{1}) and ({2},{3}) are adjacent in the core")]
    NotIndependent(usize, usize, usize, usize),
    #[error("weights must be positive")]
    ZeroWeight,
}

const MAX_VERTICES: usize = 64;
const MAX_ISO_VERTICES: usize = 40;

/// Undirected graph on at most 64 vertices with bitmask adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self, CoreError> {
        if n > MAX_VERTICES {
            return Err(CoreError::TooLarge(n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Number of independent sets of each cardinality, starting at size 0.
    ///
    /// Branch and bound: pick a live vertex of maximal live degree and sum
    /// the profiles without it and with its closed neighborhood removed;
    /// connected components are handled independently and memoized by the
    /// induced vertex mask.
    pub fn independent_set_profile(&self) -> Vec<BigUint> {
        let mut memo: HashMap<u64, Vec<u64>> = HashMap::new();
        let counts = self.profile_mask(self.full_mask(), &mut memo);
        counts.into_iter().map(BigUint::from).collect()
    }

    fn profile_mask(&self, mask: u64, memo: &mut HashMap<u64, Vec<u64>>) -> Vec<u64> {
        if mask == 0 {
            return vec![1];
        }
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        // split off one connected component
        let first = mask.trailing_zeros() as usize;
        let mut comp = 1u64 << first;
        loop {
            let mut grown = comp;
            let mut m = comp;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= self.adj[v] & mask;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        let result = if comp != mask {
            let a = self.profile_mask(comp, memo);
            let b = self.profile_mask(mask & !comp, memo);
            poly_mul(&a, &b)
        } else {
            // branch on a vertex of maximal degree within the component
            let mut pick = first;
            let mut best = 0;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let d = (self.adj[v] & mask).count_ones();
                if d > best {
                    best = d;
                    pick = v;
                }
            }
            let without = self.profile_mask(mask & !(1 << pick), memo);
            let with = self.profile_mask(mask & !(self.adj[pick] | (1 << pick)), memo);
            let mut out = without;
            if out.len() < with.len() + 1 {
                out.resize(with.len() + 1, 0);
            }
            for (k, c) in with.iter().enumerate() {
                out[k + 1] += c;
            }
            out
        };
        memo.insert(mask, result.clone());
        result
    }

    /// Number of cliques of each size >= 0 (the empty clique counts once).
    pub fn clique_profile(&self) -> Vec<BigUint> {
        fn above(v: usize) -> u64 {
            if v + 1 >= 64 {
                0
            } else {
                !((1u64 << (v + 1)) - 1)
            }
        }
        // candidates are common neighbors with index greater than the last
        // chosen vertex, so every clique is enumerated exactly once
        fn grow(g: &Graph, cand: u64, size: usize, counts: &mut Vec<u64>) {
            if counts.len() <= size {
                counts.resize(size + 1, 0);
            }
            counts[size] += 1;
            let mut m = cand;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                grow(g, cand & g.adj[v] & above(v), size + 1, counts);
            }
        }
        let mut counts: Vec<u64> = vec![1];
        for u in 0..self.n {
            grow(self, self.adj[u] & above(u), 1, &mut counts);
        }
        counts.into_iter().map(BigUint::from).collect()
    }

    pub fn count_cliques(&self, k: usize) -> BigUint {
        let profile = self.clique_profile();
        profile.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Calls `f` with every maximal independent set until it returns false.
    pub fn for_each_maximal_independent_set(&self, f: &mut dyn FnMut(u64) -> bool) {
        // Bron-Kerbosch with pivoting on the complement graph
        let full = self.full_mask();
        let co: Vec<u64> = (0..self.n)
            .map(|u| full & !self.adj[u] & !(1u64 << u))
            .collect();
        fn bk(co: &[u64], r: u64, p: u64, x: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
            if p == 0 && x == 0 {
                return f(r);
            }
            let pivot = {
                let pool = p | x;
                let mut best = pool.trailing_zeros() as usize;
                let mut score = u32::MAX;
                let mut m = pool;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let s = (p & !co[v]).count_ones();
                    if s < score {
                        score = s;
                        best = v;
                    }
                }
                best
            };
            let mut cand = p & !co[pivot];
            let mut p = p;
            let mut x = x;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                let bit = 1u64 << v;
                if !bk(co, r | bit, p & co[v], x & co[v], f) {
                    return false;
                }
                p &= !bit;
                x |= bit;
            }
            true
        }
        if self.n == 0 {
            f(0);
            return;
        }
        bk(&co, 0, full, 0, f);
    }

    /// True iff every maximal independent set has the same cardinality.
    pub fn is_pure(&self) -> bool {
        let mut size: Option<u32> = None;
        let mut pure = true;
        self.for_each_maximal_independent_set(&mut |s| {
            let k = s.count_ones();
            match size {
                None => {
                    size = Some(k);
                    true
                }
                Some(prev) if prev == k => true,
                Some(_) => {
                    pure = false;
                    false
                }
            }
        });
        pure
    }

    pub fn max_independent_set_size(&self) -> usize {
        self.independent_set_profile().len() - 1
    }

    /// Exact isomorphism test by iterated degree refinement plus backtracking.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, CoreError> {
        if self.n > MAX_ISO_VERTICES || other.n > MAX_ISO_VERTICES {
            return Err(CoreError::TooLarge(
                self.n.max(other.n),
                MAX_ISO_VERTICES,
            ));
        }
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let ca = refine_colors(self);
        let cb = refine_colors(other);
        let mut ha: Vec<u64> = ca.clone();
        let mut hb: Vec<u64> = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return Ok(false);
        }
        // order self's vertices rarest color first to cut branching
        let mut order: Vec<usize> = (0..self.n).collect();
        let mut freq: HashMap<u64, usize> = HashMap::new();
        for &c in &ca {
            *freq.entry(c).or_insert(0) += 1;
        }
        order.sort_by_key(|&u| (freq[&ca[u]], ca[u]));
        let mut image = vec![usize::MAX; self.n];
        let mut used = vec![false; other.n];
        fn assign(
            a: &Graph,
            b: &Graph,
            ca: &[u64],
            cb: &[u64],
            order: &[usize],
            depth: usize,
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if depth == order.len() {
                return true;
            }
            let u = order[depth];
            for v in 0..b.n {
                if used[v] || ca[u] != cb[v] {
                    continue;
                }
                let ok = order[..depth].iter().all(|&w| {
                    a.has_edge(u, w) == b.has_edge(v, image[w])
                });
                if ok {
                    image[u] = v;
                    used[v] = true;
                    if assign(a, b, ca, cb, order, depth + 1, image, used) {
                        return true;
                    }
                    image[u] = usize::MAX;
                    used[v] = false;
                }
            }
            false
        }
        Ok(assign(self, other, &ca, &cb, &order, 0, &mut image, &mut used))
    }

    /// Induced subgraph on `keep` (indices into self), in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len()).expect("induced subgraph within size limit");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Stable coloring by iterated neighborhood color multisets.
fn refine_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..g.n).map(|u| g.degree(u) as u64).collect();
    for _ in 0..g.n {
        let mut sig: Vec<(u64, Vec<u64>)> = Vec::with_capacity(g.n);
        for u in 0..g.n {
            let mut neigh: Vec<u64> = (0..g.n)
                .filter(|&v| g.has_edge(u, v))
                .map(|v| colors[v])
                .collect();
            neigh.sort_unstable();
            sig.push((colors[u], neigh));
        }
        let mut uniq: Vec<&(u64, Vec<u64>)> = sig.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u64> = sig
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoreVariant {
    Down,
    Up,
    UpDown,
}

impl CoreVariant {
    pub fn name(self) -> &'static str {
        match self {
            CoreVariant::Down => "down",
            CoreVariant::Up => "up",
            CoreVariant::UpDown => "updown",
        }
    }
}

impl std::str::FromStr for CoreVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "down" => Ok(CoreVariant::Down),
            "up" => Ok(CoreVariant::Up),
            "updown" => Ok(CoreVariant::UpDown),
            other => Err(format!("unknown core variant {other:?}")),
        }
    }
}

/// A core graph: boxes of a boundary grid with variant-specific adjacency.
#[derive(Clone, Debug)]
pub struct CoreGraph {
    grid: BoundaryGrid,
    variant: CoreVariant,
    boxes: Vec<GridBox>,
    graph: Graph,
}

impl CoreGraph {
    pub fn grid(&self) -> &BoundaryGrid {
        &self.grid
    }

    pub fn variant(&self) -> CoreVariant {
        self.variant
    }

    pub fn boxes(&self) -> &[GridBox] {
        &self.boxes
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn box_index(&self, b: &GridBox) -> Option<usize> {
        self.boxes.binary_search(b).ok()
    }

    pub fn has_box_edge(&self, a: &GridBox, b: &GridBox) -> bool {
        match (self.box_index(a), self.box_index(b)) {
            (Some(u), Some(v)) => u != v && self.graph.has_edge(u, v),
            _ => false,
        }
    }

    pub fn independent_set_profile(&self) -> Vec<BigUint> {
        self.graph.independent_set_profile()
    }

    pub fn count_cliques(&self, k: usize) -> BigUint {
        self.graph.count_cliques(k)
    }

    pub fn is_pure(&self) -> bool {
        self.graph.is_pure()
    }

    /// Checks a support set for pairwise independence.
    pub fn is_independent_support(&self, support: &[GridBox]) -> bool {
        for (i, a) in support.iter().enumerate() {
            if self.box_index(a).is_none() {
                return false;
            }
            for b in support.iter().skip(i + 1) {
                if self.has_box_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Edge list in a plain "u v" per-line text format.
    pub fn to_edge_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "variant": self.variant.name(),
            "vertices": self.boxes.iter().map(|b| json!([b.row, b.col])).collect::<Vec<_>>(),
            "edges": self.graph.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        })
    }
}

/// Whether `a` and `b` are weakly aligned (one weakly below-right of the
/// other) or opposed (one strictly below-left of the other).
fn aligned(a: &GridBox, b: &GridBox) -> bool {
    (a.row <= b.row && a.col <= b.col) || (b.row <= a.row && b.col <= a.col)
}

fn edge_rule(grid: &BoundaryGrid, variant: CoreVariant, a: &GridBox, b: &GridBox) -> bool {
    match variant {
        CoreVariant::Down => {
            a.row != b.row && a.col != b.col && aligned(a, b) && grid.rectangle_filled(a, b)
        }
        CoreVariant::Up => !aligned(a, b) && grid.rectangle_filled(a, b),
        CoreVariant::UpDown => {
            if aligned(a, b) {
                grid.rectangle_filled(a, b)
            } else {
                true
            }
        }
    }
}

/// Builds the down/up/updown core on a boundary grid.
pub fn build_core(grid: &BoundaryGrid, variant: CoreVariant) -> Result<CoreGraph, CoreError> {
    let boxes: Vec<GridBox> = grid.boxes().collect();
    let mut graph = Graph::new(boxes.len())?;
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            if edge_rule(grid, variant, &boxes[i], &boxes[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(CoreGraph {
        grid: grid.clone(),
        variant,
        boxes,
        graph,
    })
}

/// The 132-core D_n: down-core of the staircase of size n.
pub fn core_d(n: usize) -> CoreGraph {
    build_core(&BoundaryGrid::staircase(n), CoreVariant::Down).expect("staircase fits")
}

/// The 123-core U_n: up-core of the staircase of size n.
pub fn core_u(n: usize) -> CoreGraph {
    build_core(&BoundaryGrid::staircase(n), CoreVariant::Up).expect("staircase fits")
}

/// An independent set of core vertices with positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedIndSet {
    weights: std::collections::BTreeMap<GridBox, usize>,
}

impl WeightedIndSet {
    /// Validates membership, pairwise independence and weight positivity
    /// against the host core.
    pub fn new(
        core: &CoreGraph,
        weights: std::collections::BTreeMap<GridBox, usize>,
    ) -> Result<Self, CoreError> {
        let support: Vec<GridBox> = weights.keys().copied().collect();
        for b in &support {
            if core.box_index(b).is_none() {
                return Err(CoreError::NotAVertex(b.row, b.col));
            }
        }
        if weights.values().any(|&w| w == 0) {
            return Err(CoreError::ZeroWeight);
        }
        for (i, a) in support.iter().enumerate() {
            for b in support.iter().skip(i + 1) {
                if core.has_box_edge(a, b) {
                    return Err(CoreError::NotIndependent(a.row, a.col, b.row, b.col));
                }
            }
        }
        Ok(WeightedIndSet { weights })
    }

    pub fn vertices(&self) -> impl Iterator<Item = GridBox> + '_ {
        self.weights.keys().copied()
    }

    pub fn weights(&self) -> &std::collections::BTreeMap<GridBox, usize> {
        &self.weights
    }

    pub fn size(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> usize {
        self.weights.values().sum()
    }
}

/// How independent-set weights inflate into points of the host permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inflation {
    /// Each vertex becomes an increasing run of its weight.
    Increasing,
    /// Each vertex becomes a decreasing run of its weight.
    Decreasing,
    /// Each vertex becomes a single point; weights are not used.
    Point,
}

/// Number of weighted independent sets with weights summing to
/// `total_weight`: monotone-run inflations choose a composition of the
/// total into one part per vertex, point inflation needs exactly
/// `total_weight` vertices.
pub fn weighted_count(core: &CoreGraph, total_weight: usize, inflation: Inflation) -> BigUint {
    let profile = core.independent_set_profile();
    match inflation {
        Inflation::Point => profile
            .get(total_weight)
            .cloned()
            .unwrap_or_else(BigUint::zero),
        Inflation::Increasing | Inflation::Decreasing => {
            if total_weight == 0 {
                return BigUint::one();
            }
            let mut total = BigUint::zero();
            for (k, count) in profile.iter().enumerate().skip(1) {
                if k > total_weight {
                    break;
                }
                total += count * binomial(total_weight as u64 - 1, k as u64 - 1);
            }
            total
        }
    }
}

/// Vertices of the staircase core of size n lying in rows 1..=i and columns
/// i..=n, the strip used by the subcore isomorphisms.
pub fn subcore_region(n: usize, i: usize) -> Result<Vec<GridBox>, CoreError> {
    if i == 0 || i > n {
        return Err(CoreError::BadSubcoreIndex(i, n));
    }
    let mut out = Vec::new();
    for r in 1..=i {
        for c in i..=n {
            out.push(GridBox::new(r, c));
        }
    }
    Ok(out)
}

/// Induced subgraph of D_n (variant Down) or U_n (variant Up) on the strip
/// `subcore_region(n, i)`.
pub fn rect_subcore(n: usize, i: usize, variant: CoreVariant) -> Result<(Vec<GridBox>, Graph), CoreError> {
    let region = subcore_region(n, i)?;
    let core = match variant {
        CoreVariant::Down => core_d(n),
        CoreVariant::Up => core_u(n),
        CoreVariant::UpDown => build_core(&BoundaryGrid::staircase(n), CoreVariant::UpDown)?,
    };
    let idx: Vec<usize> = region
        .iter()
        .map(|b| core.box_index(b).expect("region box in staircase"))
        .collect();
    Ok((region, core.graph().induced(&idx)))
}

/// The column reflection (r, c) -> (r, n + i - c) realizing the subcore
/// isomorphism between down and up strips.
pub fn rho(n: usize, i: usize, b: &GridBox) -> GridBox {
    GridBox::new(b.row, n + i - b.col)
}

/// Verifies that the column reflection with index max(S) is a graph
/// isomorphism between the intersections of the down and up strips over S.
pub fn verify_subcore_isomorphism(
    n: usize,
    s: &std::collections::BTreeSet<usize>,
) -> Result<bool, CoreError> {
    if s.is_empty() {
        return Ok(false);
    }
    let lo = *s.iter().next().unwrap();
    let hi = *s.iter().last().unwrap();
    if lo == 0 || hi > n {
        return Err(CoreError::BadSubcoreIndex(if lo == 0 { 0 } else { hi }, n));
    }
    // intersection of the strips: rows <= min(S), cols >= max(S)
    let mut region = Vec::new();
    for r in 1..=lo {
        for c in hi..=n {
            region.push(GridBox::new(r, c));
        }
    }
    let down = core_d(n);
    let up = core_u(n);
    for a in &region {
        for b in &region {
            if a >= b {
                continue;
            }
            let (fa, fb) = (rho(n, hi, a), rho(n, hi, b));
            if down.has_box_edge(a, b) != up.has_box_edge(&fa, &fb) {
                return Ok(false);
            }
        }
    }
    // the reflection must also map the region onto itself
    for b in &region {
        let f = rho(n, hi, b);
        if !(f.row <= lo && f.col >= hi && f.col <= n) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn profile_u64(core: &CoreGraph) -> Vec<u64> {
        core.independent_set_profile()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn d4_is_a_five_cycle_plus_isolated_vertices() {
        let d4 = core_d(4);
        assert_eq!(d4.vertex_count(), 10);
        assert_eq!(d4.edge_count(), 5);
        let cycle: Vec<GridBox> = [(1, 2), (2, 3), (3, 4), (1, 3), (2, 4)]
            .iter()
            .map(|&(r, c)| GridBox::new(r, c))
            .collect();
        for b in &cycle {
            let u = d4.box_index(b).unwrap();
            assert_eq!(d4.graph().degree(u), 2, "{b} should lie on the cycle");
        }
        let expected: BTreeSet<(GridBox, GridBox)> = [
            ((1, 2), (2, 3)),
            ((1, 2), (2, 4)),
            ((1, 3), (2, 4)),
            ((1, 3), (3, 4)),
            ((2, 3), (3, 4)),
        ]
        .iter()
        .map(|&((a, b), (c, d))| (GridBox::new(a, b), GridBox::new(c, d)))
        .collect();
        let actual: BTreeSet<(GridBox, GridBox)> = d4
            .graph()
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (d4.boxes()[u], d4.boxes()[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        assert_eq!(actual, expected);
    }

    #[test]
    fn staircase_down_core_matches_direct_rule() {
        // pair {(i,j),(k,l)} adjacent in D_n iff i < k <= j < l
        for n in 0..=7 {
            let core = core_d(n);
            for (x, a) in core.boxes().iter().enumerate() {
                for (y, b) in core.boxes().iter().enumerate().skip(x + 1) {
                    let (p, q) = if a.row <= b.row { (a, b) } else { (b, a) };
                    let direct = p.row < q.row && q.row <= p.col && p.col < q.col;
                    assert_eq!(core.graph().has_edge(x, y), direct, "{a} {b} in D_{n}");
                }
            }
        }
    }

    #[test]
    fn staircase_up_core_matches_direct_rule() {
        // pair adjacent in U_n iff one box is strictly below-left of the other
        for n in 0..=7 {
            let core = core_u(n);
            for (x, a) in core.boxes().iter().enumerate() {
                for (y, b) in core.boxes().iter().enumerate().skip(x + 1) {
                    let direct = (a.row < b.row && a.col > b.col) || (b.row < a.row && b.col > a.col);
                    assert_eq!(core.graph().has_edge(x, y), direct, "{a} {b} in U_{n}");
                }
            }
        }
    }

    #[test]
    fn empty_grid_gives_empty_core() {
        let core = core_d(0);
        assert_eq!(core.vertex_count(), 0);
        assert_eq!(profile_u64(&core), vec![1]);
    }

    #[test]
    fn clique_counts_match_binomial() {
        for n in 1..=8 {
            let d = core_d(n).graph().clique_profile();
            let u = core_u(n).graph().clique_profile();
            let kmax = d.len().max(u.len()) + 1;
            for k in 1..=kmax {
                let want = binomial(n as u64 + 1, 2 * k as u64);
                let dk = d.get(k).cloned().unwrap_or_default();
                let uk = u.get(k).cloned().unwrap_or_default();
                assert_eq!(dk, want, "cliques of size {k} in D_{n}");
                assert_eq!(uk, want, "cliques of size {k} in U_{n}");
            }
        }
        assert_eq!(core_d(5).count_cliques(2), BigUint::from(15u32));
        assert_eq!(core_d(4).count_cliques(3), BigUint::from(0u32));
    }

    #[test]
    fn d4_profile_prefix() {
        let p = profile_u64(&core_d(4));
        assert_eq!(p[0], 1);
        assert_eq!(p[1], 10);
        assert_eq!(p[2], 40);
        // full profile cross-checked by hand: 5-cycle times 5 isolated boxes
        assert_eq!(p, vec![1, 10, 40, 85, 105, 76, 30, 5]);
        let total: u64 = p.iter().sum();
        assert_eq!(total, 11 * 32);
    }

    #[test]
    fn profiles_of_empty_graphs_are_binomials() {
        let g = Graph::new(6).unwrap();
        let p = g.independent_set_profile();
        for (k, c) in p.iter().enumerate() {
            assert_eq!(c, &binomial(6, k as u64));
        }
    }

    #[test]
    fn down_and_up_profiles_agree() {
        for n in 0..=7 {
            assert_eq!(
                profile_u64(&core_d(n)),
                profile_u64(&core_u(n)),
                "profiles differ at n={n}"
            );
        }
    }

    #[test]
    fn degree_formula_in_down_core() {
        for n in 1..=8 {
            let core = core_d(n);
            for (u, b) in core.boxes().iter().enumerate() {
                let d = b.col - b.row;
                assert_eq!(core.graph().degree(u), d * (n - 1 - d));
            }
            // the top-right box is isolated
            let tr = core.box_index(&GridBox::new(1, n)).unwrap();
            assert_eq!(core.graph().degree(tr), 0);
        }
    }

    #[test]
    fn up_core_max_degree() {
        // the top-right box of U_n dominates: degree C(n-1, 2)
        for n in 2..=8 {
            let core = core_u(n);
            let tr = core.box_index(&GridBox::new(1, n)).unwrap();
            let want: u64 = binomial(n as u64 - 1, 2).try_into().unwrap();
            assert_eq!(core.graph().degree(tr) as u64, want);
            let max = (0..core.vertex_count())
                .map(|u| core.graph().degree(u))
                .max()
                .unwrap();
            assert_eq!(max as u64, want);
        }
    }

    #[test]
    fn isomorphism_verdicts() {
        for n in 0..=3 {
            assert!(core_d(n).graph().is_isomorphic(core_u(n).graph()).unwrap());
        }
        for n in 4..=7 {
            assert!(!core_d(n).graph().is_isomorphic(core_u(n).graph()).unwrap());
            // max degrees already separate the two graphs for n >= 4
            let dmax = core_d(n).graph().degree_sequence().pop().unwrap();
            let umax = core_u(n).graph().degree_sequence().pop().unwrap();
            assert!(umax > dmax);
        }
    }

    #[test]
    fn isomorphism_size_cap() {
        let a = Graph::new(41).unwrap();
        let b = Graph::new(41).unwrap();
        assert!(matches!(
            a.is_isomorphic(&b),
            Err(CoreError::TooLarge(41, 40))
        ));
        assert!(matches!(Graph::new(65), Err(CoreError::TooLarge(65, 64))));
    }

    #[test]
    fn reflected_grids_have_isomorphic_cores() {
        use crate::perm::{avoiders, PatternBasis};
        let b123 = PatternBasis::parse(&["123"]).unwrap();
        for n in 1..=7 {
            for q in avoiders(n, &b123) {
                let grid = BoundaryGrid::boundary_grid(&q).unwrap();
                let refl = grid.reflect();
                for variant in [CoreVariant::Down, CoreVariant::Up] {
                    let a = build_core(&grid, variant).unwrap();
                    let b = build_core(&refl, variant).unwrap();
                    assert!(
                        a.graph().is_isomorphic(b.graph()).unwrap(),
                        "{variant:?} core of bg({q}) vs reflection"
                    );
                }
            }
        }
    }

    #[test]
    fn purity_of_staircase_cores() {
        for n in 0..=7 {
            assert!(core_d(n).is_pure(), "D_{n} impure");
            assert!(core_u(n).is_pure(), "U_{n} impure");
        }
        // number of maximal independent sets in D_n is the number of
        // triangulations of an (n+1)-gon
        let mut count = 0u64;
        core_d(6)
            .graph()
            .for_each_maximal_independent_set(&mut |_| {
                count += 1;
                true
            });
        assert_eq!(count, 42);
    }

    #[test]
    fn subcore_isomorphisms() {
        let mut s = BTreeSet::new();
        s.insert(3);
        assert!(verify_subcore_isomorphism(5, &s).unwrap());
        for n in 1..=6 {
            for bits in 1u32..(1 << n) {
                let s: BTreeSet<usize> =
                    (1..=n).filter(|&i| bits >> (i - 1) & 1 == 1).collect();
                assert!(
                    verify_subcore_isomorphism(n, &s).unwrap(),
                    "subcore isomorphism fails at n={n}, S={s:?}"
                );
            }
        }
    }

    #[test]
    fn subcore_clique_counts_match() {
        // inclusion-exclusion ingredient: the strip subgraphs of D_n and U_n
        // have identical clique profiles
        for n in 1..=6 {
            for i in 1..=n {
                let (_, d) = rect_subcore(n, i, CoreVariant::Down).unwrap();
                let (_, u) = rect_subcore(n, i, CoreVariant::Up).unwrap();
                assert_eq!(d.clique_profile(), u.clique_profile());
            }
        }
    }

    #[test]
    fn subcore_intersection_clique_counts_match() {
        // the same identity over every non-empty intersection of strips
        for n in 1..=6usize {
            let dcore = core_d(n);
            let ucore = core_u(n);
            for bits in 1u32..(1 << n) {
                let s: Vec<usize> = (1..=n).filter(|&i| bits >> (i - 1) & 1 == 1).collect();
                let (lo, hi) = (s[0], *s.last().unwrap());
                let mut region = Vec::new();
                for r in 1..=lo {
                    for c in hi..=n {
                        region.push(GridBox::new(r, c));
                    }
                }
                let didx: Vec<usize> = region
                    .iter()
                    .map(|b| dcore.box_index(b).unwrap())
                    .collect();
                let uidx: Vec<usize> = region
                    .iter()
                    .map(|b| ucore.box_index(b).unwrap())
                    .collect();
                let d = dcore.graph().induced(&didx).clique_profile();
                let u = ucore.graph().induced(&uidx).clique_profile();
                assert_eq!(d, u, "n={n}, S={s:?}");
            }
        }
    }

    #[test]
    fn rho_fixed_points() {
        // rho(n,i) fixes (r,c) only when 2c = n + i
        for n in 1..=6 {
            for i in 1..=n {
                for c in i..=n {
                    let b = GridBox::new(1, c);
                    let fixed = rho(n, i, &b) == b;
                    assert_eq!(fixed, 2 * c == n + i);
                }
            }
        }
    }

    #[test]
    fn weighted_counts() {
        // summing over the number of minima recovers the Catalan numbers
        for l in 0..=10usize {
            let mut total = BigUint::zero();
            for n in 0..=l {
                total += weighted_count(&core_d(n), l - n, Inflation::Increasing);
            }
            assert_eq!(total, crate::comb::catalan(l as u64), "length {l}");
        }
        let d3 = core_d(3);
        assert_eq!(weighted_count(&d3, 0, Inflation::Increasing), BigUint::one());
        assert_eq!(weighted_count(&d3, 0, Inflation::Point), BigUint::one());
    }

    #[test]
    fn updown_staircase_profiles() {
        // UD(B_a) profiles feed the rational family later; pin the small ones
        let ud = |a: usize| {
            build_core(&BoundaryGrid::staircase(a), CoreVariant::UpDown)
                .unwrap()
                .independent_set_profile()
                .iter()
                .map(|c| u64::try_from(c).unwrap())
                .collect::<Vec<u64>>()
        };
        assert_eq!(ud(1), vec![1, 1]);
        assert_eq!(ud(2), vec![1, 3, 1]);
        assert_eq!(ud(3), vec![1, 6, 5, 1]);
        assert_eq!(ud(4), vec![1, 10, 15, 7, 1]);
    }

    #[test]
    fn updown_core_of_2143_grid() {
        let grid = BoundaryGrid::boundary_grid(&"2143".parse().unwrap()).unwrap();
        let core = build_core(&grid, CoreVariant::UpDown).unwrap();
        let p: Vec<u64> = core
            .independent_set_profile()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(p, vec![1, 7, 7]);
    }

    #[test]
    fn weighted_ind_set_validation() {
        use std::collections::BTreeMap;
        let d3 = core_d(3);
        let mut ok = BTreeMap::new();
        ok.insert(GridBox::new(1, 1), 2);
        ok.insert(GridBox::new(2, 2), 1);
        let set = WeightedIndSet::new(&d3, ok).unwrap();
        assert_eq!(set.size(), 2);
        assert_eq!(set.total_weight(), 3);
        // (1,2) and (2,3) carry the single edge of the size-3 down-core
        let mut bad = BTreeMap::new();
        bad.insert(GridBox::new(1, 2), 1);
        bad.insert(GridBox::new(2, 3), 1);
        assert_eq!(
            WeightedIndSet::new(&d3, bad),
            Err(CoreError::NotIndependent(1, 2, 2, 3))
        );
        let mut zero = BTreeMap::new();
        zero.insert(GridBox::new(1, 1), 0);
        assert_eq!(WeightedIndSet::new(&d3, zero), Err(CoreError::ZeroWeight));
        let mut outside = BTreeMap::new();
        outside.insert(GridBox::new(3, 1), 1);
        assert_eq!(
            WeightedIndSet::new(&d3, outside),
            Err(CoreError::NotAVertex(3, 1))
        );
    }

    #[test]
    fn edge_text_and_json() {
        let d3 = core_d(3);
        assert_eq!(d3.to_edge_text(), "1 4\n");
        let v = d3.to_json();
        assert_eq!(v["variant"], "down");
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    }
}
