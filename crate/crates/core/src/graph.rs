//! Undirected simple graphs with 1-based vertex labels, plus the exact
//! independent-set, clique and domination machinery the rest of the crate
//! builds on.
//!
//! Exhaustive searches run on `u64` bitmasks, so they are limited to at most
//! 64 vertices and additionally to a configurable cap (see [`ExactSearch`]).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default vertex cap for exhaustive maximum-independent-set searches.
pub const DEFAULT_MIS_CAP: usize = 24;

/// A set of 1-based vertex labels.
///
/// Ordering is lexicographic on the sorted label sequence, which is the
/// tie-breaking order used for every witness in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub(crate) fn from_mask(mask: u64) -> VertexSet {
        let mut out = VertexSet::new();
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out.insert(b + 1);
            m &= m - 1;
        }
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Undirected simple graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // adj[i - 1] holds the sorted neighbor labels of vertex i
    adj: Vec<Vec<usize>>,
    // neighbor bitmasks, only populated when n <= 64
    masks: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u - 1].insert(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[v - 1].insert(u);
        }
        let adj: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let masks = if n <= 64 {
            adj.iter()
                .map(|nb| nb.iter().fold(0u64, |m, &v| m | 1u64 << (v - 1)))
                .collect()
        } else {
            Vec::new()
        };
        Ok(Graph { n, adj, masks })
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nb) in self.adj.iter().enumerate() {
            let u = i + 1;
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u) && self.adj[u - 1].binary_search(&v).is_ok()
    }

    pub fn degree(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        Ok(self.adj[i - 1].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbor labels of `i`. Panics if `i` is out of range.
    pub(crate) fn nbrs(&self, i: usize) -> &[usize] {
        &self.adj[i - 1]
    }

    /// Bitmask of `N(i)` (bit `j - 1` for neighbor `j`). Requires `n <= 64`.
    pub(crate) fn nbr_mask(&self, i: usize) -> u64 {
        self.masks[i - 1]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            Err(Error::VertexOutOfRange { vertex: i, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Open neighborhood `N(i)`.
    pub fn neighbors(&self, i: usize) -> Result<VertexSet> {
        self.check_vertex(i)?;
        Ok(self.adj[i - 1].iter().copied().collect())
    }

    /// `N(K) ∪ K`, where `N(K)` is the union of the neighborhoods of `K` minus `K`.
    pub fn closed_neighborhood_of_set(&self, k: &VertexSet) -> Result<VertexSet> {
        self.check_set(k)?;
        let mut out = k.clone();
        for v in k.iter() {
            for &u in self.nbrs(v) {
                out.insert(u);
            }
        }
        Ok(out)
    }

    /// Open neighborhood of a set: `N(K) = ∪ N(i) \ K`.
    pub fn neighborhood_of_set(&self, k: &VertexSet) -> Result<VertexSet> {
        Ok(self.closed_neighborhood_of_set(k)?.difference(k))
    }

    /// Subgraph induced on `s`, relabelled onto `1..=|s|` in ascending order.
    /// The returned mapping sends new label `j` to `mapping[j - 1]` in `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let mapping = s.to_vec();
        let mut new_label = vec![0usize; self.n + 1];
        for (k, &v) in mapping.iter().enumerate() {
            new_label[v] = k + 1;
        }
        let mut edges = Vec::new();
        for &u in &mapping {
            for &v in self.nbrs(u) {
                if v > u && new_label[v] != 0 {
                    edges.push((new_label[u], new_label[v]));
                }
            }
        }
        Ok((Graph::new(mapping.len(), edges)?, mapping))
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| self.nbrs(v).iter().all(|&u| !s.contains(u))))
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        let members = s.to_vec();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff no edge joins the two cliques. Both must be cliques and disjoint.
    pub fn are_cliques_independent(&self, c1: &VertexSet, c2: &VertexSet) -> Result<bool> {
        for c in [c1, c2] {
            if !self.is_clique(c)? {
                return Err(Error::NotClique(c.to_string()));
            }
        }
        if !c1.is_disjoint(c2) {
            return Err(Error::NotDisjoint(c1.to_string(), c2.to_string()));
        }
        Ok(c1
            .iter()
            .all(|u| self.nbrs(u).iter().all(|&v| !c2.contains(v))))
    }

    /// True iff every vertex outside `d` has at least `k` neighbors in `d`.
    pub fn is_k_dominating(&self, d: &VertexSet, k: usize) -> Result<bool> {
        if k < 1 {
            return Err(Error::InvalidDominationOrder(k));
        }
        self.check_set(d)?;
        Ok(self
            .vertices()
            .filter(|&v| !d.contains(v))
            .all(|v| self.nbrs(v).iter().filter(|&&u| d.contains(u)).count() >= k))
    }

    /// 0/1 indicator vector of `s`, indexed by `label - 1`.
    pub fn characteristic_vector(&self, s: &VertexSet) -> Result<Vec<f64>> {
        self.check_set(s)?;
        Ok(self
            .vertices()
            .map(|v| if s.contains(v) { 1.0 } else { 0.0 })
            .collect())
    }

    /// Connected components of the subgraph induced on `s`, each as a vertex
    /// set in the original labels, ordered by smallest member.
    pub fn components_within(&self, s: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(s)?;
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &v in self.nbrs(u) {
                    if s.contains(v) && seen.insert(v) {
                        stack.push(v);
                    }
                }
            }
            comps.push(comp);
        }
        Ok(comps)
    }
}

/// Exhaustive branch-and-bound searches, refusing graphs above `cap` vertices.
#[derive(Clone, Copy, Debug)]
pub struct ExactSearch {
    pub cap: usize,
}

impl Default for ExactSearch {
    fn default() -> Self {
        ExactSearch { cap: DEFAULT_MIS_CAP }
    }
}

impl ExactSearch {
    pub fn with_cap(cap: usize) -> Self {
        ExactSearch { cap }
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if g.n() > self.cap.min(64) {
            Err(Error::TooLarge { n: g.n(), cap: self.cap.min(64) })
        } else {
            Ok(())
        }
    }

    /// Independence number and every maximum independent set, sorted
    /// lexicographically.
    pub fn alpha(&self, g: &Graph) -> Result<(usize, Vec<VertexSet>)> {
        self.check_size(g)?;
        let mut best = 0usize;
        let mut found = Vec::new();
        all_mis(g, g.full_mask(), 0, 0, &mut best, &mut found);
        let mut sets: Vec<VertexSet> = found.into_iter().map(VertexSet::from_mask).collect();
        sets.sort();
        Ok((best, sets))
    }

    /// Maximum total weight of an independent set, with the lexicographically
    /// smallest optimal set as witness.
    pub fn weighted_alpha(&self, g: &Graph, weights: &[f64]) -> Result<(f64, VertexSet)> {
        self.check_size(g)?;
        if weights.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), actual: weights.len() });
        }
        for (i, &w) in weights.iter().enumerate() {
            if !(w >= 0.0 && w.is_finite()) {
                return Err(Error::InvalidWeight { vertex: i + 1, weight: w });
            }
        }
        let mut best = WeightedBest { value: -1.0, set: VertexSet::new() };
        weighted_mis(g, weights, g.full_mask(), 0, 0.0, &mut best);
        Ok((best.value.max(0.0), best.set))
    }

    /// Clique number; 0 for the empty graph.
    pub fn omega(&self, g: &Graph) -> Result<usize> {
        self.check_size(g)?;
        let mut best = 0usize;
        max_clique(g, g.full_mask(), 0, &mut best);
        Ok(best)
    }

    /// The maximum independent set when it is unique.
    pub fn unique_maximum_independent_set(&self, g: &Graph) -> Result<Option<VertexSet>> {
        let (_, mut sets) = self.alpha(g)?;
        Ok(if sets.len() == 1 { sets.pop() } else { None })
    }
}

pub fn alpha(g: &Graph) -> Result<(usize, Vec<VertexSet>)> {
    ExactSearch::default().alpha(g)
}

pub fn weighted_alpha(g: &Graph, weights: &[f64]) -> Result<(f64, VertexSet)> {
    ExactSearch::default().weighted_alpha(g, weights)
}

pub fn omega(g: &Graph) -> Result<usize> {
    ExactSearch::default().omega(g)
}

pub fn has_unique_maximum_independent_set(g: &Graph) -> Result<Option<VertexSet>> {
    ExactSearch::default().unique_maximum_independent_set(g)
}

fn all_mis(g: &Graph, cand: u64, cur: u64, size: usize, best: &mut usize, out: &mut Vec<u64>) {
    if cand == 0 {
        if size > *best {
            *best = size;
            out.clear();
            out.push(cur);
        } else if size == *best {
            out.push(cur);
        }
        return;
    }
    if size + (cand.count_ones() as usize) < *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    let nb = g.nbr_mask(v + 1);
    all_mis(g, cand & !bit & !nb, cur | bit, size + 1, best, out);
    // a vertex with no remaining candidate neighbor belongs to every maximum extension
    if nb & cand != 0 {
        all_mis(g, cand & !bit, cur, size, best, out);
    }
}

struct WeightedBest {
    value: f64,
    set: VertexSet,
}

fn weighted_mis(g: &Graph, w: &[f64], cand: u64, cur: u64, value: f64, best: &mut WeightedBest) {
    if cand == 0 {
        let eps = 1e-12 * best.value.abs().max(1.0);
        if value > best.value + eps {
            best.value = value;
            best.set = VertexSet::from_mask(cur);
        } else if value >= best.value - eps {
            let set = VertexSet::from_mask(cur);
            if set < best.set {
                best.set = set;
            }
        }
        return;
    }
    let mut bound = value;
    let mut m = cand;
    while m != 0 {
        bound += w[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    if bound < best.value - 1e-12 * best.value.abs().max(1.0) {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    let nb = g.nbr_mask(v + 1);
    weighted_mis(g, w, cand & !bit & !nb, cur | bit, value + w[v], best);
    if nb & cand != 0 || w[v] == 0.0 {
        weighted_mis(g, w, cand & !bit, cur, value, best);
    }
}

fn max_clique(g: &Graph, cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + (cand.count_ones() as usize) <= *best {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let bit = 1u64 << v;
    max_clique(g, cand & g.nbr_mask(v + 1), size + 1, best);
    max_clique(g, cand & !bit, size, best);
}
