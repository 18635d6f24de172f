//! Construction of independent clique solutions from a maximum independent set.
//!
//! The construction anchors one clique on each vertex `i` of a maximum
//! independent set `S`. Let `L` be the vertices with exactly one neighbor in
//! `S`, computed once against the original graph. Anchors are processed in
//! ascending label order against a shrinking residual graph `Ḡ`:
//!
//! * `C_i = N_Ḡ(i) ∩ L`, `C̄_i = C_i ∪ {i}`, `Q_i = N_Ḡ(C̄_i)`;
//! * every vertex of `C̄_i` gets `1 / (1 + (|C̄_i| − 1)δ)`;
//! * `C̄_i ∪ Q_i` is removed from `Ḡ` and `i` from the residual set `S̄`.
//!
//! The result does not depend on δ, so it is stored structurally as a
//! [`CliqueCover`] and evaluated at any δ afterwards.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{ExactSearch, Graph, VertexSet};
use crate::lcp::{candidate_ics, verify_ics, LcpInstance, SolutionVector};
use crate::thresholds::gamma;

/// One pass of the anchor loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IcsStep {
    pub anchor: usize,
    /// `C̄_i`
    pub clique: VertexSet,
    /// `Q_i = N_Ḡ(C̄_i)`
    pub boundary: VertexSet,
    /// `C̄_i ∪ Q_i`
    pub removed: VertexSet,
    /// residual vertex set after this step
    pub remaining_vertices: VertexSet,
    /// residual independent set after this step
    pub remaining_mis: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IcsTrace {
    pub mis: VertexSet,
    /// vertices with exactly one neighbor in the independent set
    pub single_neighbor: VertexSet,
    pub steps: Vec<IcsStep>,
    /// clique size per vertex (`label - 1`), 0 off the support
    pub clique_sizes: Vec<usize>,
}

impl IcsTrace {
    /// The constructed vector at a given δ.
    pub fn x_at(&self, delta: f64) -> Vec<f64> {
        self.clique_sizes
            .iter()
            .map(|&s| if s == 0 { 0.0 } else { 1.0 / (1.0 + (s as f64 - 1.0) * delta) })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace JSON is serializable")
    }

    /// Human-readable iteration log.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "maximum independent set S = {}", self.mis);
        let _ = writeln!(out, "L (one neighbor in S)     = {}", self.single_neighbor);
        for (k, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "step {}: anchor {}  clique {}  Q {}  removed {}  remaining V {}  remaining S {}",
                k + 1,
                s.anchor,
                s.clique,
                s.boundary,
                s.removed,
                s.remaining_vertices,
                s.remaining_mis
            );
        }
        out
    }
}

/// Runs the anchor construction. With `mis = None` the lexicographically
/// smallest maximum independent set is used.
pub fn build_ics(g: &Graph, mis: Option<&VertexSet>) -> Result<(CliqueCover, IcsTrace)> {
    let search = ExactSearch::default();
    let (alpha, all) = search.alpha(g)?;
    let s = match mis {
        Some(s) => {
            g.check_set(s)?;
            if s.len() != alpha || !g.is_independent_set(s)? {
                return Err(Error::NotMaximumIndependentSet(s.to_string()));
            }
            s.clone()
        }
        None => all.into_iter().next().unwrap_or_default(),
    };

    let single_neighbor: VertexSet = g
        .vertices()
        .filter(|&v| g.nbrs(v).iter().filter(|&&u| s.contains(u)).count() == 1)
        .collect();

    let mut remaining = g.vertex_set();
    let mut remaining_mis = s.clone();
    let mut steps = Vec::with_capacity(s.len());
    let mut cliques = Vec::with_capacity(s.len());
    let mut anchors = Vec::with_capacity(s.len());

    for anchor in s.iter() {
        let residual_nbrs = |v: usize| g.nbrs(v).iter().copied().filter(|&u| remaining.contains(u));
        let mut clique: VertexSet = residual_nbrs(anchor).filter(|&u| single_neighbor.contains(u)).collect();
        clique.insert(anchor);
        let boundary: VertexSet = clique
            .iter()
            .flat_map(residual_nbrs)
            .filter(|&u| !clique.contains(u))
            .collect();
        let removed = clique.union(&boundary);
        remaining = remaining.difference(&removed);
        remaining_mis.remove(anchor);
        steps.push(IcsStep {
            anchor,
            clique: clique.clone(),
            boundary,
            removed,
            remaining_vertices: remaining.clone(),
            remaining_mis: remaining_mis.clone(),
        });
        cliques.push(clique);
        anchors.push(anchor);
    }

    let cover = CliqueCover::new(g, cliques, anchors)?;
    let clique_sizes = cover.clique_size_by_vertex(g.n());
    Ok((cover, IcsTrace { mis: s, single_neighbor, steps, clique_sizes }))
}

/// The candidate vector of `cover` at the instance's δ. Verification is a
/// separate step (see [`crate::lcp::verify_ics`]).
pub fn evaluate_ics(cover: &CliqueCover, inst: &LcpInstance) -> Result<SolutionVector> {
    candidate_ics(inst, cover)
}

/// True iff the cover's candidate vector verifies at every `δ' >= δ` in
/// `deltas_above`. The cover must already verify at the instance's δ, and
/// every listed value must be below 1. Entries below δ are ignored.
pub fn persistence_check(cover: &CliqueCover, inst: &LcpInstance, deltas_above: &[f64]) -> Result<bool> {
    if let Some(&d) = deltas_above.iter().find(|&&d| d >= 1.0) {
        return Err(Error::DeltaOutsideUnitInterval(d));
    }
    let base = evaluate_ics(cover, inst)?;
    if !verify_ics(inst, base.x())? {
        return Err(Error::Precondition(format!(
            "cover does not verify at delta = {}",
            inst.delta()
        )));
    }
    for &d in deltas_above.iter().filter(|&&d| d >= inst.delta()) {
        let at = inst.at_delta(d)?;
        if !verify_ics(&at, evaluate_ics(cover, &at)?.x())? {
            return Ok(false);
        }
    }
    Ok(true)
}

const CROSSOVER_TOL: f64 = 1e-13;

/// Bisects for the smallest δ in `[lo, hi]` at which the cover's vector
/// verifies at tolerance `1e-13`. The cover must fail at `lo` and verify at
/// `hi`. Round-off keeps a zero tolerance from working.
pub fn validity_crossover(g: &Graph, cover: &CliqueCover, lo: f64, hi: f64) -> Result<f64> {
    let verifies = |d: f64| -> Result<bool> {
        let inst = LcpInstance::new(g.clone(), d)?.with_tol(CROSSOVER_TOL)?;
        verify_ics(&inst, evaluate_ics(cover, &inst)?.x())
    };
    if !(lo < hi) || verifies(lo)? || !verifies(hi)? {
        return Err(Error::Precondition(format!(
            "cover must fail at {lo} and verify at {hi}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if verifies(mid)? {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(b)
}

/// Zero-extends the cover's vector to `g_plus` (which adds vertex `n + 1` to
/// `g`) and verifies it there. Returns a precondition error, distinct from a
/// `false` verdict, when the extension hypotheses do not hold: the new vertex
/// is fully joined to some clique of the cover, touches a different clique,
/// and `δ ∈ [γ(g_plus), 1)`. `inst` is the instance on `g_plus`.
pub fn supergraph_extension_check(
    g: &Graph,
    g_plus: &Graph,
    cover: &CliqueCover,
    inst: &LcpInstance,
) -> Result<bool> {
    let n = g.n();
    if g_plus.n() != n + 1 {
        return Err(Error::Precondition(format!(
            "supergraph has {} vertices, expected {}",
            g_plus.n(),
            n + 1
        )));
    }
    if inst.graph() != g_plus {
        return Err(Error::Precondition("instance is not defined on the supergraph".into()));
    }
    let (restricted, _) = g_plus.induced_subgraph(&g.vertex_set())?;
    if &restricted != g {
        return Err(Error::Precondition("supergraph does not restrict to the graph".into()));
    }
    cover.validate(g)?;
    let new = n + 1;
    let nbrs = g_plus.neighbors(new)?;
    let full = cover.cliques().iter().position(|c| c.is_subset(&nbrs));
    let Some(full) = full else {
        return Err(Error::Precondition(format!("vertex {new} is not fully joined to any clique")));
    };
    let touches_other = cover
        .cliques()
        .iter()
        .enumerate()
        .any(|(k, c)| k != full && !c.is_disjoint(&nbrs));
    if !touches_other {
        return Err(Error::Precondition(format!(
            "vertex {new} is adjacent to no clique besides {}",
            cover.cliques()[full]
        )));
    }
    let d = inst.delta();
    let lower = gamma(g_plus)?;
    if d < lower - inst.tol() || d >= 1.0 {
        return Err(Error::Precondition(format!("delta {d} is outside [{lower}, 1)")));
    }
    let base = LcpInstance::new(g.clone(), d)?.with_tol(inst.tol())?;
    let mut x = evaluate_ics(cover, &base)?.x().to_vec();
    x.push(0.0);
    verify_ics(inst, &x)
}
