//! Quantified property checks over the suite. Each returns the list of
//! violations it found, so the same code backs the per-property tests and
//! the aggregated acceptance criterion.

use graph_lcp::graph::ExactSearch;
use graph_lcp::ics::{build_ics, evaluate_ics};
use graph_lcp::lcp::{discounted_closed_neighborhood, is_stationary_point, verify_ics, verify_solution};
use graph_lcp::thresholds::gamma;
use graph_lcp::{fixtures, CliqueCover, Graph, LcpInstance, SolutionCensus, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{census, suite, Entry, CMP, TOL};

fn valid(inst: &LcpInstance, x: &[f64]) -> bool {
    verify_solution(inst, x).unwrap().is_valid()
}

fn each_census(mut f: impl FnMut(&Entry, &SolutionCensus, &mut Vec<String>)) -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        for c in e.censuses.iter().chain(&e.eta_censuses) {
            f(e, c, &mut out);
        }
    }
    out
}

fn subsets(s: &VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
    let items = s.to_vec();
    (0u32..1 << items.len()).map(move |mask| {
        items.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect()
    })
}

/// Census bookkeeping: members verify, maxima are ordered, witnesses exist.
pub fn census_is_consistent() -> Vec<String> {
    each_census(|e, c, out| {
        let inst = c.instance();
        for sv in c.solutions() {
            if !valid(inst, sv.x()) {
                out.push(format!("{} δ={}: listed {:?} fails", e.name, inst.delta(), sv.x()));
            }
        }
        let Some(sol) = c.max_sol() else {
            out.push(format!("{} δ={}: no maxSOL", e.name, inst.delta()));
            return;
        };
        // integer solutions are ICSs, so an ICS maximum exists whenever they do
        let best_int = c.integer_solutions().iter().map(VertexSet::len).max();
        match (c.max_ics(), best_int) {
            (None, Some(_)) => out.push(format!("{} δ={}: integer solutions but no maxICS", e.name, inst.delta())),
            (Some(ics), b) if sol.value + CMP < ics.value || ics.value + CMP < b.unwrap_or(0) as f64 => {
                out.push(format!("{} δ={}: maxSOL {} maxICS {} integer {b:?}", e.name, inst.delta(), sol.value, ics.value));
            }
            _ => {}
        }
    })
}

/// The zero vector is never a solution.
pub fn zero_is_never_a_solution() -> Vec<String> {
    each_census(|e, c, out| {
        let inst = c.instance();
        if inst.n() > 0 && valid(inst, &vec![0.0; inst.n()]) {
            out.push(format!("{} δ={}: zero verifies", e.name, inst.delta()));
        }
        if inst.n() > 0 && c.solutions().iter().any(|s| s.support().is_empty()) {
            out.push(format!("{} δ={}: census lists zero", e.name, inst.delta()));
        }
    })
}

/// `C(x) >= x` and `x ∈ [0,1]^n` on every solution.
pub fn solutions_are_bounded() -> Vec<String> {
    each_census(|e, c, out| {
        for sv in c.solutions() {
            for (i, (&x, &cx)) in sv.x().iter().zip(sv.c_of_x()).enumerate() {
                if cx < x - TOL {
                    out.push(format!("{} δ={}: C_{} = {cx} < x = {x}", e.name, c.instance().delta(), i + 1));
                }
                if !(-TOL..=1.0 + TOL).contains(&x) {
                    out.push(format!("{} δ={}: x_{} = {x} outside [0,1]", e.name, c.instance().delta(), i + 1));
                }
            }
        }
    })
}

/// Every support is `⌈1/δ⌉`-dominating.
pub fn supports_are_dominating() -> Vec<String> {
    each_census(|e, c, out| {
        let k = c.instance().domination_order();
        for sv in c.solutions() {
            if !e.graph.is_k_dominating(sv.support(), k).unwrap() {
                out.push(format!("{} δ={}: support {} not {k}-dominating", e.name, c.instance().delta(), sv.support()));
            }
        }
    })
}

/// Restricting a solution to its support solves the induced problem with
/// full support.
pub fn restriction_to_support_solves() -> Vec<String> {
    each_census(|e, c, out| {
        let d = c.instance().delta();
        for sv in c.solutions() {
            let (h, map) = e.graph.induced_subgraph(sv.support()).unwrap();
            let x: Vec<f64> = map.iter().map(|&v| sv.x()[v - 1]).collect();
            let inst = LcpInstance::new(h, d).unwrap();
            if !valid(&inst, &x) || x.iter().any(|&v| v <= TOL) {
                out.push(format!("{} δ={d}: restriction to {} fails", e.name, sv.support()));
            }
        }
    })
}

/// Solutions of a disjoint union are exactly the concatenations.
pub fn disjoint_unions_are_products() -> Vec<String> {
    let mut out = Vec::new();
    let parts: Vec<(String, Graph)> = suite()
        .iter()
        .filter(|e| (1..=5).contains(&e.graph.n()))
        .map(|e| (e.name.clone(), e.graph.clone()))
        .collect();
    for pair in parts.windows(2).step_by(2) {
        let ((n1, g1), (n2, g2)) = (&pair[0], &pair[1]);
        let u = fixtures::disjoint_union(g1, g2);
        for &d in &[0.3, 0.62, 1.0, 1.5] {
            let (c1, c2, cu) = (census(g1, d), census(g2, d), census(&u, d));
            let inst = cu.instance();
            for a in c1.solutions() {
                for b in c2.solutions() {
                    let x: Vec<f64> = a.x().iter().chain(b.x()).copied().collect();
                    if !valid(inst, &x) {
                        out.push(format!("{n1} + {n2} δ={d}: concatenation fails"));
                    }
                }
            }
            let inst1 = c1.instance();
            let inst2 = c2.instance();
            for s in cu.solutions() {
                let (l, r) = s.x().split_at(g1.n());
                if !valid(inst1, l) || !valid(inst2, r) {
                    out.push(format!("{n1} + {n2} δ={d}: restriction of {:?} fails", s.x()));
                }
            }
            let faces = !(c1.singular_faces().is_empty() && c2.singular_faces().is_empty() && cu.singular_faces().is_empty());
            if !faces && cu.solutions().len() != c1.solutions().len() * c2.solutions().len() {
                out.push(format!("{n1} + {n2} δ={d}: {} solutions, expected {} x {}",
                    cu.solutions().len(), c1.solutions().len(), c2.solutions().len()));
            }
        }
    }
    out
}

/// Binary vectors solve the problem exactly when they indicate a
/// `⌈1/δ⌉`-dominating independent set, and the census agrees.
pub fn binary_solutions_are_dominating_independent_sets() -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        let g = &e.graph;
        for &d in &[0.3, 0.5, 0.9, 1.0, 1.5] {
            let inst = LcpInstance::new(g.clone(), d).unwrap();
            let k = inst.domination_order();
            for s in subsets(&g.vertex_set()) {
                let x = g.characteristic_vector(&s).unwrap();
                let expected = g.is_independent_set(&s).unwrap() && g.is_k_dominating(&s, k).unwrap();
                if valid(&inst, &x) != expected {
                    out.push(format!("{} δ={d}: indicator of {s} verifies = {}", e.name, !expected));
                }
            }
        }
        for c in &e.censuses {
            if c.binary_members() != c.integer_solutions() {
                out.push(format!("{} δ={}: binary members differ from integer solutions", e.name, c.instance().delta()));
            }
        }
    }
    out
}

/// `‖x‖₁ <= |S|` for every `⌈1/δ⌉`-dominating independent `S ⊆ σ(x)`.
pub fn l1_bounded_by_dominating_subsets() -> Vec<String> {
    each_census(|e, c, out| {
        let k = c.instance().domination_order();
        for sv in c.solutions() {
            for s in subsets(sv.support()) {
                if e.graph.is_independent_set(&s).unwrap()
                    && e.graph.is_k_dominating(&s, k).unwrap()
                    && sv.l1() > s.len() as f64 + CMP
                {
                    out.push(format!("{} δ={}: l1 {} > |{s}|", e.name, c.instance().delta(), sv.l1()));
                }
            }
        }
    })
}

/// Stationary points of the potential on the orthant are the solutions.
pub fn stationarity_matches_verification() -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    each_census(|e, c, out| {
        let inst = c.instance();
        let n = inst.n();
        let mut probes: Vec<Vec<f64>> = c.solutions().iter().map(|s| s.x().to_vec()).collect();
        for s in c.solutions() {
            let mut bumped = s.x().to_vec();
            if n > 0 {
                bumped[rng.gen_range(0..n)] += 1e-3;
            }
            probes.push(bumped);
        }
        for _ in 0..10 {
            probes.push((0..n).map(|_| if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..1.2) }).collect());
        }
        for x in probes {
            if is_stationary_point(inst, &x).unwrap() != valid(inst, &x) {
                out.push(format!("{} δ={}: stationarity and verification disagree at {x:?}", e.name, inst.delta()));
            }
        }
    })
}

fn persistence_grid(d: f64) -> Vec<f64> {
    (0..10).map(|k| d + (0.999 - d) * k as f64 / 9.0).collect()
}

/// An ICS at δ < 1 keeps verifying at larger δ below 1, and off its support
/// `C_j` does not decrease.
pub fn ics_persists_as_delta_grows() -> Vec<String> {
    each_census(|e, c, out| {
        let d = c.instance().delta();
        if d >= 1.0 {
            return;
        }
        for sv in c.ics_solutions() {
            let cover = CliqueCover::from_support(&e.graph, sv.support()).unwrap().unwrap();
            let mut last: Option<Vec<f64>> = None;
            for dd in persistence_grid(d) {
                let inst = LcpInstance::new(e.graph.clone(), dd).unwrap();
                let x = evaluate_ics(&cover, &inst).unwrap();
                if !verify_ics(&inst, x.x()).unwrap() {
                    out.push(format!("{} ICS on {} valid at {d} but not at {dd}", e.name, sv.support()));
                }
                let cx = discounted_closed_neighborhood(&inst, x.x()).unwrap();
                if let Some(prev) = &last {
                    for j in e.graph.vertices().filter(|j| !sv.support().contains(*j)) {
                        if cx[j - 1] < prev[j - 1] - 1e-12 {
                            out.push(format!("{} ICS on {}: C_{j} decreased at {dd}", e.name, sv.support()));
                        }
                    }
                }
                last = Some(cx);
            }
        }
    })
}

/// Every ICS has ℓ1 at least that of every full-support solution.
pub fn ics_beats_full_support() -> Vec<String> {
    each_census(|e, c, out| {
        let n = c.instance().n();
        for full in c.solutions().iter().filter(|s| s.support().len() == n) {
            for ics in c.ics_solutions() {
                if ics.l1() + CMP < full.l1() {
                    out.push(format!("{} δ={}: ICS {} has l1 {} < full support {}",
                        e.name, c.instance().delta(), ics.support(), ics.l1(), full.l1()));
                }
            }
        }
    })
}

/// On `[η, 1)`, deleting a vertex never increases the ICS maximum.
pub fn max_ics_monotone_under_deletion() -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        for c in &e.eta_censuses {
            let d = c.instance().delta();
            let big = c.max_ics().unwrap().value;
            for v in e.graph.vertices() {
                let keep: VertexSet = e.graph.vertices().filter(|&u| u != v).collect();
                let (h, _) = e.graph.induced_subgraph(&keep).unwrap();
                if let Some(small) = census(&h, d).max_ics() {
                    if small.value > big + CMP {
                        out.push(format!("{} δ={d}: deleting {v} raises maxICS {big} to {}", e.name, small.value));
                    }
                }
            }
        }
    }
    out
}

/// On `[η, 1)`, ICSs are optimal among all solutions with an α-clique witness.
pub fn max_ics_is_optimal_above_eta() -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        let alpha = e.thresholds.alpha;
        for c in &e.eta_censuses {
            let d = c.instance().delta();
            let (sol, ics) = (c.max_sol().unwrap().value, c.max_ics().unwrap().value);
            if (sol - ics).abs() > CMP {
                out.push(format!("{} δ={d}: maxICS {ics} != maxSOL {sol}", e.name));
            }
            let witness = c.ics_solutions().any(|s| {
                (s.l1() - ics).abs() <= CMP && CliqueCover::from_support(&e.graph, s.support()).unwrap().unwrap().len() == alpha
            });
            if !witness {
                out.push(format!("{} δ={d}: no maximizing ICS with {alpha} cliques", e.name));
            }
        }
    }
    out
}

/// With a unique maximum independent set `S`, `1_S` is a maximizer on `[η, 1)`.
pub fn unique_mis_is_optimal() -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        let Some(s) = ExactSearch::default().unique_maximum_independent_set(&e.graph).unwrap() else {
            continue;
        };
        let ind = e.graph.characteristic_vector(&s).unwrap();
        for c in &e.eta_censuses {
            let d = c.instance().delta();
            if !c.solutions().iter().any(|sv| sv.x() == ind.as_slice()) {
                out.push(format!("{} δ={d}: 1_{s} missing from census", e.name));
            }
            let best = c.max_sol().unwrap().value;
            if (best - s.len() as f64).abs() > CMP {
                out.push(format!("{} δ={d}: maxSOL {best} != |{s}|", e.name));
            }
            if let Some(w) = c.max_sol_witness() {
                if w.x() != ind.as_slice() && (w.l1() - s.len() as f64).abs() > CMP {
                    out.push(format!("{} δ={d}: witness {:?} is not 1_{s}", e.name, w.x()));
                }
            }
        }
    }
    out
}

/// Structural guarantees of the anchor construction, and validity of its
/// output on `[γ + tol, 1)` with α cliques.
pub fn construction_invariants() -> Vec<String> {
    let mut out = Vec::new();
    for e in suite() {
        let g = &e.graph;
        let (cover, trace) = build_ics(g, None).unwrap();
        let name = &e.name;
        let cliques = cover.cliques();
        for (a, c) in cliques.iter().enumerate() {
            if !g.is_clique(c).unwrap() {
                out.push(format!("{name}: {c} is not a clique"));
            }
            for d in &cliques[a + 1..] {
                if !g.are_cliques_independent(c, d).unwrap() {
                    out.push(format!("{name}: {c} and {d} are not independent"));
                }
            }
        }
        let mut residual = g.vertex_set();
        let mut removed = VertexSet::new();
        let mut boundaries = VertexSet::new();
        for step in &trace.steps {
            if !step.clique.contains(step.anchor) {
                out.push(format!("{name}: anchor {} outside its clique", step.anchor));
            }
            // closed neighbourhood of the clique in the residual graph meets S only at the anchor
            let closed = g.closed_neighborhood_of_set(&step.clique).unwrap().intersection(&residual);
            if closed.intersection(&trace.mis) != VertexSet::from([step.anchor]) {
                out.push(format!("{name}: closed neighbourhood of {} meets S in {}", step.clique, closed.intersection(&trace.mis)));
            }
            if !step.removed.is_disjoint(&removed) {
                out.push(format!("{name}: step {} removes vertices twice", step.anchor));
            }
            if !step.boundary.is_disjoint(&boundaries) || cliques.iter().any(|c| !c.is_disjoint(&step.boundary)) {
                out.push(format!("{name}: boundary {} overlaps", step.boundary));
            }
            boundaries = boundaries.union(&step.boundary);
            removed = removed.union(&step.removed);
            residual = residual.difference(&step.removed);
            if step.remaining_vertices != residual || !step.remaining_mis.is_subset(&residual) {
                out.push(format!("{name}: residual bookkeeping off after anchor {}", step.anchor));
            }
            let (h, _) = g.induced_subgraph(&residual).unwrap();
            if ExactSearch::default().alpha(&h).unwrap().0 != step.remaining_mis.len() {
                out.push(format!("{name}: residual independent set not maximum after anchor {}", step.anchor));
            }
        }
        if removed != g.vertex_set() {
            out.push(format!("{name}: removed sets cover {removed}, not V"));
        }
        if cover.len() != e.thresholds.alpha {
            out.push(format!("{name}: {} cliques, alpha = {}", cover.len(), e.thresholds.alpha));
        }
        let Ok(gm) = gamma(g) else { continue };
        let lo = gm + TOL;
        for d in (0..5).map(|k| lo + (0.999 - lo) * k as f64 / 4.0) {
            let inst = LcpInstance::new(g.clone(), d).unwrap();
            if !verify_ics(&inst, evaluate_ics(&cover, &inst).unwrap().x()).unwrap() {
                out.push(format!("{name}: constructed ICS fails at δ={d}"));
            }
        }
    }
    out
}

pub type Check = fn() -> Vec<String>;

/// Every named check, in reporting order.
pub fn all() -> Vec<(&'static str, Check)> {
    vec![
        ("census members verify", census_is_consistent),
        ("zero is never a solution", zero_is_never_a_solution),
        ("C(x) >= x and x in [0,1]^n", solutions_are_bounded),
        ("supports are ceil(1/delta)-dominating", supports_are_dominating),
        ("restriction to the support solves", restriction_to_support_solves),
        ("disjoint unions are products", disjoint_unions_are_products),
        ("binary solutions = dominating independent sets", binary_solutions_are_dominating_independent_sets),
        ("l1 <= |S| for dominating independent S in support", l1_bounded_by_dominating_subsets),
        ("stationary points = solutions", stationarity_matches_verification),
        ("ICS persists as delta grows", ics_persists_as_delta_grows),
        ("ICS beats full-support solutions", ics_beats_full_support),
        ("maxICS monotone under vertex deletion", max_ics_monotone_under_deletion),
        ("maxICS = maxSOL above eta", max_ics_is_optimal_above_eta),
        ("unique MIS indicator is optimal", unique_mis_is_optimal),
        ("anchor construction invariants", construction_invariants),
    ]
}
