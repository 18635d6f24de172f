//! Exhaustive solution census by support enumeration.
//!
//! On a fixed support `S` the complementarity conditions reduce to the linear
//! system `(I + δA)[S,S] x_S = 1` together with `C_i(x) >= 1` off `S`. Every
//! support is visited in canonical order (ascending size, then
//! lexicographically). Nonsingular systems give at most one candidate;
//! singular ones describe a polyhedral face which is explored with the small
//! simplex in [`crate::simplex`], recording every vertex it visits.

use std::collections::HashSet;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{ExactSearch, Graph, VertexSet};
use crate::lcp::{support_is_clique_union, verify_ics, verify_solution, LcpInstance, SolutionRecord, SolutionVector};
use crate::simplex::{maximize, LpOutcome, Row, RowKind};
use crate::thresholds::ThresholdReport;

pub const DEFAULT_CENSUS_CAP: usize = 20;
/// Coordinates are rounded to this grid when deduplicating solutions.
pub const DEDUP_GRID: f64 = 1e-7;
const SINGULAR_PIVOT: f64 = 1e-9;
const MAX_TIE: f64 = 1e-9;
/// Hard ceiling for subset enumeration, independent of the census cap.
const SUBSET_LIMIT: usize = 30;

/// Per-support outcome counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportDiagnostics {
    /// nonsingular system with a valid solution
    pub nonsingular: usize,
    /// singular system whose face holds at least one solution
    pub singular_face: usize,
    /// no solution with this exact support system
    pub infeasible: usize,
}

/// An optimum over the census: objective value and index of the witness in
/// [`SolutionCensus::solutions`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Maximum {
    pub value: f64,
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionCensus {
    instance: LcpInstance,
    weights: Vec<f64>,
    solutions: Vec<SolutionVector>,
    max_sol: Option<Maximum>,
    max_ics: Option<Maximum>,
    integer_solutions: Vec<VertexSet>,
    singular_faces: Vec<VertexSet>,
    diagnostics: SupportDiagnostics,
}

/// Enumerates every solution with the default vertex cap. `weights` defaults
/// to all ones and must be nonnegative.
pub fn enumerate_solutions(inst: &LcpInstance, weights: Option<&[f64]>) -> Result<SolutionCensus> {
    enumerate_solutions_capped(inst, weights, DEFAULT_CENSUS_CAP)
}

pub fn enumerate_solutions_capped(
    inst: &LcpInstance,
    weights: Option<&[f64]>,
    cap: usize,
) -> Result<SolutionCensus> {
    let g = inst.graph();
    let n = g.n();
    if n > cap.min(SUBSET_LIMIT) {
        return Err(Error::TooLarge { n, cap: cap.min(SUBSET_LIMIT) });
    }
    let weights = match weights {
        Some(w) => {
            if w.len() != n {
                return Err(Error::DimensionMismatch { expected: n, actual: w.len() });
            }
            if let Some(i) = w.iter().position(|&v| !(v >= 0.0 && v.is_finite())) {
                return Err(Error::InvalidWeight { vertex: i + 1, weight: w[i] });
            }
            w.to_vec()
        }
        None => vec![1.0; n],
    };

    let supports: Vec<Vec<usize>> = (0..=n).flat_map(|k| (1..=n).combinations(k)).collect();
    let results: Vec<SupportResult> = supports
        .par_iter()
        .map(|s| solve_support(inst, &weights, s))
        .collect();

    let mut diagnostics = SupportDiagnostics::default();
    let mut seen = HashSet::new();
    let mut solutions = Vec::new();
    let mut singular_faces = Vec::new();
    for (support, res) in supports.iter().zip(results) {
        match res.kind {
            SupportKind::Nonsingular => diagnostics.nonsingular += 1,
            SupportKind::SingularFace => {
                diagnostics.singular_face += 1;
                singular_faces.push(support.iter().copied().collect());
            }
            SupportKind::Infeasible => diagnostics.infeasible += 1,
        }
        for x in res.candidates {
            if seen.insert(dedup_key(&x)) {
                solutions.push(SolutionVector::new(inst, x)?);
            }
        }
    }

    let max_sol = best_of(&solutions, &weights, |_| true);
    let max_ics = best_of(&solutions, &weights, |sv| {
        support_is_clique_union(g, sv.support()).unwrap_or(false)
    });
    Ok(SolutionCensus {
        instance: inst.clone(),
        weights,
        solutions,
        max_sol,
        max_ics,
        integer_solutions: integer_solutions(inst)?,
        singular_faces,
        diagnostics,
    })
}

/// Every `⌈1/δ⌉`-dominating independent set, by subset enumeration, ordered
/// by size then lexicographically.
pub fn integer_solutions(inst: &LcpInstance) -> Result<Vec<VertexSet>> {
    let g = inst.graph();
    let n = g.n();
    if n > SUBSET_LIMIT {
        return Err(Error::TooLarge { n, cap: SUBSET_LIMIT });
    }
    let k = inst.domination_order() as u32;
    let mut out: Vec<VertexSet> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let independent = (1..=n).all(|v| mask >> (v - 1) & 1 == 0 || g.nbr_mask(v) & mask == 0);
        if !independent {
            continue;
        }
        let dominating = (1..=n).all(|v| mask >> (v - 1) & 1 == 1 || (g.nbr_mask(v) & mask).count_ones() >= k);
        if dominating {
            out.push(VertexSet::from_mask(mask));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Maximum weighted value over all solutions, with its witness.
pub fn max_sol(inst: &LcpInstance, weights: Option<&[f64]>) -> Result<(f64, SolutionVector)> {
    let census = enumerate_solutions(inst, weights)?;
    let m = census.max_sol.ok_or_else(|| Error::Precondition("census holds no solution".into()))?;
    Ok((m.value, census.solutions[m.witness].clone()))
}

/// Maximum ℓ1 norm over independent clique solutions, if any exists.
pub fn max_ics(inst: &LcpInstance) -> Result<Option<(f64, SolutionVector)>> {
    let census = enumerate_solutions(inst, None)?;
    Ok(census.max_ics.map(|m| (m.value, census.solutions[m.witness].clone())))
}

enum SupportKind {
    Nonsingular,
    SingularFace,
    Infeasible,
}

struct SupportResult {
    kind: SupportKind,
    candidates: Vec<Vec<f64>>,
}

fn solve_support(inst: &LcpInstance, weights: &[f64], support: &[usize]) -> SupportResult {
    let g = inst.graph();
    let n = g.n();
    let k = support.len();
    let delta = inst.delta();
    let tol = inst.tol();
    let mut system = vec![0.0; k * (k + 1)];
    for (r, &i) in support.iter().enumerate() {
        for (c, &j) in support.iter().enumerate() {
            system[r * (k + 1) + c] = if i == j {
                1.0
            } else if g.has_edge(i, j) {
                delta
            } else {
                0.0
            };
        }
        system[r * (k + 1) + k] = 1.0;
    }
    let infeasible = SupportResult { kind: SupportKind::Infeasible, candidates: Vec::new() };

    match gaussian_solve(&mut system, k, SINGULAR_PIVOT * (1.0 + delta * k as f64)) {
        Some(xs) => {
            if xs.iter().any(|&v| !(v > tol)) {
                return infeasible;
            }
            let mut x = vec![0.0; n];
            for (&i, &v) in support.iter().zip(&xs) {
                x[i - 1] = v;
            }
            match verify_solution(inst, &x) {
                Ok(v) if v.is_valid() => SupportResult { kind: SupportKind::Nonsingular, candidates: vec![x] },
                _ => infeasible,
            }
        }
        None => {
            let in_support: HashSet<usize> = support.iter().copied().collect();
            let mut rows = Vec::with_capacity(n);
            for &i in support {
                let coeffs = support
                    .iter()
                    .map(|&j| if i == j { 1.0 } else if g.has_edge(i, j) { delta } else { 0.0 })
                    .collect();
                rows.push(Row { coeffs, kind: RowKind::Eq, rhs: 1.0 });
            }
            for i in g.vertices().filter(|i| !in_support.contains(i)) {
                let coeffs = support.iter().map(|&j| if g.has_edge(i, j) { delta } else { 0.0 }).collect();
                rows.push(Row { coeffs, kind: RowKind::Ge, rhs: 1.0 });
            }
            let cost: Vec<f64> = support.iter().map(|&j| weights[j - 1]).collect();
            let LpOutcome::Optimal { vertices, .. } = maximize(&cost, &rows) else {
                return infeasible;
            };
            let candidates: Vec<Vec<f64>> = vertices
                .into_iter()
                .map(|y| {
                    let mut x = vec![0.0; n];
                    for (&i, v) in support.iter().zip(y) {
                        x[i - 1] = v;
                    }
                    x
                })
                .filter(|x| verify_solution(inst, x).map(|v| v.is_valid()).unwrap_or(false))
                .collect();
            if candidates.is_empty() {
                infeasible
            } else {
                SupportResult { kind: SupportKind::SingularFace, candidates }
            }
        }
    }
}

/// Solves the `k × (k+1)` augmented system in place by Gaussian elimination
/// with partial pivoting. `None` when a pivot falls below `singular`.
fn gaussian_solve(a: &mut [f64], k: usize, singular: f64) -> Option<Vec<f64>> {
    let w = k + 1;
    for col in 0..k {
        let piv = (col..k).max_by(|&r, &s| a[r * w + col].abs().total_cmp(&a[s * w + col].abs()))?;
        if a[piv * w + col].abs() < singular {
            return None;
        }
        if piv != col {
            for c in 0..w {
                a.swap(piv * w + c, col * w + c);
            }
        }
        for r in col + 1..k {
            let f = a[r * w + col] / a[col * w + col];
            if f != 0.0 {
                for c in col..w {
                    a[r * w + c] -= f * a[col * w + c];
                }
            }
        }
    }
    let mut x = vec![0.0; k];
    for r in (0..k).rev() {
        let s: f64 = (r + 1..k).map(|c| a[r * w + c] * x[c]).sum();
        x[r] = (a[r * w + k] - s) / a[r * w + r];
    }
    Some(x)
}

fn dedup_key(x: &[f64]) -> Vec<i64> {
    x.iter().map(|v| (v / DEDUP_GRID).round() as i64).collect()
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(p, q)| p.total_cmp(q))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// Largest weighted value; ties within `MAX_TIE` go to the lexicographically
/// smallest vector.
fn best_of(
    solutions: &[SolutionVector],
    weights: &[f64],
    keep: impl Fn(&SolutionVector) -> bool,
) -> Option<Maximum> {
    let mut best: Option<Maximum> = None;
    for (idx, sv) in solutions.iter().enumerate().filter(|(_, sv)| keep(sv)) {
        let value = sv.weighted_value(weights);
        best = match best {
            None => Some(Maximum { value, witness: idx }),
            Some(b) => {
                let eps = MAX_TIE * b.value.abs().max(1.0);
                if value > b.value + eps
                    || (value >= b.value - eps && lex_cmp(sv.x(), solutions[b.witness].x()).is_lt())
                {
                    Some(Maximum { value: value.max(b.value), witness: idx })
                } else {
                    Some(b)
                }
            }
        };
    }
    best.map(|b| Maximum { value: solutions[b.witness].weighted_value(weights), witness: b.witness })
}

impl SolutionCensus {
    pub fn instance(&self) -> &LcpInstance {
        &self.instance
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn solutions(&self) -> &[SolutionVector] {
        &self.solutions
    }

    pub fn max_sol(&self) -> Option<Maximum> {
        self.max_sol
    }

    pub fn max_ics(&self) -> Option<Maximum> {
        self.max_ics
    }

    pub fn max_sol_witness(&self) -> Option<&SolutionVector> {
        self.max_sol.map(|m| &self.solutions[m.witness])
    }

    pub fn max_ics_witness(&self) -> Option<&SolutionVector> {
        self.max_ics.map(|m| &self.solutions[m.witness])
    }

    pub fn integer_solutions(&self) -> &[VertexSet] {
        &self.integer_solutions
    }

    /// Supports whose system was singular and whose face holds solutions.
    /// Every point of such a face is a solution; only visited vertices are
    /// listed in [`Self::solutions`].
    pub fn singular_faces(&self) -> &[VertexSet] {
        &self.singular_faces
    }

    pub fn diagnostics(&self) -> &SupportDiagnostics {
        &self.diagnostics
    }

    /// Census members that pass the ICS check.
    pub fn ics_solutions(&self) -> impl Iterator<Item = &SolutionVector> + '_ {
        self.solutions
            .iter()
            .filter(|sv| verify_ics(&self.instance, sv.x()).unwrap_or(false))
    }

    /// Supports of the census members that are 0/1 vectors within tolerance.
    pub fn binary_members(&self) -> Vec<VertexSet> {
        let tol = self.instance.tol();
        let mut out: Vec<VertexSet> = self
            .solutions
            .iter()
            .filter(|sv| sv.x().iter().all(|&v| v.abs() <= tol || (v - 1.0).abs() <= tol))
            .map(|sv| sv.support().clone())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Whether `x` is one of the listed solutions (after grid rounding) or
    /// lies on a recorded singular face.
    pub fn covers(&self, x: &[f64]) -> bool {
        let key = dedup_key(x);
        if self.solutions.iter().any(|sv| dedup_key(sv.x()) == key) {
            return true;
        }
        let support: VertexSet = (1..=x.len()).filter(|&i| x[i - 1] > self.instance.tol()).collect();
        self.singular_faces.contains(&support)
            && verify_solution(&self.instance, x).map(|v| v.is_valid()).unwrap_or(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("census JSON is serializable")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("census JSON is serializable")
    }

    fn to_record(&self) -> CensusRecord {
        let g = self.instance.graph();
        CensusRecord {
            instance: InstanceRecord {
                n: g.n(),
                edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
                delta: self.instance.delta(),
                tol: self.instance.tol(),
                weights: self.weights.clone(),
            },
            solutions: self.solutions.iter().map(SolutionVector::record).collect(),
            max_sol: self.max_sol,
            max_ics: self.max_ics,
            integer_solutions: self.integer_solutions.clone(),
            singular_faces: self.singular_faces.clone(),
            diagnostics: self.diagnostics.clone(),
        }
    }

    pub fn from_json(src: &str) -> Result<SolutionCensus> {
        let rec: CensusRecord = serde_json::from_str(src)?;
        let i = rec.instance;
        let graph = Graph::new(i.n, i.edges.into_iter().map(|[u, v]| (u, v)))?;
        let instance = LcpInstance::new(graph.clone(), i.delta)?.with_tol(i.tol)?;
        let solutions = rec
            .solutions
            .into_iter()
            .map(|r| SolutionVector::from_record(&graph, i.tol, r))
            .collect::<Result<Vec<_>>>()?;
        for m in [rec.max_sol, rec.max_ics].into_iter().flatten() {
            if m.witness >= solutions.len() {
                return Err(Error::Precondition(format!("witness index {} out of range", m.witness)));
            }
        }
        Ok(SolutionCensus {
            instance,
            weights: i.weights,
            solutions,
            max_sol: rec.max_sol,
            max_ics: rec.max_ics,
            integer_solutions: rec.integer_solutions,
            singular_faces: rec.singular_faces,
            diagnostics: rec.diagnostics,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceRecord {
    n: usize,
    edges: Vec<[usize; 2]>,
    delta: f64,
    tol: f64,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct CensusRecord {
    instance: InstanceRecord,
    solutions: Vec<SolutionRecord>,
    max_sol: Option<Maximum>,
    max_ics: Option<Maximum>,
    integer_solutions: Vec<VertexSet>,
    singular_faces: Vec<VertexSet>,
    diagnostics: SupportDiagnostics,
}

/// Theorem checked by [`check_optimality_theorems`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremCheck {
    /// For δ ∈ [η, 1): max over ICSs equals max over all solutions, and an
    /// optimal ICS has α(G) cliques.
    IcsOptimality,
    /// For δ >= 1: weighted maximum equals the weighted independence number.
    WeightedIndependence,
    /// Every ICS has ℓ1 at least that of every full-support solution.
    IcsBeatsFullSupport,
    /// For δ ∈ [η, 1): deleting a vertex never increases the ICS maximum.
    DeletionMonotonicity,
    /// Unique maximum independent set and δ ∈ [η, 1): its indicator is optimal.
    UniqueMisOptimal,
}

impl TheoremCheck {
    pub fn label(self) -> &'static str {
        match self {
            TheoremCheck::IcsOptimality => "maxICS = maxSOL with alpha cliques",
            TheoremCheck::WeightedIndependence => "weighted maxSOL = alpha_w",
            TheoremCheck::IcsBeatsFullSupport => "ICS >= full-support solutions",
            TheoremCheck::DeletionMonotonicity => "maxICS monotone under vertex deletion",
            TheoremCheck::UniqueMisOptimal => "unique MIS indicator is optimal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremRow {
    pub delta: f64,
    pub check: TheoremCheck,
    pub outcome: CheckOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| !matches!(r.outcome, CheckOutcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremRow> + '_ {
        self.rows.iter().filter(|r| matches!(r.outcome, CheckOutcome::Fail(_)))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremOptions {
    /// random weight vectors per δ >= 1, on top of unit weights
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    /// comparison tolerance for objective values
    pub compare_tol: f64,
    pub cap: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions { trials: 3, seed: 0, tol: crate::lcp::DEFAULT_TOL, compare_tol: 1e-7, cap: DEFAULT_CENSUS_CAP }
    }
}

/// Evaluates the optimality theorems on `g` at every δ in the grid.
pub fn check_optimality_theorems(g: &Graph, delta_grid: &[f64], opts: &TheoremOptions) -> Result<TheoremReport> {
    if g.n() > opts.cap {
        return Err(Error::TooLarge { n: g.n(), cap: opts.cap });
    }
    let thresholds = ThresholdReport::compute(g)?;
    let unique_mis = ExactSearch::default().unique_maximum_independent_set(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = TheoremReport::default();
    let ctol = opts.compare_tol;

    for &delta in delta_grid {
        let inst = LcpInstance::new(g.clone(), delta)?.with_tol(opts.tol)?;
        let census = enumerate_solutions_capped(&inst, None, opts.cap)?;
        let mut push = |check, outcome| report.rows.push(TheoremRow { delta, check, outcome });
        let in_eta_range = match thresholds.eta {
            Some(eta) if delta >= eta && delta < 1.0 => Ok(()),
            Some(_) => Err(if delta >= 1.0 { "delta >= 1".to_string() } else { "below eta".to_string() }),
            None => Err("eta undefined (no edges)".to_string()),
        };

        // optimality of independent clique solutions
        push(
            TheoremCheck::IcsOptimality,
            match &in_eta_range {
                Err(why) => CheckOutcome::Skipped(why.clone()),
                Ok(()) => ics_optimality(&census, thresholds.alpha, ctol),
            },
        );

        // weighted independence number for δ >= 1
        push(
            TheoremCheck::WeightedIndependence,
            if delta < 1.0 {
                CheckOutcome::Skipped("delta < 1".into())
            } else {
                let mut outcome = CheckOutcome::Pass;
                for t in 0..=opts.trials {
                    let w: Vec<f64> = if t == 0 {
                        vec![1.0; g.n()]
                    } else {
                        (0..g.n()).map(|_| f64::from(rng.gen_range(1u32..=20)) / 4.0).collect()
                    };
                    let weighted = enumerate_solutions_capped(&inst, Some(&w), opts.cap)?;
                    let (alpha_w, _) = ExactSearch::with_cap(opts.cap).weighted_alpha(g, &w)?;
                    let got = weighted.max_sol().map_or(f64::NAN, |m| m.value);
                    if !((got - alpha_w).abs() <= ctol) {
                        outcome = CheckOutcome::Fail(format!("weights {w:?}: maxSOL {got} vs alpha_w {alpha_w}"));
                        break;
                    }
                }
                outcome
            },
        );

        // ICS versus full-support solutions
        push(TheoremCheck::IcsBeatsFullSupport, ics_beats_full_support(&census, ctol));

        // monotonicity under vertex deletion
        push(
            TheoremCheck::DeletionMonotonicity,
            match &in_eta_range {
                Err(why) => CheckOutcome::Skipped(why.clone()),
                Ok(()) => {
                    let big = census.max_ics().map(|m| m.value);
                    let mut outcome = CheckOutcome::Pass;
                    for v in g.vertices() {
                        let keep: VertexSet = g.vertices().filter(|&u| u != v).collect();
                        let (h, _) = g.induced_subgraph(&keep)?;
                        let small = enumerate_solutions_capped(&LcpInstance::new(h, delta)?.with_tol(opts.tol)?, None, opts.cap)?
                            .max_ics()
                            .map(|m| m.value);
                        match (small, big) {
                            (Some(s), Some(b)) if s <= b + ctol => {}
                            (None, _) => {}
                            (s, b) => {
                                outcome = CheckOutcome::Fail(format!("deleting {v}: {s:?} > {b:?}"));
                                break;
                            }
                        }
                    }
                    outcome
                }
            },
        );

        // unique maximum independent set
        push(
            TheoremCheck::UniqueMisOptimal,
            match (&in_eta_range, &unique_mis) {
                (_, None) => CheckOutcome::Skipped("maximum independent set is not unique".into()),
                (Err(why), _) => CheckOutcome::Skipped(why.clone()),
                (Ok(()), Some(s)) => {
                    let indicator = g.characteristic_vector(s)?;
                    let best = census.max_sol().map_or(f64::NAN, |m| m.value);
                    if !census.covers(&indicator) {
                        CheckOutcome::Fail(format!("indicator of {s} is not in the census"))
                    } else if !(best <= s.len() as f64 + ctol) {
                        CheckOutcome::Fail(format!("maxSOL {best} exceeds |S| = {}", s.len()))
                    } else {
                        CheckOutcome::Pass
                    }
                }
            },
        );
    }
    Ok(report)
}

fn ics_optimality(census: &SolutionCensus, alpha: usize, ctol: f64) -> CheckOutcome {
    let (Some(sol), Some(ics)) = (census.max_sol(), census.max_ics()) else {
        return CheckOutcome::Fail("census has no ICS".into());
    };
    if (sol.value - ics.value).abs() > ctol {
        return CheckOutcome::Fail(format!("maxICS {} differs from maxSOL {}", ics.value, sol.value));
    }
    let g = census.instance().graph();
    let has_alpha_cover = census.ics_solutions().any(|sv| {
        (sv.l1() - ics.value).abs() <= ctol
            && CliqueCover::from_support(g, sv.support())
                .ok()
                .flatten()
                .is_some_and(|c| c.len() == alpha)
    });
    if has_alpha_cover {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(format!("no maximizing ICS has {alpha} cliques"))
    }
}

fn ics_beats_full_support(census: &SolutionCensus, ctol: f64) -> CheckOutcome {
    let n = census.instance().n();
    let full = census
        .solutions()
        .iter()
        .filter(|sv| sv.support().len() == n)
        .map(SolutionVector::l1)
        .fold(f64::NEG_INFINITY, f64::max);
    match census.ics_solutions().map(SolutionVector::l1).reduce(f64::min) {
        Some(worst_ics) if worst_ics + ctol < full => {
            CheckOutcome::Fail(format!("ICS with l1 {worst_ics} below full-support solution {full}"))
        }
        _ => CheckOutcome::Pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn census(g: Graph, delta: f64) -> SolutionCensus {
        enumerate_solutions(&LcpInstance::new(g, delta).unwrap(), None).unwrap()
    }

    #[test]
    fn gaussian_elimination() {
        let mut a = vec![2.0, 1.0, 3.0, 1.0, 3.0, 5.0];
        let x = gaussian_solve(&mut a, 2, 1e-12).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-15 && (x[1] - 1.4).abs() < 1e-15);
        let mut s = vec![1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
        assert!(gaussian_solve(&mut s, 2, 1e-9).is_none());
        assert_eq!(gaussian_solve(&mut [], 0, 1e-9), Some(vec![]));
    }

    #[test]
    fn triangle_has_one_solution() {
        let c = census(fixtures::complete(3), 0.5);
        assert_eq!(c.solutions().len(), 1);
        assert!(c.solutions()[0].x().iter().all(|&v| (v - 0.5).abs() < 1e-15));
        assert!((c.max_sol().unwrap().value - 1.5).abs() < 1e-12);
        assert_eq!(c.diagnostics().nonsingular + c.diagnostics().infeasible, 8);
    }

    #[test]
    fn tight_eta_crossover() {
        let g = fixtures::tight_eta();
        let above = census(g.clone(), 0.7);
        assert!((above.max_sol().unwrap().value - 6.0).abs() < 1e-9);
        let mis = g.characteristic_vector(&VertexSet::from([1, 3, 5, 7, 9, 11])).unwrap();
        assert_eq!(above.max_sol_witness().unwrap().x(), mis.as_slice());
        assert!((above.max_ics().unwrap().value - 6.0).abs() < 1e-9);

        let below = census(g, 0.6);
        assert!((below.max_sol().unwrap().value - 6.25).abs() < 1e-9);
        let w = below.max_sol_witness().unwrap();
        assert_eq!(w.support(), &VertexSet::from([1, 2, 4, 5, 6, 7, 8, 9, 10, 11]));
    }

    #[test]
    fn path_maxima() {
        let c = census(fixtures::tight_gamma(), 0.7);
        let best = c.max_sol().unwrap();
        assert!((best.value - (1.0 + 2.0 / 1.7)).abs() < 1e-9);
        let t = 1.0 / 1.7;
        // (1, 0, t, t) ties; the lexicographically smaller mirror image wins
        let w = c.max_sol_witness().unwrap().x();
        assert!(w.iter().zip([t, t, 0.0, 1.0]).all(|(a, b)| (a - b).abs() < 1e-12));
        let single = census(Graph::edgeless(1), 3.0);
        assert_eq!(single.solutions().len(), 1);
        assert_eq!(single.max_sol().unwrap().value, 1.0);
        let empty = census(Graph::edgeless(0), 0.5);
        assert_eq!(empty.solutions().len(), 1);
        assert_eq!(empty.max_ics().unwrap().value, 0.0);
    }

    #[test]
    fn integer_solution_lists() {
        let i = |g, d| LcpInstance::new(g, d).unwrap();
        assert_eq!(
            integer_solutions(&i(fixtures::cycle(4), 0.5)).unwrap(),
            vec![VertexSet::from([1, 3]), VertexSet::from([2, 4])]
        );
        assert!(integer_solutions(&i(fixtures::cycle(5), 0.5)).unwrap().is_empty());
        // at δ = 1 these are exactly the maximal independent sets of P4
        assert_eq!(
            integer_solutions(&i(fixtures::tight_gamma(), 1.0)).unwrap(),
            vec![VertexSet::from([1, 3]), VertexSet::from([1, 4]), VertexSet::from([2, 4])]
        );
    }

    #[test]
    fn singular_faces_are_explored() {
        // at δ = 1 on K2 the support {1,2} gives x1 + x2 = 1, a segment
        let c = census(fixtures::complete(2), 1.0);
        assert_eq!(c.singular_faces(), &[VertexSet::from([1, 2])]);
        assert!(c.covers(&[0.25, 0.75]));
        assert!(!c.covers(&[0.25, 0.25]));
        assert_eq!(c.solutions().len(), 2);
        let weighted = enumerate_solutions(&LcpInstance::new(fixtures::complete(2), 1.0).unwrap(), Some(&[1.0, 3.0])).unwrap();
        assert_eq!(weighted.max_sol().unwrap().value, 3.0);
        assert_eq!(weighted.max_sol_witness().unwrap().x(), &[0.0, 1.0]);
    }

    #[test]
    fn product_structure() {
        let g = fixtures::disjoint_union(&fixtures::complete(3), &fixtures::complete(3));
        let c = census(g, 0.5);
        assert_eq!(c.solutions().len(), 1);
        assert!(c.solutions()[0].x().iter().all(|&v| (v - 0.5).abs() < 1e-15));
    }

    #[test]
    fn cap_and_weights_are_checked() {
        let inst = LcpInstance::new(Graph::edgeless(21), 0.5).unwrap();
        assert!(matches!(enumerate_solutions(&inst, None), Err(Error::TooLarge { n: 21, cap: 20 })));
        let inst = LcpInstance::new(Graph::edgeless(2), 0.5).unwrap();
        assert!(enumerate_solutions(&inst, Some(&[1.0])).is_err());
        assert!(enumerate_solutions(&inst, Some(&[1.0, -2.0])).is_err());
        assert!(enumerate_solutions_capped(&inst, None, 1).is_err());
    }

    #[test]
    fn theorem_checks_on_tight_eta() {
        let g = fixtures::tight_eta();
        let report = check_optimality_theorems(&g, &[0.6, 0.7, 0.8, 1.0, 1.3], &TheoremOptions::default()).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let first = &report.rows[0];
        assert_eq!((first.delta, first.check), (0.6, TheoremCheck::IcsOptimality));
        assert_eq!(first.outcome, CheckOutcome::Skipped("below eta".into()));
    }

    #[test]
    fn census_json_round_trip() {
        let c = census(fixtures::tight_gamma(), 1.0);
        let back = SolutionCensus::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
