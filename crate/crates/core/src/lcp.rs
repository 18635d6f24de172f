//! The instance LCP(I + δA, −e) over a graph: solution vectors, verification
//! of the complementarity conditions, the potential function, and candidate
//! independent clique solutions.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::cover::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOL: f64 = 1e-9;

/// A graph together with the substitutability factor `delta` and the single
/// numeric tolerance used by every check.
#[derive(Clone, Debug, PartialEq)]
pub struct LcpInstance {
    graph: Graph,
    delta: f64,
    tol: f64,
}

impl LcpInstance {
    pub fn new(graph: Graph, delta: f64) -> Result<LcpInstance> {
        if !(delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidDelta(delta));
        }
        Ok(LcpInstance { graph, delta, tol: DEFAULT_TOL })
    }

    pub fn with_tol(mut self, tol: f64) -> Result<LcpInstance> {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        self.tol = tol;
        Ok(self)
    }

    /// Same graph and tolerance, different `delta`.
    pub fn at_delta(&self, delta: f64) -> Result<LcpInstance> {
        LcpInstance::new(self.graph.clone(), delta)?.with_tol(self.tol)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `⌈1/δ⌉`, the domination order every solution support must satisfy.
    /// Computed as the exact ceiling of the floating-point quotient.
    pub fn domination_order(&self) -> usize {
        ((1.0 / self.delta).ceil() as usize).max(1)
    }

    /// Dense `I + δA`.
    pub fn matrix(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut m = DMatrix::identity(n, n);
        for (u, v) in self.graph.edges() {
            m[(u - 1, v - 1)] = self.delta;
            m[(v - 1, u - 1)] = self.delta;
        }
        m
    }

    fn check_vector(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), actual: x.len() });
        }
        match x.iter().position(|v| v.is_nan()) {
            Some(i) => Err(Error::NotANumber(i + 1)),
            None => Ok(()),
        }
    }
}

/// `C_i(x) = x_i + δ Σ_{j ∈ N(i)} x_j` for every vertex.
pub fn discounted_closed_neighborhood(inst: &LcpInstance, x: &[f64]) -> Result<Vec<f64>> {
    inst.check_vector(x)?;
    Ok(c_of(inst, x))
}

fn c_of(inst: &LcpInstance, x: &[f64]) -> Vec<f64> {
    let g = inst.graph();
    g.vertices()
        .map(|i| x[i - 1] + inst.delta * g.nbrs(i).iter().map(|&j| x[j - 1]).sum::<f64>())
        .collect()
}

/// A nonnegative vertex-indexed vector with its `C(x)`, support and ℓ1 norm.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionVector {
    delta: f64,
    x: Vec<f64>,
    support: VertexSet,
    c_of_x: Vec<f64>,
    l1: f64,
}

/// Serialized form of a [`SolutionVector`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub delta: f64,
    pub x: Vec<f64>,
    pub support: Vec<usize>,
    pub l1: f64,
}

impl SolutionVector {
    /// Rejects wrong dimension, NaN entries and entries below `-tol`.
    pub fn new(inst: &LcpInstance, x: Vec<f64>) -> Result<SolutionVector> {
        inst.check_vector(&x)?;
        if let Some(i) = x.iter().position(|&v| v < -inst.tol) {
            return Err(Error::NegativeEntry { index: i + 1, value: x[i] });
        }
        let support = inst.graph().vertices().filter(|&i| x[i - 1] > inst.tol).collect();
        let c_of_x = c_of(inst, &x);
        let l1 = x.iter().sum();
        Ok(SolutionVector { delta: inst.delta, x, support, c_of_x, l1 })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn c_of_x(&self) -> &[f64] {
        &self.c_of_x
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn weighted_value(&self, weights: &[f64]) -> f64 {
        self.x.iter().zip(weights).map(|(a, b)| a * b).sum()
    }

    pub fn record(&self) -> SolutionRecord {
        SolutionRecord {
            delta: self.delta,
            x: self.x.clone(),
            support: self.support.to_vec(),
            l1: self.l1,
        }
    }

    /// Rebuilds a vector from its record, recomputing `C(x)` on `graph` and
    /// checking that the recorded support and norm are consistent.
    pub fn from_record(graph: &Graph, tol: f64, rec: SolutionRecord) -> Result<SolutionVector> {
        let inst = LcpInstance::new(graph.clone(), rec.delta)?.with_tol(tol)?;
        let sv = SolutionVector::new(&inst, rec.x)?;
        if sv.support.to_vec() != rec.support {
            return Err(Error::Precondition(format!(
                "recorded support {:?} does not match x (support {})",
                rec.support, sv.support
            )));
        }
        if (sv.l1 - rec.l1).abs() > 1e-9 * sv.l1.abs().max(1.0) {
            return Err(Error::Precondition(format!(
                "recorded l1 {} does not match x (l1 {})",
                rec.l1, sv.l1
            )));
        }
        Ok(sv)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.record()).expect("solution JSON is serializable")
    }

    pub fn from_json(graph: &Graph, tol: f64, src: &str) -> Result<SolutionVector> {
        SolutionVector::from_record(graph, tol, serde_json::from_str(src)?)
    }
}

/// Which of the three complementarity conditions failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `x_i >= 0`
    Nonnegativity,
    /// `C_i(x) >= 1`
    Feasibility,
    /// `x_i (C_i(x) - 1) = 0`
    Complementarity,
}

impl Condition {
    pub fn describe(self) -> &'static str {
        match self {
            Condition::Nonnegativity => "x_i >= 0",
            Condition::Feasibility => "C_i(x) >= 1",
            Condition::Complementarity => "x_i (C_i(x) - 1) = 0",
        }
    }
}

/// `residual` is `x_i`, `C_i(x) - 1` or `x_i (C_i(x) - 1)` depending on the condition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub condition: Condition,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violating_vertices(&self) -> VertexSet {
        self.violations.iter().map(|v| v.vertex).collect()
    }
}

/// Checks every vertex against all three conditions and reports every failure.
pub fn verify_solution(inst: &LcpInstance, x: &[f64]) -> Result<Verdict> {
    let c = discounted_closed_neighborhood(inst, x)?;
    let tol = inst.tol;
    let mut violations = Vec::new();
    for (k, (&xi, &ci)) in x.iter().zip(&c).enumerate() {
        let vertex = k + 1;
        if xi < -tol {
            violations.push(Violation { vertex, condition: Condition::Nonnegativity, residual: xi });
        }
        if ci < 1.0 - tol {
            violations.push(Violation {
                vertex,
                condition: Condition::Feasibility,
                residual: ci - 1.0,
            });
        }
        let comp = xi * (ci - 1.0);
        if comp.abs() > tol {
            violations.push(Violation {
                vertex,
                condition: Condition::Complementarity,
                residual: comp,
            });
        }
    }
    Ok(Verdict { violations })
}

/// Binary `x` verifies as a solution. Errors when `x` is not 0/1 within tolerance.
pub fn is_integer_solution(inst: &LcpInstance, x: &[f64]) -> Result<bool> {
    inst.check_vector(x)?;
    for (i, &v) in x.iter().enumerate() {
        if v.abs() > inst.tol && (v - 1.0).abs() > inst.tol {
            return Err(Error::NotBinary { index: i + 1, value: v });
        }
    }
    Ok(verify_solution(inst, x)?.is_valid())
}

/// Combinatorial side of the integer-solution characterization: `s` is an
/// independent set that is `⌈1/δ⌉`-dominating.
pub fn check_integer_characterization(inst: &LcpInstance, s: &VertexSet) -> Result<bool> {
    let g = inst.graph();
    Ok(g.is_independent_set(s)? && g.is_k_dominating(s, inst.domination_order())?)
}

/// `φ(x) = eᵀx − ½ xᵀ(I + δA)x`.
pub fn potential(inst: &LcpInstance, x: &[f64]) -> Result<f64> {
    check_nonnegative(inst, x)?;
    let c = c_of(inst, x);
    Ok(x.iter().sum::<f64>() - 0.5 * x.iter().zip(&c).map(|(a, b)| a * b).sum::<f64>())
}

/// KKT stationarity of `φ` on the nonnegative orthant: the multiplier
/// `μ = (I + δA)x − e` is nonnegative and complementary to `x`.
pub fn is_stationary_point(inst: &LcpInstance, x: &[f64]) -> Result<bool> {
    check_nonnegative(inst, x)?;
    let xv = DVector::from_column_slice(x);
    let mu = inst.matrix() * &xv - DVector::from_element(x.len(), 1.0);
    let tol = inst.tol;
    Ok(mu.iter().all(|&m| m >= -tol) && xv.iter().zip(mu.iter()).all(|(a, m)| (a * m).abs() <= tol))
}

fn check_nonnegative(inst: &LcpInstance, x: &[f64]) -> Result<()> {
    inst.check_vector(x)?;
    match x.iter().position(|&v| v < -inst.tol) {
        Some(i) => Err(Error::NegativeEntry { index: i + 1, value: x[i] }),
        None => Ok(()),
    }
}

/// The only vector that can be an ICS with the given cover as support:
/// `1 / (1 + (|C| − 1)δ)` on each clique `C`, zero elsewhere.
pub fn candidate_ics(inst: &LcpInstance, cover: &CliqueCover) -> Result<SolutionVector> {
    cover.validate(inst.graph())?;
    let x = cover
        .clique_size_by_vertex(inst.n())
        .into_iter()
        .map(|s| if s == 0 { 0.0 } else { 1.0 / (1.0 + (s as f64 - 1.0) * inst.delta) })
        .collect();
    SolutionVector::new(inst, x)
}

/// A verified solution whose support splits into components that are all cliques.
pub fn verify_ics(inst: &LcpInstance, x: &[f64]) -> Result<bool> {
    if !verify_solution(inst, x)?.is_valid() {
        return Ok(false);
    }
    let support: VertexSet = inst.graph().vertices().filter(|&i| x[i - 1] > inst.tol).collect();
    support_is_clique_union(inst.graph(), &support)
}

pub(crate) fn support_is_clique_union(g: &Graph, support: &VertexSet) -> Result<bool> {
    for c in g.components_within(support)? {
        if !g.is_clique(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
