//! Closed-form δ thresholds: the ICS existence threshold γ, the optimality
//! threshold η = max(γ, κ), the two-clique condition, and the spectral
//! uniqueness threshold.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ExactSearch, Graph};
use crate::lcp::LcpInstance;

/// Positive root of `(m + n − 2)δ² + (3 − m)δ − 1`: the smallest δ at which a
/// vertex fully joined to an `n`-clique and touching an `m`-clique is covered.
pub fn gamma_mn(m: usize, n: usize) -> Result<f64> {
    if m == 0 || n == 0 || m + n < 3 {
        return Err(Error::DegenerateCliqueSizes { m, n });
    }
    let (m, n) = (m as f64, n as f64);
    let a = m + n - 2.0;
    let b = 3.0 - m;
    Ok((-b + (b * b + 4.0 * a).sqrt()) / (2.0 * a))
}

/// γ for a graph with clique number `omega`.
pub fn gamma_from_omega(omega: usize) -> Result<f64> {
    if omega <= 1 {
        return Err(Error::NoEdges);
    }
    gamma_mn(omega, 1)
}

pub fn gamma(g: &Graph) -> Result<f64> {
    gamma_from_omega(ExactSearch::default().omega(g)?)
}

/// `(α(ω−1) − ω) / (α(ω−1))`, or −∞ when `α(ω−1) = 0`.
pub fn kappa_from(alpha: usize, omega: usize) -> f64 {
    let d = (alpha * omega.saturating_sub(1)) as f64;
    if d == 0.0 {
        f64::NEG_INFINITY
    } else {
        (d - omega as f64) / d
    }
}

pub fn kappa(g: &Graph) -> Result<f64> {
    let search = ExactSearch::default();
    Ok(kappa_from(search.alpha(g)?.0, search.omega(g)?))
}

/// `max(γ, κ)`; undefined (error) when the graph has no edge.
pub fn eta(g: &Graph) -> Result<f64> {
    ThresholdReport::compute(g)?.eta.ok_or(Error::NoEdges)
}

/// True iff `(m + n − 2)δ² + (3 − m)δ − 1 >= −tol` at the instance's δ, which
/// must lie in (0, 1).
pub fn two_clique_condition(inst: &LcpInstance, full_clique: usize, other_clique: usize) -> Result<bool> {
    let d = inst.delta();
    if !(d > 0.0 && d < 1.0) {
        return Err(Error::DeltaOutsideUnitInterval(d));
    }
    if full_clique == 0 || other_clique == 0 {
        return Err(Error::DegenerateCliqueSizes { m: other_clique, n: full_clique });
    }
    let (m, n) = (other_clique as f64, full_clique as f64);
    Ok((m + n - 2.0) * d * d + (3.0 - m) * d - 1.0 >= -inst.tol())
}

/// `−1 / λ_min(A)`; `+∞` when `A` has no negative eigenvalue (no edges).
pub fn uniqueness_threshold(g: &Graph) -> f64 {
    let n = g.n();
    if g.edge_count() == 0 {
        return f64::INFINITY;
    }
    let mut a = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u - 1, v - 1)] = 1.0;
        a[(v - 1, u - 1)] = 1.0;
    }
    let lambda_min = SymmetricEigen::new(a).eigenvalues.min();
    -1.0 / lambda_min
}

/// Every threshold of a graph in one place.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub alpha: usize,
    pub omega: usize,
    /// `None` when the graph has no edge.
    pub gamma: Option<f64>,
    /// −∞ when `α(ω−1) = 0`; serialized as `null`.
    #[serde(with = "neg_inf_as_null")]
    pub kappa: f64,
    /// `None` when the graph has no edge.
    pub eta: Option<f64>,
    /// +∞ for edgeless graphs; serialized as `null`.
    #[serde(with = "pos_inf_as_null")]
    pub uniqueness_threshold: f64,
}

impl ThresholdReport {
    pub fn compute(g: &Graph) -> Result<ThresholdReport> {
        Self::compute_with(g, ExactSearch::default())
    }

    pub fn compute_with(g: &Graph, search: ExactSearch) -> Result<ThresholdReport> {
        let alpha = search.alpha(g)?.0;
        let omega = search.omega(g)?;
        let gamma = gamma_from_omega(omega).ok();
        let kappa = kappa_from(alpha, omega);
        let eta = gamma.map(|gm| gm.max(kappa));
        Ok(ThresholdReport {
            alpha,
            omega,
            gamma,
            kappa,
            eta,
            uniqueness_threshold: uniqueness_threshold(g),
        })
    }
}

macro_rules! inf_as_null {
    ($name:ident, $inf:expr) => {
        mod $name {
            use super::*;

            pub fn serialize<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
                if v.is_infinite() {
                    s.serialize_none()
                } else {
                    s.serialize_some(v)
                }
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
                Ok(Option::<f64>::deserialize(d)?.unwrap_or($inf))
            }
        }
    };
}

inf_as_null!(neg_inf_as_null, f64::NEG_INFINITY);
inf_as_null!(pos_inf_as_null, f64::INFINITY);
