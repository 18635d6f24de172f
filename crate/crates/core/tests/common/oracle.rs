//! A second, independent way of finding solutions: projected fixed-point
//! iteration `x ← max(0, x − τ(C(x) − 1))` from random starts, polished by
//! solving the linear system on the support it settles on.

use graph_lcp::lcp::verify_solution;
use graph_lcp::{LcpInstance, SolutionCensus};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ITERS: usize = 10_000;
const STEP_TOL: f64 = 1e-13;
const SUPPORT_CUT: f64 = 1e-6;

fn matrix(inst: &LcpInstance) -> DMatrix<f64> {
    let n = inst.n();
    let mut m = DMatrix::<f64>::identity(n, n);
    for (u, v) in inst.graph().edges() {
        m[(u - 1, v - 1)] = inst.delta();
        m[(v - 1, u - 1)] = inst.delta();
    }
    m
}

fn polish(m: &DMatrix<f64>, x: &[f64]) -> Option<Vec<f64>> {
    let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] > SUPPORT_CUT).collect();
    let k = support.len();
    if k == 0 {
        return Some(vec![0.0; x.len()]);
    }
    let sub = DMatrix::from_fn(k, k, |r, c| m[(support[r], support[c])]);
    let y = sub.lu().solve(&DVector::from_element(k, 1.0))?;
    let mut out = vec![0.0; x.len()];
    for (r, &i) in support.iter().enumerate() {
        out[i] = y[r];
    }
    Some(out)
}

/// Verified solutions reached from `starts` random initial points.
pub fn fixed_point_solutions(inst: &LcpInstance, starts: usize, seed: u64) -> Vec<Vec<f64>> {
    let n = inst.n();
    let m = matrix(inst);
    let tau = 1.0 / (1.0 + inst.delta() * inst.graph().max_degree() as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();
    for _ in 0..starts {
        let mut x = DVector::from_fn(n, |_, _| rng.gen_range(0.0..1.5));
        for _ in 0..MAX_ITERS {
            let grad = &m * &x - DVector::from_element(n, 1.0);
            let next = (&x - grad * tau).map(|v| v.max(0.0));
            let step = (&next - &x).amax();
            x = next;
            if step < STEP_TOL {
                break;
            }
        }
        let raw: Vec<f64> = x.iter().copied().collect();
        for cand in polish(&m, &raw).into_iter().chain(std::iter::once(raw)) {
            if verify_solution(inst, &cand).map(|v| v.is_valid()).unwrap_or(false) {
                found.push(cand);
                break;
            }
        }
    }
    found
}

/// Whether the census lists `x` (within `tol` in every coordinate) or `x`
/// lies on one of its singular faces.
pub fn census_contains(census: &SolutionCensus, x: &[f64], tol: f64) -> bool {
    let listed = census
        .solutions()
        .iter()
        .any(|s| s.x().iter().zip(x).all(|(a, b)| (a - b).abs() <= tol));
    if listed {
        return true;
    }
    let support: graph_lcp::VertexSet = (1..=x.len()).filter(|&i| x[i - 1] > census.instance().tol()).collect();
    census.singular_faces().contains(&support)
}
