#![allow(dead_code)]

pub mod checks;
pub mod oracle;

use std::sync::OnceLock;

use graph_lcp::census::enumerate_solutions;
use graph_lcp::fixtures;
use graph_lcp::{Graph, LcpInstance, SolutionCensus, ThresholdReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;
pub const CMP: f64 = 1e-7;

/// δ values at which every suite graph gets a census.
pub const SUITE_DELTAS: [f64; 6] = [0.3, 0.5, 0.62, 0.8, 1.0, 1.5];

pub fn random_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.15..0.7);
            (format!("random-{k} (n={n}, p={p:.2})"), fixtures::erdos_renyi(n, p, &mut rng))
        })
        .collect()
}

/// Fixtures with at most `max_n` vertices.
pub fn small_fixtures(max_n: usize) -> Vec<(String, Graph)> {
    fixtures::standard()
        .into_iter()
        .filter(|(_, g)| g.n() <= max_n)
        .map(|(name, g)| (name.to_string(), g))
        .collect()
}

pub fn census(g: &Graph, delta: f64) -> SolutionCensus {
    enumerate_solutions(&LcpInstance::new(g.clone(), delta).unwrap(), None).unwrap()
}

/// Points of `[η, 1)` for theorems stated there; empty when η is undefined
/// or too close to 1.
pub fn eta_range(g: &Graph) -> Vec<f64> {
    match ThresholdReport::compute(g).unwrap().eta {
        Some(eta) if eta < 0.99 => {
            let lo = eta + 1e-7;
            vec![lo, 0.5 * (lo + 0.99), 0.99]
        }
        _ => Vec::new(),
    }
}

pub struct Entry {
    pub name: String,
    pub graph: Graph,
    pub thresholds: ThresholdReport,
    /// one census per entry of [`SUITE_DELTAS`]
    pub censuses: Vec<SolutionCensus>,
    /// censuses at the points of [`eta_range`]
    pub eta_censuses: Vec<SolutionCensus>,
}

/// Every fixture with at most 11 vertices plus 30 seeded random graphs with at
/// most 10, each with its censuses.
pub fn suite() -> &'static [Entry] {
    static SUITE: OnceLock<Vec<Entry>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let mut graphs = small_fixtures(11);
        graphs.extend(random_graphs(30, 1, 10, 0x5eed));
        graphs
            .into_iter()
            .map(|(name, graph)| Entry {
                thresholds: ThresholdReport::compute(&graph).unwrap(),
                censuses: SUITE_DELTAS.iter().map(|&d| census(&graph, d)).collect(),
                eta_censuses: eta_range(&graph).into_iter().map(|d| census(&graph, d)).collect(),
                name,
                graph,
            })
            .collect()
    })
}

/// Formats at most a handful of violations for an assertion message.
pub fn summarize(violations: &[String]) -> String {
    let shown: Vec<&str> = violations.iter().take(8).map(String::as_str).collect();
    format!("{} violation(s):\n  {}", violations.len(), shown.join("\n  "))
}
