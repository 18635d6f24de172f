//! Small named graphs used by tests, the CLI's worked examples, and a seeded
//! Erdős–Rényi sampler for randomized sweeps.

use rand::Rng;

use crate::cover::CliqueCover;
use crate::graph::{Graph, VertexSet};

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph edges are valid")
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("star edges are valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("bipartite edges are valid")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i + 1, (i + 1) % 5 + 1));
        edges.push((i + 1, i + 6));
        edges.push((i + 6, (i + 2) % 5 + 6));
    }
    Graph::new(10, edges).expect("Petersen edges are valid")
}

/// The path 1-2-3-4 showing that the ICS existence threshold is sharp.
pub fn tight_gamma() -> Graph {
    path(4)
}

/// The 11-vertex tree showing that the optimality threshold is sharp.
pub fn tight_eta() -> Graph {
    Graph::new(
        11,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (3, 6),
            (3, 8),
            (3, 10),
            (6, 7),
            (9, 8),
            (11, 10),
        ],
    )
    .expect("fixture edges are valid")
}

/// The five disjoint edges of [`tight_eta`] avoiding the hub 3. Its ICS has
/// ℓ1 `10 / (1 + δ)`, which beats the maximum independent set below δ = 2/3.
pub fn tight_eta_pair_cover() -> CliqueCover {
    let pairs = [[1, 2], [4, 5], [6, 7], [8, 9], [10, 11]];
    CliqueCover::from_cliques(&tight_eta(), pairs.into_iter().map(VertexSet::from).collect())
        .expect("fixture cover is valid")
}

/// Vertices of `h` are relabelled `g.n() + 1 ..`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let edges = g
        .edges()
        .into_iter()
        .chain(h.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    Graph::new(g.n() + h.n(), edges).expect("union of valid graphs is valid")
}

/// G(n, p): every pair is an edge independently with probability `p`.
pub fn erdos_renyi<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled edges are valid")
}

/// Named fixture graphs, all with at most 11 vertices.
pub fn standard() -> Vec<(&'static str, Graph)> {
    vec![
        ("single-vertex", Graph::edgeless(1)),
        ("edgeless-3", Graph::edgeless(3)),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("P3", path(3)),
        ("P4", tight_gamma()),
        ("P5", path(5)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("star-4", star(4)),
        ("K2,3", complete_bipartite(2, 3)),
        ("K3+K3", disjoint_union(&complete(3), &complete(3))),
        ("K3+P3", disjoint_union(&complete(3), &path(3))),
        ("petersen", petersen()),
        ("tight-eta", tight_eta()),
    ]
}
