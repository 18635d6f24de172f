use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An ordered family of pairwise-disjoint, pairwise-independent cliques,
/// each tagged with an anchor vertex it contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    cliques: Vec<VertexSet>,
    anchors: Vec<usize>,
}

impl CliqueCover {
    pub fn new(g: &Graph, cliques: Vec<VertexSet>, anchors: Vec<usize>) -> Result<CliqueCover> {
        let cover = CliqueCover { cliques, anchors };
        cover.validate(g)?;
        Ok(cover)
    }

    /// Cover whose anchors are the smallest member of each clique.
    pub fn from_cliques(g: &Graph, cliques: Vec<VertexSet>) -> Result<CliqueCover> {
        let anchors = cliques
            .iter()
            .map(|c| c.first().ok_or_else(|| Error::NotClique("{}".into())))
            .collect::<Result<Vec<_>>>()?;
        CliqueCover::new(g, cliques, anchors)
    }

    /// Splits `support` into connected components; returns a cover when every
    /// component is a clique.
    pub fn from_support(g: &Graph, support: &VertexSet) -> Result<Option<CliqueCover>> {
        let comps = g.components_within(support)?;
        for c in &comps {
            if !g.is_clique(c)? {
                return Ok(None);
            }
        }
        CliqueCover::from_cliques(g, comps).map(Some)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.cliques.len() != self.anchors.len() {
            return Err(Error::Precondition(format!(
                "{} cliques but {} anchors",
                self.cliques.len(),
                self.anchors.len()
            )));
        }
        for (c, &a) in self.cliques.iter().zip(&self.anchors) {
            g.check_set(c)?;
            if c.is_empty() || !g.is_clique(c)? {
                return Err(Error::NotClique(c.to_string()));
            }
            if !c.contains(a) {
                return Err(Error::Precondition(format!("anchor {a} is not in clique {c}")));
            }
        }
        for (k, c1) in self.cliques.iter().enumerate() {
            for c2 in &self.cliques[k + 1..] {
                if !g.are_cliques_independent(c1, c2)? {
                    return Err(Error::NotIndependentCliques(c1.to_string(), c2.to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.cliques.iter().fold(VertexSet::new(), |acc, c| acc.union(c))
    }

    /// Size of the clique holding each vertex (index `label - 1`), 0 off the support.
    pub fn clique_size_by_vertex(&self, n: usize) -> Vec<usize> {
        let mut sizes = vec![0; n];
        for c in &self.cliques {
            for v in c.iter() {
                sizes[v - 1] = c.len();
            }
        }
        sizes
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cover JSON is serializable")
    }

    /// Parses `{"cliques": [[..]], "anchors": [..]}` and validates it against `g`.
    pub fn from_json(g: &Graph, src: &str) -> Result<CliqueCover> {
        let cover: CliqueCover = serde_json::from_str(src)?;
        cover.validate(g)?;
        Ok(cover)
    }
}
