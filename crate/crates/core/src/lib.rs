//! Tools for the perturbed graph linear complementarity problem
//! LCP(I + δA, −e): exact graph search, solution verification, closed-form
//! thresholds, independent clique solutions and exhaustive solution censuses.

pub mod census;
pub mod cli;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod ics;
pub mod io;
pub mod lcp;
pub mod simplex;
pub mod thresholds;

pub use cover::CliqueCover;
pub use error::{Error, Result};
pub use graph::{ExactSearch, Graph, VertexSet};
pub use lcp::{LcpInstance, SolutionVector, Verdict};
pub use census::SolutionCensus;
pub use thresholds::ThresholdReport;
