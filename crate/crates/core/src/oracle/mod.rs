//! Independent ground truth at desk scale.
//!
//! Nothing here touches generating functions: characteristic polynomials come
//! from summing over every central subarrangement, from counting points over
//! finite fields, and graph counts from enumerating every labeled graph.

mod arrangement;
mod finite_field;
mod graphs;
mod whitney;

pub use arrangement::{
    build_arrangement, rank_and_centrality, Hyperplane, HyperplaneKind, Subarrangement,
};
pub use finite_field::{finite_field_count, is_prime};
pub use graphs::{enumerate_graphs, GraphCensus, MAX_CENSUS_ORDER};
pub use whitney::{central_census, whitney_chi};

/// Worker count and size guards shared by the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Threads to use; `None` means rayon's default pool.
    pub workers: Option<usize>,
    /// Largest `n` the subset sums accept (`2^{n(n+3)/2}` subsets).
    pub max_subset_n: usize,
    /// Largest `q^n` the point counter accepts.
    pub point_budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            workers: None,
            max_subset_n: 5,
            point_budget: 1 << 34,
        }
    }
}

impl OracleConfig {
    pub fn with_workers(workers: usize) -> Self {
        OracleConfig {
            workers: Some(workers),
            ..Default::default()
        }
    }

    pub(crate) fn install<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            None => job(),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool")
                .install(job),
        }
    }
}
