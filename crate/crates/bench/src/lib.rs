//! Shared inputs for the benchmarks.

use rootpoly_core::verify::random_l_graphs;
use rootpoly_core::SignedGraph;

/// A fixed sample of graphs in `L_n`, `n <= n_max`.
pub fn sample_l_graphs(count: usize, n_max: usize) -> Vec<SignedGraph> {
    random_l_graphs(count, 2, n_max, 7)
}
