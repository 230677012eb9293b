//! Fixed inputs shared by the benchmarks.

use compel_core::corpus::random_corpus;
use compel_core::Graph;

pub const SEED: u64 = 77;

/// Random graphs of a single order, for the chromatic-number benchmark.
pub fn random_of_order(n: usize, count: usize) -> Vec<Graph> {
    random_corpus(count, n, n, SEED).expect("valid corpus parameters")
}
