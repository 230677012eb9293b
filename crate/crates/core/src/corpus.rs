//! Seeded random graph corpora for the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generators::random_graph;
use crate::graph::Graph;

const DENSITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

/// `count` random graphs with orders in `min_n..=max_n` and edge
/// densities cycling through a fixed set. The same arguments always give
/// the same graphs.
pub fn random_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            let p = DENSITIES[i % DENSITIES.len()];
            let g = random_graph(n, p, rng.gen())?;
            Ok(g.with_name(format!("corpus{seed}#{i}:n{n}p{p}")))
        })
        .collect()
}

/// Connected graphs only, drawn the same way.
pub fn random_connected_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let p = DENSITIES[i % DENSITIES.len()].max(0.35);
        let g = random_graph(n, p, rng.gen())?;
        if g.is_connected() {
            out.push(g.with_name(format!("connected{seed}#{i}:n{n}p{p}")));
        }
        i += 1;
    }
    Ok(out)
}

/// Every labelled graph on `n <= 6` vertices.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    assert!(n <= 6, "all_graphs is meant for tiny orders");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Ok(Graph::from_edges(n, &edges)?.with_name(format!("all{n}#{mask}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = random_corpus(20, 2, 8, 42).unwrap();
        let b = random_corpus(20, 2, 8, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (2..=8).contains(&g.n())));
        assert_ne!(a, random_corpus(20, 2, 8, 43).unwrap());
    }

    #[test]
    fn connected_only() {
        let c = random_connected_corpus(30, 2, 8, 1).unwrap();
        assert_eq!(c.len(), 30);
        assert!(c.iter().all(|g| g.is_connected()));
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(all_graphs(4).unwrap().len(), 64);
        assert_eq!(all_graphs(1).unwrap().len(), 1);
    }
}
