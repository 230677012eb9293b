//! Deterministic graph families.
//!
//! Every generator labels its vertices the same way on every call, and the
//! random ones are driven by a seeded ChaCha8 stream so a `(n, seed)` pair
//! always yields the same graph on every platform.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mop::normalize_cycle;

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSize(what()))
    }
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, || "a path needs at least one vertex".into())?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("P{n}")))
}

/// `C_n` in index order.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, || {
        format!("a cycle needs at least 3 vertices, got {n}")
    })?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, || {
        "a complete graph needs at least one vertex".into()
    })?;
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.with_name(format!("K{n}")))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, || {
        format!("K_{{{a},{b}}} needs two nonempty parts")
    })?;
    let mut g = Graph::new(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.with_name(format!("K{a},{b}")))
}

/// `K_{1,m}` with center 0.
pub fn star(m: usize) -> Result<Graph> {
    require(m >= 1, || "a star needs at least one leaf".into())?;
    Ok(complete_bipartite(1, m)?.with_name(format!("Star{m}")))
}

/// Two stars `K_{1,a}` and `K_{1,b}` with one leaf of each joined.
///
/// Layout: center `0` with leaves `1..=a`, center `a+1` with leaves
/// `a+2..=a+b+1`; the joining edge is `1 - (a+2)`. With `a = b = 1` the
/// result is `P_4`.
pub fn double_broom(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, || {
        "each star of a double broom needs a leaf".into()
    })?;
    let c2 = a + 1;
    let mut g = Graph::new(a + b + 2)?;
    for leaf in 1..=a {
        g.add_edge(0, leaf)?;
    }
    for leaf in c2 + 1..=c2 + b {
        g.add_edge(c2, leaf)?;
    }
    g.add_edge(1, c2 + 1)?;
    Ok(g.with_name(format!("Broom{a},{b}")))
}

/// Split graph `S_m`: clique `v_i = i` and independent set `u_i = m + i`,
/// with `u_i ~ v_j` exactly when `i != j`.
pub fn split_graph(m: usize) -> Result<Graph> {
    require(m >= 2, || format!("S_m needs m >= 2, got {m}"))?;
    let mut g = Graph::new(2 * m)?;
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j)?;
        }
        for j in 0..m {
            if i != j {
                g.add_edge(m + i, j)?;
            }
        }
    }
    Ok(g.with_name(format!("S{m}")))
}

/// Universal vertex `n` joined to the path `0..n`.
pub fn fan(n: usize) -> Result<Graph> {
    let g = join_dominator(&path(n)?)?;
    Ok(g.with_name(format!("Fan{n}")))
}

/// `g` plus a new vertex (index `g.n()`) adjacent to every vertex.
pub fn join_dominator(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut h = Graph::new(n + 1)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    for v in 0..n {
        h.add_edge(v, n)?;
    }
    Ok(h)
}

/// `K_{n-1}` minus the edge `0-1`, plus a leaf `n-1` attached to `0`.
pub fn clique_minus_edge_plus_leaf(n: usize) -> Result<Graph> {
    require(n >= 4, || format!("need n >= 4, got {n}"))?;
    let mut g = complete(n - 1)?;
    g.remove_edge(0, 1)?;
    let mut h = Graph::new(n)?;
    for (u, v) in g.edges() {
        h.add_edge(u, v)?;
    }
    h.add_edge(0, n - 1)?;
    Ok(h.with_name(format!("KminusE+leaf{n}")))
}

/// Random maximal outerplanar graph by ear insertion.
///
/// Starts from the triangle `0 1 2`; vertex `i` is inserted between a
/// uniformly chosen pair of consecutive vertices on the current outer cycle
/// and joined to both. The final outer cycle is recorded on the graph.
pub fn random_mop(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 3, || {
        format!("a MOP needs at least 3 vertices, got {n}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    g.add_edge(0, 1)?;
    g.add_edge(1, 2)?;
    g.add_edge(0, 2)?;
    let mut outer = vec![0, 1, 2];
    for v in 3..n {
        let j = rng.gen_range(0..outer.len());
        let (a, b) = (outer[j], outer[(j + 1) % outer.len()]);
        g.add_edge(v, a)?;
        g.add_edge(v, b)?;
        outer.insert(j + 1, v);
    }
    g.set_outer_cycle(normalize_cycle(&outer))?;
    Ok(g.with_name(format!("MOP{n}s{seed}")))
}

/// Triangulated strip: `i ~ i+1` and `i ~ i+2`. A maximal outerplanar graph
/// of diameter about `n/2`, the largest possible for its order.
pub fn strip_mop(n: usize) -> Result<Graph> {
    require(n >= 3, || {
        format!("a MOP needs at least 3 vertices, got {n}")
    })?;
    let mut g = Graph::new(n)?;
    for i in 0..n {
        for d in 1..=2 {
            if i + d < n {
                g.add_edge(i, i + d)?;
            }
        }
    }
    // evens ascending, then odds descending
    let outer: Vec<usize> = (0..n).step_by(2).chain((1..n).step_by(2).rev()).collect();
    g.set_outer_cycle(normalize_cycle(&outer))?;
    Ok(g.with_name(format!("Strip{n}")))
}

/// Uniform random labelled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, || "a tree needs at least one vertex".into())?;
    let mut g = Graph::new(n)?;
    if n == 2 {
        g.add_edge(0, 1)?;
    }
    if n > 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &c in &code {
            degree[c] += 1;
        }
        let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        for &c in &code {
            let leaf = leaves
                .pop_first()
                .expect("a Prüfer decode always has a leaf");
            g.add_edge(leaf, c)?;
            degree[c] -= 1;
            if degree[c] == 1 {
                leaves.insert(c);
            }
        }
        let last: Vec<usize> = leaves.into_iter().collect();
        g.add_edge(last[0], last[1])?;
    }
    Ok(g.with_name(format!("Tree{n}s{seed}")))
}

/// Erdős–Rényi `G(n, p)`, edges decided in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g.with_name(format!("G{n},{p}s{seed}")))
}
