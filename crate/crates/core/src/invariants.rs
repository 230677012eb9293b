//! Classical graph invariants consumed by the bounds and closed forms.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::property::{min_property_set_with, PropertyKind};
use crate::set::VertexSet;

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

/// Exact chromatic number by branch and bound.
///
/// Vertices are visited in descending degree order. A greedy clique gives
/// the lower bound and a greedy coloring the upper bound; every `k` in
/// between is decided by a canonical-coloring backtrack (a vertex may only
/// open color `max_used + 1`).
pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    Limits::check(limits.chromatic, "chromatic number", g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // earlier[i]: neighbors of order[i] that come before it, as positions
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .map(|w| pos[w])
                .filter(|&p| p < i)
                .collect()
        })
        .collect();

    let lower = greedy_clique(g).len();
    let upper = greedy_coloring_size(&earlier);
    for k in lower..upper {
        let mut colors = vec![0usize; n];
        if colorable(&earlier, k, 0, 0, &mut colors) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn greedy_coloring_size(earlier: &[Vec<usize>]) -> usize {
    let mut colors = vec![0usize; earlier.len()];
    let mut used = 0;
    for i in 0..earlier.len() {
        let mut forbidden = 0u128;
        for &p in &earlier[i] {
            forbidden |= 1 << colors[p];
        }
        colors[i] = (!forbidden).trailing_zeros() as usize;
        used = used.max(colors[i] + 1);
    }
    used
}

fn colorable(
    earlier: &[Vec<usize>],
    k: usize,
    i: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if i == earlier.len() {
        return true;
    }
    let mut forbidden = 0u128;
    for &p in &earlier[i] {
        forbidden |= 1 << colors[p];
    }
    let open = (used + 1).min(k);
    for c in 0..open {
        if forbidden >> c & 1 == 0 {
            colors[i] = c;
            if colorable(earlier, k, i + 1, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    false
}

/// Best clique found by growing greedily from every vertex.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::empty();
    for start in 0..g.n() {
        let mut clique = VertexSet::singleton(start);
        let mut candidates = g.neighbors(start);
        while !candidates.is_empty() {
            let pick = candidates
                .iter()
                .max_by_key(|&v| ((g.neighbors(v) & candidates).len(), std::cmp::Reverse(v)))
                .unwrap_or(0);
            clique.insert(pick);
            candidates &= g.neighbors(pick);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

pub fn connected_domination_number(g: &Graph) -> Result<usize> {
    min_connected_dominating_set(g, &Limits::default()).map(|s| s.len())
}

/// First minimum connected dominating set in size-then-lexicographic order.
pub fn min_connected_dominating_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    if g.n() == 0 {
        return Err(Error::InvalidSize("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    min_property_set_with(PropertyKind::CDom, g, limits)?
        .ok_or_else(|| Error::Infeasible("no connected dominating set".into()))
}

fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Err(Error::InvalidSize("empty graph".into()));
    }
    (0..g.n())
        .map(|v| {
            g.bfs_distances(v)
                .into_iter()
                .try_fold(0, |acc, d| d.map(|d| acc.max(d)).ok_or(Error::Disconnected))
        })
        .collect()
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().max().unwrap_or(0))
}

pub fn radius(g: &Graph) -> Result<usize> {
    Ok(eccentricities(g)?.into_iter().min().unwrap_or(0))
}

/// Connected components, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut rest = g.vertices();
    while let Some(v) = rest.first() {
        let comp = g.reach_within(v, g.vertices());
        rest = rest - comp;
        out.push(comp);
    }
    out
}

/// A 2-coloring `(side0, side1)` if one exists. The smallest vertex of each
/// component goes to `side0`.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = [VertexSet::empty(), VertexSet::empty()];
    for comp in components(g) {
        let root = comp.first()?;
        let dist = g.bfs_distances(root);
        for v in comp {
            side[dist[v].unwrap_or(0) % 2].insert(v);
        }
    }
    for s in side {
        if !g.is_independent(s) {
            return None;
        }
    }
    Some((side[0], side[1]))
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Whether `g` is `K_{a,b}` for some `a, b >= 1`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    match bipartition(g) {
        Some((a, b)) => !a.is_empty() && !b.is_empty() && g.edge_count() == a.len() * b.len(),
        None => false,
    }
}

pub fn is_complete(g: &Graph) -> bool {
    g.is_clique(g.vertices())
}

/// Number of vertices of degree at least 2.
pub fn interior_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) >= 2).count()
}
