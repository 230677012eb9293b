//! Maximal outerplanar graphs.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::set::{subsets_by_size, VertexSet};

/// Rotates a cyclic order to start at its smallest vertex and orients it
/// so the second entry is smaller than the last.
pub fn normalize_cycle(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let Some(start) = (0..n).min_by_key(|&i| order[i]) else {
        return Vec::new();
    };
    let fwd: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();
    if n >= 3 && fwd[1] > fwd[n - 1] {
        let mut rev = vec![fwd[0]];
        rev.extend(fwd[1..].iter().rev());
        rev
    } else {
        fwd
    }
}

pub fn is_mop(g: &Graph) -> bool {
    mop_outer_cycle(g).is_some()
}

/// A removed vertex and its two neighbors.
type Ear = (usize, usize, usize);

/// Ear-elimination order: each entry `(v, a, b)` removed a degree-2 vertex
/// `v` whose neighbors `a`, `b` are adjacent. The last three vertices left
/// form a triangle and are returned separately.
fn ear_elimination(g: &Graph) -> Option<(Vec<Ear>, [usize; 3])> {
    let n = g.n();
    if n < 3 || g.edge_count() != 2 * n - 3 {
        return None;
    }
    let mut alive = g.vertices();
    let mut ears = Vec::with_capacity(n - 3);
    while alive.len() > 3 {
        let (v, a, b) = alive.iter().find_map(|v| {
            let nb = g.neighbors(v) & alive;
            if nb.len() != 2 {
                return None;
            }
            let a = nb.first()?;
            let b = nb.last()?;
            g.has_edge(a, b).then_some((v, a, b))
        })?;
        alive.remove(v);
        ears.push((v, a, b));
    }
    let t = alive.to_vec();
    let triangle = [t[0], t[1], t[2]];
    g.is_clique(alive).then_some((ears, triangle))
}

/// The outer (Hamiltonian) cycle if `g` is maximal outerplanar, normalized
/// by [`normalize_cycle`].
///
/// Degree-2 vertices with adjacent neighbors are peeled down to a triangle;
/// the cycle is then rebuilt by reinserting each peeled vertex between its
/// two neighbors, which must be consecutive on the cycle built so far.
pub fn mop_outer_cycle(g: &Graph) -> Option<Vec<usize>> {
    let (ears, triangle) = ear_elimination(g)?;
    let mut cycle = triangle.to_vec();
    for &(v, a, b) in ears.iter().rev() {
        let len = cycle.len();
        let i = (0..len).find(|&i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % len]);
            (x == a && y == b) || (x == b && y == a)
        })?;
        cycle.insert(i + 1, v);
    }
    Some(normalize_cycle(&cycle))
}

/// Copy of `g` with its outer cycle recorded, or `NotMop`.
pub fn recognize_mop(g: &Graph) -> Result<Graph> {
    let cycle = mop_outer_cycle(g).ok_or(Error::NotMop)?;
    let mut h = g.clone();
    h.set_outer_cycle(cycle)?;
    Ok(h)
}

/// Edges not on the outer cycle, sorted.
pub fn mop_chords(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let cycle = mop_outer_cycle(g).ok_or(Error::NotMop)?;
    let n = cycle.len();
    let on_cycle = |u: usize, v: usize| {
        (0..n).any(|i| {
            let (x, y) = (cycle[i], cycle[(i + 1) % n]);
            (x, y) == (u, v) || (x, y) == (v, u)
        })
    };
    Ok(g.edges()
        .filter(|&(u, v)| n > 3 && !on_cycle(u, v))
        .collect())
}

pub fn is_chord_cover(g: &Graph, s: VertexSet) -> Result<bool> {
    let chords = mop_chords(g)?;
    Ok(chords.iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
}

/// First minimum chord cover in size-then-lexicographic order over the
/// chord endpoints.
pub fn min_chord_cover(g: &Graph) -> Result<VertexSet> {
    min_chord_cover_with(g, &Limits::default())
}

pub fn min_chord_cover_with(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    Limits::check(limits.subsets, "chord cover", g.n())?;
    let chords = mop_chords(g)?;
    let endpoints: VertexSet = chords.iter().flat_map(|&(u, v)| [u, v]).collect();
    let covers = |s: &VertexSet| chords.iter().all(|&(u, v)| s.contains(u) || s.contains(v));
    Ok(subsets_by_size(endpoints).find(covers).unwrap_or_default())
}

/// Proper 3-coloring of a MOP along its ear-elimination order, in
/// canonical form.
pub fn mop_three_coloring(g: &Graph) -> Result<Coloring> {
    let (ears, triangle) = ear_elimination(g).ok_or(Error::NotMop)?;
    let mut colors = vec![0usize; g.n()];
    for (c, &v) in triangle.iter().enumerate() {
        colors[v] = c;
    }
    for &(v, a, b) in ears.iter().rev() {
        colors[v] = 3 - colors[a] - colors[b];
    }
    Ok(Coloring::from_labels(&colors))
}
