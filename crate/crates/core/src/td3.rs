//! Polynomial-time test for total dominator chromatic number 3.
//!
//! A total dominator coloring (TDC) is a proper coloring in which every
//! vertex is adjacent to all vertices of some other color class. A 3-class
//! TDC either has, for each color, one class that all its vertices
//! dominate (case 1), or some color whose vertices `u`, `v` dominate
//! different classes. In the latter case the red class is exactly
//! `V \ (N(u) ∪ N(v))`; then either another color splits the same way
//! (case 2.1, which pins down all three classes from four guessed vertices)
//! or the other two classes are joined completely (case 2.2).
//!
//! Each case only proposes candidate colorings; every candidate is
//! accepted only after the full TDC check.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{for_each_canonical_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{bipartition, is_complete_bipartite};
use crate::limits::Limits;
use crate::set::VertexSet;
use crate::solver::total_dominator_classes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TdcCase {
    Case1,
    Case21,
    Case22,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdcWitness {
    pub coloring: Coloring,
    pub case: TdcCase,
    /// `[v]` for case 1, `[u, v]` for case 2.2, `[u, v, x, y]` for case 2.1.
    pub guessed: Vec<usize>,
}

/// Whether `coloring` is a proper total dominator coloring of `g`.
/// Always false when `g` has an isolated vertex.
pub fn is_total_dominator_coloring(g: &Graph, coloring: &Coloring) -> bool {
    coloring.is_proper(g) && total_dominator_classes(g, &coloring.classes())
}

/// Minimum number of classes of a TDC by exhaustive canonical enumeration;
/// `None` when `g` has an isolated vertex (or no vertices).
pub fn chi_td_bruteforce(g: &Graph) -> Result<Option<usize>> {
    chi_td_bruteforce_with(g, &Limits::default())
}

pub fn chi_td_bruteforce_with(g: &Graph, limits: &Limits) -> Result<Option<usize>> {
    Limits::check(limits.colorings, "brute-force chi_td", g.n())?;
    if g.n() == 0 || g.has_isolated_vertex() {
        return Ok(None);
    }
    for k in 1..=g.n() {
        if has_tdc_with_classes(g, k) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Whether some TDC uses exactly `k` classes, by enumeration.
pub fn has_tdc_with_classes(g: &Graph, k: usize) -> bool {
    for_each_canonical_coloring(g, k, |colors| {
        let c = Coloring::from_canonical_unchecked(colors, k);
        if total_dominator_classes(g, &c.classes()) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_break()
}

/// Builds and validates a 3-class candidate.
fn accept(g: &Graph, red: VertexSet, blue: VertexSet, green: VertexSet) -> Option<Coloring> {
    let all = g.vertices();
    if red.is_empty() || blue.is_empty() || green.is_empty() {
        return None;
    }
    if red.intersects(blue)
        || red.intersects(green)
        || blue.intersects(green)
        || (red | blue | green) != all
    {
        return None;
    }
    if !(g.is_independent(red) && g.is_independent(blue) && g.is_independent(green)) {
        return None;
    }
    let coloring = Coloring::from_classes(g.n(), &[red, blue, green])
        .ok()?
        .canonical();
    total_dominator_classes(g, &coloring.classes()).then_some(coloring)
}

/// A 3-class total dominator coloring if one exists.
///
/// Scan order: case 1 over `v` ascending, case 2.2 over pairs `u < v`,
/// case 2.1 over pairs of pairs; the first accepted candidate is returned.
pub fn has_tdc3(g: &Graph) -> Option<TdcWitness> {
    let n = g.n();
    if n < 3 || g.has_isolated_vertex() {
        return None;
    }
    let all = g.vertices();

    for v in 0..n {
        let red = all - g.neighbors(v);
        let rest = all - red;
        if !red.iter().all(|r| g.neighbors(r) == rest) {
            continue;
        }
        let Some((mut blue, mut green)) = bipartition(&g.induced(rest)) else {
            continue;
        };
        if green.is_empty() && blue.len() >= 2 {
            // `rest` is edgeless here; any split into two nonempty sides works
            let moved = blue.last().unwrap_or(0);
            blue.remove(moved);
            green.insert(moved);
        }
        let (blue, green) = (lift(blue, rest), lift(green, rest));
        if let Some(coloring) = accept(g, red, blue, green) {
            return Some(TdcWitness {
                coloring,
                case: TdcCase::Case1,
                guessed: vec![v],
            });
        }
    }

    // red class determined by two same-colored vertices dominating
    // different classes
    let red_for = |u: usize, v: usize| all - (g.neighbors(u) | g.neighbors(v));

    for u in 0..n {
        for v in u + 1..n {
            let red = red_for(u, v);
            if !red.contains(u) || !red.contains(v) {
                continue;
            }
            let rest = all - red;
            let h = g.induced(rest);
            if !is_complete_bipartite(&h) {
                continue;
            }
            let Some((blue, green)) = bipartition(&h) else {
                continue;
            };
            if let Some(coloring) = accept(g, red, lift(blue, rest), lift(green, rest)) {
                return Some(TdcWitness {
                    coloring,
                    case: TdcCase::Case22,
                    guessed: vec![u, v],
                });
            }
        }
    }

    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let cls = red_for(u, v);
            if cls.contains(u) && cls.contains(v) {
                pairs.push((u, v, cls));
            }
        }
    }
    for (i, &(u, v, red)) in pairs.iter().enumerate() {
        for &(x, y, blue) in &pairs[i + 1..] {
            if red == blue {
                continue;
            }
            let green = all - red - blue;
            if let Some(coloring) = accept(g, red, blue, green) {
                return Some(TdcWitness {
                    coloring,
                    case: TdcCase::Case21,
                    guessed: vec![u, v, x, y],
                });
            }
        }
    }
    None
}

/// Maps a set over `0..rest.len()` back to the vertices of `rest`.
fn lift(local: VertexSet, rest: VertexSet) -> VertexSet {
    let members = rest.to_vec();
    local.iter().map(|i| members[i]).collect()
}

/// Whether the total dominator chromatic number is exactly 3: a 3-class
/// TDC exists and `g` is not complete bipartite (the only graphs with a
/// 2-class TDC).
pub fn chi_td_is_3(g: &Graph) -> bool {
    !is_complete_bipartite(g) && has_tdc3(g).is_some()
}

/// Whether the Connected-compelling chromatic number of a connected graph
/// is exactly 3.
///
/// A 3-set is total dominating iff it is connected dominating, so on a
/// connected graph a 3-coloring compels connectivity iff it is a TDC. The
/// value 2 belongs to the complete bipartite graphs and 1 to `K_1`.
pub fn chi_connected_is_3(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 3 {
        return Ok(false);
    }
    Ok(chi_td_is_3(g))
}
