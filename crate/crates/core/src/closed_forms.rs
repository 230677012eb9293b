//! Closed-form values of the Edge- and Connected-compelling chromatic
//! numbers for the families where they are known.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number_with, connected_domination_number, interior_count, is_complete_bipartite,
    radius,
};
use crate::limits::Limits;
use crate::mop::{is_mop, mop_outer_cycle, mop_three_coloring};
use crate::set::VertexSet;

/// Edge-compelling number of `P_n`: 2 for n = 2, 3; 3 for n = 4..=6;
/// 4 from n = 7 on.
pub fn chi_edge_path(n: usize) -> Result<usize> {
    match n {
        0 | 1 => Err(Error::InvalidSize(format!("P_{n} has no edge"))),
        2 | 3 => Ok(2),
        4..=6 => Ok(3),
        _ => Ok(4),
    }
}

/// Edge-compelling number of `C_n`: 2 for n = 4; 3 for n = 3, 5, 6, 7;
/// 4 from n = 8 on.
pub fn chi_edge_cycle(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidSize(format!("C_{n} is not a cycle"))),
        4 => Ok(2),
        3 | 5..=7 => Ok(3),
        _ => Ok(4),
    }
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Edge-compelling number of a tree on at least two vertices.
///
/// Stars (including `K_2`) are the complete bipartite trees and get 2.
/// Trees of radius 2 and double brooms get 3. Every other tree gets the
/// general `chi + 2 = 4` upper bound, which is then exact.
pub fn chi_edge_tree(t: &Graph) -> Result<usize> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(Error::InvalidSize("a single vertex has no edge".into()));
    }
    if is_complete_bipartite(t) {
        Ok(2)
    } else if radius(t)? == 2 || is_double_broom(t)? {
        Ok(3)
    } else {
        Ok(4)
    }
}

/// Whether some edge `xy` splits the tree into two stars in which `x` and
/// `y` are leaves.
pub fn is_double_broom(t: &Graph) -> Result<bool> {
    require_tree(t)?;
    let is_star_with_leaf = |part: VertexSet, leaf: usize| -> bool {
        if part.len() < 2 || (t.neighbors(leaf) & part).len() != 1 {
            return false;
        }
        // a center other than `leaf` adjacent to the rest of the part
        (part - VertexSet::singleton(leaf)).iter().any(|c| {
            (part - VertexSet::singleton(c)).is_subset(t.neighbors(c))
                && (part - VertexSet::singleton(c))
                    .iter()
                    .all(|v| (t.neighbors(v) & part).len() == 1)
        })
    };
    for (x, y) in t.edges() {
        let mut split = t.clone();
        split.remove_edge(x, y)?;
        let side_x = split.reach_within(x, t.vertices());
        let side_y = t.vertices() - side_x;
        if is_star_with_leaf(side_x, x) && is_star_with_leaf(side_y, y) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Connected-compelling number of `P_n`: 2 for `P_2`, `n - 1` from n = 3.
pub fn chi_conn_path(n: usize) -> Result<usize> {
    match n {
        0 | 1 => Err(Error::InvalidSize(format!("need n >= 2, got {n}"))),
        2 => Ok(2),
        _ => Ok(n - 1),
    }
}

/// Connected-compelling number of `C_n`: 3 for n = 3, 2 for n = 4, and
/// `n - 1` from n = 5.
pub fn chi_conn_cycle(n: usize) -> Result<usize> {
    match n {
        0..=2 => Err(Error::InvalidSize(format!("C_{n} is not a cycle"))),
        3 => Ok(3),
        4 => Ok(2),
        _ => Ok(n - 1),
    }
}

/// Connected-compelling number of a tree: one more than its number of
/// interior vertices (order at least 3), and 2 for `K_2`.
pub fn chi_conn_tree(t: &Graph) -> Result<usize> {
    require_tree(t)?;
    match t.n() {
        1 => Err(Error::InvalidSize("need a tree with an edge".into())),
        2 => Ok(2),
        _ => Ok(1 + interior_count(t)),
    }
}

/// Connected-compelling number of a maximal outerplanar graph:
/// `gamma_c + 2`.
pub fn chi_conn_mop(g: &Graph) -> Result<usize> {
    if !is_mop(g) {
        return Err(Error::NotMop);
    }
    Ok(connected_domination_number(g)? + 2)
}

/// `chi(G)` when `chi(G) >= n/2 + 1`, where every proper `chi`-coloring is
/// Edge-compelling; `None` otherwise.
pub fn chi_edge_high_chromatic(g: &Graph) -> Result<Option<usize>> {
    chi_edge_high_chromatic_with(g, &Limits::default())
}

pub fn chi_edge_high_chromatic_with(g: &Graph, limits: &Limits) -> Result<Option<usize>> {
    let chi = chromatic_number_with(g, limits)?;
    Ok((2 * chi >= g.n() + 2).then_some(chi))
}

/// Five-coloring of a MOP that compels an edge: the two ends of an outer
/// edge get their own colors and the rest keeps a proper 3-coloring.
pub fn mop_edge_five_coloring(g: &Graph) -> Result<Coloring> {
    let outer = mop_outer_cycle(g).ok_or(Error::NotMop)?;
    let base = mop_three_coloring(g)?;
    let mut labels = base.as_slice().to_vec();
    labels[outer[0]] = 3;
    labels[outer[1]] = 4;
    Ok(Coloring::from_labels(&labels))
}
