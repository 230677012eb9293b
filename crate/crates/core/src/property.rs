//! Subset properties a rainbow committee can be required to have.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::set::{subsets_of_size, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PropertyKind {
    /// Every vertex of the graph is in the set or adjacent to it.
    Dom,
    /// Every vertex of the graph has a neighbor in the set.
    TDom,
    /// Every vertex of the set has a neighbor in the set.
    IF,
    /// Some two vertices of the set are adjacent.
    Edge,
    /// The set induces a connected subgraph.
    Connected,
    /// The set is a connected dominating set.
    CDom,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 6] = [
        PropertyKind::Dom,
        PropertyKind::TDom,
        PropertyKind::IF,
        PropertyKind::Edge,
        PropertyKind::Connected,
        PropertyKind::CDom,
    ];

    /// Every superset of a qualifying set qualifies.
    ///
    /// CDom counts as upwards-closed: in a connected graph each vertex
    /// added to a connected dominating set is adjacent to it, and in a
    /// disconnected graph no set qualifies at all.
    pub fn upwards_closed(self) -> bool {
        matches!(
            self,
            PropertyKind::Dom | PropertyKind::TDom | PropertyKind::Edge | PropertyKind::CDom
        )
    }

    /// For nonempty `S1 ⊆ V(G1)`, `S2 ⊆ V(G2)`: `S1 ∪ S2` qualifies in
    /// `G1 ⊔ G2` iff each `Si` qualifies in `Gi`.
    pub fn distributes_over_disjoint_union(self) -> bool {
        matches!(
            self,
            PropertyKind::Dom | PropertyKind::TDom | PropertyKind::IF
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::Dom => "dom",
            PropertyKind::TDom => "tdom",
            PropertyKind::IF => "if",
            PropertyKind::Edge => "edge",
            PropertyKind::Connected => "connected",
            PropertyKind::CDom => "cdom",
        }
    }

    /// Evaluates the property on `s` without validating it.
    pub fn holds(self, g: &Graph, s: VertexSet) -> bool {
        match self {
            PropertyKind::Dom => g.closed_neighbors_of_set(s) == g.vertices(),
            PropertyKind::TDom => g.neighbors_of_set(s) == g.vertices(),
            PropertyKind::IF => s.iter().all(|v| g.neighbors(v).intersects(s)),
            PropertyKind::Edge => s.iter().any(|v| g.neighbors(v).intersects(s)),
            PropertyKind::Connected => g.is_connected_set(s),
            PropertyKind::CDom => {
                g.closed_neighbors_of_set(s) == g.vertices() && g.is_connected_set(s)
            }
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let lower = s.to_ascii_lowercase();
        PropertyKind::ALL
            .into_iter()
            .find(|p| p.name() == lower)
            .ok_or_else(|| {
                format!("unknown property `{s}` (expected dom, tdom, if, edge, connected or cdom)")
            })
    }
}

/// Evaluates `p` on a nonempty subset of `V(G)`.
pub fn eval_property(p: PropertyKind, g: &Graph, s: VertexSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_set(s)?;
    Ok(p.holds(g, s))
}

/// `m_P(G)`; `None` when no subset has the property.
pub fn min_property_size(p: PropertyKind, g: &Graph) -> Result<Option<usize>> {
    Ok(min_property_set(p, g)?.map(|s| s.len()))
}

pub fn min_property_set(p: PropertyKind, g: &Graph) -> Result<Option<VertexSet>> {
    min_property_set_with(p, g, &Limits::default())
}

/// First qualifying nonempty subset in size-then-lexicographic order.
pub fn min_property_set_with(
    p: PropertyKind,
    g: &Graph,
    limits: &Limits,
) -> Result<Option<VertexSet>> {
    Limits::check(limits.subsets, "subset enumeration", g.n())?;
    let all = g.vertices();
    for k in 1..=g.n() {
        if let Some(s) = subsets_of_size(all, k).find(|&s| p.holds(g, s)) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
