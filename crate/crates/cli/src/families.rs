//! Graph families for `family-table` and `generate`, with the closed form
//! each family has for a given property.

use clap::ValueEnum;
use compel_core::closed_forms::*;
use compel_core::generators::*;
use compel_core::invariants::{is_complete, is_complete_bipartite};
use compel_core::{Graph, Limits, PropertyKind, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `P_n`.
    Path,
    /// `C_n`.
    Cycle,
    /// Random tree of order `n`.
    TreeRandom,
    /// Random maximal outerplanar graph of order `n`.
    MopRandom,
    /// Double broom of order `n`, stars as even as possible.
    DoubleBroom,
    /// Split graph `S_n` of order `2n`.
    Split,
    /// Path `P_n` plus a universal vertex.
    Fan,
}

/// What a family's closed form says about `chi_P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Exact(usize),
    Exceeds(usize),
    Unknown,
}

impl Expectation {
    pub fn label(self) -> Option<String> {
        match self {
            Expectation::Exact(v) => Some(v.to_string()),
            Expectation::Exceeds(v) => Some(format!(">{v}")),
            Expectation::Unknown => None,
        }
    }

    pub fn matches(self, value: Option<usize>) -> Option<bool> {
        match self {
            Expectation::Exact(v) => Some(value == Some(v)),
            Expectation::Exceeds(v) => Some(value.is_some_and(|x| x > v)),
            Expectation::Unknown => None,
        }
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::TreeRandom => "tree-random",
            Family::MopRandom => "mop-random",
            Family::DoubleBroom => "double-broom",
            Family::Split => "split",
            Family::Fan => "fan",
        }
    }

    /// Smallest accepted parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path | Family::Fan => 1,
            Family::TreeRandom | Family::Split => 2,
            Family::Cycle | Family::MopRandom => 3,
            Family::DoubleBroom => 4,
        }
    }

    /// Order of the graph built from parameter `n`.
    pub fn order(self, n: usize) -> usize {
        match self {
            Family::Split => 2 * n,
            Family::Fan => n + 1,
            _ => n,
        }
    }

    /// Random members are seeded by `seed + n`, so one table row does not
    /// depend on the others.
    pub fn build(self, n: usize, seed: u64) -> Result<Graph> {
        let s = seed.wrapping_add(n as u64);
        match self {
            Family::Path => path(n),
            Family::Cycle => cycle(n),
            Family::TreeRandom => random_tree(n, s),
            Family::MopRandom => random_mop(n, s),
            Family::DoubleBroom => {
                let a = n.saturating_sub(2) / 2;
                double_broom(a, n.saturating_sub(2 + a))
            }
            Family::Split => split_graph(n),
            Family::Fan => fan(n),
        }
    }

    pub fn expectation(
        self,
        g: &Graph,
        n: usize,
        p: PropertyKind,
        limits: &Limits,
    ) -> Result<Expectation> {
        use Expectation::*;
        let e = match (p, self) {
            (PropertyKind::Edge, Family::Path) => Exact(chi_edge_path(n)?),
            (PropertyKind::Edge, Family::Cycle) => Exact(chi_edge_cycle(n)?),
            (PropertyKind::Edge, Family::TreeRandom | Family::DoubleBroom) => {
                Exact(chi_edge_tree(g)?)
            }
            (PropertyKind::Edge, Family::Split) => Exceeds(n),
            (PropertyKind::Edge, _) => {
                chi_edge_high_chromatic_with(g, limits)?.map_or(Unknown, Exact)
            }
            (PropertyKind::Connected, Family::Path) => Exact(chi_conn_path(n)?),
            (PropertyKind::Connected, Family::Cycle) => Exact(chi_conn_cycle(n)?),
            (PropertyKind::Connected, Family::TreeRandom | Family::DoubleBroom) => {
                Exact(chi_conn_tree(g)?)
            }
            (PropertyKind::Connected, Family::MopRandom) => Exact(chi_conn_mop(g)?),
            (PropertyKind::Connected, _) if is_complete(g) => Exact(g.n()),
            (PropertyKind::Connected, _) if is_complete_bipartite(g) => Exact(2),
            _ => Unknown,
        };
        Ok(e)
    }
}
