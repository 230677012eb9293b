//! Compellingness checks and the exact `chi_P` search.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{classes_of, for_each_canonical_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number_with, min_connected_dominating_set};
use crate::limits::Limits;
use crate::property::{min_property_set_with, PropertyKind};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    /// Decided by a per-vertex test on the color classes.
    PerVertexFast,
    /// Decided by searching the rainbow committees.
    RcSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompellingReport {
    pub verdict: bool,
    /// A rainbow committee without the property; present iff `!verdict`.
    pub counterexample: Option<VertexSet>,
    pub method: CheckMethod,
}

/// Whether every rainbow committee of `coloring` has property `p`.
///
/// Dom is decided by the dominator-coloring test and TDom/IF by the
/// total-dominator-coloring test; Edge, Connected and CDom by a depth-first
/// search over the committees. On failure the counterexample is the least
/// violating committee, comparing committees by their pick from color 0,
/// then color 1, and so on.
pub fn is_compelling(g: &Graph, coloring: &Coloring, p: PropertyKind) -> Result<CompellingReport> {
    coloring.check_proper(g)?;
    let classes = coloring.classes();
    let fast = match p {
        PropertyKind::Dom => Some(dominator_classes(g, &classes)),
        PropertyKind::TDom | PropertyKind::IF => Some(total_dominator_classes(g, &classes)),
        PropertyKind::Edge | PropertyKind::Connected | PropertyKind::CDom => None,
    };
    let report = match fast {
        Some(true) => CompellingReport {
            verdict: true,
            counterexample: None,
            method: CheckMethod::PerVertexFast,
        },
        Some(false) => {
            let witness = find_violating_committee(g, &classes, p);
            debug_assert!(
                witness.is_some(),
                "per-vertex test failed but no committee violates {p}"
            );
            CompellingReport {
                verdict: false,
                counterexample: witness,
                method: CheckMethod::PerVertexFast,
            }
        }
        None => {
            let witness = find_violating_committee(g, &classes, p);
            CompellingReport {
                verdict: witness.is_none(),
                counterexample: witness,
                method: CheckMethod::RcSearch,
            }
        }
    };
    Ok(report)
}

/// Whether `coloring` is a dominator coloring: every vertex dominates some
/// color class (possibly its own singleton class).
pub fn is_dominator_coloring(g: &Graph, coloring: &Coloring) -> bool {
    coloring.is_proper(g) && dominator_classes(g, &coloring.classes())
}

pub(crate) fn dominator_classes(g: &Graph, classes: &[VertexSet]) -> bool {
    (0..g.n()).all(|v| {
        let reach = g.closed_neighbors(v);
        classes.iter().any(|c| c.is_subset(reach))
    })
}

pub(crate) fn total_dominator_classes(g: &Graph, classes: &[VertexSet]) -> bool {
    (0..g.n()).all(|v| {
        let reach = g.neighbors(v);
        classes.iter().any(|c| !c.is_empty() && c.is_subset(reach))
    })
}

/// Fast verdict used inside the `chi_P` enumeration.
pub(crate) fn compels(g: &Graph, classes: &[VertexSet], p: PropertyKind) -> bool {
    match p {
        PropertyKind::Dom => dominator_classes(g, classes),
        PropertyKind::TDom | PropertyKind::IF => total_dominator_classes(g, classes),
        _ => find_violating_committee(g, classes, p).is_none(),
    }
}

/// Least rainbow committee (by pick from class 0, then class 1, ...)
/// that fails `p`.
pub fn find_violating_committee(
    g: &Graph,
    classes: &[VertexSet],
    p: PropertyKind,
) -> Option<VertexSet> {
    let search = CommitteeSearch { g, classes, p };
    search.descend(0, VertexSet::empty())
}

struct CommitteeSearch<'a> {
    g: &'a Graph,
    classes: &'a [VertexSet],
    p: PropertyKind,
}

impl CommitteeSearch<'_> {
    fn descend(&self, depth: usize, picked: VertexSet) -> Option<VertexSet> {
        if depth == self.classes.len() {
            return (!self.p.holds(self.g, picked)).then_some(picked);
        }
        if !self.may_violate(depth, picked) {
            return None;
        }
        let mut candidates = self.classes[depth];
        if self.p == PropertyKind::Edge {
            candidates = candidates - self.g.neighbors_of_set(picked);
        }
        candidates
            .iter()
            .find_map(|v| self.descend(depth + 1, picked | VertexSet::singleton(v)))
    }

    /// False only when no completion of `picked` can violate the property.
    /// Exact for Dom, TDom and IF; a necessary condition for Edge.
    fn may_violate(&self, depth: usize, picked: VertexSet) -> bool {
        let g = self.g;
        let rest = &self.classes[depth..];
        // every remaining class has a vertex outside `blocked`
        let escapes = |blocked: VertexSet| rest.iter().all(|&c| !(c - blocked).is_empty());
        match self.p {
            PropertyKind::Edge => escapes(g.neighbors_of_set(picked)),
            PropertyKind::Dom => {
                let undominated = g.vertices() - g.closed_neighbors_of_set(picked);
                undominated.iter().any(|v| escapes(g.closed_neighbors(v)))
            }
            PropertyKind::TDom => {
                let undominated = g.vertices() - g.neighbors_of_set(picked);
                undominated.iter().any(|v| escapes(g.neighbors(v)))
            }
            PropertyKind::IF => {
                // an already isolated pick stays isolated...
                let isolated_now = picked
                    .iter()
                    .any(|x| !g.neighbors(x).intersects(picked) && escapes(g.neighbors(x)));
                // ...or a future pick is isolated from everything else
                isolated_now
                    || rest.iter().enumerate().any(|(i, &class)| {
                        (class - g.neighbors_of_set(picked)).iter().any(|x| {
                            let blocked = g.neighbors(x);
                            rest.iter()
                                .enumerate()
                                .all(|(j, &c)| i == j || !(c - blocked).is_empty())
                        })
                    })
            }
            PropertyKind::Connected | PropertyKind::CDom => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    /// `None` when no general upper bound applies.
    pub upper: Option<usize>,
}

/// Lower and upper bounds on `chi_P(G)`.
///
/// The lower bound is `max(m_P, chi)`. Upwards-closed properties get the
/// upper bound `m_P + chi`; Connected on a connected graph with at least
/// two vertices uses `max(chi, gamma_c)` and `chi + gamma_c`; any other
/// property is bounded by `n` when `V(G)` itself qualifies.
pub fn bounds_for(g: &Graph, p: PropertyKind) -> Result<Bounds> {
    bounds_for_with(g, p, &Limits::default())
}

pub fn bounds_for_with(g: &Graph, p: PropertyKind, limits: &Limits) -> Result<Bounds> {
    let chi = chromatic_number_with(g, limits)?;
    let m = min_property_set_with(p, g, limits)?
        .ok_or_else(|| Error::Infeasible(format!("no subset has property {p}")))?
        .len();
    bounds_from(g, p, m, chi, limits)
}

fn bounds_from(
    g: &Graph,
    p: PropertyKind,
    m: usize,
    chi: usize,
    limits: &Limits,
) -> Result<Bounds> {
    if p == PropertyKind::Connected && g.n() >= 2 && g.is_connected() {
        let gamma_c = min_connected_dominating_set(g, limits)?.len();
        return Ok(Bounds {
            lower: chi.max(gamma_c),
            upper: Some(chi + gamma_c),
        });
    }
    let lower = m.max(chi);
    let upper = if p.upwards_closed() {
        Some(m + chi)
    } else if p.holds(g, g.vertices()) {
        Some(g.n())
    } else {
        None
    };
    Ok(Bounds { lower, upper })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiResult {
    /// `None` when no proper coloring compels the property.
    pub value: Option<usize>,
    pub witness: Option<Coloring>,
    pub lower_bound: usize,
    pub upper_bound: Option<usize>,
}

impl ChiResult {
    pub fn is_infeasible(&self) -> bool {
        self.value.is_none()
    }
}

pub fn chi_p(g: &Graph, p: PropertyKind) -> Result<ChiResult> {
    chi_p_with(g, p, &Limits::default())
}

/// Exact `chi_P(G)`.
///
/// Scans `k` upwards from `max(m_P, chi)` to `n` and, for each `k`, walks
/// the canonical proper `k`-colorings in order; the first compelling one is
/// the witness. Compellingness is not assumed monotone in `k`.
pub fn chi_p_with(g: &Graph, p: PropertyKind, limits: &Limits) -> Result<ChiResult> {
    Limits::check(limits.colorings, "compelling chromatic number", g.n())?;
    let chi = chromatic_number_with(g, limits)?;
    let Some(min_set) = min_property_set_with(p, g, limits)? else {
        return Ok(ChiResult {
            value: None,
            witness: None,
            lower_bound: chi,
            upper_bound: None,
        });
    };
    let m = min_set.len();
    let bounds = bounds_from(g, p, m, chi, limits)?;
    for k in m.max(chi)..=g.n() {
        let mut found = None;
        let _ = for_each_canonical_coloring(g, k, |colors| {
            if compels(g, &classes_of(colors, k), p) {
                found = Some(Coloring::from_canonical_unchecked(colors, k));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(witness) = found {
            return Ok(ChiResult {
                value: Some(k),
                witness: Some(witness),
                lower_bound: bounds.lower,
                upper_bound: bounds.upper,
            });
        }
    }
    Ok(ChiResult {
        value: None,
        witness: None,
        lower_bound: bounds.lower,
        upper_bound: bounds.upper,
    })
}

/// Bounds on `chi_P` of a disjoint union from per-component
/// `(chi_P(G_i), m_P(G_i))` pairs:
/// `max_i (chi_i + sum_{j != i} m_j) <= chi_P(G) <= sum_i chi_i`.
pub fn disjoint_union_bounds(
    p: PropertyKind,
    components: &[(usize, usize)],
) -> Result<(usize, usize)> {
    if !p.distributes_over_disjoint_union() {
        return Err(Error::NotDistributive(p));
    }
    if components.is_empty() {
        return Err(Error::InvalidSize("no components".into()));
    }
    let m_total: usize = components.iter().map(|&(_, m)| m).sum();
    let lower = components
        .iter()
        .map(|&(chi, m)| chi + m_total - m)
        .max()
        .unwrap_or(0);
    let upper = components.iter().map(|&(chi, _)| chi).sum();
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn col(v: &[usize]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn c5_introduction_example() {
        let c5 = cycle(5).unwrap();
        let three = col(&[0, 1, 0, 1, 2]);
        let dom = is_compelling(&c5, &three, PropertyKind::Dom).unwrap();
        assert!(dom.verdict);
        assert_eq!(dom.method, CheckMethod::PerVertexFast);
        let conn = is_compelling(&c5, &three, PropertyKind::Connected).unwrap();
        assert!(!conn.verdict);
        let rc = conn.counterexample.unwrap();
        assert_eq!(rc.len(), 3);
        assert!(!c5.is_connected_set(rc));
        // least committee: color 0 from {0,2}, color 1 from {1,3}, color 2 = {4}
        // (0,1,4) and (0,3,4) are connected; (2,1,4) is the first that is not
        assert_eq!(rc.to_vec(), vec![1, 2, 4]);
        let four = col(&[0, 1, 2, 1, 3]);
        assert!(
            is_compelling(&c5, &four, PropertyKind::Connected)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn all_distinct_edge() {
        let g = path(4).unwrap();
        assert!(
            is_compelling(&g, &col(&[0, 1, 2, 3]), PropertyKind::Edge)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn improper_rejected() {
        let g = path(3).unwrap();
        assert_eq!(
            is_compelling(&g, &col(&[0, 1, 1]), PropertyKind::Dom),
            Err(Error::Improper(1, 2))
        );
    }

    #[test]
    fn chi_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(chi_p(&c5, PropertyKind::Dom).unwrap().value, Some(3));
        assert_eq!(chi_p(&c5, PropertyKind::Connected).unwrap().value, Some(4));
        assert_eq!(
            chi_p(&path(7).unwrap(), PropertyKind::Edge).unwrap().value,
            Some(4)
        );
        assert_eq!(
            chi_p(&complete_bipartite(2, 3).unwrap(), PropertyKind::Edge)
                .unwrap()
                .value,
            Some(2)
        );
        let empty4 = Graph::new(4).unwrap();
        let r = chi_p(&empty4, PropertyKind::Edge).unwrap();
        assert!(r.is_infeasible());
        assert!(r.witness.is_none());
    }

    #[test]
    fn witness_is_compelling() {
        for p in PropertyKind::ALL {
            let g = cycle(6).unwrap();
            let r = chi_p(&g, p).unwrap();
            let w = r.witness.unwrap();
            assert_eq!(Some(w.k()), r.value);
            assert!(w.is_canonical());
            assert!(is_compelling(&g, &w, p).unwrap().verdict);
        }
    }

    #[test]
    fn bounds_examples() {
        let b = bounds_for(&path(7).unwrap(), PropertyKind::Edge).unwrap();
        assert_eq!(
            b,
            Bounds {
                lower: 2,
                upper: Some(4)
            }
        );
        let b = bounds_for(&cycle(6).unwrap(), PropertyKind::Connected).unwrap();
        assert_eq!(
            b,
            Bounds {
                lower: 4,
                upper: Some(6)
            }
        );
        let k4 = complete(4).unwrap();
        assert_eq!(
            bounds_for(&k4, PropertyKind::Edge).unwrap(),
            Bounds {
                lower: 4,
                upper: Some(6)
            }
        );
        assert_eq!(chi_p(&k4, PropertyKind::Edge).unwrap().value, Some(4));
        let iso = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            bounds_for(&iso, PropertyKind::TDom),
            Err(Error::Infeasible(_))
        ));
        let p4 = path(4).unwrap();
        assert_eq!(bounds_for(&p4, PropertyKind::IF).unwrap().upper, Some(4));
        assert_eq!(bounds_for(&iso, PropertyKind::IF).unwrap().upper, None);
    }

    #[test]
    fn union_bounds() {
        let p = PropertyKind::Dom;
        assert_eq!(disjoint_union_bounds(p, &[(3, 2), (3, 2)]).unwrap(), (5, 6));
        assert_eq!(disjoint_union_bounds(p, &[(4, 1)]).unwrap(), (4, 4));
        assert_eq!(
            disjoint_union_bounds(p, &[(2, 2), (3, 3), (1, 1)]).unwrap(),
            (6, 6)
        );
        assert_eq!(
            disjoint_union_bounds(PropertyKind::Edge, &[(2, 2)]),
            Err(Error::NotDistributive(PropertyKind::Edge))
        );
        assert!(disjoint_union_bounds(p, &[]).is_err());
    }
}
