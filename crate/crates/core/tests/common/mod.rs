//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works from a plain boolean adjacency matrix and
//! exhaustive enumeration, independent of the library's bitset search code.

#![allow(dead_code)]

use compel_core::{Graph, PropertyKind};

pub struct Adj {
    pub n: usize,
    m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Adj {
        let n = g.n();
        let m = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        Adj { n, m }
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        self.m[u][v]
    }
}

/// Property of a vertex list, evaluated from the definitions.
pub fn prop(a: &Adj, p: PropertyKind, s: &[usize]) -> bool {
    let dominated = |v: usize| s.contains(&v) || s.iter().any(|&x| a.adj(v, x));
    let tdominated = |v: usize| s.iter().any(|&x| a.adj(v, x));
    let connected = || {
        if s.is_empty() {
            return false;
        }
        let mut seen = vec![s[0]];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            for &w in s {
                if !seen.contains(&w) && a.adj(u, w) {
                    seen.push(w);
                }
            }
            i += 1;
        }
        seen.len() == s.len()
    };
    match p {
        PropertyKind::Dom => (0..a.n).all(dominated),
        PropertyKind::TDom => (0..a.n).all(tdominated),
        PropertyKind::IF => s.iter().all(|&v| s.iter().any(|&x| a.adj(v, x))),
        PropertyKind::Edge => s.iter().any(|&v| s.iter().any(|&x| a.adj(v, x))),
        PropertyKind::Connected => connected(),
        PropertyKind::CDom => connected() && (0..a.n).all(dominated),
    }
}

pub fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Smallest qualifying nonempty subset size over all `2^n` masks.
pub fn min_size(a: &Adj, p: PropertyKind) -> Option<usize> {
    (1u32..1 << a.n)
        .map(|mask| members(mask, a.n))
        .filter(|s| prop(a, p, s))
        .map(|s| s.len())
        .min()
}

/// All colorings `0..n -> 0..k` by counting in base `k`.
pub fn all_assignments(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u64).pow(n as u32);
    (0..total).map(move |mut x| {
        let mut c = vec![0; n];
        for slot in c.iter_mut() {
            *slot = (x % k as u64) as usize;
            x /= k as u64;
        }
        c
    })
}

pub fn is_proper(a: &Adj, c: &[usize]) -> bool {
    (0..a.n).all(|u| (u + 1..a.n).all(|v| !a.adj(u, v) || c[u] != c[v]))
}

pub fn is_surjective(c: &[usize], k: usize) -> bool {
    (0..k).all(|col| c.contains(&col))
}

/// Colors numbered by first use.
pub fn is_first_use(c: &[usize]) -> bool {
    let mut next = 0;
    for &col in c {
        if col > next {
            return false;
        }
        if col == next {
            next += 1;
        }
    }
    true
}

/// Canonical proper colorings with exactly `k` colors, by filtering all
/// `k^n` assignments.
pub fn canonical_colorings(a: &Adj, k: usize) -> Vec<Vec<usize>> {
    all_assignments(a.n, k)
        .filter(|c| is_first_use(c) && is_surjective(c, k) && is_proper(a, c))
        .collect()
}

pub fn brute_chromatic(a: &Adj) -> usize {
    (0..=a.n)
        .find(|&k| all_assignments(a.n, k.max(1)).any(|c| is_proper(a, &c)) && (k > 0 || a.n == 0))
        .unwrap_or(a.n)
}

pub fn classes(c: &[usize]) -> Vec<Vec<usize>> {
    let k = c.iter().map(|&x| x + 1).max().unwrap_or(0);
    let mut out = vec![Vec::new(); k];
    for (v, &col) in c.iter().enumerate() {
        out[col].push(v);
    }
    out
}

/// Every rainbow committee, in order of the pick from class 0, then
/// class 1, and so on (odometer order).
pub fn committees(c: &[usize]) -> Vec<Vec<usize>> {
    let cls = classes(c);
    let mut out = vec![Vec::new()];
    for class in &cls {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                class.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

/// First committee failing `p`, in odometer order.
pub fn naive_violation(a: &Adj, c: &[usize], p: PropertyKind) -> Option<Vec<usize>> {
    committees(c).into_iter().find(|j| !prop(a, p, j))
}

pub fn naive_compels(a: &Adj, c: &[usize], p: PropertyKind) -> bool {
    naive_violation(a, c, p).is_none()
}

/// Every vertex dominates some whole class (its own singleton counts).
pub fn dominator_coloring(a: &Adj, c: &[usize]) -> bool {
    let cls = classes(c);
    (0..a.n).all(|v| {
        cls.iter()
            .any(|cl| cl.iter().all(|&x| x == v || a.adj(v, x)))
    })
}

/// Every vertex is adjacent to all of some other class.
pub fn total_dominator_coloring(a: &Adj, c: &[usize]) -> bool {
    let cls = classes(c);
    (0..a.n).all(|v| {
        cls.iter()
            .enumerate()
            .any(|(i, cl)| i != c[v] && !cl.is_empty() && cl.iter().all(|&x| a.adj(v, x)))
    })
}

/// Minimum `k` with a canonical proper coloring accepted by `ok`.
pub fn brute_min_colors(a: &Adj, ok: impl Fn(&[usize]) -> bool) -> Option<usize> {
    (1..=a.n).find(|&k| canonical_colorings(a, k).iter().any(|c| ok(c)))
}

/// `chi_P` by enumerating every canonical coloring and every committee.
pub fn naive_chi(a: &Adj, p: PropertyKind) -> Option<usize> {
    brute_min_colors(a, |c| naive_compels(a, c, p))
}

pub fn brute_gamma_c(a: &Adj) -> Option<usize> {
    min_size(a, PropertyKind::CDom)
}
