use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A total, surjective assignment of colors `0..k` to vertices `0..n`.
///
/// Properness depends on the graph and is checked by
/// [`Coloring::check_proper`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Wraps an assignment whose colors are exactly `0..k` for some `k`.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::UnusedColor(c));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels arbitrary color labels by order of first use.
    pub fn from_labels<T: PartialEq + Clone>(labels: &[T]) -> Coloring {
        let mut seen: Vec<T> = Vec::new();
        let colors = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l.clone());
                    seen.len() - 1
                }
            })
            .collect();
        Coloring {
            colors,
            k: seen.len(),
        }
    }

    /// One color per class, classes listed in color order.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Coloring> {
        let mut colors = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for v in *class {
                if v >= n || colors[v] != usize::MAX {
                    return Err(Error::InvalidSize(format!(
                        "vertex {v} is out of range or in two classes"
                    )));
                }
                colors[v] = c;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidSize(format!("vertex {v} has no class")));
        }
        Coloring::new(colors)
    }

    pub(crate) fn from_canonical_unchecked(colors: &[usize], k: usize) -> Coloring {
        Coloring {
            colors: colors.to_vec(),
            k,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        classes_of(&self.colors, self.k)
    }

    /// Vertices whose color is used exactly once.
    pub fn unique_colored(&self) -> VertexSet {
        self.classes()
            .into_iter()
            .filter(|c| c.len() == 1)
            .fold(VertexSet::empty(), |a, c| a | c)
    }

    /// Same partition, colors renumbered by first use.
    pub fn canonical(&self) -> Coloring {
        Coloring::from_labels(&self.colors)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Errors with the first monochromatic edge, or a length mismatch.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::ColoringLength {
                got: self.len(),
                expected: g.n(),
            });
        }
        match g.edges().find(|&(u, v)| self.colors[u] == self.colors[v]) {
            Some((u, v)) => Err(Error::Improper(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.check_proper(g).is_ok()
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<usize>) -> Result<Coloring> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Vec<usize> {
        c.colors
    }
}

pub(crate) fn classes_of(colors: &[usize], k: usize) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::empty(); k];
    for (v, &c) in colors.iter().enumerate() {
        classes[c].insert(v);
    }
    classes
}

/// Visits every canonical proper coloring of `g` with exactly `k` colors,
/// in lexicographic order of the color vector.
///
/// Vertex `v` may take color `c` only if `c <= 1 + max(colors of 0..v)`, so
/// each partition into `k` independent sets is visited once. The callback
/// receives the color vector; returning `Break` stops the walk.
pub fn for_each_canonical_coloring<F>(g: &Graph, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.n();
    if k > n || (k == 0 && n > 0) {
        return ControlFlow::Continue(());
    }
    let earlier: Vec<VertexSet> = (0..n)
        .map(|v| g.neighbors(v) & VertexSet::full(v))
        .collect();
    let mut colors = vec![0usize; n];
    walk(&earlier, k, 0, 0, &mut colors, &mut visit)
}

fn walk<F>(
    earlier: &[VertexSet],
    k: usize,
    v: usize,
    used: usize,
    colors: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = colors.len();
    if v == n {
        return if used == k {
            visit(colors)
        } else {
            ControlFlow::Continue(())
        };
    }
    // not enough vertices left to open the missing colors
    if k - used > n - v {
        return ControlFlow::Continue(());
    }
    let mut forbidden = 0u128;
    for w in earlier[v] {
        forbidden |= 1 << colors[w];
    }
    let open = (used + 1).min(k);
    for c in 0..open {
        if forbidden >> c & 1 == 0 {
            colors[v] = c;
            walk(earlier, k, v + 1, used.max(c + 1), colors, visit)?;
        }
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn count(g: &Graph, k: usize) -> usize {
        let mut n = 0;
        let _ = for_each_canonical_coloring(g, k, |_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    #[test]
    fn counts_match_stirling_on_edgeless() {
        // S(5, k) for k = 1..5
        let g = Graph::new(5).unwrap();
        let got: Vec<usize> = (1..=5).map(|k| count(&g, k)).collect();
        assert_eq!(got, vec![1, 15, 25, 10, 1]);
    }

    #[test]
    fn c5_colorings() {
        let c5 = cycle(5).unwrap();
        assert_eq!(count(&c5, 2), 0);
        // proper 3-colorings of C5: (3-1)^5 + (-1)^5 (3-1) = 30, / 3! = 5
        assert_eq!(count(&c5, 3), 5);
        // P(C5, 4) = 3^5 - 3 = 240; exactly-4 = 240 - 4 * 30 = 120, / 4! = 5
        assert_eq!(count(&c5, 4), 5);
        assert_eq!(count(&c5, 5), 1);
        let _ = for_each_canonical_coloring(&c5, 3, |c| {
            let col = Coloring::new(c.to_vec()).unwrap();
            assert!(col.is_proper(&c5));
            assert!(col.is_canonical());
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn coloring_validation() {
        assert_eq!(Coloring::new(vec![0, 2]), Err(Error::UnusedColor(1)));
        let c = Coloring::from_labels(&[7, 3, 7, 9]);
        assert_eq!(c.as_slice(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
        let p3 = path(3).unwrap();
        assert_eq!(
            Coloring::new(vec![0, 0, 1]).unwrap().check_proper(&p3),
            Err(Error::Improper(0, 1))
        );
        assert!(matches!(
            Coloring::new(vec![0, 1]).unwrap().check_proper(&p3),
            Err(Error::ColoringLength {
                got: 2,
                expected: 3
            })
        ));
        let c = Coloring::new(vec![1, 0, 1, 2]).unwrap();
        assert!(!c.is_canonical());
        assert_eq!(c.canonical().as_slice(), &[0, 1, 0, 2]);
        assert_eq!(c.unique_colored().to_vec(), vec![1, 3]);
        let classes = c.classes();
        assert_eq!(Coloring::from_classes(4, &classes).unwrap(), c);
    }
}
