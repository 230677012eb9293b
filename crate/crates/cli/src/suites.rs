//! Verification suites behind `compel verify`.

use std::ops::ControlFlow;

use anyhow::Result;
use clap::ValueEnum;
use compel_core::corpus::{all_graphs, random_connected_corpus, random_corpus};
use compel_core::generators::{join_dominator, random_mop, random_tree};
use compel_core::invariants::*;
use compel_core::mop::{is_chord_cover, mop_chords};
use compel_core::solver::{find_violating_committee, is_dominator_coloring};
use compel_core::td3::{
    chi_connected_is_3, has_tdc3, has_tdc_with_classes, is_total_dominator_coloring,
};
use compel_core::{
    chi_p_with, disjoint_union_bounds, for_each_canonical_coloring, min_property_size, Coloring,
    Graph, Limits, PropertyKind, VertexSet,
};

use crate::families::Family;
use crate::report::AssertionRow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Equivalences,
    MopClaims,
    Td3,
    Bounds,
    Families,
    Extremal,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivalences => "equivalences",
            Suite::MopClaims => "mop-claims",
            Suite::Td3 => "td3",
            Suite::Bounds => "bounds",
            Suite::Families => "families",
            Suite::Extremal => "extremal",
            Suite::All => "all",
        }
    }
}

pub struct Ctx {
    pub seed: u64,
    pub max_n: usize,
    pub limits: Limits,
}

impl Ctx {
    fn cap(&self, n: usize) -> usize {
        n.min(self.max_n)
    }

    fn chi(&self, g: &Graph, p: PropertyKind) -> Result<Option<usize>> {
        Ok(chi_p_with(g, p, &self.limits)?.value)
    }
}

/// Counts checks for one assertion and keeps the first failure.
struct Tally {
    row: AssertionRow,
}

impl Tally {
    fn new(suite: Suite, assertion: &str) -> Tally {
        Tally {
            row: AssertionRow {
                suite: suite.name().into(),
                assertion: assertion.into(),
                checks: 0,
                failures: 0,
                example: None,
            },
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.row.checks += 1;
        if !ok {
            self.row.failures += 1;
            self.row.example.get_or_insert_with(describe);
        }
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!(
        "{} n={} edges [{}]",
        g.name().unwrap_or("graph"),
        g.n(),
        edges.join(" ")
    )
}

pub fn run_suite(suite: Suite, ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let rows = match suite {
        Suite::Equivalences => equivalences(ctx)?,
        Suite::MopClaims => mop_claims(ctx)?,
        Suite::Td3 => td3(ctx)?,
        Suite::Bounds => bounds(ctx)?,
        Suite::Families => families(ctx)?,
        Suite::Extremal => extremal(ctx)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::value_variants().iter().filter(|&&s| s != Suite::All) {
                all.extend(run_suite(*s, ctx)?);
            }
            all
        }
    };
    Ok(rows)
}

fn equivalences(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let s = Suite::Equivalences;
    let mut dom = Tally::new(s, "Dom-compelling iff dominator coloring");
    let mut tdom = Tally::new(s, "TDom-compelling iff total dominator coloring");
    let mut inf = Tally::new(s, "IF-compelling iff TDom-compelling");
    let mut conn = Tally::new(
        s,
        "Connected-compelling iff CDom-compelling on connected graphs",
    );
    let compels =
        |g: &Graph, c: &Coloring, p| find_violating_committee(g, &c.classes(), p).is_none();
    for g in random_corpus(200, 1, ctx.cap(8), ctx.seed)? {
        let connected = g.is_connected() && g.edge_count() > 0;
        for k in 1..=g.n().min(4) {
            let _ = for_each_canonical_coloring(&g, k, |colors| {
                let c = Coloring::new(colors.to_vec()).expect("canonical coloring");
                let here = || format!("coloring {colors:?} of {}", describe(&g));
                let d = compels(&g, &c, PropertyKind::Dom);
                let t = compels(&g, &c, PropertyKind::TDom);
                dom.check(d == is_dominator_coloring(&g, &c), here);
                tdom.check(t == is_total_dominator_coloring(&g, &c), here);
                inf.check(compels(&g, &c, PropertyKind::IF) == t, here);
                if connected {
                    let a = compels(&g, &c, PropertyKind::Connected);
                    conn.check(a == compels(&g, &c, PropertyKind::CDom), here);
                }
                ControlFlow::Continue(())
            });
        }
    }
    let mut fams = Vec::new();
    for (family, p) in [
        (Family::Path, PropertyKind::Connected),
        (Family::Cycle, PropertyKind::Connected),
    ] {
        let mut t = Tally::new(
            s,
            &format!("chi_Connected of {} matches closed form", family.name()),
        );
        for n in family.min_n().max(3)..=ctx.cap(9) {
            let g = family.build(n, ctx.seed)?;
            let e = family.expectation(&g, n, p, &ctx.limits)?;
            let got = ctx.chi(&g, p)?;
            t.check(e.matches(got) == Some(true), || {
                format!("n={n}: solver {got:?}")
            });
        }
        fams.push(t.row);
    }
    Ok([dom.row, tdom.row, inf.row, conn.row]
        .into_iter()
        .chain(fams)
        .collect())
}

fn mop_claims(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let s = Suite::MopClaims;
    let mut formula = Tally::new(s, "chi_Connected = gamma_c + 2");
    let mut one = Tally::new(s, "G - D is acyclic for every minimum CDS D");
    let mut two = Tally::new(
        s,
        "unique colors of a Connected-compelling coloring cover every chord",
    );
    let mut three = Tally::new(s, "every chord cover is a connected dominating set");
    let mut four = Tally::new(s, "the complement of a minimal CDS contains an edge");
    let hi = ctx.cap(11);
    if hi < 4 {
        return Ok(vec![]);
    }
    for i in 0..30u64 {
        let n = 4 + (i as usize) % (hi - 3);
        let g = random_mop(n, ctx.seed.wrapping_add(i))?;
        let all = g.vertices();
        let gc = min_connected_dominating_set(&g, &ctx.limits)?.len();
        let got = ctx.chi(&g, PropertyKind::Connected)?;
        formula.check(got == Some(gc + 2), || {
            format!("solver {got:?}, gamma_c {gc}: {}", describe(&g))
        });
        for k in (gc + 2)..=(gc + 3).min(n) {
            let _ = for_each_canonical_coloring(&g, k, |colors| {
                let c = Coloring::new(colors.to_vec()).expect("canonical coloring");
                if find_violating_committee(&g, &c.classes(), PropertyKind::Connected).is_none() {
                    let ok = is_chord_cover(&g, c.unique_colored()).unwrap_or(false);
                    two.check(ok, || format!("coloring {colors:?} of {}", describe(&g)));
                }
                ControlFlow::Continue(())
            });
        }
        let chords = mop_chords(&g)?;
        for mask in 1u128..1 << n {
            let d = VertexSet::from_bits(mask);
            let cdom = PropertyKind::CDom.holds(&g, d);
            if cdom && d.len() == gc {
                one.check(g.is_forest_set(all - d), || {
                    format!("D = {d}: {}", describe(&g))
                });
            }
            if chords.iter().all(|&(u, v)| d.contains(u) || d.contains(v)) {
                three.check(cdom, || format!("cover {d}: {}", describe(&g)));
            }
            if cdom
                && d.iter()
                    .all(|v| !PropertyKind::CDom.holds(&g, d - VertexSet::singleton(v)))
            {
                four.check(g.induced_edge_count(all - d) > 0, || {
                    format!("D = {d}: {}", describe(&g))
                });
            }
        }
    }
    Ok(vec![formula.row, one.row, two.row, three.row, four.row])
}

fn td3(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let s = Suite::Td3;
    let mut agree = Tally::new(s, "3-class TDC tester agrees with enumeration");
    let mut sound = Tally::new(s, "tester witnesses are proper 3-class TDCs");
    let mut conn = Tally::new(s, "chi_Connected = 3 test agrees with the solver");
    for g in random_corpus(300, 3, ctx.cap(9).max(3), ctx.seed)? {
        let w = has_tdc3(&g);
        agree.check(w.is_some() == has_tdc_with_classes(&g, 3), || describe(&g));
        if let Some(w) = w {
            let ok = w.coloring.k() == 3
                && w.coloring.is_proper(&g)
                && is_total_dominator_coloring(&g, &w.coloring);
            sound.check(ok, || describe(&g));
        }
    }
    for g in random_connected_corpus(100, 3, ctx.cap(8).max(3), ctx.seed)? {
        let solver = ctx.chi(&g, PropertyKind::Connected)? == Some(3);
        conn.check(chi_connected_is_3(&g)? == solver, || describe(&g));
    }
    Ok(vec![agree.row, sound.row, conn.row])
}

fn bounds(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let s = Suite::Bounds;
    let mut general = Tally::new(
        s,
        "max(m_P, chi) <= chi_P <= m_P + chi for upwards-closed P",
    );
    let mut connected = Tally::new(s, "max(chi, gamma_c) <= chi_Connected <= chi + gamma_c");
    let mut union = Tally::new(s, "disjoint-union bounds for Dom and TDom");
    for g in random_corpus(200, 1, ctx.cap(8), ctx.seed)? {
        let chi = chromatic_number_with(&g, &ctx.limits)?;
        for p in PropertyKind::ALL.into_iter().filter(|p| p.upwards_closed()) {
            if let (Some(v), Some(m)) = (ctx.chi(&g, p)?, min_property_size(p, &g)?) {
                general.check(m.max(chi) <= v && v <= m + chi, || {
                    format!("{p}: {}", describe(&g))
                });
            }
        }
        if g.is_connected() && g.n() >= 2 {
            let gc = min_connected_dominating_set(&g, &ctx.limits)?.len();
            let v = ctx.chi(&g, PropertyKind::Connected)?;
            let ok = v.is_some_and(|v| chi.max(gc) <= v && v <= chi + gc);
            connected.check(ok, || format!("value {v:?}: {}", describe(&g)));
        }
    }
    let small = random_corpus(100, 1, ctx.cap(5), ctx.seed.wrapping_add(1))?;
    for pair in small.chunks(2) {
        let u = pair[0].disjoint_union(&pair[1])?;
        for p in [PropertyKind::Dom, PropertyKind::TDom] {
            let mut parts = Vec::new();
            for g in pair {
                if let (Some(c), Some(m)) = (ctx.chi(g, p)?, min_property_size(p, g)?) {
                    parts.push((c, m));
                }
            }
            let got = ctx.chi(&u, p)?;
            if parts.len() < 2 {
                union.check(got.is_none(), || format!("{p}: {}", describe(&u)));
                continue;
            }
            let (lo, hi) = disjoint_union_bounds(p, &parts)?;
            let tight = parts.iter().all(|&(c, m)| c == m);
            let ok = got.is_some_and(|v| lo <= v && v <= hi && (!tight || v == hi));
            union.check(ok, || {
                format!("{p}: value {got:?}, bounds [{lo}, {hi}]: {}", describe(&u))
            });
        }
    }
    Ok(vec![general.row, connected.row, union.row])
}

fn families(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let plan = [
        (Family::Path, 2, 12, PropertyKind::Edge),
        (Family::Cycle, 3, 12, PropertyKind::Edge),
        (Family::Path, 3, 9, PropertyKind::Connected),
        (Family::Cycle, 3, 9, PropertyKind::Connected),
        (Family::TreeRandom, 4, 9, PropertyKind::Edge),
        (Family::TreeRandom, 4, 9, PropertyKind::Connected),
        (Family::DoubleBroom, 4, 10, PropertyKind::Edge),
        (Family::DoubleBroom, 4, 10, PropertyKind::Connected),
        (Family::MopRandom, 4, 11, PropertyKind::Connected),
        (Family::Split, 3, 5, PropertyKind::Edge),
    ];
    let mut rows = Vec::new();
    for (family, lo, hi, p) in plan {
        let mut t = Tally::new(
            Suite::Families,
            &format!("{} {} matches closed form", family.name(), p),
        );
        // random families get several draws per order
        let draws = if matches!(family, Family::TreeRandom | Family::MopRandom) {
            8
        } else {
            1
        };
        for n in (lo..=hi).filter(|&n| family.order(n) <= ctx.max_n) {
            for d in 0..draws {
                let g = family.build(n, ctx.seed.wrapping_add(100 * d))?;
                let e = family.expectation(&g, n, p, &ctx.limits)?;
                let got = ctx.chi(&g, p)?;
                t.check(e.matches(got) == Some(true), || {
                    format!("solver {got:?}, expected {e:?}: {}", describe(&g))
                });
            }
        }
        rows.push(t.row);
    }
    Ok(rows)
}

fn extremal(ctx: &Ctx) -> Result<Vec<AssertionRow>> {
    let s = Suite::Extremal;
    let mut edge2 = Tally::new(s, "chi_Edge = 2 iff complete bipartite");
    let mut conn2 = Tally::new(s, "chi_Connected = 2 iff complete bipartite");
    let mut connn = Tally::new(s, "chi_Connected = n iff complete");
    let mut high = Tally::new(s, "chi >= n/2 + 1 implies chi_Edge = chi");
    let mut diam = Tally::new(s, "chi_Edge = 3 implies diameter <= 5");
    let mut gadget = Tally::new(
        s,
        "chi_Edge(G + dominator) <= 4 iff chi(G) <= 3, all 4-vertex G",
    );
    let mut corpus = random_corpus(250, 1, ctx.cap(7), ctx.seed)?;
    corpus.extend(
        (0..40u64)
            .map(|i| random_tree(2 + i as usize % 6, ctx.seed.wrapping_add(i)))
            .collect::<Result<Vec<_>, _>>()?,
    );
    for g in &corpus {
        let n = g.n();
        let cb = is_complete_bipartite(g);
        let edge = ctx.chi(g, PropertyKind::Edge)?;
        let conn = ctx.chi(g, PropertyKind::Connected)?;
        let chi = chromatic_number_with(g, &ctx.limits)?;
        edge2.check((edge == Some(2)) == cb, || describe(g));
        conn2.check((conn == Some(2)) == cb, || describe(g));
        connn.check((conn == Some(n)) == is_complete(g), || describe(g));
        if 2 * chi >= n + 2 {
            high.check(edge == Some(chi), || describe(g));
        }
        if edge == Some(3) && g.is_connected() {
            diam.check(diameter(g)? <= 5, || describe(g));
        }
    }
    for g in all_graphs(4)? {
        let h = join_dominator(&g)?;
        let edge = ctx.chi(&h, PropertyKind::Edge)?;
        let ok = edge.is_some_and(|v| v <= 4) == (chromatic_number_with(&g, &ctx.limits)? <= 3);
        gadget.check(ok, || describe(&g));
    }
    Ok(vec![
        edge2.row, conn2.row, connn.row, high.row, diam.row, gadget.row,
    ])
}
