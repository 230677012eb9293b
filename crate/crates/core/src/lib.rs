//! Exact computation of P-compelling chromatic numbers.
//!
//! A proper coloring *compels* a property `P` when every rainbow committee
//! (a set with exactly one vertex of each color) has `P`; `chi_P(G)` is
//! the fewest colors of such a coloring. This crate provides six subset
//! properties, a compellingness checker that returns a violating committee
//! on failure, an exact `chi_P` solver for small graphs, closed forms for
//! the families where `chi_P` is known, and a polynomial test for total
//! dominator chromatic number 3.
//!
//! ```
//! use compel_core::{chi_p, generators, PropertyKind};
//!
//! let c5 = generators::cycle(5).unwrap();
//! assert_eq!(chi_p(&c5, PropertyKind::Dom).unwrap().value, Some(3));
//! assert_eq!(chi_p(&c5, PropertyKind::Connected).unwrap().value, Some(4));
//! ```

pub mod closed_forms;
pub mod coloring;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod limits;
pub mod mop;
pub mod property;
pub mod set;
pub mod solver;
pub mod td3;

pub use coloring::{for_each_canonical_coloring, Coloring};
pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use property::{
    eval_property, min_property_set, min_property_set_with, min_property_size, PropertyKind,
};
pub use set::{VertexSet, MAX_ORDER};
pub use solver::{
    bounds_for, chi_p, chi_p_with, disjoint_union_bounds, is_compelling, Bounds, CheckMethod,
    ChiResult, CompellingReport,
};
pub use td3::{has_tdc3, TdcCase, TdcWitness};
