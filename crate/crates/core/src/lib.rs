//! Enumeration of fully commutative elements in finite and affine Coxeter
//! groups: heaps, lattice-walk encodings, exact growth series, family
//! classification, and an independent brute-force oracle.

pub mod graph;
pub mod heap;
pub mod family;
pub mod genfun;
pub mod oracle;
pub mod period;
pub mod series;
pub mod walk;

pub use graph::{build_graph, Bond, CoxeterGraph, Family, Gen, GraphError, TypeSpec};
pub use heap::{Heap, HeapError, Word};
pub use family::{assert_structure_lemmas, classify_bd, classify_ctilde, delta_t, delta_tu, Decoration, FamilyError, FamilyLabel, FiveFamily};
pub use genfun::{genfun, mean_value, CatalogError, GenFun, PeriodicTail};
pub use oracle::{enumerate_fc, fc_elements, FcElement, GrowthRecord};
pub use period::{detect_anchored, detect_period, stated_periodicity, verify_theorem, PeriodError, PeriodReport, Stated};
pub use series::{QPoly, SeriesError, WalkSeries, XSeries};
pub use walk::{enumerate_walks, Constraint, Stat, Step, Walk, WalkError, WalkFamily};
