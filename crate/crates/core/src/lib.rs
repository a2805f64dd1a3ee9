//! Graph homomorphisms into cycle graphs and the homotopy types of the
//! components of `Hom(G, C_k)`.
//!
//! A component is a circle exactly when the orientation `G_f` induced by a
//! representative `f` is acyclic (for connected `G` with at least two
//! vertices and `k != 4`), and a point otherwise. [`cover`] carries the
//! lattice machinery behind that criterion, and [`homology`] an independent
//! Betti-number oracle used to check it.

pub mod cover;
pub mod cyclic;
pub mod error;
pub mod graph;
pub mod homology;

pub use cover::{
    classify_component, classify_full, frozen_vertices, in_d, k_prime, orient, project,
    report_all_components, report_component, ComponentReport, HomotopyType, LatticeCover,
    LatticeMoves, LatticePoint, Orientation, QuotientClass, TorusDim,
};
pub use cyclic::{
    build_hom_skeleton, build_hom_skeleton_capped, enumerate_homs, enumerate_homs_capped,
    hom_adjacent, pair_type, skeleton_components, validate_hom, CyclicHom, CyclicValue, EdgeType,
    HomSkeleton, DEFAULT_HOM_CAP,
};
pub use error::{Error, Result};
pub use graph::{Digraph, SimpleGraph, VertexId};
pub use homology::{
    betti, build_two_skeleton, verify_classification, verify_classification_capped, BettiPair,
    ComponentVerdict, TwoSkeleton,
};
