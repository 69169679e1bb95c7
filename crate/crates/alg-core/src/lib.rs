//! Antisymmetric line graphs as a source of invariants of ordinary graphs.
//!
//! For a finite simple graph with oriented incidence matrix `D`, the signed
//! graph on its edge set with adjacency `D^T D - 2I` refines the line graph:
//! forgetting signs recovers `L(G)`, while the signs remember local
//! orientation structure up to switching. This crate builds that signed
//! graph and computes the invariants it carries:
//!
//! - switching classes, cycle signs, balance, and the Whitney
//!   disambiguation ([`signed`]);
//! - the signed triangle census and trace invariants ([`invariants`]);
//! - exact frustration index, Max-Cut defect, odd cycle transversal, vertex
//!   frustration, and odd-cycle packing, with the identities and bound
//!   chains connecting them ([`opt`]);
//! - Laplacian spectra on edge space, the matrix-tree identity, signed
//!   inertia, and spectral lower bounds ([`spectral`]).
//!
//! Everything is exact at desk scale: searches enumerate quotiented
//! orientation or partition spaces with hard size limits, and integer or
//! rational identities are checked in exact arithmetic.

pub mod bits;
pub mod catalog;
pub mod cycles;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod opt;
pub mod signed;
pub mod spectral;

pub use bits::BitSet;
pub use error::{AlgError, Result};
pub use graph::{incidence_matrix, GraphStats, IncidenceMatrix, Orientation, SimpleGraph};
pub use graph6::{from_graph6, to_graph6};
pub use invariants::TriangleCensus;
pub use matrix::DenseSymmetricMatrix;
pub use opt::{CutResult, OctResult, OrientationSearchResult, SearchLimits};
pub use signed::{RootKind, SignedGraph, SwitchingSet};
pub use spectral::{Inertia, Spectrum};
