//! Binomial edge ideals of finite simple graphs and their toricness.
//!
//! The crate decides whether the binomial edge ideal `J_G` of a labeled graph
//! is a lattice (toric) ideal using the combinatorial criterion that every
//! vertex neighborhood is a clique, and checks that decision independently by
//! saturating `J_G` with a pure-binomial Gröbner engine. A second route builds
//! toric ideals of graphs from integer kernels of incidence matrices.

pub mod edge_ideals;
pub mod graph;
pub mod lattice;
pub mod poly;
pub mod sweep;

pub use edge_ideals::{EdgeIdealError, EquivalenceReport, ToricnessReport};
pub use graph::{Cycle, Graph, GraphError, NonCliqueWitness};
pub use lattice::{IntegerMatrix, Lattice, LatticeError, PartialCharacter};
pub use poly::{BinomialIdeal, Monomial, MonomialOrder, OrderKind, PolyError, PureBinomial};
pub use sweep::{SweepLevel, SweepSummary};
