//! Extremal spectral radius of the matrix `alpha*D + (1-alpha)*A` over
//! trees and unicyclic graphs with a prescribed degree sequence.
//!
//! For a nonincreasing degree sequence the greedy breadth-first layering
//! produces the tree, and its unicyclic variant the connected graph with
//! one cycle, that maximizes the spectral radius of
//! `A_alpha = alpha*D + (1-alpha)*A` over the whole degree class for every
//! `alpha` in `[0, 1)`. This crate builds those graphs, computes their
//! spectral radius with certified bounds, and verifies the extremality and
//! perturbation claims behind them by exhaustive enumeration and seeded
//! fuzzing at desk scale.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | simple graphs, degree sequences, BFS-orderings, canonical forms, internal paths |
//! | [`spectrum`] | `A_alpha` assembly, power iteration with dense fallback, certificates, bounds |
//! | [`builders`] | extremal tree and unicyclic constructions, pendant-path gadget |
//! | [`perturb`] | neighbor shift, two-swap, subdivision, contraction, hill climbing |
//! | [`oracle`] | exhaustive enumeration per degree sequence, brute-force verification |
//! | [`fuzz`] | seeded random checking of the perturbation contracts |
//! | [`cli`] | the `aalpha` command-line front end |
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `cargo run --example build_extremal`.

pub mod builders;
pub mod cli;
pub mod error;
pub mod fuzz;
pub mod graph;
pub mod oracle;
pub mod perturb;
pub mod spectrum;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, SequenceClass, SimpleGraph};
pub use spectrum::{AlphaValue, SpectralResult};
