//! Hausdorff dimension of limit sets of complex hyperbolic Schottky groups.
//!
//! The boundary of complex hyperbolic 2-space is the one-point compactified
//! Heisenberg group. A configuration of pairwise disjoint Cygan spheres, each
//! with its complex reflection, generates a Schottky group. This crate builds
//! the word tree of such a group, turns it into a transition matrix of
//! distortion factors and solves `ρ(T^α) = 1` for the dimension estimate `α`.

pub mod cli;
pub mod config;
pub mod error;
pub mod heisenberg;
pub mod markov;
mod optimize;
pub mod schottky;
pub mod spectral;
pub mod wordtree;

pub use error::{Error, Result};
pub use heisenberg::{BoundaryPoint, ReflectionGenerator};
pub use markov::{transition_matrix, EntryConvention, TransitionMatrix};
pub use schottky::{rcircle_family, symmetric_family, Family, SchottkyConfig, Verdict};
pub use spectral::{dimension, solve_alpha, spectral_radius, AlphaSolve};
pub use wordtree::{enumerate, Word, WordNode};
