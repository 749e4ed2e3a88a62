//! Exact solving and verification for the game of cops and robber under
//! capture, trap and confine objectives.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: small graphs as word bitsets, graph6 I/O, metrics, induced
//!   path detection, planarity, canonical codes and enumeration.
//! * [`game`]: objective predicates and the backward-induction solver for
//!   cop numbers, optimal round counts and strategies.
//! * [`chase`]: the train-chasing cop procedure, its trace checker and the
//!   constructive trap procedure for `P_k`-free graphs.
//! * [`gk`]: the structural conditions on `P_k`-free graphs whose (confining)
//!   cop number is `k - 2`.
//! * [`cograph`]: twins, cotrees, cograph enumeration and twin-operation checks.
//! * [`harness`]: corpora, verification suites, conjecture searches and reports
//!   driving the `crgames` binary.

pub mod chase;
pub mod cograph;
pub mod error;
pub mod game;
pub mod gk;
pub mod graph;
pub mod harness;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
