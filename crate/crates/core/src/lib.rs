//! Exact distance powers of graphs, exact-square and injective colorings,
//! and fullerene drums.
//!
//! The crate is organised around a small immutable [`Graph`] type:
//!
//! - [`graph`]: distances, exact powers, complements, girth, cliques;
//! - [`formats`]: graph6 and planar_code codecs;
//! - [`planarity`]: rotation systems, faces, planar / outerplanar /
//!   K4-minor-free recognition;
//! - [`coloring`]: exact k-colorability, chromatic numbers, list coloring,
//!   and an independent certificate checker;
//! - [`fullerene`]: fullerene recognition, drum construction and
//!   recognition, constructive drum 3-coloring, batch verification;
//! - [`gadgets`]: named fixture graphs and exhaustive lemma verifiers;
//! - [`generate`]: seeded random families used by the test suites;
//! - [`cli`]: the command-line front end.

mod bitset;
mod clique;

pub mod cli;
pub mod coloring;
pub mod error;
pub mod formats;
pub mod fullerene;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod planarity;
pub mod report;

pub use coloring::{Coloring, ListAssignment, Mode};
pub use error::{Error, Result};
pub use graph::Graph;
pub use planarity::{Embedding, FaceSet};
