//! Exact combinatorics of log regular models over a discrete valuation ring
//! with residue characteristic `p`.
//!
//! The crate works purely with combinatorial data: affine monoids and their
//! lattices, Kato fans annotated with multiplicities and Euler
//! characteristics of strata, and weighted dual graphs of curve
//! degenerations. From that data it decides which strata form the
//! `p`-locus, whether tame points exist, the tame monodromy zeta function
//! and tame Euler characteristic, log smoothness of charts and of sncd curve
//! fibres, and log good reduction of genus-1 curves.

pub mod dualgraph;
pub mod error;
pub mod fan;
pub mod genus1;
pub mod io;
pub mod lattice;
pub mod model;
pub mod monoid;
pub mod prime;
pub mod report;
pub mod snf;
pub mod zeta;

pub use error::{Error, Result};
