//! Combinatorial invariants of simple 3-polytopes.
//!
//! A simple 3-polytope with `m` facets is represented by its dual
//! triangulation: a 3-connected triangulation of the 2-sphere whose vertices
//! correspond to facets and whose edges record which facets share a common
//! edge of the polytope. From that single combinatorial object the crate
//! computes
//!
//! * bigraded Betti numbers of the face ring, by summing reduced homology of
//!   full subcomplexes over all vertex subsets ([`hochster`]),
//! * the same numbers a second time, directly from the differential on the
//!   exterior-algebra resolution of the face ring ([`koszul`]) — an
//!   independent cross-check of the first route,
//! * belt structure (non-facial triangles and chordless 4-cycles) and the
//!   annihilator invariant `dim V` of the degree (-1,4) part of the Tor
//!   algebra, which can separate polytopes whose Betti tables agree
//!   ([`torring`]),
//! * the complete list of 3-connected planar triangulations up to
//!   isomorphism for small vertex counts ([`enumerate`]),
//! * codecs for the planar_code byte format and adjacency-row text format,
//!   plus a built-in catalog of the 25 irreducible 11-facet polytopes
//!   ([`catalog`]).
//!
//! All linear algebra is exact over the rationals via fraction-free integer
//! elimination ([`linalg`]); no floating point is used anywhere.

pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod hochster;
pub mod koszul;
pub mod linalg;
pub mod poly;
pub mod rng;
pub mod torring;
pub mod verify;

pub use error::Error;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
