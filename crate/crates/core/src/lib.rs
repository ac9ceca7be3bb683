//! Closed-form Euclidean Steiner minimal trees for three and four terminals.
//!
//! A Steiner minimal tree (SMT) is the shortest network of line segments
//! connecting a given set of terminals, allowing extra junction points.
//! Every junction of such a tree has degree three with edges meeting
//! pairwise at 120°, terminals have degree at most three, and a *full*
//! tree on `n` terminals has exactly `n - 2` junctions, each terminal
//! of degree one. This crate solves the two cases that admit explicit
//! algebraic solutions:
//!
//! * three terminals: the single junction is the Fermat–Torricelli point
//!   of the triangle, or the tree degenerates to two triangle sides when
//!   one angle reaches 120° ([`fermat3`]);
//! * four terminals in convex position: the full tree with two junctions,
//!   for both of its possible topologies, together with existence tests,
//!   length identities, and the circular loci traced by the junctions
//!   when one terminal moves ([`steiner4`]).
//!
//! Every closed-form result can be cross-checked against [`oracle`], an
//! independent numerical minimizer of the underlying length objective.
//!
//! The crate is `no_std`-compatible (with `alloc`): disable the default
//! `std` feature and enable `libm` for the float math fallback.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod fermat3;
pub mod geom;
pub mod oracle;
pub mod steiner4;

mod error;
mod float;

pub use error::Error;
pub use geom::{Point, Quad, Tolerance, Triangle};
