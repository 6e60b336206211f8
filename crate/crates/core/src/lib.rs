//! Exact-arithmetic obstructions to truly cosmetic Dehn surgery on knots in `S³`.
//!
//! The crate never computes Floer homology or decides hyperbolicity; those
//! enter as caller-supplied data and flags. What it does compute exactly:
//! slope arithmetic, surgery homology, Alexander-polynomial invariants, the
//! compiled-in classification tables, and the pipeline that combines them
//! into an [`obstructions::ObstructionReport`].

// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod alexander;
pub mod catalog;
pub mod citations;
pub mod error;
pub mod homology;
pub mod obstructions;
pub mod slopes;
pub mod tables;

pub use error::{Error, Result};
pub use slopes::Slope;
