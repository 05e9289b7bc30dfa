//! Sign-imbalance of partition shapes.
//!
//! The sign of a standard Young tableau is the sign of its reading word (rows
//! read left to right, top to bottom). This crate enumerates tableaux with
//! incremental sign maintenance, computes per-shape sign-imbalances, and runs
//! exhaustive checks of the identities these imbalances satisfy.

pub mod error;
pub mod harness;
pub mod imbalance;
pub mod poly;
pub mod rs;
pub mod shape;
pub mod tableau;

pub use error::{Error, Result};
pub use imbalance::{imbalance, imbalance_chess, imbalance_table, ImbalanceRecord};
pub use poly::MonomialMap;
pub use rs::{InsertionOutcome, Permutation};
pub use shape::{Cell, CellSet, Color, Shape, SkewShape};
pub use tableau::{Sign, Tableau, Word};
