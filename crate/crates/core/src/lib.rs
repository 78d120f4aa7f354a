//! Orbits of representations of the equioriented type-A quiver.
//!
//! Representations of dimension `d` are classified by multisegments. This
//! crate computes the multisegment of the dense orbit, the irreducible
//! components of its complement, orbit counts, and the tilting fan.

pub mod components;
pub mod counting;
pub mod enumerate;
mod error;
pub mod fan;
pub mod generic;
pub mod homext;
pub mod linalg;
pub mod model;
mod parse;

pub use error::{Error, ParseError, Result};
pub use model::{DimensionVector, Multisegment, Partition, RankTriangle, Segment};

/// Resource bounds for exhaustive oracles and tree enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enum_budget: u64,
    pub tree_t_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enum_budget: components::DEFAULT_ENUM_BUDGET,
            tree_t_max: fan::DEFAULT_TREE_T_MAX,
        }
    }
}
