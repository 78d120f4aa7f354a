//! Exact value types shared by every other module.

mod dimension;
mod multisegment;
mod partition;
mod rank;
mod segment;

pub use dimension::DimensionVector;
pub use multisegment::Multisegment;
pub use partition::Partition;
pub use rank::RankTriangle;
pub use segment::Segment;
