//! Exact enumerative invariants of a smooth curve in a threefold.
//!
//! * [`series`]: truncated power series over big integers.
//! * [`partitions`]: integer partitions with their automorphism orders.
//! * [`boxcounting`]: brute-force enumeration of one-leg box configurations
//!   and plane partitions.
//! * [`invariants`]: Quot-scheme Euler characteristics by stratification and
//!   by closed form, and the local DT/PT series.

pub mod boxcounting;
pub mod invariants;
pub mod partitions;
pub mod series;

pub use boxcounting::{BoxModel, HeightConfig};
pub use invariants::{CurveSetup, InvariantError, InvariantReport};
pub use partitions::Partition;
pub use series::{PowerSeries, SeriesError, Sign};
