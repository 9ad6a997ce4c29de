//! Planar closest-point machinery for segments and lines.
//!
//! Given a set `P` of points, the crate answers "which point of `P` is
//! closest to this segment/line" in four flavors: offline batches over many
//! queries, online queries against prebuilt structures, outside-hull segment
//! queries against a per-hull-edge index, and space/time trade-off variants
//! built in the dual plane. Everything is validated against brute-force
//! oracles; all geometric decisions are exact (rational arithmetic behind a
//! floating-point filter).

pub mod batch;
pub mod cutting;
pub mod geom;
pub mod harness;
pub mod hull;
pub mod instance;
pub mod meter;
pub mod num;
pub mod oracle;
pub mod outside_hull;
pub mod partition;
pub mod tradeoff;
pub mod voronoi;

pub use geom::{Line, Point, Segment};
pub use num::Real;
