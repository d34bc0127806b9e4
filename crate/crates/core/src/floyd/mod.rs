//! Scaling functions and the Floyd metric.

pub mod metric;
pub mod scaling;
