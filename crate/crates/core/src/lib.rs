//! Floyd metrics on Cayley-graph balls, at desk scale.
//!
//! The library materializes finite balls of Cayley graphs for groups with a
//! decidable normal form, rescales their edges by a summable scaling function,
//! and computes certified brackets for the resulting shortest-path (Floyd)
//! distances. On top of that sit path classification (geodesic, quasigeodesic,
//! distorted), analytic and empirical Karlsson radii, Lipschitz checks for
//! quasi-isometric and distorted maps between two group models, shortcut
//! pseudometrics on finite point sets, and a set of reproducible experiment
//! drivers that write CSV/JSON tables.
//!
//! All metric quantities are exact rationals; anything reported as a bound is
//! a rigorous bound, not an estimate.

#![forbid(unsafe_code)]

pub mod error;
pub mod experiments;
pub mod floyd;
pub mod groups;
pub mod karlsson;
pub mod maps;
pub mod paths;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use groups::ball::CayleyBall;
pub use groups::{Element, GroupSpec};
pub use rational::Q;
