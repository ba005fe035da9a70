//! Projective compactifications of reductive groups: weight polytopes, orbit structure,
//! colored fans, and normality/smoothness at closed orbits.

#![allow(clippy::needless_range_loop)]

pub mod compact;
pub mod criteria;
pub mod error;
pub mod geom;
pub mod lie;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
