//! Exact decision procedure for the four colored cross problem.
//!
//! Given a colored point set, decide whether some center has four points of
//! pairwise distinct colors, one in each of its open quadrants. Equivalently,
//! whether four differently colored points have a rectilinear convex hull of
//! positive area.
//!
//! - [`coord`] exact rational coordinates
//! - [`geom`] colored points, quadrants, crosses and the four-point test
//! - [`decider`] the O(n log n) sweep
//! - [`oracle`] brute-force references
//! - [`reductions`] gap and negative-slope problems and the reductions between them
//! - [`gen`] seeded generators
//! - [`io`] and [`svg`] file formats and rendering
//! - [`bench`] doubling-ratio scaling harness

pub mod bench;
pub mod coord;
pub mod decider;
pub mod gen;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod svg;

pub use coord::Coordinate;
pub use decider::{decide, has_cross};
pub use geom::{ColorId, ColoredPoint, Cross, Point, PointSet, Quadrant};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Parse(#[from] io::ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
