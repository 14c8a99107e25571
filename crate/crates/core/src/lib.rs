//! Exact counting engines for Lucas-colorings of planar maps and the
//! objects they count: perfect matchings of polygon blow-ups, alternating
//! sign matrices, lozenge tilings, and direct summands of the Karoubi
//! cube of resolutions. Every headline equality is computed along two
//! independent routes so that one checks the other.

pub mod asm_grid;
pub mod cli;
pub mod error;
pub mod karoubi;
pub mod lucas;
pub mod matching_algebra;
pub mod matchings;
pub mod planar_graph;
pub mod tilings;

pub use error::{Error, Result};
pub use planar_graph::{parse_map, Color, EdgeColoring, PlanarMap};
