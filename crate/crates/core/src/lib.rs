//! Algebraic constructions of high-girth graphs and 3-graphs over finite
//! fields, with exact structural analysis.

pub mod dseries;
pub mod field;
pub mod graphcore;
pub mod analysis;
pub mod geometry;
pub mod symmetry;
pub mod random;
pub mod claims;
