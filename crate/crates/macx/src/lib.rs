//! Exact combinatorial topology of finite simplicial complexes and the
//! moment-angle complexes they index: constructions (joins, staircase
//! products, facet cones, mapping cylinders), integral and field-coefficient
//! (co)homology through Smith normal form, Hochster tables and Golodness
//! tests with witnesses, mod-2 Steenrod squares and triple Massey products
//! on simplicial cochains, and discrete collapse search.

pub mod bitset;
pub mod cochain;
pub mod collapse;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod homology;
pub mod matrix;
pub mod moment_angle;
pub mod report;
pub mod scx;

pub use bitset::VertexSet;
pub use complex::{Complex, GroundSet, SimplicialMap};
pub use error::{MacxError, Result};
pub use field::RingSpec;
pub use homology::{homology, HomologyGroup, HomologySummary};
