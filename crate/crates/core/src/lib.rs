//! Exact diameter computation on geometric intersection graphs, plus
//! generators and verifiers for several hardness constructions.

pub mod bench;
pub mod campaign;
pub mod cli;
pub mod diam2;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
mod kernel;
pub mod oracles;
pub mod reductions;
pub mod scalar;
pub mod shape;

pub use error::{Error, Result};
pub use scalar::{Root2Scalar, Scalar};
pub use shape::{intersects, point_in_box, Shape, ShapeFamily};
