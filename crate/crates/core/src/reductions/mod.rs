//! Hardness constructions: from OV or hypergraph instances to shape sets whose
//! intersection graph diameter encodes the answer.

pub mod axpar;
pub mod balls;
pub mod hypercube;
pub mod hypergraph;
pub mod ov;
pub mod segments;

use std::fmt;
use std::str::FromStr;

pub use axpar::{build_gprime_a, realize_gprime_a_segments};
pub use balls::{build_ga, realize_ga_balls, rotate_scale_to_cubes, CubeRotation};
pub use hypercube::hyperclique_to_hypercubes;
pub use hypergraph::{hypergraph_preprocess, HyperSemantics, HypergraphInstance, Triple};
pub use ov::{augment_all_ones, augment_all_ones_both_ends, pad_two_set, BitVector, OvInstance, OvMode};
pub use segments::{ov_to_segments, ov_to_triangles, ov_to_unit_segments, unit_segment_height};

use crate::error::{Error, Result};
use crate::graph::{build_graph, IntersectionGraph};
use crate::shape::Shape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionKind {
    Segments,
    UnitSegments,
    Triangles,
    Balls,
    CubesRot,
    AxparSegments,
    Hypercubes,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 7] = [
        ConstructionKind::Segments,
        ConstructionKind::UnitSegments,
        ConstructionKind::Triangles,
        ConstructionKind::Balls,
        ConstructionKind::CubesRot,
        ConstructionKind::AxparSegments,
        ConstructionKind::Hypercubes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::Segments => "segments",
            ConstructionKind::UnitSegments => "unit-segments",
            ConstructionKind::Triangles => "triangles",
            ConstructionKind::Balls => "balls",
            ConstructionKind::CubesRot => "cubes-rot",
            ConstructionKind::AxparSegments => "axpar-segments",
            ConstructionKind::Hypercubes => "hypercubes",
        }
    }

    /// Input instance family: two-set OV, single-set OV, or hypergraph.
    pub fn input(self) -> InputKind {
        match self {
            ConstructionKind::Segments | ConstructionKind::UnitSegments | ConstructionKind::Triangles => {
                InputKind::TwoSetOv
            }
            ConstructionKind::Balls | ConstructionKind::CubesRot | ConstructionKind::AxparSegments => {
                InputKind::SingleSetOv
            }
            ConstructionKind::Hypercubes => InputKind::Hypergraph,
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown construction kind {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    TwoSetOv,
    SingleSetOv,
    Hypergraph,
}

/// Diameter value separating yes- from no-instances: the answer is "no
/// orthogonal pair / no independent set" iff the diameter is at most this.
/// `d` is the raw single-set dimension for the `2d + 4` family and is ignored
/// otherwise.
pub fn threshold_for(kind: ConstructionKind, d: usize) -> u32 {
    match kind {
        ConstructionKind::Segments | ConstructionKind::UnitSegments | ConstructionKind::Triangles => 3,
        ConstructionKind::Balls | ConstructionKind::CubesRot | ConstructionKind::AxparSegments => 2 * d as u32 + 4,
        ConstructionKind::Hypercubes => 2,
    }
}

/// Generated shapes together with the graph they are meant to realize.
#[derive(Clone, Debug)]
pub struct Construction {
    pub kind: ConstructionKind,
    pub shapes: Vec<Shape>,
    /// Intended adjacency; vertex `v` is `shapes[v]` and carries its role label.
    pub abstract_graph: IntersectionGraph,
    pub threshold: u32,
}

impl Construction {
    pub fn labels(&self) -> &[String] {
        self.abstract_graph.labels()
    }

    /// Intersection graph of the shapes, labeled like the abstract graph.
    pub fn geometric_graph(&self) -> Result<IntersectionGraph> {
        build_graph(&self.shapes)?.with_labels(self.labels().to_vec())
    }
}
