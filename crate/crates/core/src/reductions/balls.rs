//! The layered graph G(A) from single-set OV, its unit-ball realization and
//! the rotated unit-cube variant.
//!
//! Vertex order: `vT k i` (k-major), `mT k i`, `q k`, `mB k i`, `vB k i`, all
//! indices 1-based, `m` vertices only where the vector has a one.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{build_graph, EdgeDiff, IntersectionGraph};
use crate::scalar::{int, ratio, Root2Scalar, Scalar};
use crate::shape::{Ball3, CubeD, Shape};

use super::ov::{augment_all_ones, OvInstance};
use super::{threshold_for, Construction, ConstructionKind};

/// Vertex roles with 1-based `(k, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum GaRole {
    VT(usize, usize),
    MT(usize, usize),
    Q(usize),
    MB(usize, usize),
    VB(usize, usize),
}

impl GaRole {
    fn label(self) -> String {
        match self {
            GaRole::VT(k, i) => format!("vT {k} {i}"),
            GaRole::MT(k, i) => format!("mT {k} {i}"),
            GaRole::Q(k) => format!("q {k}"),
            GaRole::MB(k, i) => format!("mB {k} {i}"),
            GaRole::VB(k, i) => format!("vB {k} {i}"),
        }
    }
}

/// Roles of the augmented instance together with its size parameters.
pub(crate) struct GaLayout {
    pub n: usize,
    pub d: usize,
    pub roles: Vec<GaRole>,
}

impl GaLayout {
    pub(crate) fn new(augmented: &OvInstance) -> Self {
        let (n, d) = (augmented.n(), augmented.d());
        let a = augmented.a();
        let ones = |k: usize| (1..=n).filter(move |&i| a[i - 1][k - 1]);
        let mut roles = Vec::new();
        roles.extend((1..=2 * d).flat_map(|k| (1..=n).map(move |i| GaRole::VT(k, i))));
        roles.extend((1..=d).flat_map(|k| ones(k).map(move |i| GaRole::MT(k, i))));
        roles.extend((1..=d).map(GaRole::Q));
        roles.extend((1..=d).flat_map(|k| ones(k).map(move |i| GaRole::MB(k, i))));
        roles.extend((1..=2 * d).flat_map(|k| (1..=n).map(move |i| GaRole::VB(k, i))));
        GaLayout { n, d, roles }
    }

    pub(crate) fn labels(&self) -> Vec<String> {
        self.roles.iter().map(|r| r.label()).collect()
    }

    /// G(A) when `prime` is false; G'(A) (independent groups plus the
    /// staircase edges between `m` and the following layer) when true.
    pub(crate) fn graph(&self, prime: bool) -> Result<IntersectionGraph> {
        let index: HashMap<GaRole, usize> = self.roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
        let (n, d) = (self.n, self.d);
        let mut edges = Vec::new();
        let mut link = |a: GaRole, b: GaRole| {
            if let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) {
                edges.push((u, v));
            }
        };
        for k in 1..=2 * d {
            for i in 1..=n {
                if !prime {
                    for j in i + 1..=n {
                        link(GaRole::VT(k, i), GaRole::VT(k, j));
                        link(GaRole::VB(k, i), GaRole::VB(k, j));
                    }
                }
                if k < 2 * d {
                    link(GaRole::VT(k, i), GaRole::VT(k + 1, i));
                    link(GaRole::VB(k, i), GaRole::VB(k + 1, i));
                }
            }
        }
        for k in 1..=d {
            for i in 1..=n {
                if !prime {
                    for j in i + 1..=n {
                        link(GaRole::MT(k, i), GaRole::MT(k, j));
                        link(GaRole::MB(k, i), GaRole::MB(k, j));
                    }
                }
                link(GaRole::MT(k, i), GaRole::VT(2 * k, i));
                link(GaRole::MB(k, i), GaRole::VB(2 * k - 1, i));
                link(GaRole::Q(k), GaRole::MT(k, i));
                link(GaRole::Q(k), GaRole::MB(k, i));
                if prime {
                    for j in 1..=n {
                        if j <= i && k < d {
                            link(GaRole::MT(k, i), GaRole::VT(2 * k + 1, j));
                        }
                        if j >= i && k > 1 {
                            link(GaRole::MB(k, i), GaRole::VB(2 * k - 2, j));
                        }
                    }
                }
            }
        }
        IntersectionGraph::from_edges(self.roles.len(), edges)?.with_labels(self.labels())
    }
}

/// G(A) for the all-ones-augmented instance, with its threshold `2d + 4`.
pub fn build_ga(inst: &OvInstance) -> Result<(IntersectionGraph, u32)> {
    let layout = GaLayout::new(&augment_all_ones(inst)?);
    Ok((layout.graph(false)?, threshold_for(ConstructionKind::Balls, layout.d)))
}

fn ball_center(r: GaRole, n: usize) -> [Scalar; 3] {
    let y = |i: usize| ratio(i as i64, n as i64);
    let x = |k: usize| int(k as i64);
    match r {
        GaRole::VT(k, i) => [x(k), y(i), int(0)],
        GaRole::MT(k, i) => [x(2 * k), y(i), int(-1)],
        GaRole::Q(k) => [x(2 * k), ratio(1, 2), ratio(-8, 5)],
        GaRole::MB(k, i) => [x(2 * k), y(i), ratio(-11, 5)],
        // shifted one unit right so that mB k i touches vB 2k-1 i
        GaRole::VB(k, i) => [x(k + 1), y(i), ratio(-16, 5)],
    }
}

/// Unit-diameter balls whose intersection graph is G(A).
pub fn realize_ga_balls(inst: &OvInstance) -> Result<Construction> {
    let layout = GaLayout::new(&augment_all_ones(inst)?);
    let shapes = layout
        .roles
        .iter()
        .map(|&r| {
            Shape::Ball(Ball3 {
                center: ball_center(r, layout.n),
            })
        })
        .collect();
    Ok(Construction {
        kind: ConstructionKind::Balls,
        shapes,
        abstract_graph: layout.graph(false)?,
        threshold: threshold_for(ConstructionKind::Balls, layout.d),
    })
}

/// Cubes obtained from a ball realization, with the audit against G(A).
#[derive(Clone, Debug)]
pub struct CubeRotation {
    /// Cube shapes; `abstract_graph` is still G(A).
    pub construction: Construction,
    pub cube_graph: IntersectionGraph,
    /// `missing`: G(A) edges the cubes lose; `extra`: cube edges not in G(A).
    pub discrepancy: EdgeDiff,
}

/// Maps each ball center `(x, y, z)` to the unit-cube center
/// `(x - z, sqrt2 * y, x + z)`.
pub fn rotate_scale_to_cubes(balls: &Construction) -> Result<CubeRotation> {
    if balls.kind != ConstructionKind::Balls {
        return Err(Error::usage(format!(
            "expected a balls construction, got {}",
            balls.kind
        )));
    }
    let shapes: Vec<Shape> = balls
        .shapes
        .iter()
        .map(|s| match s {
            Shape::Ball(b) => Ok(Shape::Cube(rotate_center(&b.center))),
            _ => Err(Error::usage("balls construction holds a non-ball shape")),
        })
        .collect::<Result<_>>()?;
    let cube_graph = build_graph(&shapes)?.with_labels(balls.labels().to_vec())?;
    let discrepancy = balls.abstract_graph.edge_diff(&cube_graph)?;
    Ok(CubeRotation {
        construction: Construction {
            kind: ConstructionKind::CubesRot,
            shapes,
            abstract_graph: balls.abstract_graph.clone(),
            threshold: balls.threshold,
        },
        cube_graph,
        discrepancy,
    })
}

pub(crate) fn rotate_center([x, y, z]: &[Scalar; 3]) -> CubeD {
    CubeD {
        center: vec![
            Root2Scalar::rational(x - z),
            Root2Scalar::new(int(0), y.clone()),
            Root2Scalar::rational(x + z),
        ],
    }
}
