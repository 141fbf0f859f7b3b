//! G'(A): the layered graph with independent groups, realized by
//! axis-parallel unit segments.

use crate::error::Result;
use crate::graph::IntersectionGraph;
use crate::scalar::{int, ratio, Scalar};
use crate::shape::{Point2, Segment2, Shape};

use super::balls::{GaLayout, GaRole};
use super::ov::{augment_all_ones_both_ends, OvInstance};
use super::{threshold_for, Construction, ConstructionKind};

/// G'(A) for the instance with all-ones vectors first and last, with
/// threshold `2d + 4`.
pub fn build_gprime_a(inst: &OvInstance) -> Result<(IntersectionGraph, u32)> {
    let layout = GaLayout::new(&augment_all_ones_both_ends(inst)?);
    Ok((
        layout.graph(true)?,
        threshold_for(ConstructionKind::AxparSegments, layout.d),
    ))
}

fn segment(r: GaRole, n: usize) -> Segment2 {
    let off = |i: usize| ratio(i as i64, 4 * n as i64);
    let k = |k: usize| int(k as i64);
    let horizontal = |x: Scalar, y: Scalar| Segment2 {
        q: Point2::new(&x + int(1), y.clone()),
        p: Point2::new(x, y),
    };
    let vertical = |x: Scalar, top: Scalar| Segment2 {
        q: Point2::new(x.clone(), &top - int(1)),
        p: Point2::new(x, top),
    };
    match r {
        GaRole::VT(kk, i) => horizontal(k(kk) - int(1) + off(i), off(i)),
        GaRole::MT(kk, i) => vertical(k(2 * kk) + off(i), off(i)),
        GaRole::Q(kk) => horizontal(k(2 * kk), ratio(-3, 4)),
        GaRole::MB(kk, i) => vertical(k(2 * kk) + ratio(3, 4) + off(i), ratio(-3, 4) + off(i)),
        GaRole::VB(kk, i) => horizontal(k(kk) + ratio(7, 4) + off(i), ratio(-7, 4) + off(i)),
    }
}

/// Axis-parallel unit segments with exact coordinates realizing G'(A).
pub fn realize_gprime_a_segments(inst: &OvInstance) -> Result<Construction> {
    let layout = GaLayout::new(&augment_all_ones_both_ends(inst)?);
    let shapes = layout
        .roles
        .iter()
        .map(|&r| Shape::Segment(segment(r, layout.n)))
        .collect();
    Ok(Construction {
        kind: ConstructionKind::AxparSegments,
        shapes,
        abstract_graph: layout.graph(true)?,
        threshold: threshold_for(ConstructionKind::AxparSegments, layout.d),
    })
}
