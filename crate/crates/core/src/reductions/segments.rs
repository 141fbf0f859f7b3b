//! Diameter-3 constructions from two-set OV: segments, unit segments and
//! equilateral triangles.
//!
//! Vertex order in every construction: `abar 1..n`, `bbar 1..n`, `ell`, then
//! `e i k` (i-major) and `eprime j k` (j-major) for the one-entries of the
//! padded vectors.

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;
use crate::scalar::int;
use crate::shape::{FloatSegment, Point2, Segment2, Shape, Triangle2};

use super::ov::{pad_two_set, OvInstance, OvMode};
use super::{threshold_for, Construction, ConstructionKind};

/// Vertex roles, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Abar(usize),
    Bbar(usize),
    Ell,
    E(usize, usize),
    EPrime(usize, usize),
}

impl Role {
    fn label(self) -> String {
        match self {
            Role::Abar(i) => format!("abar {}", i + 1),
            Role::Bbar(j) => format!("bbar {}", j + 1),
            Role::Ell => "ell".to_string(),
            Role::E(i, k) => format!("e {} {}", i + 1, k + 1),
            Role::EPrime(j, k) => format!("eprime {} {}", j + 1, k + 1),
        }
    }
}

fn roles(padded: &OvInstance) -> Vec<Role> {
    let n = padded.n();
    let ones = |vs: &[Vec<bool>], f: fn(usize, usize) -> Role| -> Vec<Role> {
        vs.iter()
            .enumerate()
            .flat_map(|(i, v)| v.iter().enumerate().filter(|(_, &b)| b).map(move |(k, _)| f(i, k)))
            .collect()
    };
    (0..n)
        .map(Role::Abar)
        .chain((0..n).map(Role::Bbar))
        .chain([Role::Ell])
        .chain(ones(padded.a(), Role::E))
        .chain(ones(padded.b(), Role::EPrime))
        .collect()
}

fn labels(roles: &[Role]) -> Vec<String> {
    roles.iter().map(|r| r.label()).collect()
}

fn exact_shapes(padded: &OvInstance, roles: &[Role]) -> Vec<Shape> {
    let pt = |x: usize, y: i64| Point2::new(int(x as i64), int(y));
    let seg = |p: Point2, q: Point2| Shape::Segment(Segment2 { p, q });
    roles
        .iter()
        .map(|&r| match r {
            Role::Abar(i) => seg(pt(i + 1, 1), pt(i + 1, 1)),
            Role::Bbar(j) => seg(pt(j + 1, -1), pt(j + 1, -1)),
            Role::Ell => seg(pt(1, 0), pt(padded.d(), 0)),
            Role::E(i, k) => seg(pt(i + 1, 1), pt(k + 1, 0)),
            Role::EPrime(j, k) => seg(pt(j + 1, -1), pt(k + 1, 0)),
        })
        .collect()
}

/// Segments with exact rational endpoints; the abstract graph is their own
/// intersection graph.
pub fn ov_to_segments(inst: &OvInstance) -> Result<Construction> {
    let padded = pad_two_set(inst)?;
    let roles = roles(&padded);
    let shapes = exact_shapes(&padded, &roles);
    let abstract_graph = crate::graph::build_graph(&shapes)?.with_labels(labels(&roles))?;
    Ok(Construction {
        kind: ConstructionKind::Segments,
        shapes,
        abstract_graph,
        threshold: threshold_for(ConstructionKind::Segments, 0),
    })
}

/// `sqrt(1 - 1/m²)`: height of the lower endpoints of the `abar` segments.
pub fn unit_segment_height(m: usize) -> f64 {
    let m = m as f64;
    (1.0 - 1.0 / (m * m)).sqrt()
}

/// Grid parameter `m` of the unit-segment layout: x-spacing is `1/m²`.
///
/// `m = max(n, d, 5)` over the padded dimension `d`. `m >= d` keeps every
/// `e` segment shorter than 1 before extension. Below 5 the triangles of
/// neighbouring columns meet near the x-axis (`m = 4` already does).
pub fn unit_segment_scale(n: usize, padded_d: usize) -> usize {
    n.max(padded_d).max(5)
}

struct UnitLayout {
    spacing: f64,
    height: f64,
}

impl UnitLayout {
    /// The unit segment through `(i s, ±y*)` and `(k s, 0)` with equal
    /// overhang at both ends; `top` picks the upper or lower mirror image.
    fn e_segment(&self, i: usize, k: usize, top: bool) -> FloatSegment {
        let sign = if top { 1.0 } else { -1.0 };
        let p = Point2::new((i + 1) as f64 * self.spacing, sign * self.height);
        let w = Point2::new((k + 1) as f64 * self.spacing, 0.0);
        let (dx, dy) = (p.x - w.x, p.y - w.y);
        let len = dx.hypot(dy);
        let (ux, uy) = (dx / len, dy / len);
        let o = (1.0 - len) / 2.0;
        FloatSegment {
            p: Point2::new(p.x + o * ux, p.y + o * uy),
            q: Point2::new(w.x - o * ux, w.y - o * uy),
        }
    }

    fn segment(&self, r: Role) -> FloatSegment {
        let (s, y) = (self.spacing, self.height);
        let vertical = |x: f64, y0: f64| FloatSegment {
            p: Point2::new(x, y0),
            q: Point2::new(x, y0 + 1.0),
        };
        match r {
            Role::Abar(i) => vertical((i + 1) as f64 * s, y),
            Role::Bbar(j) => vertical((j + 1) as f64 * s, -y - 1.0),
            Role::Ell => FloatSegment {
                p: Point2::new(0.0, 0.0),
                q: Point2::new(1.0, 0.0),
            },
            Role::E(i, k) => self.e_segment(i, k, true),
            Role::EPrime(j, k) => self.e_segment(j, k, false),
        }
    }
}

fn unit_setup(inst: &OvInstance) -> Result<(OvInstance, Vec<Role>, UnitLayout, IntersectionGraph)> {
    inst.expect_mode(OvMode::TwoSet)?;
    if inst.n() < 2 {
        return Err(Error::usage("unit-length constructions need n >= 2"));
    }
    let padded = pad_two_set(inst)?;
    let roles = roles(&padded);
    let m = unit_segment_scale(padded.n(), padded.d()) as f64;
    let layout = UnitLayout {
        spacing: 1.0 / (m * m),
        height: unit_segment_height(m as usize),
    };
    let pattern = crate::graph::build_graph(&exact_shapes(&padded, &roles))?.with_labels(labels(&roles))?;
    Ok((padded, roles, layout, pattern))
}

/// Unit-length segments realizing the same graph as [`ov_to_segments`].
pub fn ov_to_unit_segments(inst: &OvInstance) -> Result<Construction> {
    let (_, roles, layout, pattern) = unit_setup(inst)?;
    let shapes = roles.iter().map(|&r| Shape::FloatSegment(layout.segment(r))).collect();
    Ok(Construction {
        kind: ConstructionKind::UnitSegments,
        shapes,
        abstract_graph: pattern,
        threshold: threshold_for(ConstructionKind::UnitSegments, 0),
    })
}

/// Equilateral triangle on `s`, apex on the side of negative x.
fn left_triangle(s: &FloatSegment) -> Triangle2 {
    let (dx, dy) = (s.q.x - s.p.x, s.q.y - s.p.y);
    let (mut nx, mut ny) = (-dy, dx);
    if nx > 0.0 {
        (nx, ny) = (dy, -dx);
    }
    let h = 3f64.sqrt() / 2.0;
    let apex = Point2::new((s.p.x + s.q.x) / 2.0 + h * nx, (s.p.y + s.q.y) / 2.0 + h * ny);
    Triangle2 {
        vertices: [s.p, s.q, apex],
    }
}

fn triangle_pattern(roles: &[Role]) -> Result<IntersectionGraph> {
    let group = |r: &Role| match r {
        Role::Abar(_) => 0,
        Role::E(..) => 1,
        Role::Ell => 2,
        Role::EPrime(..) => 3,
        Role::Bbar(_) => 4,
    };
    let adjacent = |a: Role, b: Role| match (a, b) {
        (Role::Abar(i), Role::E(i2, _)) | (Role::E(i2, _), Role::Abar(i)) => i == i2,
        (Role::Bbar(j), Role::EPrime(j2, _)) | (Role::EPrime(j2, _), Role::Bbar(j)) => j == j2,
        (Role::Ell, Role::E(..) | Role::EPrime(..)) | (Role::E(..) | Role::EPrime(..), Role::Ell) => true,
        (Role::E(_, k), Role::EPrime(_, k2)) | (Role::EPrime(_, k2), Role::E(_, k)) => k == k2,
        _ => group(&a) == group(&b) && a != Role::Ell,
    };
    let n = roles.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    IntersectionGraph::from_edges(
        n,
        edges.filter(|&(u, v)| adjacent(roles[u], roles[v])).collect::<Vec<_>>(),
    )?
    .with_labels(labels(roles))
}

/// Each unit segment except `ell` becomes the left-pointing equilateral
/// triangle on it; `ell` becomes the triangle with leftmost vertex at the
/// origin, symmetric about the x-axis.
///
/// Within each of the groups `abar`, `e`, `eprime`, `bbar` all triangles
/// overlap, so the intended graph has those four cliques; between groups it
/// keeps the incidences of the segment construction.
pub fn ov_to_triangles(inst: &OvInstance) -> Result<Construction> {
    let (_, roles, layout, _) = unit_setup(inst)?;
    let h = 3f64.sqrt() / 2.0;
    let shapes = roles
        .iter()
        .map(|&r| {
            Shape::Triangle(match r {
                Role::Ell => Triangle2 {
                    vertices: [Point2::new(0.0, 0.0), Point2::new(h, 0.5), Point2::new(h, -0.5)],
                },
                _ => left_triangle(&layout.segment(r)),
            })
        })
        .collect();
    Ok(Construction {
        kind: ConstructionKind::Triangles,
        shapes,
        abstract_graph: triangle_pattern(&roles)?,
        threshold: threshold_for(ConstructionKind::Triangles, 0),
    })
}
