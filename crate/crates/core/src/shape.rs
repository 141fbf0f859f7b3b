//! Closed shapes and their pairwise intersection predicates.
//!
//! Every predicate treats shapes as closed sets: touching counts as
//! intersecting. Exact families (segments, squares, balls, cubes) decide on
//! [`Scalar`] / [`Root2Scalar`] arithmetic. Float families (unit segments and
//! triangles built from irrational coordinates) use `f64` with an absolute
//! contact tolerance of [`FLOAT_TOLERANCE`].

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Root2Scalar, Scalar};

/// Two float shapes closer than this are considered touching.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point2<T = Scalar> {
    pub x: T,
    pub y: T,
}

impl<T: Copy> Copy for Point2<T> {}

impl<T> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

impl<T: fmt::Display> fmt::Display for Point2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed segment with exact endpoints; `p == q` is a single point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment2 {
    pub p: Point2,
    pub q: Point2,
}

/// Closed segment with `f64` endpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatSegment {
    pub p: Point2<f64>,
    pub q: Point2<f64>,
}

/// Closed axis-parallel square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Square2 {
    pub center: Point2,
    pub side: Scalar,
}

impl Square2 {
    pub fn unit(center: Point2) -> Self {
        Square2 {
            center,
            side: Scalar::from_integer(1.into()),
        }
    }
}

/// Closed solid triangle with `f64` vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle2 {
    pub vertices: [Point2<f64>; 3],
}

/// Closed ball of diameter 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ball3 {
    pub center: [Scalar; 3],
}

/// Closed axis-parallel cube of side 1 in `center.len()` dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeD {
    pub center: Vec<Root2Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Segment(Segment2),
    FloatSegment(FloatSegment),
    Square(Square2),
    Triangle(Triangle2),
    Ball(Ball3),
    Cube(CubeD),
}

/// Family and dimension; two shapes are comparable iff their families match.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeFamily {
    Segment,
    FloatSegment,
    Square,
    Triangle,
    Ball,
    Cube(usize),
}

impl ShapeFamily {
    /// Token used in shape files.
    pub fn name(self) -> &'static str {
        match self {
            ShapeFamily::Segment => "segment",
            ShapeFamily::FloatSegment => "fsegment",
            ShapeFamily::Square => "square",
            ShapeFamily::Triangle => "triangle",
            ShapeFamily::Ball => "ball",
            ShapeFamily::Cube(_) => "cube",
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            ShapeFamily::Ball => 3,
            ShapeFamily::Cube(d) => d,
            _ => 2,
        }
    }
}

impl Shape {
    pub fn family(&self) -> ShapeFamily {
        match self {
            Shape::Segment(_) => ShapeFamily::Segment,
            Shape::FloatSegment(_) => ShapeFamily::FloatSegment,
            Shape::Square(_) => ShapeFamily::Square,
            Shape::Triangle(_) => ShapeFamily::Triangle,
            Shape::Ball(_) => ShapeFamily::Ball,
            Shape::Cube(c) => ShapeFamily::Cube(c.center.len()),
        }
    }

    /// Checks the per-family invariants.
    pub fn validate(&self) -> Result<()> {
        match self {
            Shape::Square(s) if !s.side.is_positive() => Err(Error::usage("square side must be positive")),
            Shape::Cube(c) if c.center.is_empty() => Err(Error::usage("cube dimension must be at least 1")),
            Shape::FloatSegment(s) if !(finite2(&s.p) && finite2(&s.q)) => {
                Err(Error::usage("segment coordinates must be finite"))
            }
            Shape::Triangle(t) if !t.vertices.iter().all(finite2) => {
                Err(Error::usage("triangle coordinates must be finite"))
            }
            _ => Ok(()),
        }
    }
}

fn finite2(p: &Point2<f64>) -> bool {
    p.x.is_finite() && p.y.is_finite()
}

/// True iff the two closed shapes share a point.
///
/// Errors when the shapes belong to different families or dimensions.
pub fn intersects(s1: &Shape, s2: &Shape) -> Result<bool> {
    Ok(match (s1, s2) {
        (Shape::Segment(a), Shape::Segment(b)) => segments_intersect(a, b),
        (Shape::FloatSegment(a), Shape::FloatSegment(b)) => float_segments_intersect(a, b, FLOAT_TOLERANCE),
        (Shape::Square(a), Shape::Square(b)) => squares_intersect(a, b),
        (Shape::Triangle(a), Shape::Triangle(b)) => triangles_intersect(a, b, FLOAT_TOLERANCE),
        (Shape::Ball(a), Shape::Ball(b)) => balls_intersect(a, b),
        (Shape::Cube(a), Shape::Cube(b)) if a.center.len() == b.center.len() => cubes_intersect(a, b),
        _ => {
            return Err(Error::usage(format!(
                "cannot intersect {:?} with {:?}",
                s1.family(),
                s2.family()
            )))
        }
    })
}

/// True iff `p` lies in the closed axis-parallel box of side `side` centered at `center`.
pub fn point_in_box(p: &Point2, center: &Point2, side: &Scalar) -> bool {
    within_half(&p.x, &center.x, side) && within_half(&p.y, &center.y, side)
}

// 2 |a - b| <= side
fn within_half(a: &Scalar, b: &Scalar, side: &Scalar) -> bool {
    let d = (a - b).abs();
    &d + &d <= *side
}

pub(crate) fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Ordering {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    lhs.cmp(&rhs)
}

fn in_bbox(a: &Point2, b: &Point2, c: &Point2) -> bool {
    let (xl, xh) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (yl, yh) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    *xl <= c.x && c.x <= *xh && *yl <= c.y && c.y <= *yh
}

pub fn segments_intersect(s: &Segment2, t: &Segment2) -> bool {
    let o1 = orientation(&s.p, &s.q, &t.p);
    let o2 = orientation(&s.p, &s.q, &t.q);
    let o3 = orientation(&t.p, &t.q, &s.p);
    let o4 = orientation(&t.p, &t.q, &s.q);
    if o1 != o2 && o3 != o4 {
        return true;
    }
    (o1.is_eq() && in_bbox(&s.p, &s.q, &t.p))
        || (o2.is_eq() && in_bbox(&s.p, &s.q, &t.q))
        || (o3.is_eq() && in_bbox(&t.p, &t.q, &s.p))
        || (o4.is_eq() && in_bbox(&t.p, &t.q, &s.q))
}

pub fn squares_intersect(a: &Square2, b: &Square2) -> bool {
    let reach = &a.side + &b.side;
    within_half(&a.center.x, &b.center.x, &reach) && within_half(&a.center.y, &b.center.y, &reach)
}

pub fn balls_intersect(a: &Ball3, b: &Ball3) -> bool {
    let mut sq = Scalar::zero();
    for (u, v) in a.center.iter().zip(&b.center) {
        let d = u - v;
        sq += &d * &d;
    }
    sq <= Scalar::from_integer(1.into())
}

pub fn cubes_intersect(a: &CubeD, b: &CubeD) -> bool {
    let one = Root2Scalar::rational(Scalar::from_integer(1.into()));
    a.center.iter().zip(&b.center).all(|(u, v)| (u - v).abs() <= one)
}

fn cross(o: &Point2<f64>, a: &Point2<f64>, b: &Point2<f64>) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

fn point_segment_distance(p: &Point2<f64>, a: &Point2<f64>, b: &Point2<f64>) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (a.x + t * dx, a.y + t * dy);
    ((p.x - cx).powi(2) + (p.y - cy).powi(2)).sqrt()
}

/// Proper crossing, or any endpoint within `tol` of the other segment.
pub fn float_segments_intersect(s: &FloatSegment, t: &FloatSegment, tol: f64) -> bool {
    let o1 = cross(&s.p, &s.q, &t.p);
    let o2 = cross(&s.p, &s.q, &t.q);
    let o3 = cross(&t.p, &t.q, &s.p);
    let o4 = cross(&t.p, &t.q, &s.q);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    point_segment_distance(&t.p, &s.p, &s.q) <= tol
        || point_segment_distance(&t.q, &s.p, &s.q) <= tol
        || point_segment_distance(&s.p, &t.p, &t.q) <= tol
        || point_segment_distance(&s.q, &t.p, &t.q) <= tol
}

fn point_in_triangle(p: &Point2<f64>, t: &Triangle2) -> bool {
    let [a, b, c] = &t.vertices;
    let d1 = cross(a, b, p);
    let d2 = cross(b, c, p);
    let d3 = cross(c, a, p);
    let has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    let has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    !(has_neg && has_pos)
}

impl Triangle2 {
    pub fn edges(&self) -> [FloatSegment; 3] {
        let [a, b, c] = self.vertices;
        [
            FloatSegment { p: a, q: b },
            FloatSegment { p: b, q: c },
            FloatSegment { p: c, q: a },
        ]
    }
}

pub fn triangles_intersect(s: &Triangle2, t: &Triangle2, tol: f64) -> bool {
    let se = s.edges();
    let te = t.edges();
    if se
        .iter()
        .any(|a| te.iter().any(|b| float_segments_intersect(a, b, tol)))
    {
        return true;
    }
    point_in_triangle(&s.vertices[0], t) || point_in_triangle(&t.vertices[0], s)
}
